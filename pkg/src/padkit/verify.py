"""The executable identity catalogue.

Every identity the package implements is re-checked here over
configurable ranges, producing structured pass/fail reports.  This is
the single entry point the CLI and CI use: failures are data (the suite
keeps going and reports all of them), and a fixed seed makes any random
sampling reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from . import core, decimation, folding, tables
from .errors import ConsistencyError

# Expected coefficient pairs (rho, sigma) for steps 1..8, and the rho row
# of the signed extension for steps -8..0.
EXPECTED_PAIRS = {
    1: (0, 1),
    2: (2, -1),
    3: (3, -2),
    4: (2, 3),
    5: (5, -4),
    6: (5, 2),
    7: (7, 1),
    8: (10, -5),
}
EXPECTED_SIGNED_RHO = {
    -8: 5,
    -7: -1,
    -6: -2,
    -5: 4,
    -4: -3,
    -3: 2,
    -2: 1,
    -1: -1,
    0: 3,
}


@dataclass(frozen=True)
class VerifyConfig:
    """Range bounds per identity; defaults match the acceptance suite."""

    seed: int = 0
    recurrence_range: tuple[int, int] = (-200, 400)
    step_identity_range: tuple[int, int] = (-50, 400)
    coeff_range: tuple[int, int] = (-100, 100)
    three_form_range: tuple[int, int] = (-200, 200)
    decimation_n_range: tuple[int, int] = (-50, 300)
    decimation_a_range: tuple[int, int] = (-12, 12)
    fold_max: int = 500
    certificate_samples: int = 500
    certificate_max_index: int = 5000
    equivalence_max: int = 2000
    equivalence_extra: tuple[int, ...] = (1000, 10**4, 10**5)
    column_sum_max: int = 200
    fourth_sum_max: int = 500


@dataclass(frozen=True)
class IdentityFailure:
    inputs: dict
    expected: object
    got: object


@dataclass
class IdentityReport:
    """One identity's outcome: how much was checked, and every failure."""

    identity: str
    range_desc: str
    checked: int = 0
    failures: list[IdentityFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, inputs: dict, expected, got) -> None:
        self.checked += 1
        if expected != got:
            self.failures.append(IdentityFailure(inputs, expected, got))


def _defining_recurrence(cfg: VerifyConfig) -> IdentityReport:
    lo, hi = cfg.recurrence_range
    rep = IdentityReport("defining-recurrence", f"n in [{lo}, {hi}], both directions")
    for n in range(lo, hi + 1):
        rep.check(
            {"n": n, "direction": "forward"},
            core.pad(n),
            core.pad(n - 2) + core.pad(n - 3),
        )
        rep.check(
            {"n": n, "direction": "backward"},
            core.pad(n - 3),
            core.pad(n) - core.pad(n - 2),
        )
    return rep


def _step_identity(name, gaps, weights, cfg):
    # P(n) = sum(w * P(n - g)) for the fixed gap/weight pattern
    lo, hi = cfg.step_identity_range
    rep = IdentityReport(name, f"n in [{lo}, {hi}]")
    for n in range(lo, hi + 1):
        combo = sum(w * core.pad(n - g) for g, w in zip(gaps, weights))
        rep.check({"n": n}, core.pad(n), combo)
    return rep


def _two_step(cfg: VerifyConfig) -> IdentityReport:
    return _step_identity("two-step-identity", (2, 4, 6), (2, -1, 1), cfg)


def _three_step(cfg: VerifyConfig) -> IdentityReport:
    return _step_identity("three-step-identity", (3, 6, 9), (3, -2, 1), cfg)


def _four_step(cfg: VerifyConfig) -> IdentityReport:
    return _step_identity("four-step-identity", (4, 8, 12), (2, 3, 1), cfg)


def _coeff_table(cfg: VerifyConfig) -> IdentityReport:
    rep = IdentityReport("coeff-table", "a in [1, 8]")
    for a, pair in EXPECTED_PAIRS.items():
        rep.check({"a": a}, pair, (decimation.rho(a), decimation.sigma(a)))
    return rep


def _coeff_signed_table(cfg: VerifyConfig) -> IdentityReport:
    rep = IdentityReport("coeff-signed-table", "a in [-8, 0]")
    for a, expected in EXPECTED_SIGNED_RHO.items():
        rep.check({"a": a}, expected, decimation.rho(a))
    return rep


def _rho_recurrence(cfg: VerifyConfig) -> IdentityReport:
    lo, hi = cfg.coeff_range
    rep = IdentityReport("rho-recurrence", f"a in [{lo}, {hi}]")
    for a in range(lo, hi + 1):
        rep.check(
            {"a": a},
            decimation.rho(a + 3),
            decimation.rho(a + 1) + decimation.rho(a),
        )
    return rep


def _sigma_recurrence(cfg: VerifyConfig) -> IdentityReport:
    # stated for small steps in the source; checked here over the full
    # range as an empirical extension
    lo, hi = cfg.coeff_range
    rep = IdentityReport("sigma-recurrence", f"a in [{lo}, {hi}]")
    for a in range(lo, hi + 1):
        rep.check(
            {"a": a},
            decimation.sigma(a + 3),
            decimation.sigma(a) - decimation.sigma(a + 2),
        )
    return rep


def _coeff_closed_form(cfg: VerifyConfig) -> IdentityReport:
    lo, hi = cfg.coeff_range
    rep = IdentityReport("coeff-closed-form", f"a in [{lo}, {hi}]")
    for a in range(lo, hi + 1):
        rep.check(
            {"a": a}, decimation.rho(a), 3 * core.pad(a - 2) - core.pad(a - 4)
        )
    return rep


def _sigma_mirror(cfg: VerifyConfig) -> IdentityReport:
    lo, hi = cfg.coeff_range
    rep = IdentityReport("sigma-mirror", f"a in [{lo}, {hi}]")
    for a in range(lo, hi + 1):
        rep.check({"a": a}, decimation.sigma(a), -decimation.rho(-a))
    return rep


def _general_decimation(cfg: VerifyConfig) -> IdentityReport:
    # tested for every integer step, including a <= 0 and a >= n, which
    # is wider than the stated a < n
    nlo, nhi = cfg.decimation_n_range
    alo, ahi = cfg.decimation_a_range
    rep = IdentityReport(
        "general-decimation",
        f"n in [{nlo}, {nhi}], a in [{alo}, {ahi}]",
    )
    for a in range(alo, ahi + 1):
        c = decimation.coeffs(a)
        for n in range(nlo, nhi + 1):
            combo = (
                c.rho * core.pad(n - a)
                + c.sigma * core.pad(n - 2 * a)
                + core.pad(n - 3 * a)
            )
            rep.check({"n": n, "a": a}, core.pad(n), combo)
    return rep


def _rho_three_forms(cfg: VerifyConfig) -> IdentityReport:
    lo, hi = cfg.three_form_range
    rep = IdentityReport("rho-three-forms", f"a in [{lo}, {hi}]")
    for a in range(lo, hi + 1):
        first = 3 * core.pad(a - 2) - core.pad(a - 4)
        second = core.pad(a) - core.pad(a - 1) + 2 * core.pad(a - 2)
        third = 2 * core.pad(a + 1) + core.pad(a) - 3 * core.pad(a - 1)
        rep.check({"a": a, "forms": "1=2"}, first, second)
        rep.check({"a": a, "forms": "1=3"}, first, third)
    return rep


def _fold_roundtrip(cfg: VerifyConfig) -> IdentityReport:
    rep = IdentityReport("fold-roundtrip", f"n in [0, {cfg.fold_max}]")
    for n in range(cfg.fold_max + 1):
        rep.check(
            {"n": n},
            (core.pad(n), core.pad(-n)),
            folding.recover(folding.folded(n)),
        )
    return rep


def _fold_parity(cfg: VerifyConfig) -> IdentityReport:
    rep = IdentityReport("fold-parity", f"n in [0, {cfg.fold_max}]")
    for n in range(cfg.fold_max + 1):
        pair = folding.folded(n)
        rep.check({"n": n}, 0, (pair.q + pair.r) % 2)
    return rep


def _fold_successor(cfg: VerifyConfig) -> IdentityReport:
    rep = IdentityReport("fold-successor", f"n in [3, {cfg.fold_max}]")
    for n in range(3, cfg.fold_max + 1):
        rep.check({"n": n}, core.pad(n + 1), folding.q_identity_check(n))
    return rep


def _certificate_soundness(cfg: VerifyConfig) -> IdentityReport:
    rng = random.Random(cfg.seed)
    rep = IdentityReport(
        "certificate-soundness",
        f"{cfg.certificate_samples} seeded samples, "
        f"1 <= a <= n <= {cfg.certificate_max_index}",
    )
    for _ in range(cfg.certificate_samples):
        n = rng.randint(1, cfg.certificate_max_index)
        a = rng.randint(1, n)
        expected = core.pad(n)
        try:
            got = decimation.eval_via_certificate(decimation.reduce_to_head(n, a))
        except ConsistencyError as exc:
            got = f"error: {exc}"
        rep.check({"n": n, "a": a}, expected, got)
    return rep


def _strategy_equivalence(cfg: VerifyConfig) -> IdentityReport:
    indices = list(range(cfg.equivalence_max + 1)) + list(cfg.equivalence_extra)
    rep = IdentityReport(
        "strategy-equivalence",
        f"n in [0, {cfg.equivalence_max}] plus {list(cfg.equivalence_extra)}",
    )
    for n in indices:
        expected = core.pad(n)
        rep.check(
            {"n": n, "strategy": "matrix"}, expected, decimation.matrix_pow_eval(n)
        )
        rep.check(
            {"n": n, "strategy": "trisect"}, expected, decimation.trisection_eval(n)
        )
    return rep


def _column_sums_3(cfg: VerifyConfig) -> IdentityReport:
    mmax = cfg.column_sum_max
    rep = IdentityReport("column-sum-step-3", f"m in [3, {mmax}], b in [1, 3]")
    for b in (1, 2, 3):
        sums = tables.sum_series(3, b, mmax).values
        for m in range(3, mmax + 1):
            stepped = tables.r3_step(b, (sums[m - 1], sums[m - 2], sums[m - 3]))
            rep.check({"b": b, "m": m}, tables.column_sum(3, b, m), stepped)
    return rep


def _column_sums_4(cfg: VerifyConfig) -> IdentityReport:
    mmax = cfg.column_sum_max
    rep = IdentityReport("column-sum-step-4", f"m in [3, {mmax}], b in [1, 4]")
    for b in (1, 2, 3, 4):
        sums = tables.sum_series(4, b, mmax).values
        for m in range(3, mmax + 1):
            stepped = tables.r4_step(b, (sums[m - 1], sums[m - 2], sums[m - 3]))
            rep.check({"b": b, "m": m}, tables.column_sum(4, b, m), stepped)
    return rep


def _every_fourth_sum(cfg: VerifyConfig) -> IdentityReport:
    mmax = cfg.fourth_sum_max
    rep = IdentityReport("every-fourth-sum", f"m in [0, {mmax}]")
    quads = core.stream(core.PADOVAN, 0, 4 * mmax)[::4]
    acc = 0
    for m in range(mmax + 1):
        acc += quads[m]
        try:
            got = tables.sum_4k_closed(m)
        except ConsistencyError as exc:
            got = f"error: {exc}"
        rep.check({"m": m}, acc, got)
    return rep


# Canonical execution and report order.
CATALOGUE = (
    _defining_recurrence,
    _two_step,
    _three_step,
    _four_step,
    _coeff_table,
    _coeff_signed_table,
    _rho_recurrence,
    _sigma_recurrence,
    _coeff_closed_form,
    _sigma_mirror,
    _general_decimation,
    _rho_three_forms,
    _fold_roundtrip,
    _fold_parity,
    _fold_successor,
    _certificate_soundness,
    _strategy_equivalence,
    _column_sums_3,
    _column_sums_4,
    _every_fourth_sum,
)


def run_suite(config: VerifyConfig | None = None) -> list[IdentityReport]:
    """Run every identity check; failures are reported, never raised."""
    cfg = config or VerifyConfig()
    return [check(cfg) for check in CATALOGUE]


def quick_config() -> VerifyConfig:
    """A reduced-range config for smoke tests and fast CLI runs."""
    return replace(
        VerifyConfig(),
        recurrence_range=(-50, 100),
        step_identity_range=(-30, 100),
        coeff_range=(-30, 30),
        three_form_range=(-50, 50),
        decimation_n_range=(-20, 80),
        decimation_a_range=(-6, 6),
        fold_max=100,
        certificate_samples=50,
        certificate_max_index=800,
        equivalence_max=300,
        equivalence_extra=(1000,),
        column_sum_max=50,
        fourth_sum_max=100,
    )
