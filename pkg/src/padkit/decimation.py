"""Step coefficients, decimated evaluation, and reduction certificates.

For every integer step size a there are integer coefficients
(rho(a), sigma(a)) such that

    P(n) = rho(a) * P(n-a) + sigma(a) * P(n-2a) + P(n-3a)

for every index n.  rho has three equivalent closed forms in Padovan
numbers; sigma mirrors rho through sigma(a) = -rho(-a).  Iterating the
identity column-wise reduces any P(n), n = a*m + b with b in [1, a],
to an exact integer combination of the three head terms
P(2a+b), P(a+b), P(b) -- a "reduction certificate".

The module also provides the large-index evaluation strategies the
benchmark compares: plain iteration (from :mod:`padkit.core`), companion
matrix powers, and recursive trisection (step a = n // 3, so the tail
index lands on an initial term).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .errors import (
    CertificateMismatch,
    FormulaDisagreement,
    InvalidIndex,
    InvalidStep,
)

#: Primary closed form for rho; the two alternates are cross-checked on
#: every evaluation.
RHO_SOURCE = "3*P(a-2) - P(a-4)"


@dataclass(frozen=True)
class DecimationCoeffs:
    """The coefficient pair for step size a, with its closed-form source."""

    a: int
    rho: int
    sigma: int
    source: str = RHO_SOURCE


@dataclass(frozen=True)
class ReductionCertificate:
    """Exact coefficients expressing P(n) over the head terms of column b.

    n = a*m + b with b in [1, a] and m >= 0, and

        P(n) = c2 * P(2a+b) + c1 * P(a+b) + c0 * P(b)

    where (c2, c1, c0) = ``coeffs`` and the head indices are
    (2a+b, a+b, b).
    """

    n: int
    a: int
    b: int
    m: int
    coeffs: tuple[int, int, int]
    head_indices: tuple[int, int, int]


def _rho_checked(a: int) -> int:
    """rho(a) via all three closed forms, asserting their agreement."""
    pm4, _, pm2, pm1, p0, p1 = core.stream(core.PADOVAN, a - 4, a + 1)
    first = 3 * pm2 - pm4
    second = p0 - pm1 + 2 * pm2
    third = 2 * p1 + p0 - 3 * pm1
    if not first == second == third:
        raise FormulaDisagreement(
            f"rho({a}) closed forms disagree: {first}, {second}, {third}"
        )
    return first


def rho(a: int) -> int:
    """First step coefficient: rho(a) = 3*P(a-2) - P(a-4)."""
    return _rho_checked(a)


def sigma(a: int) -> int:
    """Second step coefficient: sigma(a) = -rho(-a)."""
    return -_rho_checked(-a)


def coeffs(a: int) -> DecimationCoeffs:
    """Both step coefficients for step size a."""
    return DecimationCoeffs(a, _rho_checked(a), -_rho_checked(-a))


def decimated_eval(n: int, a: int) -> int:
    """P(n) through the a-step identity.

    Always equals ``pad(n)``; the identity holds empirically for every
    integer a, including a <= 0 and a >= n.
    """
    c = coeffs(a)
    return (
        c.rho * core.pad(n - a)
        + c.sigma * core.pad(n - 2 * a)
        + core.pad(n - 3 * a)
    )


def coeff_step(
    state: tuple[int, int, int], c: DecimationCoeffs
) -> tuple[int, int, int]:
    """One elimination step of the coefficient-evolution map.

    If P(n) = c2*P(a(t+2)+b) + c1*P(a(t+1)+b) + c0*P(at+b), rewriting the
    highest term through the a-step identity shifts the whole combination
    one row down the column:

        (c2, c1, c0) -> (c2*rho + c1, c2*sigma + c0, c2).
    """
    c2, c1, c0 = state
    return (c2 * c.rho + c1, c2 * c.sigma + c0, c2)


def reduce_to_head(n: int, a: int) -> ReductionCertificate:
    """Reduce P(n) to the first three terms of its column.

    Writes n = a*m + b with b = ((n-1) mod a) + 1 in [1, a], then
    eliminates the highest non-head row repeatedly until only the head
    terms P(2a+b), P(a+b), P(b) remain.  For m <= 2 the value already is
    a head term and the certificate is the matching unit vector.  The
    certificate is verified against ``pad(n)`` before being returned.
    """
    if a < 1:
        raise InvalidStep(f"step must be >= 1, got {a}")
    if n < 1:
        raise InvalidIndex(f"index must be >= 1, got {n}")
    b = (n - 1) % a + 1
    m = (n - b) // a
    if m <= 2:
        unit = [0, 0, 0]
        unit[2 - m] = 1
        state = (unit[0], unit[1], unit[2])
    else:
        c = coeffs(a)
        state = (c.rho, c.sigma, 1)
        for _ in range(m - 3):
            state = coeff_step(state, c)
    cert = ReductionCertificate(
        n=n,
        a=a,
        b=b,
        m=m,
        coeffs=state,
        head_indices=(2 * a + b, a + b, b),
    )
    value = eval_via_certificate(cert)
    expected = core.pad(n)
    if value != expected:
        raise CertificateMismatch(
            f"certificate for (n={n}, a={a}) evaluates to {value}, "
            f"expected {expected}"
        )
    return cert


def eval_via_certificate(cert: ReductionCertificate) -> int:
    """Evaluate a certificate's linear combination of head terms."""
    c2, c1, c0 = cert.coeffs
    h2, h1, h0 = cert.head_indices
    return c2 * core.pad(h2) + c1 * core.pad(h1) + c0 * core.pad(h0)


def trisection_shortcut(n: int) -> int:
    """P(n) in one decimation step with a = n // 3.

    The tail index n - 3a is then 0, 1 or 2, i.e. an initial term equal
    to 1, which gives

        P(3a)   = rho(a) * P(2a)   + sigma(a) * P(a)    + 1
        P(3a+r) = rho(a) * P(fst)  + sigma(a) * P(snd)  + 1,  r in {1, 2}

    with fst = floor(2n/3) + 1 and snd = floor(n/3 + 1/2) + 1.
    """
    if n < 3:
        raise InvalidIndex(f"index must be >= 3, got {n}")
    a, r = divmod(n, 3)
    c = coeffs(a)
    if r == 0:
        return c.rho * core.pad(2 * a) + c.sigma * core.pad(a) + 1
    return (
        c.rho * core.pad((2 * n) // 3 + 1)
        + c.sigma * core.pad((2 * n + 3) // 6 + 1)
        + 1
    )


# Companion matrix of p(k) = p(k-2) + p(k-3) acting on the state column
# (p(k), p(k+1), p(k+2)), and its exact integer inverse (determinant 1).
_STEP = ((0, 1, 0), (0, 0, 1), (1, 1, 0))
_STEP_INV = ((-1, 0, 1), (1, 0, 0), (0, 1, 0))
_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _mat_pow(m, e: int):
    acc = _IDENTITY
    while e:
        if e & 1:
            acc = _mat_mul(acc, m)
        m = _mat_mul(m, m)
        e >>= 1
    return acc


def matrix_pow_eval(n: int) -> int:
    """P(n) by exponentiation-by-squaring of the companion matrix.

    O(log |n|) exact 3x3 integer matrix products; negative n uses the
    integer inverse step.  Independent of the iterative path, so it
    serves as an oracle and benchmark competitor.
    """
    core.check_index(n)
    m = _mat_pow(_STEP if n >= 0 else _STEP_INV, abs(n))
    # state starts at (P(0), P(1), P(2)) = (1, 1, 1)
    return m[0][0] + m[0][1] + m[0][2]


def trisection_eval(n: int, threshold: int = 64) -> int:
    """P(n) by recursive decimation with a = k // 3 at every level.

    Each level rewrites P(k) over indices near 2k/3 and k/3 (and their
    negatives, for the mirrored coefficients), memoizing every value
    requested during this one call.  Below ``threshold`` the recursion
    falls back to plain iteration.
    """
    if threshold < 13:
        # sub-indices reach 2|k|/3 + O(1); shrinkage needs |k| > 12
        raise ValueError("threshold must be >= 13")
    core.check_index(n)
    memo: dict[int, int] = {}

    def value(k: int) -> int:
        v = memo.get(k)
        if v is None:
            if abs(k) < threshold:
                v = core.pad(k)
            else:
                a = k // 3
                r = 3 * value(a - 2) - value(a - 4)
                s = -(3 * value(-a - 2) - value(-a - 4))
                v = r * value(k - a) + s * value(k - 2 * a) + value(k - 3 * a)
            memo[k] = v
        return v

    return value(n)


def parse_strategy(token: str) -> tuple[str, int | None]:
    """Parse a strategy token: iter | matrix | trisect | decimated:<a>."""
    if token in ("iter", "iterative"):
        return "iter", None
    if token in ("matrix", "matrix-power"):
        return "matrix", None
    if token in ("trisect", "trisection"):
        return "trisect", None
    if token.startswith("decimated:"):
        try:
            return "decimated", int(token.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad decimation step in strategy {token!r}") from None
    raise ValueError(f"unknown strategy {token!r}")


def evaluate(n: int, strategy: str = "iter") -> int:
    """P(n) via the named strategy; all strategies agree exactly."""
    kind, step = parse_strategy(strategy)
    if kind == "iter":
        return core.pad(n)
    if kind == "matrix":
        return matrix_pow_eval(n)
    if kind == "trisect":
        return trisection_eval(n)
    assert step is not None
    return decimated_eval(n, step)
