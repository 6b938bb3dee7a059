"""Wall-clock comparison of the evaluation strategies.

Correctness gates timing: for each ladder index the strategies' values
are computed once and their digests compared before any clock starts.
Timed runs are strictly sequential on one thread.  Medians are the
headline numbers (robust to scheduler noise); minima are also kept.
No asymptotic claim is asserted -- the report is descriptive, and a
non-monotone median only produces a warning.
"""

from __future__ import annotations

import platform
from dataclasses import dataclass
from statistics import median
from time import perf_counter

from . import core
from .decimation import evaluate
from .errors import DigestMismatch, InvalidRange

#: Default competitors; the fixed decimation step 8 is the largest
#: tabulated coefficient row.
DEFAULT_STRATEGIES = ("iter", "matrix", "trisect", "decimated:8")
DEFAULT_LADDER = (10**3, 10**4, 10**5)


@dataclass(frozen=True)
class ValueDigest:
    """Compact stand-in for a huge value: digit count plus low 8 digits."""

    digits: int
    low: str


def digest_of(value: int) -> ValueDigest:
    text = core.decimal_str(abs(value))
    return ValueDigest(len(text), text[-8:])


@dataclass(frozen=True)
class BenchEntry:
    strategy: str
    n: int
    reps: int
    median_seconds: float
    min_seconds: float
    digest: ValueDigest


@dataclass(frozen=True)
class BenchReport:
    entries: tuple[BenchEntry, ...]
    environment: str
    warnings: tuple[str, ...]


def run_bench(
    ladder: tuple[int, ...] | list[int],
    reps: int = 5,
    strategies: tuple[str, ...] = DEFAULT_STRATEGIES,
) -> BenchReport:
    """Time every strategy at every ladder index.

    Digest agreement across strategies is asserted per index before
    timing; a mismatch aborts the whole run.
    """
    if reps < 3:
        raise InvalidRange(f"need reps >= 3, got {reps}")
    if not ladder:
        raise InvalidRange("empty ladder")
    for n in ladder:
        core.check_index(n)

    entries = []
    for n in ladder:
        digests = {}
        for strategy in strategies:
            digests[strategy] = digest_of(evaluate(n, strategy))
        baseline = digests[strategies[0]]
        for strategy, digest in digests.items():
            if digest != baseline:
                raise DigestMismatch(
                    f"strategy {strategy!r} disagrees at n={n}: "
                    f"{digest} vs {baseline}"
                )
        for strategy in strategies:
            times = []
            for _ in range(reps):
                start = perf_counter()
                evaluate(n, strategy)
                times.append(perf_counter() - start)
            entries.append(
                BenchEntry(
                    strategy=strategy,
                    n=n,
                    reps=reps,
                    median_seconds=median(times),
                    min_seconds=min(times),
                    digest=digests[strategy],
                )
            )

    environment = "CPython {} on {} ({})".format(
        platform.python_version(), platform.system(), platform.machine()
    )
    return BenchReport(tuple(entries), environment, _monotone_warnings(entries))


def _monotone_warnings(entries) -> tuple[str, ...]:
    # timing noise is real: a decreasing median is reported, not failed
    warnings = []
    by_strategy: dict[str, list[BenchEntry]] = {}
    for e in entries:
        by_strategy.setdefault(e.strategy, []).append(e)
    for strategy, group in by_strategy.items():
        group = sorted(group, key=lambda e: e.n)
        for prev, cur in zip(group, group[1:]):
            if cur.median_seconds < prev.median_seconds:
                warnings.append(
                    f"{strategy}: median time decreased from n={prev.n} "
                    f"to n={cur.n} ({prev.median_seconds:.3e} -> "
                    f"{cur.median_seconds:.3e})"
                )
    return tuple(warnings)
