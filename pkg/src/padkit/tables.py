"""Column tables of Padovan numbers and column partial sums.

An a-columns table lists all Padovan numbers from P(1) row by row, so
row i, column b holds P(a*i + b).  The partial sum of the first m+1
entries of column b satisfies closed recurrences for a = 3 and a = 4;
sums over other columns use direct summation (no constants are guessed
for general a).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .errors import (
    DivisibilityViolation,
    InvalidColumn,
    InvalidDimensions,
    InvalidIndex,
)


@dataclass(frozen=True)
class PadovanTable:
    """Row-major grid with entry(i, b) = P(a*i + b), b in [1, a]."""

    a: int
    rows: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, row: int, col: int) -> int:
        if not 0 <= row < self.rows:
            raise InvalidDimensions(f"row {row} outside [0, {self.rows - 1}]")
        if not 1 <= col <= self.a:
            raise InvalidColumn(f"column {col} outside [1, {self.a}]")
        return self.entries[row][col - 1]


@dataclass(frozen=True)
class SumSeries:
    """Partial sums of column b: values[m] = sum(P(a*k + b) for k in 0..m)."""

    a: int
    b: int
    values: tuple[int, ...]


def build_table(a: int, rows: int) -> PadovanTable:
    """The a-columns table with the given number of rows."""
    if a < 1 or rows < 1:
        raise InvalidDimensions(f"need a >= 1 and rows >= 1, got ({a}, {rows})")
    flat = core.stream(core.PADOVAN, 1, a * rows)
    grid = tuple(tuple(flat[i * a : (i + 1) * a]) for i in range(rows))
    return PadovanTable(a, rows, grid)


def _check_column(a: int, b: int) -> None:
    if not 1 <= b <= a:
        raise InvalidColumn(f"column {b} outside [1, {a}]")


def sum_series(a: int, b: int, m: int) -> SumSeries:
    """Partial sums of column b up to row m, by direct summation."""
    _check_column(a, b)
    if m < 0:
        raise InvalidIndex(f"row count must be >= 0, got {m}")
    column = core.stream(core.PADOVAN, b, a * m + b)[::a]
    values = []
    acc = 0
    for v in column:
        acc += v
        values.append(acc)
    return SumSeries(a, b, tuple(values))


def column_sum(a: int, b: int, m: int) -> int:
    """sum(P(a*k + b) for k in 0..m), by direct summation."""
    return sum_series(a, b, m).values[-1]


def r3_step(b: int, history: tuple[int, int, int]) -> int:
    """Next 3-columns partial sum from the previous three.

    For column b of the 3-columns table and m >= 3,
    r(m) = 3*r(m-1) - 2*r(m-2) + r(m-3) + 1.
    """
    _check_column(3, b)
    h1, h2, h3 = history
    return 3 * h1 - 2 * h2 + h3 + 1


_R4_CONSTANTS = {1: 2, 2: 4, 3: 3, 4: 6}


def r4_step(b: int, history: tuple[int, int, int]) -> int:
    """Next 4-columns partial sum from the previous three.

    For column b of the 4-columns table and m >= 3,
    r(m) = 2*r(m-1) + 3*r(m-2) + r(m-3) + c(b), with additive constants
    (2, 4, 3, 6) for b = 1..4.
    """
    _check_column(4, b)
    h1, h2, h3 = history
    return 2 * h1 + 3 * h2 + h3 + _R4_CONSTANTS[b]


def sum_4k_closed(m: int) -> int:
    """sum(P(4k) for k in 0..m) in closed form.

    Equals (P(4m+4) + 4*P(4m) + P(4m-4) - 1) / 5; the numerator is
    always divisible by 5, which is asserted before dividing.  Note the
    summands start at P(0), so this is not a column sum (columns start
    at b >= 1).
    """
    if m < 0:
        raise InvalidIndex(f"need m >= 0, got {m}")
    numerator = (
        core.pad(4 * (m + 1)) + 4 * core.pad(4 * m) + core.pad(4 * (m - 1)) - 1
    )
    q, r = divmod(numerator, 5)
    if r:
        raise DivisibilityViolation(
            f"P(4m+4) + 4*P(4m) + P(4m-4) - 1 not divisible by 5 at m={m}"
        )
    return q
