"""Bidirectional, exact evaluation of Padovan and Padovan-type sequences.

The canonical Padovan sequence used throughout this package is

    P(n) = P(n-2) + P(n-3),   P(0) = P(1) = P(2) = 1,

extended to negative indices by running the recurrence backwards,
P(n) = P(n+3) - P(n+1).  A Padovan-type sequence obeys the same
recurrence with arbitrary initial terms anchored at an explicit base
index.  All values are Python ints, so every result is exact at any
magnitude; the only guard is a configurable index cap that protects
against runaway memory from absurd indices.

Evaluation here is plain windowed iteration: O(|n|) big-integer
additions, no caching.  Faster strategies live in :mod:`padkit.decimation`.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import IndexCapExceeded, InvalidRange

DEFAULT_INDEX_CAP = 10**7

_index_cap = DEFAULT_INDEX_CAP


def index_cap() -> int:
    """Current cap on |n| for all sequence evaluations."""
    return _index_cap


def set_index_cap(value: int) -> None:
    """Replace the index cap (must be a positive int)."""
    global _index_cap
    if value < 1:
        raise ValueError("index cap must be positive")
    _index_cap = value


def check_index(n: int) -> None:
    """Raise IndexCapExceeded if |n| is past the configured cap."""
    if abs(n) > _index_cap:
        raise IndexCapExceeded(f"|{n}| exceeds index cap {_index_cap}")


def decimal_str(value: int) -> str:
    """``str(value)``, lifting the interpreter's int-to-str digit guard.

    Sequence values at large indices exceed CPython's default 4300-digit
    conversion limit; output formatting must not.  Raises the limit just
    far enough, never lowers it.
    """
    if hasattr(sys, "get_int_max_str_digits"):
        # digits <= bit_length * log10(2) + 1, padded for sign and slack
        need = int(value.bit_length() * 0.30103) + 4
        limit = sys.get_int_max_str_digits()
        if 0 < limit < need:
            sys.set_int_max_str_digits(need)
    return str(value)


@dataclass(frozen=True)
class PadovanType:
    """A sequence obeying p(n) = p(n-2) + p(n-3) with arbitrary initials.

    ``initials`` are the three consecutive terms at indices
    ``base, base+1, base+2``.
    """

    initials: tuple[int, int, int]
    base: int = 0
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.initials) != 3:
            raise ValueError("initials must be three consecutive terms")


#: The canonical Padovan sequence, P(0) = P(1) = P(2) = 1.
PADOVAN = PadovanType((1, 1, 1), base=0, label="padovan")


@dataclass(frozen=True)
class SequenceWindow:
    """Three consecutive terms (p(n), p(n+1), p(n+2)) anchored at n.

    Stepping is exact in both directions: ``advance`` then ``retreat``
    returns the identical window.
    """

    base: int
    terms: tuple[int, int, int]

    def advance(self) -> "SequenceWindow":
        a, b, c = self.terms
        # p(n+3) = p(n+1) + p(n)
        return SequenceWindow(self.base + 1, (b, c, b + a))

    def retreat(self) -> "SequenceWindow":
        a, b, c = self.terms
        # p(n-1) = p(n+2) - p(n)
        return SequenceWindow(self.base - 1, (c - a, a, b))


def window_of(seq: PadovanType) -> SequenceWindow:
    """The initial window of a Padovan-type sequence."""
    return SequenceWindow(seq.base, seq.initials)


def pad(n: int) -> int:
    """The n-th Padovan number, for any signed n within the index cap."""
    check_index(n)
    a, b, c = 1, 1, 1
    if n >= 0:
        for _ in range(n):
            a, b, c = b, c, b + a
    else:
        for _ in range(-n):
            a, b, c = c - a, a, b
    return a


def pad_type_value(seq: PadovanType, n: int) -> int:
    """Value of a Padovan-type sequence at index n (either direction)."""
    check_index(n)
    check_index(seq.base)
    a, b, c = seq.initials
    delta = n - seq.base
    if delta >= 0:
        for _ in range(delta):
            a, b, c = b, c, b + a
    else:
        for _ in range(-delta):
            a, b, c = c - a, a, b
    return a


def stream(seq: PadovanType, start: int, stop: int) -> list[int]:
    """Values of ``seq`` at the consecutive indices start..stop inclusive."""
    if start > stop:
        raise InvalidRange(f"empty range {start}..{stop}")
    check_index(start)
    check_index(stop)
    check_index(seq.base)
    a, b, c = seq.initials
    if start >= seq.base:
        for _ in range(start - seq.base):
            a, b, c = b, c, b + a
    else:
        for _ in range(seq.base - start):
            a, b, c = c - a, a, b
    out = []
    for _ in range(stop - start + 1):
        out.append(a)
        a, b, c = b, c, b + a
    return out
