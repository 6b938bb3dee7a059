"""Folded sequences Q(n) = P(n) + P(-n) and R(n) = P(n) - P(-n).

Q is symmetric and R antisymmetric under n -> -n, so both are defined
for n >= 0 only; negative arguments are rejected rather than silently
folded.  Q + R and Q - R are always even, giving exact recovery of
(P(n), P(-n)) from a pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .errors import InvalidIndex, ParityViolation


@dataclass(frozen=True)
class FoldedPair:
    """(Q(n), R(n)) at a nonnegative index."""

    n: int
    q: int
    r: int


def folded(n: int) -> FoldedPair:
    """The folded pair at n >= 0."""
    if n < 0:
        raise InvalidIndex(f"folded pairs are defined for n >= 0, got {n}")
    forward = core.pad(n)
    backward = core.pad(-n)
    return FoldedPair(n, forward + backward, forward - backward)


def recover(pair: FoldedPair) -> tuple[int, int]:
    """(P(n), P(-n)) from a folded pair.

    Genuine pairs have q + r and q - r even; an odd sum means the pair
    was corrupted.
    """
    if (pair.q + pair.r) % 2:
        raise ParityViolation(f"q + r = {pair.q + pair.r} is odd")
    return (pair.q + pair.r) // 2, (pair.q - pair.r) // 2


def q_identity_check(n: int) -> int:
    """Q(n) + Q(n-1) - Q(n-3); equals P(n+1) for every n >= 3."""
    if n < 3:
        raise InvalidIndex(f"need n >= 3, got {n}")
    return folded(n).q + folded(n - 1).q - folded(n - 3).q
