"""Exact distribution of the random middle-third slice of an integer set.

For a finite set ``S`` of positive integers and uniform ``alpha`` in [0, 1),
the slice keeps exactly the elements ``x`` whose fractional part ``{alpha x}``
falls in [1/3, 2/3).  The slice is always sum-free.  Everything here is
computed in exact rational arithmetic:

* ``inclusion_region(x)`` is the set of alpha keeping ``x`` — a union of
  ``x`` intervals of length ``1/(3x)`` each, total measure exactly 1/3.
* ``level_distribution(S)`` sweeps the common breakpoint grid of all the
  inclusion regions.  Between consecutive breakpoints the membership pattern
  is constant, so accumulating segment lengths per inclusion count gives the
  exact law of the slice size.  Over the denominator ``3*lcm(S)`` every
  breakpoint is an integer, so the sweep sorts machine/big integers, never
  fractions.

The distribution is invariant under scaling ``S -> c*S`` (multiplying alpha
by c mod 1 preserves the uniform measure), so scans elsewhere only ever
enumerate primitive sets (gcd 1).  That invariance is a test target, not an
assumption: ``level_distribution`` computes on the set it is given.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Tuple

from .intervals import IntervalSet, format_rational

IntSet = Tuple[int, ...]

ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def intset(elements: Iterable[int]) -> IntSet:
    """Normalize to a strictly increasing tuple of positive integers."""
    out = tuple(sorted(set(elements)))
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"set elements must be positive integers, got {x!r}")
    return out


def primitive_form(S: Iterable[int]) -> IntSet:
    """Divide out the gcd, mapping S onto its scale-equivalence representative."""
    S = intset(S)
    if not S:
        return S
    g = math.gcd(*S)
    return tuple(x // g for x in S)


def primitive_sets(max_element: int, size: int) -> Iterator[IntSet]:
    """All gcd-1 subsets of {1..max_element} of the given size, lexicographic."""
    for combo in combinations(range(1, max_element + 1), size):
        if math.gcd(*combo) == 1:
            yield combo


@lru_cache(maxsize=None)
def inclusion_region(x: int) -> IntervalSet:
    """Alphas whose slice keeps ``x``: union over j of [(3j+1)/(3x), (3j+2)/(3x))."""
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"element must be a positive integer, got {x!r}")
    den = 3 * x
    return IntervalSet(
        (Fraction(3 * j + 1, den), Fraction(3 * j + 2, den)) for j in range(x)
    )


@dataclass(frozen=True)
class LevelDistribution:
    """Exact law of the slice size: probs[j] = P[slice of S has j elements]."""

    set: IntSet
    probs: Tuple[Fraction, ...]

    @property
    def p_empty(self) -> Fraction:
        return self.probs[0]

    def mean(self) -> Fraction:
        return sum((j * p for j, p in enumerate(self.probs)), Fraction(0))

    def as_json(self) -> dict:
        return {
            "set": list(self.set),
            "probs": [format_rational(p) for p in self.probs],
        }


@lru_cache(maxsize=1 << 16)
def _level_counts(S: IntSet) -> Tuple[Tuple[int, ...], int]:
    """Breakpoint sweep: integer segment lengths per inclusion count, over 3*lcm(S).

    Every endpoint of every inclusion region of S is a multiple of
    1/(3*lcm(S)); emitting (position, +1/-1) events on that grid and sweeping
    left to right accumulates, for each inclusion count, the total integer
    length of alpha-segments where exactly that many elements are kept.
    """
    k = len(S)
    if k == 0:
        return (1,), 1
    L = math.lcm(*S)
    D = 3 * L
    events = []
    for x in S:
        step = L // x
        for j in range(x):
            base = 3 * j * step
            events.append((base + step, 1))
            events.append((base + 2 * step, -1))
    events.sort()
    acc = [0] * (k + 1)
    prev = 0
    depth = 0
    for pos, delta in events:
        if pos != prev:
            acc[depth] += pos - prev
            prev = pos
        depth += delta
    acc[depth] += D - prev
    return tuple(acc), D


def level_distribution(S: Iterable[int]) -> LevelDistribution:
    """Exact distribution of the slice size of S.  Empty S gives the point mass (1,)."""
    S = intset(S)
    counts, den = _level_counts(S)
    return LevelDistribution(S, tuple(Fraction(c, den) for c in counts))


def joint_inclusion_prob(T: Iterable[int]) -> Fraction:
    """Probability that the slice keeps every element of T simultaneously."""
    T = intset(T)
    if not T:
        raise ValueError("joint inclusion needs a nonempty set")
    counts, den = _level_counts(T)
    return Fraction(counts[-1], den)


def sample_slice(S: Iterable[int], alpha) -> IntSet:
    """Evaluate the slice at a fixed rational alpha in [0, 1).  Always sum-free."""
    S = intset(S)
    alpha = Fraction(alpha)
    if not (0 <= alpha < 1):
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    return tuple(x for x in S if ONE_THIRD <= (alpha * x) % 1 < TWO_THIRDS)
