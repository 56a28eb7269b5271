"""Exact rational arithmetic and measurable subsets of the half-open unit interval.

Rationals are ``fractions.Fraction`` throughout: arbitrary-precision, always
in lowest terms with positive denominator, and serialized as ``"num/den"``
(``"7/18"``, ``"-5/4"``; plain ``"2"`` when the denominator is 1).

An :class:`IntervalSet` is a finite union of half-open intervals
``[lo, hi) <= [0, 1)`` with rational endpoints, kept in canonical form
(sorted, pairwise disjoint, touching pieces merged), so structural equality
is semantic equality and every measure computation is exact.  No floating
point is used anywhere in this module.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse a ``"num/den"`` string (or plain integer) into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"num/den"``, or just ``"num"`` for integers."""
    return str(Fraction(value))


Interval = Tuple[Fraction, Fraction]


class IntervalSet:
    """Normalized union of half-open intervals ``[lo, hi)`` inside ``[0, 1)``.

    The constructor accepts any iterable of ``(lo, hi)`` pairs (overlapping,
    touching, unsorted) and normalizes.  Instances are immutable and hashable;
    all set operations return new instances.
    """

    __slots__ = ("_ivals",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        pieces = []
        for lo, hi in intervals:
            lo = Fraction(lo)
            hi = Fraction(hi)
            if not (ZERO <= lo < hi <= ONE):
                raise ValueError(f"interval [{lo}, {hi}) not inside [0, 1)")
            pieces.append((lo, hi))
        pieces.sort()
        merged: list[Interval] = []
        for lo, hi in pieces:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self._ivals = tuple(merged)

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls()

    @classmethod
    def full(cls) -> "IntervalSet":
        return cls([(ZERO, ONE)])

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self._ivals

    def measure(self) -> Fraction:
        """Total length, exact."""
        return sum((hi - lo for lo, hi in self._ivals), ZERO)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._ivals + other._ivals)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        a, b = self._ivals, other._ivals
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    def complement(self) -> "IntervalSet":
        """Complement within [0, 1)."""
        out = []
        prev = ZERO
        for lo, hi in self._ivals:
            if prev < lo:
                out.append((prev, lo))
            prev = hi
        if prev < ONE:
            out.append((prev, ONE))
        return IntervalSet(out)

    def __contains__(self, alpha) -> bool:
        alpha = Fraction(alpha)
        if not (ZERO <= alpha < ONE):
            return False
        idx = bisect_right(self._ivals, (alpha, ONE + 1)) - 1
        return idx >= 0 and alpha < self._ivals[idx][1]

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return self.union(other)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other)

    def __invert__(self) -> "IntervalSet":
        return self.complement()

    def __bool__(self) -> bool:
        return bool(self._ivals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._ivals)

    def __len__(self) -> int:
        return len(self._ivals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._ivals == other._ivals

    def __hash__(self) -> int:
        return hash(self._ivals)

    def __repr__(self) -> str:
        body = " u ".join(f"[{lo}, {hi})" for lo, hi in self._ivals)
        return f"IntervalSet({body or 'empty'})"
