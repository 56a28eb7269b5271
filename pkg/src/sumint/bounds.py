"""Closed-form pair arithmetic and exhaustive scan verifiers.

The probability that a slice keeps both of a pair {x, y} deviates from the
independent value 1/9 by (2/9) * E(x, y), where

    E(x, y) = chi(x*y) * gcd(x, y)^2 / (x*y)

and chi is the multiplicative character mod 3 (chi(0) = 0, chi(1) = 1,
chi(2) = -1).  E is symmetric and invariant under dividing out gcd(x, y).

The scan functions sweep all primitive sets within a finite range and check
a stated inequality exactly, reporting the extremal value, every set that
attains it, and every violator (none expected).  Scanning primitive sets
only is justified by scale invariance of the slice distribution.  Scans are
data-parallel: chunk results merge associatively and witnesses are sorted,
so output is independent of the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .intervals import format_rational
from .parallel import run_chunked
from .slices import IntSet, joint_inclusion_prob, level_distribution, primitive_sets

QUARTER = Fraction(1, 4)
NINE_SIXTEENTHS = Fraction(9, 16)
HALF = Fraction(1, 2)
ELEVEN_24 = Fraction(11, 24)


def chi(k: int) -> int:
    """Multiplicative character mod 3: 0, 1, -1 on residues 0, 1, 2."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"chi needs a nonnegative integer, got {k!r}")
    return (0, 1, -1)[k % 3]


def error_fn(x: int, y: int) -> Fraction:
    """Pair correlation error E(x, y) = chi(ab) / (ab) for the reduced pair.

    Dividing out g = gcd(x, y) first (a = x/g, b = y/g) is what makes E
    gcd-invariant and the two-point formula exact: evaluating the character
    at the raw product x*y would wrongly vanish whenever 3 divides g, and
    the interval-sweep measure refutes that variant at pairs like (3, 6).
    """
    if not (isinstance(x, int) and isinstance(y, int)) or x < 1 or y < 1:
        raise ValueError("error_fn needs positive integers")
    if x == y:
        raise ValueError("error_fn is only defined for distinct elements")
    g = math.gcd(x, y)
    a, b = x // g, y // g
    return Fraction(chi(a * b), a * b)


def two_point_prob(x: int, y: int) -> Fraction:
    """P[slice keeps both x and y] = 1/9 + (2/9) E(x, y)."""
    return Fraction(1, 9) + Fraction(2, 9) * error_fn(x, y)


def triple_error_sum(x: int, y: int, z: int) -> Fraction:
    """E(x, y) + E(y, z) + E(x, z) for a triple of distinct elements."""
    return error_fn(x, y) + error_fn(y, z) + error_fn(x, z)


def bohr_lower_bound(k: int, t: int) -> Fraction:
    """Lower bound 2 / (t^k - 2^k + 2) on the empty-slice probability of a k-set."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("set size must be a positive integer")
    if not isinstance(t, int) or t < 2:
        raise ValueError("resolution t must be an integer >= 2")
    return Fraction(2, t**k - 2**k + 2)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one exhaustive scan: the inequality holds iff no violations."""

    params: Dict[str, int]
    extremum: Optional[Fraction]
    witnesses: Tuple[IntSet, ...]
    violations: Tuple[IntSet, ...]
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.violations

    def as_json(self) -> dict:
        return {
            "status": "holds" if self.holds else "violated",
            "params": dict(self.params),
            "extremum": None if self.extremum is None else format_rational(self.extremum),
            "witnesses": [list(w) for w in self.witnesses],
            "violations": [list(v) for v in self.violations],
            "details": _jsonify(self.details),
        }


def _jsonify(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonify(v) for v in items]
    return value


def _merge_extremum(parts, prefer):
    """Combine per-chunk (value, witnesses) extrema; order-independent."""
    best = None
    wits: List[IntSet] = []
    for value, chunk_wits in parts:
        if value is None:
            continue
        if best is None or prefer(value, best):
            best, wits = value, list(chunk_wits)
        elif value == best:
            wits.extend(chunk_wits)
    return best, tuple(sorted(wits))


def _two_point_chunk(pairs: Sequence[IntSet]):
    bad = [p for p in pairs if two_point_prob(*p) != joint_inclusion_prob(p)]
    return len(pairs), bad


def verify_two_point_formula(max_element: int, jobs: int = 1) -> ScanReport:
    """Check the closed form against the interval-sweep measure on every pair <= M."""
    if max_element < 2:
        raise ValueError("need max_element >= 2")
    pairs = list(combinations(range(1, max_element + 1), 2))
    parts = run_chunked(_two_point_chunk, pairs, jobs)
    checked = sum(n for n, _ in parts)
    violations = tuple(sorted(v for _, bad in parts for v in bad))
    return ScanReport(
        params={"max_element": max_element},
        extremum=None,
        witnesses=(),
        violations=violations,
        details={"pairs_checked": checked},
    )


def _obs_chunk(pairs: Sequence[IntSet]):
    best = None
    wits: List[IntSet] = []
    viols: List[IntSet] = []
    positives, negatives = set(), set()
    for pair in pairs:
        e = error_fn(*pair)
        if best is None or e > best:
            best, wits = e, [pair]
        elif e == best:
            wits.append(pair)
        if e > QUARTER:
            viols.append(pair)
        if e > 0:
            positives.add(e)
            if e.numerator != 1 or e.denominator % 3 != 1:
                viols.append(pair)
        elif e < 0:
            negatives.add(e)
    return len(pairs), best, wits, viols, positives, negatives


def observation_checks(max_element: int, jobs: int = 1) -> ScanReport:
    """Assert E <= 1/4 and that every positive E is 1/(3k+1); report attained values."""
    if max_element < 2:
        raise ValueError("need max_element >= 2")
    pairs = list(combinations(range(1, max_element + 1), 2))
    parts = run_chunked(_obs_chunk, pairs, jobs)
    best, wits = _merge_extremum([(p[1], p[2]) for p in parts], prefer=lambda a, b: a > b)
    violations = tuple(sorted(v for p in parts for v in p[3]))
    positives = sorted((e for p in parts for e in p[4]), reverse=True)
    negatives = sorted(e for p in parts for e in p[5])
    return ScanReport(
        params={"max_element": max_element},
        extremum=best,
        witnesses=wits,
        violations=violations,
        details={
            "pairs_checked": sum(p[0] for p in parts),
            "positive_values": positives,
            "negative_values": negatives,
        },
    )


def _triple_chunk(triples: Sequence[IntSet]):
    best = None
    wits: List[IntSet] = []
    viols: List[IntSet] = []
    for t in triples:
        s = triple_error_sum(*t)
        if best is None or s > best:
            best, wits = s, [t]
        elif s == best:
            wits.append(t)
        if s > NINE_SIXTEENTHS:
            viols.append(t)
    return len(triples), best, wits, viols


def scan_triple_bound(max_element: int, jobs: int = 1) -> ScanReport:
    """Maximize E(x,y)+E(y,z)+E(x,z) over primitive triples <= M; assert <= 9/16."""
    if max_element < 3:
        raise ValueError("need max_element >= 3")
    triples = list(primitive_sets(max_element, 3))
    parts = run_chunked(_triple_chunk, triples, jobs)
    best, wits = _merge_extremum([(p[1], p[2]) for p in parts], prefer=lambda a, b: a > b)
    violations = tuple(sorted(v for p in parts for v in p[3]))
    return ScanReport(
        params={"max_element": max_element},
        extremum=best,
        witnesses=wits,
        violations=violations,
        details={"triples_checked": sum(p[0] for p in parts), "bound": NINE_SIXTEENTHS},
    )


def _pzero_chunk(sets: Sequence[IntSet], threshold: Optional[Fraction]):
    best = None
    wits: List[IntSet] = []
    viols: List[IntSet] = []
    for S in sets:
        p0 = level_distribution(S).p_empty
        if best is None or p0 > best:
            best, wits = p0, [S]
        elif p0 == best:
            wits.append(S)
        if threshold is not None and p0 > threshold:
            viols.append(S)
    return len(sets), best, wits, viols


def scan_pzero_bounds(max_element: int, size: int, jobs: int = 1) -> ScanReport:
    """Maximize the empty-slice probability over primitive size-K sets <= M.

    Asserts the known ceilings: 1/2 for pairs, 11/24 for triples; larger
    sizes are reported without an asserted bound.
    """
    if size < 2 or max_element < size:
        raise ValueError("need max_element >= size >= 2")
    threshold = HALF if size == 2 else ELEVEN_24 if size == 3 else None
    sets = list(primitive_sets(max_element, size))
    parts = run_chunked(partial(_pzero_chunk, threshold=threshold), sets, jobs)
    best, wits = _merge_extremum([(p[1], p[2]) for p in parts], prefer=lambda a, b: a > b)
    violations = tuple(sorted(v for p in parts for v in p[3]))
    return ScanReport(
        params={"max_element": max_element, "size": size},
        extremum=best,
        witnesses=wits,
        violations=violations,
        details={"sets_checked": sum(p[0] for p in parts), "bound": threshold},
    )


def _bohr_chunk(sets: Sequence[IntSet]):
    best = None
    wits: List[IntSet] = []
    viols: List[IntSet] = []
    for S in sets:
        slack = level_distribution(S).p_empty - bohr_lower_bound(len(S), 3)
        if best is None or slack < best:
            best, wits = slack, [S]
        elif slack == best:
            wits.append(S)
        if slack < 0:
            viols.append(S)
    return len(sets), best, wits, viols


def scan_bohr(max_element: int, max_size: int, jobs: int = 1) -> ScanReport:
    """Check p_empty >= 2/(3^k - 2^k + 2) on all primitive sets, sizes 1..K, max <= M.

    The extremum is the minimum slack (p_empty minus the bound); zero slack
    means the bound is tight somewhere, negative slack would be a violation.
    """
    if max_element < 1 or max_size < 1:
        raise ValueError("need max_element >= 1 and max_size >= 1")
    sets = [S for k in range(1, max_size + 1) for S in primitive_sets(max_element, k)]
    parts = run_chunked(_bohr_chunk, sets, jobs)
    best, wits = _merge_extremum([(p[1], p[2]) for p in parts], prefer=lambda a, b: a < b)
    violations = tuple(sorted(v for p in parts for v in p[3]))
    return ScanReport(
        params={"max_element": max_element, "max_size": max_size},
        extremum=best,
        witnesses=wits,
        violations=violations,
        details={"sets_checked": sum(p[0] for p in parts)},
    )
