"""Families of subsets whose pairwise intersections carry additive structure.

Subsets of {1..n} are bitmasks (bit i-1 stands for the integer i).  A family
is valid for a predicate when every pairwise intersection of members — the
pair of a member with itself included — contains the required configuration:

* ``SUM``: x + y = z with x, y, z in the set, repeats allowed;
* ``DISTINCT_SUM``: the same with x, y, z pairwise distinct;
* ``k_sum(k)``: x_1 + ... + x_k = y, repeats allowed (k = 2 is SUM).

Since a set must intersect itself, every member of a valid family contains
the configuration on its own; those are the vertices of the compatibility
graph, whose edges join sets with a qualifying intersection.  Maximum
families are maximum cliques of that graph, found exactly by branch and
bound.  The reference construction — all supersets of a fixed qualifying
base — gives the known lower bound of 2^(n - |base|) members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .cliques import max_clique
from .slices import IntSet, intset

SEARCH_CAP = 7


@dataclass(frozen=True)
class IntersectionPredicate:
    """Which additive configuration an intersection must contain."""

    kind: str
    k: int = 2

    def __post_init__(self):
        if self.kind not in ("sum", "distinct-sum", "k-sum"):
            raise ValueError(f"unknown predicate kind {self.kind!r}")
        if self.kind == "k-sum" and self.k < 2:
            raise ValueError("k-sum needs k >= 2")

    @property
    def name(self) -> str:
        return f"{self.k}-sum" if self.kind == "k-sum" else self.kind

    @classmethod
    def parse(cls, text: str) -> "IntersectionPredicate":
        text = text.strip().lower()
        if text == "sum":
            return SUM
        if text == "distinct-sum":
            return DISTINCT_SUM
        if text.endswith("-sum"):
            try:
                return k_sum(int(text[:-4]))
            except ValueError:
                pass
        raise ValueError(f"unknown predicate {text!r} (use sum, distinct-sum or <k>-sum)")


SUM = IntersectionPredicate("sum")
DISTINCT_SUM = IntersectionPredicate("distinct-sum")


def k_sum(k: int) -> IntersectionPredicate:
    return IntersectionPredicate("k-sum", k)


def contains_pattern(A: Iterable[int], pred: IntersectionPredicate = SUM) -> bool:
    """Does the set contain the predicate's configuration?"""
    A = intset(A)
    elems = set(A)
    if pred.kind == "sum":
        return any(x + y in elems for i, x in enumerate(A) for y in A[i:])
    if pred.kind == "distinct-sum":
        return any(x + y in elems for x, y in combinations(A, 2))
    if not A:
        return False
    cap = A[-1]
    sums = {0}
    for _ in range(pred.k):
        sums = {s + a for s in sums for a in A if s + a <= cap}
    return bool(sums & elems)


def mask_to_set(mask: int) -> IntSet:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def set_to_mask(S: Iterable[int]) -> int:
    mask = 0
    for x in intset(S):
        mask |= 1 << (x - 1)
    return mask


@dataclass(frozen=True)
class SetFamily:
    """A family of subsets of {1..n}, members stored as bitmasks."""

    n: int
    members: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be nonnegative")
        full = (1 << self.n) - 1
        for m in self.members:
            if m & ~full:
                raise ValueError(f"member {mask_to_set(m)} is not a subset of [{self.n}]")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, frozenset(set_to_mask(s) for s in sets))

    @classmethod
    def all_subsets(cls, n: int) -> "SetFamily":
        return cls(n, frozenset(range(1 << n)))

    def member_sets(self) -> List[IntSet]:
        return [mask_to_set(m) for m in sorted(self.members)]

    def density(self) -> Fraction:
        return Fraction(len(self.members), 1 << self.n)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members


@lru_cache(maxsize=None)
def _mask_has_pattern(mask: int, pred: IntersectionPredicate) -> bool:
    return contains_pattern(mask_to_set(mask), pred)


def is_valid_family(F: SetFamily, pred: IntersectionPredicate = SUM) -> bool:
    """Every pairwise intersection (a member with itself included) qualifies."""
    members = sorted(F.members)
    return all(
        _mask_has_pattern(members[i] & members[j], pred)
        for i in range(len(members))
        for j in range(i, len(members))
    )


def canonical_family(
    n: int, base: Iterable[int], pred: IntersectionPredicate = SUM
) -> SetFamily:
    """All supersets of a qualifying base set: 2^(n - |base|) members."""
    base = intset(base)
    if base and base[-1] > n:
        raise ValueError(f"base {base} is not a subset of [{n}]")
    if not contains_pattern(base, pred):
        raise ValueError(f"base {base} does not itself contain a {pred.name} pattern")
    base_mask = set_to_mask(base)
    free = [i for i in range(n) if not base_mask >> i & 1]
    members = set()
    for extra in range(1 << len(free)):
        mask = base_mask
        for pos, i in enumerate(free):
            if extra >> pos & 1:
                mask |= 1 << i
        members.add(mask)
    return SetFamily(n, frozenset(members))


_CONJECTURED_FRACTION = {
    "sum": Fraction(1, 4),
    "distinct-sum": Fraction(1, 8),
    "k-sum": Fraction(1, 4),
}


@dataclass(frozen=True)
class SearchResult:
    n: int
    predicate: IntersectionPredicate
    max_size: int
    witness: SetFamily
    conjectured: Fraction
    node_count: int

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "predicate": self.predicate.name,
            "max_size": self.max_size,
            "witness": [list(s) for s in self.witness.member_sets()],
            "conjectured_fraction": str(self.conjectured),
            "node_count": self.node_count,
        }


def pattern_vertices(n: int, pred: IntersectionPredicate) -> List[int]:
    """Masks of the subsets of [n] that contain the configuration themselves."""
    return [m for m in range(1, 1 << n) if _mask_has_pattern(m, pred)]


def compatibility_adjacency(vertices: List[int], pred: IntersectionPredicate) -> List[int]:
    adj = [0] * len(vertices)
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if _mask_has_pattern(vertices[i] & vertices[j], pred):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def max_family(
    n: int, pred: IntersectionPredicate = SUM, cap: int = SEARCH_CAP
) -> SearchResult:
    """Exact maximum family size at dimension n, with a re-validated witness."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the search cap {cap}")
    vertices = pattern_vertices(n, pred)
    adj = compatibility_adjacency(vertices, pred)
    size, indices, nodes = max_clique(adj)
    witness = SetFamily(n, frozenset(vertices[i] for i in indices))
    if size and not is_valid_family(witness, pred):
        raise AssertionError("clique search produced an invalid family")
    return SearchResult(
        n=n,
        predicate=pred,
        max_size=size,
        witness=witness,
        conjectured=_CONJECTURED_FRACTION[pred.kind],
        node_count=nodes,
    )
