"""Certificates for the slice-distribution linear programming bound.

A certificate is a coefficient vector (c_0, ..., c_m).  It induces the
functional

    mu(S) = (-1)^|S| * sum_j c_j * P[slice of S has exactly j elements]

on finite sets of positive integers.  Whenever mu(S) >= -1 for every S, any
family of subsets of {1..n} whose pairwise intersections all contain a sum
x + y = z can occupy at most a 1/(1 + c_0) fraction of the 2^n subsets, so
maximizing c_0 over feasible certificates tightens the bound.

Three layers of evidence, strongest last:

* ``verify_certificate_finite`` checks mu >= -1 exactly on a finite pool of
  primitive sets (a candidate check, never a proof for all sets);
* ``tail_verify`` mechanizes the size-casework that upgrades a
  two-coefficient certificate to all set sizes: singletons exactly, pairs
  via the extreme values of the pair error E in [-1/2, 1/4], odd sizes >= 3
  via the 11/24 ceiling on the empty-slice probability, size 4 via the
  2/67 floor and the 512/603 ceiling, and even sizes >= 6 via the 4/5
  ceiling on the one-element probability.  Its conditions are sufficient,
  not necessary, so a failed stage is INCONCLUSIVE rather than VIOLATED;
* ``lp_search`` maximizes c_0 exactly over a constraint pool by rational
  simplex and re-verifies the optimum against the pool before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Dict, Iterable, Optional, Sequence, Tuple

from . import simplex
from .intervals import format_rational, parse_rational
from .parallel import run_chunked
from .slices import IntSet, intset, level_distribution, primitive_sets

VALID = "VALID"
VIOLATED = "VIOLATED"
INCONCLUSIVE = "INCONCLUSIVE"

MINUS_ONE = Fraction(-1)

FINITE_POOL_CAVEAT = "finite pool check only; says nothing about sets outside the pool"


class LPUnbounded(Exception):
    """The pool does not pin down the objective: c_0 can grow without bound."""


@dataclass(frozen=True)
class Certificate:
    """Coefficient vector (c_0, ..., c_m); c_0 is the objective value."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("certificate needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def c0(self) -> Fraction:
        return self.coeffs[0]

    @classmethod
    def parse(cls, text: str) -> "Certificate":
        """Parse a comma-separated rational list such as ``"17/8,-5/4"``."""
        return cls(tuple(parse_rational(part) for part in text.split(",")))

    def as_strings(self) -> list:
        return [format_rational(c) for c in self.coeffs]


def mu(S: Iterable[int], cert: Certificate) -> Fraction:
    """Signed certificate functional of S; coefficients beyond |S| contribute 0."""
    S = intset(S)
    probs = level_distribution(S).probs
    total = sum(
        (c * probs[j] for j, c in enumerate(cert.coeffs) if j < len(probs)),
        Fraction(0),
    )
    return total if len(S) % 2 == 0 else -total


def bound_from_certificate(cert: Certificate) -> Fraction:
    """Fraction-of-2^n bound 1/(1 + c_0); requires c_0 > -1."""
    if cert.c0 <= MINUS_ONE:
        raise ValueError(f"degenerate certificate: c_0 = {cert.c0} <= -1")
    return 1 / (1 + cert.c0)


@dataclass(frozen=True)
class ConstraintPool:
    """Deduplicated primitive sets used as finite surrogate constraints."""

    sets: Tuple[IntSet, ...]
    max_element: int
    max_size: int

    def __len__(self) -> int:
        return len(self.sets)


def build_pool(max_element: int, max_size: int) -> ConstraintPool:
    """The empty set plus every primitive subset of {1..M} of size <= K."""
    if max_size < 1 or max_element < max_size:
        raise ValueError("need max_element >= max_size >= 1")
    sets: list = [()]
    for k in range(1, max_size + 1):
        sets.extend(primitive_sets(max_element, k))
    return ConstraintPool(tuple(sets), max_element, max_size)


@dataclass(frozen=True)
class Verdict:
    status: str
    witnesses: Tuple = ()
    bound: Optional[Fraction] = None
    caveat: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)

    def as_json(self) -> dict:
        return {
            "status": self.status,
            "bound": None if self.bound is None else format_rational(self.bound),
            "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses],
            "caveat": self.caveat,
        }


def _mu_chunk(sets: Sequence[IntSet], cert: Certificate):
    return [S for S in sets if mu(S, cert) < MINUS_ONE]


def verify_certificate_finite(
    cert: Certificate, pool: ConstraintPool, jobs: int = 1
) -> Verdict:
    """Check mu(S) >= -1 exactly for every pool set; a finite check only."""
    parts = run_chunked(partial(_mu_chunk, cert=cert), pool.sets, jobs)
    violations = tuple(sorted((v for part in parts for v in part), key=lambda s: (len(s), s)))
    if violations:
        return Verdict(VIOLATED, witnesses=violations, details={"checked": len(pool)})
    if cert.c0 <= MINUS_ONE:
        return Verdict(
            INCONCLUSIVE,
            witnesses=("degenerate-objective",),
            caveat="all pool constraints hold but c_0 <= -1 yields no bound",
            details={"checked": len(pool)},
        )
    return Verdict(
        VALID,
        bound=bound_from_certificate(cert),
        caveat=FINITE_POOL_CAVEAT,
        details={"checked": len(pool)},
    )


# Exact constants used by the size-casework stages.
_P_EMPTY_SINGLETON = Fraction(2, 3)
_P_ONE_SINGLETON = Fraction(1, 3)
_PAIR_ERROR_RANGE = (Fraction(-1, 2), Fraction(1, 4))
_P_EMPTY_CEILING_3PLUS = Fraction(11, 24)
_P_EMPTY_FLOOR_SIZE4 = Fraction(2, 67)
_P_ONE_CEILING_SIZE4 = Fraction(512, 603)
_P_ONE_CEILING_EVEN6 = Fraction(4, 5)


def tail_stages(cert: Certificate) -> Dict[str, bool]:
    """Evaluate each casework stage of a two-coefficient certificate exactly.

    s0: empty set, mu = c_0 >= -1.
    s1: singletons, mu = -(2/3 c_0 + 1/3 c_1) >= -1.
    s2: pairs; mu is linear in the pair error E, so the extreme attainable
        values E = -1/2 and E = 1/4 suffice (p_empty = 4/9 + 2E/9,
        p_one = 4/9 - 4E/9).
    s3: odd size >= 3; worst case c_0 * 11/24 (the c_1 term only helps).
    s4: size 4; worst case c_0 * 2/67 + c_1 * 512/603.
    s5: even size >= 6; worst case c_1 * 4/5 (the c_0 term only helps).
    """
    c0, c1 = cert.coeffs
    stages = {"s0": c0 >= -1}
    stages["s1"] = c0 * _P_EMPTY_SINGLETON + c1 * _P_ONE_SINGLETON <= 1
    stages["s2"] = all(
        c0 * (Fraction(4, 9) + Fraction(2, 9) * e)
        + c1 * (Fraction(4, 9) - Fraction(4, 9) * e)
        >= -1
        for e in _PAIR_ERROR_RANGE
    )
    stages["s3"] = c0 * _P_EMPTY_CEILING_3PLUS <= 1
    stages["s4"] = c0 * _P_EMPTY_FLOOR_SIZE4 + c1 * _P_ONE_CEILING_SIZE4 >= -1
    stages["s5"] = c1 * _P_ONE_CEILING_EVEN6 >= -1
    return stages


def tail_verify(cert: Certificate) -> Verdict:
    """Certify mu >= -1 for all set sizes via exact casework.

    Only two-coefficient certificates with c_0 >= 0 >= c_1 are covered by the
    casework; anything else is INCONCLUSIVE with stage ``sign-regime``.  The
    stage conditions are sufficient, not necessary, so failures are likewise
    INCONCLUSIVE, naming the failing stages.
    """
    if len(cert.coeffs) != 2 or not (cert.c0 >= 0 >= cert.coeffs[1]):
        return Verdict(
            INCONCLUSIVE,
            witnesses=("sign-regime",),
            caveat="casework covers certificates (c_0, c_1) with c_0 >= 0 >= c_1",
        )
    stages = tail_stages(cert)
    failing = tuple(name for name, ok in stages.items() if not ok)
    if failing:
        return Verdict(INCONCLUSIVE, witnesses=failing, details={"stages": stages})
    return Verdict(
        VALID,
        bound=bound_from_certificate(cert),
        details={"stages": stages},
    )


def _constraint_column(S: IntSet, m: int) -> Tuple[Fraction, ...]:
    """Column of the search LP for one set: entries -(-1)^|S| p_j(S), j = 0..m."""
    probs = level_distribution(S).probs
    sign = 1 if len(S) % 2 == 0 else -1
    return tuple(
        -sign * (probs[j] if j < len(probs) else Fraction(0)) for j in range(m + 1)
    )


def lp_search(pool: ConstraintPool, m: int) -> Certificate:
    """Maximize c_0 over certificates (c_0..c_m) satisfying every pool constraint.

    Each pool set S contributes the constraint (-1)^|S| sum_j c_j p_j(S) >= -1.
    The zero certificate is always feasible, so the search either returns an
    exact optimum or raises LPUnbounded when the pool fails to cap c_0.  The
    optimum is solved as the dual (min sum y over nonnegative combinations of
    constraint columns hitting the objective direction); the optimal basis
    multipliers are exactly the maximizing coefficients.  The result is
    re-verified against the pool before being returned.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    if not pool.sets:
        raise ValueError("empty constraint pool")
    columns = [_constraint_column(S, m) for S in pool.sets]
    costs = [Fraction(1)] * len(columns)
    objective_direction = [Fraction(1)] + [Fraction(0)] * m
    try:
        value, _, multipliers = simplex.solve_min_equalities(
            columns, costs, objective_direction
        )
    except simplex.Infeasible as exc:
        raise LPUnbounded(
            "pool does not bound the objective; add more constraint sets"
        ) from exc
    cert = Certificate(multipliers)
    if cert.c0 != value:
        raise RuntimeError("simplex self-check failed: duality gap is nonzero")
    verdict = verify_certificate_finite(cert, pool)
    if verdict.status != VALID:
        raise RuntimeError(
            f"simplex self-check failed: optimum violates the pool ({verdict.status})"
        )
    return cert
