"""Exact Fourier analysis on the Boolean cube and the convolution identity.

Functions on subsets of {1..n} are stored densely as 2^n rationals indexed
by bitmask (bit i-1 is the integer i).  Conventions: the forward transform
carries the expectation normalization,

    hat f(lam) = 2^-n * sum_x (-1)^<lam, x> f(x),

inversion is the plain signed sum, and convolution is the expectation form
(f * g)(z) = 2^-n sum_y f(y) g(z XOR y), so hat(f * g) = hat f * hat g
pointwise.  Everything is exact; the dimension is capped because storage is
dense — this module is a verifier, not a production transform.

The measure used against families is built from a certificate through its
transform:  hat nu(lam) = (-1)^|lam| sum_j c_j P[slice of lam keeps exactly
j elements], with lam read as a set of integers.  For every family whose
pairwise intersections all contain a sum, the triple convolution
(1_F * 1_F * nu)(0) vanishes identically, which combined with hat nu >= -1
forces the family density below 1/(1 + hat nu(0)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .certificates import Certificate, bound_from_certificate, mu
from .families import (
    SUM,
    SetFamily,
    contains_pattern,
    is_valid_family,
    mask_to_set,
    set_to_mask,
)
from .intervals import format_rational
from .slices import level_distribution

MAX_DIM = 16


@dataclass(frozen=True)
class BooleanFunction:
    """A rational-valued function on the 2^n subsets of {1..n}."""

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if not (0 <= self.n <= MAX_DIM):
            raise ValueError(f"dimension must be in 0..{MAX_DIM}")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"need exactly 2^{self.n} values")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def constant(cls, n: int, value) -> "BooleanFunction":
        return cls(n, (Fraction(value),) * (1 << n))

    @classmethod
    def point_mass(cls, n: int, point: int, value=1) -> "BooleanFunction":
        vals = [Fraction(0)] * (1 << n)
        vals[point] = Fraction(value)
        return cls(n, tuple(vals))

    @classmethod
    def indicator(cls, family: SetFamily) -> "BooleanFunction":
        vals = [Fraction(0)] * (1 << family.n)
        for m in family.members:
            vals[m] = Fraction(1)
        return cls(family.n, tuple(vals))

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]


def _butterfly(values: Iterable[Fraction], n: int) -> list:
    vals = list(values)
    h = 1
    size = 1 << n
    while h < size:
        for start in range(0, size, h * 2):
            for i in range(start, start + h):
                a, b = vals[i], vals[i + h]
                vals[i] = a + b
                vals[i + h] = a - b
        h *= 2
    return vals


def wht(f: BooleanFunction) -> BooleanFunction:
    """Forward transform with the 2^-n expectation normalization."""
    scale = Fraction(1, 1 << f.n)
    return BooleanFunction(f.n, tuple(v * scale for v in _butterfly(f.values, f.n)))


def inverse_wht(g: BooleanFunction) -> BooleanFunction:
    """Inverse transform: the plain signed sum over frequencies."""
    return BooleanFunction(g.n, tuple(_butterfly(g.values, g.n)))


def convolve(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    """Expectation convolution, computed straight from the definition."""
    if f.n != g.n:
        raise ValueError("convolution needs functions of the same dimension")
    size = 1 << f.n
    scale = Fraction(1, size)
    out = []
    for z in range(size):
        out.append(sum((f.values[y] * g.values[z ^ y] for y in range(size)), Fraction(0)) * scale)
    return BooleanFunction(f.n, tuple(out))


def nu_transform(n: int, cert: Certificate) -> BooleanFunction:
    """The transform of the certificate measure: signed level-weighted slice laws."""
    vals = []
    for lam in range(1 << n):
        probs = level_distribution(mask_to_set(lam)).probs
        total = sum(
            (c * probs[j] for j, c in enumerate(cert.coeffs) if j < len(probs)),
            Fraction(0),
        )
        vals.append(total if bin(lam).count("1") % 2 == 0 else -total)
    return BooleanFunction(n, tuple(vals))


def build_nu(n: int, cert: Certificate) -> BooleanFunction:
    """The certificate measure itself, recovered by inverting its transform."""
    return inverse_wht(nu_transform(n, cert))


def verify_intersecting_identity(F: SetFamily, nu: BooleanFunction) -> Fraction:
    """Exact value of (1_F * 1_F * nu)(0); zero for qualifying families.

    Expanding the two inner convolutions at zero leaves a sum of nu over the
    symmetric differences of member pairs, scaled by 4^-n.
    """
    if F.n != nu.n:
        raise ValueError("family and measure dimensions differ")
    if not is_valid_family(F, SUM):
        raise ValueError("family not sum-intersecting")
    members = sorted(F.members)
    total = sum(
        (nu.values[a ^ b] for a in members for b in members), Fraction(0)
    )
    return total / Fraction(1 << (2 * F.n))


@dataclass(frozen=True)
class FourierBoundReport:
    n: int
    family_size: int
    density: Fraction
    bound: Fraction
    identity_value: Fraction

    @property
    def holds(self) -> bool:
        return self.identity_value == 0 and self.density <= self.bound

    def as_json(self) -> dict:
        return {
            "status": "holds" if self.holds else "violated",
            "n": self.n,
            "family_size": self.family_size,
            "density": format_rational(self.density),
            "bound": format_rational(self.bound),
            "identity_value": format_rational(self.identity_value),
        }


def fourier_bound_check(F: SetFamily, cert: Certificate) -> FourierBoundReport:
    """Check the LP bound against a concrete family at its own dimension.

    Verifies the certificate hypothesis mu(S) >= -1 on all 2^n subsets of
    [n] first (a genuine finite verification at this dimension), then the
    vanishing identity, then compares density to 1/(1 + c_0).
    """
    for mask in range(1 << F.n):
        if mu(mask_to_set(mask), cert) < -1:
            raise ValueError(
                f"certificate fails mu >= -1 at S = {list(mask_to_set(mask))}"
            )
    bound = bound_from_certificate(cert)
    identity = verify_intersecting_identity(F, build_nu(F.n, cert))
    return FourierBoundReport(
        n=F.n,
        family_size=len(F),
        density=F.density(),
        bound=bound,
        identity_value=identity,
    )


@dataclass(frozen=True)
class PointmassReport:
    n: int
    target: Tuple[int, ...]
    pairs_checked: int
    failures: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]

    @property
    def holds(self) -> bool:
        return not self.failures

    def as_json(self) -> dict:
        return {
            "status": "pass" if self.holds else "fail",
            "n": self.n,
            "target": list(self.target),
            "pairs_checked": self.pairs_checked,
            "failures": [[list(a), list(b)] for a, b in self.failures],
        }


def pointmass_check(n: int, T: Iterable[int], F: SetFamily) -> PointmassReport:
    """Point-mass vanishing: no two family members may differ exactly by T.

    Requires the complement of T in [n] to be sum-free and the family to be
    sum-intersecting; under those hypotheses the triple product with the
    point mass at T vanishes on every zero-sum argument triple, verified
    here pair by pair.
    """
    T = tuple(sorted(set(T)))
    if F.n != n:
        raise ValueError("family dimension mismatch")
    t_mask = set_to_mask(T)
    if t_mask & ~((1 << n) - 1):
        raise ValueError(f"target {list(T)} is not a subset of [{n}]")
    complement = tuple(x for x in range(1, n + 1) if x not in T)
    if contains_pattern(complement, SUM):
        raise ValueError("complement not sum-free")
    if not is_valid_family(F, SUM):
        raise ValueError("family not sum-intersecting")
    members = sorted(F.members)
    failures = []
    pairs = 0
    for i, a in enumerate(members):
        for b in members[i:]:
            pairs += 1
            if a ^ b == t_mask:
                failures.append((mask_to_set(a), mask_to_set(b)))
    return PointmassReport(n=n, target=T, pairs_checked=pairs, failures=tuple(failures))
