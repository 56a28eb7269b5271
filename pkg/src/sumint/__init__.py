"""Exact-arithmetic toolkit for sum-intersecting families of integers.

Subpackages cover the pieces of the pipeline: exact interval measures
(:mod:`sumint.intervals`), the distribution of the random sum-free slice
(:mod:`sumint.slices`), closed-form pair bounds with exhaustive scan
verifiers (:mod:`sumint.bounds`), LP certificates with an exact rational
simplex (:mod:`sumint.certificates`), Boolean-cube Fourier verification
(:mod:`sumint.fourier`), and exact extremal search (:mod:`sumint.families`).
"""

from .bounds import (
    ScanReport,
    bohr_lower_bound,
    chi,
    error_fn,
    observation_checks,
    scan_bohr,
    scan_pzero_bounds,
    scan_triple_bound,
    triple_error_sum,
    two_point_prob,
    verify_two_point_formula,
)
from .certificates import (
    INCONCLUSIVE,
    VALID,
    VIOLATED,
    Certificate,
    ConstraintPool,
    LPUnbounded,
    Verdict,
    bound_from_certificate,
    build_pool,
    lp_search,
    mu,
    tail_verify,
    verify_certificate_finite,
)
from .families import (
    DISTINCT_SUM,
    SUM,
    IntersectionPredicate,
    SearchResult,
    SetFamily,
    canonical_family,
    contains_pattern,
    is_valid_family,
    k_sum,
    mask_to_set,
    max_family,
    set_to_mask,
)
from .fourier import (
    BooleanFunction,
    build_nu,
    convolve,
    fourier_bound_check,
    inverse_wht,
    nu_transform,
    pointmass_check,
    verify_intersecting_identity,
    wht,
)
from .intervals import IntervalSet, Rational, format_rational, parse_rational
from .slices import (
    IntSet,
    LevelDistribution,
    inclusion_region,
    intset,
    joint_inclusion_prob,
    level_distribution,
    primitive_form,
    primitive_sets,
    sample_slice,
)

__version__ = "0.1.0"
