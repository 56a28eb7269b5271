"""Pair-error arithmetic and the exhaustive scan verifiers."""

from fractions import Fraction as F
from itertools import combinations

import pytest

from sumint.bounds import (
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
from sumint.slices import level_distribution


class TestChi:
    @pytest.mark.parametrize("k,expected", [(0, 0), (1, 1), (2, -1), (4, 1), (6, 0), (35, -1)])
    def test_values(self, k, expected):
        assert chi(k) == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            chi(-1)


class TestErrorFn:
    @pytest.mark.parametrize(
        "x,y,expected",
        [(1, 4, F(1, 4)), (2, 8, F(1, 4)), (1, 2, F(-1, 2)), (1, 3, 0), (3, 6, F(-1, 2))],
    )
    def test_values(self, x, y, expected):
        assert error_fn(x, y) == expected

    def test_rejects_equal(self):
        with pytest.raises(ValueError):
            error_fn(5, 5)

    def test_symmetry_and_gcd_invariance(self):
        for x, y in combinations(range(1, 61), 2):
            e = error_fn(x, y)
            assert e == error_fn(y, x)
            for c in (2, 3, 5):
                assert e == error_fn(c * x, c * y)

    def test_range_and_positive_shape(self):
        for x, y in combinations(range(1, 101), 2):
            e = error_fn(x, y)
            assert F(-1, 2) <= e <= F(1, 4)
            if e > 0:
                assert e.numerator == 1 and e.denominator % 3 == 1


class TestTwoPoint:
    @pytest.mark.parametrize(
        "x,y,expected", [(1, 4, F(1, 6)), (1, 2, 0), (1, 3, F(1, 9))]
    )
    def test_values(self, x, y, expected):
        assert two_point_prob(x, y) == expected

    def test_formula_scan_small(self):
        report = verify_two_point_formula(10)
        assert report.holds
        assert report.details["pairs_checked"] == 45

    def test_formula_scan_single_pair(self):
        report = verify_two_point_formula(2)
        assert report.holds
        assert report.details["pairs_checked"] == 1


class TestObservationChecks:
    def test_max_and_witnesses(self):
        report = observation_checks(20)
        assert report.holds
        assert report.extremum == F(1, 4)
        assert (1, 4) in report.witnesses

    def test_listed_positive_values_attained(self):
        positives = set(observation_checks(20).details["positive_values"])
        for k in (1, 2, 3, 4, 5, 6):
            assert F(1, 3 * k + 1) in positives
        assert all(e.numerator == 1 and e.denominator % 3 == 1 for e in positives)

    def test_no_positive_values_below_four(self):
        report = observation_checks(3)
        assert report.details["positive_values"] == []
        assert report.extremum == 0
        assert report.witnesses == ((1, 3), (2, 3))

    def test_negative_pattern_reported_not_asserted(self):
        negatives = observation_checks(20).details["negative_values"]
        assert F(-1, 2) in negatives
        assert all(e < 0 for e in negatives)


class TestTripleScan:
    def test_max_at_16(self):
        report = scan_triple_bound(16)
        assert report.holds
        assert report.extremum == F(9, 16)
        assert report.witnesses == ((1, 4, 16),)

    def test_max_at_4(self):
        report = scan_triple_bound(4)
        assert report.extremum == F(1, 4)
        assert report.witnesses == ((1, 3, 4),)
        assert report.details["triples_checked"] == 4

    def test_below_16_stays_strict(self):
        report = scan_triple_bound(15)
        assert report.holds
        assert report.extremum < F(9, 16)

    def test_triple_error_sum_value(self):
        assert triple_error_sum(1, 4, 16) == F(1, 4) + F(1, 4) + F(1, 16)


class TestPzeroScan:
    def test_pairs(self):
        report = scan_pzero_bounds(20, 2)
        assert report.holds
        assert report.extremum == F(1, 2)
        assert report.witnesses == ((1, 4),)

    def test_triples(self):
        report = scan_pzero_bounds(20, 3)
        assert report.holds
        assert report.extremum == F(7, 18)
        assert report.witnesses == ((1, 3, 4),)
        assert report.extremum <= F(11, 24)


class TestBohr:
    @pytest.mark.parametrize(
        "k,t,expected", [(4, 3, F(2, 67)), (1, 3, F(2, 3)), (2, 3, F(2, 7))]
    )
    def test_lower_bound_values(self, k, t, expected):
        assert bohr_lower_bound(k, t) == expected

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            bohr_lower_bound(0, 3)
        with pytest.raises(ValueError):
            bohr_lower_bound(2, 1)

    def test_scan_pairs(self):
        report = scan_bohr(12, 2)
        assert report.holds
        assert report.extremum == 0
        assert report.witnesses == ((1,),)
        # the smallest pair value stays above its floor
        assert level_distribution((1, 2)).p_empty == F(1, 3) >= F(2, 7)

    def test_scan_singletons_tight(self):
        report = scan_bohr(5, 1)
        assert report.holds
        assert report.extremum == 0

    def test_scan_medium(self):
        report = scan_bohr(15, 3)
        assert report.holds


class TestParallelDeterminism:
    def test_triple_scan_jobs_invariant(self):
        assert scan_triple_bound(25, jobs=1) == scan_triple_bound(25, jobs=3)

    def test_bohr_scan_jobs_invariant(self):
        assert scan_bohr(18, 3, jobs=1) == scan_bohr(18, 3, jobs=2)

    def test_two_point_jobs_invariant(self):
        assert verify_two_point_formula(45, jobs=1) == verify_two_point_formula(45, jobs=4)
