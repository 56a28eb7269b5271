"""Certificate functional, pools, finite/casework verification, LP search."""

from fractions import Fraction as F

import pytest

from sumint.certificates import (
    INCONCLUSIVE,
    VALID,
    VIOLATED,
    Certificate,
    LPUnbounded,
    bound_from_certificate,
    build_pool,
    lp_search,
    mu,
    tail_stages,
    tail_verify,
    verify_certificate_finite,
)
from sumint.slices import primitive_form

from oracles import lp_max_c0_by_vertex_enumeration

MAIN = Certificate.parse("17/8,-5/4")
SIMPLE = Certificate.parse("2,-1")


class TestCertificateParsing:
    def test_parse_round_trip(self):
        assert MAIN.coeffs == (F(17, 8), F(-5, 4))
        assert MAIN.as_strings() == ["17/8", "-5/4"]

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Certificate(())


class TestMu:
    def test_empty_set_simple(self):
        assert mu((), SIMPLE) == 2

    def test_singleton_main(self):
        assert mu((1,), MAIN) == -1

    def test_empty_set_main(self):
        assert mu((), MAIN) == F(17, 8)

    def test_coefficients_beyond_size_ignored(self):
        long_cert = Certificate.parse("2,-1,7,9")
        assert mu((1,), long_cert) == mu((1,), SIMPLE)

    @pytest.mark.parametrize("S", [(1,), (1, 2), (2, 3, 5), (1, 3, 4)])
    @pytest.mark.parametrize("c", [2, 3, 5])
    def test_depends_only_on_primitive_form(self, S, c):
        scaled = tuple(c * x for x in S)
        assert mu(scaled, MAIN) == mu(primitive_form(scaled), MAIN)
        assert mu(scaled, MAIN) == mu(S, MAIN)


class TestBound:
    @pytest.mark.parametrize(
        "text,expected", [("17/8", F(8, 25)), ("2", F(1, 3)), ("3", F(1, 4))]
    )
    def test_values(self, text, expected):
        assert bound_from_certificate(Certificate.parse(text)) == expected

    @pytest.mark.parametrize("text", ["-1", "-3/2"])
    def test_rejects_degenerate(self, text):
        with pytest.raises(ValueError):
            bound_from_certificate(Certificate.parse(text))


class TestBuildPool:
    def test_2_2(self):
        assert build_pool(2, 2).sets == ((), (1,), (1, 2))

    def test_3_1(self):
        assert build_pool(3, 1).sets == ((), (1,))

    def test_3_2(self):
        assert build_pool(3, 2).sets == ((), (1,), (1, 2), (1, 3), (2, 3))

    def test_all_primitive_and_unique(self):
        pool = build_pool(10, 3)
        assert len(set(pool.sets)) == len(pool.sets)
        assert all(primitive_form(S) == S for S in pool.sets if S)


class TestVerifyFinite:
    def test_main_certificate_valid(self):
        verdict = verify_certificate_finite(MAIN, build_pool(12, 3))
        assert verdict.status == VALID
        assert verdict.bound == F(8, 25)
        assert verdict.caveat is not None

    def test_violated_with_witness(self):
        verdict = verify_certificate_finite(Certificate.parse("3,-1"), build_pool(5, 2))
        assert verdict.status == VIOLATED
        assert (1,) in verdict.witnesses
        assert mu((1,), Certificate.parse("3,-1")) == F(-5, 3)

    def test_zero_certificate_valid_bound_one(self):
        verdict = verify_certificate_finite(Certificate.parse("0"), build_pool(6, 2))
        assert verdict.status == VALID
        assert verdict.bound == 1

    def test_degenerate_objective_inconclusive(self):
        verdict = verify_certificate_finite(Certificate.parse("-1"), build_pool(4, 2))
        assert verdict.status == INCONCLUSIVE
        assert verdict.witnesses == ("degenerate-objective",)

    def test_jobs_invariant(self):
        pool = build_pool(14, 3)
        assert verify_certificate_finite(MAIN, pool, jobs=1) == verify_certificate_finite(
            MAIN, pool, jobs=3
        )


class TestTailVerify:
    def test_main(self):
        verdict = tail_verify(MAIN)
        assert verdict.status == VALID
        assert verdict.bound == F(8, 25)

    def test_simple(self):
        verdict = tail_verify(SIMPLE)
        assert verdict.status == VALID
        assert verdict.bound == F(1, 3)

    def test_3_minus_3_fails_odd_stage(self):
        verdict = tail_verify(Certificate.parse("3,-3"))
        assert verdict.status == INCONCLUSIVE
        assert "s3" in verdict.witnesses
        assert not tail_stages(Certificate.parse("3,-3"))["s3"]

    def test_wrong_shape_is_sign_regime(self):
        for text in ("2", "2,-1,0", "2,1", "-1/2,-1"):
            verdict = tail_verify(Certificate.parse(text))
            assert verdict.status == INCONCLUSIVE
            assert verdict.witnesses == ("sign-regime",)

    def test_stage_equalities_of_main(self):
        # the singleton and even-size stages are exactly tight for (17/8, -5/4)
        c0, c1 = MAIN.coeffs
        assert c0 * F(2, 3) + c1 * F(1, 3) == 1
        assert c1 * F(4, 5) == -1

    @pytest.mark.parametrize("cert", [MAIN, SIMPLE])
    def test_tail_valid_implies_finite_valid(self, cert):
        for pool_args in ((10, 3), (12, 4), (25, 4)):
            verdict = verify_certificate_finite(cert, build_pool(*pool_args))
            assert verdict.status == VALID


class TestLpSearch:
    def test_minimal_pool_by_hand(self):
        cert = lp_search(build_pool(2, 2), 1)
        assert cert.coeffs == (F(3), F(-3))
        assert bound_from_certificate(cert) == F(1, 4)

    def test_empty_only_pool_unbounded(self):
        from sumint.certificates import ConstraintPool

        with pytest.raises(LPUnbounded):
            lp_search(ConstraintPool(((),), 1, 1), 1)

    def test_sizes_0_and_1_still_unbounded(self):
        from sumint.certificates import ConstraintPool

        with pytest.raises(LPUnbounded):
            lp_search(ConstraintPool(((), (1,)), 1, 1), 1)

    def test_optimum_reverifies(self):
        pool = build_pool(8, 3)
        cert = lp_search(pool, 1)
        assert verify_certificate_finite(cert, pool).status == VALID

    def test_matches_vertex_enumeration_oracle(self):
        from sumint.certificates import _constraint_column

        for pool_args in ((4, 2), (6, 3), (8, 2)):
            pool = build_pool(*pool_args)
            cert = lp_search(pool, 1)
            rows = [
                tuple(_constraint_column(S, 1)) for S in pool.sets
            ]
            rhs = [F(1)] * len(rows)
            assert cert.c0 == lp_max_c0_by_vertex_enumeration(rows, rhs)

    def test_monotone_in_m(self):
        pool = build_pool(10, 4)
        assert lp_search(pool, 2).c0 >= lp_search(pool, 1).c0
        assert lp_search(pool, 3).c0 >= lp_search(pool, 2).c0

    def test_monotone_in_pool(self):
        small = lp_search(build_pool(8, 3), 1).c0
        large = lp_search(build_pool(12, 3), 1).c0
        assert large <= small

    def test_known_feasible_point_dominated(self):
        # any pool optimum dominates the globally-valid coefficients
        pool = build_pool(12, 4)
        assert lp_search(pool, 1).c0 >= F(17, 8)
