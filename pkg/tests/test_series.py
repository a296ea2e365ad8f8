import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eopart.series import (
    Series,
    divide,
    eta_factor,
    eta_quotient_mod,
    extract_progression,
    invert,
    mod_reduce,
    mul,
    one,
    pentagonal_terms,
    power,
    substitute,
    theta,
)

small_series = st.builds(
    Series, st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=12)
)
unit_series = st.builds(
    lambda head, tail: Series([head] + tail),
    st.sampled_from([1, -1]),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=10),
)


class TestEtaFactor:
    def test_k1_order7(self):
        assert eta_factor(1, 7).coeffs == [1, -1, -1, 0, 0, 1, 0, 1]

    def test_k2_order3(self):
        assert eta_factor(2, 3).coeffs == [1, 0, -1, 0]

    def test_k5_order4_no_factor_contributes(self):
        assert eta_factor(5, 4).coeffs == [1, 0, 0, 0, 0]

    def test_constant_term_one(self):
        for k in (1, 2, 3, 4, 12):
            assert eta_factor(k, 30).c(0) == 1

    def test_bad_args(self):
        with pytest.raises(ValueError):
            eta_factor(0, 5)
        with pytest.raises(ValueError):
            eta_factor(1, -1)


class TestTheta:
    def test_square(self):
        assert theta("square", 4).coeffs == [1, 2, 0, 0, 2]

    def test_square_alt(self):
        assert theta("square_alt", 4).coeffs == [1, -2, 0, 0, 2]

    def test_pent3_alt_equals_eta(self):
        # second triple-product specialization, also an independent
        # summation over n in {-2..2}
        assert theta("pent3_alt", 5).coeffs == [1, -1, -1, 0, 0, 1]

    def test_octic_exponents(self):
        s = theta("octic", 14)
        assert [n for n, v in enumerate(s.coeffs) if v] == [0, 2, 4, 10, 14]

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            theta("cubic", 4)


class TestMul:
    def test_truncates_to_shorter(self):
        r = mul(Series([1, 1]), Series([1, -1]))
        assert r.coeffs == [1, 0] and r.order == 1

    def test_shift(self):
        assert mul(Series([1, 0, 0]), Series([0, 0, 1])).coeffs == [0, 0, 1]

    def test_identity_factor(self):
        t = theta("square", 4)
        assert mul(t, one(4)) == t


class TestPower:
    def test_zero_exponent(self):
        assert power(Series([1, 1]), 0).coeffs == [1, 0]

    def test_binomial(self):
        assert power(Series([1, 1, 0]), 2).coeffs == [1, 2, 1]

    def test_eta_square_head(self):
        assert power(eta_factor(1, 5), 2).coeffs[:3] == [1, -2, -1]


class TestInvert:
    def test_geometric(self):
        assert invert(Series([1, -1, 0])).coeffs == [1, 1, 1]

    def test_negative_unit(self):
        assert invert(Series([-1, 0])).coeffs == [-1, 0]

    def test_inverse_eta_square(self):
        assert invert(power(eta_factor(2, 4), 2)).coeffs == [1, 0, 2, 0, 5]

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError, match="non-invertible"):
            invert(Series([2, 1]))

    @given(unit_series)
    def test_two_sided_inverse(self, a):
        assert mul(a, invert(a)) == one(a.order)


class TestSubstitute:
    def test_basic(self):
        assert substitute(Series([1, 2, 3]), 2).coeffs == [1, 0, 2]

    def test_identity(self):
        a = Series([3, 1, 4, 1, 5])
        assert substitute(a, 1) == a

    def test_eta_relation(self):
        assert substitute(eta_factor(1, 12), 12) == eta_factor(12, 12)

    @given(small_series, small_series, st.integers(min_value=1, max_value=4))
    @settings(max_examples=60)
    def test_ring_homomorphism(self, a, b, m):
        lhs = substitute(mul(a, b), m)
        rhs = mul(substitute(a, m), substitute(b, m))
        assert lhs == rhs


class TestExtractProgression:
    def test_single_hit(self):
        assert extract_progression(Series([0, 1, 2, 3, 4, 5]), 2, 12) == [2]

    def test_whole_series(self):
        assert extract_progression(Series([7]), 0, 1) == [7]

    def test_bad_residue(self):
        with pytest.raises(ValueError):
            extract_progression(Series([1, 2]), 2, 2)


class TestModReduce:
    def test_least_nonnegative(self):
        assert mod_reduce(Series([-2, 5, 4]), 4).coeffs == [2, 1, 0]

    def test_zero(self):
        assert mod_reduce(Series([0]), 2).coeffs == [0]

    def test_theta_alt(self):
        assert mod_reduce(theta("square_alt", 4), 4).coeffs == [1, 2, 0, 0, 2]

    @given(small_series, small_series, st.integers(min_value=2, max_value=9))
    @settings(max_examples=60)
    def test_commutes_with_mul(self, a, b, m):
        assert mod_reduce(mul(a, b), m) == mod_reduce(
            mul(mod_reduce(a, m), mod_reduce(b, m)), m
        )


class TestTripleProductIdentities:
    @pytest.mark.parametrize("order", [50, 200, 600])
    def test_square_alt_identity(self, order):
        lhs = mul(theta("square_alt", order), eta_factor(2, order))
        assert lhs == power(eta_factor(1, order), 2)

    @pytest.mark.parametrize("order", [50, 200, 600])
    def test_pent3_alt_identity(self, order):
        assert theta("pent3_alt", order) == eta_factor(1, order)


class TestDivide:
    @given(small_series, unit_series)
    @settings(max_examples=60)
    def test_mul_round_trip(self, num, den):
        q = divide(num, den)
        n = q.order
        assert mul(q, den).coeffs == num.coeffs[: n + 1]


class TestModPath:
    def test_pentagonal_matches_product(self):
        # Euler's pentagonal expansion against the honest product
        for k in (1, 2, 4):
            exps, signs = pentagonal_terms(k, 400)
            dense = [0] * 401
            for e, s in zip(exps, signs):
                dense[e] += s
            assert dense == eta_factor(k, 400).coeffs

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 8])
    def test_quotient_matches_exact(self, m):
        exact = divide(
            divide(power(eta_factor(4, 500), 3), eta_factor(2, 500)),
            eta_factor(2, 500),
        )
        arr = eta_quotient_mod({4: 3}, {2: 2}, 500, m)
        assert [v % m for v in exact.coeffs] == arr.tolist()

    def test_plain_product_mod(self):
        exact = mul(power(eta_factor(2, 300), 2), eta_factor(4, 300))
        arr = eta_quotient_mod({2: 2, 4: 1}, {}, 300, 4)
        assert [v % 4 for v in exact.coeffs] == arr.tolist()


class TestSeriesInvariants:
    def test_length_matches_order(self):
        with pytest.raises(ValueError):
            Series([1, 2], order=5)

    def test_coeff_beyond_order(self):
        with pytest.raises(IndexError):
            Series([1, 2]).c(2)

    def test_truncate_cannot_extend(self):
        with pytest.raises(ValueError):
            Series([1, 2]).truncate(5)
