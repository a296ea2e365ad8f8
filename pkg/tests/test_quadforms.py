import pytest

from eopart.quadforms import (
    A_coeff,
    A_direct,
    Mod4Class,
    ReducedForm,
    a_coeff,
    b_coeff,
    b_series,
    b_series_theta,
    class_number,
    classify_mod4,
    f_series,
    r113,
    r133,
    reduced_forms,
)


class TestRepresentationNumbers:
    def test_r113_values(self):
        assert r113(0) == 1
        assert r113(2) == 4  # (+-1, +-1, 0)
        assert r113(14) == 8  # (+-1, +-1, +-2)

    def test_r133_values(self):
        assert r133(0) == 1
        assert r133(1) == 2
        assert r133(6) == r113(2) == 4

    def test_scaling_identity(self):
        # solutions of x^2+y^2+3z^2 = n biject with x^2+3y^2+3z^2 = 3n
        for n in range(80):
            assert r133(3 * n) == r113(n), n

    def test_brute_force_cross_check(self):
        import itertools

        for n in range(40):
            count = sum(
                1
                for x, y, z in itertools.product(range(-7, 8), repeat=3)
                if x * x + y * y + 3 * z * z == n
            )
            assert r113(n) == count, n


class TestACoefficients:
    def test_A2(self):
        assert A_coeff(2) == 1

    def test_off_support(self):
        assert A_coeff(3) == 0
        assert A_coeff(8) == 0

    def test_A14(self):
        assert A_coeff(14) == 2

    def test_direct_agrees_with_quarter_r113(self):
        for n in range(2, 1000):
            if n % 12 == 2:
                assert 4 * A_direct(n) == r113(n), n
                assert A_coeff(n) == A_direct(n), n
            else:
                assert A_direct(n) == 0, n

    def test_a_coeff(self):
        assert a_coeff(0) == 1  # A(2)
        assert a_coeff(1) == 2  # A(14)

    def test_f_series_matches_lattice(self):
        f = f_series(40)
        for n in range(41):
            assert f.c(n) == A_direct(12 * n + 2), n


class TestBCoefficients:
    def test_b0_b1(self):
        assert b_coeff(0) == 1
        assert b_coeff(1) == -2

    def test_eta_and_theta_routes_agree(self):
        assert b_series(300) == b_series_theta(300)

    def test_a_eq_b_mod4_head(self):
        f = f_series(50)
        b = b_series(50)
        assert all((f.c(n) - b.c(n)) % 4 == 0 for n in range(51))


class TestClassNumbers:
    def test_h3(self):
        assert reduced_forms(-3) == [ReducedForm(1, 1, 1)]
        assert class_number(3) == 1

    def test_h6(self):
        assert {(f.a, f.b, f.c) for f in reduced_forms(-24)} == {(1, 0, 6), (2, 0, 3)}
        assert class_number(6) == 2

    def test_h42(self):
        assert class_number(42) == 4
        # Lemma 2.1 instance: r113(14) = 2 h(-42)
        assert r113(14) == 2 * class_number(42)

    def test_known_small_field_values(self):
        # h(-m) for squarefree m, from standard tables
        known = {1: 1, 2: 1, 5: 2, 7: 1, 10: 2, 11: 1, 13: 2, 15: 2, 23: 3, 47: 5}
        for m, h in known.items():
            assert class_number(m) == h, m

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError, match="squarefree"):
            class_number(12)

    def test_rejects_bad_discriminant(self):
        with pytest.raises(ValueError):
            reduced_forms(-6)
        with pytest.raises(ValueError):
            reduced_forms(5)

    def test_reduced_form_validation(self):
        with pytest.raises(ValueError):
            ReducedForm(2, -2, 3)  # |b| = a needs b >= 0
        with pytest.raises(ValueError):
            ReducedForm(2, 0, 1)  # a > c
        with pytest.raises(ValueError):
            ReducedForm(2, 2, 2)  # imprimitive


class TestClassification:
    def test_n2_odd(self):
        cert = classify_mod4(2)
        assert cert.cls is Mod4Class.ODD and cert.witness == (1,)
        assert cert.check()

    def test_n14_two_mod_four(self):
        cert = classify_mod4(14)
        assert cert.cls is Mod4Class.TWO_MOD_FOUR
        assert cert.witness == (7, 0, 1)
        assert cert.check()

    def test_n170_zero_mod_four(self):
        # 170/2 = 5*17: two odd-exponent primes
        cert = classify_mod4(170)
        assert cert.cls is Mod4Class.ZERO_MOD_FOUR
        assert A_direct(170) % 4 == 0

    def test_higher_power_witness(self):
        # n = 2 * 7^5: exponent 5 = 4+1, p = 7 = 7 mod 8
        n = 2 * 7**5
        assert n % 12 == 2
        cert = classify_mod4(n)
        assert cert.cls is Mod4Class.TWO_MOD_FOUR
        assert cert.witness == (7, 1, 1)
        assert cert.check()

    def test_rejects_off_support(self):
        with pytest.raises(ValueError):
            classify_mod4(15)

    def test_matches_lattice_count(self):
        for n in range(2, 3000, 12):
            cert = classify_mod4(n)
            a4 = A_direct(n) % 4
            want = {
                Mod4Class.ODD: a4 % 2 == 1,
                Mod4Class.TWO_MOD_FOUR: a4 == 2,
                Mod4Class.ZERO_MOD_FOUR: a4 == 0,
            }[cert.cls]
            assert want, (n, cert, a4)
            assert cert.check()
