"""Exact cyclotomic arithmetic: field axioms, rationality, cosines, numerics."""

import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from su2k.cyclotomic import (
    Cyc,
    cos_pi_fraction,
    cyclotomic_polynomial,
    euler_phi,
    min_poly_2cos,
    minimal_polynomial,
    rational_linear_dependence,
    sqrt_rational,
    sqrt_squarefree,
    squarefree_decomposition,
)

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 30, 40, 60]


def small_cyc(order: int, rng: random.Random) -> Cyc:
    terms = {
        rng.randrange(order): Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        for _ in range(rng.randint(1, 4))
    }
    return Cyc.from_exponents(order, terms)


@st.composite
def cyc_values(draw):
    order = draw(st.sampled_from(ORDERS))
    n_terms = draw(st.integers(1, 3))
    terms = {}
    for _ in range(n_terms):
        e = draw(st.integers(0, order - 1))
        terms[e] = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
    return Cyc.from_exponents(order, terms)


class TestConstructors:
    def test_identity_root(self):
        assert Cyc.root_of_unity(1, 0) == 1

    def test_fourth_root(self):
        i = Cyc.root_of_unity(4, 1)
        assert i * i == -1
        assert i.approx() == pytest.approx(1j)

    def test_quarter_power_of_fifth_root(self):
        # zeta_20^5 = e^{i pi/2}
        z = Cyc.root_of_unity(20, 5)
        assert abs(z.approx() - 1j) < 1e-15

    def test_exponents_wrap(self):
        assert Cyc.root_of_unity(12, 14) == Cyc.root_of_unity(12, 2)


class TestCanonicalization:
    def test_idempotent(self):
        rng = random.Random(11)
        for _ in range(200):
            x = small_cyc(rng.choice(ORDERS), rng)
            again = Cyc.from_exponents(x.order, dict(enumerate(x.coeffs)))
            assert again.coeffs == x.coeffs

    def test_coefficients_span_power_basis_only(self):
        x = Cyc.root_of_unity(12, 7)
        assert len(x.coeffs) == euler_phi(12)


class TestFieldAxioms:
    @settings(max_examples=60, deadline=None)
    @given(cyc_values(), cyc_values(), cyc_values())
    def test_associativity_and_distributivity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x

    @settings(max_examples=60, deadline=None)
    @given(cyc_values())
    def test_multiplicative_inverse(self, x):
        if not x.is_zero():
            assert x * x.inverse() == 1

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Cyc.rational(0).inverse()

    def test_cross_order_arithmetic(self):
        # zeta_8 / zeta_4 = zeta_8^{-1}
        assert Cyc.root_of_unity(8) / Cyc.root_of_unity(4) == Cyc.root_of_unity(8, -1)


class TestRationality:
    def test_half_from_sixth_roots(self):
        assert (Cyc.root_of_unity(6) + Cyc.root_of_unity(6, -1)).as_rational() == 1

    def test_fifth_root_cosine_is_irrational(self):
        x = Cyc.root_of_unity(5) + Cyc.root_of_unity(5, -1)
        assert x.as_rational() is None
        # oracle: minimal polynomial is t^2 + t - 1
        assert minimal_polynomial(x) == (Fraction(-1), Fraction(1), Fraction(1))

    def test_root_of_unity_sum(self):
        total = sum((Cyc.root_of_unity(5, e) for e in range(1, 5)), Cyc.rational(0))
        assert total.as_rational() == -1

    def test_galois_route_agrees(self):
        rng = random.Random(202)
        for _ in range(1000):
            x = small_cyc(rng.choice(ORDERS), rng)
            assert x.as_rational() == x.as_rational_galois()


class TestCosines:
    def test_cos_pi_third(self):
        assert cos_pi_fraction(1, 3).as_rational() == Fraction(1, 2)

    def test_cos_pi_half(self):
        assert cos_pi_fraction(1, 2).as_rational() == 0

    def test_golden_difference(self):
        got = (cos_pi_fraction(1, 5) - cos_pi_fraction(2, 5)).as_rational()
        assert got == Fraction(1, 2)

    def test_float_agreement(self):
        for p, r in ((1, 5), (3, 7), (2, 9), (5, 12)):
            assert cos_pi_fraction(p, r).approx().real == pytest.approx(
                math.cos(p * math.pi / r), abs=1e-14
            )


class TestApprox:
    def test_rational_embeds_exactly(self):
        assert Cyc.rational(Fraction(3, 4)).approx() == 0.75 + 0j

    def test_cos_pi_fifth(self):
        value = cos_pi_fraction(1, 5).approx().real
        assert value == pytest.approx(0.8090169943749474, abs=1e-15)

    def test_product_within_ten_ulp_at_128_bits(self):
        rng = random.Random(5)
        with mpmath.workprec(160):
            ulp = mpmath.mpf(2) ** -128
            for _ in range(50):
                x = small_cyc(rng.choice(ORDERS), rng)
                y = small_cyc(rng.choice(ORDERS), rng)
                lhs = (x * y).approx(128)
                rhs = x.approx(128) * y.approx(128)
                scale = max(abs(lhs), abs(rhs), mpmath.mpf(1))
                assert abs(lhs - rhs) <= 10 * ulp * scale

    def test_high_precision_is_tighter(self):
        x = cos_pi_fraction(2, 7)
        with mpmath.workprec(300):
            err = abs(x.approx(256) - mpmath.cos(2 * mpmath.pi / 7))
            assert err < mpmath.mpf(2) ** -250


class TestNumberTheory:
    def test_cyclotomic_polynomials_match_sympy(self):
        import sympy

        t = sympy.Symbol("t")
        for n in (1, 2, 3, 4, 6, 8, 10, 12, 15, 24, 36, 105):
            ours = cyclotomic_polynomial(n)
            theirs = tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, t)).all_coeffs()))
            assert ours == theirs

    def test_euler_phi(self):
        assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_squarefree_decomposition(self):
        assert squarefree_decomposition(1) == (1, 1)
        assert squarefree_decomposition(72) == (6, 2)
        assert squarefree_decomposition(45) == (3, 5)

    def test_sqrt_gauss_sums(self):
        for f in (2, 3, 5, 6, 7, 10, 15, 30):
            root = sqrt_squarefree(f)
            assert (root * root).as_rational() == f
            assert root.approx().real == pytest.approx(math.sqrt(f), abs=1e-12)
            assert abs(root.approx().imag) < 1e-12

    def test_sqrt_rational(self):
        root = sqrt_rational(Fraction(9, 8))
        assert (root * root).as_rational() == Fraction(9, 8)
        assert root.approx().real == pytest.approx(math.sqrt(9 / 8), abs=1e-13)


class TestMinimalPolynomials:
    def test_min_poly_2cos_known(self):
        assert min_poly_2cos(5) == (Fraction(-1), Fraction(1), Fraction(1))
        assert min_poly_2cos(8) == (Fraction(-2), Fraction(0), Fraction(1))
        assert min_poly_2cos(12) == (Fraction(-3), Fraction(0), Fraction(1))
        assert min_poly_2cos(7) == (Fraction(-1), Fraction(-2), Fraction(1), Fraction(1))

    def test_min_poly_against_sympy(self):
        import sympy

        t = sympy.Symbol("t")
        for m in (5, 7, 9, 11, 15, 16):
            ours = min_poly_2cos(m)
            expr = 2 * sympy.cos(2 * sympy.pi / m)
            theirs = sympy.Poly(sympy.minimal_polynomial(expr, t), t).all_coeffs()
            monic = [sympy.Rational(c, theirs[0]) for c in theirs]
            assert list(ours) == [Fraction(int(c.p), int(c.q)) for c in reversed(monic)]

    def test_minimal_polynomial_degree_counts_conjugates(self):
        x = Cyc.root_of_unity(7) + Cyc.root_of_unity(7, -1)
        assert len(minimal_polynomial(x)) - 1 == euler_phi(7) // 2

    def test_minimal_polynomial_annihilates(self):
        x = cos_pi_fraction(2, 9) * 3 + Fraction(1, 2)
        poly = minimal_polynomial(x)
        acc = Cyc.rational(0)
        power = Cyc.rational(1)
        for coeff in poly:
            acc = acc + power * coeff
            power = power * x
        assert acc.is_zero()


class TestLinearDependence:
    def test_statement_like_relation(self):
        dep = rational_linear_dependence(
            [Cyc.rational(1), cos_pi_fraction(2, 10), cos_pi_fraction(4, 10)]
        )
        assert dep is not None
        c0, c1, c2 = dep
        value = c0 + c1 * cos_pi_fraction(2, 10) + c2 * cos_pi_fraction(4, 10)
        assert value.is_zero()
        assert (c1, c2) != (0, 0)

    def test_independent_triple(self):
        dep = rational_linear_dependence(
            [Cyc.rational(1), cos_pi_fraction(2, 7), cos_pi_fraction(2, 11)]
        )
        assert dep is None


class TestSerialization:
    def test_exact_str_roundtrip_shape(self):
        x = Cyc.from_exponents(8, {0: Fraction(1, 2), 2: Fraction(-3, 4)})
        assert x.exact_str() == "1/2 + -3/4*z^2; N=8"

    def test_zero(self):
        assert Cyc.rational(0).exact_str() == "0; N=1"
