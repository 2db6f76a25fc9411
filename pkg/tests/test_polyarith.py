"""Iterate polynomials, resultants, discriminant shapes, mod-p splitting.

Dual routes everywhere: the subresultant chain is checked against both
the CRT route and a Fraction Sylvester determinant; discriminant shapes
against direct discriminants at specialized points; mod-p factor degree
lists against root counting and the factor-count parity law.
"""

import random
from fractions import Fraction

import pytest

import oracles
from imgroups.errors import (
    BadPrimeError,
    ExcludedBasePointError,
    ResourceLimitError,
)
from imgroups.polyarith import (
    IntPoly,
    X,
    discriminant_shape,
    factor_degrees_mod_p,
    iterate_metadata,
    iterate_pair,
    primes_up_to,
    resultant,
    resultant_modular,
    specialize_numerator,
    squarefree_part,
)


class TestIntPoly:
    def test_basic_arithmetic(self):
        f = IntPoly((1, 2, 3))
        g = IntPoly((-1, 1))
        assert (f + g).coeffs == (0, 3, 3)
        assert (f - g).coeffs == (2, 1, 3)
        assert (f * g).coeffs == (-1, -1, -1, 3)
        assert f.square().coeffs == (f * f).coeffs
        assert f(2) == 1 + 4 + 12
        assert f.derivative().coeffs == (2, 6)
        assert (X * X - IntPoly((2,))).coeffs == (-2, 0, 1)

    def test_normalization(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly(()).is_zero
        with pytest.raises(ValueError):
            IntPoly((1.5,))

    def test_content_primitive(self):
        f = IntPoly((6, -9, 12))
        assert f.content() == 3
        assert f.primitive().coeffs == (2, -3, 4)

    def test_text_roundtrip(self):
        rng = random.Random(3)
        for _ in range(50):
            f = IntPoly([rng.randint(-99, 99) for _ in range(rng.randint(0, 8))])
            assert IntPoly.from_text(f.to_text()).coeffs == f.coeffs


class TestIterates:
    def test_base_case(self):
        it = iterate_pair(1)
        assert it.g.coeffs == (2,)
        assert it.h.coeffs == (1, -2, 1)

    def test_recursion_shape(self):
        for n in range(2, 9):
            it = iterate_pair(n)
            assert it.g.degree() == 1 << n
            assert it.h.degree() == 1 << n
            assert it.g.coeffs[-1] == 2
            assert it.h.coeffs[-1] == 1

    def test_functional_identity(self):
        # g_n/h_n really is the n-fold composite of x -> 2/(x-1)^2,
        # checked by exact evaluation at rational points
        for x0 in (Fraction(3), Fraction(-2), Fraction(7, 5)):
            value = x0
            for n in range(1, 6):
                value = 2 / (value - 1) ** 2
                it = iterate_pair(n)
                assert Fraction(it.g(x0), it.h(x0)) == value

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            iterate_pair(0)
        with pytest.raises(ValueError):
            iterate_pair(9)

    def test_metadata_wronskian(self):
        # frozen signs at the bottom, absolute value 4^n throughout
        assert iterate_metadata(1).wronskian_lc == -4
        assert iterate_metadata(2).wronskian_lc == -16
        assert iterate_metadata(1).wronskian_degree == 1
        assert iterate_metadata(2).wronskian_degree == 5
        for n in range(1, 7):
            meta = iterate_metadata(n)
            assert abs(meta.wronskian_lc) == 4 ** n
            it = iterate_pair(n)
            w = it.h * it.g.derivative() - it.g * it.h.derivative()
            assert w.coeffs[-1] == meta.wronskian_lc
            assert w.degree() == meta.wronskian_degree


class TestResultants:
    def test_frozen_value(self):
        it = iterate_pair(2)
        assert resultant(it.g, it.h) == 4096
        assert resultant_modular(it.g, it.h) == 4096
        assert oracles.sylvester_resultant(it.g.coeffs, it.h.coeffs) == 4096

    def test_three_routes_random(self):
        rng = random.Random(101)
        for _ in range(40):
            f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 6))])
            g = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 6))])
            if f.is_zero or g.is_zero:
                continue
            r = resultant(f, g)
            assert r == resultant_modular(f, g)
            assert r == oracles.sylvester_resultant(f.coeffs, g.coeffs)

    def test_swap_sign_law(self):
        rng = random.Random(7)
        for _ in range(30):
            f = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))])
            g = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(2, 5))])
            if f.degree() < 1 or g.degree() < 1:
                continue
            sign = (-1) ** (f.degree() * g.degree())
            assert resultant(f, g) == sign * resultant(g, f)

    def test_constant_cases(self):
        f = IntPoly((1, 0, 3))
        assert resultant(f, IntPoly((5,))) == 25
        assert resultant(IntPoly((5,)), f) == 25

    def test_iterate_resultants_power_of_two(self):
        for n in range(2, 5):
            for k in range(2, n + 1):
                r = resultant(iterate_pair(k).g, iterate_pair(n).h)
                v = abs(r)
                assert v & (v - 1) == 0 and v  # a pure power of 2

    def test_roots_route_on_simple_poly(self):
        num = specialize_numerator(2, Fraction(5))
        d = num.derivative()
        exact = resultant(num, d)
        approx = oracles.resultant_via_roots(list(num.coeffs), list(d.coeffs))
        assert abs(complex(exact) - approx) <= 1e-25 * abs(complex(exact))


class TestDiscriminantShapes:
    def test_frozen_shapes(self):
        expected = {
            1: (1, 3, 1, 0),
            2: (-1, 16, 3, 1),
            3: (1, 68, 6, 4),
            4: (1, 272, 12, 10),
        }
        for n, (sign, c, a, b) in expected.items():
            s = discriminant_shape(n)
            assert (s.sign, s.c, s.a, s.b) == (sign, c, a, b)

    def test_str_format(self):
        assert str(discriminant_shape(1)) == "+2^3 * t^1 * (2-t)^0"
        assert str(discriminant_shape(2)) == "-2^16 * t^3 * (2-t)^1"

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("tau", [3, 5, 7, 11])
    def test_matches_direct_discriminant(self, n, tau):
        # oracle route: Sylvester discriminant of the specialized numerator
        s = discriminant_shape(n)
        num = specialize_numerator(n, Fraction(tau))
        direct = oracles.discriminant_via_sylvester(num.coeffs)
        assert direct.denominator == 1
        assert direct.numerator == s.sign * 2 ** s.c * tau ** s.a * (2 - tau) ** s.b

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            discriminant_shape(0)
        with pytest.raises(ValueError):
            discriminant_shape(6)


class TestSpecialization:
    def test_level1_example(self):
        assert specialize_numerator(1, Fraction(5)).coeffs == (-3, 10, -5)

    def test_excluded_points(self):
        for bad in (Fraction(0), Fraction(2)):
            with pytest.raises(ExcludedBasePointError):
                specialize_numerator(2, bad)

    def test_rational_point_is_primitive(self):
        num = specialize_numerator(2, Fraction(9, 4))
        assert num.content() == 1
        assert num.degree() == 4
        # root set is unchanged by the rescaling, so the square class
        # of the discriminant is what specialization preserves
        d1 = oracles.discriminant_via_sylvester(num.coeffs)
        assert d1 != 0


class TestFactorDegrees:
    def test_known_splitting(self):
        f = X * X - IntPoly((2,))
        assert factor_degrees_mod_p(f, 7) == (1, 1)   # 2 is a square mod 7
        assert factor_degrees_mod_p(f, 11) == (2,)    # 2 is not a square mod 11

    def test_non_squarefree_returns_none(self):
        f = IntPoly((1, -2, 1))  # (x-1)^2
        assert factor_degrees_mod_p(f, 7) is None

    def test_bad_primes(self):
        f = specialize_numerator(1, Fraction(5))
        # a fine prime that this polynomial cannot use
        with pytest.raises(BadPrimeError):
            factor_degrees_mod_p(f, 5)  # divides the leading coefficient
        # not odd primes at all: plain bad input
        with pytest.raises(ValueError):
            factor_degrees_mod_p(f, 2)
        with pytest.raises(ValueError):
            factor_degrees_mod_p(f, 9)

    def test_degree_lists_against_roots_and_parity(self):
        # number of linear factors equals the root count; the total factor
        # count matches the discriminant's quadratic character
        num = specialize_numerator(3, Fraction(5))
        for p in primes_up_to(60):
            if p == 2 or num.coeffs[-1] % p == 0:
                continue
            degs = factor_degrees_mod_p(num, p)
            if degs is None:
                continue
            assert sum(degs) == num.degree()
            roots = oracles.roots_mod_p(num.coeffs, p)
            assert degs.count(1) == len(roots)
            assert oracles.stickelberger_factor_parity(num.coeffs, p, degs)


class TestIntegerHelpers:
    def test_primes_up_to(self):
        assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert len(primes_up_to(10**4)) == 1229

    def test_squarefree_part(self):
        rng = random.Random(9)
        for _ in range(200):
            n = rng.randint(-5000, 5000)
            if n == 0:
                continue
            assert squarefree_part(n) == oracles.squarefree_part_slow(n)
        assert squarefree_part(Fraction(9, 4)) == 1
        assert squarefree_part(Fraction(-8, 3)) == -6
        assert squarefree_part(Fraction(5, 7)) == 35

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(0)

    def test_factoring_limit(self):
        # 10^10+19 and 10^10+33 are prime; their product exceeds the
        # certified-factorization bound and must be refused, not guessed
        n = (10**10 + 19) * (10**10 + 33)
        with pytest.raises(ResourceLimitError):
            squarefree_part(n)
