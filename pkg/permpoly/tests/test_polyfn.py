from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from permpoly.errors import DivisionByZero, ModulusMismatch, NotARoot
from permpoly.interpolation import table_of
from permpoly.polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    lhopital_eval,
    poly_arith,
    poly_compose,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_power,
    synthetic_divide,
)
from permpoly.sampling import make_rng, planted_root_polynomial, random_polynomial
from permpoly.tests.util import SMALL_PRIMES, polynomials, polynomials_over_small_primes


class TestNormalization(TestCase):
    def test_trailing_zeros(self):
        f = Polynomial([1, 2, 0, 5, 10], 5)
        self.assertEqual(f.coeffs, (1, 2))
        self.assertEqual(f.degree, 1)

    def test_zero_has_no_degree(self):
        zero = Polynomial([5, 10, 0], 5)
        self.assertTrue(zero.is_zero)
        self.assertIsNone(zero.degree)
        self.assertEqual(zero, Polynomial.zero(5))

    def test_coefficient_access(self):
        f = Polynomial([-1, 0, 1], 5)
        self.assertEqual(f.coefficient(0), 4)
        self.assertEqual(f.coefficient(10), 0)

    def test_canonical_degree_bound(self):
        with self.assertRaises(AssertionError):
            CanonicalPoly([0, 0, 0, 1], 3)

    def test_modulus_mismatch(self):
        with self.assertRaises(ModulusMismatch):
            Polynomial([1], 5) + Polynomial([1], 7)


class TestArithmetic(TestCase):
    def test_examples(self):
        total = poly_arith("add", Polynomial([1, 2], 5), Polynomial([4, 3], 5))
        self.assertTrue(total.is_zero)
        product = poly_arith("mul", Polynomial([4, 1], 5), Polynomial([1, 1], 5))
        self.assertEqual(product.coeffs, (4, 0, 1))

    def test_unknown_operation(self):
        with self.assertRaises(AssertionError):
            poly_arith("div", Polynomial([1], 5), Polynomial([1], 5))

    @settings(derandomize=True, max_examples=200)
    @given(polynomials_over_small_primes(count=3))
    def test_ring_laws(self, polys):
        f, g, h = polys
        self.assertEqual(f + g, g + f)
        self.assertEqual(f * g, g * f)
        self.assertEqual((f + g) + h, f + (g + h))
        self.assertEqual((f * g) * h, f * (g * h))
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertEqual(f - f, Polynomial.zero(f.modulus))
        self.assertTrue((f * Polynomial.zero(f.modulus)).is_zero)

    @settings(derandomize=True, max_examples=100)
    @given(polynomials_over_small_primes(count=2))
    def test_evaluation_is_homomorphism(self, polys):
        f, g = polys
        for a in range(f.p):
            self.assertEqual((f * g)(a), f(a) * g(a))
            self.assertEqual((f + g)(a), f(a) + g(a))

    def test_large_products(self):
        """Long products take the numpy path; compare with the plain Python loop"""
        rng = make_rng(3)
        for p in (31, 65537, 4294967291):
            f = random_polynomial(rng, p, 300)
            g = random_polynomial(rng, p, 200)
            expected = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
            for i, a in enumerate(f.coeffs):
                for j, b in enumerate(g.coeffs):
                    expected[i + j] += a * b
            self.assertEqual((f * g).coeffs, Polynomial(expected, p).coeffs)


class TestEvaluation(TestCase):
    def test_examples(self):
        self.assertEqual(poly_eval(Polynomial([4, 0, 1], 5), 1), 0)
        self.assertEqual(poly_eval(Polynomial([1, 2, 1, 1], 5), 2), 2)
        for a in range(7):
            self.assertEqual(poly_eval(Polynomial.zero(7), a), 0)


class TestComposition(TestCase):
    def test_examples(self):
        square = Polynomial.monomial(1, 2, 5)
        shift = Polynomial([1, 1], 5)
        self.assertEqual(poly_compose(square, shift).coeffs, (1, 2, 1))

    @settings(derandomize=True, max_examples=100)
    @given(polynomials(7, max_degree=6))
    def test_identity_is_right_unit(self, f):
        x = Polynomial.identity(7)
        self.assertEqual(poly_compose(f, x, reduce=False), f)
        self.assertEqual(poly_compose(f, x), canonical_reduce(f))

    @settings(derandomize=True, max_examples=100)
    @given(polynomials(7, max_degree=10), polynomials(7, max_degree=10))
    def test_evaluation(self, f, g):
        for reduce in (True, False):
            composed = poly_compose(f, g, reduce=reduce)
            for a in range(7):
                self.assertEqual(composed(a), f(g(a)))

    def test_reduced_composition_is_canonical(self):
        f = Polynomial([1] * 12, 5)
        self.assertIsInstance(poly_compose(f, f), CanonicalPoly)


class TestCanonicalReduce(TestCase):
    def test_frobenius(self):
        for p in SMALL_PRIMES:
            reduced = canonical_reduce(Polynomial.monomial(1, p, p))
            self.assertEqual(reduced.coeffs, (0, 1))

    def test_constant_term_untouched(self):
        f = Polynomial([3, 0, 0, 0, 0, 0, 0, 0, 0, 1], 3)
        # x**9 folds to x**1 over Z_3
        self.assertEqual(canonical_reduce(f).coeffs, (0, 1))
        f = Polynomial([2, 0, 0, 1, 1], 3)
        self.assertEqual(canonical_reduce(f).coeffs, (2, 1, 1))

    def test_short_polynomials_unchanged(self):
        f = Polynomial([1, 2, 3, 4], 5)
        self.assertEqual(canonical_reduce(f).coeffs, f.coeffs)

    @settings(derandomize=True, max_examples=200)
    @given(st.sampled_from(SMALL_PRIMES).flatmap(lambda p: polynomials(p, 4 * p)))
    def test_same_function(self, f):
        reduced = canonical_reduce(f)
        self.assertLessEqual(len(reduced.coeffs), f.p)
        self.assertEqual(table_of(reduced), table_of(f))
        self.assertEqual(canonical_reduce(reduced), reduced)

    def test_same_function_large_prime(self):
        rng = make_rng(11)
        f = random_polynomial(rng, 31, 4 * 31)
        self.assertEqual(table_of(canonical_reduce(f)), table_of(f))


class TestPower(TestCase):
    @settings(derandomize=True, max_examples=50)
    @given(polynomials(5, max_degree=4), st.integers(min_value=0, max_value=12))
    def test_against_repeated_product(self, f, exponent):
        expected = Polynomial.constant(1, 5)
        for _ in range(exponent):
            expected = expected * f
        self.assertEqual(poly_power(f, exponent), expected)
        self.assertEqual(
            poly_power(f, exponent, reduce=True), canonical_reduce(expected)
        )

    def test_freshman_dream(self):
        """(x + 1)**p = x**p + 1 over Z_p"""
        for p in SMALL_PRIMES:
            expected = Polynomial.monomial(1, p, p) + Polynomial.constant(1, p)
            self.assertEqual(poly_power(Polynomial([1, 1], p), p), expected)


class TestDerivative(TestCase):
    def test_examples(self):
        self.assertEqual(poly_derivative(Polynomial([4, 0, 1], 5)).coeffs, (0, 2))
        for p in SMALL_PRIMES:
            self.assertTrue(poly_derivative(Polynomial.monomial(1, p, p)).is_zero)
        self.assertTrue(poly_derivative(Polynomial.constant(3, 5)).is_zero)


class TestDivision(TestCase):
    def test_synthetic_examples(self):
        quotient, remainder = synthetic_divide(Polynomial([4, 0, 1], 5), 1)
        self.assertEqual(quotient.coeffs, (1, 1))
        self.assertEqual(remainder, 0)

        quotient, remainder = synthetic_divide(Polynomial.zero(5), 3)
        self.assertTrue(quotient.is_zero)
        self.assertEqual(remainder, 0)

    @settings(derandomize=True, max_examples=200)
    @given(
        st.sampled_from(SMALL_PRIMES).flatmap(
            lambda p: st.tuples(
                polynomials(p), st.integers(min_value=0, max_value=p - 1)
            )
        )
    )
    def test_synthetic_reconstruction(self, args):
        f, c = args
        quotient, remainder = synthetic_divide(f, c)
        self.assertEqual(remainder, f(c))
        rebuilt = Polynomial.linear(c, f.modulus) * quotient + Polynomial.constant(
            remainder.value, f.modulus
        )
        self.assertEqual(rebuilt, f)

    @settings(derandomize=True, max_examples=200)
    @given(polynomials_over_small_primes(count=2))
    def test_long_division(self, polys):
        f, g = polys
        if g.is_zero:
            with self.assertRaises(DivisionByZero):
                poly_divmod(f, g)
            return
        quotient, remainder = poly_divmod(f, g)
        self.assertEqual(quotient * g + remainder, f)
        if not remainder.is_zero:
            self.assertLess(remainder.degree, g.degree)

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            poly_divmod(Polynomial([1, 1], 5), Polynomial.zero(5))


class TestLHopital(TestCase):
    def test_examples(self):
        self.assertEqual(lhopital_eval(Polynomial([4, 0, 1], 5), 1), 2)
        for p in SMALL_PRIMES:
            vanishing = Polynomial.monomial(1, p, p) - Polynomial.identity(p)
            self.assertEqual(lhopital_eval(vanishing, 0), p - 1)
        with self.assertRaises(NotARoot):
            lhopital_eval(Polynomial([1, 1], 5), 0)

    def test_planted_roots(self):
        rng = make_rng(7)
        for p in SMALL_PRIMES:
            for _ in range(100):
                f, c = planted_root_polynomial(rng, p, 3 * p)
                quotient, remainder = synthetic_divide(f, c)
                self.assertEqual(remainder, 0)
                self.assertEqual(lhopital_eval(f, c), poly_eval(quotient, c))
