import itertools
from unittest import TestCase

from hypothesis import given, settings

from permpoly.errors import MalformedInput
from permpoly.interpolation import (
    FunctionTable,
    frobenius_rewrite,
    functions_equal,
    interpolate,
    linear_product,
    table_of,
    vanishing_poly,
)
from permpoly.permutations.transpositions import (
    chen_mullen_polynomial,
    transposition_simple,
)
from permpoly.polyfn import Polynomial, canonical_reduce, poly_power
from permpoly.sampling import make_rng, random_table
from permpoly.tests.util import SMALL_PRIMES, polynomials_over_small_primes


class TestFunctionTable(TestCase):
    def test_validation(self):
        with self.assertRaises(MalformedInput):
            FunctionTable((0, 1), 3)
        with self.assertRaises(MalformedInput):
            FunctionTable((0, 1, 3), 3)
        with self.assertRaises(MalformedInput):
            FunctionTable((0, -1, 2), 3)

    def test_access(self):
        t = FunctionTable((1, 0, 2, 3, 4), 5)
        self.assertEqual(len(t), 5)
        self.assertEqual(t[0], 1)
        self.assertEqual(list(t), [1, 0, 2, 3, 4])
        self.assertEqual(t.swapped(0, 1), FunctionTable.identity(5))


class TestTableOf(TestCase):
    def test_examples(self):
        self.assertEqual(table_of(Polynomial.identity(3)).values, (0, 1, 2))
        self.assertEqual(
            table_of(Polynomial.monomial(1, 4, 5)).values, (0, 1, 1, 1, 1)
        )
        self.assertEqual(
            table_of(Polynomial([1, 2, 1, 1], 5)).values, (1, 0, 2, 3, 4)
        )


class TestInterpolate(TestCase):
    def test_examples(self):
        self.assertEqual(interpolate(FunctionTable((0, 1, 2), 3)).coeffs, (0, 1))
        self.assertEqual(
            interpolate(FunctionTable((1, 0, 2, 3, 4), 5)).coeffs, (1, 2, 1, 1)
        )
        self.assertTrue(interpolate(FunctionTable.zeros(7)).is_zero)

    def test_exhaustive_round_trip(self):
        """Every table over Z_2, Z_3 and Z_5 comes back from its interpolant"""
        for p in (2, 3, 5):
            for values in itertools.product(range(p), repeat=p):
                t = FunctionTable(values, p)
                f = interpolate(t)
                self.assertLessEqual(len(f.coeffs), p)
                self.assertEqual(table_of(f), t)

    def test_random_tables(self):
        rng = make_rng(5)
        for p in (7, 11, 31, 97):
            for _ in range(20):
                t = random_table(rng, p)
                self.assertEqual(table_of(interpolate(t)), t)

    def test_indicator_functions(self):
        """The table with a single 1 at a interpolates to 1 - (x - a)**(p-1)"""
        for p in SMALL_PRIMES:
            for a in range(p):
                values = [0] * p
                values[a] = 1
                expected = Polynomial.constant(1, p) - poly_power(
                    Polynomial.linear(a, p), p - 1
                )
                self.assertEqual(interpolate(FunctionTable(values, p)), expected)

    @settings(derandomize=True, max_examples=100)
    @given(polynomials_over_small_primes(count=1, max_degree=40))
    def test_interpolate_inverts_table_of(self, polys):
        (f,) = polys
        self.assertEqual(interpolate(table_of(f)), canonical_reduce(f))


class TestVanishingPoly(TestCase):
    def test_examples(self):
        self.assertEqual(vanishing_poly(3, True).coeffs, (0, 2, 0, 1))
        self.assertEqual(vanishing_poly(3, False).coeffs, (2, 0, 1))
        self.assertEqual(vanishing_poly(2, True).coeffs, (0, 1, 1))

    def test_vanishes_everywhere(self):
        for p in SMALL_PRIMES + (31,):
            self.assertTrue(all(v == 0 for v in table_of(vanishing_poly(p, True))))
            without_zero = table_of(vanishing_poly(p, False)).values
            self.assertNotEqual(without_zero[0], 0)
            self.assertTrue(all(v == 0 for v in without_zero[1:]))

    def test_linear_product(self):
        self.assertEqual(linear_product(5, []), Polynomial.constant(1, 5))
        self.assertEqual(linear_product(5, [1, 4]).coeffs, (4, 0, 1))


class TestFunctionsEqual(TestCase):
    def test_examples(self):
        for p in SMALL_PRIMES:
            self.assertTrue(
                functions_equal(Polynomial.monomial(1, p, p), Polynomial.identity(p))
            )
        self.assertFalse(
            functions_equal(Polynomial.monomial(1, 2, 5), Polynomial.identity(5))
        )

    def test_chen_mullen_difference_vanishes(self):
        raw = chen_mullen_polynomial(5, reduce=False)
        self.assertEqual(raw.degree, 27)
        self.assertTrue(functions_equal(raw, transposition_simple(5)))

    @settings(derandomize=True, max_examples=100)
    @given(polynomials_over_small_primes(count=2, max_degree=30))
    def test_agrees_with_tables(self, polys):
        f, g = polys
        self.assertTrue(functions_equal(f, f))
        self.assertEqual(functions_equal(f, g), table_of(f) == table_of(g))


class TestFrobeniusRewrite(TestCase):
    def test_distinct_points(self):
        for p in SMALL_PRIMES:
            vanishing = vanishing_poly(p, True)
            for a, b in itertools.permutations(range(p), 2):
                self.assertEqual(frobenius_rewrite(p, a, b), vanishing)

    def test_coinciding_points(self):
        """With a = b the correction term vanishes and only (x - a)**p is left"""
        rewrite = frobenius_rewrite(5, 2, 2)
        self.assertEqual(rewrite.coeffs, (3, 0, 0, 0, 0, 1))
