import itertools
from unittest import TestCase

from permpoly.errors import KOutOfRange, MalformedInput
from permpoly.interpolation import FunctionTable, interpolate
from permpoly.permutations.analysis import (
    canonical_degree_via_moments,
    is_permutation,
    is_permutation_polynomial,
    moment,
    moment_profile,
    permutation_polynomial,
)
from permpoly.polyfn import Polynomial
from permpoly.sampling import make_rng, random_permutation_table, random_table


class TestIsPermutation(TestCase):
    def test_examples(self):
        self.assertTrue(is_permutation(FunctionTable((1, 0, 2, 3, 4), 5)))
        self.assertFalse(is_permutation(FunctionTable((0, 0, 2), 3)))
        self.assertTrue(is_permutation(FunctionTable.identity(11)))

    def test_polynomials(self):
        # x**3 permutes Z_5 since gcd(3, 4) = 1, x**2 does not
        self.assertTrue(is_permutation_polynomial(Polynomial.monomial(1, 3, 5)))
        self.assertFalse(is_permutation_polynomial(Polynomial.monomial(1, 2, 5)))

    def test_permutation_polynomial(self):
        f = permutation_polynomial(FunctionTable((1, 0, 2, 3, 4), 5))
        self.assertEqual(f.coeffs, (1, 2, 1, 1))
        with self.assertRaises(MalformedInput):
            permutation_polynomial(FunctionTable((0, 0, 2), 3))


class TestMoments(TestCase):
    def test_examples(self):
        t = FunctionTable((1, 0, 2, 3, 4), 5)
        self.assertEqual(moment(t, 0), 0)
        self.assertEqual(moment(t, 1), 4)
        self.assertEqual(moment(FunctionTable.zeros(5), 0), 0)

    def test_out_of_range(self):
        t = FunctionTable.identity(5)
        for k in (-1, 5, 100):
            with self.assertRaises(KOutOfRange):
                moment(t, k)

    def test_profile(self):
        profile = moment_profile(FunctionTable.identity(5))
        self.assertEqual(profile.moments, (0, 0, 0, 4, 0))
        self.assertEqual(profile.first_nonzero, 3)
        self.assertEqual(profile.degree, 1)

        zero = moment_profile(FunctionTable.zeros(5))
        self.assertIsNone(zero.first_nonzero)
        self.assertIsNone(zero.degree)

    def test_permutations_have_vanishing_zeroth_moment(self):
        for p in (3, 5, 7):
            for values in itertools.permutations(range(p)):
                self.assertEqual(moment(FunctionTable(values, p), 0), 0)

        rng = make_rng(1)
        for p in (11, 13, 101):
            for _ in range(50):
                self.assertEqual(moment(random_permutation_table(rng, p), 0), 0)


class TestDegreeViaMoments(TestCase):
    def test_examples(self):
        self.assertEqual(
            canonical_degree_via_moments(FunctionTable((1, 0, 2, 3, 4), 5)), 3
        )
        self.assertEqual(canonical_degree_via_moments(FunctionTable.identity(5)), 1)
        self.assertIsNone(canonical_degree_via_moments(FunctionTable.zeros(5)))

    def test_constant_functions(self):
        for c in range(1, 7):
            t = FunctionTable((c,) * 7, 7)
            self.assertEqual(canonical_degree_via_moments(t), 0)

    def test_exhaustive(self):
        for p in (2, 3, 5):
            for values in itertools.product(range(p), repeat=p):
                t = FunctionTable(values, p)
                self.assertEqual(canonical_degree_via_moments(t), interpolate(t).degree)

    def test_random(self):
        rng = make_rng(2)
        for p in (7, 11):
            for _ in range(10000):
                t = random_table(rng, p)
                self.assertEqual(canonical_degree_via_moments(t), interpolate(t).degree)
