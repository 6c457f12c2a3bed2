"""Seeded random polynomials and tables for the randomized verification suites."""
from typing import Optional

import numpy as np

from permpoly.interpolation import FunctionTable
from permpoly.modular import ModulusLike, as_modulus
from permpoly.polyfn import Polynomial


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_residues(
    rng: np.random.Generator, p: ModulusLike, size: int
) -> "list[int]":
    modulus = as_modulus(p)
    # uint64 covers every admissible modulus, including those above 2**63
    return rng.integers(0, modulus.p, size=size, dtype=np.uint64).tolist()


def random_polynomial(
    rng: np.random.Generator, p: ModulusLike, max_degree: int
) -> Polynomial:
    """A polynomial with uniformly random coefficients up to x**max_degree."""
    modulus = as_modulus(p)
    return Polynomial(random_residues(rng, modulus, max_degree + 1), modulus)


def random_table(rng: np.random.Generator, p: ModulusLike) -> FunctionTable:
    modulus = as_modulus(p)
    return FunctionTable(random_residues(rng, modulus, modulus.p), modulus)


def random_permutation_table(
    rng: np.random.Generator, p: ModulusLike
) -> FunctionTable:
    modulus = as_modulus(p)
    return FunctionTable(rng.permutation(modulus.p).tolist(), modulus)


def planted_root_polynomial(
    rng: np.random.Generator, p: ModulusLike, max_degree: int
) -> "tuple[Polynomial, int]":
    """
    A random polynomial f of degree at most max_degree together with a root c.

    Built as (x - c) q for a random c and a random q of degree max_degree - 1.
    """
    modulus = as_modulus(p)
    c = random_residues(rng, modulus, 1)[0]
    quotient = random_polynomial(rng, modulus, max_degree - 1)
    return Polynomial.linear(c, modulus) * quotient, c
