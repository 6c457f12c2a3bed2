"""
Conversion between the two views of a function Z_p -> Z_p: its table of
values f(0), ..., f(p-1) and its canonical polynomial of degree <= p-1.
"""
import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple, Union

from permpoly.errors import MalformedInput
from permpoly.modular import ModulusLike, PrimeModulus, Residue, as_modulus, mod_pow
from permpoly.polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    poly_divmod,
    poly_eval,
    poly_power,
    scale,
)


@dataclass(frozen=True)
class FunctionTable:
    """The values f(0), ..., f(p-1) of a function on Z_p."""

    values: Tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        modulus = as_modulus(self.modulus)
        values = tuple(operator.index(v) for v in self.values)
        if len(values) != modulus.p:
            raise MalformedInput(
                f"A table over Z_{modulus.p} needs {modulus.p} values, "
                f"got {len(values)}"
            )
        for a, value in enumerate(values):
            if not 0 <= value < modulus.p:
                raise MalformedInput(
                    f"Table entry f({a}) = {value} is outside [0, {modulus.p - 1}]"
                )
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def identity(cls, p: ModulusLike) -> "FunctionTable":
        modulus = as_modulus(p)
        return cls(tuple(range(modulus.p)), modulus)

    @classmethod
    def zeros(cls, p: ModulusLike) -> "FunctionTable":
        modulus = as_modulus(p)
        return cls((0,) * modulus.p, modulus)

    @property
    def p(self) -> int:
        return self.modulus.p

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, a: int) -> Residue:
        return Residue(self.values[a], self.modulus)

    def swapped(self, a: int, b: int) -> "FunctionTable":
        """Copy of this table with the entries at positions a and b exchanged."""
        values = list(self.values)
        values[a], values[b] = values[b], values[a]
        return FunctionTable(tuple(values), self.modulus)


def table_of(f: Polynomial) -> FunctionTable:
    return FunctionTable(
        tuple(poly_eval(f, a).value for a in range(f.p)),
        f.modulus,
    )


@lru_cache(maxsize=32)
def _indicator_basis(modulus: PrimeModulus) -> "tuple[tuple[int, ...], ...]":
    """
    Coefficient rows of 1 - (x - a)**(p-1) for a = 0, ..., p-1.

    Row a is the polynomial that is 1 at a and 0 elsewhere. The binomial
    coefficients C(p-1, j) are built by the multiplicative recurrence, which
    only ever divides by j + 1 < p.
    """
    p = modulus.p
    n = p - 1
    binomials = [1] * p
    for j in range(n):
        binomials[j + 1] = binomials[j] * (n - j) * pow(j + 1, p - 2, p) % p

    rows = []
    for a in range(p):
        # 0**0 = 1, so the a = 0 row reduces to 1 - x**(p-1)
        neg_a = -a % p
        row = [-binomials[j] * pow(neg_a, n - j, p) % p for j in range(p)]
        row[0] = (row[0] + 1) % p
        rows.append(tuple(row))
    return tuple(rows)


def interpolate(t: FunctionTable) -> CanonicalPoly:
    """
    The canonical polynomial representing t.

    Expands f(x) = sum over a of f(a) (1 - (x - a)**(p-1)), which has degree
    at most p-1 by construction.
    """
    basis = _indicator_basis(t.modulus)
    coeffs = [0] * t.p
    for a, value in enumerate(t.values):
        if not value:
            continue
        for j, c in enumerate(basis[a]):
            coeffs[j] += value * c
    return CanonicalPoly(coeffs, t.modulus)


def linear_product(p: ModulusLike, roots: Iterable[int]) -> Polynomial:
    """Expanded product of (x - r) over the given roots."""
    modulus = as_modulus(p)
    product = Polynomial.constant(1, modulus)
    for r in roots:
        product = product * Polynomial.linear(r, modulus)
    return product


@lru_cache(maxsize=64)
def vanishing_poly(p: ModulusLike, include_zero: bool = True) -> Polynomial:
    """
    The product of (x - a) over all a in Z_p, or over the nonzero a only.

    Expanded explicitly; the result is asserted to equal x**p - x, or
    x**(p-1) - 1 respectively.
    """
    modulus = as_modulus(p)
    start = 0 if include_zero else 1
    product = linear_product(modulus, range(start, modulus.p))

    if include_zero:
        expected = Polynomial.monomial(1, modulus.p, modulus) - Polynomial.identity(
            modulus
        )
    else:
        expected = Polynomial.monomial(
            1, modulus.p - 1, modulus
        ) - Polynomial.constant(1, modulus)
    assert product == expected, f"Vanishing product over Z_{modulus.p} is {product}"
    return product


def functions_equal(f: Polynomial, g: Polynomial) -> bool:
    """
    Whether f and g represent the same function on Z_p.

    Decided twice: by comparing canonical forms, and by testing whether x**p - x
    divides f - g. The two answers must agree.
    """
    difference = f - g
    by_reduction = canonical_reduce(f) == canonical_reduce(g)
    _, remainder = poly_divmod(difference, vanishing_poly(f.modulus, True))
    by_division = remainder.is_zero
    assert (
        by_reduction == by_division
    ), f"Reduction and division disagree on {f} vs {g}"
    return by_reduction


def frobenius_rewrite(
    p: ModulusLike, a: Union[int, Residue], b: Union[int, Residue]
) -> Polynomial:
    """
    Raw expansion of (x - a)**p - (b - a)**(p-1) (x - a).

    For a != b this equals x**p - x coefficientwise.
    """
    modulus = as_modulus(p)
    shifted = Polynomial.linear(a, modulus)
    weight = mod_pow(operator.index(b) - operator.index(a), modulus.p - 1, modulus)
    return poly_power(shifted, modulus.p) - scale(shifted, weight)
