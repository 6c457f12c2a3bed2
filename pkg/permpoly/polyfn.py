"""
Polynomial arithmetic over Z_p.

Coefficients are stored in ascending order of powers, so coeffs[i] is the
coefficient of x**i. A Polynomial is always normalized: coefficients are
reduced into [0, p-1] and trailing zeros are stripped, so the zero polynomial
has an empty coefficient tuple and no degree.
"""
import operator
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from permpoly.errors import DivisionByZero, NotARoot
from permpoly.modular import (
    ModulusLike,
    PrimeModulus,
    Residue,
    as_modulus,
    check_same_modulus,
)

# Below this many coefficient products, plain Python loops beat numpy's call overhead.
_NUMPY_MIN_PRODUCTS = 1024
_INT64_LIMIT = 1 << 63


@dataclass(frozen=True, eq=False)
class Polynomial:
    coeffs: Tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        modulus = as_modulus(self.modulus)
        p = modulus.p
        coeffs = [operator.index(c) % p for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def zero(cls, p: ModulusLike) -> "Polynomial":
        return cls((), p)

    @classmethod
    def constant(cls, c: int, p: ModulusLike) -> "Polynomial":
        return cls((c,), p)

    @classmethod
    def identity(cls, p: ModulusLike) -> "Polynomial":
        """The polynomial x."""
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, c: int, exponent: int, p: ModulusLike) -> "Polynomial":
        return cls((0,) * exponent + (c,), p)

    @classmethod
    def linear(cls, root: int, p: ModulusLike) -> "Polynomial":
        """The monic linear factor x - root."""
        return cls((-operator.index(root), 1), p)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> Optional[int]:
        """Degree of the polynomial, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Residue:
        value = self.coeffs[i] if i < len(self.coeffs) else 0
        return Residue(value, self.modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.modulus.p, self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_arith("add", self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_arith("sub", self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_arith("mul", self, other)

    def __neg__(self) -> "Polynomial":
        return scale(self, -1)

    def __call__(self, a: Union[int, Residue]) -> Residue:
        return poly_eval(self, a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)} mod {self.p})"


@dataclass(frozen=True, eq=False, repr=False)
class CanonicalPoly(Polynomial):
    """
    A polynomial of degree at most p-1.

    Every function Z_p -> Z_p has exactly one such representative.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        assert (
            len(self.coeffs) <= self.p
        ), f"Degree {self.degree} exceeds p-1 = {self.p - 1}; not canonical"

    @property
    def inner(self) -> Polynomial:
        return Polynomial(self.coeffs, self.modulus)


def _shared_modulus(f: Polynomial, g: Polynomial) -> PrimeModulus:
    check_same_modulus(f.modulus, g.modulus)
    return f.modulus


def _convolve(a: Sequence[int], b: Sequence[int], p: int) -> "list[int]":
    """Schoolbook product of two reduced coefficient sequences, reduced mod p."""
    if not a or not b:
        return []

    # numpy is exact as long as no accumulated sum can leave int64
    fits_int64 = (p - 1) ** 2 * min(len(a), len(b)) < _INT64_LIMIT
    if fits_int64 and len(a) * len(b) >= _NUMPY_MIN_PRODUCTS:
        product = np.convolve(
            np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        )
        return (product % p).tolist()

    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return [c % p for c in out]


def _add(a: Sequence[int], b: Sequence[int], sign: int) -> "list[int]":
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [x + sign * y for x, y in zip(a, b)]


def poly_arith(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Ring operations on polynomials sharing a modulus.

    Args:
        op (str): One of "add", "sub", "mul".
        f (Polynomial): Left operand.
        g (Polynomial): Right operand.

    Returns:
        Polynomial: The normalized sum, difference or product.
    """
    modulus = _shared_modulus(f, g)
    operations = {
        "add": lambda a, b: _add(a, b, 1),
        "sub": lambda a, b: _add(a, b, -1),
        "mul": lambda a, b: _convolve(a, b, modulus.p),
    }
    assert op in operations, f"Operation {op} not recognized"
    return Polynomial(operations[op](f.coeffs, g.coeffs), modulus)


def scale(f: Polynomial, c: Union[int, Residue]) -> Polynomial:
    c = operator.index(c)
    return Polynomial([c * a for a in f.coeffs], f.modulus)


def poly_eval(f: Polynomial, a: Union[int, Residue]) -> Residue:
    """Horner evaluation of f at a."""
    p = f.p
    if isinstance(a, Residue):
        check_same_modulus(a.modulus, f.modulus)
    x = operator.index(a) % p
    value = 0
    for c in reversed(f.coeffs):
        value = (value * x + c) % p
    return Residue(value, f.modulus)


def canonical_reduce(f: Polynomial) -> CanonicalPoly:
    """
    The unique polynomial of degree <= p-1 congruent to f modulo x**p - x.

    Each exponent e >= p folds to e - (p-1) until it is at most p-1, which in
    closed form is 1 + (e-1) % (p-1). The constant term never moves.
    """
    p = f.p
    if len(f.coeffs) <= p:
        return CanonicalPoly(f.coeffs, f.modulus)

    folded = [0] * p
    for e, c in enumerate(f.coeffs):
        target = e if e < p else 1 + (e - 1) % (p - 1)
        folded[target] += c
    return CanonicalPoly(folded, f.modulus)


def poly_power(f: Polynomial, exponent: int, reduce: bool = False) -> Polynomial:
    """
    f**exponent by square-and-multiply.

    With reduce set, every intermediate product is folded modulo x**p - x, so
    no intermediate has degree above 2(p-1); the result is then canonical.
    """
    assert exponent >= 0, "Exponent must be non-negative"
    step = canonical_reduce if reduce else (lambda g: g)

    result = step(Polynomial.constant(1, f.modulus))
    base = step(f)
    while exponent:
        if exponent & 1:
            result = step(result * base)
        exponent >>= 1
        if exponent:
            base = step(base * base)
    return result


def poly_compose(f: Polynomial, g: Polynomial, reduce: bool = True) -> Polynomial:
    """
    The composition f(g(x)), built by Horner's scheme in g.

    With reduce set (the default) the inner polynomial and every intermediate
    product are canonically reduced, and the result is a CanonicalPoly.
    """
    modulus = _shared_modulus(f, g)
    step = canonical_reduce if reduce else (lambda h: h)
    g = step(g)

    result = Polynomial.zero(modulus)
    for c in reversed(f.coeffs):
        result = step(result * g) + Polynomial.constant(c, modulus)
    return step(result)


def poly_derivative(f: Polynomial) -> Polynomial:
    return Polynomial([i * c for i, c in enumerate(f.coeffs)][1:], f.modulus)


def synthetic_divide(
    f: Polynomial, c: Union[int, Residue]
) -> "tuple[Polynomial, Residue]":
    """
    Divide f by (x - c).

    Returns the quotient q and remainder r with f = (x - c) q + r; by the
    remainder theorem r equals f(c).
    """
    p = f.p
    c = operator.index(c) % p
    if f.is_zero:
        return Polynomial.zero(f.modulus), Residue(0, f.modulus)

    quotient = [0] * (len(f.coeffs) - 1)
    carry = 0
    for i in range(len(f.coeffs) - 1, 0, -1):
        carry = (carry * c + f.coeffs[i]) % p
        quotient[i - 1] = carry
    remainder = (carry * c + f.coeffs[0]) % p
    return Polynomial(quotient, f.modulus), Residue(remainder, f.modulus)


def poly_divmod(f: Polynomial, g: Polynomial) -> "tuple[Polynomial, Polynomial]":
    """Long division of f by a nonzero g."""
    modulus = _shared_modulus(f, g)
    if g.is_zero:
        raise DivisionByZero("Polynomial division by the zero polynomial")

    p = modulus.p
    lead_inv = pow(g.coeffs[-1], p - 2, p)
    dg = len(g.coeffs) - 1
    remainder = list(f.coeffs)
    quotient = [0] * max(len(remainder) - dg, 0)

    for shift in range(len(remainder) - 1 - dg, -1, -1):
        factor = remainder[shift + dg] * lead_inv % p
        if not factor:
            continue
        quotient[shift] = factor
        for i, gi in enumerate(g.coeffs):
            remainder[shift + i] = (remainder[shift + i] - factor * gi) % p

    return Polynomial(quotient, modulus), Polynomial(remainder[:dg], modulus)


def lhopital_eval(f: Polynomial, c: Union[int, Residue]) -> Residue:
    """
    Value of f(x) / (x - c) at x = c, computed as f'(c).

    Requires c to be a root of f.
    """
    if poly_eval(f, c):
        raise NotARoot(f"{c} is not a root of {f}")
    return poly_eval(poly_derivative(f), c)
