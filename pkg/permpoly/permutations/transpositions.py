"""
Polynomials representing transpositions of Z_p.

Four constructions are provided; for odd p they all produce the same
canonical polynomial for the same pair of swapped points:

- transposition_simple: x**(p-2) + ... + x**2 + 2x + 1, swapping 0 and 1
- transposition_chen_mullen: -[((x-1)**(p-2) + 1)**(p-2) - 1]**(p-2), swapping 0 and 1
- transposition_general: the simple form conjugated by the affine map
  sending 0, 1 to a, b
- transposition_rational: (b-a)**2 (x**p - x) / ((x-a)(x-b)) + x
"""
from dataclasses import dataclass
from typing import Union

from permpoly.errors import DegeneratePair, EvenModulus, InexactDivision
from permpoly.interpolation import vanishing_poly
from permpoly.modular import (
    ModulusLike,
    PrimeModulus,
    Residue,
    as_modulus,
    check_same_modulus,
    mod_inv,
)
from permpoly.polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    poly_compose,
    poly_power,
    scale,
    synthetic_divide,
)


@dataclass(frozen=True)
class TranspositionSpec:
    """The two distinct points a, b swapped by a transposition."""

    a: Residue
    b: Residue

    def __post_init__(self) -> None:
        check_same_modulus(self.a.modulus, self.b.modulus)
        if self.a == self.b:
            raise DegeneratePair(
                f"A transposition needs two distinct points, got a = b = {self.a.value}"
            )

    @classmethod
    def of(cls, a: int, b: int, p: ModulusLike) -> "TranspositionSpec":
        modulus = as_modulus(p)
        return cls(Residue.of(a, modulus), Residue.of(b, modulus))

    @property
    def modulus(self) -> PrimeModulus:
        return self.a.modulus


FORMS = ("simple", "general", "chen-mullen", "rational")

SpecLike = Union[TranspositionSpec, "tuple[int, int]"]


def _as_spec(spec: SpecLike, modulus: PrimeModulus) -> TranspositionSpec:
    if isinstance(spec, TranspositionSpec):
        check_same_modulus(spec.modulus, modulus)
        return spec
    a, b = spec
    return TranspositionSpec.of(a, b, modulus)


def _require_odd(modulus: PrimeModulus, construction: str) -> None:
    if not modulus.is_odd:
        raise EvenModulus(
            f"The {construction} construction needs an odd prime; "
            "over Z_2 use transposition_simple"
        )


def transposition_simple(p: ModulusLike) -> CanonicalPoly:
    """
    Canonical polynomial of the transposition (0 1).

    For odd p the coefficients are 1, 2, 1, ..., 1 up to degree p-2. Over Z_2
    the transposition is 1 - x = x + 1.
    """
    modulus = as_modulus(p)
    if not modulus.is_odd:
        return CanonicalPoly((1, 1), modulus)
    return CanonicalPoly((1, 2) + (1,) * (modulus.p - 3), modulus)


def transposition_general(p: ModulusLike, spec: SpecLike) -> CanonicalPoly:
    """
    Canonical polynomial of the transposition (a b).

    Substitutes u = (x - a) / (b - a) into the simple form and maps the result
    back with (b - a) f(u) + a. Division by b - a is multiplication by its
    Fermat inverse, so everything stays in Z_p[x].
    """
    modulus = as_modulus(p)
    _require_odd(modulus, "general")
    spec = _as_spec(spec, modulus)

    width = spec.b - spec.a
    slope = mod_inv(width, modulus).value
    u = Polynomial((-spec.a.value * slope, slope), modulus)

    conjugated = poly_compose(transposition_simple(modulus), u, reduce=True)
    shifted = scale(conjugated, width) + Polynomial.constant(spec.a.value, modulus)
    return canonical_reduce(shifted)


def chen_mullen_polynomial(p: ModulusLike, reduce: bool = True) -> Polynomial:
    """
    -[((x-1)**(p-2) + 1)**(p-2) - 1]**(p-2), innermost power first.

    Without reduction the result has degree (p-2)**3; with it, every
    intermediate product is folded modulo x**p - x.
    """
    modulus = as_modulus(p)
    _require_odd(modulus, "Chen-Mullen")
    e = modulus.p - 2
    one = Polynomial.constant(1, modulus)

    inner = poly_power(Polynomial.linear(1, modulus), e, reduce=reduce)
    middle = poly_power(inner + one, e, reduce=reduce)
    outer = poly_power(middle - one, e, reduce=reduce)
    return -outer


def transposition_chen_mullen(p: ModulusLike) -> CanonicalPoly:
    return canonical_reduce(chen_mullen_polynomial(p, reduce=True))


def _divide_exactly(f: Polynomial, root: Residue) -> Polynomial:
    quotient, remainder = synthetic_divide(f, root)
    if remainder:
        raise InexactDivision(f"x - {root.value} does not divide {f}")
    return quotient


def transposition_rational(p: ModulusLike, spec: SpecLike) -> CanonicalPoly:
    """
    Canonical polynomial of (a b) from (b-a)**2 (x**p - x) / ((x-a)(x-b)) + x.

    Both divisions are exact since a and b are roots of x**p - x.
    """
    modulus = as_modulus(p)
    _require_odd(modulus, "rational")
    spec = _as_spec(spec, modulus)

    quotient = _divide_exactly(vanishing_poly(modulus, True), spec.a)
    quotient = _divide_exactly(quotient, spec.b)

    width = spec.b - spec.a
    return canonical_reduce(
        scale(quotient, width * width) + Polynomial.identity(modulus)
    )


def transposition(
    p: ModulusLike, form: str = "simple", spec: SpecLike = None
) -> CanonicalPoly:
    """Dispatch to one of the four constructions by name."""
    builders = {
        "simple": lambda modulus: transposition_simple(modulus),
        "chen-mullen": lambda modulus: transposition_chen_mullen(modulus),
        "general": lambda modulus: transposition_general(modulus, spec),
        "rational": lambda modulus: transposition_rational(modulus, spec),
    }
    assert form in builders, f"Transposition form {form} not recognized"
    if form in ("general", "rational"):
        assert spec is not None, f"The {form} form needs the swapped pair (a, b)"
    return builders[form](as_modulus(p))
