import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from permpoly.errors import (
    CompositeModulus,
    DivisionByZero,
    ModulusMismatch,
    OutOfRange,
)

# The first twelve primes are a deterministic witness set for every
# n < 3.3e24, which covers the full 64-bit range.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

WORD_LIMIT = 1 << 64


def _miller_rabin_round(n: int, base: int, d: int, r: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@lru_cache(maxsize=1024)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for all n < 2**64."""
    if n < 2:
        return False
    if n <= _WITNESSES[-1]:
        return n in _WITNESSES
    if n % 2 == 0:
        return False

    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1

    return all(_miller_rabin_round(n, base, d, r) for base in _WITNESSES)


def _check_word(n: int) -> int:
    n = operator.index(n)
    if n < 2:
        raise OutOfRange(f"Modulus must be at least 2, got {n}")
    if n >= WORD_LIMIT:
        raise OutOfRange(f"Modulus does not fit in 64 bits: {n}")
    return n


@dataclass(frozen=True)
class PrimeModulus:
    """
    A validated prime p defining the field Z_p.

    Primality is checked at construction, so holding a PrimeModulus is proof
    that p is prime. Supports __index__, so it can be passed wherever an
    integer is expected (range, pow, %).
    """

    p: int

    def __post_init__(self) -> None:
        p = _check_word(self.p)
        if not is_prime(p):
            raise CompositeModulus(p)
        object.__setattr__(self, "p", p)

    def __index__(self) -> int:
        return self.p

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)

    @property
    def is_odd(self) -> bool:
        return self.p != 2


ModulusLike = Union[int, PrimeModulus]


def validate_prime(n: int) -> PrimeModulus:
    """Return the PrimeModulus for n, or raise CompositeModulus / OutOfRange."""
    return PrimeModulus(n)


def as_modulus(p: ModulusLike) -> PrimeModulus:
    if isinstance(p, PrimeModulus):
        return p
    return validate_prime(p)


def check_same_modulus(p: PrimeModulus, q: PrimeModulus) -> None:
    if p.p != q.p:
        raise ModulusMismatch(p.p, q.p)


@dataclass(frozen=True)
class Residue:
    """An element of Z_p, always stored in [0, p-1]."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        assert (
            0 <= self.value < self.modulus.p
        ), f"Residue {self.value} not reduced modulo {self.modulus.p}"

    @classmethod
    def of(cls, value: int, p: ModulusLike) -> "Residue":
        """Reduce an arbitrary integer into Z_p."""
        modulus = as_modulus(p)
        return cls(operator.index(value) % modulus.p, modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            check_same_modulus(self.modulus, other.modulus)
            return other.value
        return operator.index(other)

    def __add__(self, other) -> "Residue":
        return Residue.of(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "Residue":
        return Residue.of(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other) -> "Residue":
        return Residue.of(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other) -> "Residue":
        return Residue.of(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue.of(-self.value, self.modulus)

    def __pow__(self, exp: int) -> "Residue":
        return mod_pow(self, exp, self.modulus)

    def inverse(self) -> "Residue":
        return mod_inv(self, self.modulus)

    def __index__(self) -> int:
        return self.value

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.p})"


def _value_of(a: Union[int, Residue], modulus: PrimeModulus) -> int:
    if isinstance(a, Residue):
        check_same_modulus(a.modulus, modulus)
        return a.value
    return operator.index(a) % modulus.p


def mod_pow(base: Union[int, Residue], exp: int, p: ModulusLike) -> Residue:
    """
    base**exp in Z_p.

    0**0 is 1, which makes the k = 0 moment and the constant term of the
    interpolation basis come out right without special cases.
    """
    modulus = as_modulus(p)
    exp = operator.index(exp)
    if exp < 0:
        raise OutOfRange(f"Exponent must be non-negative, got {exp}")
    return Residue(pow(_value_of(base, modulus), exp, modulus.p), modulus)


def mod_inv(a: Union[int, Residue], p: ModulusLike) -> Residue:
    """Multiplicative inverse via Fermat: a**(p-2)."""
    modulus = as_modulus(p)
    value = _value_of(a, modulus)
    if value == 0:
        raise DivisionByZero(f"0 has no inverse modulo {modulus.p}")
    return Residue(pow(value, modulus.p - 2, modulus.p), modulus)
