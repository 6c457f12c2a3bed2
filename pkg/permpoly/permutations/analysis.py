"""
Permutation detection and the moment criterion for canonical degrees.

The k-th moment of a function f on Z_p is the sum of a**k f(a) over all a.
The canonical polynomial of f has degree p-1-k exactly when k is the first
index with a nonzero moment.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from permpoly.errors import KOutOfRange, MalformedInput
from permpoly.interpolation import FunctionTable, interpolate, table_of
from permpoly.modular import PrimeModulus, Residue
from permpoly.polyfn import CanonicalPoly, Polynomial


def is_permutation(t: FunctionTable) -> bool:
    return len(set(t.values)) == t.p


def is_permutation_polynomial(f: Polynomial) -> bool:
    return is_permutation(table_of(f))


def permutation_polynomial(t: FunctionTable) -> CanonicalPoly:
    """Canonical polynomial of a permutation given by its table."""
    if not is_permutation(t):
        raise MalformedInput(f"Table is not a permutation of Z_{t.p}: {list(t)}")
    return interpolate(t)


def _moment(t: FunctionTable, k: int) -> int:
    p = t.p
    # pow(0, 0, p) == 1, the 0**0 convention of the criterion
    return sum(pow(a, k, p) * value for a, value in enumerate(t.values)) % p


def moment(t: FunctionTable, k: int) -> Residue:
    if not 0 <= k <= t.p - 1:
        raise KOutOfRange(f"Moment index must lie in [0, {t.p - 1}], got {k}")
    return Residue(_moment(t, k), t.modulus)


@dataclass(frozen=True)
class MomentProfile:
    """All p moments of a function, indexed by k = 0, ..., p-1."""

    moments: Tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        assert (
            len(self.moments) == self.modulus.p
        ), f"Expected {self.modulus.p} moments, got {len(self.moments)}"

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def first_nonzero(self) -> Optional[int]:
        return next((k for k, m in enumerate(self.moments) if m), None)

    @property
    def degree(self) -> Optional[int]:
        """Canonical degree p-1-k, or None for the zero function."""
        k = self.first_nonzero
        if k is None:
            return None
        return self.p - 1 - k


def moment_profile(t: FunctionTable) -> MomentProfile:
    return MomentProfile(tuple(_moment(t, k) for k in range(t.p)), t.modulus)


def canonical_degree_via_moments(t: FunctionTable) -> Optional[int]:
    """
    Degree of interpolate(t), read off the first nonzero moment.

    Returns None when every moment vanishes, i.e. t is the zero function.
    Stops at the first nonzero moment instead of building the whole profile.
    """
    for k in range(t.p):
        if _moment(t, k):
            return t.p - 1 - k
    return None
