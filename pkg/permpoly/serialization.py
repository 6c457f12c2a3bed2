"""
JSON objects and human-readable notation for polynomials, tables and reports.

Polynomials serialize as {"p": int, "coeffs": [ascending coefficients]},
tables as {"p": int, "values": [f(0), ..., f(p-1)]}. The zero polynomial has
an empty coefficient list.
"""
import json
import re
from typing import Optional, Sequence, Union

from permpoly.errors import MalformedInput
from permpoly.interpolation import FunctionTable
from permpoly.modular import ModulusLike, as_modulus
from permpoly.permutations.analysis import MomentProfile
from permpoly.polyfn import Polynomial

_TERM = re.compile(r"^(?P<coeff>\d+)?(?P<x>x(?:\^(?P<exp>\d+))?)?$")


def polynomial_to_dict(f: Polynomial) -> dict:
    return {"p": f.p, "coeffs": list(f.coeffs)}


def _require_keys(data: dict, keys: Sequence[str], what: str) -> None:
    if not isinstance(data, dict):
        raise MalformedInput(f"A {what} must be a JSON object, got {data!r}")
    missing = [key for key in keys if key not in data]
    if missing:
        raise MalformedInput(f"A {what} needs the keys {missing}")
    if not isinstance(data["p"], int) or isinstance(data["p"], bool):
        raise MalformedInput(f"The modulus p must be an integer, got {data['p']!r}")


def _checked_entries(values, p: int, what: str) -> "list[int]":
    if not isinstance(values, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise MalformedInput(
            f"The {what} must be a list of integers, got {values!r}"
        )
    outside = [v for v in values if not 0 <= v < p]
    if outside:
        raise MalformedInput(f"The {what} {outside} are outside [0, {p - 1}]")
    return values


def polynomial_from_dict(data: dict) -> Polynomial:
    _require_keys(data, ("p", "coeffs"), "polynomial")
    modulus = as_modulus(data["p"])
    coeffs = _checked_entries(data["coeffs"], modulus.p, "coefficients")
    return Polynomial(coeffs, modulus)


def table_to_dict(t: FunctionTable) -> dict:
    return {"p": t.p, "values": list(t.values)}


def table_from_dict(data: dict) -> FunctionTable:
    _require_keys(data, ("p", "values"), "function table")
    modulus = as_modulus(data["p"])
    values = _checked_entries(data["values"], modulus.p, "table values")
    return FunctionTable(values, modulus)


def moment_profile_to_dict(profile: MomentProfile, is_permutation: bool) -> dict:
    return {
        "p": profile.p,
        "moments": list(profile.moments),
        "degree": profile.degree,
        "is_permutation": is_permutation,
    }


def render_polynomial(f: Polynomial) -> str:
    """
    Descending-power notation, e.g. "x^3 + x^2 + 2x + 1".

    Zero terms are omitted and a coefficient of 1 is suppressed on
    nonconstant terms. The zero polynomial renders as "0".
    """
    terms = []
    for exponent in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[exponent]
        if not c:
            continue
        if exponent == 0:
            terms.append(str(c))
            continue
        power = "x" if exponent == 1 else f"x^{exponent}"
        terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) or "0"


def parse_polynomial_text(text: str, p: ModulusLike) -> Polynomial:
    """Inverse of render_polynomial; also accepts unreduced coefficients."""
    modulus = as_modulus(p)
    text = text.strip()
    if text == "0":
        return Polynomial.zero(modulus)

    coeffs = {}
    for term in text.split("+"):
        match = _TERM.match(term.strip())
        if match is None or not (match.group("coeff") or match.group("x")):
            raise MalformedInput(f"Cannot parse polynomial term: {term.strip()!r}")
        c = int(match.group("coeff") or 1)
        if not match.group("x"):
            exponent = 0
        else:
            exponent = int(match.group("exp") or 1)
        coeffs[exponent] = coeffs.get(exponent, 0) + c

    dense = [0] * (max(coeffs) + 1)
    for exponent, c in coeffs.items():
        dense[exponent] = c
    return Polynomial(dense, modulus)


def parse_csv(text: str) -> "list[int]":
    """Comma-separated integers, e.g. "1,0,2"."""
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise MalformedInput(f"Expected comma-separated integers, got {text!r}")


def load_json(path: str) -> Union[dict, list]:
    try:
        with open(path, "r") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as error:
        raise MalformedInput(f"Cannot read JSON input from {path}: {error}")


def table_from_input(
    data: Union[dict, list], p: Optional[ModulusLike] = None
) -> FunctionTable:
    """A table from a JSON object with p and values, or a bare list of values."""
    if isinstance(data, list):
        if p is None:
            raise MalformedInput("A bare list of values needs an explicit modulus")
        return FunctionTable(_checked_entries(data, as_modulus(p).p, "values"), p)
    table = table_from_dict(data)
    _check_agrees(table.p, p)
    return table


def polynomial_from_input(
    data: Union[dict, list], p: Optional[ModulusLike] = None
) -> Polynomial:
    """
    A polynomial from a JSON object with p and coeffs, or a bare list.

    Bare lists may hold arbitrary integers; they are reduced modulo p.
    """
    if isinstance(data, list):
        if p is None:
            raise MalformedInput(
                "A bare list of coefficients needs an explicit modulus"
            )
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
            raise MalformedInput(f"Coefficients must be integers, got {data!r}")
        return Polynomial(data, p)
    polynomial = polynomial_from_dict(data)
    _check_agrees(polynomial.p, p)
    return polynomial


def _check_agrees(found: int, p: Optional[ModulusLike]) -> None:
    if p is not None and found != as_modulus(p).p:
        raise MalformedInput(f"Input is over Z_{found}, but p = {as_modulus(p).p}")
