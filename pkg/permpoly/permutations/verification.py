"""
Exhaustive and randomized verification suites.

Every suite returns a VerificationReport: a list of named checks, each with a
pass flag and, for failures, a witness. Unless told otherwise, a report with a
failing check raises VerificationFailure.
"""
import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from tabulate import tabulate
from tqdm import tqdm

from permpoly.errors import EvenModulus, TooLarge, VerificationFailure
from permpoly.interpolation import (
    FunctionTable,
    frobenius_rewrite,
    functions_equal,
    interpolate,
    linear_product,
    table_of,
)
from permpoly.modular import ModulusLike, PrimeModulus, as_modulus
from permpoly.permutations.analysis import (
    canonical_degree_via_moments,
    moment,
)
from permpoly.permutations.transpositions import (
    chen_mullen_polynomial,
    transposition_chen_mullen,
    transposition_general,
    transposition_rational,
    transposition_simple,
)
from permpoly.polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    lhopital_eval,
    poly_compose,
    poly_eval,
    synthetic_divide,
)
from permpoly.sampling import (
    make_rng,
    planted_root_polynomial,
    random_permutation_table,
    random_table,
)
from permpoly.util import PermpolyConfiguration, default_configuration


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Any = None
    note: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    p: int
    checks: List[CheckResult] = field(default_factory=list)
    degree_histogram: Optional[Dict[int, int]] = None

    def add(
        self, name: str, passed: bool, witness: Any = None, note: str = None
    ) -> None:
        """Record a check. The witness is only kept for failing checks."""
        passed = bool(passed)
        self.checks.append(
            CheckResult(name, passed, None if passed else witness, note)
        )

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)

    def raise_on_failure(self) -> None:
        failure = self.first_failure
        if failure is not None:
            raise VerificationFailure(self, failure)

    def to_dict(self) -> dict:
        out = {"p": self.p, "checks": [check.to_dict() for check in self.checks]}
        if self.degree_histogram is not None:
            # JSON object keys are strings
            out["degree_histogram"] = {
                str(degree): count
                for degree, count in sorted(self.degree_histogram.items())
            }
        return out

    def summary(self) -> str:
        """Table of all checks for terminal output."""
        rows = []
        for check in self.checks:
            detail = check.witness if check.witness is not None else check.note
            rows.append(
                (check.name, "pass" if check.passed else "FAIL", detail or "")
            )
        return tabulate(rows, headers=["Check", "Result", "Detail"])

    def histogram_summary(self) -> str:
        rows = sorted((self.degree_histogram or {}).items())
        return tabulate(rows, headers=["Degree", "Permutations"])


def _finish(report: VerificationReport, raise_on_failure: bool) -> VerificationReport:
    if raise_on_failure:
        report.raise_on_failure()
    return report


def _fan_out(
    function: Callable,
    items: Sequence,
    workers: int,
    progress: bool,
    desc: str,
) -> list:
    """
    Apply function to every item, optionally on a process pool.

    Results always come back in the order of items.
    """
    if workers and workers > 1 and len(items) > 1:
        chunksize = max(1, len(items) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(function, items, chunksize=chunksize)
            return list(
                tqdm(results, total=len(items), desc=desc, disable=not progress)
            )
    return [function(item) for item in tqdm(items, desc=desc, disable=not progress)]


def _first_mismatch(observed: Sequence[int], expected: Sequence[int]) -> Optional[dict]:
    for a, (value, target) in enumerate(zip(observed, expected)):
        if value != target:
            return {"a": a, "value": value, "expected": target}
    return None


def _frobenius_failure(modulus: PrimeModulus) -> Optional[dict]:
    """First pair a != b for which the rewrite of x**p - x does not hold."""
    vanishing = Polynomial.monomial(1, modulus.p, modulus) - Polynomial.identity(
        modulus
    )
    for a, b in itertools.permutations(range(modulus.p), 2):
        if frobenius_rewrite(modulus, a, b) != vanishing:
            return {"a": a, "b": b}
    return None


def _check_pair(task: "tuple[int, int, int]") -> tuple:
    """
    Per-pair checks; module level so process pools can pickle it.

    Returns a, b and flags for: general == rational, symmetry, the swapped
    table, and involution.
    """
    p, a, b = task
    modulus = PrimeModulus(p)
    general = transposition_general(modulus, (a, b))
    rational = transposition_rational(modulus, (a, b))
    reversed_pair = transposition_general(modulus, (b, a))
    swaps = table_of(general) == FunctionTable.identity(modulus).swapped(a, b)
    involutive = poly_compose(general, general) == Polynomial.identity(modulus)
    return a, b, general == rational, general == reversed_pair, swaps, involutive


def verify_transposition_forms(
    p: ModulusLike,
    workers: int = None,
    progress: bool = False,
    raise_on_failure: bool = True,
    config: PermpolyConfiguration = None,
) -> VerificationReport:
    """
    Check that the four transposition constructions agree for one odd prime.

    Args:
        p (ModulusLike): An odd prime.
        workers (int, optional): Process count for the per-pair checks.
            Defaults to the configured value.
        progress (bool, optional): Show a progress bar. Defaults to False.
        raise_on_failure (bool, optional): Raise VerificationFailure on the
            first failing check. Defaults to True.
        config (PermpolyConfiguration, optional): Budgets and defaults.

    Returns:
        VerificationReport: One entry per check.
    """
    modulus = as_modulus(p)
    if not modulus.is_odd:
        raise EvenModulus("Transposition forms are only compared for odd primes")
    config = config or default_configuration()
    if workers is None:
        workers = config.get("verification", "workers")
    raw_max_p = config.get("verification", "raw_chen_mullen_max_p")

    report = VerificationReport(modulus.p)
    simple = transposition_simple(modulus)
    identity = Polynomial.identity(modulus)

    expected = [1, 0] + list(range(2, modulus.p))
    mismatch = _first_mismatch(table_of(simple).values, expected)
    report.add("simple-swaps-0-1", mismatch is None, mismatch)

    chen_mullen = transposition_chen_mullen(modulus)
    report.add(
        "chen-mullen-equals-simple",
        chen_mullen == simple,
        {"chen_mullen": list(chen_mullen.coeffs), "simple": list(simple.coeffs)},
    )

    pairs = [(modulus.p, a, b) for a, b in itertools.combinations(range(modulus.p), 2)]
    results = _fan_out(
        _check_pair, pairs, workers, progress, f"Transposition pairs, p={modulus.p}"
    )
    for index, name in (
        (2, "general-equals-rational"),
        (3, "general-symmetric"),
        (4, "general-swaps"),
    ):
        failing = next((result for result in results if not result[index]), None)
        witness = None if failing is None else {"a": failing[0], "b": failing[1]}
        report.add(name, failing is None, witness)

    if modulus.p <= raw_max_p:
        raw = chen_mullen_polynomial(modulus, reduce=False)
        vanishes = functions_equal(raw, simple)
        witness = None
        if not vanishes:
            witness = {"remainder": list(canonical_reduce(raw - simple).coeffs)}
        report.add("raw-difference-vanishes", vanishes, witness)
    else:
        report.add(
            "raw-difference-vanishes",
            True,
            note=f"skipped: p above raw expansion limit {raw_max_p}",
        )

    failure = _frobenius_failure(modulus)
    report.add("frobenius-rewrite", failure is None, failure)

    square = poly_compose(simple, simple, reduce=True)
    witness = None
    if square != identity:
        witness = {"a": 0, "b": 1, "square": list(square.coeffs)}
    else:
        failing = next((result for result in results if not result[5]), None)
        if failing is not None:
            witness = {"a": failing[0], "b": failing[1]}
    report.add("involution", witness is None, witness)

    geometric = Polynomial((1,) * (modulus.p - 1), modulus)
    report.add(
        "geometric-factorization",
        geometric == linear_product(modulus, range(2, modulus.p)),
    )

    return _finish(report, raise_on_failure)


def _scan_block(task: "tuple[int, int]") -> "tuple[dict, dict]":
    """
    Scan all permutations of Z_p starting with a fixed first value.

    Module level so process pools can pickle it. Returns the degree histogram
    of the block and the first witness for each property, in lexicographic
    order.
    """
    p, first = task
    modulus = PrimeModulus(p)
    histogram = Counter()
    witnesses = {
        "degree-at-most-p-2": None,
        "no-degree-divides-p-1": None,
        "moment-degree-agreement": None,
    }

    rest = [a for a in range(p) if a != first]
    for tail in itertools.permutations(rest):
        values = (first,) + tail
        table = FunctionTable(values, modulus)
        degree = interpolate(table).degree
        histogram[degree] += 1

        witness = {"table": list(values), "degree": degree}
        if p >= 3 and degree > p - 2:
            witnesses["degree-at-most-p-2"] = witnesses["degree-at-most-p-2"] or witness
        if degree > 1 and (p - 1) % degree == 0:
            witnesses["no-degree-divides-p-1"] = (
                witnesses["no-degree-divides-p-1"] or witness
            )
        if canonical_degree_via_moments(table) != degree:
            witnesses["moment-degree-agreement"] = (
                witnesses["moment-degree-agreement"] or witness
            )
    return dict(histogram), witnesses


def hermite_scan(
    p: ModulusLike,
    workers: int = None,
    progress: bool = False,
    raise_on_failure: bool = True,
    config: PermpolyConfiguration = None,
) -> VerificationReport:
    """
    Enumerate every permutation of Z_p and check the degree restrictions.

    Every permutation polynomial must have degree at most p-2 (for p >= 3),
    and no degree d > 1 may divide p-1. The observed degree histogram is
    reported but not asserted.
    """
    modulus = as_modulus(p)
    config = config or default_configuration()
    if workers is None:
        workers = config.get("verification", "workers")

    budget = config.enumeration_budget()
    count = math.factorial(modulus.p)
    if count > budget:
        raise TooLarge(
            f"Z_{modulus.p} has {count} permutations, above the budget of {budget}"
        )

    blocks = [(modulus.p, first) for first in range(modulus.p)]
    results = _fan_out(
        _scan_block, blocks, workers, progress, f"Permutations, p={modulus.p}"
    )

    histogram = Counter()
    for block_histogram, _ in results:
        histogram.update(block_histogram)

    report = VerificationReport(
        modulus.p, degree_histogram=dict(sorted(histogram.items()))
    )
    for name in (
        "degree-at-most-p-2",
        "no-degree-divides-p-1",
        "moment-degree-agreement",
    ):
        if name == "degree-at-most-p-2" and modulus.p < 3:
            report.add(name, True, note="applies for p >= 3 only")
            continue
        witness = next(
            (witnesses[name] for _, witnesses in results if witnesses[name]), None
        )
        report.add(name, witness is None, witness)

    return _finish(report, raise_on_failure)


def verify_moment_criterion(
    p: ModulusLike,
    samples: int = None,
    seed: int = None,
    progress: bool = False,
    raise_on_failure: bool = True,
    config: PermpolyConfiguration = None,
) -> VerificationReport:
    """
    Compare the moment-based degree with the degree of the interpolant.

    Exhaustive over all p**p tables when that fits the configured budget,
    otherwise over seeded random tables. Also checks that every permutation
    has a vanishing zeroth moment (odd p only; over Z_2 it is 1).
    """
    modulus = as_modulus(p)
    config = config or default_configuration()
    if samples is None:
        samples = config.get("sampling", "random_tables")
    if seed is None:
        seed = config.get("sampling", "seed")
    rng = make_rng(seed)

    report = VerificationReport(modulus.p)

    if modulus.p ** modulus.p <= config.get("sampling", "exhaustive_table_budget"):
        total = modulus.p ** modulus.p
        tables = (
            FunctionTable(values, modulus)
            for values in itertools.product(range(modulus.p), repeat=modulus.p)
        )
        note = f"exhaustive over {total} tables"
    else:
        total = samples
        tables = (random_table(rng, modulus) for _ in range(samples))
        note = f"{samples} random tables, seed {seed}"

    mismatch = None
    for table in tqdm(
        tables, total=total, desc="Moment criterion", disable=not progress
    ):
        degree = interpolate(table).degree
        via_moments = canonical_degree_via_moments(table)
        if via_moments != degree:
            mismatch = {
                "table": list(table),
                "degree": degree,
                "via_moments": via_moments,
            }
            break
    report.add("moment-degree-agreement", mismatch is None, mismatch, note)

    if not modulus.is_odd:
        report.add("permutation-zero-moment", True, note="applies for odd p only")
        return _finish(report, raise_on_failure)

    # the long-scan budget only applies to hermite_scan
    if math.factorial(modulus.p) <= config.get("hermite_scan", "max_permutations"):
        permutations = (
            FunctionTable(values, modulus)
            for values in itertools.permutations(range(modulus.p))
        )
        note = "exhaustive over all permutations"
    else:
        permutations = (random_permutation_table(rng, modulus) for _ in range(samples))
        note = f"{samples} random permutations, seed {seed}"

    failing = next(
        (
            table
            for table in permutations
            if moment(table, 0) != 0 or interpolate(table).degree > modulus.p - 2
        ),
        None,
    )
    witness = None if failing is None else {"table": list(failing)}
    report.add("permutation-zero-moment", failing is None, witness, note)
    return _finish(report, raise_on_failure)


def verify_lhopital_rule(
    p: ModulusLike,
    instances: int = None,
    seed: int = None,
    max_degree: int = None,
    raise_on_failure: bool = True,
    config: PermpolyConfiguration = None,
) -> VerificationReport:
    """f'(c) against the quotient f / (x - c) evaluated at c, for planted roots c."""
    modulus = as_modulus(p)
    config = config or default_configuration()
    if instances is None:
        instances = config.get("sampling", "lhopital_instances")
    if seed is None:
        seed = config.get("sampling", "seed")
    if max_degree is None:
        max_degree = 2 * modulus.p
    rng = make_rng(seed)

    report = VerificationReport(modulus.p)
    not_a_root = None
    disagreement = None
    for _ in range(instances):
        f, c = planted_root_polynomial(rng, modulus, max_degree)
        quotient, remainder = synthetic_divide(f, c)
        witness = {"coeffs": list(f.coeffs), "c": c}
        if remainder:
            not_a_root = not_a_root or witness
            continue
        if lhopital_eval(f, c) != poly_eval(quotient, c):
            disagreement = disagreement or witness

    note = f"{instances} planted roots, seed {seed}"
    report.add("planted-root", not_a_root is None, not_a_root, note)
    report.add("lhopital-matches-quotient", disagreement is None, disagreement, note)
    return _finish(report, raise_on_failure)


def verify_unique_representation(
    p: ModulusLike,
    progress: bool = False,
    raise_on_failure: bool = True,
    config: PermpolyConfiguration = None,
) -> VerificationReport:
    """
    Exhaustive bijection between canonical polynomials and tables.

    All p**p polynomials of degree <= p-1 must give distinct tables, and
    interpolation must recover each polynomial from its table.
    """
    modulus = as_modulus(p)
    config = config or default_configuration()
    budget = config.get("sampling", "exhaustive_table_budget")
    count = modulus.p ** modulus.p
    if count > budget:
        raise TooLarge(
            f"Z_{modulus.p} has {count} functions, above the budget of {budget}"
        )

    report = VerificationReport(modulus.p)
    seen = {}
    collision = None
    not_inverted = None
    for coeffs in tqdm(
        itertools.product(range(modulus.p), repeat=modulus.p),
        total=count,
        desc="Canonical polynomials",
        disable=not progress,
    ):
        f = CanonicalPoly(coeffs, modulus)
        table = table_of(f)
        if table.values in seen and collision is None:
            collision = {
                "coeffs": list(f.coeffs),
                "other": list(seen[table.values]),
                "table": list(table),
            }
        seen.setdefault(table.values, f.coeffs)
        if interpolate(table) != f and not_inverted is None:
            not_inverted = {"coeffs": list(f.coeffs), "table": list(table)}

    report.add("canonical-tables-distinct", len(seen) == count, collision)
    report.add("interpolate-inverts-table-of", not_inverted is None, not_inverted)
    return _finish(report, raise_on_failure)


def verify_vanishing_identities(
    p: ModulusLike, raise_on_failure: bool = True
) -> VerificationReport:
    """The products of all (x - a) against x**p - x and x**(p-1) - 1."""
    modulus = as_modulus(p)
    x = Polynomial.identity(modulus)
    one = Polynomial.constant(1, modulus)

    with_zero = linear_product(modulus, range(modulus.p))
    without_zero = linear_product(modulus, range(1, modulus.p))

    report = VerificationReport(modulus.p)
    report.add(
        "vanishing-with-zero",
        with_zero == Polynomial.monomial(1, modulus.p, modulus) - x,
        {"coeffs": list(with_zero.coeffs)},
    )
    report.add(
        "vanishing-without-zero",
        without_zero == Polynomial.monomial(1, modulus.p - 1, modulus) - one,
        {"coeffs": list(without_zero.coeffs)},
    )
    report.add("vanishing-x-multiple", with_zero == without_zero * x)

    failure = _frobenius_failure(modulus)
    report.add("frobenius-rewrite", failure is None, failure)
    return _finish(report, raise_on_failure)
