#!/usr/bin/env python3
import functools
import json
import sys

import click
from tabulate import tabulate

from permpoly.errors import MalformedInput, PermpolyError
from permpoly.interpolation import FunctionTable, interpolate, table_of
from permpoly.modular import PrimeModulus, is_prime, validate_prime
from permpoly.permutations.analysis import is_permutation, moment_profile
from permpoly.permutations.transpositions import (
    FORMS,
    TranspositionSpec,
    transposition,
)
from permpoly.permutations.verification import (
    VerificationReport,
    hermite_scan,
    verify_lhopital_rule,
    verify_moment_criterion,
    verify_transposition_forms,
    verify_vanishing_identities,
)
from permpoly.polyfn import Polynomial, canonical_reduce
from permpoly.serialization import (
    load_json,
    moment_profile_to_dict,
    parse_csv,
    polynomial_from_input,
    polynomial_to_dict,
    render_polynomial,
    table_from_input,
)
from permpoly.util import PermpolyConfiguration


class PrimeParamType(click.ParamType):
    """Command line parameter that only ever yields a validated PrimeModulus."""

    name = "prime"

    def convert(self, value, param, ctx):
        if isinstance(value, PrimeModulus):
            return value
        try:
            n = int(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not an integer", param, ctx)
        try:
            return validate_prime(n)
        except PermpolyError as error:
            self.fail(str(error), param, ctx)


PRIME = PrimeParamType()


def usage_errors(function):
    """Report library input errors as usage errors (exit status 2)."""

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except PermpolyError as error:
            raise click.UsageError(str(error))

    return wrapper


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)
prime_option = click.option("--p", "p", type=PRIME, default=None, help="Prime modulus.")
input_option = click.option(
    "--input",
    "input_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Path to a JSON file holding the input object or a bare list.",
)
workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Number of worker processes. Defaults to the configured value.",
)


def show_progress(ctx) -> bool:
    config = ctx.obj["CONFIG"]
    return bool(config.get("cli", "show_progress")) and sys.stderr.isatty()


def read_table(p, table_csv, input_path) -> FunctionTable:
    if table_csv is not None and input_path is not None:
        raise click.UsageError("Use either --table or --input, not both.")
    if table_csv is not None:
        if p is None:
            raise click.UsageError("--table needs --p.")
        return table_from_input(parse_csv(table_csv), p)
    if input_path is not None:
        return table_from_input(load_json(input_path), p)
    raise click.UsageError("Provide a function table with --table or --input.")


def read_polynomial(p, coeffs_csv, input_path) -> Polynomial:
    if coeffs_csv is not None and input_path is not None:
        raise click.UsageError("Use either --coeffs or --input, not both.")
    if coeffs_csv is not None:
        if p is None:
            raise click.UsageError("--coeffs needs --p.")
        return polynomial_from_input(parse_csv(coeffs_csv), p)
    if input_path is not None:
        return polynomial_from_input(load_json(input_path), p)
    raise click.UsageError("Provide a polynomial with --coeffs or --input.")


def emit_polynomial(f: Polynomial, output_format: str) -> None:
    if output_format == "json":
        click.echo(json.dumps(polynomial_to_dict(f)))
    else:
        click.echo(render_polynomial(f))


def describe_failure(report: VerificationReport) -> str:
    failure = report.first_failure
    message = f"check '{failure.name}' failed for p={report.p}"
    if failure.witness is not None:
        message += f", witness: {json.dumps(failure.witness)}"
    return message


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML file overriding the default budgets, sample sizes and seeds.",
)
@click.pass_context
def cli(ctx, config_path):
    """Polynomials representing functions and permutations of Z_p."""
    ctx.ensure_object(dict)
    if config_path:
        ctx.obj["CONFIG"] = PermpolyConfiguration(config_path)
    else:
        ctx.obj["CONFIG"] = PermpolyConfiguration()


@cli.command("interpolate")
@prime_option
@click.option("--table", "table_csv", default=None, help="Values f(0),...,f(p-1).")
@input_option
@format_option
@usage_errors
def interpolate_command(p, table_csv, input_path, output_format):
    """
    Canonical polynomial of a function given by its table of values.
    """
    table = read_table(p, table_csv, input_path)
    emit_polynomial(interpolate(table), output_format)


@cli.command("canonicalize")
@prime_option
@click.option("--coeffs", "coeffs_csv", default=None, help="Ascending coefficients.")
@input_option
@format_option
@usage_errors
def canonicalize_command(p, coeffs_csv, input_path, output_format):
    """
    Reduce a polynomial modulo x^p - x to degree at most p-1.
    """
    polynomial = read_polynomial(p, coeffs_csv, input_path)
    emit_polynomial(canonical_reduce(polynomial), output_format)


@cli.command("transposition")
@click.option("--p", "p", type=PRIME, required=True, help="Prime modulus.")
@click.option(
    "--form",
    type=click.Choice(FORMS),
    default="simple",
    show_default=True,
    help="Which construction to use.",
)
@click.option("--a", "a", type=int, default=None, help="First swapped point.")
@click.option("--b", "b", type=int, default=None, help="Second swapped point.")
@format_option
@usage_errors
def transposition_command(p, form, a, b, output_format):
    """
    Canonical polynomial of a transposition.

    The simple and chen-mullen forms swap 0 and 1; the general and rational
    forms swap --a and --b.
    """
    spec = None
    if form in ("general", "rational"):
        if a is None or b is None:
            raise click.UsageError(f"The {form} form needs both --a and --b.")
        outside = [n for n in (a, b) if not 0 <= n < p.p]
        if outside:
            raise MalformedInput(f"Points {outside} are outside [0, {p.p - 1}]")
        spec = TranspositionSpec.of(a, b, p)
    emit_polynomial(transposition(p, form, spec), output_format)


@cli.command("moments")
@prime_option
@click.option("--table", "table_csv", default=None, help="Values f(0),...,f(p-1).")
@click.option("--coeffs", "coeffs_csv", default=None, help="Ascending coefficients.")
@input_option
@format_option
@usage_errors
def moments_command(p, table_csv, coeffs_csv, input_path, output_format):
    """
    Moment profile and canonical degree of a function.
    """
    if coeffs_csv is not None:
        if table_csv is not None:
            raise click.UsageError("Use either --table or --coeffs, not both.")
        table = table_of(read_polynomial(p, coeffs_csv, input_path))
    elif input_path is not None and table_csv is None:
        data = load_json(input_path)
        if isinstance(data, dict) and "coeffs" in data:
            table = table_of(polynomial_from_input(data, p))
        else:
            table = table_from_input(data, p)
    else:
        table = read_table(p, table_csv, input_path)

    profile = moment_profile(table)
    permutation = is_permutation(table)
    if output_format == "json":
        click.echo(json.dumps(moment_profile_to_dict(profile, permutation)))
        return

    click.echo(
        tabulate(list(enumerate(profile.moments)), headers=["k", "Moment"])
    )
    degree = "zero function" if profile.degree is None else profile.degree
    click.echo(f"degree: {degree}")
    click.echo(f"permutation: {'yes' if permutation else 'no'}")


@cli.command("verify")
@click.pass_context
@click.option(
    "--p-max",
    "p_max",
    type=int,
    default=None,
    help="Check all odd primes up to this bound. Defaults to the configured value.",
)
@click.option(
    "--extended",
    is_flag=True,
    default=False,
    help="Also run the moment, l'Hopital and vanishing-polynomial suites.",
)
@click.option("--seed", type=int, default=None, help="Seed for randomized suites.")
@workers_option
@format_option
@usage_errors
def verify_command(ctx, p_max, extended, seed, workers, output_format):
    """
    Check that all transposition constructions agree for every odd prime.
    """
    config = ctx.obj["CONFIG"]
    if p_max is None:
        p_max = config.get("cli", "p_max")
    if p_max < 3:
        raise click.UsageError(f"--p-max must be at least 3, got {p_max}.")

    progress = show_progress(ctx)
    reports = []
    for q in (n for n in range(3, p_max + 1) if is_prime(n)):
        report = verify_transposition_forms(
            q,
            workers=workers,
            progress=progress,
            raise_on_failure=False,
            config=config,
        )
        if extended:
            for extra in (
                verify_moment_criterion(
                    q,
                    seed=seed,
                    progress=progress,
                    raise_on_failure=False,
                    config=config,
                ),
                verify_lhopital_rule(
                    q, seed=seed, raise_on_failure=False, config=config
                ),
                verify_vanishing_identities(q, raise_on_failure=False),
            ):
                report.checks.extend(extra.checks)
        reports.append(report)

        if output_format == "text":
            if report.passed:
                click.echo(f"p={q}: pass ({len(report.checks)} checks)")
            else:
                click.echo(f"p={q}: FAIL {describe_failure(report)}")

    if output_format == "json":
        click.echo(json.dumps([report.to_dict() for report in reports]))

    failed = [report for report in reports if not report.passed]
    if failed:
        click.echo(f"Verification failed: {describe_failure(failed[0])}", err=True)
        ctx.exit(1)


@cli.command("hermite-scan")
@click.pass_context
@click.option("--p", "p", type=PRIME, required=True, help="Prime modulus.")
@workers_option
@format_option
@usage_errors
def hermite_scan_command(ctx, p, workers, output_format):
    """
    Enumerate all permutations of Z_p and check their canonical degrees.

    Budgets above p = 7 are unlocked by setting PERMPOLY_LONG_SCANS=1.
    """
    report = hermite_scan(
        p,
        workers=workers,
        progress=show_progress(ctx),
        raise_on_failure=False,
        config=ctx.obj["CONFIG"],
    )
    if output_format == "json":
        click.echo(json.dumps(report.to_dict()))
    else:
        click.echo(report.summary())
        click.echo()
        click.echo(report.histogram_summary())

    if not report.passed:
        click.echo(f"Verification failed: {describe_failure(report)}", err=True)
        ctx.exit(1)


if __name__ == "__main__":
    cli()
