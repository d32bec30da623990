#!/usr/bin/env python3
import logging
import sys

import click

import sigmadual
from sigmadual.analysis import CodeAnalysis
from sigmadual.chain_ring import RingAut, identity_aut
from sigmadual.codes import (
    CodeSpec,
    Kind,
    SpecError,
    enumerate_codewords,
    generators,
    validate_spec,
)
from sigmadual.config import load_config, parse_field_element, parse_ring_element
from sigmadual.duality import Verdict
from sigmadual import fixtures
from sigmadual.format import (
    format_field,
    format_poly,
    format_ring,
    format_size,
    format_spec,
    format_word,
)
from sigmadual.gf import FieldAut, FieldCtx, NotAUnitError, field_make
from sigmadual import oracle
from sigmadual.specfile import dump_spec, load_spec
from sigmadual import sweep as sweep_module

EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


def fail(message, code=EXIT_INPUT):
    print(message, file=sys.stderr)
    sys.exit(code)


@click.group(help="sigmadual version " + sigmadual.__version__)
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages")
def main(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


class SigmaParamType(click.ParamType):
    """h=<int>,eps=<coeffs>, e.g. h=1,eps=1:0; resolved against the spec's field."""

    name = "sigma"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            fields = dict(item.split("=", 1) for item in value.split(","))
            h = int(fields.pop("h", "0"))
            eps = [int(c) for c in fields.pop("eps", "1").split(":")]
        except ValueError:
            self.fail(f"malformed automorphism {value!r}", param, ctx)
        if fields:
            self.fail(f"unknown keys {sorted(fields)} in {value!r}", param, ctx)
        return h, eps


def spec_option(function):
    return click.option(
        "--spec",
        required=True,
        help="Code spec file (JSON)",
    )(function)


def sigma_option(function):
    return click.option(
        "--sigma",
        type=SigmaParamType(),
        help="Automorphism a+ub -> theta(a)+u eps theta(b), "
        + "theta = p^h-th power, e.g., h=1,eps=1; identity by default",
    )(function)


def output_option(function):
    return click.option(
        "-o",
        "--out",
        default="/dev/stdout",
        help="Output file name",
    )(function)


def cap_option(function):
    return click.option(
        "--cap",
        type=int,
        help="Largest number of codewords to enumerate",
    )(function)


def open_spec(path, cap=None):
    try:
        return CodeAnalysis(load_spec(path), cap)
    except SpecError as e:
        fail(f"{path}: invalid spec: {e}")
    except (OSError, TypeError, ValueError, NotAUnitError) as e:
        # json.JSONDecodeError is a ValueError
        fail(f"{path}: {e}")


def resolve_sigma(analysis, sigma) -> RingAut:
    ctx = analysis.spec.ctx
    if sigma is None:
        return identity_aut(ctx)
    h, eps = sigma
    try:
        return RingAut(FieldAut(h), field_make(ctx, eps))
    except ValueError as e:
        fail(f"invalid automorphism: {e}")


def pp_spec(analysis, fp):
    spec = analysis.spec
    size = format_size(spec.p, analysis.size_exponent)
    line = format_spec(spec)
    if spec.kind in (Kind.TYPE3, Kind.TYPE4):
        line += f", T={spec.T}"
    fp.write(f"{line}, size={size}\n")
    fp.write(f"lambda={format_ring(spec.lam)}\n")
    if spec.kind not in (Kind.ZERO, Kind.WHOLE):
        name = "alpha0" if spec.kind == Kind.CHAIN else "gamma0"
        fp.write(f"{name}={format_field(spec.base)}\n")
    for g in generators(spec):
        fp.write(f"generator {format_poly(g.coeffs)}\n")


@main.command(help="Validate a code spec and print its parameters")
@spec_option
@output_option
def classify(spec, out):
    with open_spec(spec) as analysis, open(out, "w") as fp:
        pp_spec(analysis, fp)


@main.command(help="Compute the sigma-dual in closed form")
@spec_option
@sigma_option
@output_option
@click.option(
    "--verify",
    is_flag=True,
    help="Compare with the brute-force dual",
)
def dual(spec, sigma, out, verify):
    with open_spec(spec) as analysis:
        sigma = resolve_sigma(analysis, sigma)
        result = analysis.dual(sigma)
        with open(out, "w") as fp:
            fp.write(f"dual lambda={format_ring(result.dual_lambda)}\n")
            fp.write(f"dual spec: {format_spec(result.dual_spec)}\n")
            fp.write(f"clause: {result.clause}\n")
            for g in result.witness_generators:
                fp.write(f"witness {format_poly(g.coeffs)}\n")
            if verify:
                try:
                    match = analysis.dual_span(sigma) == analysis.oracle_dual(sigma)
                except RuntimeError as e:
                    fail(str(e))
                fp.write("MATCH\n" if match else "MISMATCH\n")
    if verify and not match:
        sys.exit(EXIT_MISMATCH)


@main.command(help="Decide sigma-self-orthogonality or sigma-self-duality")
@spec_option
@sigma_option
@output_option
@click.option("--self-orthogonal", "predicate", flag_value="self-orthogonal")
@click.option("--self-dual", "predicate", flag_value="self-dual")
def check(spec, sigma, out, predicate):
    if predicate is None:
        fail("Specify either --self-orthogonal or --self-dual")
    with open_spec(spec) as analysis:
        sigma = resolve_sigma(analysis, sigma)
        if predicate == "self-orthogonal":
            verdict: Verdict = analysis.self_orthogonal(sigma)
        else:
            verdict = analysis.self_dual(sigma)
    with open(out, "w") as fp:
        fp.write(f"{str(verdict.value).lower()} via {verdict.clause}\n")
    sys.exit(0 if verdict else EXIT_FALSE)


@main.command(
    name="enumerate", help="List every codeword and the minimum distance"
)
@spec_option
@cap_option
@output_option
def enumerate_codes(spec, cap, out):
    with open_spec(spec, cap) as analysis, open(out, "w") as fp:
        span = analysis.span
        fp.write(f"size={format_size(analysis.spec.p, span.rank)}\n")
        try:
            for word in enumerate_codewords(span, cap):
                fp.write(f"{format_word(word)}\n")
            d = oracle.min_distance(span, cap)
        except RuntimeError as e:
            fail(str(e))
        fp.write("no nonzero codeword\n" if d is None else f"d={d}\n")


@main.command(help="Check every closed form against the brute-force oracle")
@click.argument("config")
@click.option("--jobs", type=int, help="Number of worker processes")
@click.option("--log", help="Write one JSON record per check into this file")
@output_option
def sweep(config, jobs, log, out):
    try:
        sweep_config = load_config(config)
    except (OSError, ValueError, RuntimeError) as e:
        fail(f"{config}: {e}")
    if jobs is not None:
        sweep_config.jobs = jobs
    log = log or sweep_config.out
    log_fp = open(log, "w") if log is not None else None
    try:
        summary = sweep_module.run_sweep(sweep_config, log_fp, sys.stderr)
    except (RuntimeError, ValueError) as e:
        fail(str(e))
    finally:
        if log_fp is not None:
            log_fp.close()
    with open(out, "w") as fp:
        sweep_module.pp(summary, fp)
    if summary.mismatches:
        sys.exit(EXIT_MISMATCH)


@main.command(help="Rebuild a worked example from its generator matrix")
@click.argument("which", type=click.IntRange(1, 3))
@output_option
def example(which, out):
    report = fixtures.build_example(which)
    with open(out, "w") as fp:
        fixtures.pp(report, fp)


@main.command(name="spec", help="Print a code spec file for the given parameters")
@click.option("--p", "p", type=int, required=True)
@click.option("--m", "m", type=int, default=1)
@click.option("--s", "s", type=int, default=1)
@click.option("--kind", type=click.Choice([k.value for k in Kind]), required=True)
@click.option("--lam", default="1", help="a0:a1/b0:b1")
@click.option("--i", "i", type=int, default=0)
@click.option("--t", "t", type=int, default=0)
@click.option("--h", "h", multiple=True, help="Coefficient a0:a1, repeatable")
@click.option("--omega", type=int, default=0)
@output_option
def write_spec(p, m, s, kind, lam, i, t, h, omega, out):
    try:
        ctx = FieldCtx.make(p, m)
        result = validate_spec(
            CodeSpec(
                ctx,
                s,
                parse_ring_element(lam, ctx),
                Kind(kind),
                i,
                t,
                tuple(parse_field_element(c, ctx) for c in h),
                omega,
            )
        )
    except SpecError as e:
        fail(f"invalid spec: {e}")
    except ValueError as e:
        fail(str(e))
    with open(out, "w") as fp:
        dump_spec(result, fp)


if __name__ == "__main__":
    main()
