#!/usr/bin/env python3
"""Differential sweep: closed forms against the brute-force oracle."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import io
import logging
from typing import IO, List, Optional, Sequence, Tuple

from sigmadual import config as sweep_config
from sigmadual.analysis import CodeAnalysis
from sigmadual.chain_ring import RingAut, RingElement
from sigmadual.codes import Kind, iter_specs
from sigmadual.duality import h_prime, h_prime_statement, root_fixed
from sigmadual.format import format_sigma, spec_id
from sigmadual.gf import FieldCtx
from sigmadual import oracle

_logger = logging.getLogger(__name__)

Group = Tuple[FieldCtx, int, RingElement, Tuple[RingAut, ...], Optional[int], int]


@dataclass
class SweepSummary:
    specs: int = 0
    cases: int = 0
    passed: int = 0
    mismatches: List[dict] = field(default_factory=list)
    statement_differs: int = 0

    def merge(self, other: "SweepSummary") -> None:
        self.specs += other.specs
        self.cases += other.cases
        self.passed += other.passed
        self.mismatches.extend(other.mismatches)
        self.statement_differs += other.statement_differs


def groups(config: sweep_config.SweepConfig) -> List[Group]:
    result = []
    for ctx in config.fields:
        sigmas = tuple(sweep_config.sigmas_for(config, ctx))
        for s in config.s_values:
            for lam in sweep_config.lambdas_for(config, ctx):
                result.append((ctx, s, lam, sigmas, config.h_bound, config.cap))
    return result


def count_cases(config: sweep_config.SweepConfig) -> int:
    total = 0
    for ctx, s, lam, sigmas, h_bound, _ in groups(config):
        total += sum(1 for _ in iter_specs(ctx, s, lam, h_bound)) * len(sigmas)
    return total


def _check_statement_form(analysis: CodeAnalysis, sigma: RingAut) -> bool:
    """True when the statement form of h' agrees with the computed one."""
    spec = analysis.spec
    if spec.kind not in (Kind.TYPE3, Kind.TYPE4) or spec.h_is_zero:
        return True
    if not root_fixed(spec, sigma):
        return True
    proof = h_prime(spec, sigma)
    statement = h_prime_statement(spec).truncate(len(proof.coeffs))
    differs = any((statement - proof).coeffs)
    if differs:
        _logger.info(
            "%s %s: statement form of h' differs from the computed one",
            spec_id(spec),
            format_sigma(sigma),
        )
    return not differs


def check_spec(
    analysis: CodeAnalysis, sigmas: Sequence[RingAut], log: oracle.VerificationLog
) -> SweepSummary:
    spec = analysis.spec
    ctx = spec.ctx
    sid = spec_id(spec)
    summary = SweepSummary(specs=1)
    span = analysis.span
    full = 2 * ctx.m * spec.n
    log.record(sid, "-", "size", analysis.size_exponent, span.rank)
    log.record(sid, "-", "ideal", True, oracle.ideal_check(span, spec.lam))
    euclidean = oracle.brute_dual(span, None)
    log.record(
        sid, "-", "annihilator", True, oracle.reciprocal_annihilator(span) == euclidean
    )
    for sigma in sigmas:
        gid = format_sigma(sigma)
        summary.cases += 1
        result = analysis.dual(sigma)
        brute = analysis.oracle_dual(sigma)
        log.record(sid, gid, "dual", True, analysis.dual_span(sigma) == brute)
        witness = analysis.witness_span(sigma)
        log.record(sid, gid, "dual.witness", True, witness == brute)
        log.record(
            sid,
            gid,
            "dual.euclidean",
            True,
            oracle.brute_dual_via_euclidean(span, sigma) == brute,
        )
        invariant = oracle.ideal_check(brute, result.dual_lambda)
        log.record(sid, gid, "dual.invariant", True, invariant)
        log.record(sid, gid, "product", full, span.rank + brute.rank)
        log.record(
            sid,
            gid,
            "self-orthogonal",
            analysis.oracle_self_orthogonal(sigma),
            analysis.self_orthogonal(sigma).value,
        )
        log.record(
            sid,
            gid,
            "self-dual",
            analysis.oracle_self_dual(sigma),
            analysis.self_dual(sigma).value,
        )
        if not _check_statement_form(analysis, sigma):
            summary.statement_differs += 1
    return summary


def run_group(group: Group) -> Tuple[SweepSummary, str]:
    ctx, s, lam, sigmas, h_bound, cap = group
    fp = io.StringIO()
    log = oracle.VerificationLog(fp)
    summary = SweepSummary()
    for spec in iter_specs(ctx, s, lam, h_bound):
        with CodeAnalysis(spec, cap) as analysis:
            summary.merge(check_spec(analysis, sigmas, log))
    summary.passed = log.passed
    summary.mismatches = log.failed
    return summary, fp.getvalue()


def run_sweep(
    config: sweep_config.SweepConfig,
    fp: Optional[IO[str]] = None,
    progress: Optional[IO[str]] = None,
) -> SweepSummary:
    """Runs every case of the config; the case count goes to progress first."""
    total = count_cases(config)
    limit = min(config.max_cases, sweep_config.SWEEP_CASE_CAP)
    if total > limit:
        raise RuntimeError(f"{total} cases exceed the sweep cap {limit}")
    _logger.info("sweeping %d cases", total)
    if progress is not None:
        print(f"sweeping {total} cases", file=progress, flush=True)
    work = groups(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as executor:
            results = list(executor.map(run_group, work))
    else:
        results = [run_group(group) for group in work]
    summary = SweepSummary()
    for (ctx, s, lam, _, _, _), (partial, text) in zip(work, results):
        _logger.info(
            "p=%d m=%d s=%d: %d specs, %d mismatches",
            ctx.p,
            ctx.m,
            s,
            partial.specs,
            len(partial.mismatches),
        )
        summary.merge(partial)
        if fp is not None:
            fp.write(text)
    return summary


def pp(summary: SweepSummary, fp: IO[str]) -> None:
    fp.write(f"specs={summary.specs} cases={summary.cases}\n")
    fp.write(f"checks passed={summary.passed} failed={len(summary.mismatches)}\n")
    fp.write(f"statement form differs={summary.statement_differs}\n")
    for mismatch in summary.mismatches:
        fp.write(
            "MISMATCH {spec} {sigma} {check}: "
            "expected {expected!r}, got {got!r}\n".format(**mismatch)
        )
