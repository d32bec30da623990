#!/usr/bin/env python3
"""Worked examples: literal generator matrices and the specs printed beside them."""
from dataclasses import dataclass, field
import logging
from typing import IO, List, Optional, Sequence, Tuple

from sigmadual.chain_ring import RingAut, RingElement, galois_aut
from sigmadual.codes import (
    CodeSpec,
    Kind,
    SpanBasis,
    SpecError,
    generators,
    ideal_span,
    normalize_spec,
    ring_basis,
    span_basis,
    validate_spec,
)
from sigmadual.echelon import EchelonBasis
from sigmadual.format import format_ring, format_size, format_spec
from sigmadual.gf import FieldCtx
from sigmadual.polyquot import QuotientRing, flatten, nilpotent_power
from sigmadual import oracle

_logger = logging.getLogger(__name__)

Row = Tuple[RingElement, ...]


def _ring(ctx: FieldCtx, a: Sequence[int], b: Sequence[int] = ()) -> RingElement:
    return RingElement(ctx.element(a), ctx.element(b))


def _u(ctx: FieldCtx, b: Sequence[int]) -> RingElement:
    return _ring(ctx, (), b)


def f9() -> FieldCtx:
    """F_9 = F_3[w]/(w^2 + 1)."""
    return FieldCtx(3, 2, (1, 0, 1))


def f25() -> FieldCtx:
    """F_25 = F_5[w]/(w^2 + 3)."""
    return FieldCtx(5, 2, (3, 0, 1))


def g1() -> List[Row]:
    ctx = f9()
    one, w, m1, mw, z = [1], [0, 1], [2], [0, 2], []
    return [
        tuple(_ring(ctx, a) for a in (one, z, one, w, z, w, m1, z, m1)),
        tuple(_ring(ctx, a) for a in (z, one, w, z, w, m1, z, m1, mw)),
        tuple(_u(ctx, b) for b in (z, z, one, z, z, w, z, z, m1)),
        tuple(_u(ctx, b) for b in (z, z, z, one, mw, m1, mw, m1, w)),
    ]


def g2() -> List[Row]:
    ctx = f25()
    return [
        (
            _ring(ctx, [1]),
            _ring(ctx, [2, 2]),
            _ring(ctx, [2, 3], [2, 3]),
            _ring(ctx, [1], [3]),
            _ring(ctx, [2, 2], [2, 2]),
        ),
        tuple(_u(ctx, b) for b in ([], [1], [4, 4], [1, 4], [4])),
    ]


def g3() -> List[Row]:
    ctx = f9()
    cycle = ([1], [0, 1], [2], [0, 2])
    return [tuple(_ring(ctx, cycle[k % 4]) for k in range(9))]


@dataclass
class ExampleReport:
    which: int
    p: int
    lam: RingElement
    sigma: RingAut
    printed: str
    rank: int = 0
    closure_rank: int = 0
    rows_invariant: bool = False
    sigma_self_orthogonal: bool = False
    self_orthogonal: bool = False
    sigma_self_dual: bool = False
    spec: Optional[CodeSpec] = None
    spec_matches: Optional[bool] = None
    min_distance: Optional[int] = None
    mds: Optional[bool] = None
    notes: List[str] = field(default_factory=list)


def row_span(rows: Sequence[Row], ctx: FieldCtx) -> EchelonBasis:
    """F_p-span of the rows and their multiples by R, without shifts."""
    echelon = EchelonBasis(ctx.p, 2 * ctx.m * len(rows[0]))
    for row in rows:
        for e in ring_basis(ctx):
            echelon.add(flatten([e * c for c in row]))
    return echelon


def _matrix_report(
    which: int, rows: Sequence[Row], lam: RingElement, sigma: RingAut, printed: str
) -> Tuple[ExampleReport, SpanBasis]:
    ctx, n = lam.ctx, len(rows[0])
    ring = QuotientRing(ctx, n, lam)
    rows_basis = SpanBasis.from_echelon(row_span(rows, ctx), ctx, n, ring)
    closure = ideal_span(rows, ring)
    report = ExampleReport(which, ctx.p, lam, sigma, printed)
    report.rank = rows_basis.rank
    report.closure_rank = closure.rank
    report.rows_invariant = oracle.ideal_check(rows_basis, lam)
    report.sigma_self_orthogonal = oracle.brute_self_orthogonal(closure, sigma)
    report.self_orthogonal = oracle.brute_self_orthogonal(closure, None)
    report.sigma_self_dual = closure == oracle.brute_dual(closure, sigma)
    return report, closure


def _spec_span(spec: CodeSpec) -> SpanBasis:
    return span_basis(generators(spec), spec.ring)


def example_1() -> ExampleReport:
    ctx = f9()
    lam = _ring(ctx, [0, 1])
    spec = CodeSpec(ctx, 2, lam, Kind.TYPE4, 7, 0, (), 5)
    report, closure = _matrix_report(
        1, g1(), lam, galois_aut(ctx, 1), format_spec(spec)
    )
    report.spec = validate_spec(spec)
    report.spec_matches = _spec_span(report.spec) == closure
    return report


def example_2() -> ExampleReport:
    ctx = f25()
    lam = _ring(ctx, [2, 2])
    printed = CodeSpec(ctx, 1, lam, Kind.TYPE4, 4, 2, (ctx.one,), 3)
    report, closure = _matrix_report(
        2, g2(), lam, galois_aut(ctx, 1), format_spec(printed)
    )
    try:
        validate_spec(printed)
    except SpecError as e:
        report.notes.append(f"printed spec rejected: {e}")
    ring, base = printed.ring, printed.base
    printed_gens = [
        nilpotent_power(base, 4, ring) + nilpotent_power(base, 2, ring).times_u(),
        nilpotent_power(base, 3, ring).times_u(),
    ]
    if span_basis(printed_gens, ring) == closure:
        report.notes.append("printed generators span the matrix code")
    report.spec = normalize_spec(printed)
    report.spec_matches = _spec_span(report.spec) == closure
    return report


def example_3() -> ExampleReport:
    ctx = f9()
    rows = g3()
    # the only constants the row span is invariant under
    candidates = oracle.consistent_constants(
        SpanBasis.from_echelon(row_span(rows, ctx), ctx, len(rows[0]))
    )
    lam = candidates[0] if candidates else RingElement.one(ctx)
    report, closure = _matrix_report(
        3, rows, lam, galois_aut(ctx, 1), "type3 i=8 t=0 h=0 over lambda=w"
    )
    report.notes.append(
        "constants consistent with the matrix: "
        + ", ".join(format_ring(c) for c in candidates)
    )
    printed = CodeSpec(ctx, 2, _ring(ctx, [0, 1]), Kind.TYPE3, 8)
    report.spec = printed
    report.spec_matches = _spec_span(printed) == closure
    report.min_distance = oracle.min_distance(closure)
    if report.min_distance is not None:
        n = len(rows[0])
        report.mds = closure.rank == 2 * ctx.m * (n - report.min_distance + 1)
    return report


EXAMPLES = {1: example_1, 2: example_2, 3: example_3}


def build_example(which: int) -> ExampleReport:
    if which not in EXAMPLES:
        raise ValueError(f"No such example: {which}")
    report = EXAMPLES[which]()
    _logger.debug("example %d: rank %d", which, report.closure_rank)
    return report


def pp(report: ExampleReport, fp: IO[str]) -> None:
    p = report.p
    fp.write(f"example {report.which}\n")
    fp.write(f"lambda={format_ring(report.lam)}\n")
    fp.write(f"printed spec: {report.printed}\n")
    fp.write(f"rows size={format_size(p, report.rank)}\n")
    fp.write(f"size={format_size(p, report.closure_rank)}\n")
    fp.write(f"rows lambda-invariant={str(report.rows_invariant).lower()}\n")
    if report.spec is not None:
        fp.write(f"spec: {format_spec(report.spec)}\n")
        fp.write(f"spec matches matrix={str(report.spec_matches).lower()}\n")
    so = str(report.sigma_self_orthogonal).lower()
    fp.write(f"sigma-self-orthogonal={so}\n")
    fp.write(f"self-orthogonal={str(report.self_orthogonal).lower()}\n")
    fp.write(f"sigma-self-dual={str(report.sigma_self_dual).lower()}\n")
    if report.min_distance is not None:
        fp.write(f"d={report.min_distance}\n")
        fp.write(f"mds={str(report.mds).lower()}\n")
    for note in report.notes:
        fp.write(f"note: {note}\n")

