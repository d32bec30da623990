#!/usr/bin/env python3
"""Constacyclic codes of length p^s over R: classification, sizes and spans."""
from dataclasses import dataclass, replace
import enum
import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from sigmadual import config
from sigmadual.chain_ring import RingElement
from sigmadual.echelon import EchelonBasis
from sigmadual.gf import FieldCtx, FieldElement, gamma0_of
from sigmadual.linalg import mod_p
from sigmadual.polyquot import (
    NilExpansion,
    QuotientPoly,
    QuotientRing,
    flatten,
    nil_collect,
    nilpotent_power,
    twisted_shift,
    unflatten,
)

_logger = logging.getLogger(__name__)


class Kind(enum.Enum):
    CHAIN = "chain"
    ZERO = "type1-zero"
    WHOLE = "type1-whole"
    TYPE2 = "type2"
    TYPE3 = "type3"
    TYPE4 = "type4"


class SpecError(ValueError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def _trim_h(h: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
    h = list(h)
    while h and h[-1].is_zero():
        h.pop()
    return tuple(h)


@dataclass(frozen=True)
class CodeSpec:
    ctx: FieldCtx
    s: int
    lam: RingElement
    kind: Kind
    i: int = 0
    t: int = 0
    h: Tuple[FieldElement, ...] = ()
    omega: int = 0

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def n(self) -> int:
        return self.ctx.p**self.s

    @property
    def base(self) -> FieldElement:
        """gamma_0 (or alpha_0 in the chain case): base^(p^s) = lam.a^-1."""
        return gamma0_of(self.lam.a, self.s)

    @property
    def ring(self) -> QuotientRing:
        return QuotientRing(self.ctx, self.n, self.lam)

    @property
    def h_is_zero(self) -> bool:
        return not any(self.h)

    @property
    def h_expansion(self) -> NilExpansion:
        return NilExpansion.of_field(self.base, self.h)

    @property
    def T(self) -> int:
        return t_value(self.i, self.t, self.h, self.n)


def t_value(i: int, t: int, h: Sequence[FieldElement], n: int) -> int:
    """Least T with u(base x - 1)^T in <(base x - 1)^i + u(base x - 1)^t h>."""
    if not any(h):
        return i
    return min(i, n - i + t)


def _violations(spec: CodeSpec) -> List[str]:
    result = []
    if spec.s < 1:
        return [f"s must be positive: {spec.s}"]
    if spec.lam.ctx != spec.ctx or any(c.ctx != spec.ctx for c in spec.h):
        return ["field context mismatch"]
    if not spec.lam.is_unit():
        return ["lambda is not a unit"]
    n = spec.n
    if spec.kind == Kind.CHAIN:
        if spec.lam.b.is_zero():
            result.append("chain kind needs lambda = alpha + u beta with beta != 0")
        if not 0 <= spec.i <= 2 * n:
            result.append(f"i out of range 0..{2 * n}")
        return result
    if not spec.lam.b.is_zero():
        result.append(f"{spec.kind.value} needs lambda in the field")
    if spec.kind == Kind.TYPE2:
        if not 0 <= spec.i <= n - 1:
            result.append(f"i out of range 0..{n - 1}")
    elif spec.kind in (Kind.TYPE3, Kind.TYPE4):
        if not 1 <= spec.i <= n - 1:
            result.append(f"i out of range 1..{n - 1}")
        h = _trim_h(spec.h)
        if h:
            if h[0].is_zero():
                result.append("h_0 = 0")
            if not 0 <= spec.t <= spec.i - 1:
                result.append(f"t out of range 0..{spec.i - 1}")
        if spec.kind == Kind.TYPE4 and not result:
            if spec.omega < 0:
                result.append("omega < 0")
            elif spec.omega >= t_value(spec.i, spec.t, h, n):
                result.append("omega >= T")
            elif h and len(h) - 1 > spec.omega - spec.t - 1:
                result.append("deg h > omega - t - 1")
    return result


def validate_spec(spec: CodeSpec) -> CodeSpec:
    """Checks every constraint and returns the canonical form of the spec."""
    violations = _violations(spec)
    if violations:
        _logger.debug("Rejected %s: %s", spec.kind.value, violations)
        raise SpecError(violations)
    return normalize_spec(spec)


def normalize_spec(spec: CodeSpec) -> CodeSpec:
    if spec.kind not in (Kind.TYPE3, Kind.TYPE4):
        return replace(spec, t=0, h=(), omega=0)
    h = _trim_h(spec.h)
    if not h:
        spec = replace(spec, t=0, h=())
    else:
        spec = replace(spec, h=h)
    if spec.kind == Kind.TYPE4:
        if spec.omega < spec.T:
            return spec
        # u(base x - 1)^omega already lies in the principal part
        spec = replace(spec, kind=Kind.TYPE3, omega=0)
    if spec.h:
        spec = replace(spec, h=_trim_h(spec.h[: spec.T - spec.t]))
    return replace(spec, omega=0)


def code_size(spec: CodeSpec) -> int:
    """Exponent e with |C| = p^e."""
    n, m = spec.n, spec.m
    if spec.kind == Kind.CHAIN:
        return m * (2 * n - spec.i)
    if spec.kind == Kind.ZERO:
        return 0
    if spec.kind == Kind.WHOLE:
        return 2 * m * n
    if spec.kind == Kind.TYPE2:
        return m * (n - spec.i)
    if spec.kind == Kind.TYPE3:
        if spec.h_is_zero or 2 * spec.i <= n + spec.t:
            return 2 * m * (n - spec.i)
        return m * (n - spec.t)
    return m * (2 * n - spec.i - spec.omega)


def generators(spec: CodeSpec) -> List[QuotientPoly]:
    ring = spec.ring
    if spec.kind == Kind.ZERO:
        return []
    if spec.kind == Kind.WHOLE:
        return [ring.one()]
    base = spec.base
    if spec.kind == Kind.CHAIN:
        return [nilpotent_power(base, spec.i, ring)]
    if spec.kind == Kind.TYPE2:
        return [nilpotent_power(base, spec.i, ring).times_u()]
    gens = [nilpotent_power(base, spec.i, ring)]
    if not spec.h_is_zero:
        tail = nilpotent_power(base, spec.t, ring) * nil_collect(
            spec.h_expansion, ring
        )
        gens[0] = gens[0] + tail.times_u()
    if spec.kind == Kind.TYPE4:
        gens.append(nilpotent_power(base, spec.omega, ring).times_u())
    return gens


def ring_basis(ctx: FieldCtx) -> List[RingElement]:
    """F_p-basis of R: w^l and u w^l."""
    units = [RingElement.of(e) for e in ctx.basis()]
    return units + [e.times_u() for e in units]


Vector = Union[Tuple[RingElement, ...], Tuple[FieldElement, ...]]


class SpanBasis:
    """Canonical reduced F_p-basis of a code.

    width is 2 for words over R (a and b parts per position) and 1 for
    words over F_{p^m} (torsion and residue codes).
    """

    def __init__(
        self,
        ctx: FieldCtx,
        n: int,
        rows: np.ndarray,
        pivots: Tuple[int, ...],
        ring: Optional[QuotientRing] = None,
        width: int = 2,
    ):
        self.ctx = ctx
        self.n = n
        self.rows = rows
        self.pivots = pivots
        self.ring = ring
        self.width = width

    @classmethod
    def from_echelon(
        cls,
        echelon: EchelonBasis,
        ctx: FieldCtx,
        n: int,
        ring: Optional[QuotientRing] = None,
        width: int = 2,
    ) -> "SpanBasis":
        rows, pivots = echelon.matrix()
        return cls(ctx, n, rows, pivots, ring, width)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def dim(self) -> int:
        return self.width * self.ctx.m * self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.pivots == other.pivots
            and np.array_equal(self.rows, other.rows)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"SpanBasis(rank={self.rank}, dim={self.dim})"

    def flat(self, w: Vector) -> np.ndarray:
        if len(w) != self.n:
            raise ValueError(f"Word length mismatch: {len(w)} != {self.n}")
        if self.width == 2:
            values = flatten(w)
        else:
            values = [c for x in w for c in x.coeffs]
        return np.asarray(values, dtype=np.int64)

    def word(self, values: np.ndarray) -> Vector:
        if self.width == 2:
            return unflatten(values, self.ctx)
        m = self.ctx.m
        return tuple(
            self.ctx.element([int(v) for v in values[k : k + m]])
            for k in range(0, len(values), m)
        )

    def words(self) -> List[Vector]:
        return [self.word(row) for row in self.rows]

    def reduce(self, values: np.ndarray) -> np.ndarray:
        v = mod_p(values, self.p)
        for row, pivot in zip(self.rows, self.pivots):
            c = v[pivot]
            if c:
                v = mod_p(v - c * row, self.p)
        return v

    def contains_flat(self, values: np.ndarray) -> bool:
        return not self.reduce(values).any()

    def is_subspace_of(self, other: "SpanBasis") -> bool:
        return all(other.contains_flat(row) for row in self.rows)


def empty_span(ring: QuotientRing) -> SpanBasis:
    return SpanBasis.from_echelon(
        EchelonBasis(ring.ctx.p, 2 * ring.ctx.m * ring.n), ring.ctx, ring.n, ring
    )


def span_basis(gens: Sequence[QuotientPoly], ring: QuotientRing) -> SpanBasis:
    """F_p-span of e x^k g for e in the F_p-basis of R, 0 <= k < n."""
    ctx = ring.ctx
    echelon = EchelonBasis(ctx.p, 2 * ctx.m * ring.n)
    multipliers = ring_basis(ctx)
    for g in gens:
        if g.ring != ring:
            raise ValueError("Generator lives in a different quotient ring")
        word = g.coeffs
        for _ in range(ring.n):
            for e in multipliers:
                echelon.add(flatten([e * c for c in word]))
            word = twisted_shift(word, ring.lam)
    return SpanBasis.from_echelon(echelon, ctx, ring.n, ring)


def ideal_span(words: Sequence[Sequence[RingElement]], ring: QuotientRing) -> SpanBasis:
    """Smallest lam-constacyclic R-submodule containing the words."""
    ctx = ring.ctx
    echelon = EchelonBasis(ctx.p, 2 * ctx.m * ring.n)
    multipliers = ring_basis(ctx)
    pending = [tuple(w) for w in words]
    while pending:
        word = pending.pop()
        for e in multipliers:
            scaled = tuple(e * c for c in word)
            if echelon.add(flatten(scaled)):
                pending.append(twisted_shift(scaled, ring.lam))
    return SpanBasis.from_echelon(echelon, ctx, ring.n, ring)


def contains(basis: SpanBasis, w: Vector) -> bool:
    return basis.contains_flat(basis.flat(w))


def torsion_residue(basis: SpanBasis) -> Tuple[SpanBasis, SpanBasis]:
    """Tor(C) = {b : ub in C} and Res(C) = C mod u, as F_p-spans."""
    ctx, n, m = basis.ctx, basis.n, basis.ctx.m
    a_cols = [k * 2 * m + j for k in range(n) for j in range(m)]
    b_cols = [k * 2 * m + m + j for k in range(n) for j in range(m)]
    # a-part columns first so rows with a b-column pivot have zero a-part
    reordered = EchelonBasis(ctx.p, 2 * m * n)
    reordered.update(np.concatenate([r[a_cols], r[b_cols]]) for r in basis.rows)
    tor = EchelonBasis(ctx.p, m * n)
    res = EchelonBasis(ctx.p, m * n)
    for row in reordered:
        if row.pivot < m * n:
            res.add(row.vector[: m * n])
        else:
            tor.add(row.vector[m * n :])
    return (
        SpanBasis.from_echelon(tor, ctx, n, width=1),
        SpanBasis.from_echelon(res, ctx, n, width=1),
    )


def enumerate_codewords(
    basis: SpanBasis, cap: Optional[int] = None
) -> Iterator[Vector]:
    cap = config.ENUMERATION_CAP if cap is None else cap
    count = basis.p**basis.rank
    if count > cap:
        raise RuntimeError(
            f"{basis.p}^{basis.rank} codewords exceed the enumeration cap {cap}"
        )
    for combination in itertools.product(range(basis.p), repeat=basis.rank):
        if basis.rank:
            coefficients = np.asarray(combination, dtype=np.int64)
            values = mod_p(coefficients @ basis.rows, basis.p)
        else:
            values = np.zeros(basis.dim, dtype=np.int64)
        yield basis.word(values)


def iter_specs(
    ctx: FieldCtx, s: int, lam: RingElement, h_bound: Optional[int] = None
) -> Iterator[CodeSpec]:
    """Every valid canonical spec over lam, in a fixed order."""
    n = ctx.p**s
    if not lam.b.is_zero():
        for i in range(2 * n + 1):
            yield CodeSpec(ctx, s, lam, Kind.CHAIN, i)
        return
    yield CodeSpec(ctx, s, lam, Kind.ZERO)
    yield CodeSpec(ctx, s, lam, Kind.WHOLE)
    for i in range(n):
        yield CodeSpec(ctx, s, lam, Kind.TYPE2, i)
    for i in range(1, n):
        yield CodeSpec(ctx, s, lam, Kind.TYPE3, i)
    pool = list(ctx.elements())
    if h_bound is not None:
        pool = pool[:h_bound]
    units = list(ctx.units())

    def h_grid(length: int) -> Iterator[Tuple[FieldElement, ...]]:
        for h0 in units:
            for rest in itertools.product(pool, repeat=length - 1):
                yield _trim_h((h0,) + rest)

    for i in range(1, n):
        for t in range(i):
            T = min(i, n - i + t)
            for h in h_grid(T - t):
                yield CodeSpec(ctx, s, lam, Kind.TYPE3, i, t, h)
    for i in range(1, n):
        for omega in range(i):
            yield CodeSpec(ctx, s, lam, Kind.TYPE4, i, 0, (), omega)
    for i in range(1, n):
        for t in range(i):
            T = min(i, n - i + t)
            for omega in range(t + 1, T):
                for h in h_grid(omega - t):
                    yield CodeSpec(ctx, s, lam, Kind.TYPE4, i, t, h, omega)
