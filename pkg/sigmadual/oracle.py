#!/usr/bin/env python3
"""Brute-force linear algebra over F_p, independent of the closed forms."""
import json
import logging
from typing import IO, Any, List, Optional

import numpy as np

from sigmadual import config
from sigmadual.chain_ring import (
    RingAut,
    RingElement,
    aut_apply,
    aut_invert,
    dual_constant,
    ring_inv,
    ring_units,
)
from sigmadual.codes import (
    SpanBasis,
    contains,
    enumerate_codewords,
    ideal_span,
    ring_basis,
)
from sigmadual.echelon import EchelonBasis
from sigmadual.gf import FieldCtx
from sigmadual.linalg import nullspace_mod
from sigmadual.polyquot import (
    QuotientRing,
    flatten,
    reciprocal,
    sigma_inner,
    twisted_shift,
)

_logger = logging.getLogger(__name__)


def _check_limits(ctx: FieldCtx, n: int) -> None:
    if 2 * ctx.m > config.ORACLE_BLOCK_LIMIT:
        raise RuntimeError(
            f"2m = {2 * ctx.m} exceeds the oracle limit {config.ORACLE_BLOCK_LIMIT}"
        )
    if 2 * ctx.m * n > config.ORACLE_DIMENSION_LIMIT:
        raise RuntimeError(
            f"2mn = {2 * ctx.m * n} exceeds the oracle limit "
            f"{config.ORACLE_DIMENSION_LIMIT}"
        )


def _span(ctx: FieldCtx, n: int, rows: np.ndarray, ring=None) -> SpanBasis:
    echelon = EchelonBasis(ctx.p, 2 * ctx.m * n)
    echelon.update(rows)
    return SpanBasis.from_echelon(echelon, ctx, n, ring)


def brute_dual(code_basis: SpanBasis, sigma: Optional[RingAut]) -> SpanBasis:
    """Kernel of y -> <c, y>_sigma over an F_p-basis of C; None is Euclidean."""
    ctx, n = code_basis.ctx, code_basis.n
    _check_limits(ctx, n)
    block = 2 * ctx.m
    dim = block * n
    images = ring_basis(ctx)
    if sigma is not None:
        images = [aut_apply(sigma, e) for e in images]
    constraints = np.zeros((code_basis.rank * block, dim), dtype=np.int64)
    for r, word in enumerate(code_basis.words()):
        for k, c in enumerate(word):
            if not c:
                continue
            for l, image in enumerate(images):
                column = k * block + l
                constraints[r * block : (r + 1) * block, column] = flatten(
                    [c * image]
                )
    ring = None
    if code_basis.ring is not None:
        lam = code_basis.ring.lam
        mu = ring_inv(lam) if sigma is None else dual_constant(lam, sigma)
        ring = QuotientRing(ctx, n, mu)
    return _span(ctx, n, nullspace_mod(constraints, ctx.p), ring)


def brute_dual_via_euclidean(code_basis: SpanBasis, sigma: RingAut) -> SpanBasis:
    """sigma^-1 applied to the Euclidean dual."""
    euclidean = brute_dual(code_basis, None)
    sigma_inv = aut_invert(sigma)
    rows = [
        flatten([aut_apply(sigma_inv, c) for c in word]) for word in euclidean.words()
    ]
    ctx, n = code_basis.ctx, code_basis.n
    rows = np.asarray(rows, dtype=np.int64).reshape(len(rows), 2 * ctx.m * n)
    ring = None
    if euclidean.ring is not None:
        ring = QuotientRing(ctx, n, aut_apply(sigma_inv, euclidean.ring.lam))
    return _span(ctx, n, rows, ring)


def brute_self_orthogonal(code_basis: SpanBasis, sigma: Optional[RingAut]) -> bool:
    words = code_basis.words()
    for x in words:
        for y in words:
            if sigma_inner(x, y, sigma):
                return False
    return True


def brute_annihilator(code_basis: SpanBasis) -> SpanBasis:
    """All g with f g = 0 for every f in C."""
    ring = code_basis.ring
    if ring is None:
        raise ValueError("Annihilator needs the ambient quotient ring")
    ctx, n = ring.ctx, ring.n
    _check_limits(ctx, n)
    block = 2 * ctx.m
    dim = block * n
    multipliers = ring_basis(ctx)
    constraints = np.zeros((code_basis.rank * dim, dim), dtype=np.int64)
    for r, word in enumerate(code_basis.words()):
        # (e x^k) f for the coordinate g = e x^k
        shifted = tuple(word)
        for k in range(n):
            for l, e in enumerate(multipliers):
                constraints[r * dim : (r + 1) * dim, k * block + l] = flatten(
                    [e * c for c in shifted]
                )
            shifted = twisted_shift(shifted, ring.lam)
    return _span(ctx, n, nullspace_mod(constraints, ctx.p), ring)


def reciprocal_annihilator(code_basis: SpanBasis) -> SpanBasis:
    """Ideal of R[x]/<x^n - lam^-1> generated by the reciprocals of A(C)."""
    ring = code_basis.ring
    target = QuotientRing(ring.ctx, ring.n, ring_inv(ring.lam))
    words = []
    for word in brute_annihilator(code_basis).words():
        if any(word):
            rec = reciprocal(word)
            words.append(rec + (RingElement.zero(ring.ctx),) * (ring.n - len(rec)))
    return ideal_span(words, target)


def min_distance(code_basis: SpanBasis, cap: Optional[int] = None) -> Optional[int]:
    """Minimum Hamming weight over nonzero codewords; None for the zero code."""
    result = None
    for word in enumerate_codewords(code_basis, cap):
        weight = sum(1 for c in word if c)
        if weight and (result is None or weight < result):
            result = weight
    return result


def ideal_check(code_basis: SpanBasis, lam: RingElement) -> bool:
    """tau_lam maps every basis row back into the span."""
    return all(
        contains(code_basis, twisted_shift(word, lam)) for word in code_basis.words()
    )


def consistent_constants(code_basis: SpanBasis) -> List[RingElement]:
    return [lam for lam in ring_units(code_basis.ctx) if ideal_check(code_basis, lam)]


class VerificationLog:
    """One JSON object per check."""

    def __init__(self, fp: Optional[IO[str]] = None):
        self.fp = fp
        self.passed = 0
        self.failed: List[dict] = []

    def record(
        self, spec_id: str, sigma_id: str, check: str, expected: Any, got: Any
    ) -> bool:
        ok = expected == got
        entry = {
            "spec": spec_id,
            "sigma": sigma_id,
            "check": check,
            "expected": expected,
            "got": got,
            "pass": ok,
        }
        if self.fp is not None:
            self.fp.write(json.dumps(entry) + "\n")
        if ok:
            self.passed += 1
        else:
            self.failed.append(entry)
            _logger.error(
                "%s %s %s: expected %r, got %r", spec_id, sigma_id, check, expected, got
            )
        return ok

