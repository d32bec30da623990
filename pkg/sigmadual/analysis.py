#!/usr/bin/env python3
from typing import Dict, Optional, Tuple

from sigmadual.chain_ring import RingAut
from sigmadual.codes import (
    CodeSpec,
    SpanBasis,
    code_size,
    generators,
    span_basis,
    torsion_residue,
    validate_spec,
)
from sigmadual.duality import (
    DualResult,
    Verdict,
    is_sigma_self_dual,
    is_sigma_self_orthogonal,
    sigma_dual,
)
from sigmadual import oracle


class CodeAnalysis:
    """A validated spec with its span, closed forms and oracle results, computed
    on first use and kept for the lifetime of the analysis."""

    def __init__(self, spec: CodeSpec, cap: Optional[int] = None):
        self.spec = validate_spec(spec)
        self.cap = cap
        self._span: Optional[SpanBasis] = None
        self._torsion_residue: Optional[Tuple[SpanBasis, SpanBasis]] = None
        self._duals: Dict[RingAut, DualResult] = {}
        self._oracle_duals: Dict[RingAut, SpanBasis] = {}

    @property
    def size_exponent(self) -> int:
        return code_size(self.spec)

    @property
    def span(self) -> SpanBasis:
        if self._span is None:
            self._span = span_basis(generators(self.spec), self.spec.ring)
        return self._span

    @property
    def torsion(self) -> SpanBasis:
        return self._tor_res()[0]

    @property
    def residue(self) -> SpanBasis:
        return self._tor_res()[1]

    def _tor_res(self) -> Tuple[SpanBasis, SpanBasis]:
        if self._torsion_residue is None:
            self._torsion_residue = torsion_residue(self.span)
        return self._torsion_residue

    def dual(self, sigma: RingAut) -> DualResult:
        if sigma not in self._duals:
            self._duals[sigma] = sigma_dual(self.spec, sigma)
        return self._duals[sigma]

    def dual_span(self, sigma: RingAut) -> SpanBasis:
        dual_spec = self.dual(sigma).dual_spec
        return span_basis(generators(dual_spec), dual_spec.ring)

    def witness_span(self, sigma: RingAut) -> SpanBasis:
        result = self.dual(sigma)
        return span_basis(result.witness_generators, result.dual_spec.ring)

    def oracle_dual(self, sigma: RingAut) -> SpanBasis:
        if sigma not in self._oracle_duals:
            self._oracle_duals[sigma] = oracle.brute_dual(self.span, sigma)
        return self._oracle_duals[sigma]

    def self_orthogonal(self, sigma: RingAut) -> Verdict:
        return is_sigma_self_orthogonal(self.spec, sigma)

    def self_dual(self, sigma: RingAut) -> Verdict:
        return is_sigma_self_dual(self.spec, sigma)

    def oracle_self_orthogonal(self, sigma: RingAut) -> bool:
        return oracle.brute_self_orthogonal(self.span, sigma)

    def oracle_self_dual(self, sigma: RingAut) -> bool:
        return self.span == self.oracle_dual(sigma)

    def min_distance(self) -> Optional[int]:
        return oracle.min_distance(self.span, self.cap)

    def close(self):
        self._duals.clear()
        self._oracle_duals.clear()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
