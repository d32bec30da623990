#!/usr/bin/env python3
"""Closed-form sigma-duals and the sigma-self-orthogonality/duality predicates.

Every formula is written in the nilpotent basis of the dual ring:
Z = b'x - 1 with b' = theta(b^-1), where b is the code's base and
sigma^-1 = Theta_{theta, epsilon}. b' is the base of the dual constant.
"""
from dataclasses import dataclass
import logging
from typing import List

from sigmadual.chain_ring import RingAut, RingElement, aut_invert, dual_constant
from sigmadual.codes import CodeSpec, Kind, normalize_spec
from sigmadual.gf import FieldElement, frobenius, gamma0_of
from sigmadual.polyquot import (
    NilExpansion,
    QuotientPoly,
    QuotientRing,
    nil_expand,
    nilpotent_power,
)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    value: bool
    clause: str

    def __bool__(self) -> bool:
        return self.value


@dataclass
class DualResult:
    dual_lambda: RingElement
    dual_spec: CodeSpec
    witness_generators: List[QuotientPoly]
    clause: str


def dual_base(spec: CodeSpec, sigma: RingAut) -> FieldElement:
    return frobenius(spec.base.inv(), aut_invert(sigma).theta)


def root_fixed(spec: CodeSpec, sigma: RingAut) -> bool:
    """base = theta(base^-1): the dual lives over the same nilpotent."""
    return dual_base(spec, sigma) == spec.base


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _tail_poly(
    spec: CodeSpec, sigma: RingAut, ring: QuotientRing, base: FieldElement
) -> QuotientPoly:
    """-sum_j eps theta(h_j) (-1)^(j+t-i) Z^j (base x)^(i-t-j) in ring."""
    sigma_inv = aut_invert(sigma)
    ctx = spec.ctx
    scaled_x = ring.linear(base) + ring.one()
    result = ring.zero()
    for j, hj in enumerate(spec.h):
        if hj.is_zero():
            continue
        c = sigma_inv.epsilon * frobenius(hj, sigma_inv.theta)
        c = c * ctx.scalar(-_sign(j + spec.t - spec.i))
        term = nilpotent_power(base, j, ring) * scaled_x ** (spec.i - spec.t - j)
        result = result + term.scale(RingElement.of(c))
    return result


def sigma_dual(spec: CodeSpec, sigma: RingAut) -> DualResult:
    ctx, n, s = spec.ctx, spec.n, spec.s
    mu = dual_constant(spec.lam, sigma)
    ring = QuotientRing(ctx, n, mu)
    u = RingElement.u(ctx)

    def dual(kind: Kind, i: int = 0, t: int = 0, h=(), omega: int = 0) -> CodeSpec:
        return normalize_spec(CodeSpec(ctx, s, mu, kind, i, t, tuple(h), omega))

    if spec.kind == Kind.ZERO:
        return DualResult(mu, dual(Kind.WHOLE), [ring.one()], "trivial.zero")
    if spec.kind == Kind.WHOLE:
        return DualResult(mu, dual(Kind.ZERO), [], "trivial.whole")

    base = dual_base(spec, sigma)
    # the dual constant's own base, reached along a different path
    assert base == gamma0_of(mu.a, s)

    def Z(k: int) -> QuotientPoly:
        return nilpotent_power(base, k, ring)

    i, t, omega = spec.i, spec.t, spec.omega
    if spec.kind == Kind.CHAIN:
        return DualResult(mu, dual(Kind.CHAIN, 2 * n - i), [Z(2 * n - i)], "chain")
    if spec.kind == Kind.TYPE2:
        witness = [Z(n - i), ring.constant(u)]
        if i == 0:
            return DualResult(mu, dual(Kind.TYPE2, 0), witness, "torsion")
        return DualResult(mu, dual(Kind.TYPE4, n - i), witness, "torsion")
    if spec.kind == Kind.TYPE3 and spec.h_is_zero:
        return DualResult(mu, dual(Kind.TYPE3, n - i), [Z(n - i)], "principal.plain")
    if spec.kind == Kind.TYPE4 and spec.h_is_zero:
        witness = [Z(n - omega), Z(n - i).times_u()]
        if omega == 0:
            return DualResult(mu, dual(Kind.TYPE2, n - i), witness, "mixed.plain")
        return DualResult(
            mu, dual(Kind.TYPE4, n - omega, omega=n - i), witness, "mixed.plain"
        )

    tail = _tail_poly(spec, sigma, ring, base)
    h_dual = nil_expand(tail, base).field_part()
    if spec.kind == Kind.TYPE3 and 2 * i <= n + t:
        witness = [Z(n - i) + (Z(n + t - 2 * i) * tail).times_u()]
        result = dual(Kind.TYPE3, n - i, n + t - 2 * i, h_dual)
        return DualResult(mu, result, witness, "principal.low")
    if spec.kind == Kind.TYPE3:
        witness = [Z(i - t) + tail.times_u(), Z(n - i).times_u()]
        if t == 0:
            result = dual(Kind.TYPE3, i, 0, h_dual)
        else:
            result = dual(Kind.TYPE4, i - t, 0, h_dual[: n - i], n - i)
        return DualResult(mu, result, witness, "principal.high")
    t_dual = n - i - omega + t
    witness = [Z(n - omega) + (Z(t_dual) * tail).times_u(), Z(n - i).times_u()]
    if t == 0:
        result = dual(Kind.TYPE3, n - omega, t_dual, h_dual)
    else:
        result = dual(Kind.TYPE4, n - omega, t_dual, h_dual[: omega - t], n - i)
    return DualResult(mu, result, witness, "mixed.twisted")


def h_prime(spec: CodeSpec, sigma: RingAut) -> NilExpansion:
    """The dual coefficient polynomial in the code's own nilpotent basis."""
    if spec.kind not in (Kind.TYPE3, Kind.TYPE4) or spec.h_is_zero:
        raise ValueError("Needs a type3 or type4 spec with h != 0")
    if not root_fixed(spec, sigma):
        raise ValueError("root not fixed: base != theta(base^-1)")
    base = spec.base
    result = nil_expand(_tail_poly(spec, sigma, spec.ring, base), base)
    if spec.kind == Kind.TYPE3 and 2 * spec.i > spec.n + spec.t:
        result = result.truncate(spec.n - spec.i)
    return result


def h_prime_statement(spec: CodeSpec) -> NilExpansion:
    """-sum_j h_j (-gamma)^(i-t+j) (base x - 1)^j x^(i-j-t), nil-expanded."""
    ring, base, gamma = spec.ring, spec.base, spec.lam.a
    result = ring.zero()
    for j, hj in enumerate(spec.h):
        c = -(hj * (-gamma) ** (spec.i - spec.t + j))
        term = nilpotent_power(base, j, ring) * ring.x_power(spec.i - j - spec.t)
        result = result + term.scale(RingElement.of(c))
    return nil_expand(result, base)


def nil_divides(k: int, f: NilExpansion) -> bool:
    """(base x - 1)^k divides f."""
    if k < 0:
        raise ValueError(f"Negative exponent: {k}")
    return all(c.is_zero() for c in f.coeffs[:k])


def _divides(spec: CodeSpec, sigma: RingAut) -> bool:
    k = spec.n - spec.i - spec.t
    return nil_divides(k, spec.h_expansion - h_prime(spec, sigma))


def is_sigma_self_orthogonal(spec: CodeSpec, sigma: RingAut) -> Verdict:
    n, i, t, omega = spec.n, spec.i, spec.t, spec.omega
    if spec.kind == Kind.CHAIN:
        return Verdict(n <= i <= 2 * n, "chain.range")
    if spec.kind == Kind.ZERO:
        return Verdict(True, "trivial.zero")
    if spec.kind == Kind.WHOLE:
        return Verdict(False, "trivial.whole")
    if spec.kind == Kind.TYPE2:
        return Verdict(True, "torsion")
    if not root_fixed(spec, sigma):
        return Verdict(False, "root-not-fixed")
    if spec.kind == Kind.TYPE3 and spec.h_is_zero:
        return Verdict(2 * i >= n, "principal.plain")
    if spec.kind == Kind.TYPE4 and spec.h_is_zero:
        return Verdict(omega + i >= n, "mixed.plain")
    if spec.kind == Kind.TYPE3:
        branch = "principal.low" if 2 * i <= n + t else "principal.high"
        if n <= i + t:
            return Verdict(True, f"{branch}.tail")
        if branch == "principal.low" and n > 2 * i:
            return Verdict(False, f"{branch}.short")
        return Verdict(_divides(spec, sigma), f"{branch}.divides")
    if n <= i + t:
        return Verdict(True, "mixed.twisted.tail")
    if n > i + omega:
        return Verdict(False, "mixed.twisted.short")
    return Verdict(_divides(spec, sigma), "mixed.twisted.divides")


def is_sigma_self_dual(spec: CodeSpec, sigma: RingAut) -> Verdict:
    n, i, t, omega = spec.n, spec.i, spec.t, spec.omega
    if spec.kind == Kind.CHAIN:
        return Verdict(i == n, "chain.unique")
    if spec.kind == Kind.ZERO:
        return Verdict(False, "trivial.zero")
    if spec.kind == Kind.WHOLE:
        return Verdict(False, "trivial.whole")
    if spec.kind == Kind.TYPE2:
        return Verdict(i == 0, "torsion.u")
    if spec.kind == Kind.TYPE3:
        # only |C| = p^(mn) can be self-dual: h != 0, t = 0, i > n/2
        if spec.h_is_zero or t != 0 or 2 * i <= n:
            return Verdict(False, "principal.unbalanced")
        verdict = is_sigma_self_orthogonal(spec, sigma)
        if not verdict:
            return verdict
        return Verdict(True, "principal.balanced")
    if omega + i != n:
        return Verdict(False, "mixed.unbalanced")
    if not root_fixed(spec, sigma):
        return Verdict(False, "root-not-fixed")
    if spec.h_is_zero:
        return Verdict(True, "mixed.plain.balanced")
    return Verdict(_divides(spec, sigma), "mixed.twisted.balanced")

