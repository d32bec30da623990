#!/usr/bin/env python3
"""Polynomials in R[x]/<x^n - lam>, the (base x - 1)-adic basis and sigma maps."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sigmadual.chain_ring import RingAut, RingElement, aut_apply, ring_inv
from sigmadual.gf import FieldCtx, FieldElement


@dataclass(frozen=True)
class QuotientRing:
    ctx: FieldCtx
    n: int
    lam: RingElement

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive: {self.n}")
        if not self.lam.is_unit():
            raise ValueError(f"lambda must be a unit: {self.lam!r}")

    def poly(self, coeffs: Iterable[RingElement]) -> "QuotientPoly":
        """Reduces coefficients beyond x^{n-1} with x^n = lam."""
        coeffs = list(coeffs)
        result = [RingElement.zero(self.ctx)] * self.n
        lam_power = RingElement.one(self.ctx)
        for start in range(0, len(coeffs), self.n):
            for k, c in enumerate(coeffs[start : start + self.n]):
                if c:
                    result[k] = result[k] + lam_power * c
            lam_power = lam_power * self.lam
        return QuotientPoly(self, tuple(result))

    def constant(self, c: RingElement) -> "QuotientPoly":
        return self.poly([c])

    def zero(self) -> "QuotientPoly":
        return self.poly([])

    def one(self) -> "QuotientPoly":
        return self.constant(RingElement.one(self.ctx))

    def x_power(self, k: int) -> "QuotientPoly":
        """x^k for any integer k; x^{-1} = lam^{-1} x^{n-1}."""
        q, r = divmod(k, self.n)
        scale = RingElement.one(self.ctx)
        base = self.lam if q >= 0 else ring_inv(self.lam)
        for _ in range(abs(q)):
            scale = scale * base
        coeffs = [RingElement.zero(self.ctx)] * self.n
        coeffs[r] = scale
        return QuotientPoly(self, tuple(coeffs))

    def linear(self, base: FieldElement) -> "QuotientPoly":
        """base*x - 1."""
        zero = RingElement.zero(self.ctx)
        coeffs = [zero] * self.n
        coeffs[0] = -RingElement.one(self.ctx)
        if self.n > 1:
            coeffs[1] = RingElement.of(base)
            return QuotientPoly(self, tuple(coeffs))
        coeffs[0] = coeffs[0] + self.lam.scale(base)
        return QuotientPoly(self, tuple(coeffs))


class QuotientPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: Tuple[RingElement, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other: "QuotientPoly") -> None:
        if not isinstance(other, QuotientPoly):
            raise TypeError(f"Expected a quotient polynomial: {other!r}")
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("Quotient ring mismatch")

    def __add__(self, other: "QuotientPoly") -> "QuotientPoly":
        self._check(other)
        return QuotientPoly(
            self.ring, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "QuotientPoly") -> "QuotientPoly":
        self._check(other)
        return QuotientPoly(
            self.ring, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "QuotientPoly":
        return QuotientPoly(self.ring, tuple(-x for x in self.coeffs))

    def __mul__(self, other: "QuotientPoly") -> "QuotientPoly":
        return qmul(self, other)

    def __pow__(self, k: int) -> "QuotientPoly":
        if k < 0:
            raise ValueError(f"Negative power: {k}")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"QuotientPoly({list(self.coeffs)})"

    def scale(self, c: RingElement) -> "QuotientPoly":
        return QuotientPoly(self.ring, tuple(c * x for x in self.coeffs))

    def times_u(self) -> "QuotientPoly":
        return QuotientPoly(self.ring, tuple(x.times_u() for x in self.coeffs))

    def shift(self) -> "QuotientPoly":
        """x * self."""
        return QuotientPoly(self.ring, twisted_shift(self.coeffs, self.ring.lam))


def qmul(f: QuotientPoly, g: QuotientPoly) -> QuotientPoly:
    f._check(g)
    ring = f.ring
    n = ring.n
    zero = RingElement.zero(ring.ctx)
    low = [zero] * n
    high = [zero] * n
    for i, x in enumerate(f.coeffs):
        if not x:
            continue
        for j, y in enumerate(g.coeffs):
            if not y:
                continue
            k = i + j
            if k < n:
                low[k] = low[k] + x * y
            else:
                high[k - n] = high[k - n] + x * y
    lam = ring.lam
    return QuotientPoly(
        ring, tuple(a + lam * b if b else a for a, b in zip(low, high))
    )


def twisted_shift(
    vector: Sequence[RingElement], lam: RingElement
) -> Tuple[RingElement, ...]:
    """(lam c_{n-1}, c_0, ..., c_{n-2})."""
    return (lam * vector[-1],) + tuple(vector[:-1])


def nilpotent_power(base: FieldElement, k: int, ring: QuotientRing) -> QuotientPoly:
    """(base*x - 1)^k."""
    if not 0 <= k <= 2 * ring.n:
        raise ValueError(f"Exponent out of range 0..{2 * ring.n}: {k}")
    return ring.linear(base) ** k


@dataclass(frozen=True)
class NilExpansion:
    """Coefficients c_j of sum_j c_j (base*x - 1)^j."""

    base: FieldElement
    coeffs: Tuple[RingElement, ...]

    @classmethod
    def of_field(
        cls, base: FieldElement, coeffs: Sequence[FieldElement]
    ) -> "NilExpansion":
        return cls(base, tuple(RingElement.of(c) for c in coeffs))

    def field_part(self) -> Tuple[FieldElement, ...]:
        return tuple(c.a for c in self.coeffs)

    def __sub__(self, other: "NilExpansion") -> "NilExpansion":
        zero = RingElement.zero(self.base.ctx)
        size = max(len(self.coeffs), len(other.coeffs))
        mine = self.coeffs + (zero,) * (size - len(self.coeffs))
        theirs = other.coeffs + (zero,) * (size - len(other.coeffs))
        return NilExpansion(self.base, tuple(x - y for x, y in zip(mine, theirs)))

    def truncate(self, length: int) -> "NilExpansion":
        return NilExpansion(self.base, self.coeffs[: max(length, 0)])


def nil_expand(f: QuotientPoly, base: FieldElement) -> NilExpansion:
    """Taylor shift in y = base*x - 1 by repeated synthetic division."""
    ctx = f.ring.ctx
    base_inv = base.inv()
    scale = ctx.one
    g: List[RingElement] = []
    for c in f.coeffs:
        g.append(c.scale(scale))
        scale = scale * base_inv
    coeffs = []
    zero = RingElement.zero(ctx)
    for _ in range(f.ring.n):
        acc = zero
        quotient = [zero] * max(len(g) - 1, 0)
        for k in range(len(g) - 1, -1, -1):
            acc = acc + g[k]
            if k:
                quotient[k - 1] = acc
        coeffs.append(acc)
        g = quotient
    return NilExpansion(base, tuple(coeffs))


def nil_collect(e: NilExpansion, ring: QuotientRing) -> QuotientPoly:
    y = ring.linear(e.base)
    result = ring.zero()
    for c in reversed(e.coeffs):
        result = result * y + ring.constant(c)
    return result


def reciprocal(coeffs: Sequence[RingElement]) -> Tuple[RingElement, ...]:
    """x^r f(1/x) for a plain polynomial of degree r."""
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("Reciprocal of the zero polynomial")
    return tuple(reversed(coeffs))


def sigma_map(f: QuotientPoly, sigma: RingAut) -> QuotientPoly:
    ring = QuotientRing(f.ring.ctx, f.ring.n, aut_apply(sigma, f.ring.lam))
    return QuotientPoly(ring, tuple(aut_apply(sigma, c) for c in f.coeffs))


def sigma_inner(
    x: Sequence[RingElement], y: Sequence[RingElement], sigma: Optional[RingAut]
) -> RingElement:
    """sum_i x_i sigma(y_i); sigma None is the Euclidean product."""
    if len(x) != len(y):
        raise ValueError(f"Length mismatch: {len(x)} != {len(y)}")
    result = RingElement.zero(x[0].ctx) if x else None
    for xi, yi in zip(x, y):
        if xi and yi:
            result = result + xi * (yi if sigma is None else aut_apply(sigma, yi))
    return result


def psi_map(
    f: QuotientPoly, gamma0: FieldElement, target: QuotientRing
) -> QuotientPoly:
    """f(x) -> f(gamma0 x) from R[x]/<x^n - 1> to R[x]/<x^n - gamma>."""
    if f.ring.n != target.n:
        raise ValueError("Length mismatch")
    coeffs = []
    scale = gamma0.ctx.one
    for c in f.coeffs:
        coeffs.append(c.scale(scale))
        scale = scale * gamma0
    return QuotientPoly(target, tuple(coeffs))


def reverse_map(f: QuotientPoly) -> QuotientPoly:
    """f(x) -> f(x^{-1}) into R[x]/<x^n - lam^{-1}>."""
    ring = f.ring
    target = QuotientRing(ring.ctx, ring.n, ring_inv(ring.lam))
    coeffs = [RingElement.zero(ring.ctx)] * ring.n
    coeffs[0] = f.coeffs[0]
    for k in range(1, ring.n):
        coeffs[ring.n - k] = ring.lam * f.coeffs[k]
    return QuotientPoly(target, tuple(coeffs))


def flatten(vector: Sequence[RingElement]) -> List[int]:
    """Per position: a-part coefficients, then b-part coefficients."""
    values: List[int] = []
    for c in vector:
        values.extend(c.a.coeffs)
        values.extend(c.b.coeffs)
    return values


def unflatten(values: Sequence[int], ctx: FieldCtx) -> Tuple[RingElement, ...]:
    m = ctx.m
    result = []
    for start in range(0, len(values), 2 * m):
        a = ctx.element([int(v) for v in values[start : start + m]])
        b = ctx.element([int(v) for v in values[start + m : start + 2 * m]])
        result.append(RingElement(a, b))
    return tuple(result)
