#!/usr/bin/env python3
"""The ring R = F_{p^m} + uF_{p^m} with u^2 = 0 and its automorphisms."""
from dataclasses import dataclass
from typing import Iterator

from sigmadual.gf import (
    FieldAut,
    FieldCtx,
    FieldElement,
    NotAUnitError,
    frobenius,
    is_square,
)


class RingElement:
    """a + ub."""

    __slots__ = ("a", "b")

    def __init__(self, a: FieldElement, b: FieldElement):
        self.a = a
        self.b = b

    @classmethod
    def of(cls, a: FieldElement) -> "RingElement":
        return cls(a, a.ctx.zero)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "RingElement":
        return cls(ctx.zero, ctx.zero)

    @classmethod
    def one(cls, ctx: FieldCtx) -> "RingElement":
        return cls(ctx.one, ctx.zero)

    @classmethod
    def u(cls, ctx: FieldCtx) -> "RingElement":
        return cls(ctx.zero, ctx.one)

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __repr__(self) -> str:
        return f"RingElement({list(self.a.coeffs)}, {list(self.b.coeffs)})"

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_unit(self) -> bool:
        return not self.a.is_zero()

    def scale(self, c: FieldElement) -> "RingElement":
        return RingElement(self.a * c, self.b * c)

    def times_u(self) -> "RingElement":
        return RingElement(self.a.ctx.zero, self.a)

    def inv(self) -> "RingElement":
        return ring_inv(self)


@dataclass(frozen=True)
class RingAut:
    """Theta_{theta, epsilon}: a + ub -> theta(a) + u epsilon theta(b)."""

    theta: FieldAut
    epsilon: FieldElement

    def __post_init__(self):
        if self.epsilon.is_zero():
            raise ValueError("epsilon must be nonzero")
        if not 0 <= self.theta.h < self.epsilon.ctx.m:
            raise ValueError(f"h out of range 0..{self.epsilon.ctx.m - 1}")

    @property
    def ctx(self) -> FieldCtx:
        return self.epsilon.ctx

    def __call__(self, x: RingElement) -> RingElement:
        return aut_apply(self, x)

    def is_identity(self) -> bool:
        return self.theta.h == 0 and self.epsilon == self.ctx.one


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(x.a * y.a, x.a * y.b + x.b * y.a)


def ring_inv(x: RingElement) -> RingElement:
    if x.a.is_zero():
        raise NotAUnitError(f"not a unit: {x!r}")
    a_inv = x.a.inv()
    return RingElement(a_inv, -(a_inv * a_inv * x.b))


def aut_apply(sigma: RingAut, x: RingElement) -> RingElement:
    return RingElement(
        frobenius(x.a, sigma.theta), sigma.epsilon * frobenius(x.b, sigma.theta)
    )


def aut_invert(sigma: RingAut) -> RingAut:
    theta_inv = sigma.theta.inverse(sigma.ctx.m)
    return RingAut(theta_inv, frobenius(sigma.epsilon.inv(), theta_inv))


def aut_compose(sigma: RingAut, tau: RingAut) -> RingAut:
    """sigma after tau."""
    return RingAut(
        sigma.theta.compose(tau.theta, sigma.ctx.m),
        sigma.epsilon * frobenius(tau.epsilon, sigma.theta),
    )


def dual_constant(lam: RingElement, sigma: RingAut) -> RingElement:
    """Constant of the sigma-dual of a lam-constacyclic code."""
    return aut_apply(aut_invert(sigma), ring_inv(lam))


def identity_aut(ctx: FieldCtx) -> RingAut:
    return RingAut(FieldAut(0), ctx.one)


def galois_aut(ctx: FieldCtx, h: int) -> RingAut:
    return RingAut(FieldAut(h % ctx.m), ctx.one)


def hermitian_aut(ctx: FieldCtx) -> RingAut:
    if ctx.m % 2:
        raise ValueError(f"Hermitian conjugation needs even m: {ctx.m}")
    return galois_aut(ctx, ctx.m // 2)


def automorphisms(ctx: FieldCtx) -> Iterator[RingAut]:
    for h in range(ctx.m):
        for epsilon in ctx.units():
            yield RingAut(FieldAut(h), epsilon)


def ring_elements(ctx: FieldCtx) -> Iterator[RingElement]:
    for a in ctx.elements():
        for b in ctx.elements():
            yield RingElement(a, b)


def ring_units(ctx: FieldCtx) -> Iterator[RingElement]:
    for a in ctx.units():
        for b in ctx.elements():
            yield RingElement(a, b)


def is_ring_square(x: RingElement) -> bool:
    if x.a.is_zero():
        return x.b.is_zero()
    return is_square(x.a)
