#!/usr/bin/env python3
"""Exact arithmetic in F_p and F_{p^m}.

Elements are coefficient vectors (low degree first) with respect to a fixed
monic irreducible modulus. Everything here is immutable.
"""
from dataclasses import dataclass
import functools
import itertools
from typing import Dict, Iterator, Sequence, Tuple

# Moduli matching the worked examples: F_9 = F_3[w]/(w^2+1), F_25 = F_5[w]/(w^2+3).
MODULUS_TABLE: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (3, 2): (1, 0, 1),
    (5, 2): (3, 0, 1),
}


class NotAUnitError(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _trim(a: Sequence[int]) -> Tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[int, ...]:
    """Remainder of a by the monic polynomial b over F_p."""
    r = [c % p for c in a]
    db = len(b) - 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return _trim(r[:db])


def _monic_polys(p: int, degree: int) -> Iterator[Tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    degree = len(modulus) - 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_rem(modulus, divisor, p):
                return False
    return True


def find_irreducible(p: int, m: int) -> Tuple[int, ...]:
    for candidate in _monic_polys(p, m):
        if is_irreducible(candidate, p):
            return candidate
    raise RuntimeError(f"No irreducible polynomial of degree {m} over F_{p}")


def default_modulus(p: int, m: int) -> Tuple[int, ...]:
    if m == 1:
        return (0, 1)
    return MODULUS_TABLE.get((p, m)) or find_irreducible(p, m)


@functools.lru_cache(maxsize=None)
def _mulmod(
    p: int, modulus: Tuple[int, ...], a: Tuple[int, ...], b: Tuple[int, ...]
) -> Tuple[int, ...]:
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    r = _poly_rem(prod, modulus, p)
    return r + (0,) * (m - len(r))


@dataclass(frozen=True)
class FieldCtx:
    p: int
    m: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if self.p == 2 or not _is_prime(self.p):
            raise ValueError(f"p must be an odd prime: {self.p}")
        if self.m < 1:
            raise ValueError(f"m must be positive: {self.m}")
        modulus = tuple(self.modulus)
        object.__setattr__(self, "modulus", modulus)
        if len(modulus) != self.m + 1:
            raise ValueError(f"modulus must have degree {self.m}: {list(modulus)}")
        for index, c in enumerate(modulus):
            if not 0 <= c < self.p:
                raise ValueError(f"modulus coefficient {index} out of range: {c}")
        if modulus[-1] != 1:
            raise ValueError(f"modulus must be monic: {list(modulus)}")
        if not is_irreducible(modulus, self.p):
            raise ValueError(f"modulus is reducible over F_{self.p}: {list(modulus)}")

    @classmethod
    def make(cls, p: int, m: int) -> "FieldCtx":
        return cls(p, m, default_modulus(p, m))

    @property
    def order(self) -> int:
        return self.p**self.m

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        return field_make(self, coeffs)

    def scalar(self, c: int) -> "FieldElement":
        return FieldElement(self, (c % self.p,) + (0,) * (self.m - 1))

    @property
    def zero(self) -> "FieldElement":
        return self.scalar(0)

    @property
    def one(self) -> "FieldElement":
        return self.scalar(1)

    @property
    def generator(self) -> "FieldElement":
        """The adjoined root w (or 1 when m = 1)."""
        if self.m == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.m - 2))

    def from_index(self, index: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.m):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator["FieldElement"]:
        for index in range(self.order):
            yield self.from_index(index)

    def units(self) -> Iterator["FieldElement"]:
        for index in range(1, self.order):
            yield self.from_index(index)

    def basis(self) -> Iterator["FieldElement"]:
        """F_p-basis 1, w, ..., w^{m-1}."""
        for k in range(self.m):
            yield FieldElement(self, tuple(int(j == k) for j in range(self.m)))


class FieldElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"Expected a field element: {other!r}")
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise ValueError("Mixed field contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElement":
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inv()

    def __pow__(self, e: int) -> "FieldElement":
        return field_pow(self, e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)} mod {list(self.ctx.modulus)})"

    @property
    def index(self) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * self.ctx.p + c
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inv(self) -> "FieldElement":
        return field_inv(self)


@dataclass(frozen=True)
class FieldAut:
    """theta: a -> a^(p^h)."""

    h: int

    def compose(self, other: "FieldAut", m: int) -> "FieldAut":
        return FieldAut((self.h + other.h) % m)

    def inverse(self, m: int) -> "FieldAut":
        return FieldAut(-self.h % m)


def field_make(ctx: FieldCtx, coeffs: Sequence[int]) -> FieldElement:
    coeffs = list(coeffs)
    for index, c in enumerate(coeffs):
        if not isinstance(c, int) or not 0 <= c < ctx.p:
            raise ValueError(f"Coefficient {index} out of range 0..{ctx.p - 1}: {c}")
    if len(coeffs) > ctx.m:
        coeffs = list(_poly_rem(coeffs, ctx.modulus, ctx.p))
    return FieldElement(ctx, tuple(coeffs) + (0,) * (ctx.m - len(coeffs)))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    ctx = a.ctx
    return FieldElement(ctx, _mulmod(ctx.p, ctx.modulus, a.coeffs, b.coeffs))


@functools.lru_cache(maxsize=None)
def _inv_coeffs(ctx: FieldCtx, coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    # a^(q-2) by square-and-multiply
    result = ctx.one.coeffs
    base = coeffs
    e = ctx.order - 2
    while e:
        if e & 1:
            result = _mulmod(ctx.p, ctx.modulus, result, base)
        base = _mulmod(ctx.p, ctx.modulus, base, base)
        e >>= 1
    return result


def field_inv(a: FieldElement) -> FieldElement:
    if a.is_zero():
        raise NotAUnitError("not a unit: 0")
    return FieldElement(a.ctx, _inv_coeffs(a.ctx, a.coeffs))


def field_pow(a: FieldElement, e: int) -> FieldElement:
    ctx = a.ctx
    if a.is_zero():
        if e < 0:
            raise NotAUnitError("not a unit: 0 raised to a negative power")
        return ctx.one if e == 0 else ctx.zero
    e %= ctx.order - 1
    result = ctx.one
    base = a
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def frobenius(a: FieldElement, theta: FieldAut) -> FieldElement:
    if theta.h % a.ctx.m == 0:
        return a
    return field_pow(a, a.ctx.p ** (theta.h % a.ctx.m))


def is_square(a: FieldElement) -> bool:
    if a.is_zero():
        raise ValueError("Squareness is defined for units only")
    return field_pow(a, (a.ctx.order - 1) // 2) == a.ctx.one


def gamma0_of(gamma: FieldElement, s: int) -> FieldElement:
    """The unique g with g^(p^s) = gamma^-1."""
    if gamma.is_zero():
        raise NotAUnitError("not a unit: 0")
    if s < 1:
        raise ValueError(f"s must be positive: {s}")
    ctx = gamma.ctx
    r = s % ctx.m
    result = field_pow(gamma, -(ctx.p ** (ctx.m - r)))
    assert field_pow(result, ctx.p**s) * gamma == ctx.one
    return result
