from typing import Sequence

from sigmadual.chain_ring import RingAut, RingElement
from sigmadual.codes import CodeSpec, Kind
from sigmadual.gf import FieldElement


def format_field(x: FieldElement) -> str:
    terms = []
    for d in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[d]
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            power = "w" if d == 1 else f"w^{d}"
            terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def format_ring(x: RingElement) -> str:
    a = format_field(x.a)
    if x.b.is_zero():
        return a
    b = format_field(x.b)
    if b == "1":
        ub = "u"
    elif "+" in b:
        ub = f"u*({b})"
    else:
        ub = f"u*{b}"
    return ub if x.a.is_zero() else f"{a}+{ub}"


def format_poly(coeffs: Sequence[RingElement]) -> str:
    return "[" + ", ".join(format_ring(c) for c in coeffs) + "]"


def format_word(word: Sequence) -> str:
    if word and isinstance(word[0], FieldElement):
        return "(" + ", ".join(format_field(c) for c in word) + ")"
    return "(" + ", ".join(format_ring(c) for c in word) + ")"


def format_h(h: Sequence[FieldElement]) -> str:
    if not any(h):
        return "0"
    return "[" + ", ".join(format_field(c) for c in h) + "]"


def format_spec(spec: CodeSpec) -> str:
    if spec.kind == Kind.ZERO:
        return "type1 zero"
    if spec.kind == Kind.WHOLE:
        return "type1 whole"
    if spec.kind in (Kind.CHAIN, Kind.TYPE2):
        return f"{spec.kind.value} i={spec.i}"
    s = f"{spec.kind.value} i={spec.i} t={spec.t} h={format_h(spec.h)}"
    if spec.kind == Kind.TYPE4:
        s += f" omega={spec.omega}"
    return s


def format_sigma(sigma: RingAut) -> str:
    return f"h={sigma.theta.h},eps={format_field(sigma.epsilon)}"


def spec_id(spec: CodeSpec) -> str:
    ctx = spec.ctx
    return (
        f"p={ctx.p} m={ctx.m} s={spec.s} lambda={format_ring(spec.lam)} "
        f"{format_spec(spec)}"
    )


def format_size(p: int, exponent: int) -> str:
    return "1" if exponent == 0 else f"{p}^{exponent}"
