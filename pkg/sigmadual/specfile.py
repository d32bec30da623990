#!/usr/bin/env python3
"""JSON code-spec files.

{"field": {"p": 3, "m": 2, "modulus": [1, 0, 1]}, "s": 2,
 "lambda": {"a": [0, 1], "b": [0, 0]}, "kind": "type4",
 "i": 7, "t": 0, "h": [], "omega": 5}
"""
import json
from typing import IO, Any, Dict, List

from sigmadual.chain_ring import RingAut, RingElement
from sigmadual.codes import CodeSpec, Kind, validate_spec
from sigmadual.gf import FieldAut, FieldCtx, FieldElement, default_modulus, field_make


def _coeffs(value: Any, what: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(c, int) for c in value):
        raise ValueError(f"{what}: expected a list of integers, got {value!r}")
    return value


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what}: expected an integer, got {value!r}")
    return value


def field_from_json(obj: Dict[str, Any]) -> FieldCtx:
    p = _int(obj["p"], "p")
    m = _int(obj.get("m", 1), "m")
    if "modulus" in obj:
        modulus = tuple(_coeffs(obj["modulus"], "modulus"))
    else:
        modulus = default_modulus(p, m)
    return FieldCtx(p, m, modulus)


def field_to_json(ctx: FieldCtx) -> Dict[str, Any]:
    return {"p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)}


def element_from_json(value: Any, ctx: FieldCtx) -> FieldElement:
    return field_make(ctx, _coeffs(value, "field element"))


def element_to_json(x: FieldElement) -> List[int]:
    return list(x.coeffs)


def ring_from_json(obj: Dict[str, Any], ctx: FieldCtx) -> RingElement:
    return RingElement(
        element_from_json(obj["a"], ctx),
        element_from_json(obj.get("b", [0]), ctx),
    )


def ring_to_json(x: RingElement) -> Dict[str, Any]:
    return {"a": element_to_json(x.a), "b": element_to_json(x.b)}


def sigma_from_json(obj: Dict[str, Any], ctx: FieldCtx) -> RingAut:
    theta = FieldAut(_int(obj["h"], "h"))
    return RingAut(theta, element_from_json(obj["epsilon"], ctx))


def sigma_to_json(sigma: RingAut) -> Dict[str, Any]:
    return {"h": sigma.theta.h, "epsilon": element_to_json(sigma.epsilon)}


def spec_from_json(obj: Dict[str, Any]) -> CodeSpec:
    """Parses and validates; raises SpecError on constraint violations."""
    try:
        ctx = field_from_json(obj["field"])
        kind = Kind(obj["kind"])
        spec = CodeSpec(
            ctx,
            _int(obj["s"], "s"),
            ring_from_json(obj["lambda"], ctx),
            kind,
            _int(obj.get("i", 0), "i"),
            _int(obj.get("t", 0), "t"),
            tuple(element_from_json(c, ctx) for c in obj.get("h", [])),
            _int(obj.get("omega", 0), "omega"),
        )
    except KeyError as e:
        raise ValueError(f"Missing key in spec file: {e}") from None
    return validate_spec(spec)


def spec_to_json(spec: CodeSpec) -> Dict[str, Any]:
    return {
        "field": field_to_json(spec.ctx),
        "s": spec.s,
        "lambda": ring_to_json(spec.lam),
        "kind": spec.kind.value,
        "i": spec.i,
        "t": spec.t,
        "h": [element_to_json(c) for c in spec.h],
        "omega": spec.omega,
    }


def load_spec(path: str) -> CodeSpec:
    with open(path) as fp:
        return spec_from_json(json.load(fp))


def dump_spec(spec: CodeSpec, fp: IO[str]) -> None:
    json.dump(spec_to_json(spec), fp)
    fp.write("\n")
