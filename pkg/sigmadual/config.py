from configparser import ConfigParser
from dataclasses import dataclass, field
from typing import List, Optional

from sigmadual.chain_ring import RingAut, RingElement, automorphisms, ring_units
from sigmadual.gf import FieldAut, FieldCtx, FieldElement, default_modulus

ENUMERATION_CAP = 10**6
# 2m and 2mn limits for the brute-force oracle
ORACLE_BLOCK_LIMIT = 64
ORACLE_DIMENSION_LIMIT = 10**4
SWEEP_CASE_CAP = 10**6

FIELD_PREFIX = "field."
SWEEP_SECTION = "sweep"


@dataclass
class SweepConfig:
    fields: List[FieldCtx] = field(default_factory=list)
    s_values: List[int] = field(default_factory=lambda: [1])
    lambdas: List[str] = field(default_factory=lambda: ["all"])
    sigmas: List[str] = field(default_factory=lambda: ["all"])
    h_bound: Optional[int] = None
    max_cases: int = SWEEP_CASE_CAP
    cap: int = ENUMERATION_CAP
    jobs: int = 1
    out: Optional[str] = None


def parse_field_element(text: str, ctx: FieldCtx) -> FieldElement:
    """Colon separated coefficients, low degree first: "1:2" is 1 + 2w."""
    try:
        coeffs = [int(c) for c in text.split(":")]
    except ValueError:
        raise ValueError(f"Malformed field element: {text!r}") from None
    if len(coeffs) > ctx.m:
        raise ValueError(f"Too many coefficients for F_{ctx.order}: {text!r}")
    return ctx.element(coeffs)


def parse_ring_element(text: str, ctx: FieldCtx) -> RingElement:
    """a/b for a + ub; a alone means b = 0."""
    a, _, b = text.partition("/")
    return RingElement(
        parse_field_element(a, ctx),
        parse_field_element(b, ctx) if b else ctx.zero,
    )


def parse_sigma(text: str, ctx: FieldCtx) -> RingAut:
    """h@eps, e.g. 1@1:0."""
    h, sep, eps = text.partition("@")
    if not sep:
        raise ValueError(f"Malformed automorphism: {text!r}")
    return RingAut(FieldAut(int(h)), parse_field_element(eps, ctx))


def lambdas_for(config: SweepConfig, ctx: FieldCtx) -> List[RingElement]:
    result: List[RingElement] = []
    for token in config.lambdas:
        if token in ("all", "field", "chain"):
            for lam in ring_units(ctx):
                if token == "all" or (token == "field") == lam.b.is_zero():
                    result.append(lam)
        else:
            lam = parse_ring_element(token, ctx)
            if not lam.is_unit():
                raise ValueError(f"lambda is not a unit: {token!r}")
            result.append(lam)
    return result


def sigmas_for(config: SweepConfig, ctx: FieldCtx) -> List[RingAut]:
    result: List[RingAut] = []
    for token in config.sigmas:
        if token == "all":
            result.extend(automorphisms(ctx))
        else:
            result.append(parse_sigma(token, ctx))
    return result


def load_config(path: str) -> SweepConfig:
    parser = ConfigParser()
    with open(path) as fp:
        parser.read_file(fp)
    result = SweepConfig()
    for section_name in parser.sections():
        section = parser[section_name]
        if section_name.startswith(FIELD_PREFIX):
            p = section.getint("p")
            m = section.getint("m", 1)
            if "modulus" in section:
                modulus = tuple(int(c) for c in section["modulus"].split())
            else:
                modulus = default_modulus(p, m)
            result.fields.append(FieldCtx(p, m, modulus))
        elif section_name == SWEEP_SECTION:
            result.s_values = [int(s) for s in section.get("s", "1").split()]
            result.lambdas = section.get("lambdas", "all").split()
            result.sigmas = section.get("sigmas", "all").split()
            h_bound = section.get("h_bound", "full")
            result.h_bound = None if h_bound == "full" else int(h_bound)
            result.max_cases = section.getint("max_cases", SWEEP_CASE_CAP)
            result.cap = section.getint("cap", ENUMERATION_CAP)
            result.jobs = section.getint("jobs", 1)
            result.out = section.get("out")
        else:
            raise RuntimeError("Unsupported section: {}".format(section_name))
    if not result.fields:
        raise RuntimeError(f"No [{FIELD_PREFIX}*] section in {path}")
    # bad tokens fail here, before any case runs
    for ctx in result.fields:
        lambdas_for(result, ctx)
        sigmas_for(result, ctx)
    return result
