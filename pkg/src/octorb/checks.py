"""Batch verification suites shared by the CLI and the demos.

Each suite returns a list of :class:`Check` rows; a suite passes when every
row does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from .scalar import Field, PrimeField, Q
from .algebra import (
    DIM, SUBALGEBRAS, Octo, basis, classical_bar, mul, subalgebra, subalgebra_check,
    trace_norm, unit,
)
from .operator import LinMap, bimodule_check, check_rb, image
from .maps import CLASSICAL, build_map, map_specs, verify_map
from . import catalog

RATIONAL_SAMPLES = (-2, -1, Fraction(1, 2), 1, 2, 3)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def random_octo(field: Field, rng: random.Random) -> Octo:
    if isinstance(field, PrimeField):
        return Octo(field, [rng.randrange(field.p) for _ in range(DIM)])
    return Octo(field, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(DIM)])


def algebra_checks(field: Field = Q, seed: int = 0, samples: int = 200):
    rng = random.Random(seed)
    one = unit(field)
    es = [basis(i, field) for i in range(DIM)]
    out = []

    bad = [str(e) for e in es if mul(one, e) != e or mul(e, one) != e]
    out.append(Check("unit law on basis", not bad, ", ".join(bad)))

    bad = []
    for x in es:
        xx = mul(x, x)
        for y in es:
            if mul(xx, y) != mul(x, mul(x, y)) or mul(mul(y, x), x) != mul(y, xx):
                bad.append(f"({x}, {y})")
    # linearized form on all 512 triples
    for x in es:
        for y in es:
            for z in es:
                left = mul(mul(x, y), z) - mul(x, mul(y, z))
                swap = mul(mul(y, x), z) - mul(y, mul(x, z))
                right = mul(mul(z, x), y) - mul(z, mul(x, y))
                swap_r = mul(mul(z, y), x) - mul(z, mul(y, x))
                if not (left + swap).is_zero() or not (right + swap_r).is_zero():
                    bad.append(f"({x}, {y}, {z})")
    out.append(Check("alternativity on basis triples", not bad, ", ".join(bad[:5])))

    bad = []
    for _ in range(samples):
        x = random_octo(field, rng)
        t, n = trace_norm(x)
        if mul(x, x) - x.scale(t.value) + one.scale(n.value) != Octo.zero(field):
            bad.append(str(x))
    out.append(Check(f"quadratic law on {samples} random elements", not bad, ", ".join(bad[:3])))

    bad = []
    for _ in range(samples):
        x, y = random_octo(field, rng), random_octo(field, rng)
        if trace_norm(mul(x, y))[1] != trace_norm(x)[1] * trace_norm(y)[1]:
            bad.append(f"({x}, {y})")
    out.append(Check(f"norm multiplicativity on {samples} random pairs", not bad, ", ".join(bad[:3])))

    bad = []
    for x in es:
        if classical_bar(classical_bar(x)) != x:
            bad.append(f"bar(bar({x}))")
        for y in es:
            if classical_bar(mul(x, y)) != mul(classical_bar(y), classical_bar(x)):
                bad.append(f"({x}, {y})")
    out.append(Check("classical involution is an involutive antiautomorphism", not bad, ", ".join(bad[:5])))

    for name in SUBALGEBRAS:
        rep = subalgebra_check(subalgebra(name).basis(field))
        ok = rep.independent and rep.closed and not rep.unital
        if name == "N2":
            ok = ok and rep.square_zero
        out.append(Check(f"subalgebra {name}", ok,
                         f"closed={rep.closed} unital={rep.unital} square_zero={rep.square_zero}"))
    return out


def maps_checks(field: Field = Q, params=None):
    if params is None and field is Q:
        params = RATIONAL_SAMPLES
    out = []
    for spec in map_specs(field, params):
        ok = verify_map(build_map(spec, field=field), spec.claimed)
        out.append(Check(spec.label(), ok, spec.claimed))
    return out


def catalog_checks(field: Field = Q, sources=catalog.SOURCES, samples=None):
    """Every case at every admissible sample; over F_p the default is all of F_p."""
    if samples is None:
        samples = list(field.elements()) if isinstance(field, PrimeField) else RATIONAL_SAMPLES
    if isinstance(sources, str):
        sources = [sources]
    out = []
    for src in sources:
        for d in catalog.cases(src):
            for assignment in catalog.admissible(d, samples, field):
                spec = catalog.CaseSpec(d.source, d.case_no, assignment)
                R = catalog.build_case(spec, field, verify=False)
                res = check_rb(R)
                label = spec.label() if not assignment else \
                    f"{d.source} case ({d.case_no}) " + " ".join(
                        f"{'alpha' if k == 'a' else 'beta'}={field.fmt(v)}" for k, v in sorted(assignment.items()))
                ok = bool(res) and image(R) == d.subalgebra.span(field) and bimodule_check(R)
                out.append(Check(label, ok, "" if res else res.describe()))
    return out


def summarize(checks) -> tuple[int, int]:
    return sum(c.ok for c in checks), len(checks)


__all__ = ["Check", "RATIONAL_SAMPLES", "random_octo", "algebra_checks", "maps_checks",
           "catalog_checks", "summarize"]
