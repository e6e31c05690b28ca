"""Canonical weight-zero Rota-Baxter operators on O.

Each case is transcribed as a list of basis images (unlisted basis elements
go to zero) with parameters ``a`` (alpha) and ``b`` (beta) and their
constraints.  The summary lists (``theorem1``, ``corollary6``) are transcribed
separately from the per-image lemmas so the two transcriptions can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
import logging
import re

from .scalar import Field, Q, Scalar
from .algebra import SubalgebraSpec, subalgebra
from .operator import Fingerprint, LinMap, check_rb

log = logging.getLogger(__name__)


class CatalogError(ValueError):
    pass


class ConstraintViolation(CatalogError):
    pass


class RbSelfCheckFailed(AssertionError):
    pass


class OutOfRemarkScope(CatalogError):
    pass


# (image subalgebra, constraints, images)
_RAW = {
    "prop18": [
        ("I1", "", "e21 -> e11"),
        ("N1", "", "e21 -> e12"),
        ("I2", "", "e21 -> e11; e22 -> e12"),
        ("I2", "", "e21 -> -e11; e11 -> e12"),
    ],
    "lemma1": [
        ("N1", "", "e21 -> e12"),
        ("N1", "", "ve22 -> e12"),
    ],
    "lemma2": [
        ("I1", "", "e21 -> e11"),
    ],
    "lemma3": [
        ("I2", "", "e21 -> e11; e22 -> e12"),
        ("I2", "", "e21 -> -e11; e11 -> e12"),
        ("I2", "", "e21 -> e11; ve21 -> e12"),
        ("I2", "a!=0", "ve11 -> a*e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e12; ve21 -> e11"),
        ("I2", "a!=0", "ve21 -> a*e11; ve22 -> e12"),
    ],
    "corollary1": [
        ("I2", "", "e21 -> e11; e22 -> e12"),
        ("I2", "", "e21 -> -e11; e11 -> e12"),
        ("I2", "", "e21 -> e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e12; ve21 -> e11"),
        ("I2", "", "ve21 -> e11; ve22 -> e12"),
    ],
    "lemma4": [
        ("N2", "a!=0", "ve11 -> ve22; ve21 -> ve22 + a*ve12"),
        ("N2", "", "e21 -> ve12; ve21 -> ve22"),
        ("N2", "", "e11 -> ve22 + ve12; e12 -> ve22 + ve12; e21 -> -ve22 - ve12; "
                   "e22 -> -ve22 - ve12; ve11 -> -ve12; ve21 -> ve12"),
        ("N2", "", "ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N2", "a!=0", "ve11 -> ve12; ve21 -> a*ve22"),
        ("N2", "a!=0", "ve11 -> ve22; ve21 -> a*ve12"),
    ],
    "corollary2": [
        ("N2", "", "e21 -> ve12; ve21 -> ve22"),
        ("N2", "", "e11 -> ve22 + ve12; e12 -> ve22 + ve12; e21 -> -ve22 - ve12; "
                   "e22 -> -ve22 - ve12; ve11 -> -ve12; ve21 -> ve12"),
        ("N2", "", "ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N2", "a!=0", "ve11 -> ve12; ve21 -> a*ve22"),
    ],
    "lemma5": [
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + e12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12 + e12"),
    ],
    "corollary3": [
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + e12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12 + e12"),
    ],
    "lemma6": [
        ("I3", "", "e21 -> ve12; ve11 -> e11; ve21 -> ve22"),
        ("I3", "a!=0,b!=0", "e21 -> a*e11; ve11 -> b*ve12; ve21 -> ve22"),
        ("I3", "", "e21 -> -ve22; ve11 -> ve12; ve21 -> e11"),
    ],
    "corollary4": [
        ("I3", "", "e21 -> ve12; ve11 -> e11; ve21 -> ve22"),
        ("I3", "a!=0", "e21 -> e11; ve11 -> a*ve12; ve21 -> ve22"),
        ("I3", "", "e21 -> -ve22; ve11 -> ve12; ve21 -> e11"),
    ],
    "lemma7": [
        ("S4", "", "e11 -> e12; e21 -> -e11; ve21 -> -ve11; ve22 -> -ve12"),
        ("S4", "", "e11 -> e12; e21 -> -e11 - ve11; ve21 -> -ve11; ve22 -> e12 - ve12"),
        ("S4", "a!=0", "e11 -> ve12; e21 -> -a*ve11; ve21 -> e11; ve22 -> a*e12"),
        ("S4", "a!=-1", "e11 -> -e12 + ve12; e21 -> e11 - a*ve11; ve21 -> e11 + ve11; "
                        "ve22 -> a*e12 + ve12"),
        ("S4", "a!=0", "e22 -> ve12; e21 -> -a*ve11; ve21 -> -e11; ve22 -> a*e12"),
    ],
    "corollary5": [
        ("S4", "", "e11 -> e12; e21 -> -e11; ve21 -> -ve11; ve22 -> -ve12"),
        ("S4", "", "e11 -> e12; e21 -> -e11 + ve12; ve21 -> e12 - ve11; ve22 -> -ve12"),
        ("S4", "", "e11 -> ve12; e21 -> -ve11; ve21 -> e11; ve22 -> e12"),
        ("S4", "a!=-1", "e11 -> -e12 + ve12; e21 -> e11 - a*ve11; ve21 -> e11 + ve11; "
                        "ve22 -> a*e12 + ve12"),
        ("S4", "", "e22 -> ve12; e21 -> -ve11; ve21 -> -e11; ve22 -> e12"),
    ],
    "theorem1": [
        ("N1", "", "e21 -> e12"),
        ("N1", "", "ve22 -> e12"),
        ("I1", "", "e21 -> e11"),
        ("I2", "", "e21 -> e11; e22 -> e12"),
        ("I2", "", "e21 -> -e11; e11 -> e12"),
        ("I2", "", "e21 -> e11; ve21 -> e12"),
        ("I2", "a!=0", "ve11 -> a*e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e12; ve21 -> e11"),
        ("I2", "a!=0", "ve21 -> a*e11; ve22 -> e12"),
        ("N2", "a!=0", "ve11 -> ve22; ve21 -> ve22 + a*ve12"),
        ("N2", "", "e21 -> ve12; ve21 -> ve22"),
        ("N2", "", "e11 -> ve22 + ve12; e12 -> ve22 + ve12; e21 -> -ve22 - ve12; "
                   "e22 -> -ve22 - ve12; ve11 -> -ve12; ve21 -> ve12"),
        ("N2", "", "ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N2", "a!=0", "ve11 -> ve12; ve21 -> a*ve22"),
        ("N2", "a!=0", "ve11 -> ve22; ve21 -> a*ve12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + e12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12 + e12"),
        ("I3", "", "e21 -> ve12; ve11 -> e11; ve21 -> ve22"),
        ("I3", "a!=0,b!=0", "e21 -> a*e11; ve11 -> b*ve12; ve21 -> ve22"),
        ("I3", "", "e21 -> -ve22; ve11 -> ve12; ve21 -> e11"),
        ("S4", "", "e11 -> e12; e21 -> -e11; ve21 -> -ve11; ve22 -> -ve12"),
        ("S4", "", "e11 -> e12; e21 -> -e11 - ve11; ve21 -> -ve11; ve22 -> e12 - ve12"),
        # printed without a constraint; the source lemma requires a != 0
        ("S4", "a!=0", "e11 -> ve12; e21 -> -a*ve11; ve21 -> e11; ve22 -> a*e12"),
        ("S4", "a!=-1", "e11 -> -e12 + ve12; e21 -> e11 - a*ve11; ve21 -> e11 + ve11; "
                        "ve22 -> a*e12 + ve12"),
        ("S4", "a!=0", "e22 -> ve12; e21 -> -a*ve11; ve21 -> -e11; ve22 -> a*e12"),
    ],
    "corollary6": [
        ("N1", "", "e21 -> e12"),
        ("N1", "", "ve22 -> e12"),
        ("I1", "", "e21 -> e11"),
        ("I2", "", "e21 -> e11; e22 -> e12"),
        ("I2", "", "e21 -> -e11; e11 -> e12"),
        ("I2", "", "e21 -> e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e11; ve21 -> e12"),
        ("I2", "", "ve11 -> e12; ve21 -> e11"),
        ("I2", "", "ve21 -> e11; ve22 -> e12"),
        ("N2", "", "e21 -> ve12; ve21 -> ve22"),
        ("N2", "", "e11 -> ve22 + ve12; e12 -> ve22 + ve12; e21 -> -ve22 - ve12; "
                   "e22 -> -ve22 - ve12; ve11 -> -ve12; ve21 -> ve12"),
        ("N2", "", "ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N2", "a!=0", "ve11 -> ve12; ve21 -> a*ve22"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + ve12"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22"),
        ("N3", "", "e21 -> e12; ve11 -> ve12; ve21 -> ve22 + e12"),
        ("N3", "a!=0", "e21 -> a*e12; ve11 -> ve12; ve21 -> ve22 + ve12 + e12"),
        ("I3", "", "e21 -> ve12; ve11 -> e11; ve21 -> ve22"),
        ("I3", "a!=0", "e21 -> e11; ve11 -> a*ve12; ve21 -> ve22"),
        ("I3", "", "e21 -> -ve22; ve11 -> ve12; ve21 -> e11"),
        ("S4", "", "e11 -> e12; e21 -> -e11; ve21 -> -ve11; ve22 -> -ve12"),
        ("S4", "", "e11 -> e12; e21 -> -e11 - ve11; ve21 -> -ve11; ve22 -> e12 - ve12"),
        ("S4", "", "e11 -> ve12; e21 -> -ve11; ve21 -> e11; ve22 -> e12"),
        ("S4", "a!=-1", "e11 -> -e12 + ve12; e21 -> e11 - a*ve11; ve21 -> e11 + ve11; "
                        "ve22 -> a*e12 + ve12"),
        ("S4", "", "e22 -> ve12; e21 -> -ve11; ve21 -> -e11; ve22 -> e12"),
    ],
}

SOURCES = tuple(_RAW)
LEMMAS = tuple(f"lemma{i}" for i in range(1, 8))
COROLLARIES = tuple(f"corollary{i}" for i in range(1, 7))

# source family of each theorem1 / corollary6 case
THEOREM1_ORIGIN = (
    [("lemma1", 1), ("lemma1", 2), ("lemma2", 1)]
    + [("lemma3", i) for i in range(1, 7)]
    + [("lemma4", i) for i in range(1, 7)]
    + [("lemma5", i) for i in range(1, 5)]
    + [("lemma6", i) for i in range(1, 4)]
    + [("lemma7", i) for i in range(1, 6)]
)
COROLLARY6_ORIGIN = (
    [("lemma1", 1), ("lemma1", 2), ("lemma2", 1)]
    + [("corollary1", i) for i in range(1, 7)]
    + [("corollary2", i) for i in range(1, 5)]
    + [("corollary3", i) for i in range(1, 5)]
    + [("corollary4", i) for i in range(1, 4)]
    + [("corollary5", i) for i in range(1, 6)]
)

# stated nilpotency pattern of the corollary6 list
_R2_NONZERO = {5, 21, 22, 23, 24}
_R2_ZERO = set(range(1, 5)) | set(range(6, 21))


@dataclass(frozen=True)
class Constraint:
    param: str
    value: int  # param != value

    def holds(self, assignment: dict, field: Field) -> bool:
        return field.elem(assignment[self.param]) != field.elem(self.value)

    def __str__(self):
        return f"{self.param} != {self.value}"


@dataclass(frozen=True)
class CaseDef:
    source: str
    case_no: int
    image: str
    params: tuple
    constraints: tuple
    images: tuple  # ((basis name, expression), ...)

    @property
    def subalgebra(self) -> SubalgebraSpec:
        return subalgebra(self.image)

    def text(self) -> str:
        return "; ".join(f"R({k}) = {v}" for k, v in self.images)


def _parse_case(source, no, image, cons, text) -> CaseDef:
    images = []
    for part in text.split(";"):
        k, v = (s.strip() for s in part.split("->"))
        images.append((k, v))
    names = sorted(set(re.findall(r"\b([ab])\s*\*", text)))
    constraints = []
    for c in filter(None, (s.strip() for s in cons.split(","))):
        p, val = c.split("!=")
        constraints.append(Constraint(p.strip(), int(val)))
    return CaseDef(source, no, image, tuple(names), tuple(constraints), tuple(images))


CASES = {
    (src, i + 1): _parse_case(src, i + 1, *row)
    for src, rows in _RAW.items() for i, row in enumerate(rows)
}


def cases(source: str):
    source = normalize_source(source)
    return [CASES[(source, i)] for i in range(1, len(_RAW[source]) + 1)]


def normalize_source(source: str) -> str:
    s = str(source).lower().replace(" ", "").replace("_", "").replace("-", "")
    s = s.replace("proposition", "prop").replace("cor", "corollary").replace("corollaryollary", "corollary")
    if s not in _RAW:
        raise CatalogError(f"unknown source {source!r}")
    return s


@dataclass(frozen=True)
class CaseSpec:
    source: str
    case_no: int
    params: dict = dc_field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", normalize_source(self.source))
        if (self.source, self.case_no) not in CASES:
            raise CatalogError(f"no case ({self.source}, {self.case_no})")

    @property
    def definition(self) -> CaseDef:
        return CASES[(self.source, self.case_no)]

    @property
    def constraints(self):
        return self.definition.constraints

    def key(self):
        return (self.source, self.case_no, tuple(sorted((k, str(v)) for k, v in self.params.items())))

    def label(self) -> str:
        ps = ", ".join(f"{'alpha' if k == 'a' else 'beta'}={v}" for k, v in sorted(self.params.items()))
        return f"{self.source} case ({self.case_no})" + (f" [{ps}]" if ps else "")


def build_case(spec: CaseSpec, field: Field | None = None, verify: bool = True) -> LinMap:
    """Matrix of a catalog case; self-checks the Rota-Baxter identity."""
    d = spec.definition
    if field is None:
        field = next((v.field for v in spec.params.values() if isinstance(v, Scalar)), Q)
    missing = [p for p in d.params if p not in spec.params]
    if missing:
        raise ConstraintViolation(f"{spec.label()}: missing parameter(s) {missing}")
    assignment = {p: field.elem(spec.params[p]) for p in d.params}
    for c in d.constraints:
        if not c.holds(assignment, field):
            raise ConstraintViolation(f"{spec.label()}: requires {c}")
    R = LinMap.from_images(dict(d.images), field, **assignment)
    if verify:
        res = check_rb(R)
        if not res:
            raise RbSelfCheckFailed(f"{spec.label()} over {field!r}: {res.describe()}")
    return R


def admissible(d: CaseDef, values, field: Field):
    """Parameter assignments from ``values`` satisfying the case constraints."""
    vals = []
    for v in values:
        e = field.elem(v)
        if e not in vals:
            vals.append(e)
    out = []
    for combo in product(vals, repeat=len(d.params)):
        assignment = dict(zip(d.params, combo))
        if all(c.holds(assignment, field) for c in d.constraints):
            out.append(assignment)
        else:
            log.debug("skip %s %s: %s", d.source, d.case_no, assignment)
    return out


def enumerate_catalog(field: Field, param_samples=(), sources=None, verify: bool = True):
    """``[(CaseSpec, LinMap)]`` over every case and admissible parameter sample."""
    if sources is None:
        sources = SOURCES
    elif isinstance(sources, str):
        sources = [sources]
    out = []
    for src in sources:
        for d in cases(src):
            for assignment in admissible(d, param_samples, field):
                spec = CaseSpec(d.source, d.case_no,
                                {k: Scalar(field, v) for k, v in assignment.items()})
                out.append((spec, build_case(spec, field, verify=verify)))
    return out


def full_sweep(field: Field, sources=None, verify: bool = True):
    """Catalog over a prime field with every admissible parameter value."""
    return enumerate_catalog(field, list(field.elements()), sources, verify)


@dataclass(frozen=True)
class NilpotencyPrediction:
    d2_zero: bool | None  # None: not stated
    d3_zero: bool | None

    def matches(self, fp: Fingerprint) -> bool | None:
        if self.d2_zero is None:
            return None
        return (fp.d2 == 0) == self.d2_zero and (fp.d3 == 0) == self.d3_zero

    def __str__(self):
        if self.d2_zero is None:
            return "unstated"
        return "R^2 = 0" if self.d2_zero else "R^2 != 0, R^3 = 0"


def expected_fingerprint(spec: CaseSpec) -> NilpotencyPrediction:
    if spec.source != "corollary6":
        raise OutOfRemarkScope("nilpotency is only predicted for the corollary6 list")
    if spec.case_no in _R2_NONZERO:
        return NilpotencyPrediction(False, True)
    if spec.case_no in _R2_ZERO:
        return NilpotencyPrediction(True, True)
    return NilpotencyPrediction(None, None)


def source_for_image(name: str):
    """Lemma whose statement fixes the image ``name``."""
    return {"N1": "lemma1", "I1": "lemma2", "I2": "lemma3", "N2": "lemma4",
            "N3": "lemma5", "I3": "lemma6", "S4": "lemma7"}[name]


__all__ = [
    "CatalogError", "ConstraintViolation", "RbSelfCheckFailed", "OutOfRemarkScope",
    "SOURCES", "LEMMAS", "COROLLARIES", "THEOREM1_ORIGIN", "COROLLARY6_ORIGIN",
    "Constraint", "CaseDef", "CASES", "cases", "normalize_source", "CaseSpec",
    "build_case", "admissible", "enumerate_catalog", "full_sweep",
    "NilpotencyPrediction", "expected_fingerprint", "source_for_image",
]
