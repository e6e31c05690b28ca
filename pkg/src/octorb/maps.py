"""Automorphisms, antiautomorphisms and involutions of O, plus reduction scripts.

Every map is given by its basis images.  Two of them (``prop=1`` and
``prop=5``) are only partially specified together with ``phi^2 = id``; the
remaining columns are solved for linearly from ``phi^2 = id`` on the known
columns and anti-multiplicativity on every pair with at most one unknown
image.  :func:`verify_map` is the gate for all of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import json
import logging

from .scalar import Field, Q, Scalar, parse_field
from .algebra import DIM, INDEX, INT_TABLE, Octo, basis, classical_bar, mul, octo
from .operator import LinMap, check_rb, conjugate, scale
from . import linalg

log = logging.getLogger(__name__)

AUTOMORPHISM = "Automorphism"
ANTIAUTOMORPHISM = "Antiautomorphism"
INVOLUTION = "Involution"
CLASSICAL = "classical"


class MapError(ValueError):
    pass


class MissingParam(MapError):
    pass


class ZeroParamForbidden(MapError):
    pass


class UnexpectedParam(MapError):
    pass


class IncompleteMap(MapError):
    pass


# Basis images; ``a`` is the parameter, ``ia`` its inverse, ``a2`` its square.
# Unlisted basis elements are fixed unless the entry is marked partial.
_IMAGES = {
    1: {"ve12": "-ve21", "ve11": "ve22", "e11": "e11", "e12": "e21", "e22": "e22"},
    2: {"ve11": "ve11 + a*ve12", "ve21": "ve21 + a*ve22"},
    3: {"ve12": "ve12 + a*ve11", "ve22": "ve22 + a*ve21"},
    4: {"ve12": "-ve11", "ve11": "ve12", "ve21": "ve22", "ve22": "-ve21"},
    5: {"e11": "e22", "e12": "ve22", "e21": "ve11", "e22": "e11"},
    6: {"e12": "a*e12", "ve12": "a*ve12", "e21": "ia*e21", "ve21": "ia*ve21"},
    7: {"e12": "a*e12", "ve11": "a*ve11", "e21": "ia*e21", "ve22": "ia*ve22"},
    8: {"ve11": "a*ve11", "ve21": "a*ve21", "ve22": "ia*ve22", "ve12": "ia*ve12"},
    9: {"e11": "e11 + a*ve22", "e12": "e12 + a*ve12", "e22": "e22 - a*ve22",
        "ve11": "ve11 - a*e11 + a*e22 - a2*ve22", "ve21": "ve21 + a*e21"},
    10: {"e21": "e21 + a*ve12", "ve21": "ve21 + a*e12"},
    11: {"e12": "e12 + a*ve21", "ve12": "ve12 + a*e21"},
    12: {"e12": "e21", "e21": "e12", "ve11": "-ve21", "ve12": "-ve22",
         "ve21": "ve11", "ve22": "ve12"},
    13: {"e12": "e12 - a*ve22", "ve11": "ve11 + a*e21"},
    14: {"e21": "e21 + a*ve11", "ve22": "ve22 - a*e12"},
    # the three below print R(...) for some phi-images; read as phi
    15: {"e11": "e11 - a*ve12", "e21": "e21 + a*ve22", "e22": "e22 + a*ve12",
         "ve11": "ve11 - a*e12", "ve21": "ve21 - a*e11 + a*e22 + a2*ve12"},
    16: {"e11": "e11 + a*e12", "e21": "e21 - a*e11 + a*e22 - a2*e12",
         "e22": "e22 - a*e12", "ve21": "ve21 - a*ve11", "ve22": "ve22 - a*ve12"},
    17: {"e11": "e11 + a*e21", "e12": "e12 - a*e11 + a*e22 - a2*e21",
         "e22": "e22 - a*e21", "ve11": "ve11 + a*ve21", "ve12": "ve12 + a*ve22"},
}

PARTIAL = {1, 5}
PARAMETERIZED = {2, 3, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17}
NONZERO_PARAM = {6, 7, 8}
CLAIMED = {p: AUTOMORPHISM for p in range(1, 18)}
CLAIMED.update({1: INVOLUTION, 5: INVOLUTION, 12: ANTIAUTOMORPHISM, CLASSICAL: INVOLUTION})
ALL_PROPS = tuple(range(1, 18)) + (CLASSICAL,)


@dataclass(frozen=True)
class MapSpec:
    prop: int | str
    param: object = None
    claimed: str = ""

    def __post_init__(self):
        if self.prop not in CLAIMED:
            raise MapError(f"unknown map {self.prop!r}")
        if not self.claimed:
            object.__setattr__(self, "claimed", CLAIMED[self.prop])

    def label(self) -> str:
        name = "classical involution" if self.prop == CLASSICAL else f"Prop {self.prop}"
        return name if self.param is None else f"{name}(alpha={self.param})"


def _coerce_prop(prop):
    if isinstance(prop, str) and prop.isdigit():
        return int(prop)
    return prop


def build_map(spec, param=None, field: Field = Q) -> LinMap:
    """Matrix of a catalog map.  ``spec`` is a :class:`MapSpec` or a prop id."""
    if isinstance(spec, MapSpec):
        prop, param = spec.prop, spec.param
    else:
        prop = _coerce_prop(spec)
    if isinstance(param, Scalar):
        field = param.field
    if prop == CLASSICAL:
        if param is not None:
            raise UnexpectedParam("the classical involution takes no parameter")
        return LinMap.from_columns(field, [classical_bar(basis(i, field)) for i in range(DIM)])
    if prop not in _IMAGES:
        raise MapError(f"unknown map {prop!r}")
    params = {}
    if prop in PARAMETERIZED:
        if param is None:
            raise MissingParam(f"Prop {prop} needs a parameter")
        a = field.elem(param)
        if prop in NONZERO_PARAM and a == 0:
            raise ZeroParamForbidden(f"Prop {prop} needs a nonzero parameter")
        params = {"a": a, "a2": field.mul(a, a)}
        if a != 0:
            params["ia"] = field.inv(a)
    elif param is not None:
        raise UnexpectedParam(f"Prop {prop} takes no parameter")

    known = {INDEX[k]: octo(v, field, **params) for k, v in _IMAGES[prop].items()}
    if prop in PARTIAL:
        return complete_involution(known, field)
    cols = [known.get(i, basis(i, field)) for i in range(DIM)]
    return LinMap.from_columns(field, cols)


def _product_index(i, j):
    row = INT_TABLE[i][j]
    for k, s in enumerate(row):
        if s:
            return k, s
    return None, 0


def complete_involution(known: dict, field: Field = Q) -> LinMap:
    """Fill in unknown columns of an involution from ``phi^2 = id`` and anti-multiplicativity.

    Only constraints that are linear in the unknown columns are used; the
    loop repeats while new columns become pinned.  Raises
    :class:`IncompleteMap` if some column stays free or the constraints are
    inconsistent.
    """
    known = dict(known)
    f = field
    while len(known) < DIM:
        unknown = [j for j in range(DIM) if j not in known]
        pos = {j: n for n, j in enumerate(unknown)}
        nvar = DIM * len(unknown)
        rows, rhs = [], []

        def add_vector_eq(coeffs, const):
            # sum over (unknown j) coeffs[j] * U_j  (an 8x8 block each) + const = 0
            for r in range(DIM):
                row = [f.zero] * nvar
                for j, block in coeffs.items():
                    for c in range(DIM):
                        if block[r][c] != 0:
                            idx = pos[j] * DIM + c
                            row[idx] = f.add(row[idx], block[r][c])
                rows.append(row)
                rhs.append(f.neg(const[r]))

        ident = linalg.identity(DIM, f)

        def scalar_block(s):
            return [[f.mul(s, x) for x in r] for r in ident]

        # phi(phi(e_k)) = e_k for known k
        for k, v in known.items():
            coeffs, const = {}, [f.neg(x) for x in basis(k, f).coords]
            for j, c in enumerate(v.coords):
                if c == 0:
                    continue
                if j in known:
                    const = [f.add(a, f.mul(c, b)) for a, b in zip(const, known[j].coords)]
                else:
                    coeffs[j] = scalar_block(c)
            add_vector_eq(coeffs, const)

        # phi(e_x e_y) = phi(e_y) phi(e_x) when at most one of x, y is unknown
        for x in range(DIM):
            for y in range(DIM):
                if x not in known and y not in known:
                    continue
                k, s = _product_index(x, y)
                coeffs, const = {}, [f.zero] * DIM
                if k is not None:
                    if k in known:
                        const = [f.mul(f.elem(s), c) for c in known[k].coords]
                    else:
                        coeffs[k] = scalar_block(f.elem(s))
                # subtract phi(e_y) phi(e_x)
                if x in known and y in known:
                    p = mul(known[y], known[x])
                    const = [f.sub(a, b) for a, b in zip(const, p.coords)]
                else:
                    u = y if y not in known else x
                    other = known[x] if u == y else known[y]
                    block = _left_or_right_block(other, left=(u == y), field=f)
                    neg = [[f.neg(z) for z in r] for r in block]
                    if u in coeffs:
                        coeffs[u] = [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(coeffs[u], neg)]
                    else:
                        coeffs[u] = neg
                add_vector_eq(coeffs, const)

        sol = linalg.solve(rows, rhs, f)
        if sol is None:
            raise IncompleteMap("constraints are inconsistent")
        x0, null = sol
        progress = False
        for j in unknown:
            block = range(pos[j] * DIM, pos[j] * DIM + DIM)
            if all(v[i] == 0 for v in null for i in block):
                known[j] = Octo._raw(f, [x0[i] for i in block])
                progress = True
        if not progress:
            raise IncompleteMap(f"columns {unknown} are not determined")
    return LinMap.from_columns(f, [known[i] for i in range(DIM)])


def _left_or_right_block(other: Octo, left: bool, field: Field):
    """Matrix of ``u -> u * other`` (left=True) or ``u -> other * u``."""
    cols = []
    for c in range(DIM):
        e = basis(c, field)
        cols.append((mul(e, other) if left else mul(other, e)).coords)
    return linalg.transpose(cols)


# ---------------------------------------------------------------------------


def _mult_ok(M: LinMap, anti: bool) -> bool:
    f = M.field
    cols = M.columns
    for i in range(DIM):
        for j in range(DIM):
            lhs = M(mul(basis(i, f), basis(j, f)))
            rhs = mul(cols[j], cols[i]) if anti else mul(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def verify_map(M: LinMap, claimed: str) -> bool:
    """Check a map is exactly what it is claimed to be, over all 64 basis pairs."""
    if not M.is_invertible():
        return False
    if claimed == AUTOMORPHISM:
        return _mult_ok(M, anti=False)
    if claimed == ANTIAUTOMORPHISM:
        return _mult_ok(M, anti=True)
    if claimed == INVOLUTION:
        return _mult_ok(M, anti=True) and M @ M == LinMap.identity(M.field)
    raise MapError(f"unknown claim {claimed!r}")


def map_kind(M: LinMap) -> str | None:
    """Most specific of Involution / Antiautomorphism / Automorphism, or None."""
    for kind in (INVOLUTION, ANTIAUTOMORPHISM, AUTOMORPHISM):
        if verify_map(M, kind):
            return kind
    return None


def map_specs(field: Field, params=None):
    """Every MapSpec instantiated over ``field``.

    ``params`` defaults to every element of a prime field; required for Q.
    """
    if params is None:
        params = list(field.elements())
    out = []
    for prop in ALL_PROPS:
        if prop in PARAMETERIZED:
            for a in params:
                a = field.elem(a)
                if prop in NONZERO_PARAM and a == 0:
                    continue
                out.append(MapSpec(prop, Scalar(field, a)))
        else:
            out.append(MapSpec(prop))
    return out


# ---------------------------------------------------------------------------
# reduction scripts


@dataclass(frozen=True)
class Step:
    """One script step: transport by a catalog map, or multiply by a scalar.

    A map step replaces ``R`` by ``phi R phi^-1`` (that is,
    ``conjugate(R, phi^-1)``), which is how the parameter values in the
    classification proofs act.
    """
    prop: int | str | None = None
    alpha: object = None
    scale: object = None

    def to_json(self, field: Field) -> dict:
        if self.scale is not None:
            return {"scale": field.fmt(field.elem(self.scale))}
        out = {"prop": self.prop}
        if self.alpha is not None:
            out["alpha"] = field.fmt(field.elem(self.alpha))
        return out

    @classmethod
    def from_json(cls, obj: dict, field: Field) -> "Step":
        if "scale" in obj:
            return cls(scale=field.parse(str(obj["scale"])))
        alpha = obj.get("alpha")
        return cls(prop=_coerce_prop(obj["prop"]),
                   alpha=None if alpha is None else field.parse(str(alpha)))

    def label(self) -> str:
        if self.scale is not None:
            return f"scale by {self.scale}"
        return MapSpec(self.prop, self.alpha).label()


@dataclass
class ReductionScript:
    source: str
    steps: list
    field: Field = Q
    input: LinMap | None = None
    output: LinMap | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"source": self.source, "field": self.field.to_json(),
               "steps": [s.to_json(self.field) for s in self.steps]}
        if self.input is not None:
            out["input"] = self.input.to_json()["matrix"]
        if self.output is not None:
            out["output"] = self.output.to_json()["matrix"]
        return out

    @classmethod
    def from_json(cls, obj) -> "ReductionScript":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            obj = {"steps": obj}
        f = parse_field(obj.get("field", "Q"))
        steps = [Step.from_json(s, f) for s in obj["steps"]]

        def mat(key):
            if key not in obj:
                return None
            return LinMap(f, [[f.parse(str(x)) for x in row] for row in obj[key]])

        return cls(obj.get("source", ""), steps, f, mat("input"), mat("output"))


class ScriptError(AssertionError):
    pass


def apply_step(step: Step, R: LinMap) -> LinMap:
    if step.scale is not None:
        return scale(R, step.scale)
    phi = build_map(step.prop, step.alpha, R.field)
    return phi @ R @ phi.inverse()


def run_script(script, R: LinMap | None = None, check: bool = True, trace: list | None = None) -> LinMap:
    """Fold the steps over ``R`` (default: the script's declared input).

    With ``check`` the Rota-Baxter identity is asserted after every step.
    """
    steps = script.steps if isinstance(script, ReductionScript) else list(script)
    if R is None:
        R = script.input
    if check and not check_rb(R):
        raise ScriptError("script input is not a Rota-Baxter operator")
    for step in steps:
        R = apply_step(step, R)
        if trace is not None:
            trace.append(R)
        if check:
            res = check_rb(R)
            if not res:
                raise ScriptError(f"after {step.label()}: {res.describe()}")
    return R


__all__ = [
    "AUTOMORPHISM", "ANTIAUTOMORPHISM", "INVOLUTION", "CLASSICAL", "ALL_PROPS",
    "PARAMETERIZED", "NONZERO_PARAM", "CLAIMED",
    "MapError", "MissingParam", "ZeroParamForbidden", "UnexpectedParam", "IncompleteMap",
    "MapSpec", "build_map", "complete_involution", "verify_map", "map_kind", "map_specs",
    "Step", "ReductionScript", "ScriptError", "apply_step", "run_script",
]
