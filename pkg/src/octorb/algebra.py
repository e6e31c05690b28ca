"""The split Cayley-Dickson algebra O = M2(F) + v M2(F).

Basis order is fixed everywhere: ``e11 e12 e21 e22 ve11 ve12 ve21 ve22``
(indices 0-7; index < 4 is the matrix part).  Multiplication rules, with
``a -> abar`` the symplectic involution of M2(F)::

    a . b   = ab          a . vb  = v(abar b)
    va . b  = v(ba)       va . vb = b abar
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import re

from .scalar import Field, FieldMismatch, Q, Scalar
from . import linalg

BASIS_NAMES = ("e11", "e12", "e21", "e22", "ve11", "ve12", "ve21", "ve22")
INDEX = {name: i for i, name in enumerate(BASIS_NAMES)}
DIM = 8


class NotInM2(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# rule-based oracle over integer 2x2 matrices


def _mat(i):
    m = [[0, 0], [0, 0]]
    m[i // 2][i % 2] = 1
    return m


def _mm(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def _sbar(a):
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


def _add(a, b):
    return [[a[i][j] + b[i][j] for j in range(2)] for i in range(2)]


def rule_product(x, y):
    """Product of two integer coordinate vectors via the four rules.

    Independent of the structure table; used to build it and to test it.
    """
    a1 = [[x[0], x[1]], [x[2], x[3]]]
    b1 = [[x[4], x[5]], [x[6], x[7]]]
    a2 = [[y[0], y[1]], [y[2], y[3]]]
    b2 = [[y[4], y[5]], [y[6], y[7]]]
    m = _add(_mm(a1, a2), _mm(b2, _sbar(b1)))
    v = _add(_mm(_sbar(a1), b2), _mm(a2, b1))
    return [m[0][0], m[0][1], m[1][0], m[1][1], v[0][0], v[0][1], v[1][0], v[1][1]]


def _integer_table():
    table = [[[0] * DIM for _ in range(DIM)] for _ in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            ei = [int(k == i) for k in range(DIM)]
            ej = [int(k == j) for k in range(DIM)]
            table[i][j] = rule_product(ei, ej)
    return table


INT_TABLE = _integer_table()
# sparse form: e_i e_j = sign * e_k
PRODUCTS = tuple(
    (i, j, k, INT_TABLE[i][j][k])
    for i in range(DIM) for j in range(DIM) for k in range(DIM)
    if INT_TABLE[i][j][k] != 0
)


@dataclass(frozen=True)
class StructureTable:
    field: Field
    c: tuple  # c[i][j][k]: e_i e_j = sum_k c[i][j][k] e_k

    def product(self, i: int, j: int) -> "Octo":
        return Octo(self.field, self.c[i][j])


@lru_cache(maxsize=None)
def structure_table(field: Field = Q) -> StructureTable:
    c = tuple(tuple(tuple(field.elem(x) for x in INT_TABLE[i][j]) for j in range(DIM))
              for i in range(DIM))
    return StructureTable(field, c)


# ---------------------------------------------------------------------------


class Octo:
    """Element of O: eight raw coordinates over one field."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords):
        coords = tuple(field.elem(x) for x in coords)
        if len(coords) != DIM:
            raise ValueError("an octonion has 8 coordinates")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def _raw(cls, field, coords):
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coords", tuple(coords))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Octo is immutable")

    @classmethod
    def zero(cls, field: Field = Q):
        return cls._raw(field, (field.zero,) * DIM)

    @classmethod
    def unit(cls, field: Field = Q):
        return basis(0, field) + basis(3, field)

    def coord(self, i) -> Scalar:
        if isinstance(i, str):
            i = INDEX[i]
        return Scalar(self.field, self.coords[i])

    def _check(self, other):
        if not isinstance(other, Octo):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.field
        return Octo._raw(f, (f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.field
        return Octo._raw(f, (f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        f = self.field
        return Octo._raw(f, (f.neg(a) for a in self.coords))

    def scale(self, lam) -> "Octo":
        f = self.field
        lam = f.elem(lam)
        return Octo._raw(f, (f.mul(lam, a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octo):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Octo):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def to_text(self) -> str:
        return ",".join(self.field.fmt(a) for a in self.coords)

    @classmethod
    def from_text(cls, text: str, field: Field = Q):
        parts = text.split(",")
        if len(parts) != DIM:
            raise ValueError(f"expected 8 comma-separated scalars, got {len(parts)}")
        return cls(field, [field.parse(p) for p in parts])

    def __str__(self):
        terms = []
        for name, a in zip(BASIS_NAMES, self.coords):
            if a == 0:
                continue
            s = self.field.fmt(a)
            terms.append(name if s == "1" else f"-{name}" if s == "-1" else f"{s}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"Octo({self.field!r}, {self})"


def basis(i, field: Field = Q) -> Octo:
    if isinstance(i, str):
        i = INDEX[i]
    coords = [field.zero] * DIM
    coords[i] = field.one
    return Octo._raw(field, coords)


def unit(field: Field = Q) -> Octo:
    return Octo.unit(field)


_TERM = re.compile(r"\s*([+-])?\s*(?:([^\s*+-][^*+-]*?)\s*\*\s*)?(v?e[12][12])\s*")


def octo(text: str, field: Field = Q, **params) -> Octo:
    """Parse a linear combination like ``"ve22 - a*ve12 + 2*e11"``.

    Coefficients are scalar literals (``2``, ``1/2``) or names bound in
    ``params``; a leading ``-`` on a name negates it.
    """
    text = text.strip()
    if text in ("0", ""):
        return Octo.zero(field)
    coords = [field.zero] * DIM
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse octonion expression {text!r} at {pos}")
        sign, coef, name = m.groups()
        if pos > 0 and sign is None:
            raise ValueError(f"missing operator in {text!r}")
        value = field.one if coef is None else _coef(coef.strip(), field, params)
        if sign == "-":
            value = field.neg(value)
        k = INDEX[name]
        coords[k] = field.add(coords[k], value)
        pos = m.end()
    return Octo._raw(field, coords)


def _coef(token, field, params):
    neg = token.startswith("-")
    token = token.lstrip("-")
    if token in params:
        v = field.elem(params[token])
    else:
        v = field.parse(token)
    return field.neg(v) if neg else v


# ---------------------------------------------------------------------------


def mul(x: Octo, y: Octo) -> Octo:
    """Bilinear product through the frozen structure table."""
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")
    f = x.field
    xs, ys = x.coords, y.coords
    out = [f.zero] * DIM
    for i, j, k, s in PRODUCTS:
        a, b = xs[i], ys[j]
        if a != 0 and b != 0:
            t = f.mul(a, b)
            out[k] = f.add(out[k], t) if s > 0 else f.sub(out[k], t)
    return Octo._raw(f, out)


def symplectic_bar(a: Octo) -> Octo:
    """(a11, a12, a21, a22) -> (a22, -a12, -a21, a11) on the M2 part."""
    if any(c != 0 for c in a.coords[4:]):
        raise NotInM2("symplectic involution is defined on M2(F) only")
    f = a.field
    c = a.coords
    return Octo._raw(f, (c[3], f.neg(c[1]), f.neg(c[2]), c[0]) + (f.zero,) * 4)


def classical_bar(x: Octo) -> Octo:
    """a + vb -> abar - vb."""
    f = x.field
    c = x.coords
    return Octo._raw(f, (c[3], f.neg(c[1]), f.neg(c[2]), c[0]) + tuple(f.neg(b) for b in c[4:]))


def scalar_part(x: Octo):
    """Raw ``t`` when ``x = t*1``, else ``None``."""
    c = x.coords
    if c[0] == c[3] and all(c[i] == 0 for i in (1, 2, 4, 5, 6, 7)):
        return c[0]
    return None


def trace_norm(x: Octo):
    """``(t, n)`` with ``x^2 - t x + n 1 = 0``, from ``x + xbar`` and ``x xbar``."""
    xb = classical_bar(x)
    t = scalar_part(x + xb)
    n = scalar_part(mul(x, xb))
    if t is None or n is None:
        raise InternalInconsistency(f"x + xbar or x xbar not scalar for {x}")
    return Scalar(x.field, t), Scalar(x.field, n)


def trace(x: Octo) -> Scalar:
    return trace_norm(x)[0]


def norm(x: Octo) -> Scalar:
    return trace_norm(x)[1]


# ---------------------------------------------------------------------------
# subspaces and subalgebras


class Subspace:
    """Span of octonions, kept as a canonical rref basis."""

    def __init__(self, field: Field, vectors=()):
        self.field = field
        rows = [v.coords if isinstance(v, Octo) else tuple(v) for v in vectors]
        self.rows, self.pivots = linalg.rref(rows, field) if rows else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self):
        return [Octo._raw(self.field, r) for r in self.rows]

    def __contains__(self, v: Octo) -> bool:
        return linalg.in_span(self.rows, self.pivots, v.coords, self.field)

    def contains_space(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and [tuple(r) for r in self.rows] == [tuple(r) for r in other.rows]

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        # solve sum a_i u_i = sum b_j w_j
        u, w = self.basis(), other.basis()
        if not u or not w:
            return Subspace(self.field)
        f = self.field
        cols = [v.coords for v in u] + [tuple(f.neg(x) for x in v.coords) for v in w]
        mat = linalg.transpose(cols)
        null = linalg.nullspace(mat, f)
        vecs = []
        for coeffs in null:
            acc = Octo.zero(f)
            for a, v in zip(coeffs[:len(u)], u):
                if a != 0:
                    acc = acc + v.scale(a)
            vecs.append(acc)
        return Subspace(f, vecs)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis=[{', '.join(map(str, self.basis()))}])"


def product_span(a: Subspace, b: Subspace) -> Subspace:
    return Subspace(a.field, [mul(x, y) for x in a.basis() for y in b.basis()])


@dataclass(frozen=True)
class SubalgebraReport:
    independent: bool
    closed: bool
    unital: bool
    square_zero: bool


def subalgebra_check(vectors) -> SubalgebraReport:
    vectors = list(vectors)
    if not vectors:
        raise ValueError("need at least one vector")
    f = vectors[0].field
    for v in vectors:
        if v.field != f:
            raise FieldMismatch(f"{v.field} vs {f}")
    span = Subspace(f, vectors)
    prods = [mul(x, y) for x in vectors for y in vectors]
    return SubalgebraReport(
        independent=span.dim == len(vectors),
        closed=all(p in span for p in prods),
        unital=unit(f) in span,
        square_zero=all(p.is_zero() for p in prods),
    )


# The seven non-unital subalgebras used as images.  S4 follows the
# displayed image of the four-dimensional lemma (e11, e12, ve11, ve12).
SUBALGEBRAS = {
    "N1": ("e12",),
    "I1": ("e11",),
    "I2": ("e11", "e12"),
    "N2": ("ve12", "ve22"),
    "N3": ("e12", "ve12", "ve22"),
    "I3": ("e11", "ve12", "ve22"),
    "S4": ("e11", "e12", "ve11", "ve12"),
}


@dataclass(frozen=True)
class SubalgebraSpec:
    name: str
    basis_names: tuple

    def basis(self, field: Field = Q):
        return [basis(n, field) for n in self.basis_names]

    def span(self, field: Field = Q) -> Subspace:
        return Subspace(field, self.basis(field))

    @property
    def dim(self) -> int:
        return len(self.basis_names)


def subalgebra(name: str) -> SubalgebraSpec:
    if name == "0":
        return SubalgebraSpec("0", ())
    return SubalgebraSpec(name, SUBALGEBRAS[name])


__all__ = [
    "BASIS_NAMES", "INDEX", "DIM", "NotInM2", "InternalInconsistency",
    "rule_product", "INT_TABLE", "PRODUCTS", "StructureTable", "structure_table",
    "Octo", "basis", "unit", "octo", "mul", "symplectic_bar", "classical_bar",
    "trace_norm", "trace", "norm", "scalar_part", "Subspace", "product_span",
    "SubalgebraReport", "subalgebra_check", "SUBALGEBRAS", "SubalgebraSpec", "subalgebra",
]
