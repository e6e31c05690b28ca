"""Linear endomorphisms of O and the weight-zero Rota-Baxter identity.

Convention, fixed globally: column ``j`` of a matrix is the image of basis
element ``j``.  ``conjugate(R, phi)`` is ``phi^-1 R phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

from .scalar import Field, FieldMismatch, Q, Scalar, parse_field
from .algebra import (
    BASIS_NAMES, DIM, INDEX, Octo, Subspace, basis, mul, octo, product_span, unit,
)
from . import linalg
from .linalg import Singular

CONVENTION = "columns-are-images"


class LinMap:
    """8x8 matrix over one field; immutable."""

    __slots__ = ("field", "m", "_cols")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.elem(x) for x in row) for row in rows)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError("a LinMap is 8x8")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", rows)
        object.__setattr__(self, "_cols", None)

    @classmethod
    def _raw(cls, field, rows):
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "m", tuple(tuple(r) for r in rows))
        object.__setattr__(obj, "_cols", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LinMap is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field = Q):
        return cls._raw(field, [[field.zero] * DIM for _ in range(DIM)])

    @classmethod
    def identity(cls, field: Field = Q):
        return cls._raw(field, linalg.identity(DIM, field))

    @classmethod
    def from_columns(cls, field: Field, columns):
        cols = [c.coords if isinstance(c, Octo) else tuple(field.elem(x) for x in c) for c in columns]
        return cls._raw(field, linalg.transpose(cols))

    @classmethod
    def from_images(cls, images: dict, field: Field = Q, **params):
        """Map given by basis images; unspecified basis elements go to zero.

        Values may be :class:`Octo` or expression strings (see :func:`octo`).
        """
        cols = [Octo.zero(field)] * DIM
        for name, img in images.items():
            if isinstance(img, str):
                img = octo(img, field, **params)
            elif img.field != field:
                raise FieldMismatch(f"{img.field} vs {field}")
            cols[INDEX[name] if isinstance(name, str) else name] = img
        return cls.from_columns(field, cols)

    # -- access -------------------------------------------------------------

    @property
    def columns(self):
        if self._cols is None:
            object.__setattr__(self, "_cols", tuple(
                Octo._raw(self.field, col) for col in zip(*self.m)))
        return self._cols

    def image_of(self, j) -> Octo:
        return self.columns[INDEX[j] if isinstance(j, str) else j]

    def __call__(self, x: Octo) -> Octo:
        if x.field != self.field:
            raise FieldMismatch(f"{x.field} vs {self.field}")
        return Octo._raw(self.field, linalg.matvec(self.m, x.coords, self.field))

    def entry(self, i, j) -> Scalar:
        return Scalar(self.field, self.m[i][j])

    # -- algebra of maps ----------------------------------------------------

    def _same(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        self._same(other)
        return LinMap._raw(self.field, linalg.matmul(self.m, other.m, self.field))

    def __add__(self, other):
        self._same(other)
        f = self.field
        return LinMap._raw(f, [[f.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.m, other.m)])

    def __sub__(self, other):
        self._same(other)
        f = self.field
        return LinMap._raw(f, [[f.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.m, other.m)])

    def __neg__(self):
        return scale(self, -1)

    def __pow__(self, k: int):
        out = LinMap.identity(self.field)
        for _ in range(k):
            out = out @ self
        return out

    def inverse(self) -> "LinMap":
        return LinMap._raw(self.field, linalg.inverse(self.m, self.field))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.m for x in row)

    def is_invertible(self) -> bool:
        return linalg.rank(self.m, self.field) == DIM

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.field == other.field and self.m == other.m

    def __hash__(self):
        return hash((self.field, self.m))

    def encoding(self) -> tuple:
        """Entry scan in fixed basis order, column by column (image of e11 first)."""
        return tuple(x for col in zip(*self.m) for x in col)

    # -- text / json --------------------------------------------------------

    def describe(self, name: str = "R") -> str:
        parts = [f"{name}({BASIS_NAMES[j]}) = {c}" for j, c in enumerate(self.columns) if not c.is_zero()]
        return ", ".join(parts) if parts else f"{name} = 0"

    def __repr__(self):
        return f"LinMap({self.field!r}: {self.describe()})"

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "matrix": [[f.fmt(x) for x in row] for row in self.m],
            "convention": CONVENTION,
            "basis": list(BASIS_NAMES),
        }

    @classmethod
    def from_json(cls, obj) -> "LinMap":
        if isinstance(obj, str):
            obj = json.loads(obj)
        conv = obj.get("convention", CONVENTION)
        if conv != CONVENTION:
            raise ValueError(f"unsupported convention {conv!r}")
        if list(obj.get("basis", BASIS_NAMES)) != list(BASIS_NAMES):
            raise ValueError("basis order differs from " + " ".join(BASIS_NAMES))
        field = parse_field(obj["field"])
        rows = [[field.parse(str(x)) for x in row] for row in obj["matrix"]]
        return cls(field, rows)


# ---------------------------------------------------------------------------


def scale(R: LinMap, lam) -> LinMap:
    f = R.field
    lam = f.elem(lam)
    return LinMap._raw(f, [[f.mul(lam, x) for x in row] for row in R.m])


def conjugate(R: LinMap, phi: LinMap) -> LinMap:
    """``phi^-1 R phi``; raises :class:`Singular` when phi is not invertible."""
    return phi.inverse() @ R @ phi


def image(R: LinMap) -> Subspace:
    return Subspace(R.field, R.columns)


def kernel(R: LinMap) -> Subspace:
    f = R.field
    return Subspace(f, [Octo._raw(f, v) for v in linalg.nullspace(R.m, f)])


def rank_kernel_image(R: LinMap):
    """``(rank, kernel_basis, image_basis)``; bases are reduced echelon."""
    img = image(R)
    ker = kernel(R)
    return img.dim, ker.basis(), img.basis()


@dataclass(frozen=True)
class RBResult:
    ok: bool
    witness: tuple | None = None  # (i, j) basis indices of first failing pair
    lhs: Octo | None = None
    rhs: Octo | None = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "Rota-Baxter identity holds on all 64 basis pairs"
        i, j = self.witness
        return (f"fails at (x, y) = ({BASIS_NAMES[i]}, {BASIS_NAMES[j]}): "
                f"R(x)R(y) = {self.lhs}, R(R(x)y + xR(y)) = {self.rhs}")


def rb_residual(R: LinMap, x: Octo, y: Octo):
    """``(R(x)R(y), R(R(x)y + xR(y)))`` for arbitrary elements."""
    rx, ry = R(x), R(y)
    return mul(rx, ry), R(mul(rx, y) + mul(x, ry))


def check_rb(R: LinMap) -> RBResult:
    """Weight-zero identity on basis pairs, row-major, first failure reported."""
    f = R.field
    cols = R.columns
    es = [basis(i, f) for i in range(DIM)]
    for i in range(DIM):
        ri = cols[i]
        for j in range(DIM):
            rj = cols[j]
            lhs = mul(ri, rj)
            inner = mul(ri, es[j]) + mul(es[i], rj)
            rhs = R(inner)
            if lhs != rhs:
                return RBResult(False, (i, j), lhs, rhs)
    return RBResult(True)


def is_rb(R: LinMap) -> bool:
    return check_rb(R).ok


def bimodule_check(R: LinMap) -> bool:
    """``Im(R) Ker(R) + Ker(R) Im(R)`` inside ``Ker(R)``."""
    img, ker = image(R), kernel(R)
    for a in img.basis():
        for k in ker.basis():
            if mul(a, k) not in ker or mul(k, a) not in ker:
                return False
    return True


@dataclass(frozen=True)
class Fingerprint:
    d1: int
    d2: int
    d3: int
    k: int
    img_square: int
    img_unital: bool

    def nilpotency(self) -> str:
        if self.d1 == 0:
            return "R = 0"
        if self.d2 == 0:
            return "R != 0, R^2 = 0"
        if self.d3 == 0:
            return "R^2 != 0, R^3 = 0"
        return "R^3 != 0"

    def as_tuple(self):
        return (self.d1, self.d2, self.d3, self.k, self.img_square, self.img_unital)

    def __str__(self):
        return (f"rank R={self.d1} R^2={self.d2} R^3={self.d3} dim(Im∩Ker)={self.k} "
                f"dim(Im·Im)={self.img_square} unital={self.img_unital}")


def fingerprint(R: LinMap) -> Fingerprint:
    f = R.field
    img = image(R)
    R2 = R @ R
    R3 = R2 @ R
    d2 = linalg.rank(R2.m, f)
    d3 = linalg.rank(R3.m, f)
    return Fingerprint(
        d1=img.dim,
        d2=d2,
        d3=d3,
        k=img.intersect(kernel(R)).dim,
        img_square=product_span(img, img).dim,
        img_unital=unit(f) in img,
    )


__all__ = [
    "CONVENTION", "LinMap", "Singular", "scale", "conjugate", "image", "kernel",
    "rank_kernel_image", "RBResult", "rb_residual", "check_rb", "is_rb",
    "bimodule_check", "Fingerprint", "fingerprint",
]
