"""Exact base fields: the rationals and prime fields F_p with odd p.

A field object does arithmetic on *raw* values (``Fraction`` for Q, ``int``
residues in ``[0, p)`` for F_p).  Octonions and operators store raw values
for speed; :class:`Scalar` wraps a raw value together with its field for the
public API.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import re

__all__ = [
    "FieldError", "FieldMismatch", "DivisionByZero",
    "Field", "Rationals", "PrimeField", "Q", "GF", "Scalar", "parse_field",
]

MAX_PRIME = 1 << 16


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
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


class Field:
    """Common interface of the two field kinds."""

    kind: str
    p: int | None = None

    # raw-value arithmetic; subclasses implement
    def elem(self, x): raise NotImplementedError
    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def inv(self, a): raise NotImplementedError
    def sqrt(self, a): raise NotImplementedError
    def fmt(self, a) -> str: raise NotImplementedError

    zero = 0
    one = 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.elem(x))

    def parse(self, text: str):
        """Parse the text encoding: ``n`` or ``n/d``."""
        text = text.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:/([+-]?\d+))?", text)
        if not m:
            raise FieldError(f"bad scalar literal {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.elem(num)
        den = int(m.group(2))
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return self.div(self.elem(num), self.elem(den))

    def to_json(self):
        raise NotImplementedError


class Rationals(Field):
    kind = "Rationals"

    def elem(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} value used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise FieldError("floats are not exact field elements")
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def mul(self, a, b): return a * b
    def neg(self, a): return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / a

    def sqrt(self, a):
        # only perfect squares of rationals
        if a < 0:
            return None
        if a == 0:
            return Fraction(0)
        rn, rd = _isqrt_exact(a.numerator), _isqrt_exact(a.denominator)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)

    def fmt(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


def _isqrt_exact(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


class PrimeField(Field):
    kind = "PrimeField"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p >= MAX_PRIME or not _is_prime(p):
            raise FieldError(f"p must be an odd prime below {MAX_PRIME}, got {p!r}")
        self.p = p
        self._roots = None

    def elem(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} value used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldError(f"cannot coerce {x!r} into F_{self.p}")
        return x % self.p

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def mul(self, a, b): return a * b % self.p
    def neg(self, a): return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def sqrt(self, a):
        if self._roots is None:
            # smaller representative wins: iterate upwards, keep first
            roots = {}
            for r in range(self.p):
                roots.setdefault(r * r % self.p, r)
            self._roots = roots
        return self._roots.get(a % self.p)

    def elements(self):
        return range(self.p)

    def fmt(self, a):
        return str(a % self.p)

    def to_json(self):
        return {"p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Q = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(obj) -> Field:
    """Field from its JSON form (``"Q"`` or ``{"p": int}``) or CLI text (``Q``, ``F5``, ``5``)."""
    if isinstance(obj, Field):
        return obj
    if isinstance(obj, dict):
        return GF(int(obj["p"]))
    if isinstance(obj, int):
        return GF(obj)
    text = str(obj).strip()
    if text.upper() in ("Q", "QQ", "RATIONALS"):
        return Q
    m = re.fullmatch(r"(?:F|GF|Fp)?_?(\d+)", text, re.IGNORECASE)
    if m:
        return GF(int(m.group(1)))
    raise FieldError(f"unknown field {obj!r}")


class Scalar:
    """Immutable field element bound to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.elem(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.elem(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __radd__(self, other):
        return self + other

    def __rmul__(self, other):
        return self * other

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        out = self.field.one
        for _ in range(n):
            out = self.field.mul(out, self.value)
        return Scalar(self.field, out)

    def sqrt(self):
        r = self.field.sqrt(self.value)
        return None if r is None else Scalar(self.field, r)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.elem(other)
        except (FieldError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.fmt(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self})"


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Field arithmetic by name (``add``, ``sub``, ``mul``, ``div``)."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    f = a.field
    fn = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}[op]
    return Scalar(f, fn(a.value, b.value))
