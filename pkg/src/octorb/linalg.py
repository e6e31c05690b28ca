"""Exact dense linear algebra over a :class:`~octorb.scalar.Field`.

Matrices are lists of rows of raw field values.  Everything is plain
Gauss-Jordan elimination; sizes here never exceed 8x8 (or 64 for small
solves), so clarity wins over cleverness.
"""

from __future__ import annotations

from .scalar import Field, DivisionByZero


class Singular(ArithmeticError):
    pass


def rref(rows, field: Field):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    m = [[field.elem(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def reduce_against(basis, pivots, v, field: Field):
    """Remainder of ``v`` after eliminating the pivots of an rref basis."""
    v = list(v)
    for row, c in zip(basis, pivots):
        if v[c] != 0:
            f = v[c]
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
    return v


def in_span(basis, pivots, v, field: Field) -> bool:
    return all(x == 0 for x in reduce_against(basis, pivots, v, field))


def nullspace(matrix, field: Field):
    """Basis of ``{x : matrix @ x = 0}``, as rref rows (canonical)."""
    ncols = len(matrix[0])
    red, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = field.neg(row[fcol])
        vecs.append(v)
    if not vecs:
        return []
    return rref(vecs, field)[0]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b, field: Field):
    bt = transpose(b)
    zero = field.zero
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = zero
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    s = field.add(s, field.mul(x, y))
            out_row.append(s)
        out.append(out_row)
    return out


def matvec(a, v, field: Field):
    zero = field.zero
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x != 0 and y != 0:
                s = field.add(s, field.mul(x, y))
        out.append(s)
    return out


def identity(n: int, field: Field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def inverse(m, field: Field):
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, identity(n, field))]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise Singular("matrix is not invertible")
    return [row[n:] for row in red[:n]]


def solve(a, b, field: Field):
    """One solution ``x`` of ``a @ x = b`` plus a nullspace basis.

    Returns ``None`` when the system is inconsistent.
    """
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x, nullspace(a, field)


__all__ = [
    "Singular", "DivisionByZero", "rref", "rank", "reduce_against", "in_span",
    "nullspace", "transpose", "matmul", "matvec", "identity", "inverse", "solve",
]
