from fractions import Fraction
import itertools

from hypothesis import given, strategies as st

from octorb import linalg
from octorb.scalar import GF, Q

from conftest import small_fracs


def mats(n, m, vals):
    return st.lists(st.lists(vals, min_size=m, max_size=m), min_size=n, max_size=n)


def brute_rank_mod_p(rows, p):
    # rank = largest k with a nonzero k x k minor (exhaustive, small sizes only)
    n, m = len(rows), len(rows[0])

    def det(a):
        if len(a) == 1:
            return a[0][0] % p
        return sum((-1) ** j * a[0][j] * det([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a))) % p

    for k in range(min(n, m), 0, -1):
        for rs in itertools.combinations(range(n), k):
            for cs in itertools.combinations(range(m), k):
                if det([[rows[i][j] for j in cs] for i in rs]):
                    return k
    return 0


@given(mats(3, 4, st.integers(0, 4)))
def test_rank_matches_minors(rows):
    assert linalg.rank(rows, GF(5)) == brute_rank_mod_p(rows, 5)


@given(mats(4, 5, small_fracs))
def test_nullspace_is_kernel(rows):
    ns = linalg.nullspace(rows, Q)
    assert len(ns) == 5 - linalg.rank(rows, Q)
    for v in ns:
        assert linalg.matvec(rows, v, Q) == [0] * 4


@given(mats(3, 3, small_fracs))
def test_inverse_round_trip(rows):
    if linalg.rank(rows, Q) < 3:
        return
    inv = linalg.inverse(rows, Q)
    assert linalg.matmul(rows, inv, Q) == linalg.identity(3, Q)


def test_singular_inverse():
    import pytest
    with pytest.raises(linalg.Singular):
        linalg.inverse([[1, 2], [2, 4]], Q)


def test_rref_example():
    rows = [[2, 4, 0], [1, 2, 1]]
    red, pivots = linalg.rref(rows, Q)[:2]
    assert pivots == [0, 2]
    assert red[0] == [1, 2, 0]


def test_solve():
    a = [[1, 1], [1, -1]]
    assert linalg.solve(a, [3, 1], Q) == ([2, 1], [])
    x, null = linalg.solve(a, [Fraction(1), 0], Q)
    assert x == [Fraction(1, 2), Fraction(1, 2)] and null == []
    assert linalg.solve([[1, 1], [2, 2]], [1, 3], Q) is None
    x, null = linalg.solve([[1, 1]], [2], Q)
    assert x == [2, 0] and len(null) == 1 and null[0][0] == -null[0][1] != 0
