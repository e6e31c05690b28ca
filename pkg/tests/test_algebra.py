from fractions import Fraction
import itertools

import pytest
from hypothesis import given

from octorb.algebra import (
    BASIS_NAMES, DIM, SUBALGEBRAS, NotInM2, Octo, basis, classical_bar, mul, octo,
    subalgebra, subalgebra_check, symplectic_bar, trace_norm, unit,
)
from octorb.scalar import GF, Q

from conftest import F5, octos


# Oracle: O as pairs (a, b) meaning a + v b, with 2x2 blocks as nested lists.
def _mm(a, b):
    return [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)]


def _bar(a):
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


def _plus(a, b):
    return [[a[i][j] + b[i][j] for j in range(2)] for i in range(2)]


def oracle_mul(x, y):
    a, b = x
    c, d = y
    # a*c = ac, a*vd = v(bar(a) d), vb*c = v(c b), vb*vd = d bar(b)
    return _plus(_mm(a, c), _mm(d, _bar(b))), _plus(_mm(_bar(a), d), _mm(c, b))


def to_pair(x: Octo):
    v = [x.field.elem(c) if not isinstance(c, int) else c for c in x.coords]
    return [[v[0], v[1]], [v[2], v[3]]], [[v[4], v[5]], [v[6], v[7]]]


def from_pair(pair, field):
    a, b = pair
    return Octo(field, [a[0][0], a[0][1], a[1][0], a[1][1], b[0][0], b[0][1], b[1][0], b[1][1]])


def test_table_matches_rules_oracle():
    for i, j in itertools.product(range(DIM), repeat=2):
        x, y = basis(i), basis(j)
        assert mul(x, y) == from_pair(oracle_mul(to_pair(x), to_pair(y)), Q), (BASIS_NAMES[i], BASIS_NAMES[j])


@given(octos(Q), octos(Q))
def test_random_products_match_oracle(x, y):
    assert mul(x, y) == from_pair(oracle_mul(to_pair(x), to_pair(y)), Q)


@pytest.mark.parametrize("x, y, expected", [
    ("e12", "e21", "e11"),
    ("e11", "ve12", "0"),
    ("ve11", "ve22", "e22"),
])
def test_documented_products(x, y, expected):
    assert mul(octo(x), octo(y)) == (Octo.zero(Q) if expected == "0" else octo(expected))


def test_unit_law(field):
    one = unit(field)
    for i in range(DIM):
        e = basis(i, field)
        assert mul(one, e) == e == mul(e, one)


def test_unit_is_e11_plus_e22():
    assert unit(Q) == octo("e11 + e22")


def test_alternativity_all_basis_triples(field):
    es = [basis(i, field) for i in range(DIM)]
    for x in es:
        xx = mul(x, x)
        for y in es:
            assert mul(xx, y) == mul(x, mul(x, y))
            assert mul(mul(y, x), x) == mul(y, xx)


def assoc(x, y, z):
    return mul(mul(x, y), z) - mul(x, mul(y, z))


@given(octos(F5), octos(F5), octos(F5))
def test_associator_alternating(x, y, z):
    assert (assoc(x, y, z) + assoc(y, x, z)).is_zero()
    assert (assoc(x, y, z) + assoc(x, z, y)).is_zero()


@given(octos(Q))
def test_quadratic_law(x):
    t, n = trace_norm(x)
    assert mul(x, x) - x.scale(t.value) + unit(Q).scale(n.value) == Octo.zero(Q)


@given(octos(Q), octos(Q))
def test_norm_multiplicative(x, y):
    assert trace_norm(mul(x, y))[1] == trace_norm(x)[1] * trace_norm(y)[1]


@given(octos(F5))
def test_trace_norm_from_bar(x):
    # x + bar(x) = t 1 and x bar(x) = n 1
    t, n = trace_norm(x)
    one = unit(F5)
    assert x + classical_bar(x) == one.scale(t.value)
    assert mul(x, classical_bar(x)) == one.scale(n.value)


@pytest.mark.parametrize("x, tn", [("e11", (1, 0)), ("e11 + e22", (2, 1)), ("ve11", (0, 0)),
                                   ("ve11 + ve22", (0, -1)), ("e12", (0, 0))])
def test_trace_norm_examples(x, tn):
    t, n = trace_norm(octo(x))
    assert (t, n) == tn


def test_symplectic_bar():
    assert symplectic_bar(octo("e11")) == octo("e22")
    assert symplectic_bar(octo("e12")) == octo("-e12")
    assert symplectic_bar(unit(Q)) == unit(Q)
    with pytest.raises(NotInM2):
        symplectic_bar(octo("ve11"))


def test_classical_bar_examples():
    assert classical_bar(octo("e11")) == octo("e22")
    assert classical_bar(octo("ve12")) == octo("-ve12")
    assert classical_bar(unit(Q)) == unit(Q)


def test_classical_bar_is_involutive_antiautomorphism(field):
    es = [basis(i, field) for i in range(DIM)]
    for x in es:
        assert classical_bar(classical_bar(x)) == x
        for y in es:
            assert classical_bar(mul(x, y)) == mul(classical_bar(y), classical_bar(x))


def test_subalgebra_examples():
    r = subalgebra_check([octo("e11"), octo("e12")])
    assert r.closed and not r.unital and not r.square_zero
    r = subalgebra_check([octo("ve12"), octo("ve22")])
    assert r.closed and r.square_zero
    r = subalgebra_check([octo("e11"), octo("e22")])
    assert r.closed and r.unital
    r = subalgebra_check([octo("e12"), octo("e21")])
    assert not r.closed


@pytest.mark.parametrize("name", sorted(SUBALGEBRAS))
def test_seven_subalgebras(name, field):
    spec = subalgebra(name)
    r = subalgebra_check(spec.basis(field))
    assert r.independent and r.closed and not r.unital
    assert r.square_zero == (name in ("N1", "N2"))


@pytest.mark.parametrize("name", ["N1", "N2", "N3"])
def test_nilpotent_subalgebras(name):
    # every element squares to zero
    f = GF(3)
    vecs = subalgebra(name).basis(f)
    for coeffs in itertools.product(range(3), repeat=len(vecs)):
        x = Octo.zero(f)
        for c, v in zip(coeffs, vecs):
            x = x + v.scale(c)
        assert mul(x, x).is_zero()


def test_subalgebra_dimensions():
    assert {n: subalgebra(n).dim for n in SUBALGEBRAS} == {
        "N1": 1, "I1": 1, "I2": 2, "N2": 2, "N3": 3, "I3": 3, "S4": 4}


def test_octo_parsing():
    x = octo("2*e11 - ve21 + 1/2*ve12")
    assert x.coords[0] == 2 and x.coords[6] == -1 and x.coords[5] == Fraction(1, 2)
    assert octo("a*e12", Q, a=3) == octo("3*e12")
    assert Octo.from_text(x.to_text(), Q) == x


def test_octo_field_mismatch():
    from octorb.scalar import FieldMismatch
    with pytest.raises(FieldMismatch):
        octo("e11", GF(3)) + octo("e11", GF(5))
