import json
import random

import pytest
from hypothesis import given, strategies as st

from octorb.algebra import BASIS_NAMES, DIM, Octo, basis, mul, octo, product_span
from octorb.catalog import CASES, build_case, CaseSpec
from octorb.maps import build_map, map_specs
from octorb.operator import (
    LinMap, Singular, bimodule_check, check_rb, conjugate, fingerprint, image, kernel,
    rank_kernel_image, rb_residual, scale,
)
from octorb.scalar import Q

from conftest import F5, linmaps, octos


def op(images, field=Q, **params):
    return LinMap.from_images(images, field, **params)


F5_MAPS = [build_map(s, field=F5) for s in map_specs(F5)]
F5_CATALOG = [build_case(CaseSpec(src, no, {k: 2 for k in d.params}), F5)
              for (src, no), d in CASES.items() if src in ("theorem1", "corollary6")]


def test_columns_are_images():
    R = op({"e21": "e12"})
    assert R(octo("e21")) == octo("e12")
    assert R.image_of(2) == octo("e12")
    assert R.entry(1, 2) == 1


def test_zero_operator():
    Z = LinMap.zero(Q)
    rank, ker, img = rank_kernel_image(Z)
    assert rank == 0 and len(ker) == DIM and img == []
    assert check_rb(Z) and bimodule_check(Z)
    assert fingerprint(Z).as_tuple() == (0, 0, 0, 0, 0, False)


def test_rank_and_image_of_two_dim_case():
    R = op({"e21": "e11", "e22": "e12"})
    rank, ker, img = rank_kernel_image(R)
    assert rank == 2
    assert {str(v) for v in img} == {"e11", "e12"}
    assert len(ker) == 6


def test_lemma5_kernel():
    for (src, no), d in CASES.items():
        if src != "lemma5":
            continue
        R = build_case(CaseSpec(src, no, {k: 2 for k in d.params}))
        expected = image(op({n: n for n in ("e11", "e12", "e22", "ve12", "ve22")}))
        assert kernel(R) == expected


def test_rb_examples():
    assert check_rb(op({"e21": "e12"}))
    res = check_rb(LinMap.identity(Q))
    assert not res
    assert res.witness == (0, 0)
    assert res.lhs == octo("e11") and res.rhs == octo("2*e11")
    assert "e11" in res.describe()


def test_conjugate_by_identity():
    R = op({"e21": "e12", "ve22": "ve12"})
    assert conjugate(R, LinMap.identity(Q)) == R


def test_conjugate_lemma1_step():
    a3 = Q.elem(3)
    R = op({"ve22": "e12", "e21": "a*e12"}, a=a3)
    phi = build_map(6, 1 / a3)
    # phi^-1 R phi with phi the inverse of the Prop 6 map at 1/a3
    R1 = conjugate(R, phi.inverse())
    assert R1 == op({"ve22": "a*e12", "e21": "a*e12"}, a=1 / a3)
    assert scale(conjugate(R1, LinMap.identity(Q)), a3) == op({"ve22": "e12", "e21": "e12"})


def test_scale_examples():
    R = op({"e21": "e12"})
    assert scale(R, 1) == R
    assert scale(LinMap.zero(Q), 5) == LinMap.zero(Q)


def test_singular_conjugation():
    with pytest.raises(Singular):
        conjugate(LinMap.identity(Q), LinMap.zero(Q))


def test_remark_example_fingerprints():
    fp = fingerprint(op({"e21": "-e11", "e11": "e12"}))
    assert (fp.d2, fp.d3) == (1, 0)
    assert fp.nilpotency() == "R^2 != 0, R^3 = 0"
    fp = fingerprint(op({"e21": "e12"}))
    assert (fp.d1, fp.d2) == (1, 0)


def test_fingerprint_against_definition():
    R = op({"e21": "e11", "ve11": "e12", "ve21": "e12"})
    fp = fingerprint(R)
    assert fp.d1 == len(image(R).basis())
    assert fp.d2 == image(R @ R).dim and fp.d3 == image(R @ R @ R).dim
    assert fp.k == image(R).intersect(kernel(R)).dim
    assert fp.img_square == product_span(image(R), image(R)).dim


def test_identity_bimodule():
    assert bimodule_check(LinMap.identity(Q))


def test_json_round_trip():
    R = op({"e21": "1/2*e12", "ve11": "-3*ve22"})
    doc = json.loads(json.dumps(R.to_json()))
    assert LinMap.from_json(doc) == R
    assert doc["basis"] == list(BASIS_NAMES)
    S = build_case(CaseSpec("theorem1", 10, {"a": 3}), F5)
    assert LinMap.from_json(json.loads(json.dumps(S.to_json()))) == S
    with pytest.raises(ValueError):
        LinMap.from_json(dict(doc, basis=list(reversed(BASIS_NAMES))))


def test_encoding_is_column_major_and_injective():
    R = op({"e12": "e11"})
    enc = R.encoding()
    assert len(enc) == 64
    assert enc != LinMap.zero(Q).encoding()
    assert op({"e11": "e12"}).encoding() != enc


@given(st.sampled_from(F5_CATALOG), st.sampled_from(F5_MAPS))
def test_fingerprint_invariant_under_maps(R, phi):
    assert fingerprint(conjugate(R, phi)) == fingerprint(R)


@given(st.sampled_from(F5_CATALOG), st.sampled_from(F5_MAPS))
def test_maps_preserve_rb(R, phi):
    assert check_rb(conjugate(R, phi))
    assert check_rb(phi @ R @ phi.inverse())


@given(linmaps(F5), st.sampled_from(F5_MAPS))
def test_conjugation_round_trip(R, phi):
    assert conjugate(conjugate(R, phi), phi.inverse()) == R


@given(st.sampled_from(F5_CATALOG), st.integers(1, 4))
def test_scaling_invariance(R, lam):
    assert fingerprint(scale(R, lam)) == fingerprint(R)
    assert bool(check_rb(scale(R, lam)))


@given(linmaps(F5, density=0.15), st.integers(1, 4))
def test_scaling_preserves_rb_verdict(R, lam):
    assert bool(check_rb(scale(R, lam))) == bool(check_rb(R))


@given(st.sampled_from(F5_CATALOG))
def test_rb_image_closed_and_kernel_bimodule(R):
    img = image(R)
    assert product_span(img, img).dim <= img.dim
    assert all(v in img for v in product_span(img, img).basis())
    assert bimodule_check(R)


def _random_pair_agreement(R, rng, pairs=500):
    f = R.field
    for _ in range(pairs):
        x = Octo(f, [rng.randrange(f.p) for _ in range(DIM)])
        y = Octo(f, [rng.randrange(f.p) for _ in range(DIM)])
        lhs, rhs = rb_residual(R, x, y)
        if lhs != rhs:
            return False
    return True


@pytest.mark.parametrize("seed", range(6))
def test_basis_check_agrees_with_random_pairs(seed):
    rng = random.Random(seed)
    good = F5_CATALOG[seed * 7 % len(F5_CATALOG)]
    assert _random_pair_agreement(good, rng)
    bad = LinMap(F5, [[rng.randrange(5) for _ in range(DIM)] for _ in range(DIM)])
    assert not check_rb(bad)
    assert not _random_pair_agreement(bad, rng)
