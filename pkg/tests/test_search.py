import pytest
from hypothesis import given, settings, strategies as st

from octorb import search
from octorb.algebra import octo
from octorb.catalog import CASES, CaseSpec, build_case
from octorb.maps import build_map, map_specs
from octorb.operator import LinMap, bimodule_check, check_rb, conjugate, fingerprint, scale
from octorb.search import (
    BudgetExceeded, OrbitStore, SearchSpec, classify_run, enumerate_naive, enumerate_rb,
    orbit_reduce, report_json,
)
from octorb.scalar import GF

F3 = GF(3)
STORE = OrbitStore(F3)


def e(*names):
    return [octo(n, F3) for n in names]


# golden counts from the first verified run (naive and vectorized agree)
GOLDEN = {"N1": 27, "I1": 53}


@pytest.mark.parametrize("name", ["N1", "I1"])
def test_vectorized_matches_naive(name):
    spec = SearchSpec(F3, name)
    fast = enumerate_rb(spec)
    assert fast == enumerate_naive(spec)
    assert len(fast) == GOLDEN[name]


@pytest.mark.parametrize("kernel, exact", [(("e11", "e12"), False), (("ve22",), True),
                                           (("e11 + ve21", "e22 - ve12"), False), ((), True)])
def test_constraints_match_naive(kernel, exact):
    spec = SearchSpec(F3, "N1", e(*kernel), exact)
    assert enumerate_rb(spec) == enumerate_naive(spec)


def test_candidate_counts():
    assert SearchSpec(F3, "N1").candidate_count() == 3 ** 8
    assert SearchSpec(F3, "I2").candidate_count() == 3 ** 16
    ker = e("e11", "e12", "e22", "ve12", "ve22")
    assert SearchSpec(F3, "N3", ker).candidate_count() == 3 ** 9


def test_zero_image():
    spec = SearchSpec(F3, "0")
    assert enumerate_rb(spec) == [LinMap.zero(F3)]
    report = classify_run(spec)
    assert report["orbit_count"] == 0 and report["novel_fingerprints"] == 0


def test_lemma1_forms_found():
    found = set(enumerate_rb(SearchSpec(F3, "N1")))
    for d in (CASES[("lemma1", 1)], CASES[("lemma1", 2)]):
        assert build_case(CaseSpec("lemma1", d.case_no, {}), F3) in found


def test_results_are_rb_and_bimodule():
    ker = e("e11", "e12", "e22", "ve12", "ve22")
    for R in enumerate_rb(SearchSpec(F3, "N3", ker)):
        assert check_rb(R) and bimodule_check(R)


def test_results_sorted_and_threads_agree():
    ker = e("e11", "e12", "e22", "ve12", "ve22")
    spec = SearchSpec(F3, "I3", ker)
    one = enumerate_rb(spec)
    assert [R.encoding() for R in one] == sorted(R.encoding() for R in one)
    assert enumerate_rb(spec, threads=3) == one


def test_catalog_instances_found_in_their_image():
    # every F3 instance of the 1- and 3-dimensional families, kernel from the lemmas
    ker = e("e11", "e12", "e22", "ve12", "ve22")
    pools = {
        "N1": set(enumerate_rb(SearchSpec(F3, "N1"))),
        "I1": set(enumerate_rb(SearchSpec(F3, "I1"))),
        "N3": set(enumerate_rb(SearchSpec(F3, "N3", ker))),
        "I3": set(enumerate_rb(SearchSpec(F3, "I3", ker))),
    }
    for src in ("lemma1", "lemma2", "lemma5", "lemma6"):
        for spec, R in search.catalog_instances(F3, (src,)):
            assert R in pools[CASES[(src, spec.case_no)].image], spec.label()


def test_budget():
    with pytest.raises(BudgetExceeded):
        SearchSpec(F3, "I2", budget=1000).check_budget()
    assert SearchSpec(F3, "N1", budget=6561).check_budget() == 6561


def test_budget_env(monkeypatch):
    monkeypatch.setenv("OCTORB_BUDGET", "100")
    assert search.budget_from_env() == 100
    with pytest.raises(BudgetExceeded):
        enumerate_rb(SearchSpec(F3, "N1"))
    monkeypatch.delenv("OCTORB_BUDGET")
    assert search.budget_from_env() == search.DEFAULT_BUDGET


def test_orbit_zero():
    assert orbit_reduce(LinMap.zero(F3), STORE) == LinMap.zero(F3)


def test_orbit_sizes_frozen():
    sizes = {}
    for src, no in (("lemma1", 1), ("lemma1", 2), ("lemma2", 1)):
        sizes[(src, no)] = STORE.reduce(build_case(CaseSpec(src, no, {}), F3)).size
    assert sizes == {("lemma1", 1): 728, ("lemma1", 2): 8736, ("lemma2", 1): 39312}


def test_generating_subset_gives_same_orbit():
    R = build_case(CaseSpec("lemma1", 2, {}), F3)
    full = OrbitStore(F3, full_generators=True).reduce(R)
    small = STORE.reduce(R)
    assert full.canonical == small.canonical
    assert (full.members == small.members).all()


def test_orbit_canonical_is_least_encoding():
    R = build_case(CaseSpec("lemma1", 1, {}), F3)
    orb = STORE.reduce(R)
    reps = orb.representatives()
    assert orb.canonical == min(reps, key=LinMap.encoding)


F3_MAPS = [build_map(s, field=F3) for s in map_specs(F3)]
N1_OPS = [R for R in enumerate_rb(SearchSpec(F3, "N1")) if not R.is_zero()]


@settings(max_examples=25)
@given(st.sampled_from(N1_OPS), st.sampled_from(F3_MAPS), st.integers(1, 2))
def test_orbit_reduce_invariant(R, phi, lam):
    c = orbit_reduce(R, STORE)
    assert orbit_reduce(c, STORE) == c
    assert orbit_reduce(scale(conjugate(R, phi), lam), STORE) == c


@settings(max_examples=10)
@given(st.sampled_from(N1_OPS))
def test_orbit_members_share_fingerprint(R):
    orb = STORE.reduce(R)
    reps = orb.representatives()
    fp = fingerprint(orb.canonical)
    for M in reps[:: max(1, len(reps) // 40)]:
        assert fingerprint(M) == fp
        assert M in orb


def test_classify_deterministic():
    spec = SearchSpec(F3, "N1", require_image_exact=True)
    a = report_json(classify_run(spec))
    b = report_json(classify_run(spec, store=OrbitStore(F3)))
    assert a == b


def test_classify_exact_dim1():
    r = classify_run(SearchSpec(F3, "N1", require_image_exact=True), store=STORE)
    assert r["rb_count"] == 26 and r["novel_fingerprints"] == 0
    assert r["orbit_count"] == 2 and r["unmatched"] == []
    r = classify_run(SearchSpec(F3, "I1", require_image_exact=True), store=STORE)
    assert r["novel_fingerprints"] == 0 and r["orbit_count"] == 1 and r["unmatched"] == []
    assert r["orbits"][0]["catalog_cases"] == ["lemma2(1)"]


def test_reference_sources():
    assert search.reference_sources("I2", exact=True) == ("lemma3",)
    assert set(search.reference_sources("I2", exact=False)) == {"lemma1", "lemma2", "lemma3", "lemma4"}
    assert search.reference_sources("0", exact=False) == ()


KER3 = ("e11", "e12", "e22", "ve12", "ve22")


@settings(max_examples=80)
@given(st.sampled_from([("N1", ()), ("I2", ()), ("S4", ("e11", "e12", "ve11", "ve12")), ("I3", KER3)]),
       st.data())
def test_quadratic_forms_vanish_iff_rb(layout, data):
    import numpy as np
    name, kernel = layout
    spec = SearchSpec(GF(5), name, [octo(n, GF(5)) for n in kernel])
    monos, E = search.quadratic_system(spec)
    x = np.array(data.draw(st.lists(st.integers(0, 4), min_size=spec.n_vars, max_size=spec.n_vars)))
    values = (E @ np.array([x[u] * x[v] for u, v in monos])) % 5
    R = search._operators_from_coeffs(spec, x[None, :])[0]
    M = LinMap(GF(5), [[int(c) for c in row] for row in R])
    assert (not values.any()) == bool(check_rb(M))
    for k in kernel:
        assert M(octo(k, GF(5))).is_zero()
