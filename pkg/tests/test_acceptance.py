"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

from contextlib import contextmanager
import random
import time

import pytest

from octorb import catalog, checks, search
from octorb.algebra import SUBALGEBRAS, octo, subalgebra, subalgebra_check
from octorb.catalog import CaseSpec, build_case, enumerate_catalog, expected_fingerprint
from octorb.maps import ZeroParamForbidden, build_map, run_script
from octorb.operator import LinMap, bimodule_check, check_rb, fingerprint, image, kernel, product_span
from octorb.scalar import GF, Q
from octorb.scripts import quadratic_scripts, shipped_scripts

F3, F5, F7 = GF(3), GF(5), GF(7)
RATIONAL = checks.RATIONAL_SAMPLES


@pytest.fixture
def report(request, capsys):
    @contextmanager
    def criterion(label):
        start = time.perf_counter()
        info = {}
        try:
            yield info
        except BaseException:
            with capsys.disabled():
                print(f"\n[FAIL] {label} ({time.perf_counter() - start:.2f}s)")
            raise
        with capsys.disabled():
            extra = f" {info['note']}" if "note" in info else ""
            print(f"\n[PASS] {label} ({time.perf_counter() - start:.2f}s){extra}")
    return criterion


def _all_pass(rows):
    bad = [r.name for r in rows if not r.ok]
    assert not bad, bad[:5]
    return len(rows)


def test_c01_algebra_soundness(report):
    with report("1 algebra soundness over Q and F5") as info:
        t = time.perf_counter()
        n = _all_pass(checks.algebra_checks(Q, samples=200)) + _all_pass(checks.algebra_checks(F5, samples=200))
        assert time.perf_counter() - t < 1.0
        info["note"] = f"{n} checks"


def test_c02_maps_suite(report):
    with report("2 maps verify as their claimed kind") as info:
        t = time.perf_counter()
        n = _all_pass(checks.maps_checks(F5)) + _all_pass(checks.maps_checks(Q, RATIONAL))
        assert time.perf_counter() - t < 5.0
        info["note"] = f"{n} maps"


def test_c03_catalog_rb(report):
    with report("3 catalog passes check_rb (Q samples, all of F5)") as info:
        t = time.perf_counter()
        n = 0
        for field, samples in ((Q, RATIONAL), (F5, list(F5.elements()))):
            for spec, R in enumerate_catalog(field, samples, verify=False):
                assert check_rb(R), spec.label()
                n += 1
        assert {s: len(catalog.cases(s)) for s in ("theorem1", "corollary6", "prop18")} == \
            {"theorem1": 27, "corollary6": 25, "prop18": 4}
        assert time.perf_counter() - t < 10.0
        info["note"] = f"{n} instances"


def test_c04_remark_nilpotency(report):
    with report("4 nilpotency pattern of the quadratically closed list") as info:
        seen = set()
        for field, samples in ((Q, RATIONAL), (F5, list(F5.elements()))):
            for spec, R in enumerate_catalog(field, samples, ["corollary6"]):
                if spec.case_no == 25:
                    continue
                fp = fingerprint(R)
                if spec.case_no in (5, 21, 22, 23, 24):
                    assert fp.d2 != 0 and fp.d3 == 0, spec.label()
                else:
                    assert fp.d2 == 0, spec.label()
                assert expected_fingerprint(spec).matches(fp) is True
                seen.add(spec.case_no)
        assert seen == set(range(1, 25))
        info["note"] = "cases 1-24"


def test_c05_kernel_and_image_claims(report):
    with report("5 kernel and image claims") as info:
        ker5 = image(LinMap.from_images({n: n for n in ("e11", "e12", "e22", "ve12", "ve22")}, Q))
        n = 0
        for field, samples in ((Q, RATIONAL), (F5, list(F5.elements()))):
            k5 = ker5 if field is Q else image(LinMap.from_images(
                {n_: n_ for n_ in ("e11", "e12", "e22", "ve12", "ve22")}, field))
            for spec, R in enumerate_catalog(field, samples, ["lemma5"]):
                assert kernel(R) == k5, spec.label()
                n += 1
            for spec, R in enumerate_catalog(field, samples, ["lemma3"]):
                assert image(R) == subalgebra("I2").span(field), spec.label()
                n += 1
            for spec, R in enumerate_catalog(field, samples, ["lemma7"]):
                assert image(R) == subalgebra("S4").span(field), spec.label()
                n += 1
        info["note"] = f"{n} operators"


def test_c06_bimodule_and_subalgebras(report):
    with report("6 images closed, kernels bimodules, seven subalgebras") as info:
        for name in SUBALGEBRAS:
            for field in (Q, F5):
                r = subalgebra_check(subalgebra(name).basis(field))
                assert r.independent and r.closed and not r.unital, name
        assert subalgebra_check(subalgebra("N2").basis(Q)).square_zero
        n = 0
        for field, samples in ((Q, RATIONAL), (F5, list(F5.elements()))):
            for spec, R in enumerate_catalog(field, samples):
                img = image(R)
                assert all(v in img for v in product_span(img, img).basis()), spec.label()
                assert bimodule_check(R), spec.label()
                n += 1
        info["note"] = f"{n} operators"


def test_c07_script_replay(report):
    with report("7 reduction scripts replay exactly") as info:
        scripts = shipped_scripts()
        assert len(scripts) >= 8
        for s in scripts:
            trace = []
            assert run_script(s, trace=trace) == s.output, s.source
            assert all(check_rb(T) for T in trace)
        info["note"] = f"{len(scripts)} scripts"


def test_c08_dim1_classification(report):
    with report("8 F3 sweeps with 1-dim image, orbits matched") as info:
        t = time.perf_counter()
        store = search.OrbitStore(F3)
        runs = {}
        for name, src in (("N1", "lemma1"), ("I1", "lemma2")):
            spec = search.SearchSpec(F3, name)
            runs[name] = r = search.classify_run(spec, store=store)
            assert r["reference_sources"] == ["lemma1", "lemma2"]
            assert r["orbits"] and all(c.startswith(src) for o in r["orbits"] for c in o["catalog_cases"])
            assert r["novel_fingerprints"] == 0
            assert not [o for o in r["orbits"] if not o["matched"] and o["novel_fingerprint"]]
            assert r["unmatched"] == []
        elapsed = time.perf_counter() - t
        assert runs["N1"]["candidates"] == 6561
        assert elapsed < 1.0, elapsed
        info["note"] = ", ".join(f"{k}: {r['rb_count']} ops / {r['orbit_count']} orbits" for k, r in runs.items())


def _sweep(spec):
    r = search.classify_run(spec, reduce_orbits=False)
    assert r["novel_fingerprints"] == 0, [f for f in r["fingerprints"] if f["novel"]]
    return r


def test_c09_dim2_classification(report):
    with report("9 F3 sweeps with image inside a 2-dim subalgebra") as info:
        notes = []
        for name in ("I2", "N2"):
            r = _sweep(search.SearchSpec(F3, name))
            assert r["candidates"] == 3 ** 16
            two_dim = [f for f in r["fingerprints"] if f["fingerprint"][0] == 2]
            src = "lemma3" if name == "I2" else "lemma4"
            assert two_dim and all(any(c.startswith(src) for c in f["catalog_cases"]) for f in two_dim)
            notes.append(f"{name}: {r['rb_count']} ops")
        info["note"] = ", ".join(notes)


def _e(*names):
    return [octo(n, F3) for n in names]


def test_c10_dim3_dim4_classification(report):
    with report("10 F3 sweeps with 3- and 4-dim images under kernel constraints") as info:
        branches = [
            ("N3", ("e11", "e12", "e22", "ve12", "ve22"), "lemma5"),
            ("I3", ("e11", "e12", "e22", "ve12", "ve22"), "lemma6"),
            ("S4", ("e11", "e12", "ve11", "ve12"), "lemma7"),
            ("S4", ("e12", "e22", "ve11", "ve12"), "lemma7"),
        ]
        notes = []
        top_cases = set()
        for name, ker, src in branches:
            spec = search.SearchSpec(F3, name, _e(*ker))
            assert spec.candidate_count() <= 3 ** 16
            r = _sweep(spec)
            dim = subalgebra(name).dim
            top = [f for f in r["fingerprints"] if f["fingerprint"][0] == dim]
            assert top and all(any(c.startswith(src) for c in f["catalog_cases"]) for f in top)
            if name == "S4":
                top_cases.update(c for f in top for c in f["catalog_cases"] if c.startswith(src))
            notes.append(f"{name}: {r['rb_count']}")
        assert top_cases == {f"lemma7({i})" for i in range(1, 6)}
        info["note"] = "ops " + ", ".join(notes)


def test_c11_quadratic_reductions(report):
    with report("11 square-root reductions over F7 at alpha = 2") as info:
        assert F7.sqrt(2) == 3
        scripts = quadratic_scripts(7, 2)
        targets = set()
        for s in scripts:
            assert s.field == F7
            assert run_script(s) == s.output, s.source
            targets.add(s.source.split("-")[0])
        assert targets == {f"corollary{i}" for i in range(1, 6)}
        info["note"] = f"{len(scripts)} scripts"


def test_c12_negative_controls(report):
    with report("12 negative controls fail with witnesses") as info:
        res = check_rb(LinMap.identity(Q))
        assert not res and res.witness == (0, 0)
        assert res.lhs == octo("e11") and res.rhs == octo("2*e11")
        rng = random.Random(12)
        R = LinMap(Q, [[rng.randint(-3, 3) for _ in range(8)] for _ in range(8)])
        res = check_rb(R)
        assert not res and res.witness is not None and res.lhs != res.rhs
        with pytest.raises(ZeroParamForbidden):
            build_map(6, 0)
        info["note"] = f"random witness {res.describe()[:40]}..."
