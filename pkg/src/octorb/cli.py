"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(a witness is printed), 2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
import sys

from .scalar import FieldError, PrimeField, parse_field
from .algebra import BASIS_NAMES, Octo, octo
from .operator import CONVENTION, LinMap, check_rb, fingerprint
from .maps import ReductionScript, ScriptError, run_script
from . import catalog, checks, search
from .scripts import shipped_scripts

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
BANNER = "basis: " + " ".join(BASIS_NAMES) + f"   ({CONVENTION})"


class UsageError(Exception):
    pass


def _field(args):
    text = args.field
    if text.lower() in ("fp", "f_p", "p"):
        if args.p is None:
            raise UsageError("--field fp needs --p")
        return parse_field(args.p)
    if args.p is not None and text.upper() == "Q":
        return parse_field(args.p)
    return parse_field(text)


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _header(field) -> dict:
    return {"field": field.to_json(), "basis": list(BASIS_NAMES), "convention": CONVENTION}


def _field_line(field) -> str:
    return f"field: {json.dumps(field.to_json())}   {BANNER}"


def _suite(args, name, rows, field):
    passed = sum(c.ok for c in rows)
    payload = dict(_header(field), suite=name, passed=passed, total=len(rows),
                   checks=[c.to_json() for c in rows])
    lines = [_field_line(field)]
    lines += [f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail and not c.ok else "")
              for c in rows]
    lines.append(f"{name}: {passed}/{len(rows)} passed")
    _emit(args, payload, lines)
    return EXIT_OK if passed == len(rows) else EXIT_FAIL


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from e


def _load_operator(path) -> LinMap:
    try:
        return LinMap.from_json(_read_json(path))
    except (KeyError, ValueError, FieldError) as e:
        raise UsageError(f"{path}: not an operator file ({e})") from e


# -- verbs -------------------------------------------------------------------


def cmd_verify_algebra(args):
    field = _field(args)
    return _suite(args, "verify-algebra", checks.algebra_checks(field, args.seed, args.samples), field)


def cmd_verify_maps(args):
    field = _field(args)
    return _suite(args, "verify-maps", checks.maps_checks(field), field)


def cmd_verify_catalog(args):
    field = _field(args)
    samples = None
    if args.alpha:
        samples = [field.parse(a) for a in args.alpha]
    sources = catalog.SOURCES if args.source == "all" else [catalog.normalize_source(args.source)]
    rows = checks.catalog_checks(field, sources, samples)
    passed = sum(c.ok for c in rows)
    cases = {(s, d.case_no) for s in sources for d in catalog.cases(s)}
    lines = [_field_line(field)]
    lines += [f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if not c.ok else "") for c in rows]
    lines.append(f"{len(cases)} cases, {passed}/{len(rows)} instances verified")
    payload = dict(_header(field), suite="verify-catalog", sources=list(sources), cases=len(cases),
                   passed=passed, total=len(rows), checks=[c.to_json() for c in rows])
    _emit(args, payload, lines)
    return EXIT_OK if passed == len(rows) else EXIT_FAIL


def cmd_check(args):
    status = EXIT_OK
    results = []
    lines = []
    for path in args.files:
        R = _load_operator(path)
        res = check_rb(R)
        entry = {"file": str(path), "field": R.field.to_json(), "rota_baxter": res.ok}
        if res.ok:
            lines.append(f"ok   {path}: {res.describe()}")
        else:
            status = EXIT_FAIL
            i, j = res.witness
            entry["witness"] = {"x": BASIS_NAMES[i], "y": BASIS_NAMES[j],
                                "lhs": res.lhs.to_text(), "rhs": res.rhs.to_text()}
            lines.append(f"FAIL {path}: {res.describe()}")
        results.append(entry)
    _emit(args, {"basis": list(BASIS_NAMES), "convention": CONVENTION, "results": results},
          [BANNER] + lines)
    return status


def cmd_fingerprint(args):
    out, lines = [], [BANNER]
    for path in args.files:
        R = _load_operator(path)
        fp = fingerprint(R)
        out.append({"file": str(path), "field": R.field.to_json(), "fingerprint": list(fp.as_tuple()),
                    "nilpotency": fp.nilpotency()})
        lines.append(f"{path}: {fp.nilpotency()}   {fp}")
    _emit(args, {"basis": list(BASIS_NAMES), "results": out}, lines)
    return EXIT_OK


def cmd_catalog_dump(args):
    field = _field(args)
    source = catalog.normalize_source(args.source)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise UsageError(f"cannot create {out_dir}: {e.strerror}") from e
    values = {"a": field.parse(args.alpha), "b": field.parse(args.beta if args.beta is not None else args.alpha)}
    written, skipped = [], []
    for d in catalog.cases(source):
        spec = catalog.CaseSpec(source, d.case_no, {k: values[k] for k in d.params})
        try:
            R = catalog.build_case(spec, field)
        except catalog.ConstraintViolation as e:
            skipped.append({"case": d.case_no, "reason": str(e)})
            continue
        path = out_dir / f"{source}-case-{d.case_no:02d}.json"
        doc = R.to_json()
        doc["case"] = {"source": source, "case_no": d.case_no,
                       "params": {("alpha" if k == "a" else "beta"): field.fmt(v) for k, v in spec.params.items()}}
        path.write_text(json.dumps(doc, indent=2) + "\n")
        written.append(str(path))
    lines = [_field_line(field)] + [f"wrote {p}" for p in written]
    lines += [f"skipped case ({s['case']}): {s['reason']}" for s in skipped]
    _emit(args, dict(_header(field), written=written, skipped=skipped), lines)
    return EXIT_OK


def _parse_vectors(text, field):
    vecs = []
    for part in filter(None, (s.strip() for s in text.split(";"))):
        if part.count(",") == 7:
            vecs.append(Octo.from_text(part, field))
        else:
            vecs.append(octo(part, field))
    return vecs


def _search_spec(args):
    field = _field(args)
    if not isinstance(field, PrimeField):
        raise UsageError("searches need a prime field (--field fp --p 3)")
    kernel = _parse_vectors(args.kernel, field) if args.kernel else []
    budget = args.budget if args.budget is not None else search.budget_from_env()
    return search.SearchSpec(field, args.image, kernel, args.exact, int(budget))


def cmd_enumerate(args):
    spec = _search_spec(args)
    report = search.classify_run(spec, threads=args.threads, reduce_orbits=args.orbits)
    if args.json:
        print(search.report_json(report))
    else:
        print(search.report_table(report))
    failed = report["novel_fingerprints"] > 0
    if report.get("orbits"):
        failed = failed or any(not o["matched"] and o["novel_fingerprint"] for o in report["orbits"])
    return EXIT_FAIL if failed else EXIT_OK


def cmd_reduce(args):
    store = None
    out, lines = [], [BANNER]
    for path in args.files:
        R = _load_operator(path)
        if not isinstance(R.field, PrimeField):
            raise UsageError(f"{path}: orbit reduction needs a prime field")
        if not check_rb(R):
            lines.append(f"FAIL {path}: not a Rota-Baxter operator")
            out.append({"file": str(path), "rota_baxter": False})
            continue
        if store is None or store.field != R.field:
            store = search.OrbitStore(R.field)
        orb = store.reduce(R)
        out.append({"file": str(path), "field": R.field.to_json(), "orbit_size": orb.size,
                    "canonical": orb.canonical.to_json()["matrix"], "canonical_text": orb.canonical.describe()})
        lines.append(f"{path}: orbit of {orb.size}, canonical {orb.canonical.describe()}")
    _emit(args, {"basis": list(BASIS_NAMES), "convention": CONVENTION, "results": out}, lines)
    return EXIT_FAIL if any(not r.get("rota_baxter", True) for r in out) else EXIT_OK


def cmd_replay_script(args):
    scripts = []
    if args.files:
        inp = _load_operator(args.input) if args.input else None
        for path in args.files:
            obj = _read_json(path)
            if isinstance(obj, list):
                obj = {"steps": obj, "source": Path(path).stem}
            if inp is not None:
                obj = dict(obj, field=inp.field.to_json())
            try:
                s = ReductionScript.from_json(obj)
            except (KeyError, ValueError, TypeError, FieldError) as e:
                raise UsageError(f"{path}: not a script file ({e})") from e
            if inp is not None:
                s.input = inp
            if s.input is None:
                raise UsageError(f"{path}: no input operator (embed one or pass --input)")
            scripts.append(s)
    else:
        scripts = shipped_scripts()
        if args.name:
            scripts = [s for s in scripts if s.source in args.name]
            if not scripts:
                raise UsageError(f"no shipped script named {', '.join(args.name)}")
    if args.dump:
        for s in scripts:
            print(json.dumps(s.to_json(), sort_keys=True))
        return EXIT_OK
    status = EXIT_OK
    rows, lines = [], [BANNER]
    for s in scripts:
        try:
            out = run_script(s)
            ok = s.output is None or out == s.output
            detail = out.describe() if ok else f"got {out.describe()}, expected {s.output.describe()}"
        except ScriptError as e:
            ok, detail = False, str(e)
        if not ok:
            status = EXIT_FAIL
        rows.append({"script": s.source, "field": s.field.to_json(), "ok": ok, "result": detail})
        lines.append(f"{'ok  ' if ok else 'FAIL'} {s.source} [{json.dumps(s.field.to_json())}]: {detail}")
    _emit(args, {"basis": list(BASIS_NAMES), "results": rows}, lines)
    return status


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octorb", description="Rota-Baxter operators on the split octonions.")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)

    def field_opts(sp, default="Q"):
        sp.add_argument("--field", default=default, help="Q, fp (with --p), F5, ...")
        sp.add_argument("--p", type=int, default=None, help="prime for --field fp")

    def common(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    sp = sub.add_parser("verify-algebra", help="algebra laws and subalgebra catalog")
    field_opts(sp)
    sp.add_argument("--samples", type=int, default=200)
    common(sp)
    sp.set_defaults(func=cmd_verify_algebra)

    sp = sub.add_parser("verify-maps", help="automorphism/antiautomorphism claims")
    field_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_verify_maps)

    sp = sub.add_parser("verify-catalog", help="Rota-Baxter check of catalog cases")
    field_opts(sp)
    sp.add_argument("--source", default="all")
    sp.add_argument("--alpha", nargs="*", help="parameter samples (default: all of F_p, or a fixed sample over Q)")
    common(sp)
    sp.set_defaults(func=cmd_verify_catalog)

    sp = sub.add_parser("check", help="Rota-Baxter check of operator files")
    sp.add_argument("files", nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("fingerprint", help="conjugation-invariant fingerprint of operator files")
    sp.add_argument("files", nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_fingerprint)

    sp = sub.add_parser("catalog-dump", help="write one operator file per case")
    field_opts(sp)
    sp.add_argument("--source", default="theorem1")
    sp.add_argument("--alpha", default="1")
    sp.add_argument("--beta", default=None, help="defaults to --alpha")
    sp.add_argument("--out", default=".")
    common(sp)
    sp.set_defaults(func=cmd_catalog_dump)

    sp = sub.add_parser("enumerate", help="exhaustive search and classification over F_p")
    field_opts(sp, default="fp")
    sp.add_argument("--image", required=True, choices=["0", "N1", "I1", "I2", "N2", "N3", "I3", "S4"])
    sp.add_argument("--kernel", help="semicolon-separated vectors, e.g. 'e11;e12;ve12+ve22'")
    sp.add_argument("--exact", action="store_true", help="require the image to equal the subalgebra")
    sp.add_argument("--budget", type=float, default=None, help="candidate budget (env OCTORB_BUDGET)")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--no-orbits", dest="orbits", action="store_false", help="skip orbit reduction")
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("reduce", help="canonical orbit representative of operator files")
    sp.add_argument("files", nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("replay-script", help="replay reduction scripts")
    sp.add_argument("files", nargs="*", help="script JSON files (default: the shipped scripts)")
    sp.add_argument("--input", help="operator file for scripts without an embedded input")
    sp.add_argument("--name", nargs="*", help="shipped script names")
    sp.add_argument("--dump", action="store_true", help="print the scripts as JSON instead of replaying")
    common(sp)
    sp.set_defaults(func=cmd_replay_script)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, FieldError, catalog.CatalogError) as e:
        print(f"octorb: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except search.BudgetExceeded as e:
        print(f"octorb: error: {e} (raise --budget or OCTORB_BUDGET)", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
