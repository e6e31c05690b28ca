"""Exhaustive search for weight-zero Rota-Baxter operators over small F_p.

An operator with image inside ``B`` (basis ``b_1..b_d``) and kernel
containing ``K`` is written ``R = B C S`` where ``S`` reads coordinates on a
fixed complement of ``K`` and ``C`` is a free ``d x f`` coefficient block.
The identity ``R(x)R(y) = R(R(x)y + xR(y))`` is then a family of quadratic
forms in the entries of ``C``; candidates are scanned in numpy chunks and
filtered form by form.  :func:`enumerate_naive` is the independent
per-candidate route used as an oracle.

Orbits are closed under ``R -> phi R phi^-1`` for every catalog map at
every parameter value, plus nonzero scalings.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
import json
import logging
import os

import numpy as np

from .scalar import Field, PrimeField, GF
from .algebra import BASIS_NAMES, DIM, INT_TABLE, Octo, SubalgebraSpec, subalgebra
from .operator import LinMap, check_rb, fingerprint, image, Fingerprint
from . import linalg
from .maps import ALL_PROPS, NONZERO_PARAM, PARAMETERIZED, build_map
from . import catalog

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8
DEFAULT_ORBIT_CAP = 2 * 10 ** 6
_LOW_DIGITS = 13


class BudgetExceeded(RuntimeError):
    pass


class OrbitBudgetExceeded(RuntimeError):
    pass


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("OCTORB_BUDGET")
    return int(float(raw)) if raw else default


@dataclass
class SearchSpec:
    field: PrimeField
    image_in: SubalgebraSpec
    kernel_contains: tuple = ()
    require_image_exact: bool = False
    budget: int | None = None

    def __post_init__(self):
        if not isinstance(self.field, PrimeField):
            raise TypeError("searches run over prime fields only")
        if isinstance(self.image_in, str):
            self.image_in = subalgebra(self.image_in)
        self.kernel_contains = tuple(
            v if isinstance(v, Octo) else Octo(self.field, v) for v in self.kernel_contains)

    @property
    def p(self) -> int:
        return self.field.p

    def layout(self):
        """``(image_basis, complement_reader)`` as integer arrays mod p."""
        f = self.field
        img = np.array([[int(x) for x in v.coords] for v in self.image_in.basis(f)],
                       dtype=np.int64).reshape(-1, DIM)
        kvecs = [v.coords for v in self.kernel_contains]
        krows, kpiv = linalg.rref(kvecs, f) if kvecs else ([], [])
        comp = [c for c in range(DIM) if c not in kpiv]
        cols = [list(r) for r in krows] + [[f.one if i == c else f.zero for i in range(DIM)] for c in comp]
        T = linalg.transpose(cols)
        Tinv = linalg.inverse(T, f)
        S = np.array([[int(x) for x in row] for row in Tinv[len(krows):]], dtype=np.int64).reshape(-1, DIM)
        return img, S

    @property
    def n_vars(self) -> int:
        img, S = self.layout()
        return img.shape[0] * S.shape[0]

    def candidate_count(self) -> int:
        return self.p ** self.n_vars

    def effective_budget(self) -> int:
        return self.budget if self.budget is not None else budget_from_env()

    def check_budget(self):
        n = self.candidate_count()
        b = self.effective_budget()
        if n > b:
            raise BudgetExceeded(f"{n} candidates exceed the budget of {b}")
        return n

    def describe(self) -> dict:
        return {
            "field": self.field.to_json(),
            "image_in": self.image_in.name,
            "image_basis": list(self.image_in.basis_names),
            "kernel_contains": [str(v) for v in self.kernel_contains],
            "require_image_exact": self.require_image_exact,
        }


# ---------------------------------------------------------------------------
# the quadratic system


_TABLE = np.array(INT_TABLE, dtype=np.int64)  # [i][j][k]


def _unit_maps(img, S):
    """``M[u]`` (row-major over C) as 8x8 integer matrices."""
    d, f = img.shape[0], S.shape[0]
    Ms = np.zeros((d * f, DIM, DIM), dtype=np.int64)
    for a in range(d):
        for b in range(f):
            Ms[a * f + b] = np.outer(img[a], S[b])
    return Ms


def quadratic_system(spec: SearchSpec):
    """Rota-Baxter forms as ``(monomials, coefficient rows)`` mod p.

    ``monomials`` is a list of ``(u, v)`` with ``u <= v``; each row holds
    the coefficients of one nonzero, normalized, distinct form, sparsest
    first.
    """
    p = spec.p
    img, S = spec.layout()
    Ms = _unit_maps(img, S)
    n = Ms.shape[0]
    if n == 0:
        return [], np.zeros((0, 0), dtype=np.int64)
    A = Ms.transpose(0, 2, 1)  # A[u, i] = M_u e_i
    t1 = np.einsum("uia,vjb,abk->uvijk", A, A, _TABLE)
    P = np.einsum("via,ajm->vijm", A, _TABLE)  # M_v e_i . e_j
    Qm = np.einsum("vjb,ibm->vijm", A, _TABLE)  # e_i . M_v e_j
    t2 = np.einsum("ukm,vijm->uvijk", Ms, P + Qm)
    H = (t1 - t2) % p
    monos = [(u, v) for u in range(n) for v in range(u, n)]
    cols = []
    for u, v in monos:
        c = H[u, v] if u == v else H[u, v] + H[v, u]
        cols.append(c.reshape(-1) % p)
    E = np.stack(cols, axis=1)
    E = E[np.any(E != 0, axis=1)]
    # normalize each form so its first nonzero coefficient is 1
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    first = E[np.arange(E.shape[0]), np.argmax(E != 0, axis=1)]
    E = (E * inv[first][:, None]) % p
    E = np.unique(E, axis=0)
    order = np.lexsort((np.arange(E.shape[0]), (E != 0).sum(axis=1)))
    return monos, E[order]


class _Filter:
    def __init__(self, spec: SearchSpec):
        self.p = spec.p
        monos, E = quadratic_system(spec)
        self.eqs = []
        for row in E:
            nz = np.nonzero(row)[0]
            us = np.array([monos[k][0] for k in nz], dtype=np.intp)
            vs = np.array([monos[k][1] for k in nz], dtype=np.intp)
            self.eqs.append((us, vs, row[nz].astype(np.int64)))

    def survivors(self, X):
        p = self.p
        for us, vs, coef in self.eqs:
            if X.shape[0] == 0:
                break
            val = ((X[:, us] * X[:, vs]) @ coef) % p
            X = X[val == 0]
        return X


def _digits(count, n, p, dtype=np.int64):
    """All base-p digit vectors of length n, most significant first."""
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, n), dtype=dtype)
    for k in range(n - 1, -1, -1):
        out[:, k] = idx % p
        idx //= p
    return out


def _coeff_blocks(spec: SearchSpec, threads: int = 1):
    """All coefficient vectors passing the quadratic system."""
    p = spec.p
    img, S = spec.layout()
    n = img.shape[0] * S.shape[0]
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    flt = _Filter(spec)
    low = min(n, _LOW_DIGITS)
    high = n - low
    low_table = _digits(p ** low, low, p)

    def chunk(prefix):
        X = np.empty((low_table.shape[0], n), dtype=np.int64)
        X[:, :high] = prefix
        X[:, high:] = low_table
        return flt.survivors(X)

    prefixes = [np.array(t, dtype=np.int64) for t in product(range(p), repeat=high)]
    if threads > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(chunk, prefixes))
    else:
        parts = [chunk(pr) for pr in prefixes]
    return np.concatenate(parts, axis=0) if parts else np.zeros((0, n), dtype=np.int64)


def _operators_from_coeffs(spec: SearchSpec, X):
    """Integer 8x8 matrices ``B^T C S`` (rows = output coordinate)."""
    img, S = spec.layout()
    d, f = img.shape[0], S.shape[0]
    if d == 0:
        return np.zeros((X.shape[0], DIM, DIM), dtype=np.int64)
    C = X.reshape(-1, d, f)
    return np.einsum("ak,nab,bj->nkj", img, C, S) % spec.p


def _to_linmaps(field, mats):
    return [LinMap._raw(field, [[int(x) for x in row] for row in m]) for m in mats]


def _rank_mod_p(m, p):
    return linalg.rank([[int(x) for x in row] for row in m], GF(p))


def _encode(mats):
    """Column-scan encodings as a sortable void array."""
    e = np.ascontiguousarray(mats.transpose(0, 2, 1).reshape(-1, DIM * DIM).astype(np.uint8))
    return e.view(f"V{DIM * DIM}").ravel()


def _decode(codes):
    e = codes.view(np.uint8).reshape(-1, DIM, DIM).astype(np.int64)
    return e.transpose(0, 2, 1)


def enumerate_rb_arrays(spec: SearchSpec, threads: int = 1):
    spec.check_budget()
    X = _coeff_blocks(spec, threads)
    if spec.require_image_exact:
        d = spec.image_in.dim
        C = X.reshape(-1, d, X.shape[1] // d if d else 0)
        keep = [_rank_mod_p(c, spec.p) == d for c in C]
        X = X[np.array(keep, dtype=bool)] if len(keep) else X
    mats = _operators_from_coeffs(spec, X)
    codes = np.unique(_encode(mats))  # sorted: deterministic order
    return _decode(codes)


def enumerate_rb(spec: SearchSpec, threads: int = 1):
    """Every RB operator allowed by ``spec``, sorted by encoding."""
    return _to_linmaps(spec.field, enumerate_rb_arrays(spec, threads))


def enumerate_naive(spec: SearchSpec):
    """Per-candidate route through :func:`check_rb`; slow, used as an oracle."""
    spec.check_budget()
    f = spec.field
    B = spec.image_in.basis(f)
    kernel = spec.kernel_contains
    # free coordinates: build R column by column from images of basis elements
    # and keep candidates killing the kernel vectors
    d = len(B)
    found = []
    for coeffs in product(range(spec.p), repeat=d * DIM):
        cols = []
        for j in range(DIM):
            v = Octo.zero(f)
            for a in range(d):
                c = coeffs[a * DIM + j]
                if c:
                    v = v + B[a].scale(c)
            cols.append(v)
        R = LinMap.from_columns(f, cols)
        if any(not R(k).is_zero() for k in kernel):
            continue
        if spec.require_image_exact and image(R).dim != d:
            continue
        if check_rb(R):
            found.append(R)
    return sorted(set(found), key=LinMap.encoding)


# ---------------------------------------------------------------------------
# orbits


def generator_maps(field: PrimeField):
    """``(label, phi)`` for every catalog map at every parameter value."""
    out = []
    for prop in ALL_PROPS:
        if prop in PARAMETERIZED:
            for a in field.elements():
                if a == 0 and prop in NONZERO_PARAM:
                    continue
                out.append((f"Prop {prop}(alpha={field.fmt(a)})", build_map(prop, a, field)))
        else:
            out.append((f"Prop {prop}" if prop != "classical" else "classical involution",
                        build_map(prop, None, field)))
    return out


def _cyclic_generator(maps: dict, order_bound: int):
    """A member of ``maps`` whose powers contain every member, else ``None``."""
    targets = set(maps.values())
    for a, M in maps.items():
        powers, X = set(), M
        for _ in range(order_bound):
            powers.add(X)
            X = X @ M
        if targets <= powers:
            return a
    return None


def generating_maps(field: PrimeField):
    """A subset of :func:`generator_maps` generating the same group.

    A parameter family is replaced by one member only when every other member
    is verified to be a power of it; other families are kept whole.
    """
    full = generator_maps(field)
    families: dict = {}
    for label, phi in full:
        families.setdefault(label.split("(")[0], []).append((label, phi))
    out = []
    for name, members in families.items():
        if len(members) == 1:
            out += members
            continue
        maps = {label: phi for label, phi in members}
        g = _cyclic_generator(maps, 2 * field.p)
        out += [(g, maps[g])] if g is not None else members
    return out


class _Codec:
    """Order-preserving packing of column-scan encodings into bytes."""

    def __init__(self, p: int):
        self.p = p
        self.k = 1
        while p ** (self.k + 1) <= 256:
            self.k += 1
        self.width = -(-DIM * DIM // self.k)
        pad = self.width * self.k - DIM * DIM
        self.pad = pad
        self.weights = np.array([p ** (self.k - 1 - i) for i in range(self.k)], dtype=np.int64)

    def pack_em(self, E):
        """Pack an entries-major ``(64, n)`` digit array."""
        n = E.shape[1]
        E = E.astype(np.int32)
        if self.pad:
            E = np.concatenate([E, np.zeros((self.pad, n), dtype=np.int32)], axis=0)
        E = E.reshape(self.width, self.k, n)
        packed = np.zeros((self.width, n), dtype=np.int32)
        for t in range(self.k):
            packed += E[:, t] * int(self.weights[t])
        packed = np.ascontiguousarray(packed.astype(np.uint8).T)
        return packed.view(f"V{self.width}").ravel()

    def unpack_em(self, codes):
        b = codes.view(np.uint8).reshape(-1, self.width).T.astype(np.int16)
        digits = np.empty((self.width, self.k, b.shape[1]), dtype=np.int16)
        for t in range(self.k):
            digits[:, t] = (b // int(self.weights[t])) % self.p
        return digits.reshape(self.width * self.k, -1)[:DIM * DIM]


@dataclass
class Orbit:
    oid: int
    canonical: LinMap
    members: np.ndarray  # sorted packed codes, one per scaling class
    store: "OrbitStore" = dc_field(repr=False)

    @property
    def size(self) -> int:
        """Number of operators in the orbit, scalings included."""
        n = int(self.members.shape[0])
        return n if self.canonical.is_zero() else n * (self.store.field.p - 1)

    def __contains__(self, R: LinMap) -> bool:
        code = self.store._code(R)
        i = int(np.searchsorted(self.members, code))
        return i < self.members.shape[0] and self.members[i] == code

    def representatives(self):
        """Scale-normalized members as LinMaps."""
        E = self.store.codec.unpack_em(self.members)
        return _to_linmaps(self.store.field, E.reshape(DIM, DIM, -1).transpose(2, 1, 0))


def _combine(X, terms, axis):
    """``sum c * X[i]`` along ``axis`` (0 or 1) for sparse ``terms``."""
    take = (lambda i: X[i]) if axis == 0 else (lambda i: X[:, i])
    (i0, c0), rest = terms[0], terms[1:]
    acc = take(i0) if c0 == 1 else c0 * take(i0)
    if not rest:
        return acc
    acc = acc.copy() if c0 == 1 else acc
    for i, c in rest:
        acc += take(i) if c == 1 else c * take(i)
    return acc


class OrbitStore:
    """Memoized orbits over one prime field.

    ``full_generators`` applies every catalog map at every parameter value;
    the default uses a verified generating subset of the same group, so the
    orbits are identical.  Nonzero scalings commute with every map, so each
    orbit is stored as scale-normalized representatives (first nonzero entry
    of the encoding equal to 1); the least encoding is always one of them.
    """

    def __init__(self, field: PrimeField, cap: int = DEFAULT_ORBIT_CAP,
                 full_generators: bool = False):
        self.field = field
        self.cap = cap
        gens = generator_maps(field) if full_generators else generating_maps(field)
        self.labels = [g[0] for g in gens]
        p = field.p
        self.codec = _Codec(p)
        # act on transposed matrices: (g R g^-1)^T = g^-T R^T g^T, stored sparse
        self._sparse = []
        for _, g in gens:
            left = linalg.transpose(g.inverse().m)
            right = linalg.transpose(g.m)
            lrows = [[(i, int(c)) for i, c in enumerate(row) if c] for row in left]
            rcols = [[(j, int(right[j][b])) for j in range(DIM) if right[j][b]] for b in range(DIM)]
            self._sparse.append((lrows, rcols))
        # scalings commute with conjugation, so members are stored scale-normalized
        self._inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int16)
        self.orbits: list[Orbit] = []
        self.canonical: dict = {}

    def _code(self, R: LinMap):
        E = self._normalize(np.array(R.m, dtype=np.int16).T.reshape(DIM * DIM, 1))
        return self.codec.pack_em(E)[0]

    def find(self, R: LinMap):
        for orb in self.orbits:
            if R in orb:
                return orb
        return None

    def _images(self, T):
        """All generator images of a batch; ``T`` is ``(8, 8, n)`` transposed, entries-major."""
        p = self.field.p
        out = []
        for lrows, rcols in self._sparse:
            # entries stay below 8 * 6 * 6 * 8 < 2^15 for p <= 7, so one final reduction
            Y = np.stack([_combine(T, terms, 0) for terms in lrows])
            Z = np.stack([_combine(Y, terms, 1) for terms in rcols], axis=1)
            out.append(Z % p)
        return np.concatenate(out, axis=2)

    def _normalize(self, E):
        """Scale each column of an entries-major ``(64, n)`` array so its first nonzero entry is 1."""
        n = E.shape[1]
        first = E[np.argmax(E != 0, axis=0), np.arange(n)]
        idx = np.nonzero(first > 1)[0]
        if idx.size:
            E[:, idx] = (E[:, idx] * self._inv[first[idx]]) % self.field.p
        return E

    def _closure(self, R: LinMap):
        start = self._normalize(np.array(R.m, dtype=np.int16).T.reshape(DIM * DIM, 1))
        seen = self.codec.pack_em(start)
        frontier = start.reshape(DIM, DIM, 1)
        while frontier.shape[2]:
            imgs = self._normalize(self._images(frontier).reshape(DIM * DIM, -1))
            codes = np.unique(self.codec.pack_em(imgs))
            pos = np.minimum(np.searchsorted(seen, codes), seen.shape[0] - 1)
            new = codes[seen[pos] != codes]
            if new.shape[0] == 0:
                break
            seen = np.sort(np.concatenate([seen, new]))
            if seen.shape[0] > self.cap:
                raise OrbitBudgetExceeded(f"orbit exceeded {self.cap} elements")
            frontier = self.codec.unpack_em(new).reshape(DIM, DIM, -1)
        return seen

    def reduce(self, R: LinMap) -> Orbit:
        if R.field != self.field:
            raise ValueError("operator field differs from the store field")
        orb = self.find(R)
        if orb is not None:
            return orb
        members = self._closure(R)
        canon = self.codec.unpack_em(members[:1]).reshape(DIM, DIM).T
        canon_map = LinMap._raw(self.field, [[int(x) for x in row] for row in canon])
        orb = Orbit(len(self.orbits), canon_map, members, self)
        self.orbits.append(orb)
        self.canonical[canon_map.encoding()] = orb.oid
        return orb


def orbit_reduce(R: LinMap, store: OrbitStore | None = None) -> LinMap:
    """Lexicographically least encoding in the orbit of ``R``."""
    if store is None:
        store = OrbitStore(R.field)
    return store.reduce(R).canonical


# ---------------------------------------------------------------------------
# classification reports


def catalog_instances(field: PrimeField, sources=catalog.LEMMAS + ("prop18",)):
    return catalog.enumerate_catalog(field, list(field.elements()), sources)


def catalog_fingerprints(field: PrimeField, sources) -> dict:
    """``fingerprint tuple -> sorted case labels`` over a full parameter sweep."""
    out: dict = {}
    for spec, R in catalog.enumerate_catalog(field, list(field.elements()), sources):
        out.setdefault(fingerprint(R).as_tuple(), set()).add(f"{spec.source}({spec.case_no})")
    return {k: sorted(v) for k, v in out.items()}


IMAGE_SOURCES = {name: catalog.source_for_image(name)
                 for name in ("N1", "I1", "I2", "N2", "N3", "I3", "S4")}


def reference_sources(image_name: str, exact: bool):
    """Lemma families whose images can sit inside ``image_name``."""
    if image_name == "0":
        return ()
    if exact:
        return (IMAGE_SOURCES[image_name],)
    dim = subalgebra(image_name).dim
    return tuple(src for name, src in IMAGE_SOURCES.items() if subalgebra(name).dim <= dim)


_ZERO_FP = (0, 0, 0, 0, 0, False)


def fingerprint_table(ops):
    counts = Counter(fingerprint(R).as_tuple() for R in ops)
    return dict(sorted(counts.items()))


def classify_run(spec: SearchSpec, threads: int = 1, reduce_orbits: bool = True,
                 store: OrbitStore | None = None) -> dict:
    candidates = spec.check_budget()
    ops = enumerate_rb(spec, threads)
    fps = fingerprint_table(ops)
    sources = reference_sources(spec.image_in.name, spec.require_image_exact)
    allowed = catalog_fingerprints(spec.field, sources) if sources else {}
    fp_rows = []
    for fp, count in fps.items():
        known = fp in allowed or fp == _ZERO_FP
        fp_rows.append({
            "fingerprint": list(fp),
            "nilpotency": Fingerprint(*fp).nilpotency(),
            "count": count,
            "catalog_cases": allowed.get(fp, ["zero operator"] if fp == _ZERO_FP else []),
            "novel": not known,
        })
    report = {
        "basis": list(BASIS_NAMES),
        "convention": "columns-are-images",
        "spec": spec.describe(),
        "candidates": candidates,
        "rb_count": len(ops),
        "reference_sources": list(sources),
        "fingerprints": fp_rows,
        "novel_fingerprints": sum(1 for r in fp_rows if r["novel"]),
    }
    if not reduce_orbits:
        report["orbits"] = None
        return report
    store = store or OrbitStore(spec.field)
    instances = catalog_instances(spec.field, sources) if sources else []
    by_orbit: dict = {}
    for R in ops:
        if R.is_zero():
            continue
        orb = store.reduce(R)
        by_orbit.setdefault(orb.oid, [orb, 0])[1] += 1
    orbit_rows = []
    for oid, (orb, hits) in sorted(by_orbit.items(), key=lambda kv: kv[1][0].canonical.encoding()):
        cases = sorted({f"{s.source}({s.case_no})" for s, M in instances if M in orb})
        fp = fingerprint(orb.canonical).as_tuple()
        orbit_rows.append({
            "canonical": orb.canonical.describe(),
            "orbit_size": orb.size,
            "found": hits,
            "fingerprint": list(fp),
            "catalog_cases": cases,
            "matched": bool(cases),
            "novel_fingerprint": fp not in allowed,
        })
    report["orbits"] = orbit_rows
    report["orbit_count"] = len(orbit_rows)
    report["unmatched"] = [r["canonical"] for r in orbit_rows if not r["matched"]]
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def report_table(report: dict) -> str:
    s = report["spec"]
    lines = [
        f"field: {json.dumps(s['field'])}   basis: {' '.join(report['basis'])}",
        f"image {'=' if s['require_image_exact'] else 'inside'} {s['image_in']} "
        f"[{', '.join(s['image_basis'])}]"
        + (f"   kernel contains: {', '.join(s['kernel_contains'])}" if s["kernel_contains"] else ""),
        f"candidates: {report['candidates']}   RB operators: {report['rb_count']}",
        "",
        f"{'d1':>3} {'d2':>3} {'d3':>3} {'k':>3} {'sq':>3} {'unit':>5} {'count':>8}  catalog",
    ]
    for r in report["fingerprints"]:
        d1, d2, d3, k, sq, un = r["fingerprint"]
        tag = "NOVEL" if r["novel"] else ", ".join(r["catalog_cases"][:6])
        lines.append(f"{d1:>3} {d2:>3} {d3:>3} {k:>3} {sq:>3} {str(un):>5} {r['count']:>8}  {tag}")
    if report.get("orbits") is not None:
        lines += ["", f"orbits: {report['orbit_count']}   unmatched: {len(report['unmatched'])}"]
        for o in report["orbits"]:
            mark = ", ".join(o["catalog_cases"]) if o["matched"] else "UNMATCHED"
            lines.append(f"  [{o['orbit_size']:>7}] found {o['found']:>5}  {o['canonical']}  -> {mark}")
    return "\n".join(lines)


__all__ = [
    "DEFAULT_BUDGET", "BudgetExceeded", "OrbitBudgetExceeded", "budget_from_env",
    "SearchSpec", "quadratic_system", "enumerate_rb", "enumerate_rb_arrays",
    "enumerate_naive", "generator_maps", "generating_maps", "Orbit", "OrbitStore", "orbit_reduce",
    "catalog_instances", "catalog_fingerprints", "reference_sources",
    "fingerprint_table", "classify_run", "report_json", "report_table",
]
