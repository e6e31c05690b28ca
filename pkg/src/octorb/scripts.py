"""Shipped reduction scripts: proof-step conjugation chains with fixed inputs.

Each script carries a concrete input operator (the proof's free scalars
instantiated), its steps, and the operator the chain must land on.
"""

from __future__ import annotations

from .scalar import Field, GF, Q
from .catalog import CASES
from .maps import CLASSICAL, ReductionScript, Step
from .operator import LinMap


def _op(images, field, **params):
    return LinMap.from_images(images, field, **params)


def _case(source, no, field, **params):
    return _op(dict(CASES[(source, no)].images), field, **params)


def _script(source, field, inp, steps, out, note=""):
    return ReductionScript(source, steps, field, inp, out, note)


def rational_scripts():
    f = Q
    h = f.parse
    return [
        _script(
            "lemma1-final-merge", f,
            _op({"ve22": "e12", "e21": "2*e12"}, f),
            [Step(6, h("1/2")), Step(scale=2), Step(15, 1)],
            _case("lemma1", 2, f),
            "alpha_3 = 2",
        ),
        _script(
            "lemma2-ending-prop13", f,
            _op({"e21": "e11", "ve11": "e11"}, f),
            [Step(13, 1)],
            _case("lemma2", 1, f),
        ),
        _script(
            "lemma2-ending-involutions", f,
            _op({"ve11": "e11"}, f),
            [Step(5), Step(CLASSICAL), Step(scale=-1)],
            _case("lemma2", 1, f),
            "classical involution after Prop 5, then a sign",
        ),
        _script(
            "lemma3-case-3a", f,
            _op({"e21": "e11", "ve21": "3*e12"}, f),
            [Step(6, h("1/3")), Step(scale=3)],
            _case("lemma3", 3, f),
            "beta_4 = 3",
        ),
        _script(
            "lemma3-case-3c", f,
            _op({"e21": "e11", "ve11": "2*e11", "ve21": "3*e12"}, f),
            [Step(6, h("1/3")), Step(scale=3), Step(14, h("1/6"))],
            _case("lemma3", 4, f, a=6),
            "alpha_2 = 2, beta_4 = 3; the last step needs 1/epsilon",
        ),
        _script(
            "lemma3-case-4b", f,
            _op({"e21": "e12", "ve11": "2*e12", "ve21": "2*e11 + 5*e12"}, f),
            [Step(6, 2), Step(scale=h("1/4")), Step(14, 1), Step(16, h("-5/2"))],
            _case("lemma3", 5, f),
            "beta_1 = 2, beta_3 = 5",
        ),
        _script(
            "lemma4-case-1aaaa", f,
            _op({"e21": "ve12", "ve11": "ve12", "ve21": "2*ve22 + 3*ve12"}, f),
            [Step(6, h("1/3")), Step(8, 3), Step(scale=27), Step(9, 1), Step(13, 1),
             Step(8, 2), Step(scale=2)],
            _case("lemma4", 2, f),
            "mu_1 = 2, nu_1 = 3",
        ),
        _script(
            "lemma5-case-1aca", f,
            _op({"e21": "2*e12", "ve11": "ve12", "ve21": "ve22 + e12"}, f),
            [Step(8, h("1/4")), Step(7, 2), Step(scale=h("1/8"))],
            _case("lemma5", 3, f),
            "gamma_2' = 2",
        ),
        _script(
            "corollary1-case-4", f,
            _case("lemma3", 4, f, a=4),
            [Step(7, 2), Step(scale=h("1/2"))],
            _case("corollary1", 4, f),
            "alpha = 4, square root 2",
        ),
        _script(
            "corollary1-case-6", f,
            _case("lemma3", 6, f, a=4),
            [Step(7, 2), Step(scale=h("1/4"))],
            _case("corollary1", 6, f),
            "alpha = 4, square root 2",
        ),
    ]


def quadratic_scripts(p: int = 7, alpha: int = 2):
    """Square-root reductions over F_p at a residue ``alpha``."""
    f = GF(p)
    a = f.elem(alpha)
    r = f.sqrt(a)
    if r is None:
        raise ValueError(f"{alpha} is not a square mod {p}")
    ir, ia = f.inv(r), f.inv(a)
    tag = f"-f{p}"
    return [
        _script("corollary1-case-4" + tag, f, _case("lemma3", 4, f, a=a),
                [Step(7, r), Step(scale=ir)], _case("corollary1", 4, f)),
        _script("corollary1-case-6" + tag, f, _case("lemma3", 6, f, a=a),
                [Step(7, r), Step(scale=ia)], _case("corollary1", 6, f)),
        _script("corollary2-case-6" + tag, f, _case("lemma4", 6, f, a=a),
                [Step(6, ir), Step(17, -1), Step(16, f.parse("-1/2"))],
                _case("corollary2", 4, f, a=-1)),
        _script("corollary3-case-1" + tag, f, _case("lemma5", 1, f, a=a),
                [Step(8, ir), Step(scale=ia)], _case("corollary3", 1, f)),
        _script("corollary3-case-2" + tag, f, _case("lemma5", 2, f, a=a),
                [Step(8, ir), Step(scale=ia)], _case("corollary3", 2, f)),
        _script("corollary4-case-2" + tag, f, _case("lemma6", 2, f, a=a, b=2),
                [Step(7, ir), Step(scale=ir)], _case("corollary4", 2, f, a=2)),
        _script("corollary5-case-3" + tag, f, _case("lemma7", 3, f, a=a),
                [Step(7, ir)], _case("corollary5", 3, f)),
        _script("corollary5-case-5" + tag, f, _case("lemma7", 5, f, a=a),
                [Step(7, ir)], _case("corollary5", 5, f)),
    ]


def shipped_scripts():
    return rational_scripts() + quadratic_scripts()


def script_by_name(name: str) -> ReductionScript:
    for s in shipped_scripts():
        if s.source == name:
            return s
    raise KeyError(name)


__all__ = ["rational_scripts", "quadratic_scripts", "shipped_scripts", "script_by_name"]
