"""JSON reports with self-contained, replayable certificates.

Every report embeds the literals of its inputs, so :func:`verify_report`
needs nothing but the report itself.  Serialization is deterministic apart
from the ``timing`` field.
"""

from __future__ import annotations

import json
from typing import Sequence

from .cyclo import CycloNum, prime_support
from .decide import (Amenable, CoefficientNotRootOfUnity, Inconclusive, NonMonomialCoefficient, NotAmenable,
                     RatioNotRootOfUnity, Witness, verify_verdict)
from .explorer import compare_words
from .literals import parse_cyclo, parse_series, render_cyclo
from .monomial import Monomial, evaluate_word, indecomposables, phi
from .series import Comparison, Series, compose, equals

__all__ = ["SCHEMA_VERSION", "make_report", "dumps", "verdict_to_dict", "verdict_from_dict", "verify_report"]

SCHEMA_VERSION = "1.0"


def _lit(s) -> str:
    if isinstance(s, Monomial):
        s = s.to_series()
    if isinstance(s, CycloNum):
        return render_cyclo(s)
    return str(s)


def _status(c: Comparison) -> str:
    return str(c)


def _parse_status(text: str) -> Comparison:
    if text == "EqualExact":
        return Comparison("exact")
    name, _, rest = text.partition("(")
    idx = int(rest.rstrip(")"))
    return Comparison("precision" if name == "EqualToPrecision" else "unequal", idx)


def make_report(command: str, config: dict, inputs: dict, result: dict, seconds: float | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config,
        "inputs": inputs,
        "result": result,
        "timing": {"seconds": None if seconds is None else round(seconds, 6)},
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


# -- decide ---------------------------------------------------------------------------

def _cert_to_dict(cert) -> dict:
    if isinstance(cert, NonMonomialCoefficient):
        return {"type": "NonMonomialCoefficient", "index": cert.index, "position": cert.position,
                "value": _lit(cert.value)}
    if isinstance(cert, RatioNotRootOfUnity):
        return {"type": "RatioNotRootOfUnity", "pair": list(cert.pair), "value": _lit(cert.value)}
    if isinstance(cert, CoefficientNotRootOfUnity):
        return {"type": "CoefficientNotRootOfUnity", "index": cert.index, "value": _lit(cert.value)}
    raise TypeError(cert)


def _cert_from_dict(d: dict):
    t = d["type"]
    if t == "NonMonomialCoefficient":
        return NonMonomialCoefficient(d["index"], d["position"], parse_cyclo(d["value"]))
    if t == "RatioNotRootOfUnity":
        return RatioNotRootOfUnity(tuple(d["pair"]), parse_cyclo(d["value"]))
    if t == "CoefficientNotRootOfUnity":
        return CoefficientNotRootOfUnity(d["index"], parse_cyclo(d["value"]))
    raise ValueError(f"unknown certificate type {t!r}")


def verdict_to_dict(v) -> dict:
    if isinstance(v, Amenable):
        return {
            "verdict": "Amenable",
            "beta": _lit(v.beta),
            "monomial_forms": [_lit(f) for f in v.monomial_forms],
            "witness": {"words": [list(w) for w in v.witness.words], "status": _status(v.witness.status)},
            "caveat": v.caveat,
        }
    if isinstance(v, NotAmenable):
        return {
            "verdict": "NotAmenable",
            "beta": _lit(v.beta),
            "monomial_forms": [_lit(f) for f in v.monomial_forms],
            "certificate": _cert_to_dict(v.certificate),
        }
    if isinstance(v, Inconclusive):
        return {"verdict": "Inconclusive", "reason": v.reason, "suggested_precision": v.suggested_precision,
                "suggested_depth": v.suggested_depth}
    raise TypeError(v)


def verdict_from_dict(d: dict):
    kind = d["verdict"]
    if kind == "Amenable":
        w = d["witness"]
        return Amenable(parse_series(d["beta"]), tuple(Monomial.from_series(parse_series(f)) for f in d["monomial_forms"]),
                        Witness(tuple(tuple(x) for x in w["words"]), _parse_status(w["status"])), d.get("caveat"))
    if kind == "NotAmenable":
        return NotAmenable(_cert_from_dict(d["certificate"]), parse_series(d["beta"]),
                           tuple(Monomial.from_series(parse_series(f)) for f in d.get("monomial_forms", [])))
    if kind == "Inconclusive":
        return Inconclusive(d["reason"], d["suggested_precision"], d["suggested_depth"])
    raise ValueError(f"unknown verdict {kind!r}")


def decide_report(gens: Sequence[Series], verdict, N: int, L: int, seconds=None) -> dict:
    return make_report("decide", {"precision": N, "depth": L}, {"generators": [_lit(g) for g in gens]},
                       verdict_to_dict(verdict), seconds)


# -- other commands ---------------------------------------------------------------------

def normalize_report(A: Series, norm, N: int, bottcher_beta=None, branch_list=None, seconds=None) -> dict:
    lhs = compose(A, norm.beta)
    rhs = compose(norm.beta, norm.normal_form())
    result = {
        "beta": _lit(norm.beta),
        "normal_form": _lit(norm.normal_form()),
        "source_order": norm.source_order,
        "functional_equation": _status(equals(lhs, rhs)),
    }
    if bottcher_beta is not None:
        result["bottcher"] = _lit(bottcher_beta)
        result["branches"] = [str(b) for b in branch_list]
    return make_report("normalize", {"precision": N}, {"series": _lit(A)}, result, seconds)


def witness_report(F1: Monomial, F2: Monomial, w, seconds=None) -> dict:
    result = {"found": w is not None}
    if w is not None:
        result.update({"x": list(w.x), "y": list(w.y), "value": _lit(w.value), "j1": w.j1, "j2": w.j2,
                       "via_swapped_products": w.swapped_pair})
    return make_report("witness", {}, {"F1": _lit(F1), "F2": _lit(F2)}, result, seconds)


def quotient_report(q, seconds=None) -> dict:
    classes = [{"image": _lit(m), "members": members} for m, members in q.classes().items()]
    result = {"P2": sorted(q.P2), "classes": classes, "image_generators": [_lit(g) for g in q.image]}
    return make_report("quotient", {}, {"generators": [_lit(g) for g in q.source]}, result, seconds)


def indecomposable_report(U_gens, N_gens, bound, elements, seconds=None) -> dict:
    return make_report("indecomposable", {"bound": bound},
                       {"units": [_lit(CycloNum.coerce(u)) for u in U_gens], "degrees": list(N_gens)},
                       {"elements": [_lit(e) for e in elements], "count": len(elements)}, seconds)


def explore_report(gens, table, relations, evidence, N, L, seconds=None) -> dict:
    result = {
        "words": len(table.listing),
        "distinct_values": len(table.entries),
        "collisions": [{"words": [list(a), list(b)], "status": _status(st)} for (a, b), st in relations],
        "free_pair_evidence": evidence,
    }
    return make_report("explore", {"precision": N, "depth": L}, {"generators": [_lit(g) for g in gens]},
                       result, seconds)


# -- verification -----------------------------------------------------------------------

def verify_report(report: dict) -> tuple[bool, str]:
    """Re-check every certificate in ``report``; returns ``(ok, message)``."""
    if report.get("schema_version") != SCHEMA_VERSION:
        return False, f"unsupported schema version {report.get('schema_version')!r}"
    cmd = report["command"]
    inputs, result = report["inputs"], report["result"]
    try:
        if cmd == "decide":
            gens = [parse_series(t, semigroup=True) for t in inputs["generators"]]
            ok = verify_verdict(verdict_from_dict(result), gens)
            return ok, "decide certificate " + ("replayed" if ok else "FAILED")
        if cmd == "normalize":
            A = parse_series(inputs["series"], semigroup=True)
            beta = parse_series(result["beta"])
            form = parse_series(result["normal_form"])
            c, n = A.leading()
            if form != Series.monomial(c, n) or beta.coeffs.get(1) != CycloNum.rational(1):
                return False, "normal form does not match the leading term"
            st = equals(compose(A, beta), compose(beta, form))
            if not st or str(st) != result["functional_equation"]:
                return False, f"functional equation {st}"
            if "bottcher" in result:
                b = parse_series(result["bottcher"])
                if not equals(compose(A, b), compose(b, Series.monomial(1, n))):
                    return False, "Boettcher equation fails"
                roots = [parse_cyclo(r) for r in result["branches"]]
                if len(roots) != n - 1 or any(r ** (n - 1) != CycloNum.rational(1) for r in roots):
                    return False, "branch list incorrect"
                if len(set(roots)) != n - 1:
                    return False, "branch list has repeats"
            return True, f"normalizer verified ({st})"
        if cmd == "witness":
            F1 = Monomial.from_series(parse_series(inputs["F1"]))
            F2 = Monomial.from_series(parse_series(inputs["F2"]))
            if not result["found"]:
                return not (F1.in_zu() and F2.in_zu()), "no witness recorded"
            pair = (F1, F2)
            x, y = tuple(result["x"]), tuple(result["y"])
            lhs, rhs = evaluate_word(x + (1,), pair), evaluate_word(y + (2,), pair)
            ok = lhs == rhs and _lit(lhs) == result["value"]
            return ok, "X o F1 = Y o F2 " + ("holds" if ok else "FAILS")
        if cmd == "quotient":
            gens = [Monomial.from_series(parse_series(t)) for t in inputs["generators"]]
            P2 = frozenset(result["P2"])
            expected = frozenset().union(*(prime_support(g.degree) for g in gens))
            if P2 != expected:
                return False, "P2 mismatch"
            for cls in result["classes"]:
                img = Monomial.from_series(parse_series(cls["image"]))
                if any(phi(gens[i - 1], P2) != img for i in cls["members"]):
                    return False, "class map mismatch"
            return True, "quotient classes recomputed"
        if cmd == "indecomposable":
            units = [parse_cyclo(u) for u in inputs["units"]]
            elements = indecomposables(units, inputs["degrees"], report["config"]["bound"])
            ok = [_lit(e) for e in elements] == result["elements"]
            return ok, "indecomposables " + ("recomputed" if ok else "DIFFER")
        if cmd == "explore":
            gens = [parse_series(t, semigroup=True) for t in inputs["generators"]]
            N = report["config"]["precision"]
            for c in result["collisions"]:
                a, b = (tuple(w) for w in c["words"])
                st = compare_words(a, b, gens, N)
                if not st or str(st) != c["status"]:
                    return False, f"collision {a} = {b} not reproduced ({st})"
            for ev in result["free_pair_evidence"]:
                if ev["result"] == "RelationFound":
                    pair = [gens[ev["pair"][0] - 1], gens[ev["pair"][1] - 1]]
                    a, b = (tuple(w) for w in ev["words"])
                    if not compare_words(a, b, pair, N):
                        return False, f"relation for pair {ev['pair']} not reproduced"
            return True, "collisions reproduced"
    except Exception as exc:  # malformed reports fail verification rather than crash
        return False, f"{type(exc).__name__}: {exc}"
    return False, f"unknown command {cmd!r}"
