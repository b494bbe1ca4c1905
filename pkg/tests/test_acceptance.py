"""Acceptance criteria, one test and one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from functools import lru_cache
from math import gcd

from conftest import ACCEPTANCE_LINES
from corpus import random_cyclo, random_polynomial, semigroup_corpus

from powsemi import (Amenable, CycloNum, Monomial, MonomialSemigroup, NonMonomialCoefficient, NotAmenable,
                     RatioNotRootOfUnity, RootOfUnity, Series, bottcher, check_condition_4, comp_inverse, compose,
                     congruent, conjugate, decide, equals, indecomposables, mono_compose, monomial_normalizer,
                     parse_series, phi, profile, quotient, reversibility_witness, root_of_unity_order)
from powsemi import report as rep
from powsemi.cyclo import lcm
from powsemi.monomial import evaluate_word

P = parse_series
N, L = 16, 6


def record(number: int, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


# -- criterion 1 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_1():
    reports, problems, slowest = [], [], 0.0

    def timed(texts):
        nonlocal slowest
        gens = [P(t) for t in texts]
        t0 = time.perf_counter()
        v = decide(gens, N, L)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if dt >= 5:
            problems.append(f"{texts} took {dt:.2f}s")
        reports.append(rep.decide_report(gens, v, N, L, dt))
        return gens, v

    _, v = timed(["z^2", "zeta(5)*z^3"])
    if not (isinstance(v, Amenable) and v.witness.status.status == "exact"):
        problems.append(f"<z^2, zeta5 z^3>: {v}")

    _, v = timed(["z^2", "z^2 + z^3"])
    if not (isinstance(v, NotAmenable) and isinstance(v.certificate, NonMonomialCoefficient)
            and (v.certificate.index, v.certificate.position) == (2, 3)):
        problems.append(f"<z^2, z^2+z^3>: {v}")

    g, v = timed(["2*z^2"])
    b = bottcher(g[0], N)
    if not (isinstance(v, Amenable) and conjugate(g[0], b, N) == P("z^2")):
        problems.append(f"<2z^2>: {v}")

    g, v = timed(["2*z^2", "2*z^3"])
    cross = conjugate(g[1], bottcher(g[0], N), N)
    if not (isinstance(v, NotAmenable) and v.certificate == RatioNotRootOfUnity((1, 2), CycloNum.rational(2))
            and cross == P("(1/2)*z^3") and root_of_unity_order(cross[3]) is None):
        problems.append(f"<2z^2, 2z^3>: {v}, cross-check {cross}")
    return problems, reports, slowest


def test_criterion_1_decision_regressions():
    problems, _, slowest = criterion_1()
    assert record(1, not problems, f"4 regressions, slowest {slowest:.3f}s (< 5s)"
                  + (f"; {problems}" if problems else "")), problems


# -- criterion 2 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_2():
    corpus = semigroup_corpus()
    reports, disagreements, witnessed = [], [], 0
    for gens in corpus:
        depth = 6 if len(gens) <= 2 else 4
        v = decide(gens, N, L)
        reports.append(rep.decide_report(gens, v, N, L))
        w = check_condition_4(gens, depth, N)
        if w is not None:
            witnessed += 1
            if not isinstance(v, Amenable):
                disagreements.append(([str(g) for g in gens], v.kind))
    return len(corpus), witnessed, disagreements, reports


def test_criterion_2_condition_4_agreement():
    size, witnessed, disagreements, _ = criterion_2()
    ok = size >= 200 and not disagreements
    assert record(2, ok, f"{size} semigroups, {witnessed} with a BFS witness, {len(disagreements)} disagreements"), \
        disagreements


# -- criterion 3 --------------------------------------------------------------------

def zu_monomials(max_order=12, max_degree=5):
    roots = [RootOfUnity(t, j) for t in range(1, max_order + 1) for j in range(t) if t == 1 or gcd(t, j) == 1]
    return [Monomial.of(r, d) for r in roots for d in range(2, max_degree + 1)]


@lru_cache(maxsize=None)
def criterion_3():
    mons = zu_monomials()
    failures, reports, count = [], [], 0
    for F1, F2 in itertools.combinations_with_replacement(mons, 2):
        count += 1
        w = reversibility_witness(F1, F2)
        if w is None:
            failures.append((str(F1), str(F2), "no witness"))
            continue
        pair = (F1, F2)
        if not (evaluate_word(w.lhs, pair) == evaluate_word(w.rhs, pair) == w.value):
            failures.append((str(F1), str(F2), "identity fails"))
        if F1.degree == F2.degree and w.j2 > lcm(F1.root().order, F2.root().order) + 1:
            failures.append((str(F1), str(F2), f"j2 = {w.j2}"))
        if count % 17 == 1:
            reports.append(rep.witness_report(F1, F2, w))
    return count, failures, reports


def test_criterion_3_reversibility():
    count, failures, _ = criterion_3()
    assert record(3, count > 0 and not failures, f"{count} pairs from Z^U (orders <= 12, degrees <= 5), "
                  f"{len(failures)} failures"), failures[:5]


# -- criterion 4 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_4():
    pool = [Monomial.of(RootOfUnity(12, j), d) for j in range(12) for d in (2, 3, 4, 9)]
    semigroups = [(g,) for g in pool] + list(itertools.combinations(pool, 2))
    counterexamples, reports, checked = [], [], 0
    for gens in semigroups:
        S = MonomialSemigroup(gens)
        P2 = profile(S).P2
        elems = list(S.elements(2))
        for Q1, Q2 in itertools.product(elems, repeat=2):
            checked += 1
            w = congruent(Q1, Q2, S)
            if (w is not None) != (phi(Q1, P2) == phi(Q2, P2)):
                counterexamples.append(("kernel", gens, Q1, Q2))
            elif w is not None and mono_compose(S.evaluate(w), Q1) != mono_compose(S.evaluate(w), Q2):
                counterexamples.append(("witness", gens, Q1, Q2))
        q = quotient(S)
        image = list(q.image.elements(2))
        for A, F1, F2 in itertools.product(image, repeat=3):
            if F1 != F2 and mono_compose(A, F1) == mono_compose(A, F2):
                counterexamples.append(("cancellation", gens, A, F1, F2))
        if len(gens) == 2 and hash(gens) % 23 == 0:
            reports.append(rep.quotient_report(q))
    if not reports:
        reports.append(rep.quotient_report(quotient(MonomialSemigroup(semigroups[-1]))))
    return len(semigroups), checked, counterexamples, reports


def test_criterion_4_congruence_and_quotient():
    n, checked, counterexamples, _ = criterion_4()
    assert record(4, not counterexamples, f"{n} semigroups, {checked} element pairs, "
                  f"{len(counterexamples)} counterexamples"), counterexamples[:3]


# -- criterion 5 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_5():
    rng = random.Random(5)
    failures, reports = [], []
    for i in range(100):
        A = random_polynomial(rng, 2 + i % 2, terms=rng.randint(2, 4), m=12)
        norm = monomial_normalizer(A, N)
        status = equals(compose(A, norm.beta), compose(norm.beta, norm.normal_form()))
        if not status or status.index is not None and status.index < norm.precision:
            failures.append((str(A), str(status)))
        reports.append(rep.normalize_report(A, norm, N))
    return failures, reports


def test_criterion_5_normalization():
    failures, _ = criterion_5()
    assert record(5, not failures, f"100 generators over Q(zeta_12), {len(failures)} functional-equation failures"), \
        failures[:3]


# -- criterion 6 --------------------------------------------------------------------

def criterion_6():
    rng = random.Random(6)
    failures, cases = [], 0

    def poly(order):
        return random_polynomial(rng, order, terms=rng.randint(1, 3), m=rng.choice([1, 3, 4, 12]), spread=3)

    for _ in range(250):
        A, B, C = poly(rng.randint(1, 3)), poly(rng.randint(1, 3)), poly(rng.randint(1, 2))
        cases += 1
        if equals(compose(compose(A, B), C), compose(A, compose(B, C))).status != "exact":
            failures.append(("associativity", str(A), str(B), str(C)))
    for _ in range(250):
        A, B = poly(rng.randint(1, 4)), poly(rng.randint(1, 4))
        cases += 1
        if compose(A, B).order() != A.order() * B.order():
            failures.append(("order", str(A), str(B)))
    for _ in range(250):
        B = poly(1)
        cases += 1
        inv = comp_inverse(B, N)
        round_trip = compose(B, inv)
        if not (equals(round_trip, Series.z()) and all(round_trip[n] == (1 if n == 1 else 0)
                                                       for n in range(round_trip.precision + 1))):
            failures.append(("inverse", str(B)))
    for _ in range(250):
        A1, X = poly(rng.randint(2, 3)), poly(rng.randint(2, 3))
        A2 = A1 if rng.random() < 0.3 else A1 + Series.monomial(random_cyclo(rng, 12, 1), rng.randint(2, 5))
        cases += 1
        if (compose(A1, X) == compose(A2, X)) != (A1 == A2):
            failures.append(("cancellation", str(A1), str(A2), str(X)))
    return cases, failures


def test_criterion_6_series_algebra():
    cases, failures = criterion_6()
    assert record(6, cases >= 1000 and not failures, f"{cases} cases, {len(failures)} failures"), failures[:3]


# -- criterion 7 --------------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion_7():
    units = [CycloNum.rational(1), CycloNum.rational(2)]
    elements = indecomposables(units, [2], 4)
    degree_two = {e for e in elements if e.degree == 2}
    return degree_two, [rep.indecomposable_report(units, [2], 4, elements)]


def test_criterion_7_indecomposables():
    degree_two, _ = criterion_7()
    expected = {Monomial(CycloNum.rational(2 ** k), 2) for k in range(5)}
    ok = len(degree_two) >= 5 and expected <= degree_two
    assert record(7, ok, f"{len(degree_two)} indecomposable degree-2 elements: "
                  + ", ".join(sorted(str(e) for e in degree_two)))


# -- criterion 8 --------------------------------------------------------------------

def test_criterion_8_certificate_replay():
    reports = (criterion_1()[1] + criterion_2()[3] + criterion_3()[2] + criterion_4()[3] + criterion_5()[1]
               + criterion_7()[1])
    failed = []
    for r in reports:
        ok, msg = rep.verify_report(json.loads(rep.dumps(r)))
        if not ok:
            failed.append((r["command"], r["inputs"], msg))
    assert record(8, not failed, f"{len(reports)} serialized reports from criteria 1-5 and 7, "
                  f"{len(failed)} failed verification"), failed[:3]


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
