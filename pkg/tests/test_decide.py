import random
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powsemi import (Amenable, CycloNum, Inconclusive, NonMonomialCoefficient, NotAmenable, RatioNotRootOfUnity,
                     SemanticError, Series, check_condition_4, compose, conjugate, decide, parse_series,
                     root_of_unity_order, simultaneity_ratio, verify_verdict)
from powsemi.decide import _replay
from powsemi.normalize import branches

from corpus import random_polynomial

P = parse_series


def gens(*texts):
    return [P(t) for t in texts]


def test_roots_of_unity_monomials_amenable():
    g = gens("z^2", "zeta(5)*z^3")
    v = decide(g)
    assert isinstance(v, Amenable) and v.witness.status.status == "exact" and v.caveat is None
    assert verify_verdict(v, g)


def test_free_pair_not_amenable():
    g = gens("z^2", "z^2 + z^3")
    v = decide(g)
    assert isinstance(v, NotAmenable)
    assert v.certificate == NonMonomialCoefficient(2, 3, CycloNum.rational(1))
    assert verify_verdict(v, g)


def test_single_generator_with_large_coefficient():
    v = decide(gens("2*z^2"))
    assert isinstance(v, Amenable)
    assert conjugate(P("2*z^2"), P("(1/2)*z")) == P("z^2")


def test_ratio_not_root_of_unity():
    g = gens("2*z^2", "2*z^3")
    v = decide(g)
    assert isinstance(v, NotAmenable)
    assert v.certificate == RatioNotRootOfUnity((1, 2), CycloNum.rational(2))
    # direct path: the Boettcher map z/2 of Q_1 sends Q_2 to (1/2) z^3
    c = conjugate(g[1], P("(1/2)*z"))
    assert c == P("(1/2)*z^3") and root_of_unity_order(c[3]) is None


def test_conjugated_monomials_are_amenable():
    # beta = z + z^2 conjugates monomials into non-polynomial generators
    beta = P("z + z^2")
    inv = P("z - z^2 + 2*z^3 - 5*z^4 + 14*z^5 - 42*z^6 + 132*z^7 + O(z^7)")
    g = [compose(compose(beta, Series.monomial(1, 2)), inv).truncate(10)]
    v = decide(g, N=10)
    assert isinstance(v, Amenable) and v.caveat is not None


def test_inconclusive_when_perturbation_is_beyond_precision():
    g = gens("z^2 + z^3", "z^2 + z^3 + z^30")
    v = decide(g, N=16)
    assert isinstance(v, Inconclusive) and v.suggested_precision == 32
    assert verify_verdict(v, g)


@pytest.mark.parametrize("texts", [["z"], ["1 + z^2"], []])
def test_rejects_non_semigroup_input(texts):
    with pytest.raises(SemanticError):
        decide([Series({0: 1, 2: 1}) if t == "1 + z^2" else P(t) for t in texts])


@pytest.mark.parametrize("forms,expected", [
    ([(CycloNum.zeta(3), 2), (CycloNum.zeta(5), 3)], None),
    ([(2, 2), (2, 3)], ((1, 2), CycloNum.rational(2))),
    ([(2, 2), (4, 3)], None),
])
def test_simultaneity_ratio(forms, expected):
    assert simultaneity_ratio(forms) == expected


def test_condition_4_examples():
    w = check_condition_4(gens("z^2", "z^3"), L=2)
    assert w is not None and _replay(w.words, gens("z^2", "z^3"), 16)
    assert check_condition_4(gens("z^2", "z^2 + z^3"), L=4) is None
    w = check_condition_4(gens("z^2"), L=2)
    assert w.words == ((1, 1),)


def test_tampered_certificates_fail():
    g = gens("z^2", "zeta(5)*z^3")
    v = decide(g)
    bad = Amenable(v.beta, v.monomial_forms, type(v.witness)(((1, 1), (2, 2)), v.witness.status))
    assert not verify_verdict(bad, g)
    g2 = gens("z^2", "z^2 + z^3")
    v2 = decide(g2)
    assert not verify_verdict(NotAmenable(NonMonomialCoefficient(2, 4, CycloNum.rational(1)), v2.beta), g2)


# -- properties ------------------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_single_generator_always_amenable(seed, n):
    g = [random_polynomial(random.Random(seed), n, terms=3)]
    v = decide(g, N=10)
    assert isinstance(v, Amenable)
    assert verify_verdict(v, g)


def brute_force_alignment(forms):
    """Exhaustive search over u = q * r * zeta_24^k with r in {1, sqrt(2)}."""
    sqrt2 = CycloNum.zeta(8) + CycloNum.zeta(8, 7)
    for q in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(4), Fraction(1, 4)):
        for r in (CycloNum.rational(1), sqrt2):
            for k in range(24):
                u = CycloNum.rational(q) * r * CycloNum.zeta(24, k)
                if all(root_of_unity_order(CycloNum.coerce(c) * u ** (d - 1)) is not None for c, d in forms):
                    return True
    return False


ROOTS = [CycloNum.zeta(t, 1) for t in (1, 2, 3, 4, 6)]
SCALES = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(4)]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(ROOTS), st.sampled_from(SCALES), st.sampled_from([2, 3])),
                min_size=2, max_size=3))
def test_simultaneity_matches_brute_force(data):
    forms = [(w * CycloNum.rational(s), d) for w, s, d in data]
    assert (simultaneity_ratio(forms) is None) == brute_force_alignment(forms)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_rigidity_under_linear_conjugation(seed):
    rng = random.Random(seed)
    Q1 = random_polynomial(rng, 2, terms=2)
    Q2 = random_polynomial(rng, 2, terms=3)
    v = decide([Q1, Q2], N=10)
    if isinstance(v, NotAmenable) and isinstance(v.certificate, NonMonomialCoefficient):
        from powsemi import comp_inverse
        inv = comp_inverse(v.beta, 10)
        for eps in branches(3):
            for u in (CycloNum.rational(2), CycloNum.zeta(5)):
                lin = Series.monomial(u * eps.value(), 1)
                b = compose(v.beta, lin)
                c = conjugate(Q2, b, 10)
                assert not c.is_monomial()
