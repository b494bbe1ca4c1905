import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powsemi import (CycloNum, ParseError, SemanticError, Series, parse_cyclo, parse_series, parse_series_file,
                     render_cyclo, render_series)

from corpus import random_cyclo, random_polynomial


def test_polynomial_literal():
    s = parse_series("z^2 + z^3")
    assert s.exact and s.order() == 2 and s == Series({2: 1, 3: 1})


def test_monomial_literal():
    assert parse_series("zeta(5)*z^3") == Series.monomial(CycloNum.zeta(5), 3)


def test_truncated_literal():
    s = parse_series("z^2 - (1/2)*z^4 + O(z^6)")
    assert not s.exact and s.precision == 6
    assert s[4] == CycloNum.rational(Fraction(-1, 2))


@pytest.mark.parametrize("text,value", [
    ("(z + z^2)^2", {2: 1, 3: 2, 4: 1}),
    ("2*z**3 - z^3", {3: 1}),
    ("z^2/4", {2: Fraction(1, 4)}),
    ("(1 + zeta(4))*z^2", {2: CycloNum.rational(1) + CycloNum.zeta(4)}),
    ("-z^2", {2: -1}),
])
def test_grammar_cases(text, value):
    assert parse_series(text) == Series(value)


@pytest.mark.parametrize("text", ["z^", "z^2 +", "zeta(0)", "(z^2", "z^2 $ z", "z/z", "z^2 + z^9 + O(z^6)"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_series(text)


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_series("z^2 + $")
    assert info.value.position == 6


@pytest.mark.parametrize("text", ["1 + z^2", "z + z^2", "3"])
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_series(text, semigroup=True)


def test_file_format():
    text = "# generators\nz^2   # first\n\nzeta(3)*z^3\n"
    assert parse_series_file(text) == [Series({2: 1}), Series.monomial(CycloNum.zeta(3), 3)]


def test_rendering():
    assert render_series(Series({2: Fraction(1, 2), 4: -1})) == "(1/2)*z^2 - z^4"
    assert render_series(Series.zero()) == "0"
    assert render_cyclo(CycloNum.zeta(12, 4)) == "zeta(3)"
    assert render_series(parse_series("z^2 + O(z^5)")) == "z^2 + O(z^5)"


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    rng = random.Random(seed)
    s = random_polynomial(rng, rng.randint(1, 4), terms=rng.randint(1, 4), m=rng.choice([3, 4, 5, 8, 12]))
    if rng.random() < 0.3:
        s = s.truncate(s.degree + rng.randint(0, 2))
    assert parse_series(render_series(s)) == s
    c = random_cyclo(rng, rng.choice([5, 7, 9]), terms=3)
    assert parse_cyclo(render_cyclo(c)) == c
