import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powsemi import CycloNum, RootOfUnity, crt_split, root_of_unity_order
from powsemi.cyclo import cyclotomic_polynomial, divisors, euler_phi, prime_support

zeta = CycloNum.zeta


def approx(x: CycloNum) -> complex:
    return x.to_complex()


def test_rational_sum():
    assert CycloNum.rational(Fraction(1, 2)) + CycloNum.rational(Fraction(1, 3)) == CycloNum.rational(Fraction(5, 6))


def test_zeta4_squared():
    assert zeta(4) * zeta(4) == CycloNum.rational(-1)


def test_zeta3_sum_against_complex_oracle():
    s = zeta(3) + zeta(3, 2)
    assert s == CycloNum.rational(-1)
    assert abs(cmath.exp(2j * cmath.pi / 3) + cmath.exp(4j * cmath.pi / 3) - (-1)) < 1e-12


@pytest.mark.parametrize("value,expected", [(1, 1), (-1, 2), (2, None)])
def test_root_order_rationals(value, expected):
    assert root_of_unity_order(CycloNum.rational(value)) == expected


def test_root_order_zeta5_squared():
    x = zeta(5, 2)
    assert root_of_unity_order(x) == 5
    assert x ** 5 == CycloNum.rational(1) and x ** 1 != CycloNum.rational(1)


def test_root_order_in_odd_conductor_reaches_2m():
    # -zeta(3) has order 6 even though it lives in Q(zeta_3)
    assert root_of_unity_order(-zeta(3)) == 6


def test_not_root_of_unity_with_unit_modulus():
    # (3 + 4i)/5 has absolute value 1 but is not a root of unity
    x = (CycloNum.rational(3) + CycloNum.rational(4) * zeta(4)) / 5
    assert abs(abs(approx(x)) - 1) < 1e-12
    assert root_of_unity_order(x) is None


@pytest.mark.parametrize("n,expected", [(12, {2, 3}), (1, set()), (7, {7})])
def test_prime_support(n, expected):
    assert prime_support(n) == frozenset(expected)


def test_crt_split_examples():
    one = RootOfUnity(1, 0)
    assert crt_split(one, {2}) == (one, one)
    assert crt_split(RootOfUnity(3, 1), {2}) == (RootOfUnity(3, 1), one)
    e1, e2 = crt_split(RootOfUnity(12, 1), {2})
    assert (e1, e2) == (RootOfUnity(3, 1), RootOfUnity(4, 3))
    assert e1.value() * e2.value() == zeta(12)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 2, 9, 12, 60)] == [1, 1, 6, 4, 16]
    assert divisors(12) == (1, 2, 3, 4, 6, 12)


def test_equality_across_conductors():
    assert zeta(12, 4) == zeta(3)
    assert zeta(20, 5) == zeta(4)
    assert hash(zeta(12, 4)) == hash(zeta(3))
    assert zeta(8) != zeta(4)
    assert {zeta(6, 2), zeta(3)} == {zeta(3)}


def test_inverse_and_norm():
    x = CycloNum.rational(2) + zeta(5)
    assert x * x.inverse() == CycloNum.rational(1)
    assert x.norm() == 11  # Phi_5(-2) = 16 - 8 + 4 - 2 + 1
    with pytest.raises(ZeroDivisionError):
        CycloNum.rational(0).inverse()


def test_negative_powers():
    x = zeta(7) + 3
    assert x ** -2 * x ** 2 == CycloNum.rational(1)


# -- properties ------------------------------------------------------------------

M_VALUES = [1, 3, 4, 5, 8, 12]


@st.composite
def cyclonums(draw, m=None):
    m = m or draw(st.sampled_from(M_VALUES))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=m, max_size=m))
    return CycloNum.from_coeffs(m, coeffs)


@settings(max_examples=60, deadline=None)
@given(cyclonums(), cyclonums(), cyclonums())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == CycloNum.rational(1)


@settings(max_examples=60, deadline=None)
@given(cyclonums(), cyclonums())
def test_arithmetic_matches_complex_embedding(a, b):
    assert abs(approx(a * b) - approx(a) * approx(b)) < 1e-6
    assert abs(approx(a + b) - approx(a) - approx(b)) < 1e-9


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.integers(0, 59))
def test_root_order_is_exact(t, j):
    x = zeta(t, j)
    order = root_of_unity_order(x)
    assert order == t // __import__("math").gcd(t, j)
    assert x ** order == CycloNum.rational(1)
    assert all(x ** s != CycloNum.rational(1) for s in divisors(order)[:-1])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.integers(0, 59),
       st.sets(st.sampled_from([2, 3, 5]), max_size=3))
def test_crt_split_round_trip(t, j, P):
    eps = RootOfUnity(t, j % t)
    e1, e2 = crt_split(eps, P)
    assert e1 * e2 == eps
    assert not (prime_support(e1.order) & frozenset(P))
    assert prime_support(e2.order) <= frozenset(P)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5]), st.sampled_from([2, 3]), st.data())
def test_lift_commutes_with_arithmetic(m, k, data):
    a, b = data.draw(cyclonums(m)), data.draw(cyclonums(m))
    M = m * k
    up = lambda x: CycloNum(M, x.lift(M), x.den)
    assert up(a * b) == up(a) * up(b)
    assert up(a + b) == up(a) + up(b)
    assert up(a * b).lift(M) == (up(a) * up(b)).lift(M)
