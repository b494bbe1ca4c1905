"""Boettcher-type normal forms for series of order at least two.

:func:`monomial_normalizer` finds the order-one series ``beta`` with linear
coefficient 1 such that ``A o beta = beta o (c z^n)``, where ``c z^n`` is the
leading term of ``A``.  Comparing coefficients of ``z^(n+k-1)`` gives

    n*c*b_k + (terms in b_2 .. b_{k-1}) = [z^(n+k-1)] beta(c z^n)

so every ``b_k`` follows from earlier ones by one division by ``n*c``,
which is nonzero in characteristic zero.  This recursion is reconstructed
from the functional equation rather than quoted, and the tests validate it
against that equation.  The true Boettcher function
(conjugating ``A`` to ``z^n``) differs by the linear map ``b_1 z`` with
``b_1^(n-1) = 1/c`` and is offered by :func:`bottcher` when that root lies in
a cyclotomic field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import CycloNum, RootOfUnity, as_root_of_unity
from .errors import RootUnavailable
from .series import DEFAULT_PRECISION, Series, compose, order

__all__ = ["Normalizer", "monomial_normalizer", "bottcher", "branches", "rational_part"]


@dataclass(frozen=True)
class Normalizer:
    beta: Series
    source_order: int
    leading: CycloNum

    @property
    def precision(self) -> int:
        return self.beta.precision

    def normal_form(self) -> Series:
        return Series.monomial(self.leading, self.source_order)


def _power_coefficients(f: list, alpha: int, upto: int, cache: list) -> None:
    """Extend ``cache`` with coefficients of ``f^alpha`` (``f[0] == 1``) through index ``upto``.

    Uses the power recurrence  m*g_m = sum_{i=1..m} ((alpha+1)*i - m) f_i g_{m-i}.
    """
    zero = CycloNum.rational(0)
    while len(cache) <= upto:
        m = len(cache)
        if m == 0:
            cache.append(CycloNum.rational(1))
            continue
        acc = zero
        for i in range(1, m + 1):
            fi = f[i] if i < len(f) else zero
            if fi.is_zero():
                continue
            w = (alpha + 1) * i - m
            if w:
                acc = acc + fi * cache[m - i] * w
        cache.append(acc * Fraction(1, m))


def monomial_normalizer(A: Series, N: int = DEFAULT_PRECISION) -> Normalizer:
    """Conjugator ``beta = z + b_2 z^2 + ...`` with ``beta^{-1} o A o beta = c z^n``.

    ``beta`` is certain through ``z^N`` (fewer if ``A`` itself is truncated).
    A monomial ``A`` gives the exact identity conjugator.
    """
    n = order(A)
    if n < 2 or 0 in A.coeffs:
        raise ValueError("normalization needs a series of order at least 2")
    c = A.coeffs[n]
    if A.exact and A.is_monomial():
        return Normalizer(Series.z(), n, c)
    if not A.exact:
        N = min(N, A.precision - n + 1)
        if N < 1:
            raise ValueError("input precision too small to normalize")
    zero = CycloNum.rational(0)
    pivot = (c * n).inverse()
    # beta = z * f with f = 1 + b_2 z + b_3 z^2 + ...; f[i] = b_{i+1}
    f = [CycloNum.rational(1)]
    powers = {j: [] for j in A.coeffs}
    for k in range(2, N + 1):
        target = n + k - 1
        lhs = zero
        for j, a in A.coeffs.items():
            idx = target - j
            if idx < 0:
                continue
            # f has no entry k-1 yet, so b_k enters the j == n term as 0 here
            _power_coefficients(f, j, idx, powers[j])
            lhs = lhs + a * powers[j][idx]
        rhs = zero
        if target % n == 0:
            j = target // n
            rhs = f[j - 1] * c**j
        bk = (rhs - lhs) * pivot
        f.append(bk)
        # coefficient k-1 of f^n depends on b_k through the term n*b_k
        powers[n][k - 1] = powers[n][k - 1] + bk * n
    beta = Series({i + 1: v for i, v in enumerate(f)}, N, exact=False)
    return Normalizer(beta, n, c)


def _integer_root(v: int, k: int) -> int | None:
    if v < 0:
        return None
    if v < 2:
        return v
    r = round(v ** (1.0 / k)) if v.bit_length() < 1000 else 1 << (v.bit_length() // k)
    # Newton refinement keeps this exact for huge values
    while True:
        nr = ((k - 1) * r + v // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == v:
            return cand
    return None


def rational_part(c: CycloNum) -> tuple[Fraction, RootOfUnity] | None:
    """Write ``c = q * omega`` with ``q > 0`` rational and ``omega`` a root of unity, if possible."""
    if c.is_zero():
        return None
    sq = c * c.conjugate()
    if sq.m != 1:
        return None
    q2 = sq.to_fraction()
    num, den = _integer_root(q2.numerator, 2), _integer_root(q2.denominator, 2)
    if num is None or den is None:
        return None
    q = Fraction(num, den)
    omega = as_root_of_unity(c * CycloNum.rational(1 / q))
    if omega is None:
        return None
    return q, omega


def _linear_root(c: CycloNum, k: int) -> CycloNum:
    """Some ``b`` with ``b^k = 1/c`` inside a cyclotomic field."""
    if k == 1:
        return c.inverse()
    split = rational_part(c)
    if split is None:
        raise RootUnavailable(f"1/({c}) has no recognised {k}-th root in a cyclotomic field")
    q, omega = split
    inv_q = 1 / q
    rn, rd = _integer_root(inv_q.numerator, k), _integer_root(inv_q.denominator, k)
    if rn is None or rd is None:
        raise RootUnavailable(f"{inv_q} is not a {k}-th power of a rational")
    inv_omega = omega.inverse()
    # zeta_t^(-j) = (zeta_{t k}^(-j))^k
    root = RootOfUnity(inv_omega.order * k, inv_omega.exponent)
    return root.value() * Fraction(rn, rd)


def bottcher(A: Series, N: int = DEFAULT_PRECISION) -> Series:
    """Series ``beta_A`` of order one with ``A o beta_A = beta_A o z^n`` through its precision."""
    norm = monomial_normalizer(A, N)
    b1 = _linear_root(norm.leading, norm.source_order - 1)
    return compose(norm.beta, Series({1: b1}))


def branches(n: int) -> list[RootOfUnity]:
    """All ``eps`` with ``eps^(n-1) = 1``, the ambiguity ``beta(z) -> beta(eps z)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [RootOfUnity(n - 1, j) for j in range(n - 1)]
