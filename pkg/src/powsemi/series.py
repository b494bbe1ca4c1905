"""Truncated formal power series over cyclotomic coefficients.

A :class:`Series` stores its nonzero coefficients sparsely together with a
precision ``N``: coefficients of index ``<= N`` are known exactly, the rest
are unknown unless the series is flagged ``exact`` (a polynomial known in
full).  Composition tracks the largest index through which the result is
certain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .cyclo import CycloNum
from .errors import CompositionUndefined, IndeterminateOrder, NotInvertible

__all__ = [
    "Series",
    "Comparison",
    "INFINITY",
    "power_table",
    "order",
    "compose",
    "comp_inverse",
    "conjugate",
    "equals",
]

INFINITY = math.inf
DEFAULT_PRECISION = 16


class Series:
    __slots__ = ("coeffs", "precision", "exact")

    def __init__(self, coeffs: Mapping[int, object] | None = None, precision: int | None = None,
                 exact: bool = True):
        items = {}
        for n, c in (coeffs or {}).items():
            if n < 0:
                raise ValueError("negative exponent in power series")
            c = CycloNum.coerce(c)
            if not c.is_zero():
                items[int(n)] = c
        degree = max(items, default=0)
        if exact:
            precision = max(degree, 1) if precision is None else max(precision, degree, 1)
        else:
            if precision is None:
                raise ValueError("a truncated series needs a precision")
            items = {n: c for n, c in items.items() if n <= precision}
        self.coeffs: dict[int, CycloNum] = dict(sorted(items.items()))
        self.precision: int = int(precision)
        self.exact: bool = bool(exact)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def z(cls) -> "Series":
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff, degree: int) -> "Series":
        return cls({degree: coeff})

    @classmethod
    def zero(cls) -> "Series":
        return cls({})

    # -- basic queries --------------------------------------------------------

    def __getitem__(self, n: int) -> CycloNum:
        if not self.exact and n > self.precision:
            raise IndexError(f"coefficient {n} lies beyond precision {self.precision}")
        return self.coeffs.get(n, CycloNum.rational(0))

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def order(self):
        return order(self)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def leading(self) -> tuple[CycloNum, int]:
        n = order(self)
        return self.coeffs[n], n

    def truncate(self, precision: int) -> "Series":
        """Forget every coefficient beyond ``precision``."""
        if self.exact and self.degree <= precision:
            return self
        return Series(self.coeffs, min(precision, self.precision), exact=False)

    def conductor(self) -> int:
        from .cyclo import lcm

        return lcm(*(c.m for c in self.coeffs.values()))

    # -- ring operations ------------------------------------------------------

    def _bound(self):
        return INFINITY if self.exact else self.precision

    def __add__(self, other):
        other = _as_series(other)
        p = min(self._bound(), other._bound())
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out[n] + c if n in out else c
        if p == INFINITY:
            return Series(out)
        return Series(out, p, exact=False)

    __radd__ = __add__

    def __neg__(self):
        return Series({n: -c for n, c in self.coeffs.items()}, self.precision, self.exact)

    def __sub__(self, other):
        return self + (-_as_series(other))

    def __rsub__(self, other):
        return _as_series(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, CycloNum)) or hasattr(other, "denominator"):
            c = CycloNum.coerce(other)
            return Series({n: c * v for n, v in self.coeffs.items()}, self.precision, self.exact)
        other = _as_series(other)
        bound = _product_bound(self, other)
        cap = None if bound == INFINITY else bound
        out = _mul(self.coeffs, other.coeffs, cap)
        if cap is None:
            return Series(out)
        return Series(out, cap, exact=False)

    __rmul__ = __mul__

    def __matmul__(self, other: "Series") -> "Series":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.exact == other.exact and self.precision == other.precision
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.exact, self.precision, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"Series({str(self)!r})"

    def __str__(self):
        from .literals import render_series

        return render_series(self)


def _as_series(value) -> Series:
    if isinstance(value, Series):
        return value
    return Series({0: CycloNum.coerce(value)})


def _product_bound(a: Series, b: Series):
    # product coefficient n involves a_i b_j with i + j = n
    if a.exact and b.exact:
        return INFINITY
    oa = _known_order(a)
    ob = _known_order(b)
    bounds = []
    if not a.exact:
        bounds.append(a.precision + ob)
    if not b.exact:
        bounds.append(b.precision + oa)
    return min(bounds)


def _known_order(s: Series) -> int:
    if s.coeffs:
        return min(s.coeffs)
    return s.precision + 1


def _mul(p: dict, q: dict, cap: int | None) -> dict:
    out: dict[int, CycloNum] = {}
    if len(p) > len(q):
        p, q = q, p
    for i, x in p.items():
        for j, y in q.items():
            n = i + j
            if cap is not None and n > cap:
                continue
            v = x * y
            out[n] = out[n] + v if n in out else v
    return out


def _pow(p: dict, e: int, cap: int | None) -> dict:
    """``p**e`` through index ``cap``; factors are only kept as far as the final product needs."""
    if cap is None or not p:
        slack = None
    else:
        slack = cap - e * min(p)  # room above the order of the final product
    result = {0: CycloNum.rational(1)}
    r = 0
    base = p
    k = 1
    while e:
        if e & 1:
            r += k
            result = _mul(result, base, None if slack is None else r * min(p) + slack)
        e >>= 1
        if e:
            k *= 2
            base = _mul(base, base, None if slack is None else k * min(p) + slack)
    return result


def power_table(B: Series, exponents, cap: int | None = None) -> dict:
    """``{n: B**n}`` for the given positive exponents, each through index ``cap``."""
    out = {}
    power, last = None, 0
    for n in sorted(set(exponents)):
        step = _pow(B.coeffs, n - last, cap)
        power = step if power is None else _mul(power, step, cap)
        out[n] = power
        last = n
    return out


# -- public operations --------------------------------------------------------

def order(A: Series):
    """Index of the first nonzero coefficient; ``INFINITY`` for the exact zero series."""
    if A.coeffs:
        return min(A.coeffs)
    if A.exact:
        return INFINITY
    raise IndeterminateOrder(f"all coefficients through z^{A.precision} vanish")


def compose(A: Series, B: Series, cap: int | None = None, powers: dict | None = None) -> Series:
    """The series ``A(B(z))``.

    The result is certain through ``min(N_A * b, N_B + (a' - 1) * b)`` where
    ``b = ord B`` and ``a'`` is the smallest positive exponent of ``A``; exact
    inputs contribute no bound.  ``cap`` optionally truncates the work, and
    ``powers`` may supply ``B**n`` already computed through at least that cap.
    """
    if 0 in B.coeffs:
        raise CompositionUndefined("inner series has a nonzero constant term")
    b = order(B)
    if b == INFINITY:
        # B is exactly zero, so only the constant term of A survives
        return Series({0: A.coeffs[0]} if 0 in A.coeffs else {})
    positive = [n for n in A.coeffs if n >= 1]
    bounds = []
    if not A.exact:
        bounds.append(A.precision * b)
    if not B.exact:
        a1 = min(positive) if positive else (A.precision + 1 if not A.exact else 1)
        bounds.append(B.precision + (a1 - 1) * b)
    if cap is not None:
        bounds.append(cap)
    bound = min(bounds) if bounds else None
    out: dict[int, CycloNum] = {}
    if 0 in A.coeffs:
        out[0] = A.coeffs[0]
    if bound is not None:
        positive = [n for n in positive if n * b <= bound]
    if powers is None:
        powers = power_table(B, positive, bound)
    for n in positive:
        power = powers[n]
        c = A.coeffs[n]
        for k, v in power.items():
            t = c * v
            out[k] = out[k] + t if k in out else t
    if bound is None:
        return Series(out)
    truncated = Series(out, bound, exact=False)
    if A.exact and B.exact and truncated.precision >= A.degree * B.degree:
        return Series(out)
    return truncated


def comp_inverse(B: Series, precision: int | None = None) -> Series:
    """Compositional inverse of an order-one series, through its precision."""
    if 0 in B.coeffs or 1 not in B.coeffs:
        raise NotInvertible("only series of order one are invertible under composition")
    b1 = B.coeffs[1]
    if B.exact and B.degree == 1:
        return Series({1: b1.inverse()})
    N = B.precision if not B.exact else (precision or DEFAULT_PRECISION)
    if precision is not None:
        N = min(N, precision)
    inv1 = b1.inverse()
    G: dict[int, CycloNum] = {1: inv1}
    # coefficient k of B(G) is b1*g_k plus terms in g_1..g_{k-1}
    for k in range(2, N + 1):
        partial = compose(Series(B.coeffs, N, exact=False), Series(G, k, exact=False), cap=k)
        r = partial.coeffs.get(k)
        if r is not None:
            G[k] = -(r * inv1)
    return Series(G, N, exact=False)


def conjugate(A: Series, beta: Series, precision: int | None = None) -> Series:
    """``beta^{-1} o A o beta``."""
    inner = compose(A, beta)
    return compose(comp_inverse(beta, precision), inner)


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`equals`: ``exact``, ``precision`` (through ``index``) or ``unequal`` (first witness ``index``)."""

    status: str
    index: int | None = None

    def __bool__(self):
        return self.status != "unequal"

    def __str__(self):
        if self.status == "exact":
            return "EqualExact"
        if self.status == "precision":
            return f"EqualToPrecision({self.index})"
        return f"Unequal({self.index})"


def equals(A: Series, B: Series) -> Comparison:
    window = min(A._bound(), B._bound())
    keys = sorted(set(A.coeffs) | set(B.coeffs))
    for n in keys:
        if n > window:
            break
        a, b = A.coeffs.get(n), B.coeffs.get(n)
        if a is None or b is None or a != b:
            return Comparison("unequal", n)
    if window == INFINITY:
        return Comparison("exact")
    return Comparison("precision", int(window))
