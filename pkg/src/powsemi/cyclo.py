"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1)
modulo the m-th cyclotomic polynomial, as an integer numerator vector over a
common positive denominator.  Values from different fields are lifted to the
field of the lcm conductor before combining.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CycloNum",
    "RootOfUnity",
    "arith",
    "root_of_unity_order",
    "as_root_of_unity",
    "prime_support",
    "factorize",
    "crt_split",
    "euler_phi",
    "cyclotomic_polynomial",
    "divisors",
    "lcm",
]


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ``((p, e), ...)``, primes ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_support(l: int) -> frozenset[int]:
    """Set of prime divisors of ``l``; empty for ``l == 1``."""
    return frozenset(p for p, _ in factorize(l))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn]
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the m-th cyclotomic polynomial."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the coordinates of zeta_m^e for 0 <= e < m."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    vec = [1] + [0] * (phi - 1)
    for _ in range(m):
        rows.append(tuple(vec))
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(phi):
                vec[i] -= top * cyc[i]
    return tuple(rows)


def _convolve(a, b) -> list[int]:
    """Integer polynomial product; long inputs go through one big-integer multiplication."""
    n = len(a) + len(b) - 1
    if len(a) < 12 or len(b) < 12:
        conv = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return conv
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if not bound:
        return [0] * n
    nbytes = (bound.bit_length() + 2 + 7) // 8
    k = 8 * nbytes
    pa = sum(x << (k * i) for i, x in enumerate(a))
    pb = sum(y << (k * j) for j, y in enumerate(b))
    total = nbytes * n
    raw = ((pa * pb) % (1 << (8 * total))).to_bytes(total, "little")
    # chunks are two's complement digits; a negative digit borrows from the next
    half, full = 1 << (k - 1), 1 << k
    conv = []
    carry = 0
    for i in range(0, total, nbytes):
        r = int.from_bytes(raw[i:i + nbytes], "little") + carry
        if r >= half:
            r -= full
            carry = 1
        else:
            carry = 0
        conv.append(r)
    return conv


@lru_cache(maxsize=None)
def _sparse_cyclotomic(m: int) -> tuple[tuple[int, int], ...]:
    """Nonzero lower coefficients of the monic m-th cyclotomic polynomial."""
    cyc = cyclotomic_polynomial(m)
    return tuple((i, c) for i, c in enumerate(cyc[:-1]) if c)


def _reduce(conv: list[int], m: int) -> list[int]:
    """Reduce a coefficient list in zeta_m (any length) to power-basis coordinates."""
    phi = euler_phi(m)
    if len(conv) > m:
        folded = [0] * m
        for e, c in enumerate(conv):
            if c:
                folded[e % m] += c
        conv = folded
    else:
        conv = list(conv)
    low = _sparse_cyclotomic(m)
    # long division by the monic cyclotomic polynomial, top degree first
    for e in range(len(conv) - 1, phi - 1, -1):
        c = conv[e]
        if c:
            base = e - phi
            for i, v in low:
                conv[base + i] -= c * v
    conv += [0] * (phi - len(conv))
    return conv[:phi]


class CycloNum:
    """An element of Q(zeta_m) held in canonical reduced form.

    Rational values are always stored with conductor 1, so ``m > 1`` implies
    the value is irrational.  Equality is field equality across conductors.
    """

    __slots__ = ("m", "num", "den", "_key")

    def __init__(self, m: int, num, den: int = 1):
        num = [int(v) for v in num]
        phi = euler_phi(m)
        if len(num) != phi:
            num = _reduce(num, m)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-v for v in num]
        g = gcd(den, *num)
        if g > 1:
            den //= g
            num = [v // g for v in num]
        if m > 1 and not any(num[1:]):
            m = 1
            num = num[:1]
        self.m = m
        self.num = tuple(num)
        self.den = den
        self._key = None

    # -- construction -------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "CycloNum":
        q = Fraction(value)
        return cls(1, (q.numerator,), q.denominator)

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CycloNum":
        """``zeta_m ** power`` with ``zeta_m = exp(2*pi*i/m)``."""
        if m < 1:
            raise ValueError("conductor must be positive")
        return cls(m, _power_table(m)[power % m], 1)

    @classmethod
    def from_coeffs(cls, m: int, coeffs) -> "CycloNum":
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        return cls(m, [f.numerator * (den // f.denominator) for f in fr], den)

    @staticmethod
    def coerce(value) -> "CycloNum":
        if isinstance(value, CycloNum):
            return value
        return CycloNum.rational(value)

    # -- accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return self.m == 1

    def to_fraction(self) -> Fraction:
        if self.m != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        """Floating-point embedding zeta_m -> exp(2*pi*i/m); test oracle only."""
        w = cmath.exp(2j * cmath.pi / self.m)
        return sum(v * w**i for i, v in enumerate(self.num)) / self.den

    # -- lifting ------------------------------------------------------------

    def lift(self, M: int) -> tuple[int, ...]:
        """Numerator coordinates in Q(zeta_M) (same denominator); m must divide M."""
        if M == self.m:
            return self.num
        if M % self.m:
            raise ValueError(f"conductor {self.m} does not divide {M}")
        k = M // self.m
        phi = euler_phi(M)
        if self.m == 1:
            return (self.num[0],) + (0,) * (phi - 1)
        table = _power_table(M)
        out = [0] * phi
        for i, c in enumerate(self.num):
            if c:
                row = table[(i * k) % M]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)

    def _pair(self, other: "CycloNum"):
        if self.m == other.m:
            return self.m, self.num, other.num
        M = lcm(self.m, other.m)
        return M, self.lift(M), other.lift(M)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if self.m == 1 and other.m == 1:
            return CycloNum(1, (self.num[0] * other.den + other.num[0] * self.den,), self.den * other.den)
        M, a, b = self._pair(other)
        return CycloNum(M, [x * other.den + y * self.den for x, y in zip(a, b)], self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.m, [-v for v in self.num], self.den)

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if other.m == 1:
            c = other.num[0]
            return CycloNum(self.m, [v * c for v in self.num], self.den * other.den)
        if self.m == 1:
            c = self.num[0]
            return CycloNum(other.m, [v * c for v in other.num], self.den * other.den)
        M, a, b = self._pair(other)
        return CycloNum(M, _reduce(_convolve(a, b), M), self.den * other.den)

    __rmul__ = __mul__

    def galois(self, a: int) -> "CycloNum":
        """Image under the automorphism zeta_m -> zeta_m^a (gcd(a, m) = 1)."""
        if self.m == 1:
            return self
        if gcd(a, self.m) != 1:
            raise ValueError(f"{a} is not a unit modulo {self.m}")
        conv = [0] * self.m
        for i, c in enumerate(self.num):
            conv[(i * a) % self.m] += c
        return CycloNum(self.m, _reduce(conv, self.m), self.den)

    def conjugate(self) -> "CycloNum":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_m) down to Q."""
        out = CycloNum.rational(1)
        for a in range(1, self.m + 1):
            if gcd(a, self.m) == 1:
                out = out * self.galois(a)
        return out.to_fraction()

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.m == 1:
            return CycloNum(1, (self.den,), self.num[0])
        # product of the non-identity conjugates over the norm
        rest = CycloNum.rational(1)
        for a in range(2, self.m + 1):
            if gcd(a, self.m) == 1:
                rest = rest * self.galois(a)
        n = (rest * self).to_fraction()
        return rest * CycloNum.rational(1 / n)

    def __truediv__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _maybe(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if self.m == 1:
            return CycloNum(1, (self.num[0] ** e,), self.den**e)
        result = CycloNum.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison and hashing ---------------------------------------------

    def __eq__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if self.m == other.m:
            return self.den == other.den and self.num == other.num
        if self.m == 1 or other.m == 1:
            return False
        M, a, b = self._pair(other)
        return all(x * other.den == y * self.den for x, y in zip(a, b))

    def __hash__(self):
        return hash(self.canonical_key())

    def canonical_key(self) -> tuple:
        """Representation in the smallest cyclotomic field containing the value."""
        if self._key is None:
            self._key = self._descend()
        return self._key

    def _descend(self) -> tuple:
        if self.m == 1:
            return (1, self.num, self.den)
        for d in divisors(self.m)[1:-1]:
            if d % 4 == 2:
                continue
            coords = self._coords_in_subfield(d)
            if coords is not None:
                return CycloNum(d, coords, self.den)._descend()
        return (self.m, self.num, self.den)

    def _coords_in_subfield(self, d: int):
        """Integer coordinates in Q(zeta_d) if the value lies there (same denominator)."""
        rows, inv, cols = _subfield_solver(self.m, d)
        picked = [self.num[r] for r in rows]
        sol = [sum(a * b for a, b in zip(line, picked)) for line in inv]
        if any(s.denominator != 1 for s in sol):
            return None
        sol = [int(s) for s in sol]
        lifted = [sum(col[i] * c for col, c in zip(cols, sol)) for i in range(len(self.num))]
        return sol if lifted == list(self.num) else None

    def __repr__(self):
        return f"CycloNum({self})"

    def __str__(self):
        from .literals import render_cyclo

        return render_cyclo(self)


@lru_cache(maxsize=None)
def _subfield_solver(m: int, d: int):
    """Rows of the embedding Q(zeta_d) -> Q(zeta_m) forming an invertible block, and its inverse."""
    phi_d = euler_phi(d)
    cols = [CycloNum.zeta(d, i).lift(m) for i in range(phi_d)]
    n = len(cols[0])
    # greedy choice of independent rows by elimination on the transpose
    chosen, basis = [], []
    for r in range(n):
        v = [Fraction(cols[j][r]) for j in range(phi_d)]
        for piv, bv in basis:
            if v[piv]:
                f = v[piv]
                v = [x - f * y for x, y in zip(v, bv)]
        piv = next((j for j in range(phi_d) if v[j]), None)
        if piv is None:
            continue
        pv = v[piv]
        basis.append((piv, [x / pv for x in v]))
        chosen.append(r)
        if len(chosen) == phi_d:
            break
    # invert the square block A[i][j] = cols[j][chosen[i]]
    aug = [[Fraction(cols[j][r]) for j in range(phi_d)] + [Fraction(int(i == k)) for k in range(phi_d)]
           for i, r in enumerate(chosen)]
    for c in range(phi_d):
        sel = next(r for r in range(c, phi_d) if aug[r][c])
        aug[c], aug[sel] = aug[sel], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(phi_d):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = tuple(tuple(row[phi_d:]) for row in aug)
    return tuple(chosen), inv, tuple(cols)


def _maybe(value):
    if isinstance(value, CycloNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycloNum.rational(value)
    return NotImplemented


def arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Field operation ``op`` in {"add", "sub", "mul", "div"}."""
    a, b = CycloNum.coerce(a), CycloNum.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


ONE = CycloNum.rational(1)


def root_of_unity_order(x: CycloNum) -> int | None:
    """Multiplicative order of ``x`` if it is a root of unity, else ``None``.

    Roots of unity in Q(zeta_m) form the group of order lcm(2, m), so only
    divisors of that number are tried.
    """
    x = CycloNum.coerce(x)
    if x.is_zero():
        return None
    if x.m == 1:
        q = x.to_fraction()
        return 1 if q == 1 else 2 if q == -1 else None
    if x * x.conjugate() != ONE:
        return None
    t = lcm(2, x.m)
    if x**t != ONE:
        return None
    # strip primes from t while x stays killed
    for p, _ in factorize(t):
        while t % p == 0 and x ** (t // p) == ONE:
            t //= p
    return t


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """The root of unity zeta_order ** exponent, with the order minimal."""

    order: int
    exponent: int

    def __post_init__(self):
        t, j = self.order, self.exponent % self.order
        g = gcd(j, t)
        if t == 1 or j == 0:
            t, j = 1, 0
        elif g > 1:
            t, j = t // g, j // g
        object.__setattr__(self, "order", t)
        object.__setattr__(self, "exponent", j)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(1, 0)

    def value(self) -> CycloNum:
        return CycloNum.zeta(self.order, self.exponent)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        t = lcm(self.order, other.order)
        return RootOfUnity(t, self.exponent * (t // self.order) + other.exponent * (t // other.order))

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * e)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __str__(self):
        if self.order == 1:
            return "1"
        if self.exponent == 1:
            return f"zeta({self.order})"
        return f"zeta({self.order})^{self.exponent}"


def as_root_of_unity(x: CycloNum) -> RootOfUnity | None:
    x = CycloNum.coerce(x)
    t = root_of_unity_order(x)
    if t is None:
        return None
    for j in range(t):
        if gcd(j, t) == 1 and CycloNum.zeta(t, j) == x:
            return RootOfUnity(t, j)
    raise AssertionError(f"order {t} found but no matching exponent for {x}")


def crt_split(eps: RootOfUnity, primes) -> tuple[RootOfUnity, RootOfUnity]:
    """Write ``eps = eps1 * eps2`` with |eps1| prime to ``primes`` and |eps2| supported on them."""
    primes = frozenset(primes)
    t2 = 1
    for p, e in factorize(eps.order):
        if p in primes:
            t2 *= p**e
    t1 = eps.order // t2
    j = eps.exponent
    # zeta_t^j = zeta_t1^a * zeta_t2^b  <=>  a*t2 + b*t1 = j (mod t)
    a = j * pow(t2, -1, t1) % t1 if t1 > 1 else 0
    b = j * pow(t1, -1, t2) % t2 if t2 > 1 else 0
    return RootOfUnity(t1, a), RootOfUnity(t2, b)
