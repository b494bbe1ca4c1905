"""Right amenability of finitely generated subsemigroups of z^2 k[[z]].

A semigroup ``<Q_1, ..., Q_k>`` is right amenable exactly when one order-one
series ``beta`` conjugates every generator to a monomial ``omega_i z^d_i``
with ``omega_i`` a root of unity, and exactly when the principal left ideals
``S Q_1, ..., S Q_k`` share an element.  :func:`decide` runs

1. normalize ``Q_1`` (``beta`` with linear part 1, target ``c_1 z^n``) and
   conjugate every generator by ``beta``;
2. reject if a conjugate carries a coefficient off its leading term;
3. reject if the leading coefficients cannot be rotated to roots of unity
   simultaneously by one linear map ``u z``;
4. otherwise build words ``A_i`` with ``A_i o Q_i`` all equal and replay
   them on the original generators.

Steps 2 and 3 are exact field facts.  Linear conjugation sends
``c z^d`` to ``c u^(d-1) z^d`` and keeps non-monomials non-monomial, and the
only conjugators between two monomials of degree ``n >= 2`` are linear, so a
failure under ``beta`` is a failure under every conjugator.  Step 4 is the
proof of amenability: an ``Amenable`` verdict is only returned after the
replayed words agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclo import CycloNum, lcm, root_of_unity_order
from .errors import IndeterminateOrder, SemanticError
from .explorer import MAX_EXACT_TERMS, compare_words, enumerate_words
from .monomial import CommonMultiple, Monomial, common_left_multiple, mono_compose
from .normalize import monomial_normalizer
from .series import Comparison, Series, comp_inverse, compose, equals, order

__all__ = [
    "Amenable",
    "NotAmenable",
    "Inconclusive",
    "NonMonomialCoefficient",
    "CoefficientNotRootOfUnity",
    "RatioNotRootOfUnity",
    "Witness",
    "decide",
    "simultaneity_ratio",
    "check_condition_4",
    "verify_verdict",
    "DEFAULT_PRECISION",
    "DEFAULT_DEPTH",
]

DEFAULT_PRECISION = 16
DEFAULT_DEPTH = 6

Word = tuple


@dataclass(frozen=True)
class NonMonomialCoefficient:
    index: int
    position: int
    value: CycloNum


@dataclass(frozen=True)
class CoefficientNotRootOfUnity:
    index: int
    value: CycloNum


@dataclass(frozen=True)
class RatioNotRootOfUnity:
    pair: tuple[int, int]
    value: CycloNum


@dataclass(frozen=True)
class Witness:
    """Words ``A_i + (i,)`` whose values coincide, so their common value lies in every ``S Q_i``."""

    words: tuple[Word, ...]
    status: Comparison

    @property
    def prefixes(self) -> tuple[Word, ...]:
        return tuple(w[:-1] for w in self.words)


@dataclass(frozen=True)
class Amenable:
    beta: Series
    monomial_forms: tuple[Monomial, ...]
    witness: Witness
    caveat: str | None = None

    kind = "Amenable"


@dataclass(frozen=True)
class NotAmenable:
    certificate: object
    beta: Series
    monomial_forms: tuple[Monomial, ...] = ()

    kind = "NotAmenable"


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    suggested_precision: int
    suggested_depth: int

    kind = "Inconclusive"


def simultaneity_ratio(forms: Sequence[tuple[CycloNum, int]]):
    """``None`` if some ``u`` makes every ``c_i u^(d_i - 1)`` a root of unity, else ``((i, j), ratio)``.

    Pairs are scanned in lexicographic order (1-based) and the first failing
    ratio ``c_i^(d_j-1) / c_j^(d_i-1)`` is returned.
    """
    forms = [(CycloNum.coerce(c), d) for c, d in forms]
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            (ci, di), (cj, dj) = forms[i], forms[j]
            ratio = ci ** (dj - 1) / cj ** (di - 1)
            if root_of_unity_order(ratio) is None:
                return (i + 1, j + 1), ratio
    return None


def _alignment_limit(forms: Sequence[Monomial]) -> int:
    """Pigeonhole bound for monomials that are rotations of ``Z^U`` elements.

    With ``u^(d_1-1) = 1/c_1`` the rotated coefficient ``omega_i`` satisfies
    ``omega_i^(d_1-1) = c_i^(d_1-1) / c_1^(d_i-1)``, so its order divides
    ``(d_1-1)`` times the order of that ratio.
    """
    c1, d1 = forms[0].coeff, forms[0].degree
    n = d1 - 1
    for f in forms[1:]:
        t = root_of_unity_order(f.coeff ** (d1 - 1) / c1 ** (f.degree - 1))
        n = lcm(n, (d1 - 1) * t)
    return n + 1


def _short_witness(forms: Sequence[Monomial], depth: int) -> CommonMultiple | None:
    """Shortest common left multiple among words of length <= depth (monomial arithmetic only)."""
    k = len(forms)
    if depth < 2:
        return None
    first: dict[Monomial, dict[int, Word]] = {}
    layer = [((i,), f) for i, f in enumerate(forms, 1)]
    for length in range(2, depth + 1):
        layer = [((i,) + w, mono_compose(f, v)) for i, f in enumerate(forms, 1) for w, v in layer]
        for w, v in layer:
            ends = first.setdefault(v, {})
            ends.setdefault(w[-1], w)
            if len(ends) == k:
                words = tuple(ends[i][:-1] for i in range(1, k + 1))
                return CommonMultiple(v, words)
    return None


def _validate(generators: Sequence[Series]) -> list[Series]:
    gens = list(generators)
    if not gens:
        raise SemanticError("at least one generator is required")
    for i, g in enumerate(gens, 1):
        if 0 in g.coeffs:
            raise SemanticError(f"generator {i} has a nonzero constant term")
        n = order(g)
        if n < 2:
            raise SemanticError(f"generator {i} has order {n}; only series of order >= 2 are supported")
    return gens


def _replay(words: Sequence[Word], gens: Sequence[Series], precision: int) -> Comparison:
    ref = words[0]
    worst = Comparison("exact")
    # a lone word is compared with itself so truncated inputs still report their precision
    for w in words[1:] or words[:1]:
        c = compare_words(ref, w, gens, precision, MAX_EXACT_TERMS)
        if not c:
            return c
        if c.status != "exact" and (worst.status == "exact" or c.index < worst.index):
            worst = c
    return worst


def decide(generators: Sequence[Series], N: int = DEFAULT_PRECISION, L: int = DEFAULT_DEPTH):
    """Decide right amenability of ``<generators>``; ``Q_1`` is the first generator."""
    gens = _validate(generators)
    norm = monomial_normalizer(gens[0], N)
    beta = norm.beta
    inv = comp_inverse(beta, N)
    forms: list[Monomial] = []
    for i, g in enumerate(gens, 1):
        conj = compose(inv, compose(g, beta))
        try:
            d = order(conj)
        except IndeterminateOrder:
            return Inconclusive(f"conjugate of generator {i} vanishes through z^{conj.precision}", 2 * N, L)
        extra = [n for n in conj.coeffs if n != d]
        if extra:
            pos = extra[0]
            return NotAmenable(NonMonomialCoefficient(i, pos, conj.coeffs[pos]), beta)
        forms.append(Monomial(conj.coeffs[d], d))

    failing = simultaneity_ratio([(f.coeff, f.degree) for f in forms])
    if failing is not None:
        return NotAmenable(RatioNotRootOfUnity(*failing), beta, tuple(forms))

    cm = _short_witness(forms, L) or common_left_multiple(forms, _alignment_limit(forms))
    if cm is None:
        return Inconclusive("no common left multiple found for the monomial forms", 2 * N, 2 * L)
    words = cm.full_words()
    status = _replay(words, gens, N)
    if not status:
        return Inconclusive(
            f"witness words disagree on the original generators at z^{status.index}; "
            "the generators are not monomial beyond the normalizer's precision", 2 * N, L)
    caveat = None
    if status.status != "exact":
        caveat = f"verified through precision {status.index}"
    return Amenable(beta, tuple(forms), Witness(words, status), caveat)


def check_condition_4(generators: Sequence[Series], L: int = DEFAULT_DEPTH, N: int = DEFAULT_PRECISION):
    """Breadth-first search for an element of ``S Q_1 ∩ ... ∩ S Q_k`` among words of length <= L.

    Independent of the normalization path.  Returns a :class:`Witness` or ``None``.
    """
    gens = _validate(generators)
    k = len(gens)
    if L < 2:
        return None
    table = enumerate_words(gens, L, N)
    for key, words in table.entries.items():
        ends: dict[int, Word] = {}
        for w in words:
            if len(w) >= 2:
                ends.setdefault(w[-1], w)
        if len(ends) < k:
            continue
        full = tuple(ends[i] for i in range(1, k + 1))
        status = _replay(full, gens, N) if k > 1 else Comparison("exact") if all(g.exact for g in gens) \
            else equals(table.values[key], table.values[key])
        if status:
            return Witness(full, status)
    return None


# -- certificate replay -------------------------------------------------------------

def _check_normalizer(Q1: Series, beta: Series) -> bool:
    if beta.coeffs.get(1) != CycloNum.rational(1) or 0 in beta.coeffs:
        return False
    c, n = Q1.leading()
    lhs = compose(Q1, beta)
    rhs = compose(beta, Series.monomial(c, n))
    return bool(equals(lhs, rhs))


def verify_verdict(verdict, generators: Sequence[Series]) -> bool:
    """Re-check a verdict's certificate from the generators alone."""
    gens = _validate(generators)
    if isinstance(verdict, Amenable):
        words = verdict.witness.words
        if len(words) != len(gens) or any(len(w) < 2 or w[-1] != i for i, w in enumerate(words, 1)):
            return False
        if any(j < 1 or j > len(gens) for w in words for j in w):
            return False
        status = _replay(words, gens, max(verdict.beta.precision, DEFAULT_PRECISION))
        if not status:
            return False
        return status.status == "exact" or verdict.caveat is not None
    if isinstance(verdict, NotAmenable):
        beta = verdict.beta
        if not _check_normalizer(gens[0], beta):
            return False
        inv = comp_inverse(beta, beta.precision)
        cert = verdict.certificate

        def conj(i):
            return compose(inv, compose(gens[i - 1], beta))

        if isinstance(cert, NonMonomialCoefficient):
            s = conj(cert.index)
            if cert.position > s.precision and not s.exact:
                return False
            lead = order(s)
            return cert.position != lead and s.coeffs.get(cert.position) == cert.value and not cert.value.is_zero()
        if isinstance(cert, RatioNotRootOfUnity):
            i, j = cert.pair
            (ci, di), (cj, dj) = conj(i).leading(), conj(j).leading()
            ratio = ci ** (dj - 1) / cj ** (di - 1)
            return ratio == cert.value and root_of_unity_order(ratio) is None
        if isinstance(cert, CoefficientNotRootOfUnity):
            c, _ = conj(cert.index).leading()
            return c == cert.value and root_of_unity_order(c) is None
        return False
    if isinstance(verdict, Inconclusive):
        return True
    raise TypeError(f"unknown verdict {verdict!r}")
