"""Monomial semigroups: elements ``a z^d`` (``d >= 2``) under composition.

Composition is the semidirect-product law

    (a z^d) o (b z^e) = a * b^d * z^(d*e)

Elements whose coefficient is a root of unity form the semigroup ``Z^U``;
for those the module computes the profile (coefficient group, degree
semigroup and their prime supports), the homomorphism ``phi`` that strips
the part of each coefficient whose order is supported on the degree primes,
the congruence ``s o x = s o y`` it induces, and explicit pigeonhole
relations witnessing right reversibility and non-freeness.

Words are tuples of 1-based generator indices; ``(i1, ..., ir)`` stands for
``Q_i1 o Q_i2 o ... o Q_ir``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .cyclo import CycloNum, RootOfUnity, as_root_of_unity, crt_split, lcm, prime_support, root_of_unity_order
from .errors import NotInZU
from .series import Series

__all__ = [
    "Monomial",
    "MonomialSemigroup",
    "Profile",
    "Quotient",
    "ReversibilityWitness",
    "CommonMultiple",
    "mono_compose",
    "evaluate_word",
    "profile",
    "phi",
    "congruent",
    "quotient",
    "reversibility_witness",
    "free_pair_relation",
    "common_left_multiple",
    "indecomposables",
    "in_degree_semigroup",
]

Word = tuple


@dataclass(frozen=True)
class Monomial:
    coeff: CycloNum
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", CycloNum.coerce(self.coeff))
        if self.coeff.is_zero():
            raise ValueError("monomial coefficient must be nonzero")
        if self.degree < 2:
            raise ValueError("monomial degree must be at least 2")

    @classmethod
    def of(cls, root: RootOfUnity, degree: int) -> "Monomial":
        m = cls(root.value(), degree)
        object.__setattr__(m, "_root", root)
        return m

    def _root_or_none(self) -> RootOfUnity | None:
        # cached: Z^U arithmetic then runs on exponents instead of field elements
        try:
            return self.__dict__["_root"]
        except KeyError:
            r = as_root_of_unity(self.coeff)
            object.__setattr__(self, "_root", r)
            return r

    @classmethod
    def from_series(cls, s: Series) -> "Monomial":
        if not (s.exact and s.is_monomial()):
            raise ValueError(f"{s} is not an exact monomial")
        (d, c), = s.coeffs.items()
        return cls(c, d)

    def root(self) -> RootOfUnity:
        r = self._root_or_none()
        if r is None:
            raise NotInZU(f"coefficient {self.coeff} is not a root of unity")
        return r

    def in_zu(self) -> bool:
        return self._root_or_none() is not None

    def to_series(self) -> Series:
        return Series.monomial(self.coeff, self.degree)

    def __matmul__(self, other: "Monomial") -> "Monomial":
        return mono_compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.degree != other.degree:
            return False
        ra, rb = self.__dict__.get("_root"), other.__dict__.get("_root")
        if ra is not None and rb is not None:
            return ra == rb
        return self.coeff == other.coeff

    def __hash__(self):
        return hash((self.degree, self.coeff))

    def __str__(self):
        return str(self.to_series())


def mono_compose(Q: Monomial, R: Monomial) -> Monomial:
    rq, rr = Q._root_or_none(), R._root_or_none()
    if rq is not None and rr is not None:
        return Monomial.of(rq * rr ** Q.degree, Q.degree * R.degree)
    return Monomial(Q.coeff * R.coeff**Q.degree, Q.degree * R.degree)


def evaluate_word(word: Sequence[int], gens: Sequence[Monomial]) -> Monomial:
    """Monomial value of ``word`` (1-based indices into ``gens``)."""
    if not word:
        raise ValueError("empty word")
    # right to left keeps the inner argument small: a*(b^d)
    value = gens[word[-1] - 1]
    for i in reversed(word[:-1]):
        value = mono_compose(gens[i - 1], value)
    return value


@dataclass(frozen=True)
class MonomialSemigroup:
    generators: tuple[Monomial, ...]

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        if len(set(gens)) != len(gens):
            raise ValueError("generators must be pairwise distinct")
        object.__setattr__(self, "generators", gens)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def evaluate(self, word) -> Monomial:
        return evaluate_word(word, self.generators)

    def elements(self, max_length: int) -> dict[Monomial, Word]:
        """Distinct elements reachable by words of length <= max_length, with a shortest word each."""
        seen: dict[Monomial, Word] = {}
        frontier = [((i + 1,), g) for i, g in enumerate(self.generators)]
        for _ in range(max_length):
            nxt = []
            for w, v in frontier:
                if v in seen:
                    continue
                seen[v] = w
                for i, g in enumerate(self.generators):
                    nxt.append((w + (i + 1,), mono_compose(v, g)))
            frontier = nxt
        return seen


@dataclass(frozen=True)
class Profile:
    U_gens: tuple[RootOfUnity, ...]
    N_gens: tuple[int, ...]
    P1: frozenset
    P2: frozenset


def profile(S: MonomialSemigroup) -> Profile:
    roots = [Q.root() for Q in S]
    U_gens = tuple(dict.fromkeys(roots))
    N_gens = tuple(sorted(set(Q.degree for Q in S)))
    P1 = frozenset().union(*(prime_support(r.order) for r in roots))
    P2 = frozenset().union(*(prime_support(d) for d in N_gens))
    return Profile(U_gens, N_gens, P1, P2)


def phi(Q: Monomial, P2) -> Monomial:
    """Drop the factor of the coefficient whose order is supported on ``P2``.

    When either factor of the split is trivial (order 1) it is handled like
    any other: its prime factorization is empty and the corresponding
    composition product is the empty product.  This uniform treatment is a
    reconstruction; the degenerate cases are not worked out in the source
    argument.
    """
    eps1, _ = crt_split(Q.root(), P2)
    return Monomial.of(eps1, Q.degree)


def _degree_word_mod(N_gens: Sequence[int], indices: Sequence[int], t: int):
    """Shortest word over ``indices`` whose degree is divisible by ``t`` (BFS on residues)."""
    start = [((i,), N_gens[k] % t) for k, i in enumerate(indices)]
    seen = {}
    queue = deque()
    for w, r in start:
        if r not in seen:
            seen[r] = w
            queue.append(r)
    while queue:
        r = queue.popleft()
        if r == 0:
            return seen[r]
        for k, i in enumerate(indices):
            r2 = r * N_gens[k] % t
            if r2 not in seen:
                seen[r2] = seen[r] + (i,)
                queue.append(r2)
    return seen.get(0)


def congruent(Q1: Monomial, Q2: Monomial, S: MonomialSemigroup) -> Word | None:
    """A word ``s`` over ``S`` with ``s o Q1 = s o Q2``, or ``None`` if no element of ``S`` works.

    ``s = sigma z^m`` works exactly when ``(omega1/omega2)^m = 1``, so only
    the degree of ``s`` modulo the order of the ratio matters.
    """
    if Q1.degree != Q2.degree:
        return None
    t = root_of_unity_order(Q1.coeff / Q2.coeff)
    if t is None:
        return None
    if t == 1:
        return (1,)
    degrees = [g.degree for g in S]
    word = _degree_word_mod(degrees, list(range(1, len(degrees) + 1)), t)
    if word is None:
        return None
    s = S.evaluate(word)
    assert mono_compose(s, Q1) == mono_compose(s, Q2)
    return word


@dataclass(frozen=True)
class Quotient:
    """The image ``phi(S)``, realising ``S`` modulo the congruence ``s o x = s o y``."""

    source: MonomialSemigroup
    P2: frozenset
    images: tuple[Monomial, ...]
    image: MonomialSemigroup

    def cls(self, Q: Monomial) -> Monomial:
        return phi(Q, self.P2)

    def classes(self) -> dict[Monomial, list[int]]:
        """Image monomial -> 1-based indices of the generators mapped onto it."""
        out: dict[Monomial, list[int]] = {}
        for i, m in enumerate(self.images, 1):
            out.setdefault(m, []).append(i)
        return out


def quotient(S: MonomialSemigroup) -> Quotient:
    prof = profile(S)
    images = tuple(phi(Q, prof.P2) for Q in S)
    image = MonomialSemigroup(dict.fromkeys(images))
    return Quotient(S, prof.P2, images, image)


# -- pigeonhole relations -------------------------------------------------------

@dataclass(frozen=True)
class ReversibilityWitness:
    """Words ``x``, ``y`` over ``(F1, F2)`` with ``x o F1 = y o F2``.

    ``lhs`` and ``rhs`` are the underlying relation, two distinct words with
    equal value (``lhs == x + (1,)`` and ``rhs == y + (2,)``).  ``j1 < j2``
    are the pigeonhole exponents; ``swapped_pair`` records that the search ran
    on ``F1 o F2`` and ``F2 o F1`` because the degrees differ.
    """

    x: Word
    y: Word
    value: Monomial
    j1: int
    j2: int
    swapped_pair: bool

    @property
    def lhs(self) -> Word:
        return self.x + (1,)

    @property
    def rhs(self) -> Word:
        return self.y + (2,)


def _pigeonhole(G1: Monomial, G2: Monomial, limit: int):
    # smallest j2, then smallest j1, with G1^j2 = G1^j1 o G2^(j2-j1)
    powers1 = [None, G1]
    powers2 = [None, G2]
    for j2 in range(2, limit + 1):
        powers1.append(mono_compose(powers1[-1], G1))
        powers2.append(mono_compose(powers2[-1], G2))
        target = powers1[j2]
        for j1 in range(1, j2):
            if mono_compose(powers1[j1], powers2[j2 - j1]) == target:
                return j1, j2
    return None


def _pair_limit(F1: Monomial, F2: Monomial) -> int:
    return lcm(F1.root().order, F2.root().order) + 1


def reversibility_witness(F1: Monomial, F2: Monomial, limit: int | None = None) -> ReversibilityWitness | None:
    """Solve ``X o F1 = Y o F2`` inside ``<F1, F2>`` by the pigeonhole argument.

    For ``F1, F2`` in ``Z^U`` a solution with ``j2 <= lcm(|w1|, |w2|) + 1``
    always exists.  Other coefficients need an explicit search ``limit``;
    ``None`` is returned if it is exhausted.
    """
    if limit is None:
        limit = _pair_limit(F1, F2)
    if F1.degree == F2.degree:
        found = _pigeonhole(F1, F2, limit)
        if found is None:
            return None
        j1, j2 = found
        x = (1,) * (j2 - 1)
        y = (1,) * j1 + (2,) * (j2 - j1 - 1)
        value = evaluate_word(x + (1,), (F1, F2))
        swapped = False
    else:
        G1, G2 = mono_compose(F1, F2), mono_compose(F2, F1)
        if G1 == G2:
            return ReversibilityWitness((2,), (1,), G1, 1, 1, True)
        found = _pigeonhole(G1, G2, limit)
        if found is None:
            return None
        j1, j2 = found
        # (F1 F2)^j2 ends in F2; (F1 F2)^j1 (F2 F1)^(j2-j1) ends in F1
        rhs = (1, 2) * j2
        lhs = (1, 2) * j1 + (2, 1) * (j2 - j1)
        x, y = lhs[:-1], rhs[:-1]
        value = evaluate_word(rhs, (F1, F2))
        swapped = True
    w = ReversibilityWitness(x, y, value, j1, j2, swapped)
    pair = (F1, F2)
    if evaluate_word(w.lhs, pair) != evaluate_word(w.rhs, pair):
        raise AssertionError("pigeonhole relation failed to verify")
    return w


def free_pair_relation(F1: Monomial, F2: Monomial, limit: int | None = None) -> tuple[Word, Word] | None:
    """Two distinct words over ``(F1, F2)`` with equal value, so ``<F1, F2>`` is not free."""
    w = reversibility_witness(F1, F2, limit)
    if w is None:
        return None
    if w.swapped_pair and w.j2 == 1:
        return (1, 2), (2, 1)
    if w.swapped_pair:
        return w.rhs, w.lhs
    return w.lhs, w.rhs


@dataclass(frozen=True)
class CommonMultiple:
    """``value = A_i o Q_i`` for every generator ``Q_i``."""

    value: Monomial
    words: tuple[Word, ...]

    def full_words(self) -> tuple[Word, ...]:
        return tuple(a + (i,) for i, a in enumerate(self.words, 1))


def common_left_multiple(gens: Sequence[Monomial], limit: int | None = None) -> CommonMultiple | None:
    """An element of ``S Q_1 ∩ ... ∩ S Q_k`` built by folding pairwise reversibility witnesses."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    if len(gens) == 1:
        cm = CommonMultiple(mono_compose(gens[0], gens[0]), ((1,),))
        return cm
    if limit is None:
        limit = lcm(*(g.root().order for g in gens)) + 1
    # current common multiple F = word_F evaluated, with A_i o Q_i = F
    F = gens[0]
    word_F: Word = (1,)
    A: list[Word] = [()]
    for k in range(1, len(gens)):
        w = reversibility_witness(F, gens[k], limit)
        if w is None:
            return None
        expand = {1: word_F, 2: (k + 1,)}
        X = tuple(itertools.chain.from_iterable(expand[i] for i in w.x))
        Y = tuple(itertools.chain.from_iterable(expand[i] for i in w.y))
        A = [X + a for a in A] + [Y]
        word_F = Y + (k + 1,)
        F = evaluate_word(word_F, gens)
    cm = CommonMultiple(F, tuple(A))
    for full in cm.full_words():
        if evaluate_word(full, gens) != F:
            raise AssertionError("common left multiple failed to verify")
    return cm


# -- U x N semigroups and indecomposables ----------------------------------------

def in_degree_semigroup(d: int, N_gens: Sequence[int], _memo=None) -> bool:
    """Whether ``d`` is a product of elements of ``N_gens``."""
    memo = {} if _memo is None else _memo
    if d in memo:
        return memo[d]
    ok = d in N_gens or any(d % g == 0 and d // g >= 2 and in_degree_semigroup(d // g, N_gens, memo)
                            for g in N_gens)
    memo[d] = ok
    return ok


def _products(gens: Sequence, bound: int, mul, one):
    """Products of ``gens`` with every exponent in 0..bound and at least one factor."""
    out = []
    for exps in itertools.product(range(bound + 1), repeat=len(gens)):
        if not any(exps):
            continue
        v = one
        for g, e in zip(gens, exps):
            for _ in range(e):
                v = mul(v, g)
        out.append(v)
    return list(dict.fromkeys(out))


def indecomposables(U_gens: Sequence, N_gens: Sequence[int], bound: int) -> list[Monomial]:
    """Elements of ``U x N`` within ``bound`` that are not a composition of two elements.

    ``U`` and ``N`` are the semigroups generated by ``U_gens`` (nonzero
    coefficients) and ``N_gens`` (integers >= 2); every generator appears
    with exponent at most ``bound``.
    """
    U_gens = [CycloNum.coerce(u) for u in U_gens]
    one = CycloNum.rational(1)
    U = _products(U_gens, bound, lambda a, b: a * b, one)
    D = sorted(_products(list(N_gens), bound, lambda a, b: a * b, 1))
    U_set = set(U)
    if one not in U_set:
        raise ValueError("1 must lie in the semigroup generated by U_gens")
    memo: dict = {}

    def in_U(c: CycloNum) -> bool:
        return c in U_set

    out = []
    for d in D:
        splits = [(d1, d // d1) for d1 in range(2, d // 2 + 1)
                  if d % d1 == 0 and in_degree_semigroup(d1, N_gens, memo)
                  and in_degree_semigroup(d // d1, N_gens, memo)]
        for a in U:
            decomposable = False
            for d1, _ in splits:
                # a = a1 * a2^d1 with a1, a2 in U
                if any(in_U(a / a2**d1) for a2 in U):
                    decomposable = True
                    break
            if not decomposable:
                out.append(Monomial(a, d))
    return out
