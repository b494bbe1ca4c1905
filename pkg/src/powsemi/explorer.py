"""Bounded-depth word enumeration over series generators.

Every word is evaluated on a sliding window: the coefficients from the order
of its value up to ``order + window``.  Because composing with a series of
order ``b`` keeps this relative window intact, all words are keyed on the
same number of trusted coefficients.  Equal keys are candidate relations;
:meth:`WordTable.verify` settles them by exact polynomial evaluation when
that is affordable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cyclo import lcm
from .errors import ResourceLimit
from .series import Comparison, Series, compose, equals, order, power_table

__all__ = [
    "WordTable",
    "Relation",
    "enumerate_words",
    "evaluate",
    "evaluate_windowed",
    "exact_cost",
    "reversibility_search",
    "free_pair_evidence",
    "RelationFound",
    "NoRelationUpTo",
]

Word = tuple

MAX_WORDS = 200_000
MAX_EXACT_TERMS = 40_000


def _window_of(gens: Sequence[Series], precision: int) -> int:
    """Number of coefficients above the order that every word value can trust."""
    w = precision - 1
    for g in gens:
        if not g.exact:
            w = min(w, g.precision - order(g))
    if w < 0:
        raise ValueError("generator precision is below its order")
    return w


def _trim(s: Series, window: int) -> Series:
    return s.truncate(order(s) + window)


def evaluate_windowed(word: Word, gens: Sequence[Series], window: int) -> Series:
    value = _trim(gens[word[-1] - 1], window)
    for i in reversed(word[:-1]):
        g = gens[i - 1]
        value = compose(g, value, cap=order(g) * order(value) + window)
        value = _trim(value, window)
    return value


def exact_cost(word: Word, gens: Sequence[Series]) -> int:
    """Upper bound on the number of terms of the exact value of ``word``."""
    cost = 1
    for i in word:
        cost *= max(len(gens[i - 1].coeffs), gens[i - 1].degree if len(gens[i - 1].coeffs) > 1 else 1)
        if cost > 10**12:
            break
    return cost


def evaluate(word: Word, gens: Sequence[Series], window: int | None = None) -> Series:
    """Value of ``word``; exact when the generators are, unless ``window`` is given."""
    if window is not None:
        return evaluate_windowed(word, gens, window)
    value = gens[word[-1] - 1]
    for i in reversed(word[:-1]):
        value = compose(gens[i - 1], value)
    return value


def compare_words(w1: Word, w2: Word, gens: Sequence[Series], precision: int,
                  max_terms: int = MAX_EXACT_TERMS) -> Comparison:
    """Compare two word values exactly if affordable, otherwise on the trusted window."""
    if all(g.exact for g in gens) and max(exact_cost(w1, gens), exact_cost(w2, gens)) <= max_terms:
        return equals(evaluate(w1, gens), evaluate(w2, gens))
    window = _window_of(gens, precision)
    a, b = evaluate_windowed(w1, gens, window), evaluate_windowed(w2, gens, window)
    return equals(a, b)


@dataclass
class Relation:
    words: tuple[Word, Word]
    status: Comparison

    @property
    def exact(self) -> bool:
        return self.status.status == "exact"


@dataclass
class WordTable:
    """All words of length <= depth, grouped by the canonical key of their value."""

    generators: tuple[Series, ...]
    depth: int
    precision: int
    window: int
    conductor: int
    entries: dict = field(default_factory=dict)  # key -> list of words
    values: dict = field(default_factory=dict)   # key -> windowed value
    listing: list = field(default_factory=list)  # (word, key) in enumeration order

    def key(self, s: Series) -> tuple:
        o = order(s)
        M = self.conductor
        coords = tuple((n - o, c.canonical_key()) if M % c.m else (n - o, c.lift(M), c.den)
                       for n, c in s.coeffs.items())
        return (s.exact, o, s.precision - o, coords)

    def words(self):
        return [w for w, _ in self.listing]

    def collisions(self) -> list[list[Word]]:
        return [ws for ws in self.entries.values() if len(ws) > 1]

    def verify(self, w1: Word, w2: Word, max_terms: int = MAX_EXACT_TERMS) -> Comparison:
        return compare_words(w1, w2, self.generators, self.precision, max_terms)

    def lookup(self, word: Word) -> Series:
        return self.values[dict(self.listing)[word]]


def enumerate_words(generators: Sequence[Series], depth: int, precision: int = 16,
                    max_words: int = MAX_WORDS) -> WordTable:
    """Evaluate every word of length <= ``depth`` in (length, lexicographic) order."""
    gens = tuple(generators)
    for g in gens:
        if 0 in g.coeffs or order(g) < 1:
            raise ValueError("generators must have zero constant term")
    total = sum(len(gens) ** l for l in range(1, depth + 1))
    if total > max_words:
        raise ResourceLimit(f"{total} words exceed the cap of {max_words}")
    window = _window_of(gens, precision)
    M = lcm(*(g.conductor() for g in gens))
    table = WordTable(gens, depth, precision, window, M)
    prev: list[tuple[Word, Series]] = []
    for i, g in enumerate(gens, 1):
        prev.append(((i,), _trim(g, window)))
    for length in range(1, depth + 1):
        if length > 1:
            # powers of each value are shared by all generators
            top = max(order(g) for g in gens)
            exps = {n for g in gens for n in g.coeffs if n >= 1}
            results = {}
            for w, v in prev:
                o = order(v)
                cap = top * o + window
                powers = power_table(v, [n for n in exps if n * o <= cap], cap)
                for i, g in enumerate(gens, 1):
                    val = compose(g, v, cap=order(g) * o + window, powers=powers)
                    results[(i,) + w] = _trim(val, window)
            prev = [((i,) + w, results[(i,) + w]) for i in range(1, len(gens) + 1) for w, _ in prev]
        for w, v in prev:
            k = table.key(v)
            table.entries.setdefault(k, []).append(w)
            table.values.setdefault(k, v)
            table.listing.append((w, k))
    return table


def reversibility_search(a: Series, b: Series, generators: Sequence[Series], depth: int,
                         precision: int = 16) -> tuple[Word, Word, Comparison] | None:
    """Words ``x, y`` with ``x o a = y o b``, searched in enumeration order."""
    table = enumerate_words(generators, depth, precision)
    window = min(table.window, _window_of([a, b], precision))
    gens = table.generators

    def side(s: Series):
        out = {}
        for w, k in table.listing:
            v = table.values[k]
            val = compose(v, s, cap=order(v) * order(s) + window)
            out.setdefault(table.key(_trim(val, window)), []).append(w)
        return out

    right = side(b)
    left_words = [(w, k) for w, k in table.listing]
    for x, kx in left_words:
        v = table.values[kx]
        val = _trim(compose(v, a, cap=order(v) * order(a) + window), window)
        for y in right.get(table.key(val), ()):
            status = _compare_extended(x, a, y, b, gens, precision)
            if status:
                return x, y, status
    return None


def _compare_extended(x: Word, a: Series, y: Word, b: Series, gens, precision) -> Comparison:
    ext = tuple(gens) + (a, b)
    ia, ib = len(gens) + 1, len(gens) + 2
    return compare_words(x + (ia,), y + (ib,), ext, precision)


@dataclass(frozen=True)
class RelationFound:
    words: tuple[Word, Word]
    status: Comparison


@dataclass(frozen=True)
class NoRelationUpTo:
    depth: int


def free_pair_evidence(F1: Series, F2: Series, depth: int, precision: int = 16):
    """First pair of distinct words over ``(F1, F2)`` with equal value, in enumeration order."""
    table = enumerate_words((F1, F2), depth, precision)
    seen: dict = {}
    for w, k in table.listing:
        for earlier in seen.get(k, ()):
            status = table.verify(earlier, w)
            if status:
                return RelationFound((earlier, w), status)
        seen.setdefault(k, []).append(w)
    return NoRelationUpTo(depth)
