"""Weyl group elements via their action on the root lattice.

A word is a tuple of generator subscripts.  Words multiply like the written
expression: the rightmost letter acts first, so ``element_of((1, 2), d)`` is
the map "reflect at 2, then at 1".  Appending a game move therefore
multiplies on the left; the automaton and coset machinery multiply on the
right.  Elements are identified by the integer matrix of their action in
simple-root coordinates, which is faithful for every finite Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from kostant.diagrams import (
    CartanMatrix,
    DynkinDiagram,
    RootVector,
    cartan_matrix,
    positive_roots,
    simple_root,
)

WeylWord = tuple[int, ...]
ParabolicSubset = frozenset[int]

Matrix = tuple[tuple[int, ...], ...]


class NotReduced(ValueError):
    """Input word was required to be reduced but is not."""


class LetterOutsideJ(ValueError):
    """A word letter falls outside the allowed generator subset."""


class InternalInconsistency(AssertionError):
    """Two provably equivalent characterizations disagreed; implementation bug."""


def _identity(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


@dataclass(frozen=True)
class WeylElement:
    """Group element as the matrix of its root-lattice action (columns are
    images of the simple roots)."""

    matrix: Matrix

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, beta: RootVector) -> RootVector:
        return tuple(sum(x * c for x, c in zip(row, beta)) for row in self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(_matmul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.rank)


def reflection_matrix(i: int, a: CartanMatrix) -> Matrix:
    rank = len(a)
    rows = []
    for r in range(rank):
        if r == i - 1:
            rows.append(tuple((1 if c == r else 0) - a[r][c] for c in range(rank)))
        else:
            rows.append(tuple(1 if c == r else 0 for c in range(rank)))
    return tuple(rows)


def identity_element(d: DynkinDiagram) -> WeylElement:
    return WeylElement(_identity(d.rank))


def generator(i: int, d: DynkinDiagram) -> WeylElement:
    return WeylElement(reflection_matrix(i, cartan_matrix(d)))


def element_of(word: WeylWord, d: DynkinDiagram) -> WeylElement:
    """Product of simple reflections; the rightmost letter applies first."""
    a = cartan_matrix(d)
    m = _identity(d.rank)
    for letter in word:
        if not 1 <= letter <= d.rank:
            raise IndexError(f"letter {letter} out of range 1..{d.rank}")
        m = _matmul(m, reflection_matrix(letter, a))
    return WeylElement(m)


def _is_negative(beta: RootVector) -> bool:
    return all(c <= 0 for c in beta) and any(c < 0 for c in beta)


def inversion_set(w: WeylElement, d: DynkinDiagram) -> frozenset[RootVector]:
    """Positive roots sent negative by w."""
    return frozenset(
        alpha for alpha in positive_roots(d) if _is_negative(w.apply(alpha))
    )


def length(w: WeylElement, d: DynkinDiagram) -> int:
    return len(inversion_set(w, d))


def sends_simple_positive(w: WeylElement, j: int, d: DynkinDiagram) -> bool:
    """True iff w(alpha_j) > 0, i.e. right-multiplying by s_j increases length."""
    image = w.apply(simple_root(j, d.rank))
    return all(c >= 0 for c in image)


def is_reduced(word: WeylWord, d: DynkinDiagram) -> bool:
    """True iff each prefix extension strictly increases length."""
    p = identity_element(d)
    for letter in word:
        if not 1 <= letter <= d.rank:
            raise IndexError(f"letter {letter} out of range 1..{d.rank}")
        if not sends_simple_positive(p, letter, d):
            return False
        p = p * generator(letter, d)
    return True


@dataclass(frozen=True)
class GroupCatalog:
    """Full enumeration of a Weyl group with lengths and one shortest word each."""

    diagram: DynkinDiagram
    elements: tuple[WeylElement, ...]
    lengths: dict[WeylElement, int]
    shortest_words: dict[WeylElement, WeylWord]

    @property
    def order(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=None)
def enumerate_group(d: DynkinDiagram) -> GroupCatalog:
    """BFS from the identity over right multiplication; level equals length."""
    gens = {i: generator(i, d) for i in d.vertices}
    e = identity_element(d)
    lengths: dict[WeylElement, int] = {e: 0}
    words: dict[WeylElement, WeylWord] = {e: ()}
    order: list[WeylElement] = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i, g in gens.items():
                ws = w * g
                if ws not in lengths:
                    lengths[ws] = lengths[w] + 1
                    words[ws] = words[w] + (i,)
                    order.append(ws)
                    nxt.append(ws)
        frontier = nxt
    return GroupCatalog(d, tuple(order), lengths, words)


def group_length(w: WeylElement, d: DynkinDiagram) -> int:
    """Length via the catalog; cheaper than inversion counting in bulk loops."""
    return enumerate_group(d).lengths[w]


def phi_plus_j(j_set: ParabolicSubset, d: DynkinDiagram) -> frozenset[RootVector]:
    """Positive roots supported on the subset J."""
    return frozenset(
        alpha
        for alpha in positive_roots(d)
        if all(c == 0 for v, c in zip(d.vertices, alpha) if v not in j_set)
    )


def minimal_coset_reps(d: DynkinDiagram, j_set: ParabolicSubset) -> frozenset[WeylElement]:
    """Minimal-length representatives of the cosets modulo the J-parabolic."""
    cat = enumerate_group(d)
    return frozenset(
        w
        for w in cat.elements
        if all(sends_simple_positive(w, j, d) for j in j_set)
    )


def is_min_rep(w: WeylElement, j_set: ParabolicSubset, d: DynkinDiagram) -> bool:
    """Minimal-representative test, evaluated through both characterizations.

    The length route checks l(w s_j) > l(w) for every j in J; the inversion
    route checks that no inversion of w lies in the J-subsystem.  Both must
    agree; disagreement signals a bug rather than a caller error.
    """
    by_length = all(sends_simple_positive(w, j, d) for j in j_set)
    inv = inversion_set(w, d)
    by_inversions = inv.isdisjoint(phi_plus_j(j_set, d))
    if by_length != by_inversions:
        raise InternalInconsistency(
            f"W^J characterizations disagree for J={sorted(j_set)}: "
            f"length says {by_length}, inversions say {by_inversions}"
        )
    return by_length


def parabolic_decompose(
    w: WeylElement, j_set: ParabolicSubset, d: DynkinDiagram
) -> tuple[WeylElement, WeylElement]:
    """Split w as (coset representative, J-part) with additive length."""
    u = w
    tail: list[int] = []
    while True:
        j = next(
            (j for j in sorted(j_set) if not sends_simple_positive(u, j, d)), None
        )
        if j is None:
            break
        u = u * generator(j, d)
        tail.append(j)
    w_j = element_of(tuple(reversed(tail)), d)
    return u, w_j


def longest_element(j_set: ParabolicSubset, d: DynkinDiagram) -> WeylElement:
    """Longest element of the J-parabolic, built by greedy ascent."""
    w = identity_element(d)
    while True:
        j = next((j for j in sorted(j_set) if sends_simple_positive(w, j, d)), None)
        if j is None:
            return w
        w = w * generator(j, d)


def complete_to_longest(
    word: WeylWord, j_set: ParabolicSubset, d: DynkinDiagram
) -> WeylWord:
    """Extend a reduced J-word to a reduced word for the longest J-element.

    Greedy: keep appending the lowest length-increasing generator of J.
    The input word is a prefix of the result.
    """
    for letter in word:
        if letter not in j_set:
            raise LetterOutsideJ(f"letter {letter} not in J={sorted(j_set)}")
    if not is_reduced(word, d):
        raise NotReduced(f"word {word} is not reduced")
    out = list(word)
    w = element_of(word, d)
    while True:
        j = next((j for j in sorted(j_set) if sends_simple_positive(w, j, d)), None)
        if j is None:
            return tuple(out)
        out.append(j)
        w = w * generator(j, d)


def reduced_words(w: WeylElement, d: DynkinDiagram) -> frozenset[WeylWord]:
    """All reduced words for w, by peeling right descents (brute force)."""

    @lru_cache(maxsize=None)
    def rec(u: WeylElement) -> frozenset[WeylWord]:
        if u.is_identity():
            return frozenset({()})
        words = set()
        for j in d.vertices:
            if not sends_simple_positive(u, j, d):
                for prefix in rec(u * generator(j, d)):
                    words.add(prefix + (j,))
        return frozenset(words)

    result = rec(w)
    rec.cache_clear()
    return result


def all_reduced_words_of_set(
    elements: frozenset[WeylElement], d: DynkinDiagram
) -> frozenset[WeylWord]:
    """Union of the reduced words of every element in the set."""
    words: set[WeylWord] = set()
    cache: dict[WeylElement, frozenset[WeylWord]] = {}

    def rec(u: WeylElement) -> frozenset[WeylWord]:
        if u in cache:
            return cache[u]
        if u.is_identity():
            out = frozenset({()})
        else:
            acc = set()
            for j in d.vertices:
                if not sends_simple_positive(u, j, d):
                    for prefix in rec(u * generator(j, d)):
                        acc.add(prefix + (j,))
            out = frozenset(acc)
        cache[u] = out
        return out

    for w in elements:
        words |= rec(w)
    return frozenset(words)
