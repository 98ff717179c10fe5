"""Translation between game plays and reduced coset words, both directions.

A play (i_1, ..., i_t) on the board with sources I corresponds to the word
(i_t, ..., i_1), i.e. the moves reversed, whose element lies in the coset
quotient for J = S \\ I.  The algebraic mirror runs in the root lattice
extended by one formal source vector per element of I; reflecting the
extended state at the fired vertex reproduces the chip update exactly,
coefficient for coefficient.

The engine matrix for a board built from a diagram is that diagram's own
Cartan matrix: with row pairings <beta, a_i^v> = sum_j c_j A[i][j] and
A[i][j] = -arrows(i, j), the reflection update at v adds exactly
arrows(v, u) * c_u per neighbor, which is the fire rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from kostant.diagrams import CartanMatrix, DynkinDiagram, cartan_matrix
from kostant.game import Configuration, GameBoard, fire, legal_moves
from kostant.weyl import (
    InternalInconsistency,
    WeylElement,
    WeylWord,
    element_of,
    is_min_rep,
    is_reduced,
)


class InvalidMoveAt(ValueError):
    """A supposed play fires a vertex that is not sad; carries the 1-based step."""

    def __init__(self, step: int, vertex: int):
        super().__init__(f"move {step} fires vertex {vertex}, which is not sad")
        self.step = step
        self.vertex = vertex


@dataclass(frozen=True)
class ExtendedState:
    """Root-lattice coefficients plus one coefficient per source vector.

    Along any play the source part stays all ones; the invariant is asserted
    by callers rather than assumed.
    """

    root_part: tuple[int, ...]
    source_part: tuple[int, ...]

    def sources_intact(self) -> bool:
        return all(s == 1 for s in self.source_part)


@dataclass(frozen=True)
class PlayWordPair:
    moves: tuple[int, ...]
    word: WeylWord

    def __post_init__(self) -> None:
        if self.word != tuple(reversed(self.moves)):
            raise ValueError("word letters must be the reversed move sequence")

    def to_json(self) -> dict:
        return {"moves": list(self.moves), "word": list(self.word)}


def initial_state(d: DynkinDiagram, sources: frozenset[int]) -> ExtendedState:
    return ExtendedState((0,) * d.rank, (1,) * len(sources))


def extended_pairing(
    s: ExtendedState, i: int, a: CartanMatrix, sources: frozenset[int]
) -> int:
    """Pairing of the extended state with the i-th simple coroot.

    The root part contributes the usual Cartan row; each intact source
    vector pairs to -1 against its own coroot and 0 against the others.
    """
    if not 1 <= i <= len(a):
        raise IndexError(f"vertex {i} out of range 1..{len(a)}")
    root_term = sum(c * x for c, x in zip(s.root_part, a[i - 1]))
    source_term = -1 if i in sources else 0
    return root_term + source_term


def extended_reflect(
    s: ExtendedState, i: int, a: CartanMatrix, sources: frozenset[int]
) -> ExtendedState:
    """Reflect the extended state at vertex i; only coordinate i moves."""
    k = extended_pairing(s, i, a, sources)
    root = list(s.root_part)
    root[i - 1] -= k
    return ExtendedState(tuple(root), s.source_part)


def K_value(
    s: ExtendedState, i: int, a: CartanMatrix, sources: frozenset[int]
) -> int:
    """Move validity indicator: positive exactly when vertex i may fire."""
    return -extended_pairing(s, i, a, sources)


def simulate_word(
    d: DynkinDiagram, sources: frozenset[int], word: WeylWord
) -> Configuration:
    """Run the algebraic mirror of the play whose word is given.

    Letters apply rightmost first (the first move is the last letter).
    Returns the root part, which must equal the board configuration after
    the same moves.
    """
    a = cartan_matrix(d)
    state = initial_state(d, sources)
    for letter in reversed(word):
        state = extended_reflect(state, letter, a, sources)
    if not state.sources_intact():
        raise InternalInconsistency("source coefficients were modified")
    return state.root_part


def simulate_moves(
    d: DynkinDiagram, sources: frozenset[int], moves: tuple[int, ...]
) -> list[Configuration]:
    """Root parts after each prefix of the move sequence (t+1 entries)."""
    a = cartan_matrix(d)
    state = initial_state(d, sources)
    out = [state.root_part]
    for v in moves:
        state = extended_reflect(state, v, a, sources)
        if not state.sources_intact():
            raise InternalInconsistency("source coefficients were modified")
        out.append(state.root_part)
    return out


def verify_play(
    d: DynkinDiagram, sources: frozenset[int], moves: tuple[int, ...]
) -> WeylElement:
    """Check a move sequence is a valid play and return its group element.

    Each step must have a positive K value; the induced word must be reduced
    and its element a minimal coset representative for J = S minus sources.
    The last two always hold for valid plays, so their failure raises
    InternalInconsistency rather than a caller error.
    """
    a = cartan_matrix(d)
    state = initial_state(d, sources)
    for step, v in enumerate(moves, start=1):
        if K_value(state, v, a, sources) <= 0:
            raise InvalidMoveAt(step, v)
        state = extended_reflect(state, v, a, sources)
    word = tuple(reversed(moves))
    if not is_reduced(word, d):
        raise InternalInconsistency(f"play word {word} is not reduced")
    w = element_of(word, d)
    j_set = frozenset(v for v in d.vertices if v not in sources)
    if not is_min_rep(w, j_set, d):
        raise InternalInconsistency(f"play element is not minimal in its coset")
    return w


def enumerate_plays(
    d: DynkinDiagram, sources: frozenset[int], up_to_terminal: bool = False
) -> frozenset[PlayWordPair]:
    """All valid move sequences from the empty configuration.

    With ``up_to_terminal`` only maximal plays (ending where no vertex is
    sad) are returned; otherwise every prefix counts as a play, including
    the empty one.
    """
    board = GameBoard.from_diagram(d, sources, mode="modified")
    out: set[PlayWordPair] = set()

    def dfs(c: Configuration, moves: tuple[int, ...]) -> None:
        sad = legal_moves(board, c)
        if not up_to_terminal or not sad:
            out.add(PlayWordPair(moves, tuple(reversed(moves))))
        for v in sad:
            dfs(fire(board, c, v), moves + (v,))

    dfs(board.zero_configuration(), ())
    return frozenset(out)
