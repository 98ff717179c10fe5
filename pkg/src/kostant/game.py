"""The chip game on diagram boards: classic, multiply-laced, and multi-source.

A vertex v holding c_v chips compares 2*c_v against the weighted neighbor
sum plus 1 when v carries a permanent source.  Sad vertices (strictly below)
may fire, replacing c_v by the neighbor sum minus c_v; the source chip never
moves and contributes the constant +1.  All comparisons are exact integer
arithmetic, never halved.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from kostant.diagrams import DynkinDiagram, dual, positive_roots

Configuration = tuple[int, ...]


class IllegalMove(ValueError):
    """Attempt to fire a vertex that is not sad."""


class ModeMismatch(ValueError):
    """Operation requires the other game mode."""


class LimitExceeded(RuntimeError):
    """State-space exploration hit a limit; partial results attached."""


class VertexStatus(enum.Enum):
    HAPPY = "happy"
    SAD = "sad"
    EXCITED = "excited"


@dataclass(frozen=True)
class GameBoard:
    """Board geometry: per-vertex neighbor weights plus permanent sources.

    ``weights[v]`` lists (neighbor, multiplicity) pairs, where multiplicity
    counts arrows pointing from the neighbor into v.  Classic boards carry
    no sources; modified boards mark the source vertices in ``sources``.
    """

    num_vertices: int
    weights: tuple[tuple[tuple[int, int], ...], ...]
    sources: frozenset[int]
    mode: str  # "classic" | "modified"
    diagram: DynkinDiagram | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("classic", "modified"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "classic" and self.sources:
            raise ValueError("classic boards carry no sources")
        for v in self.sources:
            if not 1 <= v <= self.num_vertices:
                raise ValueError(f"source vertex {v} out of range")

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def source_term(self, v: int) -> int:
        return 1 if v in self.sources else 0

    @staticmethod
    def from_diagram(
        d: DynkinDiagram, sources: Iterable[int] = (), mode: str | None = None
    ) -> "GameBoard":
        src = frozenset(sources)
        weights = tuple(
            tuple((u, d.arrow(v, u)) for u in d.neighbors(v)) for v in d.vertices
        )
        return GameBoard(
            num_vertices=d.rank,
            weights=weights,
            sources=src,
            mode=mode or ("modified" if src else "classic"),
            diagram=d,
        )

    @staticmethod
    def from_dual(
        d: DynkinDiagram, sources: Iterable[int] = (), mode: str | None = None
    ) -> "GameBoard":
        """Board of the arrow-reversed diagram; kept for callers that need
        the other side of the root/co-root duality."""
        return GameBoard.from_diagram(dual(d), sources, mode)

    @staticmethod
    def from_edges(
        num_vertices: int, edges: Iterable[tuple[int, int]], sources: Iterable[int] = ()
    ) -> "GameBoard":
        """Simply-laced board over an arbitrary simple graph."""
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, num_vertices + 1)}
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            nbrs[a].add(b)
            nbrs[b].add(a)
        src = frozenset(sources)
        weights = tuple(
            tuple((u, 1) for u in sorted(nbrs[v])) for v in range(1, num_vertices + 1)
        )
        return GameBoard(
            num_vertices=num_vertices,
            weights=weights,
            sources=src,
            mode="modified" if src else "classic",
        )

    def zero_configuration(self) -> Configuration:
        return (0,) * self.num_vertices


def weighted_neighbor_sum(board: GameBoard, c: Configuration, v: int) -> int:
    return sum(n * c[u - 1] for u, n in board.weights[v - 1]) + board.source_term(v)


def status(board: GameBoard, c: Configuration, v: int) -> VertexStatus:
    """Vertex state from the exact comparison 2*c_v <=> weighted sum."""
    lhs = 2 * c[v - 1]
    rhs = weighted_neighbor_sum(board, c, v)
    if lhs < rhs:
        return VertexStatus.SAD
    if lhs > rhs:
        return VertexStatus.EXCITED
    return VertexStatus.HAPPY


def legal_moves(board: GameBoard, c: Configuration) -> tuple[int, ...]:
    """The sad vertices; sources themselves never appear, they sit off-board."""
    return tuple(v for v in board.vertices if status(board, c, v) is VertexStatus.SAD)


def is_terminal(board: GameBoard, c: Configuration) -> bool:
    return not legal_moves(board, c)


def fire(board: GameBoard, c: Configuration, v: int) -> Configuration:
    """Fire a sad vertex: c_v becomes the weighted neighbor sum minus c_v."""
    if status(board, c, v) is not VertexStatus.SAD:
        raise IllegalMove(f"vertex {v} is not sad in {c}")
    return fire_unchecked(board, c, v)


def fire_unchecked(board: GameBoard, c: Configuration, v: int) -> Configuration:
    out = list(c)
    out[v - 1] = -c[v - 1] + weighted_neighbor_sum(board, c, v)
    return tuple(out)


def classic_start(board: GameBoard, v0: int) -> Configuration:
    if board.mode != "classic":
        raise ModeMismatch("start chips belong to the classic game")
    if not 1 <= v0 <= board.num_vertices:
        raise ValueError(f"vertex {v0} out of range")
    return tuple(1 if v == v0 else 0 for v in board.vertices)


def excited_vertices(board: GameBoard, c: Configuration) -> tuple[int, ...]:
    return tuple(
        v for v in board.vertices if status(board, c, v) is VertexStatus.EXCITED
    )


@dataclass(frozen=True)
class GameTrace:
    board: GameBoard
    start: Configuration
    moves: tuple[int, ...]
    states: tuple[Configuration, ...]

    @property
    def final(self) -> Configuration:
        return self.states[-1]

    def to_json(self) -> dict:
        return {
            "schema": "kostant/v1",
            "start": list(self.start),
            "moves": list(self.moves),
            "states": [list(s) for s in self.states],
        }


@dataclass(frozen=True)
class Diverged:
    """A play tripped a divergence bound instead of terminating."""

    bound: str  # "step-limit" | "chip-bound"
    trace: GameTrace


def default_chip_bound(board: GameBoard) -> int:
    if board.diagram is not None:
        return 4 * len(positive_roots(board.diagram))
    return 10**6


Strategy = Callable[[GameBoard, Configuration, Sequence[int]], int]


def first_sad_strategy(
    board: GameBoard, c: Configuration, moves: Sequence[int]
) -> int:
    return min(moves)


def random_strategy(seed: int) -> Strategy:
    rng = random.Random(seed)

    def pick(board: GameBoard, c: Configuration, moves: Sequence[int]) -> int:
        return rng.choice(sorted(moves))

    return pick


def run(
    board: GameBoard,
    start: Configuration,
    strategy: Strategy = first_sad_strategy,
    max_steps: int | None = None,
    max_chips: int | None = None,
) -> GameTrace | Diverged:
    """Play until no vertex is sad, or a divergence bound trips."""
    if max_chips is None:
        max_chips = default_chip_bound(board)
    if max_steps is None:
        max_steps = 10**6
    c = start
    moves: list[int] = []
    states: list[Configuration] = [c]
    while True:
        sad = legal_moves(board, c)
        if not sad:
            return GameTrace(board, start, tuple(moves), tuple(states))
        if len(moves) >= max_steps:
            return Diverged("step-limit", GameTrace(board, start, tuple(moves), tuple(states)))
        v = strategy(board, c, sad)
        c = fire(board, c, v)
        if max(c) > max_chips:
            states.append(c)
            moves.append(v)
            return Diverged("chip-bound", GameTrace(board, start, tuple(moves), tuple(states)))
        moves.append(v)
        states.append(c)


@dataclass
class ConfigurationGraph:
    """Reachable configurations with fired-vertex edge labels; graded by the
    total chip count, hence acyclic."""

    board: GameBoard
    initial: Configuration
    nodes: set[Configuration] = field(default_factory=set)
    edges: list[tuple[Configuration, int, Configuration]] = field(default_factory=list)
    truncated: bool = False

    @property
    def sinks(self) -> frozenset[Configuration]:
        with_out = {src for src, _, _ in self.edges}
        return frozenset(n for n in self.nodes if n not in with_out)

    def to_dot(self) -> str:
        def label(c: Configuration) -> str:
            return "(" + ",".join(str(x) for x in c) + ")"

        lines = ["digraph configurations {"]
        for n in sorted(self.nodes):
            lines.append(f'  "{label(n)}";')
        for src, v, dst in self.edges:
            lines.append(f'  "{label(src)}" -> "{label(dst)}" [label="{v}"];')
        lines.append("}")
        return "\n".join(lines)


def explore(
    board: GameBoard,
    start: Configuration,
    max_states: int = 10**6,
    max_chips: int | None = None,
) -> ConfigurationGraph:
    """Breadth-first walk over every configuration reachable by legal fires.

    Raises LimitExceeded with the partial graph attached when a limit trips.
    """
    if max_chips is None:
        max_chips = default_chip_bound(board)
    graph = ConfigurationGraph(board, start)
    graph.nodes.add(start)
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for v in legal_moves(board, c):
                image = fire_unchecked(board, c, v)
                graph.edges.append((c, v, image))
                if image in graph.nodes:
                    continue
                if max(image) > max_chips or len(graph.nodes) >= max_states:
                    graph.truncated = True
                    exc = LimitExceeded(
                        "configuration space exceeds limits "
                        f"(states={len(graph.nodes)}, chip={max(image)})"
                    )
                    exc.partial = graph  # type: ignore[attr-defined]
                    raise exc
                graph.nodes.add(image)
                nxt.append(image)
        frontier = nxt
    return graph


def braid_steps(board: GameBoard, i: int, j: int) -> int:
    """Length of the converging fire sequences for the pair (i, j).

    Non-adjacent vertices commute (2 steps: the diamond).  A single edge
    needs the 3-step hexagon; double and triple edges need 4 and 6 steps,
    matching the braid order of the underlying reflections.
    """
    into_i = next((n for u, n in board.weights[i - 1] if u == j), 0)
    into_j = next((n for u, n in board.weights[j - 1] if u == i), 0)
    return {0: 2, 1: 3, 2: 4, 3: 6}[into_i * into_j]


def check_local_confluence(
    board: GameBoard, c: Configuration, i: int, j: int
) -> bool:
    """Braid identity at c, evaluated as a pure algebraic identity.

    Fires the alternating sequences i,j,i,... and j,i,j,... for the braid
    length of the pair and compares results.  Status preconditions are
    deliberately not required.
    """
    if i == j:
        raise ValueError("need two distinct vertices")
    steps = braid_steps(board, i, j)
    left, right = c, c
    for k in range(steps):
        left = fire_unchecked(board, left, i if k % 2 == 0 else j)
        right = fire_unchecked(board, right, j if k % 2 == 0 else i)
    return left == right
