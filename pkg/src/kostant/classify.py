"""Deciding whether the chip game terminates on an arbitrary simple graph.

Two independent routes: a forbidden-shape certificate scan (cycles, degree
four, two branch points, or three arms failing the harmonic inequality
1/(p+1) + 1/(q+1) + 1/(r+1) > 1), and bounded game simulation.  A connected
graph admits no certificate exactly when it is a path or an allowed star,
i.e. one of the A/D/E shapes, where the game provably terminates; the two
routes are cross-validated in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kostant.diagrams import DynkinDiagram
from kostant.game import (
    Configuration,
    GameBoard,
    GameTrace,
    classic_start,
    excited_vertices,
    run,
)


class Disconnected(ValueError):
    """Classification requires a connected graph."""


class NonTerminating(RuntimeError):
    """The base game diverged where a terminal configuration was required."""


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if a == b:
                raise ValueError("loops are not allowed")
            if not (1 <= a <= self.num_vertices and 1 <= b <= self.num_vertices):
                raise ValueError(f"edge ({a}, {b}) out of range")

    @staticmethod
    def from_edge_list(num_vertices: int, edges) -> "SimpleGraph":
        return SimpleGraph(
            num_vertices,
            frozenset((min(a, b), max(a, b)) for a, b in edges),
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {1}
        frontier = [1]
        while frontier:
            v = frontier.pop()
            for u in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == self.num_vertices

    def to_board(self) -> GameBoard:
        return GameBoard.from_edges(self.num_vertices, self.edges)

    def to_json(self) -> dict:
        return {
            "vertices": self.num_vertices,
            "edges": sorted([a, b] for a, b in self.edges),
        }

    @staticmethod
    def from_json(data: dict) -> "SimpleGraph":
        return SimpleGraph.from_edge_list(
            int(data["vertices"]), [(int(a), int(b)) for a, b in data["edges"]]
        )


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class HighDegree:
    vertex: int


@dataclass(frozen=True)
class TwoBranchPoints:
    v1: int
    v2: int


@dataclass(frozen=True)
class ArmInequality:
    p: int
    q: int
    r: int


Certificate = Cycle | HighDegree | TwoBranchPoints | ArmInequality


@dataclass(frozen=True)
class Finite:
    final: Configuration


@dataclass(frozen=True)
class Infinite:
    certificate: Certificate | None


@dataclass(frozen=True)
class Unknown:
    bound: str


FinitenessVerdict = Finite | Infinite | Unknown


def _find_cycle(g: SimpleGraph) -> Cycle | None:
    parent: dict[int, int | None] = {1: None}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                stack.append(u)
            elif parent[v] != u:
                # Walk both endpoints up to the root to extract the cycle.
                def ancestry(x: int) -> list[int]:
                    chain = [x]
                    while parent[chain[-1]] is not None:
                        chain.append(parent[chain[-1]])  # type: ignore[arg-type]
                    return chain
                av, au = ancestry(v), ancestry(u)
                common = next(x for x in av if x in set(au))
                path_v = av[: av.index(common) + 1]
                path_u = au[: au.index(common)]
                return Cycle(tuple(path_v + list(reversed(path_u))))
    return None


def certificate(g: SimpleGraph) -> Certificate | None:
    """First forbidden shape found, or None when the graph is an A/D/E shape."""
    if not g.is_connected():
        raise Disconnected("certificate scan requires a connected graph")
    cyc = _find_cycle(g)
    if cyc is not None:
        return cyc
    for v in range(1, g.num_vertices + 1):
        if g.degree(v) >= 4:
            return HighDegree(v)
    branch = [v for v in range(1, g.num_vertices + 1) if g.degree(v) == 3]
    if len(branch) >= 2:
        return TwoBranchPoints(branch[0], branch[1])
    if len(branch) == 1:
        b = branch[0]
        arms = []
        for start in g.neighbors(b):
            ln, prev, cur = 1, b, start
            while True:
                nxt = [u for u in g.neighbors(cur) if u != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                ln += 1
            arms.append(ln)
        p, q, r = sorted(arms)
        if Fraction(1, p + 1) + Fraction(1, q + 1) + Fraction(1, r + 1) <= 1:
            return ArmInequality(p, q, r)
    return None


def affine_extension(d: DynkinDiagram) -> SimpleGraph:
    """Join a fresh vertex to the excited set of the classic-game terminal.

    Only defined for simply-laced diagrams, whose classic game has a unique
    terminal configuration.  Rank 1 yields the two-vertex single-edge graph,
    which under-represents the doubled-edge affine extension; callers should
    treat that case as flagged.
    """
    if not d.is_simply_laced:
        raise ValueError("affine extension as a simple graph needs a simply-laced diagram")
    board = GameBoard.from_diagram(d)
    trace = run(board, classic_start(board, 1))
    if not isinstance(trace, GameTrace):
        raise NonTerminating(f"classic game on {d.family}_{d.rank} diverged")
    excited = excited_vertices(board, trace.final)
    v0 = d.rank + 1
    edges = set(d.edges()) | {(v, v0) for v in excited}
    return SimpleGraph.from_edge_list(d.rank + 1, edges)


def is_kostant_finite(
    g: SimpleGraph, max_states: int = 10**5, max_chips: int = 10**4
) -> FinitenessVerdict:
    """Certificate first; certificate-free graphs are confirmed by simulation."""
    if not g.is_connected():
        raise Disconnected("classification requires a connected graph")
    cert = certificate(g)
    if cert is not None:
        return Infinite(cert)
    board = g.to_board()
    if g.num_vertices == 0:
        return Finite(())
    result = run(board, classic_start(board, 1), max_steps=max_states, max_chips=max_chips)
    if isinstance(result, GameTrace):
        return Finite(result.final)
    return Unknown(result.bound)


def simulation_verdict(
    g: SimpleGraph, max_steps: int = 3000, max_chips: int = 100
) -> FinitenessVerdict:
    """Pure bounded-simulation route, used to cross-check the certificates.

    The chip bound may sit far below the generic default because terminating
    games on certificate-free graphs never push a vertex past single digits;
    a vertex crossing 100 is decisive divergence at these sizes.
    """
    if not g.is_connected():
        raise Disconnected("classification requires a connected graph")
    board = g.to_board()
    result = run(board, classic_start(board, 1), max_steps=max_steps, max_chips=max_chips)
    if isinstance(result, GameTrace):
        return Finite(result.final)
    return Infinite(None)


def classify_report(g: SimpleGraph) -> dict:
    verdict = is_kostant_finite(g)
    out: dict = {"schema": "kostant/v1", "graph": g.to_json()}
    if isinstance(verdict, Finite):
        out["verdict"] = "finite"
        out["final"] = list(verdict.final)
    elif isinstance(verdict, Infinite):
        out["verdict"] = "infinite"
        cert = verdict.certificate
        if isinstance(cert, Cycle):
            out["certificate"] = {"kind": "cycle", "vertices": list(cert.vertices)}
        elif isinstance(cert, HighDegree):
            out["certificate"] = {"kind": "high-degree", "vertex": cert.vertex}
        elif isinstance(cert, TwoBranchPoints):
            out["certificate"] = {"kind": "two-branch-points", "vertices": [cert.v1, cert.v2]}
        elif isinstance(cert, ArmInequality):
            out["certificate"] = {"kind": "arm-inequality", "arms": [cert.p, cert.q, cert.r]}
        else:
            out["certificate"] = None
    else:
        out["verdict"] = "unknown"
        out["bound"] = verdict.bound
    return out
