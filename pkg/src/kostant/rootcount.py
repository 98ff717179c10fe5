"""Root-sum identities computed from single-source games.

The terminal configuration of the game with one source at vertex j is the
root part of w(beta_j) for the longest representative w modulo the parabolic
on the remaining vertices.  Summing these terminals over all j recovers the
sum of all positive roots; with every source present the terminal equals
that same sum directly (simply-laced case), giving the per-vertex additivity
identity.

The positive roots are also partitioned by peeling vertices in index order:
the block of vertex j collects the roots supported on {j, ..., rank} whose
support contains j.  Each block is the inversion set of the longest minimal
representative inside the corresponding tail parabolic, the blocks are
pairwise disjoint, and their union is all of the positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass

from kostant.diagrams import DynkinDiagram, RootVector, positive_roots
from kostant.game import Configuration, GameBoard, GameTrace, run
from kostant.weyl import inversion_set, longest_element, minimal_coset_reps


class NotSimplyLaced(ValueError):
    """The requested identity is only asserted for simply-laced diagrams."""


@dataclass(frozen=True)
class HeightProfile:
    """Per-vertex terminal configurations and their chip heights."""

    finals: dict[int, Configuration]
    heights: dict[int, int]


def single_vertex_final(d: DynkinDiagram, j: int) -> Configuration:
    """Terminal configuration of the game with a single source at j."""
    board = GameBoard.from_diagram(d, {j})
    trace = run(board, board.zero_configuration())
    if not isinstance(trace, GameTrace):
        raise AssertionError(f"single-source game on {d.family}_{d.rank} diverged")
    return trace.final


def height_profile(d: DynkinDiagram) -> HeightProfile:
    finals = {j: single_vertex_final(d, j) for j in d.vertices}
    return HeightProfile(finals, {j: sum(c) for j, c in finals.items()})


def positive_root_sum(d: DynkinDiagram) -> RootVector:
    """Sum of all positive roots, computed by summing per-vertex terminals."""
    finals = [single_vertex_final(d, j) for j in d.vertices]
    return tuple(sum(col) for col in zip(*finals))


def direct_positive_root_sum(d: DynkinDiagram) -> RootVector:
    """Independent route: add up the generated positive roots."""
    return tuple(sum(col) for col in zip(*sorted(positive_roots(d))))


def inversion_partition(d: DynkinDiagram) -> dict[int, frozenset[RootVector]]:
    """Partition of the positive roots into per-vertex inversion-set blocks.

    Block j holds the roots whose support starts at j (in vertex order);
    equivalently the inversion set, inside the tail sub-diagram on vertices
    j..rank, of the longest representative modulo the parabolic on
    j+1..rank, re-embedded in the ambient coordinates.
    """
    blocks: dict[int, frozenset[RootVector]] = {}
    for j in d.vertices:
        blocks[j] = frozenset(
            alpha
            for alpha in positive_roots(d)
            if alpha[j - 1] > 0 and all(alpha[v - 1] == 0 for v in range(1, j))
        )
    return blocks


def coset_inversion_block(d: DynkinDiagram, j: int) -> frozenset[RootVector]:
    """Inversion set of the longest representative modulo the parabolic that
    omits j; equals the positive roots whose support contains j."""
    j_set = frozenset(v for v in d.vertices if v != j)
    reps = minimal_coset_reps(d, j_set)
    cat_longest = max(reps, key=lambda w: len(inversion_set(w, d)))
    return inversion_set(cat_longest, d)


def full_modification_identity(d: DynkinDiagram) -> bool:
    """Terminal of the all-sources game equals the per-vertex terminal sum."""
    if not d.is_simply_laced:
        raise NotSimplyLaced(f"{d.family}_{d.rank} is multiply laced")
    board = GameBoard.from_diagram(d, set(d.vertices))
    trace = run(board, board.zero_configuration())
    assert isinstance(trace, GameTrace)
    return trace.final == positive_root_sum(d)


def rootsum_report(d: DynkinDiagram) -> dict:
    profile = height_profile(d)
    game_sum = positive_root_sum(d)
    direct = direct_positive_root_sum(d)
    return {
        "schema": "kostant/v1",
        "diagram": d.to_json(),
        "per_vertex": {str(j): list(c) for j, c in profile.finals.items()},
        "heights": {str(j): h for j, h in profile.heights.items()},
        "sum": list(game_sum),
        "direct": list(direct),
        "match": game_sum == direct,
    }
