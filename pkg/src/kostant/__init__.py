"""Kostant game workbench: Dynkin boards, Weyl words, automata, tableaux."""

from kostant.diagrams import (
    DynkinDiagram,
    IllegalRank,
    build_diagram,
    cartan_matrix,
    coroot_pairing,
    dual,
    positive_roots,
    simple_reflection,
)
from kostant.game import GameBoard, GameTrace, VertexStatus

__all__ = [
    "DynkinDiagram",
    "GameBoard",
    "GameTrace",
    "IllegalRank",
    "VertexStatus",
    "build_diagram",
    "cartan_matrix",
    "coroot_pairing",
    "dual",
    "positive_roots",
    "simple_reflection",
]
