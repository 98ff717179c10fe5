"""Finite-type Dynkin diagrams, Cartan matrices, and positive root generation.

Conventions used throughout the package:

* Vertices are numbered 1..rank, left to right along the path; the branch
  vertex of D_n comes before its two short arms, and the branch vertex of
  E_n is vertex 3 with the extra vertex numbered last.
* ``arrows[(i, j)]`` counts the arrows pointing from vertex j to vertex i.
  A double (triple) edge carries 2 (3) arrows into the short-root vertex
  and a single arrow back.  In type B the short root is vertex 1, so
  ``arrows[(1, 2)] == 2``; type C is its reverse.
* The Cartan matrix satisfies ``A[i][i] == 2`` and ``A[i][j] == -arrows[(i, j)]``
  off the diagonal, which reproduces the classical matrices, e.g.
  ``A(B_2) == ((2, -2), (-1, 2))``.
* Root vectors are integer coordinate tuples in the simple-root basis, and
  ``coroot_pairing(beta, i, A)`` is the i-th row of A applied to beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

RootVector = tuple[int, ...]
CartanMatrix = tuple[tuple[int, ...], ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class IllegalRank(ValueError):
    """Raised when a family/rank pair is outside the finite-type table."""


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite-type Dynkin diagram with asymmetric arrow multiplicities."""

    family: str
    rank: int
    arrows: tuple[tuple[tuple[int, int], int], ...]

    @cached_property
    def _arrow_map(self) -> dict[tuple[int, int], int]:
        return dict(self.arrows)

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def arrow(self, i: int, j: int) -> int:
        """Number of arrows pointing from j to i (0 when not adjacent)."""
        return self._arrow_map.get((i, j), 0)

    @cached_property
    def neighbor_map(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for (i, j), n in self.arrows:
            if n > 0 and j not in nbrs[i]:
                nbrs[i].append(j)
        return {v: tuple(sorted(us)) for v, us in nbrs.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_map[v]

    @property
    def is_simply_laced(self) -> bool:
        return all(n == 1 for _, n in self.arrows)

    def edges(self) -> list[tuple[int, int]]:
        """Underlying undirected edges as sorted pairs."""
        return sorted({(min(i, j), max(i, j)) for (i, j), n in self.arrows if n > 0})

    def validate(self) -> None:
        amap = self._arrow_map
        for (i, j), n in self.arrows:
            if not (1 <= i <= self.rank and 1 <= j <= self.rank) or i == j:
                raise ValueError(f"bad arrow endpoints ({i}, {j})")
            if n <= 0:
                raise ValueError("arrow multiplicities must be positive")
            back = amap.get((j, i), 0)
            if back == 0:
                raise ValueError(f"adjacency not symmetric at ({i}, {j})")
            if n * back not in (1, 2, 3):
                raise ValueError(f"arrow product {n * back} out of range at ({i}, {j})")

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "arrows": [[i, j, n] for (i, j), n in self.arrows],
        }

    @staticmethod
    def from_json(data: dict) -> "DynkinDiagram":
        arrows = tuple(sorted(((int(i), int(j)), int(n)) for i, j, n in data["arrows"]))
        d = DynkinDiagram(str(data["family"]), int(data["rank"]), arrows)
        d.validate()
        return d


def _path_arrows(rank: int) -> dict[tuple[int, int], int]:
    arrows: dict[tuple[int, int], int] = {}
    for v in range(1, rank):
        arrows[(v, v + 1)] = 1
        arrows[(v + 1, v)] = 1
    return arrows


def build_diagram(family: str, rank: int) -> DynkinDiagram:
    """Construct the standard diagram of the given family and rank."""
    if family not in _RANK_RANGES:
        raise IllegalRank(f"unknown family {family!r}")
    lo, hi = _RANK_RANGES[family]
    if rank < lo or (hi is not None and rank > hi):
        raise IllegalRank(f"{family}_{rank} is not a finite-type diagram")

    if family == "A":
        arrows = _path_arrows(rank)
    elif family == "B":
        # Short root at vertex 1: the double edge carries 2 arrows into it.
        arrows = _path_arrows(rank)
        arrows[(1, 2)] = 2
    elif family == "C":
        arrows = _path_arrows(rank)
        arrows[(2, 1)] = 2
    elif family == "D":
        arrows = _path_arrows(rank - 2)
        for leaf in (rank - 1, rank):
            arrows[(rank - 2, leaf)] = 1
            arrows[(leaf, rank - 2)] = 1
    elif family == "E":
        arrows = _path_arrows(rank - 1)
        arrows[(3, rank)] = 1
        arrows[(rank, 3)] = 1
    elif family == "F":
        arrows = _path_arrows(4)
        arrows[(3, 2)] = 2
    else:  # G
        arrows = {(1, 2): 3, (2, 1): 1}

    d = DynkinDiagram(family, rank, tuple(sorted(arrows.items())))
    d.validate()
    return d


def cartan_matrix(d: DynkinDiagram) -> CartanMatrix:
    """Cartan matrix of the diagram: 2 on the diagonal, -arrows off it."""
    return tuple(
        tuple(2 if i == j else -d.arrow(i, j) for j in d.vertices) for i in d.vertices
    )


def transpose(a: CartanMatrix) -> CartanMatrix:
    return tuple(tuple(row[i] for row in a) for i in range(len(a)))


_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E", "F": "F", "G": "G"}


def dual(d: DynkinDiagram) -> DynkinDiagram:
    """Diagram with every arrow reversed; its Cartan matrix is the transpose."""
    arrows = tuple(sorted((((j, i), n) for (i, j), n in d.arrows)))
    out = DynkinDiagram(_DUAL_FAMILY[d.family], d.rank, arrows)
    out.validate()
    return out


def coroot_pairing(beta: RootVector, i: int, a: CartanMatrix) -> int:
    """Pairing of beta with the i-th simple coroot (row i of the Cartan matrix)."""
    if not 1 <= i <= len(a):
        raise IndexError(f"vertex {i} out of range 1..{len(a)}")
    row = a[i - 1]
    return sum(c * x for c, x in zip(beta, row))


def simple_reflection(i: int, beta: RootVector, a: CartanMatrix) -> RootVector:
    """Reflect beta through the i-th simple root: beta - <beta, a_i^v> a_i."""
    k = coroot_pairing(beta, i, a)
    out = list(beta)
    out[i - 1] -= k
    return tuple(out)


def simple_root(i: int, rank: int) -> RootVector:
    return tuple(1 if v == i else 0 for v in range(1, rank + 1))


@lru_cache(maxsize=None)
def positive_roots(d: DynkinDiagram) -> frozenset[RootVector]:
    """All positive roots, as the closure of the simple roots under reflections.

    Reflections are applied breadth-first starting from the simple roots;
    images with a negative coordinate are discarded (they are negatives of
    roots already seen).  Terminates exactly because the diagram is finite
    type.
    """
    a = cartan_matrix(d)
    frontier = [simple_root(i, d.rank) for i in d.vertices]
    found: set[RootVector] = set(frontier)
    while frontier:
        beta = frontier.pop()
        for i in d.vertices:
            image = simple_reflection(i, beta, a)
            if image not in found and all(c >= 0 for c in image):
                found.add(image)
                frontier.append(image)
    return frozenset(found)


def height(beta: RootVector) -> int:
    return sum(beta)
