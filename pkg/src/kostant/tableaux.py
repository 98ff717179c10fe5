"""Standard Young tableaux traced out by single-source plays on path diagrams.

On the path diagram with n-1 vertices and the source at vertex k, the play
elements are the permutations of n with at most one descent, located at k.
Each such permutation owns a partition shape inside the k x (n-k) rectangle,
and each play fills that shape one cell per move: the move at vertex v
writes the step number into the first free cell of the diagonal c - r
= v - k whose left and upper neighbors are already filled.  Distinct
terminal plays fill the full rectangle in all standard ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from kostant.correspondence import InvalidMoveAt, verify_play
from kostant.diagrams import build_diagram
from kostant.game import GameBoard, fire, legal_moves

Partition = tuple[int, ...]


class NotGrassmannian(ValueError):
    """The word's permutation has a descent away from the marked position."""


class InvalidPlay(ValueError):
    """The move sequence is not a valid play for the given board."""


class PlacementImpossible(RuntimeError):
    """No cell of the target diagonal can legally receive the next entry."""


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def ascii(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in self.rows
        )


def is_standard(t: Tableau) -> bool:
    """Strict row/column increase plus the entries being exactly 1..size."""
    entries = [x for row in t.rows for x in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in t.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for r in range(1, len(t.rows)):
        upper, lower = t.rows[r - 1], t.rows[r]
        if len(lower) > len(upper):
            return False
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def _one_line_from_moves(moves: tuple[int, ...], n: int) -> list[int]:
    """One-line permutation of the element built by the play, left-multiplying
    the transposition (v, v+1) per move."""
    values = list(range(1, n + 1))
    for v in moves:
        for idx, x in enumerate(values):
            if x == v:
                values[idx] = v + 1
            elif x == v + 1:
                values[idx] = v
    return values


def _one_line_from_word(word: tuple[int, ...], n: int) -> list[int]:
    return _one_line_from_moves(tuple(reversed(word)), n)


def grassmannian_shape(word: tuple[int, ...], k: int, n: int) -> Partition:
    """Partition of the single-descent permutation spelled by the word.

    Row i of the shape is w(k - i + 1) - (k - i + 1), reading the first k
    one-line values; the cell count equals the word length.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    w = _one_line_from_word(word, n)
    descents = [p for p in range(1, n) if w[p - 1] > w[p]]
    if descents not in ([], [k]):
        raise NotGrassmannian(f"descents at {descents}, expected only {k}")
    parts = tuple(w[k - i] - (k - i + 1) for i in range(1, k + 1))
    return tuple(p for p in parts if p > 0)


def play_to_tableau(moves: tuple[int, ...], k: int, n: int) -> Tableau:
    """Fill a tableau from a play on the (n-1)-vertex path with source k.

    Step j writes j on diagonal column - row = move - k, in the first cell
    there whose left and upper neighbors are filled.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    d = build_diagram("A", n - 1)
    board = GameBoard.from_diagram(d, {k})
    c = board.zero_configuration()
    for step, v in enumerate(moves, start=1):
        if v not in legal_moves(board, c):
            raise InvalidPlay(f"move {step} fires vertex {v}, which is not sad")
        c = fire(board, c, v)

    max_rows, max_cols = k, n - k
    cells: dict[tuple[int, int], int] = {}
    for step, v in enumerate(moves, start=1):
        diag = v - k
        placed = False
        r = 1 if diag >= 0 else 1 - diag
        while r <= max_rows:
            col = r + diag
            if col > max_cols:
                break
            if (r, col) not in cells:
                left_ok = col == 1 or (r, col - 1) in cells
                up_ok = r == 1 or (r - 1, col) in cells
                if left_ok and up_ok:
                    cells[(r, col)] = step
                    placed = True
                break
            r += 1
        if not placed:
            raise PlacementImpossible(
                f"step {step} (vertex {v}) found no cell on diagonal {diag}"
            )

    word = tuple(reversed(moves))
    shape = grassmannian_shape(word, k, n)
    expected = {
        (r, col) for r, row_len in enumerate(shape, start=1) for col in range(1, row_len + 1)
    }
    if set(cells) != expected:
        raise PlacementImpossible("filled cells do not match the play's shape")
    rows = tuple(
        tuple(cells[(r, col)] for col in range(1, row_len + 1))
        for r, row_len in enumerate(shape, start=1)
    )
    return Tableau(rows)


def enumerate_tableaux(n: int, k: int) -> frozenset[Tableau]:
    """Tableaux of all terminal plays on the path with source k; these fill
    the k x (n-k) rectangle bijectively."""
    if n < 2 or not 1 <= k < n:
        raise ValueError(f"need n >= 2 and 1 <= k < n, got n={n}, k={k}")
    d = build_diagram("A", n - 1)
    board = GameBoard.from_diagram(d, {k})
    out: set[Tableau] = set()

    def dfs(c, moves: tuple[int, ...]) -> None:
        sad = legal_moves(board, c)
        if not sad:
            out.add(play_to_tableau(moves, k, n))
            return
        for v in sad:
            dfs(fire(board, c, v), moves + (v,))

    dfs(board.zero_configuration(), ())
    return frozenset(out)


def brute_force_syt(shape: Partition) -> frozenset[Tableau]:
    """All standard fillings of the shape, by direct backtracking (oracle)."""
    total = sum(shape)
    rows = [list([0] * p) for p in shape]
    out: set[Tableau] = set()

    def rec(step: int) -> None:
        if step > total:
            out.add(Tableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(shape)):
            cols_filled = sum(1 for x in rows[r] if x)
            if cols_filled >= shape[r]:
                continue
            c = cols_filled
            if r > 0 and sum(1 for x in rows[r - 1] if x) <= c:
                continue
            rows[r][c] = step
            rec(step + 1)
            rows[r][c] = 0

    rec(1)
    return frozenset(out)


def hook_length_count(shape: Partition) -> int:
    """Number of standard fillings via the hook length product."""
    total = sum(shape)
    conj = [sum(1 for p in shape if p > c) for c in range(max(shape, default=0))]
    denom = 1
    for r, p in enumerate(shape):
        for c in range(p):
            denom *= (p - c) + (conj[c] - r) - 1
    return factorial(total) // denom
