"""Deterministic automata for the language of reduced coset-representative words.

The primary construction uses group elements as states: reading a word left
to right walks e -> s_{l1} -> s_{l1}s_{l2} -> ... along length-increasing
right multiplications, any non-ascending step falling into the absorbing
trap.  A word is accepted when the walk ends on a minimal coset
representative, so the accepted language is exactly the reduced words of
those representatives.

A configuration-state variant mirrors the game directly: its states are
board configurations, its input symbols are moves (the word read from the
right), and every non-trap state accepts.  Tests assert the two recognize
reversed images of each other, which is the promised isomorphism once the
move/word order convention is unwound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from kostant.diagrams import DynkinDiagram
from kostant.game import GameBoard, fire, legal_moves
from kostant.weyl import (
    ParabolicSubset,
    WeylWord,
    enumerate_group,
    generator,
    minimal_coset_reps,
    sends_simple_positive,
)

TRAP = "trap"

State = Hashable


@dataclass(frozen=True)
class Dfa:
    """Total deterministic automaton over generator indices 1..rank."""

    states: frozenset[State]
    alphabet: tuple[int, ...]
    transitions: dict[tuple[State, int], State]
    initial: State
    accepting: frozenset[State]

    def __post_init__(self) -> None:
        assert TRAP in self.states and TRAP not in self.accepting
        for q in self.states:
            for letter in self.alphabet:
                assert (q, letter) in self.transitions, "transition function not total"

    def step(self, q: State, letter: int) -> State:
        return self.transitions[(q, letter)]


def accepts(a: Dfa, word: WeylWord) -> bool:
    q = a.initial
    for letter in word:
        if letter not in a.alphabet:
            raise ValueError(f"letter {letter} outside alphabet {a.alphabet}")
        q = a.step(q, letter)
    return q in a.accepting


def build_dfa(d: DynkinDiagram, j_set: ParabolicSubset) -> Dfa:
    """Element-state automaton recognizing the reduced words of the
    minimal representatives modulo the J-parabolic."""
    cat = enumerate_group(d)
    gens = {i: generator(i, d) for i in d.vertices}
    reps = minimal_coset_reps(d, j_set)
    transitions: dict[tuple[State, int], State] = {}
    for w in cat.elements:
        for i, g in gens.items():
            if sends_simple_positive(w, i, d):
                transitions[(w, i)] = w * g
            else:
                transitions[(w, i)] = TRAP
    for i in d.vertices:
        transitions[(TRAP, i)] = TRAP
    return Dfa(
        states=frozenset(cat.elements) | {TRAP},
        alphabet=tuple(d.vertices),
        transitions=transitions,
        initial=cat.elements[0],
        accepting=frozenset(reps),
    )


def build_config_dfa(d: DynkinDiagram, j_set: ParabolicSubset) -> Dfa:
    """Configuration-state automaton over move sequences.

    States are the board configurations reachable in the game with sources
    at S minus J; all of them accept.  Reading symbols in move order equals
    reading the corresponding word from its rightmost letter.
    """
    sources = frozenset(v for v in d.vertices if v not in j_set)
    board = GameBoard.from_diagram(d, sources, mode="modified")
    start = board.zero_configuration()
    nodes = {start}
    transitions: dict[tuple[State, int], State] = {}
    frontier = [start]
    while frontier:
        c = frontier.pop()
        sad = set(legal_moves(board, c))
        for v in d.vertices:
            if v in sad:
                image = fire(board, c, v)
                transitions[(c, v)] = image
                if image not in nodes:
                    nodes.add(image)
                    frontier.append(image)
            else:
                transitions[(c, v)] = TRAP
    for v in d.vertices:
        transitions[(TRAP, v)] = TRAP
    return Dfa(
        states=frozenset(nodes) | {TRAP},
        alphabet=tuple(d.vertices),
        transitions=transitions,
        initial=start,
        accepting=frozenset(nodes),
    )


def enumerate_language(a: Dfa, max_len: int) -> frozenset[WeylWord]:
    """All accepted words of length at most max_len, breadth first."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    out: set[WeylWord] = set()
    layer: list[tuple[State, WeylWord]] = [(a.initial, ())]
    if a.initial in a.accepting:
        out.add(())
    for _ in range(max_len):
        nxt = []
        for q, word in layer:
            for letter in a.alphabet:
                q2 = a.step(q, letter)
                if q2 == TRAP:
                    continue
                w2 = word + (letter,)
                if q2 in a.accepting:
                    out.add(w2)
                nxt.append((q2, w2))
        layer = nxt
        if not layer:
            break
    return frozenset(out)


def _state_names(a: Dfa) -> dict[State, str]:
    names: dict[State, str] = {}
    counter = 0
    # Stable order: initial first, then the rest by discovery via BFS.
    order: list[State] = [a.initial]
    seen = {a.initial}
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for letter in a.alphabet:
            q2 = a.step(q, letter)
            if q2 not in seen:
                seen.add(q2)
                order.append(q2)
    for q in a.states:
        if q not in seen:
            order.append(q)
    for q in order:
        if q == TRAP:
            names[q] = "trap"
        else:
            names[q] = f"q{counter}"
            counter += 1
    return names


def export_dot(a: Dfa) -> str:
    """Graphviz text: doubled circles for accepting states, dashed trap edges."""
    names = _state_names(a)
    lines = ["digraph dfa {", "  rankdir=LR;"]
    for q in sorted(a.states, key=lambda s: names[s]):
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f'  "{names[q]}" [shape={shape}];')
    for q in sorted(a.states, key=lambda s: names[s]):
        for letter in a.alphabet:
            q2 = a.step(q, letter)
            style = ' style=dashed' if q2 == TRAP else ""
            lines.append(f'  "{names[q]}" -> "{names[q2]}" [label="{letter}"{style}];')
    lines.append("}")
    return "\n".join(lines)


def to_json(a: Dfa) -> dict:
    names = _state_names(a)
    return {
        "schema": "kostant/v1",
        "alphabet": list(a.alphabet),
        "states": sorted(names.values()),
        "initial": names[a.initial],
        "accepting": sorted(names[q] for q in a.accepting),
        "transitions": sorted(
            [names[q], letter, names[a.step(q, letter)]]
            for q in a.states
            for letter in a.alphabet
        ),
    }


def minimize(a: Dfa) -> Dfa:
    """Optional Hopcroft-style minimization; not applied by default."""
    # Initial partition: accepting / non-accepting.
    partition = [set(a.accepting), set(a.states) - set(a.accepting)]
    partition = [p for p in partition if p]
    changed = True
    while changed:
        changed = False
        new_partition: list[set[State]] = []
        index = {q: k for k, p in enumerate(partition) for q in p}
        for block in partition:
            buckets: dict[tuple[int, ...], set[State]] = {}
            for q in block:
                sig = tuple(index[a.step(q, letter)] for letter in a.alphabet)
                buckets.setdefault(sig, set()).add(q)
            new_partition.extend(buckets.values())
            if len(buckets) > 1:
                changed = True
        partition = new_partition
    index = {q: k for k, p in enumerate(partition) for q in p}
    reps = {k: next(iter(p)) for k, p in enumerate(partition)}
    trap_block = index[TRAP]
    states: frozenset[State] = frozenset(
        TRAP if k == trap_block else f"m{k}" for k in reps
    )

    def name(k: int) -> State:
        return TRAP if k == trap_block else f"m{k}"

    transitions = {
        (name(k), letter): name(index[a.step(q, letter)])
        for k, q in reps.items()
        for letter in a.alphabet
    }
    accepting = frozenset(
        name(k) for k, q in reps.items() if q in a.accepting
    )
    return Dfa(
        states=states,
        alphabet=a.alphabet,
        transitions=transitions,
        initial=name(index[a.initial]),
        accepting=accepting,
    )
