import itertools

import pytest

from kostant.correspondence import (
    ExtendedState,
    InvalidMoveAt,
    K_value,
    PlayWordPair,
    enumerate_plays,
    extended_pairing,
    extended_reflect,
    initial_state,
    simulate_moves,
    simulate_word,
    verify_play,
)
from kostant.diagrams import build_diagram, cartan_matrix
from kostant.game import GameBoard, VertexStatus, fire, legal_moves, status
from kostant.weyl import (
    all_reduced_words_of_set,
    element_of,
    enumerate_group,
    longest_element,
    minimal_coset_reps,
    reduced_words,
)

LOCKSTEP_DIAGRAMS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2),
]


class TestExtendedPairing:
    def test_initial_state_own_source(self):
        d = build_diagram("A", 2)
        a = cartan_matrix(d)
        s = initial_state(d, frozenset({1, 2}))
        assert extended_pairing(s, 1, a, frozenset({1, 2})) == -1

    def test_after_one_move(self):
        d = build_diagram("A", 2)
        a = cartan_matrix(d)
        s = ExtendedState((1, 0), (1, 1))
        assert extended_pairing(s, 2, a, frozenset({1, 2})) == -2

    def test_two_chips_on_second_vertex(self):
        d = build_diagram("A", 2)
        a = cartan_matrix(d)
        s = ExtendedState((1, 2), (1, 1))
        assert extended_pairing(s, 1, a, frozenset({1, 2})) == -1


class TestExtendedReflect:
    def test_involution(self):
        d = build_diagram("B", 2)
        a = cartan_matrix(d)
        sources = frozenset({1})
        s = ExtendedState((3, 1), (1,))
        assert extended_reflect(extended_reflect(s, 1, a, sources), 1, a, sources) == s

    def test_first_reflection_adds_own_root(self):
        d = build_diagram("A", 2)
        a = cartan_matrix(d)
        sources = frozenset({1, 2})
        s = extended_reflect(initial_state(d, sources), 1, a, sources)
        assert s.root_part == (1, 0)

    def test_b2_board_step4(self):
        d = build_diagram("B", 2)
        a = cartan_matrix(d)
        sources = frozenset({1, 2})
        s = ExtendedState((4, 2), (1, 1))
        assert extended_reflect(s, 2, a, sources).root_part == (4, 3)


class TestKValue:
    def test_source_vertex_initial(self):
        d = build_diagram("A", 3)
        a = cartan_matrix(d)
        sources = frozenset({2})
        assert K_value(initial_state(d, sources), 2, a, sources) == 1

    def test_non_source_initial_invalid(self):
        d = build_diagram("A", 3)
        a = cartan_matrix(d)
        sources = frozenset({2})
        assert K_value(initial_state(d, sources), 1, a, sources) == 0

    def test_b2_single_source_live_state(self):
        d = build_diagram("B", 2)
        a = cartan_matrix(d)
        sources = frozenset({1})
        s = ExtendedState((1, 1), (1,))
        assert K_value(s, 1, a, sources) == 1

    @pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
    def test_k_positive_iff_sad_on_reachable_states(self, family, rank):
        d = build_diagram(family, rank)
        a = cartan_matrix(d)
        for r in range(1, rank + 1):
            for sources in itertools.combinations(d.vertices, r):
                src = frozenset(sources)
                board = GameBoard.from_diagram(d, src)
                seen = set()

                def walk(c, state):
                    if c in seen:
                        return
                    seen.add(c)
                    for v in d.vertices:
                        sad = status(board, c, v) is VertexStatus.SAD
                        assert (K_value(state, v, a, src) > 0) == sad
                    for v in legal_moves(board, c):
                        walk(fire(board, c, v), extended_reflect(state, v, a, src))

                walk(board.zero_configuration(), initial_state(d, src))


class TestSimulateWord:
    def test_empty_word(self):
        d = build_diagram("A", 3)
        assert simulate_word(d, frozenset({1}), ()) == (0, 0, 0)

    def test_b2_single_source_play(self):
        d = build_diagram("B", 2)
        # moves (1, 2, 1) spell the word (1, 2, 1) reversed.
        assert simulate_word(d, frozenset({1}), (1, 2, 1)) == (2, 1)

    def test_b2_both_sources_play(self):
        d = build_diagram("B", 2)
        assert simulate_word(d, frozenset({1, 2}), (2, 1, 2, 1)) == (4, 3)

    def test_source_part_conserved(self):
        d = build_diagram("A", 2)
        a = cartan_matrix(d)
        sources = frozenset({1, 2})
        s = initial_state(d, sources)
        for v in (1, 2, 1):
            s = extended_reflect(s, v, a, sources)
            assert s.sources_intact()


class TestVerifyPlay:
    def test_a2_longest(self):
        d = build_diagram("A", 2)
        w = verify_play(d, frozenset({1, 2}), (1, 2, 1))
        assert w == longest_element(frozenset({1, 2}), d)

    def test_b2_single_source_in_quotient(self):
        d = build_diagram("B", 2)
        w = verify_play(d, frozenset({1}), (1, 2, 1))
        assert w in minimal_coset_reps(d, frozenset({2}))

    def test_invalid_move_reports_step(self):
        d = build_diagram("A", 3)
        with pytest.raises(InvalidMoveAt) as exc_info:
            verify_play(d, frozenset({1}), (2,))
        assert exc_info.value.step == 1


class TestEnumeratePlays:
    def test_a2_terminal_plays(self):
        d = build_diagram("A", 2)
        plays = enumerate_plays(d, frozenset({1, 2}), up_to_terminal=True)
        assert {p.moves for p in plays} == {(1, 2, 1), (2, 1, 2)}

    def test_no_sources_only_empty_play(self):
        d = build_diagram("A", 3)
        plays = enumerate_plays(d, frozenset())
        assert {p.moves for p in plays} == {()}

    def test_word_is_reversed_moves(self):
        with pytest.raises(ValueError):
            PlayWordPair((1, 2), (1, 2, 3))
        pair = PlayWordPair((1, 2), (2, 1))
        assert pair.to_json() == {"moves": [1, 2], "word": [2, 1]}

    def test_a2_single_source_word_set(self):
        d = build_diagram("A", 2)
        plays = enumerate_plays(d, frozenset({1}))
        words = {p.word for p in plays}
        reps = minimal_coset_reps(d, frozenset({2}))
        assert words == all_reduced_words_of_set(reps, d)


def _all_source_subsets(d):
    for r in range(1, d.rank + 1):
        for sources in itertools.combinations(d.vertices, r):
            yield frozenset(sources)


@pytest.mark.parametrize("family,rank", LOCKSTEP_DIAGRAMS)
def test_lockstep_every_play_every_source_set(family, rank):
    """Game configurations equal the algebraic mirror after every prefix."""
    d = build_diagram(family, rank)
    for sources in _all_source_subsets(d):
        board = GameBoard.from_diagram(d, sources)

        def dfs(c, moves):
            sims = simulate_moves(d, sources, moves)
            assert sims[-1] == c
            for v in legal_moves(board, c):
                dfs(fire(board, c, v), moves + (v,))

        dfs(board.zero_configuration(), ())


@pytest.mark.parametrize("family,rank", LOCKSTEP_DIAGRAMS)
def test_bijection_plays_vs_reduced_coset_words(family, rank):
    """Play words coincide with the reduced words of the coset representatives."""
    d = build_diagram(family, rank)
    for sources in _all_source_subsets(d):
        j_set = frozenset(v for v in d.vertices if v not in sources)
        plays = enumerate_plays(d, sources)
        play_words = {p.word for p in plays}
        oracle = all_reduced_words_of_set(minimal_coset_reps(d, j_set), d)
        assert play_words == oracle, (family, rank, sorted(sources))


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("G", 2)])
def test_terminal_plays_reach_longest_rep_and_count_its_words(family, rank):
    d = build_diagram(family, rank)
    for sources in _all_source_subsets(d):
        j_set = frozenset(v for v in d.vertices if v not in sources)
        reps = minimal_coset_reps(d, j_set)
        longest_rep = max(reps, key=lambda w: enumerate_group(d).lengths[w])
        terminal = enumerate_plays(d, sources, up_to_terminal=True)
        elements = {element_of(p.word, d) for p in terminal}
        assert elements == {longest_rep}
        assert {p.word for p in terminal} == reduced_words(longest_rep, d)
        finals = {simulate_word(d, sources, p.word) for p in terminal}
        assert len(finals) == 1
