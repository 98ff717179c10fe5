import itertools

import pytest

from kostant.diagrams import build_diagram, positive_roots
from kostant.weyl import (
    LetterOutsideJ,
    NotReduced,
    all_reduced_words_of_set,
    complete_to_longest,
    element_of,
    enumerate_group,
    generator,
    identity_element,
    inversion_set,
    is_min_rep,
    is_reduced,
    length,
    longest_element,
    minimal_coset_reps,
    parabolic_decompose,
    phi_plus_j,
    reduced_words,
    sends_simple_positive,
)

RANK_LE_4 = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 4), ("G", 2),
]

KNOWN_ORDERS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
    ("B", 2): 8, ("B", 3): 48, ("B", 4): 384,
    ("C", 2): 8, ("C", 3): 48, ("C", 4): 384,
    ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152,
}


def test_empty_word_is_identity():
    d = build_diagram("A", 3)
    assert element_of((), d).is_identity()


def test_braid_relation_a2():
    d = build_diagram("A", 2)
    assert element_of((1, 2, 1), d) == element_of((2, 1, 2), d)


def test_a2_has_six_elements():
    d = build_diagram("A", 2)
    elements = {
        element_of(word, d)
        for t in range(4)
        for word in itertools.product((1, 2), repeat=t)
    }
    assert len(elements) == 6


@pytest.mark.parametrize("family,rank", sorted(KNOWN_ORDERS))
def test_group_orders(family, rank):
    cat = enumerate_group(build_diagram(family, rank))
    assert cat.order == KNOWN_ORDERS[(family, rank)]


def test_inversion_set_identity_empty():
    d = build_diagram("B", 2)
    assert inversion_set(identity_element(d), d) == frozenset()


def test_inversion_set_longest_a2():
    d = build_diagram("A", 2)
    w = element_of((1, 2, 1), d)
    assert inversion_set(w, d) == frozenset({(1, 0), (1, 1), (0, 1)})


def test_inversion_set_b2_play_element():
    d = build_diagram("B", 2)
    w = element_of((1, 2, 1), d)
    assert inversion_set(w, d) == frozenset({(1, 0), (2, 1), (1, 1)})


def test_length_of_longest_elements():
    a2 = build_diagram("A", 2)
    b2 = build_diagram("B", 2)
    assert length(longest_element(frozenset({1, 2}), a2), a2) == 3
    assert length(longest_element(frozenset({1, 2}), b2), b2) == 4
    assert length(identity_element(a2), a2) == 0


@pytest.mark.parametrize("family,rank", RANK_LE_4)
def test_length_equals_inversion_count_exhaustive(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for w in cat.elements:
        assert cat.lengths[w] == len(inversion_set(w, d))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_length_criterion_both_directions(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for w in cat.elements:
        for i in d.vertices:
            ws = w * generator(i, d)
            delta = cat.lengths[ws] - cat.lengths[w]
            assert delta in (-1, 1)
            assert (delta == 1) == sends_simple_positive(w, i, d)


def test_is_reduced_square_is_not():
    d = build_diagram("A", 2)
    assert not is_reduced((1, 1), d)


def test_is_reduced_b2_longest():
    d = build_diagram("B", 2)
    assert is_reduced((2, 1, 2, 1), d)
    assert not is_reduced((2, 1, 2, 1, 2), d)


def test_all_reduced_words_of_longest_a3_accepted():
    d = build_diagram("A", 3)
    w0 = longest_element(frozenset(d.vertices), d)
    words = reduced_words(w0, d)
    assert len(words) == 16
    for word in words:
        assert len(word) == 6
        assert is_reduced(word, d)
        assert element_of(word, d) == w0


def test_minimal_coset_reps_a2():
    d = build_diagram("A", 2)
    expected = {element_of(w, d) for w in [(), (2,), (1, 2)]}
    assert minimal_coset_reps(d, frozenset({1})) == expected


def test_minimal_coset_reps_b2():
    d = build_diagram("B", 2)
    expected = {element_of(w, d) for w in [(), (1,), (2, 1), (1, 2, 1)]}
    assert minimal_coset_reps(d, frozenset({2})) == expected


def test_minimal_coset_reps_full_j_trivial():
    for family, rank in [("A", 3), ("B", 2)]:
        d = build_diagram(family, rank)
        reps = minimal_coset_reps(d, frozenset(d.vertices))
        assert reps == frozenset({identity_element(d)})


@pytest.mark.parametrize("family,rank", RANK_LE_4)
def test_lagrange_counts(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for r in range(rank + 1):
        for j in itertools.combinations(d.vertices, r):
            j_set = frozenset(j)
            reps = minimal_coset_reps(d, j_set)
            w0j = longest_element(j_set, d)
            sub_order = len(
                {w for w in cat.elements if inversion_set(w, d) <= phi_plus_j(j_set, d)}
            )
            assert len(reps) * sub_order == cat.order
            assert length(w0j, d) == len(phi_plus_j(j_set, d))


def test_is_min_rep_examples():
    a2 = build_diagram("A", 2)
    assert is_min_rep(identity_element(a2), frozenset({1}), a2)
    assert not is_min_rep(element_of((1,), a2), frozenset({1}), a2)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_min_rep_double_characterization_exhaustive(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for r in range(rank + 1):
        for j in itertools.combinations(d.vertices, r):
            j_set = frozenset(j)
            for w in cat.elements:
                # is_min_rep raises InternalInconsistency on any disagreement.
                is_min_rep(w, j_set, d)


def test_parabolic_decompose_identity():
    d = build_diagram("A", 2)
    e = identity_element(d)
    assert parabolic_decompose(e, frozenset({1}), d) == (e, e)


def test_parabolic_decompose_s1_in_parabolic():
    d = build_diagram("A", 2)
    s1 = element_of((1,), d)
    u, v = parabolic_decompose(s1, frozenset({1}), d)
    assert u.is_identity() and v == s1


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3)])
def test_parabolic_decompose_exhaustive(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for r in range(rank + 1):
        for j in itertools.combinations(d.vertices, r):
            j_set = frozenset(j)
            reps = minimal_coset_reps(d, j_set)
            for w in cat.elements:
                u, v = parabolic_decompose(w, j_set, d)
                assert u * v == w
                assert u in reps
                assert inversion_set(v, d) <= phi_plus_j(j_set, d)
                assert cat.lengths[w] == cat.lengths[u] + cat.lengths[v]


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3)])
def test_parabolic_decompose_unique_by_product_scan(family, rank):
    d = build_diagram(family, rank)
    cat = enumerate_group(d)
    for r in range(rank + 1):
        for j in itertools.combinations(d.vertices, r):
            j_set = frozenset(j)
            reps = minimal_coset_reps(d, j_set)
            parabolic = [
                w for w in cat.elements if inversion_set(w, d) <= phi_plus_j(j_set, d)
            ]
            seen = {}
            for u in reps:
                for v in parabolic:
                    w = u * v
                    assert w not in seen, "parabolic decomposition collided"
                    seen[w] = (u, v)
            assert len(seen) == cat.order
            for w, (u, v) in seen.items():
                assert parabolic_decompose(w, j_set, d) == (u, v)


def test_longest_element_inside_a3_parabolic():
    d = build_diagram("A", 3)
    w = longest_element(frozenset({1, 2}), d)
    assert w == element_of((1, 2, 1), d)
    assert length(w, d) == 3


def test_longest_element_empty_j():
    d = build_diagram("B", 2)
    assert longest_element(frozenset(), d).is_identity()


def test_longest_element_maps_parabolic_roots_negative():
    d = build_diagram("A", 3)
    j_set = frozenset({1, 2})
    w = longest_element(j_set, d)
    assert inversion_set(w, d) == phi_plus_j(j_set, d)


def test_complete_to_longest_paper_example():
    d = build_diagram("A", 3)
    assert complete_to_longest((2,), frozenset({1, 2}), d) == (2, 1, 2)


def test_complete_to_longest_fixed_point():
    d = build_diagram("A", 3)
    j_set = frozenset({1, 2})
    full = complete_to_longest((), j_set, d)
    assert complete_to_longest(full, j_set, d) == full


def test_complete_to_longest_every_parabolic_word():
    d = build_diagram("A", 3)
    j_set = frozenset({1, 2})
    w0j = longest_element(j_set, d)
    target_len = length(w0j, d)
    parabolic = [
        w
        for w in enumerate_group(d).elements
        if inversion_set(w, d) <= phi_plus_j(j_set, d)
    ]
    for w in parabolic:
        for word in reduced_words(w, d):
            extended = complete_to_longest(word, j_set, d)
            assert extended[: len(word)] == word
            assert len(extended) == target_len
            assert is_reduced(extended, d)
            assert element_of(extended, d) == w0j


def test_complete_to_longest_errors():
    d = build_diagram("A", 3)
    with pytest.raises(NotReduced):
        complete_to_longest((1, 1), frozenset({1, 2}), d)
    with pytest.raises(LetterOutsideJ):
        complete_to_longest((3,), frozenset({1, 2}), d)


def test_commutation_for_non_adjacent():
    d = build_diagram("A", 3)
    assert element_of((1, 3), d) == element_of((3, 1), d)


def test_reduced_word_sets_cover_group():
    d = build_diagram("A", 3)
    cat = enumerate_group(d)
    words = all_reduced_words_of_set(frozenset(cat.elements), d)
    assert sum(1 for w in words if len(w) == 0) == 1
    assert {element_of(w, d) for w in words} == set(cat.elements)
