import itertools

import pytest

from arclat import arcs_a, lattice as lat
from arclat.arcs_a import ArcA, DiagramA, make_arc
from arclat.permutations import CoxeterType, weak_order_lattice, word_w0_conjugate


def test_identity_has_empty_diagram():
    assert arcs_a.diagram_of((1, 2, 3, 4)).arcs == frozenset()


def test_reversal_gives_consecutive_arcs():
    d = arcs_a.diagram_of((4, 3, 2, 1))
    assert d.arcs == frozenset(make_arc(i, i + 1) for i in range(1, 4))


def test_worked_example_6437125():
    d = arcs_a.diagram_of((6, 4, 3, 7, 1, 2, 5))
    expected = {
        make_arc(4, 6, right=[5]),
        make_arc(3, 4),
        make_arc(1, 7, right=[2, 5]),
    }
    assert d.arcs == frozenset(expected)
    big = next(a for a in d.arcs if a.top == 7)
    assert big.left == frozenset({3, 4, 6})


def test_inverse_worked_example():
    word = (3, 8, 6, 7, 5, 2, 4, 1)
    assert arcs_a.word_of(arcs_a.diagram_of(word)) == word


def test_inverse_prefix_structure():
    """The lowest left block is emitted first, in decreasing order."""
    word = (3, 8, 6, 7, 5, 2, 4, 1)
    d = arcs_a.diagram_of(word)
    out = arcs_a.word_of(d)
    assert out[:1] == (3,)
    assert out[:3] == (3, 8, 6)
    assert out[:6] == (3, 8, 6, 7, 5, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_roundtrip_exhaustive(n):
    for word in itertools.permutations(range(1, n + 1)):
        assert arcs_a.word_of(arcs_a.diagram_of(word)) == word


def test_self_incompatible():
    a = make_arc(1, 3, right=[2])
    assert not arcs_a.compatible(a, a)


def test_compatible_pair_from_worked_example():
    a = make_arc(3, 4)
    b = make_arc(1, 7, right=[2, 5])
    assert arcs_a.compatible(a, b)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_compatibility_matches_cooccurrence_oracle(n):
    """Production scan vs the ground truth: the pair appears together in the
    diagram of some word."""
    arcs = arcs_a.all_arcs_n(n)
    together = set()
    for word in itertools.permutations(range(1, n + 1)):
        d = arcs_a.diagram_of(word)
        for a, b in itertools.combinations(sorted(d.arcs, key=ArcA.key), 2):
            together.add((a, b))
            together.add((b, a))
    for a, b in itertools.permutations(arcs, 2):
        assert arcs_a.compatible(a, b) == ((a, b) in together), (a, b)


def test_is_diagram():
    assert arcs_a.is_diagram([])
    d = arcs_a.diagram_of((6, 4, 3, 7, 1, 2, 5))
    assert arcs_a.is_diagram(d.arcs)
    crossing = [make_arc(1, 3, right=[2]), make_arc(2, 4, right=[3])]
    assert not arcs_a.is_diagram(crossing)


def test_join_irreducible_words():
    assert arcs_a.join_irreducible_word(make_arc(1, 2), 2) == (2, 1)
    assert arcs_a.join_irreducible_word(make_arc(1, 3, right=[2]), 3) == (3, 1, 2)
    assert arcs_a.join_irreducible_word(make_arc(1, 3, right=[]), 3) == (2, 3, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_arc_to_word_roundtrip(n):
    for arc in arcs_a.all_arcs_n(n):
        word = arcs_a.join_irreducible_word(arc, n)
        assert arcs_a.diagram_of(word).arcs == frozenset([arc])
        assert arcs_a.arc_of_join_irreducible(word) == arc


def test_subarc_examples():
    a = make_arc(1, 7, right=[3, 4, 6])
    assert arcs_a.is_subarc(a, a)
    assert arcs_a.is_subarc(make_arc(2, 3), a)
    assert not arcs_a.is_subarc(make_arc(2, 4, right=[]), a)
    assert arcs_a.is_subarc(make_arc(2, 4, right=[3]), a)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_subarc_is_partial_order(n):
    arcs = arcs_a.all_arcs_n(n)
    for a, b in itertools.combinations(arcs, 2):
        assert not (arcs_a.is_subarc(a, b) and arcs_a.is_subarc(b, a))
    for a, b, c in itertools.product(arcs, repeat=3):
        if arcs_a.is_subarc(a, b) and arcs_a.is_subarc(b, c):
            assert arcs_a.is_subarc(a, c)


def test_forcing_matches_subarc_on_rank_three():
    W = weak_order_lattice(CoxeterType("A", 4))
    jis = list(lat.join_irreducibles(W))
    arcs = {
        j.element: arcs_a.arc_of_join_irreducible(W.labels[j.element].word)
        for j in jis
    }
    for j1, j2 in itertools.product(jis, jis):
        assert lat.forcing_oracle(W, j1, j2) == arcs_a.is_subarc(
            arcs[j1.element], arcs[j2.element]
        )


def test_shard_descriptor_examples():
    d = arcs_a.shard_descriptor(make_arc(1, 2))
    assert (d.p, d.q) == (1, 2) and not d.leq and not d.geq
    d = arcs_a.shard_descriptor(make_arc(1, 3, right=[2]))
    assert d.leq == frozenset({2}) and not d.geq


@pytest.mark.parametrize("n", [3, 4, 5])
def test_shard_descriptors_distinct(n):
    descs = [arcs_a.shard_descriptor(a) for a in arcs_a.all_arcs_n(n)]
    assert len(set(descs)) == len(descs)


def test_half_turn_involution():
    pts = frozenset([-2, -1, 1, 2])
    empty = DiagramA(pts, frozenset())
    assert arcs_a.half_turn(empty) == empty
    word = (2, -1, 1, -2)
    d = arcs_a.diagram_of(word)
    assert arcs_a.half_turn(arcs_a.half_turn(d)) == d


def test_half_turn_matches_conjugation_on_signed_points():
    values = [-2, -1, 1, 2]
    for word in itertools.permutations(values):
        lhs = arcs_a.diagram_of(word_w0_conjugate(word))
        rhs = arcs_a.half_turn(arcs_a.diagram_of(word))
        assert lhs == rhs


def test_enumerate_counts():
    assert len(arcs_a.all_arcs_n(2)) == 1
    # 1 + 1 arcs on adjacent pairs plus 2 side choices for the span: 4 total
    assert len(arcs_a.all_arcs_n(3)) == 4
    for n in (2, 3, 4, 5):
        W = weak_order_lattice(CoxeterType("A", n))
        assert len(arcs_a.all_arcs_n(n)) == len(lat.join_irreducibles(W))
