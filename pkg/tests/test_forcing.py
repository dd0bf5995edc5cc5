import itertools

import pytest

from arclat import arcs_b, catalog, forcing, lattice as lat
from arclat.arcs_b import LongArc, OrbifoldArc, OrdinaryArc
from arclat.forcing import (
    ArcCongruence,
    NotInConA,
    congruence_join,
    congruence_meet,
    has_arrow,
    is_in_con_a,
    is_loose_subarc,
    is_subarc,
    is_subarc_symmetric,
    lift_to_symmetric,
    meet_irreducible_congruence,
)
from arclat.permutations import (
    CoxeterType,
    all_signed_permutations,
    unfold,
    weak_order_lattice,
)


def test_subarc_reflexive():
    for arc in arcs_b.all_arcs(3):
        assert is_subarc(arc, arc)


def test_orbifold_chain():
    small = OrbifoldArc(1, frozenset())
    assert is_subarc(small, OrbifoldArc(2, frozenset()))
    assert is_subarc(small, OrbifoldArc(2, frozenset([1])))


def test_long_orientations_incomparable():
    a = LongArc(1, 2, frozenset(), frozenset())
    b = LongArc(2, 1, frozenset(), frozenset())
    assert not is_subarc(a, b) and not is_subarc(b, a)


def test_deep_long_nesting():
    # cutting both pieces of a wide long arc reaches the bare small one
    sup = LongArc(3, 4, frozenset([1, 2]), frozenset())
    assert is_subarc(LongArc(1, 3, frozenset(), frozenset()), sup)
    assert is_subarc(LongArc(1, 2, frozenset(), frozenset()), sup)


@pytest.mark.parametrize("n", [2, 3])
def test_subarc_partial_order(n):
    arcs = arcs_b.all_arcs(n)
    for a, b in itertools.combinations(arcs, 2):
        assert not (is_subarc(a, b) and is_subarc(b, a))
    for a, b, c in itertools.product(arcs, repeat=3):
        if is_subarc(a, b) and is_subarc(b, c):
            assert is_subarc(a, c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symmetric_model_subarcs_agree(n):
    arcs = arcs_b.all_arcs(n)
    syms = {a: arcs_b.unfold_phi_inv(a) for a in arcs}
    for a, b in itertools.product(arcs, repeat=2):
        assert is_subarc_symmetric(syms[a], syms[b]) == is_subarc(a, b)


@pytest.mark.parametrize("n", [2, 3])
def test_symmetric_subarc_transitive(n):
    arcs = [arcs_b.unfold_phi_inv(a) for a in arcs_b.all_arcs(n)]
    rel = {
        (i, j)
        for i, a in enumerate(arcs)
        for j, b in enumerate(arcs)
        if is_subarc_symmetric(a, b)
    }
    for i, j in rel:
        for k in range(len(arcs)):
            if (j, k) in rel:
                assert (i, k) in rel


def test_loose_subarc_extends_subarc():
    for n in (2, 3):
        for a, b in itertools.product(arcs_b.all_arcs(n), repeat=2):
            if is_subarc(a, b):
                assert is_loose_subarc(a, b)


def test_loose_subarc_examples():
    # a bare long arc sits loosely under the orbifold arc sharing its sides
    long12 = LongArc(1, 2, frozenset(), frozenset())
    orb_right_of_1 = OrbifoldArc(2, frozenset())  # passes right of 1
    assert is_loose_subarc(long12, orb_right_of_1)
    assert not is_subarc(long12, orb_right_of_1)
    # swapped-piece clause between opposite orientations
    long21 = LongArc(2, 1, frozenset(), frozenset())
    assert is_loose_subarc(long21, OrbifoldArc(2, frozenset([1])))
    # a long arc with a point between its pieces never gains loose status
    deep = LongArc(2, 3, frozenset(), frozenset())
    assert deep.between_pieces
    assert not is_loose_subarc(deep, OrbifoldArc(3, frozenset([1, 2])))


def test_arrow_examples():
    assert has_arrow(OrbifoldArc(1, frozenset()), OrbifoldArc(2, frozenset()))
    assert has_arrow(OrbifoldArc(1, frozenset()), OrbifoldArc(2, frozenset([1])))
    assert has_arrow(OrdinaryArc(1, 2, frozenset()), OrbifoldArc(2, frozenset([1])))
    for arc in arcs_b.all_arcs(2):
        assert not has_arrow(arc, arc)


def test_arrow_blocked_without_partner():
    # subarc holds, but the forced partner crosses the source
    a1 = OrdinaryArc(1, 2, frozenset())
    a2 = LongArc(2, 3, frozenset(), frozenset([1]))
    assert is_subarc(a1, a2)
    assert not has_arrow(a1, a2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_arrow_closure_is_subarc_order(n):
    arcs = arcs_b.all_arcs(n)
    closure = forcing.arrow_closure(arcs)
    for a in arcs:
        for b in arcs:
            assert (b in closure[a]) == is_subarc(a, b)


def test_forces_alias():
    a = OrbifoldArc(1, frozenset())
    b = OrbifoldArc(3, frozenset([1, 2]))
    assert forcing.forces(a, b) == is_subarc(a, b)


def test_congruence_from_generators_examples():
    assert ArcCongruence.from_generators(3, []).contracted == frozenset()
    s0 = OrbifoldArc(1, frozenset())
    theta = ArcCongruence.from_generators(3, [s0])
    assert theta.contracted == frozenset(
        a for a in arcs_b.all_arcs(3) if not isinstance(a, OrdinaryArc)
    )
    simion = ArcCongruence.from_generators(
        3,
        [LongArc(1, 2, frozenset(), frozenset()), LongArc(2, 1, frozenset(), frozenset())],
    )
    assert simion.contracted == frozenset(
        a for a in arcs_b.all_arcs(3) if isinstance(a, LongArc)
    )


def test_up_closure_validation():
    s0 = OrbifoldArc(1, frozenset())
    with pytest.raises(ValueError):
        ArcCongruence(3, frozenset([s0]))


def test_quotient_elements_sizes():
    import math

    theta = ArcCongruence.identity(3)
    assert len(forcing.quotient_elements(theta)) == 48
    s0_parab = catalog.parabolic_congruence(3, [0])
    assert len(forcing.quotient_elements(s0_parab)) == math.factorial(3)
    s1_parab = catalog.parabolic_congruence(3, [1])
    assert len(forcing.quotient_elements(s1_parab)) == 2 * 1 * math.factorial(2)


def test_quotient_lattice_examples():
    theta = catalog.parabolic_congruence(3, [0])
    q = forcing.quotient_lattice(theta)
    hexagon = weak_order_lattice(CoxeterType("A", 3))
    assert lat.is_isomorphic(q, hexagon)
    camb = catalog.cambrian_congruence(2, catalog.Designation(("R",)))
    assert forcing.quotient_lattice(camb).n == 6
    ident = ArcCongruence.identity(2)
    assert lat.is_isomorphic(
        forcing.quotient_lattice(ident), weak_order_lattice(CoxeterType("B", 2))
    )


def test_quotient_matches_order_engine():
    W = weak_order_lattice(CoxeterType("B", 3))
    theta = catalog.parabolic_congruence(3, [0])
    classes = [[W.index[pi] for pi in c] for c in forcing.element_partition(theta)]
    cong = lat.Congruence.from_classes(W, classes)
    q1 = lat.quotient(W, cong)
    q2 = forcing.quotient_lattice(theta)
    assert sorted(map(repr, q1.labels)) == sorted(map(repr, q2.labels))
    assert lat.is_isomorphic(q1, q2)


def test_congruence_meet_join():
    t1 = catalog.parabolic_congruence(3, [0])
    ident = ArcCongruence.identity(3)
    assert congruence_meet(t1, ident).contracted == frozenset()
    assert congruence_join(t1, t1).contracted == t1.contracted


def test_meet_irreducible_congruence():
    arc = OrbifoldArc(3, frozenset([1, 2]))
    theta = meet_irreducible_congruence(3, arc)
    assert theta.uncontracted() == frozenset(
        b for b in arcs_b.all_arcs(3) if is_subarc(b, arc)
    )
    assert arc not in theta.contracted


@pytest.mark.parametrize("n", [2, 3])
def test_partitions_are_congruences(n):
    W = weak_order_lattice(CoxeterType("B", n))
    thetas = forcing.all_congruences(n)
    if n == 3:
        thetas = thetas[:: max(1, len(thetas) // 40)]
    for theta in thetas:
        classes = [[W.index[pi] for pi in c] for c in forcing.element_partition(theta)]
        assert lat.is_congruence(W, classes)


def test_every_lattice_congruence_is_an_arc_congruence_at_rank_two():
    W = weak_order_lattice(CoxeterType("B", 2))
    from_arcs = set()
    for theta in forcing.all_congruences(2):
        classes = frozenset(
            frozenset(W.index[pi] for pi in c) for c in forcing.element_partition(theta)
        )
        from_arcs.add(classes)
    from_lattice = {
        frozenset(frozenset(c) for c in cong.classes())
        for cong in lat.all_congruences(W)
    }
    assert from_arcs == from_lattice


def test_principal_below_every_contracting_congruence():
    W = weak_order_lattice(CoxeterType("B", 2))
    ji_of = {
        W.labels[j.element]: j for j in lat.join_irreducibles(W)
    }
    for theta in forcing.all_congruences(2):
        part = {(x, y) for c in forcing.element_partition(theta) for x in c for y in c}
        for arc in theta.contracted:
            j = ji_of[arcs_b.join_irreducible_signed(arc, 2)]
            principal = lat.principal_congruence(W, j)
            for members in principal.classes():
                for x, y in itertools.combinations(members, 2):
                    assert (W.labels[x], W.labels[y]) in part


def test_con_a_verdicts():
    assert not is_in_con_a(catalog.hom_congruence(3, "simion"))
    assert is_in_con_a(catalog.hom_congruence(3, "nonhom"))
    assert not is_in_con_a(catalog.hom_congruence(3, "delta"))
    for sides in itertools.product("RL", repeat=2):
        assert is_in_con_a(catalog.cambrian_congruence(3, catalog.Designation(tuple(sides))))


def test_lift_requires_membership():
    with pytest.raises(NotInConA):
        lift_to_symmetric(catalog.hom_congruence(3, "simion"))


def test_lift_restricts_exactly_at_rank_two():
    elements = list(all_signed_permutations(2))
    for theta in forcing.all_congruences(2):
        if not is_in_con_a(theta):
            continue
        lifted = lift_to_symmetric(theta)
        assert lifted.is_symmetric()
        pb = {pi: forcing.project(pi, theta) for pi in elements}
        pa = {pi: forcing.project_word(unfold(pi), lifted) for pi in elements}
        for x, y in itertools.combinations(elements, 2):
            assert (pb[x] == pb[y]) == (pa[x] == pa[y])


def test_principal_contracted_arcs_are_superarc_closures_rank_three():
    """Element-level principal congruences contract exactly the superarcs."""
    W = weak_order_lattice(CoxeterType("B", 3))
    ji_of = {W.labels[j.element]: j for j in lat.join_irreducibles(W)}
    arcs = arcs_b.all_arcs(3)
    for arc in arcs:
        j = ji_of[arcs_b.join_irreducible_signed(arc, 3)]
        theta = lat.principal_congruence(W, j)
        contracted = {
            arcs_b.arc_of_join_irreducible(W.labels[x.element])
            for x in lat.contracted_jis(W, theta)
        }
        assert contracted == {b for b in arcs if is_subarc(arc, b)}
        # below every arc congruence contracting the arc
        up = ArcCongruence.from_generators(3, [arc])
        assert contracted <= up.contracted


def test_quotient_join_irreducibles_are_uncontracted():
    W = weak_order_lattice(CoxeterType("B", 2))
    for theta in forcing.all_congruences(2):
        classes = [[W.index[pi] for pi in c] for c in forcing.element_partition(theta)]
        cong = lat.Congruence.from_classes(W, classes)
        q = lat.quotient(W, cong)
        expect = {
            W.labels[j.element]
            for j in lat.join_irreducibles(W)
            if not cong.same(j.element, j.lower)
        }
        assert {q.labels[j.element] for j in lat.join_irreducibles(q)} == expect


def test_arrow_edges_validate():
    edges = forcing.arrow_edges(2)
    assert all(is_subarc(e.source, e.target) for e in edges)
    with pytest.raises(ValueError):
        forcing.ArrowEdge(
            OrbifoldArc(2, frozenset()), OrbifoldArc(1, frozenset())
        )
