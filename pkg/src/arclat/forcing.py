"""Subarc order, arrows, and congruences encoded by contracted arcs.

Contracting the join-irreducible of an arc forces contracting every
superarc, so a congruence is stored as an up-closed set of contracted arcs;
meets and joins of congruences are then set operations.  Element-level
consequences (class projections, quotient lattices) are derived by removing
contracted descents one at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from . import arcs_a, arcs_b
from .arcs_a import ArcA
from .arcs_b import (
    LongArc,
    OrbifoldArc,
    OrdinaryArc,
    SymArcOrPair,
    SymmetricArc,
    TypeBArc,
)
from .lattice import FiniteLattice, ScopeExceeded, build_lattice
from .permutations import SignedPermutation, all_signed_permutations
from .util import between


class NotInConA(ValueError):
    """Raised when lifting a congruence with no symmetric preimage."""


def _rng(lo: int, hi: int) -> frozenset:
    return frozenset(range(lo + 1, hi))


def is_subarc(sub: TypeBArc, sup: TypeBArc) -> bool:
    """The subarc relation on quotient arcs; equals join-irreducible forcing."""
    if isinstance(sup, OrdinaryArc) or isinstance(sup, OrbifoldArc):
        if isinstance(sub, LongArc):
            return False
        p = 0 if isinstance(sup, OrbifoldArc) else sup.bottom
        q = sup.top
        if isinstance(sub, OrbifoldArc):
            p2, q2 = 0, sub.top
        else:
            p2, q2 = sub.bottom, sub.top
        return (
            p <= p2 < q2 <= q
            and sub.right == sup.right & frozenset(between_zero(p2, q2))
        )
    # sup is long
    p, q = sup.left_end, sup.right_end
    if isinstance(sub, OrdinaryArc):
        if sub.top <= p and sub.left == sup.left & _rng(sub.bottom, sub.top):
            return True
        return sub.top <= q and sub.right == sup.right & _rng(sub.bottom, sub.top)
    if isinstance(sub, OrbifoldArc):
        return (
            sub.top <= min(p, q)
            and sub.left == sup.left & _rng(0, sub.top)
            and sub.right == sup.right & _rng(0, sub.top)
        )
    # The attachment at an endpoint of the piece being cut can only cross the
    # other piece when that other piece reaches above the attachment height,
    # so the endpoint exclusions apply only on the lower of the two ends.
    return (
        sub.left_end <= p
        and sub.right_end <= q
        and sub.left == sup.left & _rng(0, sub.left_end)
        and sub.right == sup.right & _rng(0, sub.right_end)
        and (sub.left_end > sub.right_end or sub.left_end not in sup.right)
        and (sub.right_end > sub.left_end or sub.right_end not in sup.left)
    )


def between_zero(p: int, q: int) -> frozenset:
    """Points strictly between p and q where p may be the origin."""
    return frozenset(range(max(p, 0) + 1, q))


def is_subarc_symmetric(sub: SymArcOrPair, sup: SymArcOrPair) -> bool:
    """The subarc relation stated on symmetric arcs and pairs."""
    if isinstance(sup, SymmetricArc):
        full = sup.as_arc()
        if isinstance(sub, SymmetricArc):
            return sub.radius <= sup.radius and sub.right == full.right & frozenset(
                between(-sub.radius, sub.radius)
            )
        if sub.overlapping:
            return False
        a = sub.positive_arc()
        return a.top <= sup.radius and a.right == full.right & frozenset(
            between(a.bottom, a.top)
        )
    if not sup.overlapping:
        if isinstance(sub, SymmetricArc) or sub.overlapping:
            return False
        a, s = sub.positive_arc(), sup.positive_arc()
        return (
            s.bottom <= a.bottom < a.top <= s.top
            and a.right == s.right & frozenset(between(a.bottom, a.top))
        )
    s = sup.right_arc()
    p, q = s.bottom, s.top
    if isinstance(sub, SymmetricArc):
        a = sub.as_arc()
        other = arcs_a.antipode(s)
        return (
            p <= a.bottom < a.top <= q
            and a.right == s.right & frozenset(between(a.bottom, a.top))
            and a.right == other.right & frozenset(between(a.bottom, a.top))
        )
    candidates = list(sub.arcs) if not sub.overlapping else [sub.right_arc()]
    for a in candidates:
        if (
            p <= a.bottom < a.top <= q
            and a.right == s.right & frozenset(between(a.bottom, a.top))
        ):
            return True
    return False


def is_loose_subarc(sub: TypeBArc, sup: TypeBArc) -> bool:
    """Subarc relation relaxed to detect restrictions of symmetric congruences."""
    if is_subarc(sub, sup):
        return True
    if not isinstance(sub, LongArc):
        return False
    if isinstance(sup, OrbifoldArc):
        q = sup.top
        return (
            sub.left_end <= q
            and sub.right_end <= q
            and sub.left == sup.left & _rng(0, sub.left_end)
            and sub.right == sup.right & _rng(0, sub.right_end)
        )
    if isinstance(sup, LongArc):
        p, q = sup.left_end, sup.right_end
        return (
            sub.left_end <= q
            and sub.right_end <= p
            and sub.left == _rng(0, sub.left_end) - sup.right
            and sub.right == _rng(0, sub.right_end) - sup.left
            and not sub.between_pieces
        )
    return False


def _endpoint_values(arc: TypeBArc) -> frozenset:
    if isinstance(arc, OrdinaryArc):
        return frozenset((arc.bottom, arc.top))
    if isinstance(arc, LongArc):
        return frozenset((arc.left_end, arc.right_end))
    return frozenset((arc.top,))


def _canonical_rep(arc: TypeBArc) -> ArcA:
    """Upper copy of an ordinary arc, right copy of a long arc."""
    reps = arcs_b.unfold_arcs(arc)
    if isinstance(arc, OrdinaryArc):
        return next(a for a in reps if a.bottom > 0)
    return next(a for a in reps if a.bottom < 0 < a.top)


def _pairs_compatible(p1, p2) -> bool:
    return all(arcs_a.compatible(x, y) for x in p1 for y in p2)


def _chain_arrow(a1: TypeBArc, a2: TypeBArc) -> bool:
    """Source and target cones lie in a three-hyperplane degree-two slice.

    The target's canonical copy splits at an interior point into one copy of
    the source and a forced partner; there is an arrow exactly when the
    partner is itself a noncrossing pair compatible with the source.
    """
    rho = _canonical_rep(a2)
    members = arcs_b.unfold_arcs(a1)
    for m in members:
        tau = None
        if m.bottom == rho.bottom and m.top != -rho.top and m.top < rho.top:
            tau = (m.top, rho.top)
        elif m.top == rho.top and m.bottom != -rho.bottom and m.bottom > rho.bottom:
            tau = (rho.bottom, m.bottom)
        if tau is None:
            continue
        if m.right != rho.right & frozenset(between(m.bottom, m.top)):
            continue
        lo, hi = tau
        right = rho.right & frozenset(between(lo, hi))
        partner = ArcA(lo, hi, frozenset(between(lo, hi)) - right, right)
        anti = arcs_a.antipode(partner)
        if partner != anti and not arcs_a.compatible(partner, anti):
            continue
        partner_pair = (partner,) if partner == anti else (partner, anti)
        if _pairs_compatible(members, partner_pair):
            return True
    return False


def has_arrow(a1: TypeBArc, a2: TypeBArc) -> bool:
    """Single forcing step between the attached cones.

    Requires the subarc relation plus a local shape condition: either the
    chain configuration of _chain_arrow, or one of the degree-four slice
    shapes involving the origin (orbifold targets, or long targets with
    nothing between their pieces, reached from their lower endpoint).
    """
    if a1 == a2 or not is_subarc(a1, a2):
        return False
    orb1, orb2 = isinstance(a1, OrbifoldArc), isinstance(a2, OrbifoldArc)
    if not orb2 and not orb1 and _chain_arrow(a1, a2):
        return True
    if orb1 and orb2 and a1.top != a2.top:
        return True
    if orb2 and isinstance(a1, OrdinaryArc) and a1.top == a2.top:
        return True
    if isinstance(a2, LongArc) and not a2.between_pieces:
        p, q = sorted((a2.left_end, a2.right_end))
        if orb1 and a1.top == p:
            return True
        if isinstance(a1, OrdinaryArc) and (a1.bottom, a1.top) == (p, q):
            return True
    return False


def forces(a1: TypeBArc, a2: TypeBArc) -> bool:
    """Contracting a1 forces contracting a2: exactly the subarc relation."""
    return is_subarc(a1, a2)


@dataclass(frozen=True)
class ArrowEdge:
    """A single forcing step; the source is always a subarc of the target."""

    source: TypeBArc
    target: TypeBArc

    def __post_init__(self):
        if not is_subarc(self.source, self.target):
            raise ValueError("arrow source must be a subarc of its target")


def arrow_edges(n: int) -> List[ArrowEdge]:
    arcs = _all_arcs(n)
    return [
        ArrowEdge(a, b) for a in arcs for b in arcs if has_arrow(a, b)
    ]


def arrow_closure(arcs: Sequence[TypeBArc]) -> Dict[TypeBArc, frozenset]:
    """Reflexive-transitive closure of the arrow relation on the given arcs."""
    idx = {a: i for i, a in enumerate(arcs)}
    n = len(arcs)
    reach = [1 << i for i in range(n)]
    edges = [[] for _ in range(n)]
    for i, a in enumerate(arcs):
        for j, b in enumerate(arcs):
            if i != j and has_arrow(a, b):
                edges[i].append(j)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = reach[i]
            for j in edges[i]:
                m |= reach[j]
            if m != reach[i]:
                reach[i] = m
                changed = True
    return {
        a: frozenset(arcs[j] for j in range(n) if reach[i] >> j & 1)
        for i, a in enumerate(arcs)
    }


@lru_cache(maxsize=None)
def _all_arcs(n: int) -> tuple:
    return tuple(arcs_b.all_arcs(n))


@dataclass(frozen=True)
class ArcCongruence:
    """A congruence of the type-B weak order as its contracted arc set."""

    n: int
    contracted: frozenset

    def __post_init__(self):
        for arc in self.contracted:
            for sup in _all_arcs(self.n):
                if is_subarc(arc, sup) and sup not in self.contracted:
                    raise ValueError(f"contracted set not closed above {arc}")

    @classmethod
    def identity(cls, n: int) -> "ArcCongruence":
        return cls(n, frozenset())

    @classmethod
    def full(cls, n: int) -> "ArcCongruence":
        return cls(n, frozenset(_all_arcs(n)))

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[TypeBArc]) -> "ArcCongruence":
        gens = tuple(gens)
        contracted = frozenset(
            sup for sup in _all_arcs(n) if any(is_subarc(g, sup) for g in gens)
        )
        return cls(n, contracted)

    def uncontracted(self) -> frozenset:
        return frozenset(_all_arcs(self.n)) - self.contracted

    def __contains__(self, arc: TypeBArc) -> bool:
        return arc in self.contracted


def congruence_meet(t1: ArcCongruence, t2: ArcCongruence) -> ArcCongruence:
    if t1.n != t2.n:
        raise ValueError("congruences on different ranks")
    return ArcCongruence(t1.n, t1.contracted & t2.contracted)


def congruence_join(t1: ArcCongruence, t2: ArcCongruence) -> ArcCongruence:
    if t1.n != t2.n:
        raise ValueError("congruences on different ranks")
    return ArcCongruence(t1.n, t1.contracted | t2.contracted)


def meet_irreducible_congruence(n: int, arc: TypeBArc) -> ArcCongruence:
    """The coarsest congruence not contracting the given arc: its
    uncontracted arcs are exactly the subarcs of the arc."""
    return ArcCongruence(
        n, frozenset(b for b in _all_arcs(n) if not is_subarc(b, arc))
    )


@lru_cache(maxsize=200000)
def _signed_descent_arcs_cached(word: Tuple[int, ...]) -> tuple:
    return tuple(arcs_b.signed_descent_arcs(SignedPermutation(word)))


@lru_cache(maxsize=200000)
def _descent_arcs_cached(word: Tuple[int, ...]) -> tuple:
    return tuple(arcs_a.descent_arcs(word))


def project(pi: SignedPermutation, theta: ArcCongruence) -> SignedPermutation:
    """Bottom element of the congruence class of pi.

    Descends one cover at a time, removing a descent whose arc is
    contracted, until every arc of the diagram is uncontracted.
    """
    while True:
        step = None
        for key, arc in _signed_descent_arcs_cached(pi.word):
            if arc in theta.contracted:
                step = key
                break
        if step is None:
            return pi
        w = list(pi.word)
        if step == "center":
            w[0] = -w[0]
        else:
            w[step], w[step + 1] = w[step + 1], w[step]
        pi = SignedPermutation(tuple(w))


def quotient_elements(theta: ArcCongruence) -> List[SignedPermutation]:
    """Class bottoms: elements whose diagram avoids all contracted arcs."""
    out = []
    for pi in all_signed_permutations(theta.n):
        if all(arc not in theta.contracted for _k, arc in arcs_b.signed_descent_arcs(pi)):
            out.append(pi)
    return out


def element_partition(theta: ArcCongruence) -> List[List[SignedPermutation]]:
    """Congruence classes as fibers of the projection map."""
    fibers: Dict[SignedPermutation, List[SignedPermutation]] = {}
    for pi in all_signed_permutations(theta.n):
        fibers.setdefault(project(pi, theta), []).append(pi)
    return list(fibers.values())


def quotient_lattice(theta: ArcCongruence) -> FiniteLattice:
    """The quotient as the subposet of the weak order on class bottoms."""
    if theta.n > 4:
        raise ScopeExceeded("quotient lattices supported up to n = 4")
    elems = quotient_elements(theta)
    inv = {pi: pi.inversions() for pi in elems}
    order = {
        pi: [q for q in elems if q != pi and inv[q] < inv[pi]] for pi in elems
    }
    covers = []
    for pi in elems:
        lower = order[pi]
        for q in lower:
            if not any(inv[q] < inv[r] for r in lower if r != q):
                covers.append((q, pi))
    return build_lattice(covers, elems)


def all_congruences(n: int) -> List[ArcCongruence]:
    """Every congruence: up-closed subsets of the subarc order."""
    arcs = _all_arcs(n)
    if len(arcs) > 26:
        raise ScopeExceeded("congruence enumeration needs at most 26 arcs")
    m = len(arcs)
    sup_mask = [0] * m
    for i, a in enumerate(arcs):
        for j, b in enumerate(arcs):
            if i != j and is_subarc(a, b):
                sup_mask[i] |= 1 << j
    # topological: subarc-maximal elements first, so inclusion forces only
    # already-decided indices
    order = sorted(range(m), key=lambda i: bin(sup_mask[i]).count("1"))
    masks: List[int] = []

    def rec(k: int, mask: int):
        if k == m:
            masks.append(mask)
            return
        i = order[k]
        rec(k + 1, mask)  # exclude arc i
        if sup_mask[i] & ~mask == 0:  # all superarcs already in
            rec(k + 1, mask | 1 << i)

    rec(0, 0)
    return [
        ArcCongruence(n, frozenset(arcs[i] for i in range(m) if mask >> i & 1))
        for mask in masks
    ]


# --- congruences on the symmetric model (plain arcs on +/- points) ---------


@lru_cache(maxsize=None)
def _all_arcs_sym(n: int) -> tuple:
    pts = [v for v in range(-n, n + 1) if v != 0]
    return tuple(arcs_a.all_arcs(pts))


@dataclass(frozen=True)
class ArcCongruenceA:
    """A congruence of the weak order on words over +/-1..n, by contracted arcs."""

    n: int  # ground set is -n..-1,1..n
    contracted: frozenset

    def __post_init__(self):
        for arc in self.contracted:
            for sup in _all_arcs_sym(self.n):
                if arcs_a.is_subarc(arc, sup) and sup not in self.contracted:
                    raise ValueError(f"contracted set not closed above {arc}")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[ArcA]) -> "ArcCongruenceA":
        gens = tuple(gens)
        contracted = frozenset(
            sup
            for sup in _all_arcs_sym(n)
            if any(arcs_a.is_subarc(g, sup) for g in gens)
        )
        return cls(n, contracted)

    def is_symmetric(self) -> bool:
        return all(arcs_a.antipode(a) in self.contracted for a in self.contracted)


def project_word(word: Tuple[int, ...], theta: ArcCongruenceA) -> Tuple[int, ...]:
    """Bottom element of the class of a word, by contracted-descent removal."""
    word = tuple(word)
    while True:
        step = None
        for i, arc in _descent_arcs_cached(word):
            if arc in theta.contracted:
                step = i
                break
        if step is None:
            return word
        word = word[:step] + (word[step + 1], word[step]) + word[step + 2:]


def is_in_con_a(theta: ArcCongruence) -> bool:
    """True iff the uncontracted set is closed under passing to loose subarcs."""
    unc = theta.uncontracted()
    return all(
        sub in unc
        for sup in unc
        for sub in _all_arcs(theta.n)
        if is_loose_subarc(sub, sup)
    )


def lift_to_symmetric(theta: ArcCongruence) -> ArcCongruenceA:
    """The symmetric congruence on words over +/-1..n generated by the
    unfolded contracted arcs; defined exactly when theta restricts from one."""
    if not is_in_con_a(theta):
        raise NotInConA("uncontracted arcs are not closed under loose subarcs")
    gens = [a for arc in theta.contracted for a in arcs_b.unfold_arcs(arc)]
    lifted = ArcCongruenceA.from_generators(theta.n, gens)
    assert lifted.is_symmetric()
    return lifted


def restriction_of_symmetric(theta_a: ArcCongruenceA) -> ArcCongruence:
    """Contracted quotient arcs of the restriction of a symmetric congruence."""
    contracted = frozenset(
        arc
        for arc in _all_arcs(theta_a.n)
        if any(a in theta_a.contracted for a in arcs_b.unfold_arcs(arc))
    )
    return ArcCongruence(theta_a.n, contracted)
