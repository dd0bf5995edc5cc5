"""Exact reflection-arrangement geometry at desk scale.

Regions are strict sign vectors over the hyperplanes, found by exhaustive
feasibility; cones of hyperplane pieces are stored as a carrier plus strict
side assignments for the hyperplanes slicing it.  All arithmetic is exact
rational, so dimension and containment questions are decided bit-exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .feasible import LinearSystem
from .lattice import FiniteLattice, ScopeExceeded, build_lattice
from .permutations import CoxeterType, Reflection
from .util import canonical_normal, dot, unit


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple  # integer vector, first nonzero coordinate positive

    def __post_init__(self):
        if tuple(canonical_normal(self.normal)) != tuple(self.normal):
            raise ValueError("normal is not canonical")

    def __repr__(self) -> str:
        return f"H{self.normal}"


def hyperplane(normal: Sequence[int]) -> Hyperplane:
    return Hyperplane(tuple(canonical_normal(normal)))


def reflection_hyperplane(t: Reflection, n: int) -> Hyperplane:
    """Fixed hyperplane of a reflection."""
    if t.family == "A":
        v = [0] * n
        v[t.a - 1], v[t.b - 1] = 1, -1
        return hyperplane(v)
    if t.a == -t.b:
        return hyperplane(unit(n, t.b))
    v = [0] * n
    v[t.b - 1] = 1
    v[abs(t.a) - 1] = -1 if t.a > 0 else 1
    return hyperplane(v)


@dataclass(frozen=True)
class Region:
    signs: tuple  # +1/-1 per hyperplane, relative to the base side
    witness: tuple

    def separating(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs) if s < 0)


class Arrangement:
    """A central arrangement with a chosen base region."""

    def __init__(self, hyperplanes: Sequence[Hyperplane], base_point: Sequence):
        self.hyperplanes = tuple(hyperplanes)
        self.base_point = tuple(Fraction(x) for x in base_point)
        self.dim = len(self.base_point)
        # orient each normal toward the base region
        oriented = []
        for h in self.hyperplanes:
            d = dot(h.normal, self.base_point)
            if d == 0:
                raise ValueError("base point lies on a hyperplane")
            oriented.append(tuple(h.normal) if d > 0 else tuple(-c for c in h.normal))
        self.oriented = tuple(oriented)
        self._regions: Optional[tuple] = None

    def m(self) -> int:
        return len(self.hyperplanes)

    def side(self, i: int, x: Sequence) -> int:
        d = dot(self.oriented[i], x)
        return 0 if d == 0 else (1 if d > 0 else -1)

    def regions(self) -> tuple:
        """All regions, as strict sign vectors with rational witnesses."""
        if self._regions is None:
            found = []
            for signs in itertools.product((1, -1), repeat=self.m()):
                sys = LinearSystem(self.dim)
                for s, normal in zip(signs, self.oriented):
                    sys.gt([s * c for c in normal])
                w = sys.witness()
                if w is not None:
                    found.append(Region(signs, w))
            self._regions = tuple(found)
        return self._regions

    def base_region(self) -> Region:
        return next(r for r in self.regions() if all(s > 0 for s in r.signs))


def coxeter_arrangement(cox: CoxeterType) -> Arrangement:
    """Reflection arrangement with the base region containing (1, 2, ..., n)."""
    n = cox.n
    if cox.family == "A":
        if n > 4:
            raise ScopeExceeded("type A arrangements supported up to n = 4")
        normals = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = [0] * n
                v[i - 1], v[j - 1] = 1, -1
                normals.append(v)
    else:
        if n > 3:
            raise ScopeExceeded("type B arrangements supported up to n = 3")
        normals = [list(unit(n, i)) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = [0] * n
                v[i - 1], v[j - 1] = 1, -1
                normals.append(v)
                w = [0] * n
                w[i - 1], w[j - 1] = 1, 1
                normals.append(w)
    base = [Fraction(k) for k in range(1, n + 1)]
    return Arrangement([hyperplane(v) for v in normals], base)


def poset_of_regions(arr: Arrangement) -> FiniteLattice:
    """Regions ordered by inclusion of separating sets."""
    regions = arr.regions()
    seps = [r.separating() for r in regions]
    covers = []
    for i, r in enumerate(regions):
        for j, q in enumerate(regions):
            if len(seps[j]) == len(seps[i]) + 1 and seps[i] < seps[j]:
                covers.append((r, q))
    return build_lattice(covers, regions)


def region_of_element(arr: Arrangement, w) -> Region:
    """Region whose separating set is the inversion set of the group element."""
    n = arr.dim
    want = frozenset(
        arr.hyperplanes.index(reflection_hyperplane(t, n)) for t in w.inversions()
    )
    for r in arr.regions():
        if r.separating() == want:
            return r
    raise ValueError(f"no region for {w}")


def weak_order_isomorphism(arr: Arrangement, lattice: FiniteLattice) -> Dict[int, Region]:
    """Isomorphism from a weak-order lattice onto the poset of regions.

    Seeded at the identity and propagated along covers: the image of w s is
    the unique region above the image of w separated additionally by the
    hyperplane of the cover reflection.
    """
    regions = arr.regions()
    by_sep = {r.separating(): r for r in regions}
    n = arr.dim
    mapping: Dict[int, Region] = {}
    order = sorted(range(lattice.n), key=lambda i: len(lattice.labels[i].inversions()))
    for i in order:
        w = lattice.labels[i]
        want = frozenset(
            arr.hyperplanes.index(reflection_hyperplane(t, n)) for t in w.inversions()
        )
        r = by_sep.get(want)
        if r is None:
            raise ValueError("poset of regions does not match the weak order")
        mapping[i] = r
    # check cover bijectivity both ways
    sep_to_idx = {mapping[i].separating(): i for i in range(lattice.n)}
    if len(sep_to_idx) != lattice.n or len(regions) != lattice.n:
        raise ValueError("not a bijection")
    for a in range(lattice.n):
        for b in lattice.covers_up[a]:
            sa, sb = mapping[a].separating(), mapping[b].separating()
            if not (sa < sb and len(sb) == len(sa) + 1):
                raise ValueError("covers do not match")
    return mapping


def rank_two(arr: Arrangement, i: int, j: int) -> Tuple[tuple, tuple]:
    """Members and basic pair of the rank-two subarrangement through H_i, H_j."""
    if i == j:
        raise ValueError("need two distinct hyperplanes")
    ni, nj = arr.oriented[i], arr.oriented[j]
    members = []
    for k, nk in enumerate(arr.oriented):
        if _in_span(nk, ni, nj):
            members.append(k)
    basics = []
    for k in members:
        sys = LinearSystem(arr.dim)
        sys.eq(arr.oriented[k])
        for l in members:
            if l != k:
                sys.gt(arr.oriented[l])
        if sys.feasible():
            basics.append(k)
    if len(basics) != 2:
        raise ValueError("rank-two subarrangement must have two walls")
    return tuple(members), tuple(basics)


def _in_span(v: Sequence, a: Sequence, b: Sequence) -> bool:
    """v in span(a, b), all integer vectors."""
    rows = [list(a), list(b), list(v)]
    rank = _rank(rows)
    return rank <= 2


def _rank(rows: List[List]) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        r += 1
    return r


def cuts(arr: Arrangement, i: int, j: int) -> bool:
    """H_i slices H_j: H_i is basic and H_j is not in their subarrangement."""
    if i == j:
        return False
    _members, basics = rank_two(arr, i, j)
    return i in basics and j not in basics


@dataclass(frozen=True)
class ShardCone:
    """A piece of a hyperplane: the carrier plus strict sides for its cutters."""

    carrier: int
    sides: tuple  # sorted tuple of (hyperplane index, +1/-1)

    def side_map(self) -> dict:
        return dict(self.sides)


def _cutters(arr: Arrangement, h: int) -> list:
    return [k for k in range(arr.m()) if cuts(arr, k, h)]


def shards(arr: Arrangement) -> tuple:
    """All pieces of all hyperplanes, sliced along the hyperplanes cutting them."""
    out: List[ShardCone] = []
    for h in range(arr.m()):
        cutters = _cutters(arr, h)
        if not cutters:
            out.append(ShardCone(h, ()))
            continue
        for signs in itertools.product((1, -1), repeat=len(cutters)):
            sys = LinearSystem(arr.dim)
            sys.eq(arr.oriented[h])
            for s, k in zip(signs, cutters):
                sys.gt([s * c for c in arr.oriented[k]])
            if sys.feasible():
                out.append(ShardCone(h, tuple(sorted(zip(cutters, signs)))))
    return tuple(out)


def _relint_system(arr: Arrangement, shard: ShardCone) -> LinearSystem:
    sys = LinearSystem(arr.dim)
    sys.eq(arr.oriented[shard.carrier])
    for k, s in shard.sides:
        sys.gt([s * c for c in arr.oriented[k]])
    return sys


def shard_contains(arr: Arrangement, shard: ShardCone, x: Sequence) -> bool:
    if dot(arr.oriented[shard.carrier], x) != 0:
        return False
    return all(s * dot(arr.oriented[k], x) >= 0 for k, s in shard.sides)


def region_walls(arr: Arrangement, region: Region) -> list:
    """Hyperplanes supporting facets of the region."""
    out = []
    signs = list(region.signs)
    for i in range(arr.m()):
        flipped = tuple(-s if k == i else s for k, s in enumerate(signs))
        if any(r.signs == flipped for r in arr.regions()):
            out.append(i)
    return out


def facet_witness(arr: Arrangement, region: Region, wall: int) -> tuple:
    """Interior point of the facet of the region on the wall."""
    flipped = tuple(-s if k == wall else s for k, s in enumerate(region.signs))
    neighbor = next(r for r in arr.regions() if r.signs == flipped)
    a = dot(arr.oriented[wall], region.witness)
    b = dot(arr.oriented[wall], neighbor.witness)
    # combination landing on the wall, strictly inside every other halfspace
    u = [abs(b) * x + abs(a) * y for x, y in zip(region.witness, neighbor.witness)]
    assert dot(arr.oriented[wall], u) == 0
    return tuple(u)


def lower_shards(arr: Arrangement, region: Region, all_shards: Sequence[ShardCone]) -> list:
    """Shards meeting the region in a facet whose hyperplane separates it."""
    out = []
    sep = region.separating()
    for wall in region_walls(arr, region):
        if wall not in sep:
            continue
        u = facet_witness(arr, region, wall)
        matches = [
            sh
            for sh in all_shards
            if sh.carrier == wall
            and all(s * dot(arr.oriented[k], u) > 0 for k, s in sh.sides)
        ]
        assert len(matches) == 1
        out.append(matches[0])
    return out


def min_upper_region(arr: Arrangement, shard: ShardCone, all_shards: Sequence[ShardCone]) -> Region:
    """The unique minimal region having the shard as a lower shard."""
    uppers = [r for r in arr.regions() if shard in lower_shards(arr, r, all_shards)]
    minimal = [
        r
        for r in uppers
        if not any(q is not r and q.separating() < r.separating() for q in uppers)
    ]
    assert len(minimal) == 1
    best = minimal[0]
    assert all(best.separating() <= r.separating() for r in uppers)
    return best


def shards_compatible(arr: Arrangement, s1: ShardCone, s2: ShardCone) -> bool:
    """Relative interiors intersect (allowing the origin for unsliced shards)."""
    if s1 == s2:
        return True
    if s1.carrier == s2.carrier:
        return False
    sys = LinearSystem(arr.dim)
    sys.eq(arr.oriented[s1.carrier])
    sys.eq(arr.oriented[s2.carrier])
    for k, s in s1.sides:
        sys.gt([s * c for c in arr.oriented[k]])
    for k, s in s2.sides:
        sys.gt([s * c for c in arr.oriented[k]])
    return sys.feasible()


def shard_arrow_geometric(arr: Arrangement, s1: ShardCone, s2: ShardCone) -> bool:
    """Arrow between pieces: the first carrier slices the second and the
    closed pieces meet in codimension 2."""
    if not cuts(arr, s1.carrier, s2.carrier):
        return False
    n1, n2 = arr.oriented[s1.carrier], arr.oriented[s2.carrier]
    sys = LinearSystem(arr.dim)
    sys.eq(n1)
    sys.eq(n2)
    for k, s in tuple(s1.sides) + tuple(s2.sides):
        nk = arr.oriented[k]
        if _in_span(nk, n1, n2):
            continue  # vanishes on the intersection subspace
        sys.gt([s * c for c in nk])
    return sys.feasible()


def arrow_witness_check(arr: Arrangement, s1: ShardCone, s2: ShardCone, all_shards: Sequence[ShardCone]) -> bool:
    """Arrow criterion via a witness shard compatible with the source.

    True iff some shard s1' is compatible with s1, the carrier of s2 lies in
    the rank-two subarrangement of the carriers of s1 and s1' without being
    basic there, and the intersection of s1 and s1' is contained in s2.
    """
    if s1.carrier == s2.carrier:
        return False
    for s1p in all_shards:
        if s1p.carrier == s1.carrier:
            continue
        members, basics = rank_two(arr, s1.carrier, s1p.carrier)
        if s2.carrier not in members or s2.carrier in basics:
            continue
        if not (s1.carrier in basics and s1p.carrier in basics):
            continue
        if not shards_compatible(arr, s1, s1p):
            continue
        if _cone_contained(arr, s1, s1p, s2):
            return True
    return False


def _cone_contained(arr: Arrangement, s1: ShardCone, s1p: ShardCone, s2: ShardCone) -> bool:
    """(closure of s1) cap (closure of s1') inside the closure of s2."""
    base_eqs = [arr.oriented[s1.carrier], arr.oriented[s1p.carrier]]
    base_ineqs = [
        (k, s) for k, s in tuple(s1.sides) + tuple(s1p.sides)
    ]
    # carrier of s2 must vanish on the intersection; guaranteed by rank-two
    for k, s in s2.sides:
        sys = LinearSystem(arr.dim)
        for e in base_eqs:
            sys.eq(e)
        for kk, ss in base_ineqs:
            sys.ge([ss * c for c in arr.oriented[kk]])
        sys.gt([-s * c for c in arr.oriented[k]])
        if sys.feasible():
            return False
    return True


def descriptor_matches(arr: Arrangement, shard: ShardCone, descriptor, n: int) -> bool:
    """The inequality description and the computed piece cut out the same cone."""
    eq, ineqs = descriptor.linear_forms(n)
    if hyperplane(eq) != arr.hyperplanes[shard.carrier]:
        return False
    # descriptor cone inside shard closure
    for k, s in shard.sides:
        sys = LinearSystem(arr.dim)
        sys.eq(eq)
        for v in ineqs:
            sys.ge(v)
        sys.gt([-s * c for c in arr.oriented[k]])
        if sys.feasible():
            return False
    # shard closure inside descriptor cone
    for v in ineqs:
        sys = LinearSystem(arr.dim)
        sys.eq(arr.oriented[shard.carrier])
        for k, s in shard.sides:
            sys.ge([s * c for c in arr.oriented[k]])
        sys.gt([-c for c in v])
        if sys.feasible():
            return False
    return True
