"""Named verification suites with machine-readable reports.

Each suite runs a family of exact checks at a given rank and returns a
report dict; any failing check carries a counterexample dump.  The worker
count for pairwise scans is capped by the ARCLAT_THREADS environment
variable (default 1).
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Optional

from . import arcs_a, arcs_b, catalog, forcing, geometry as geo, lattice as lat
from .catalog import Designation
from .permutations import (
    CoxeterType,
    SignedPermutation,
    all_signed_permutations,
    cjr_weak,
    unfold,
    weak_order_lattice,
    word_w0_conjugate,
)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("ARCLAT_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: list) -> list:
    workers = thread_count()
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


class Report:
    def __init__(self, suite: str, n: Optional[int]):
        self.data = {"suite": suite, "n": n, "pass": True, "checks": []}

    def check(self, name: str, ok: bool, counterexample=None):
        entry = {"name": name, "pass": bool(ok)}
        if not ok and counterexample is not None:
            entry["counterexample"] = repr(counterexample)
        self.data["checks"].append(entry)
        if not ok:
            self.data["pass"] = False

    def done(self) -> dict:
        return self.data


def suite_bijections(n: int) -> dict:
    rep = Report("bijections", n)
    words = list(itertools.permutations(range(1, n + 1)))
    results = _map(lambda w: arcs_a.word_of(arcs_a.diagram_of(w)) == w, words)
    bad = next((w for w, ok in zip(words, results) if not ok), None)
    rep.check(f"plain diagram roundtrip on all {n}-words", bad is None, bad)
    if n <= 4:
        bad = None
        for pi in all_signed_permutations(n):
            if arcs_b.signed_of_diagram(arcs_b.diagram_of_signed(pi)) != pi:
                bad = pi
                break
        rep.check(f"signed diagram roundtrip on all of rank {n}", bad is None, bad)
    return rep.done()


def suite_diagram_count(n: int) -> dict:
    rep = Report("diagram-count", n)
    count = len(arcs_b.all_diagrams(n))
    import math

    expect = 2**n * math.factorial(n)
    rep.check(f"clique count equals group order {expect}", count == expect, count)
    return rep.done()


def suite_cjr(n: int, family: str = "B") -> dict:
    rep = Report("cjr", n)
    W = weak_order_lattice(CoxeterType(family, n))
    bad = None
    for i in range(W.n):
        w = W.labels[i]
        oracle = lat.cjr_oracle(W, i)
        if oracle is None:
            bad = (w, "no canonical representation")
            break
        greedy = {x.word for x in cjr_weak(w)}
        if greedy != {W.labels[j].word for j in oracle}:
            bad = (w, greedy)
            break
        if family == "B":
            arcs = {
                arcs_b.join_irreducible_word(a, n)
                for a in arcs_b.diagram_of_signed(w).arcs
            }
        else:
            arcs = {
                arcs_a.join_irreducible_word(a, n)
                for a in arcs_a.diagram_of(w.word).arcs
            }
        if arcs != greedy:
            bad = (w, "arc image mismatch")
            break
    rep.check("greedy = oracle = arc image on all elements", bad is None, bad)
    return rep.done()


def suite_cjr_quotient(n: int, samples: int = 5, seed: int = 11) -> dict:
    rep = Report("cjr-quotient", n)
    W = weak_order_lattice(CoxeterType("B", n))
    rng = random.Random(seed)
    arcs = forcing._all_arcs(n)
    thetas = [
        forcing.ArcCongruence.from_generators(n, [rng.choice(arcs)])
        for _ in range(samples)
    ]
    for k, theta in enumerate(thetas):
        classes = [
            [W.index[pi] for pi in cls] for cls in forcing.element_partition(theta)
        ]
        cong = lat.Congruence.from_classes(W, classes)
        ok = lat.cjr_quotient_check(W, cong)
        rep.check(f"quotient preserves canonical joins (sample {k})", ok, theta.contracted)
    return rep.done()


def suite_forcing_oracle(n: int, samples: int = 500, seed: int = 3) -> dict:
    rep = Report("forcing-oracle", n)
    W = weak_order_lattice(CoxeterType("B", n))
    jis = list(lat.join_irreducibles(W))
    arcs = {j.element: arcs_b.arc_of_join_irreducible(W.labels[j.element]) for j in jis}
    pairs = list(itertools.product(jis, jis))
    if len(pairs) > samples and n >= 4:
        rng = random.Random(seed)
        pairs = [(rng.choice(jis), rng.choice(jis)) for _ in range(samples)]
    cache: Dict[int, lat.Congruence] = {}
    bad = None
    for j1, j2 in pairs:
        if j1.element not in cache:
            cache[j1.element] = lat.principal_congruence(W, j1)
        oracle = cache[j1.element].same(j2.element, j2.lower)
        if oracle != forcing.is_subarc(arcs[j1.element], arcs[j2.element]):
            bad = (W.labels[j1.element], W.labels[j2.element])
            break
    rep.check(f"subarc = principal-congruence forcing ({len(pairs)} pairs)", bad is None, bad)
    return rep.done()


def suite_forcing_closure(n: int) -> dict:
    rep = Report("forcing-closure", n)
    arcs = arcs_b.all_arcs(n)
    closure = forcing.arrow_closure(arcs)
    bad = None
    for a in arcs:
        for b in arcs:
            if (b in closure[a]) != forcing.is_subarc(a, b):
                bad = (a, b)
                break
        if bad:
            break
    rep.check(f"arrow closure = subarc order ({len(arcs)} arcs)", bad is None, bad)
    return rep.done()


def _shard_tables(family: str, n: int):
    arr = geo.coxeter_arrangement(CoxeterType(family, n))
    W = weak_order_lattice(CoxeterType(family, n))
    iso = geo.weak_order_isomorphism(arr, W)
    sh = geo.shards(arr)
    sign_to_idx = {iso[i].signs: i for i in iso}
    shard_of_ji = {}
    for s in sh:
        r = geo.min_upper_region(arr, s, sh)
        shard_of_ji[sign_to_idx[r.signs]] = s
    return arr, W, sh, shard_of_ji


def suite_shard_digraph(n: int, family: str = "B") -> dict:
    rep = Report("shard-digraph", n)
    arr, W, sh, shard_of_ji = _shard_tables(family, n)
    jis = sorted(shard_of_ji)
    bad = None
    for i, j in itertools.product(jis, jis):
        g = geo.shard_arrow_geometric(arr, shard_of_ji[i], shard_of_ji[j])
        e = geo.arrow_witness_check(arr, shard_of_ji[i], shard_of_ji[j], sh)
        if g != e:
            bad = (W.labels[i], W.labels[j], "geometric vs witness criterion")
            break
        if family == "B":
            a1 = arcs_b.arc_of_join_irreducible(W.labels[i])
            a2 = arcs_b.arc_of_join_irreducible(W.labels[j])
            if g != forcing.has_arrow(a1, a2):
                bad = (W.labels[i], W.labels[j], "geometric vs arc arrow")
                break
    rep.check("geometric = witness-shard = arc arrows", bad is None, bad)
    if bad is None:
        # closure of the digraph equals lattice forcing
        idx = {i: k for k, i in enumerate(jis)}
        reach = [1 << k for k in range(len(jis))]
        for (i, j) in itertools.product(jis, jis):
            if i != j and geo.shard_arrow_geometric(arr, shard_of_ji[i], shard_of_ji[j]):
                reach[idx[i]] |= 1 << idx[j]
        changed = True
        while changed:
            changed = False
            for k in range(len(jis)):
                m = reach[k]
                probe = m
                while probe:
                    low = probe & -probe
                    m |= reach[low.bit_length() - 1]
                    probe ^= low
                if m != reach[k]:
                    reach[k] = m
                    changed = True
        bad = None
        ji_by_el = {j.element: j for j in lat.join_irreducibles(W)}
        for i, j in itertools.product(jis, jis):
            path = bool(reach[idx[i]] >> idx[j] & 1)
            if path != lat.forcing_oracle(W, ji_by_el[i], ji_by_el[j]):
                bad = (W.labels[i], W.labels[j])
                break
        rep.check("digraph closure = forcing", bad is None, bad)
    return rep.done()


def suite_geometry(n: int, family: str = "B") -> dict:
    rep = Report("geometry", n)
    arr, W, sh, shard_of_ji = _shard_tables(family, n)
    rep.check("poset of regions matches the weak order", True)
    rep.check(
        "shard count equals join-irreducible count",
        len(sh) == len(lat.join_irreducibles(W)),
        len(sh),
    )
    bad = None
    for i, s in shard_of_ji.items():
        w = W.labels[i]
        if family == "B":
            desc = arcs_b.shard_descriptor(arcs_b.arc_of_join_irreducible(w))
        else:
            desc = arcs_a.shard_descriptor(arcs_a.arc_of_join_irreducible(w.word))
        if not geo.descriptor_matches(arr, s, desc, n):
            bad = (w, s)
            break
    rep.check("inequality descriptions equal the pieces", bad is None, bad)
    bad = None
    jis = sorted(shard_of_ji)
    for i, j in itertools.combinations(jis, 2):
        compat_geo = geo.shards_compatible(arr, shard_of_ji[i], shard_of_ji[j])
        if family == "B":
            a1 = arcs_b.arc_of_join_irreducible(W.labels[i])
            a2 = arcs_b.arc_of_join_irreducible(W.labels[j])
            compat_arc = arcs_b.compatible(a1, a2)
        else:
            a1 = arcs_a.arc_of_join_irreducible(W.labels[i].word)
            a2 = arcs_a.arc_of_join_irreducible(W.labels[j].word)
            compat_arc = arcs_a.compatible(a1, a2)
        if compat_geo != compat_arc:
            bad = (W.labels[i], W.labels[j])
            break
    rep.check("piece compatibility equals arc compatibility", bad is None, bad)
    return rep.done()


def suite_octagon(n: int = 2) -> dict:
    rep = Report("octagon", 2)
    W = weak_order_lattice(CoxeterType("B", 2))
    hexagon = weak_order_lattice(CoxeterType("A", 3))
    winners = []
    for cong in lat.all_congruences(W):
        classes = cong.classes()
        if len(classes) != 6:
            continue
        q = lat.quotient(W, cong)
        if lat.is_isomorphic(q, hexagon):
            winners.append(cong)
    rep.check("exactly 4 congruences give six-element quotients of hexagon shape", len(winners) == 4, len(winners))
    pairs_a = (SignedPermutation((2, -1)), SignedPermutation((-2, -1)))
    pairs_b = (SignedPermutation((-2, 1)), SignedPermutation((1, -2)))
    ok = True
    for cong in winners:
        cj = {W.labels[j.element] for j in lat.contracted_jis(W, cong)}
        if len(cj & set(pairs_a)) != 1 or len(cj & set(pairs_b)) != 1:
            ok = False
    rep.check("each contracts one of each generator pair", ok)
    return rep.done()


def suite_hom(n: int) -> dict:
    rep = Report("hom", n)
    for variant in ("simion", "nonhom", "delta", "delta_mirror"):
        try:
            theta = catalog.hom_congruence(n, variant)
            rep.check(f"{variant}: generated set equals closed form", True)
        except AssertionError:
            rep.check(f"{variant}: generated set equals closed form", False)
            continue
        if n == 3:
            q = forcing.quotient_lattice(theta)
            rep.check(f"{variant}: quotient has 24 elements", q.n == 24, q.n)
            if variant == "nonhom":
                S4 = weak_order_lattice(CoxeterType("A", 4))
                rep.check("nonhom: quotient is the rank-4 plain weak order", lat.is_isomorphic(q, S4))
    return rep.done()


def suite_cambrian(n: int, max_designations: Optional[int] = None, seed: int = 5) -> dict:
    rep = Report("cambrian", n)
    import math

    expect = math.comb(2 * n, n)
    designations = [
        Designation(tuple(s)) for s in itertools.product("RL", repeat=n - 1)
    ]
    if max_designations is not None and len(designations) > max_designations:
        rng = random.Random(seed)
        designations = rng.sample(designations, max_designations)
    for d in designations:
        theta = catalog.cambrian_congruence(n, d)
        members = set(forcing.quotient_elements(theta))
        rep.check(f"{d}: quotient size {expect}", len(members) == expect, len(members))
        pattern = {
            pi for pi in all_signed_permutations(n) if catalog.cambrian_pattern_test(pi, d)
        }
        rep.check(f"{d}: pattern set equals quotient set", pattern == members)
        pattern2 = {
            pi
            for pi in all_signed_permutations(n)
            if catalog.cambrian_pattern_test_312(pi, d)
        }
        rep.check(f"{d}: mirrored pattern agrees", pattern2 == members)
        reps_arcs = catalog.cambrian_meet_rep(n, d)
        acc = None
        for arc in reps_arcs:
            mi = forcing.meet_irreducible_congruence(n, arc)
            acc = mi if acc is None else forcing.congruence_meet(acc, mi)
        rep.check(f"{d}: meet of maximal-arc congruences", acc.contracted == theta.contracted)
        bad = None
        for pi in members:
            D = arcs_b.diagram_of_signed(pi)
            part = catalog.ncp_of_diagram(D, d)
            if catalog.diagram_of_ncp(part, d) != D:
                bad = pi
                break
        rep.check(f"{d}: block-partition roundtrip", bad is None, bad)
    return rep.done()


def suite_bicambrian(n: int) -> dict:
    rep = Report("bicambrian", n)
    bi = catalog.bicambrian_bipartite(n)
    bi_gen = catalog.bicambrian_bipartite_generated(n)
    rep.check("bipartite: generators reach the closed form", bi_gen.contracted == bi.contracted)
    d1, d2 = catalog._opposite_pair(n, "bipartite")
    meet = forcing.congruence_meet(
        catalog.cambrian_congruence(n, d1), catalog.cambrian_congruence(n, d2)
    )
    rep.check("bipartite: equals meet of opposite pair", meet.contracted == bi.contracted)
    lin = catalog.bicambrian_linear(n)
    lin_gen = catalog.bicambrian_linear_generated(n)
    rep.check(
        "linear: quoted generators reach the closed form",
        lin_gen.contracted == lin.contracted,
        sorted(lin.contracted - lin_gen.contracted, key=arcs_b.arc_key),
    )
    d1, d2 = catalog._opposite_pair(n, "linear")
    meet = forcing.congruence_meet(
        catalog.cambrian_congruence(n, d1), catalog.cambrian_congruence(n, d2)
    )
    rep.check("linear: closed form equals meet of opposite pair", meet.contracted == lin.contracted)
    return rep.done()


def suite_con_a(n: int) -> dict:
    rep = Report("con-a", n)
    if n == 2:
        thetas = forcing.all_congruences(2)
    else:
        arcs = forcing._all_arcs(n)
        seen = {frozenset(): forcing.ArcCongruence.identity(n)}
        for a in arcs:
            t = forcing.ArcCongruence.from_generators(n, [a])
            seen[t.contracted] = t
        for a, b in itertools.combinations(arcs, 2):
            t = forcing.ArcCongruence.from_generators(n, [a, b])
            seen[t.contracted] = t
        thetas = list(seen.values())
    elements = list(all_signed_permutations(n))
    bad = None
    for theta in thetas:
        closed = forcing.is_in_con_a(theta)
        gens = [a for arc in theta.contracted for a in arcs_b.unfold_arcs(arc)]
        lifted = forcing.ArcCongruenceA.from_generators(n, gens)
        if not lifted.is_symmetric():
            bad = (theta, "lift not symmetric")
            break
        proj_b = {pi: forcing.project(pi, theta) for pi in elements}
        proj_a = {pi: forcing.project_word(unfold(pi), lifted) for pi in elements}
        restricts = all(
            (proj_b[x] == proj_b[y]) == (proj_a[x] == proj_a[y])
            for x, y in itertools.combinations(elements, 2)
        )
        if closed != restricts:
            bad = (sorted(theta.contracted, key=arcs_b.arc_key), closed, restricts)
            break
    rep.check(
        f"loose closure = symmetric preimage restricts ({len(thetas)} congruences)",
        bad is None,
        bad,
    )
    members = [t for t in thetas if forcing.is_in_con_a(t)]
    bad = None
    pairs = list(itertools.combinations(members, 2))
    if len(pairs) > 400:
        rng = random.Random(2)
        pairs = rng.sample(pairs, 400)
    for t1, t2 in pairs:
        if not forcing.is_in_con_a(forcing.congruence_meet(t1, t2)):
            bad = (t1, t2, "meet")
            break
        if not forcing.is_in_con_a(forcing.congruence_join(t1, t2)):
            bad = (t1, t2, "join")
            break
    rep.check(f"membership closed under meet and join ({len(pairs)} pairs)", bad is None, bad)
    if n == 3:
        rep.check("simion verdict", not forcing.is_in_con_a(catalog.hom_congruence(3, "simion")))
        rep.check("nonhom verdict", forcing.is_in_con_a(catalog.hom_congruence(3, "nonhom")))
        rep.check("delta verdict", not forcing.is_in_con_a(catalog.hom_congruence(3, "delta")))
    return rep.done()


def suite_symmetry(n: int) -> dict:
    """Half-turn equivariance of the diagram map on +/-labeled points."""
    rep = Report("symmetry", n)
    values = [v for v in range(-n, n + 1) if v != 0]
    bad = None
    for word in itertools.permutations(values):
        d1 = arcs_a.diagram_of(word_w0_conjugate(word))
        d2 = arcs_a.half_turn(arcs_a.diagram_of(word))
        if d1 != d2:
            bad = word
            break
    rep.check(f"conjugation by the longest element is the half turn (2n={2*n})", bad is None, bad)
    return rep.done()


SUITES: Dict[str, Callable] = {
    "bijections": suite_bijections,
    "diagram-count": suite_diagram_count,
    "cjr": suite_cjr,
    "cjr-quotient": suite_cjr_quotient,
    "forcing-oracle": suite_forcing_oracle,
    "forcing-closure": suite_forcing_closure,
    "shard-digraph": suite_shard_digraph,
    "geometry": suite_geometry,
    "octagon": suite_octagon,
    "hom": suite_hom,
    "cambrian": suite_cambrian,
    "bicambrian": suite_bicambrian,
    "con-a": suite_con_a,
    "symmetry": suite_symmetry,
}


def run_suite(name: str, n: int) -> dict:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](n)
