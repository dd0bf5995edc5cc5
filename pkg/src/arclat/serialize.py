"""JSON schemas for arcs, diagrams, congruences, designations, partitions.

These are the only wire formats; the CLI reads and writes nothing else.
"""

from __future__ import annotations

from typing import Iterable

from . import arcs_a, arcs_b
from .arcs_a import ArcA, DiagramA
from .arcs_b import DiagramB, LongArc, OrbifoldArc, OrdinaryArc, TypeBArc
from .catalog import Designation, NCBlock, NCPartitionB
from .forcing import ArcCongruence
from .permutations import Permutation, SignedPermutation


def arc_a_to_json(arc: ArcA) -> dict:
    return {
        "kind": "ordinary",
        "bottom": arc.bottom,
        "top": arc.top,
        "right": sorted(arc.right),
    }


def arc_a_from_json(data: dict) -> ArcA:
    if data.get("kind", "ordinary") != "ordinary":
        raise ValueError("plain arcs must have kind 'ordinary'")
    return arcs_a.make_arc(int(data["bottom"]), int(data["top"]), [int(v) for v in data["right"]])


def arc_b_to_json(arc: TypeBArc) -> dict:
    if isinstance(arc, OrdinaryArc):
        return {
            "kind": "ordinary",
            "bottom": arc.bottom,
            "top": arc.top,
            "right": sorted(arc.right),
        }
    if isinstance(arc, OrbifoldArc):
        return {"kind": "orbifold", "top": arc.top, "right": sorted(arc.right)}
    return {
        "kind": "long",
        "left": arc.left_end,
        "right_ep": arc.right_end,
        "L": sorted(arc.left),
        "R": sorted(arc.right),
    }


def arc_b_from_json(data: dict) -> TypeBArc:
    kind = data["kind"]
    if kind == "ordinary":
        p, q = int(data["bottom"]), int(data["top"])
        return OrdinaryArc(p, q, frozenset(int(v) for v in data["right"]))
    if kind == "orbifold":
        return OrbifoldArc(int(data["top"]), frozenset(int(v) for v in data["right"]))
    if kind == "long":
        return LongArc(
            int(data["left"]),
            int(data["right_ep"]),
            frozenset(int(v) for v in data["L"]),
            frozenset(int(v) for v in data["R"]),
        )
    raise ValueError(f"unknown arc kind {kind!r}")


def diagram_a_to_json(diagram: DiagramA) -> dict:
    return {
        "n": max(diagram.points),
        "arcs": [arc_a_to_json(a) for a in sorted(diagram.arcs, key=ArcA.key)],
    }


def diagram_a_from_json(data: dict) -> DiagramA:
    n = int(data["n"])
    return DiagramA(
        frozenset(range(1, n + 1)),
        frozenset(arc_a_from_json(a) for a in data["arcs"]),
    )


def diagram_b_to_json(diagram: DiagramB) -> dict:
    return {
        "n": diagram.n,
        "arcs": [arc_b_to_json(a) for a in sorted(diagram.arcs, key=arcs_b.arc_key)],
    }


def diagram_b_from_json(data: dict) -> DiagramB:
    return DiagramB(
        int(data["n"]), frozenset(arc_b_from_json(a) for a in data["arcs"])
    )


def congruence_to_json(theta: ArcCongruence) -> dict:
    return {
        "n": theta.n,
        "contracted": [
            arc_b_to_json(a) for a in sorted(theta.contracted, key=arcs_b.arc_key)
        ],
    }


def congruence_from_json(data: dict) -> ArcCongruence:
    return ArcCongruence(
        int(data["n"]), frozenset(arc_b_from_json(a) for a in data["contracted"])
    )


def designation_to_json(d: Designation) -> dict:
    return {str(i): d.side(i) for i in range(1, d.n)}


def designation_from_json(data: dict) -> Designation:
    sides = [data[str(i)] for i in range(1, len(data) + 1)]
    return Designation(tuple(sides))


def ncp_to_json(part: NCPartitionB) -> dict:
    blocks = []
    for blk in part.blocks:
        entry = {"points": sorted(blk.points), "kind": blk.kind}
        if blk.pieces is not None:
            entry["pieces"] = [sorted(blk.pieces[0]), sorted(blk.pieces[1])]
        blocks.append(entry)
    return {"n": part.n, "blocks": blocks}


def ncp_from_json(data: dict) -> NCPartitionB:
    blocks = []
    for entry in data["blocks"]:
        pieces = None
        if "pieces" in entry:
            pieces = (
                frozenset(int(v) for v in entry["pieces"][0]),
                frozenset(int(v) for v in entry["pieces"][1]),
            )
        blocks.append(NCBlock(frozenset(int(v) for v in entry["points"]), entry["kind"], pieces))
    return NCPartitionB(int(data["n"]), tuple(blocks))


def permutation_to_json(pi) -> list:
    return list(pi.word)


def permutation_from_json(data: Iterable, signed: bool):
    word = tuple(int(v) for v in data)
    return SignedPermutation(word) if signed else Permutation(word)
