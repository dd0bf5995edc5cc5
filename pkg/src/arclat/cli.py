"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 semantic error (invalid or unknown object).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arcs_a, arcs_b, catalog, forcing, geometry as geo, render, serialize, verify
from .catalog import Designation
from .lattice import NotALattice, ScopeExceeded
from .permutations import CoxeterType


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(2, f"malformed JSON: {exc}") from exc


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def cmd_map(args) -> int:
    if (args.perm is None) == (args.diagram is None):
        raise CliError(2, "provide exactly one of --perm or --diagram")
    try:
        if args.perm is not None:
            word = _load_json(args.perm)
            pi = serialize.permutation_from_json(word, signed=args.type == "b")
            if args.type == "b":
                _emit(serialize.diagram_b_to_json(arcs_b.diagram_of_signed(pi)))
            else:
                _emit(serialize.diagram_a_to_json(arcs_a.diagram_of(pi.word)))
        else:
            data = _load_json(args.diagram)
            if args.type == "b":
                pi = arcs_b.signed_of_diagram(serialize.diagram_b_from_json(data))
            else:
                pi = serialize.diagram_a_from_json(data)
                pi = serialize.permutation_from_json(arcs_a.word_of(pi), signed=False)
            _emit(serialize.permutation_to_json(pi))
    except CliError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def named_congruence(name: str, n: int) -> forcing.ArcCongruence:
    if name == "identity":
        return forcing.ArcCongruence.identity(n)
    if name == "full":
        return forcing.ArcCongruence.full(n)
    if name.startswith("cambrian:"):
        return catalog.cambrian_congruence(n, Designation.parse(name.split(":", 1)[1]))
    if name.startswith("parabolic:"):
        gens = [int(tok.lstrip("s")) for tok in name.split(":", 1)[1].split(",")]
        return catalog.parabolic_congruence(n, gens)
    if name in catalog.HOM_GENERATOR_WORDS:
        return catalog.hom_congruence(n, name)
    if name == "bicambrian-bipartite":
        return catalog.bicambrian_bipartite(n)
    if name == "bicambrian-linear":
        return catalog.bicambrian_linear(n)
    raise KeyError(name)


def cmd_quotient(args) -> int:
    try:
        if args.congruence.strip().startswith("{"):
            theta = serialize.congruence_from_json(_load_json(args.congruence))
            if theta.n != args.n:
                raise ValueError("congruence rank does not match --n")
        else:
            theta = named_congruence(args.congruence, args.n)
        elems = forcing.quotient_elements(theta)
        if args.count:
            _emit({"count": len(elems)})
        elif args.hasse:
            latt = forcing.quotient_lattice(theta)
            _emit(
                {
                    "elements": [list(w.word) for w in latt.labels],
                    "covers": latt.covers(),
                }
            )
        else:
            _emit({"elements": sorted(list(w.word) for w in elems)})
    except CliError:
        raise
    except (KeyError,) as exc:
        raise CliError(3, f"unknown congruence {args.congruence!r}") from exc
    except (ValueError, ScopeExceeded, NotALattice) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def cmd_verify(args) -> int:
    try:
        report = verify.run_suite(args.suite, args.n)
    except KeyError as exc:
        raise CliError(3, f"unknown suite {args.suite!r}") from exc
    except ScopeExceeded as exc:
        raise CliError(3, str(exc)) from exc
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_render(args) -> int:
    try:
        data = _load_json(args.diagram)
        diagram = serialize.diagram_b_from_json(data)
        spec = render.RenderSpec(
            format=args.format, width=args.width, height=args.height, spacing=args.spacing
        )
        sys.stdout.write(render.render(diagram, spec))
    except CliError:
        raise
    except (ValueError, KeyError) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def cmd_enumerate(args) -> int:
    try:
        if args.what == "arcs":
            if args.type == "b":
                _emit([serialize.arc_b_to_json(a) for a in arcs_b.all_arcs(args.n)])
            else:
                _emit([serialize.arc_a_to_json(a) for a in arcs_a.all_arcs_n(args.n)])
        else:
            if args.type != "b":
                raise ValueError("diagram enumeration is only available for --type b")
            _emit([serialize.diagram_b_to_json(d) for d in arcs_b.all_diagrams(args.n)])
    except CliError:
        raise
    except (ValueError, ScopeExceeded) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def _two_arcs(args):
    a = serialize.arc_b_from_json(_load_json(args.first))
    b = serialize.arc_b_from_json(_load_json(args.second))
    return a, b


def cmd_forcing(args) -> int:
    try:
        a, b = _two_arcs(args)
        _emit(
            {
                "subarc": forcing.is_subarc(a, b),
                "loose_subarc": forcing.is_loose_subarc(a, b),
                "forces": forcing.forces(a, b),
            }
        )
    except CliError:
        raise
    except (ValueError, KeyError) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def cmd_arrows(args) -> int:
    try:
        if args.first and args.second:
            a, b = _two_arcs(args)
            _emit({"arrow": forcing.has_arrow(a, b)})
        else:
            edges = [
                [serialize.arc_b_to_json(e.source), serialize.arc_b_to_json(e.target)]
                for e in forcing.arrow_edges(args.n)
            ]
            _emit({"n": args.n, "arrows": edges})
    except CliError:
        raise
    except (ValueError, KeyError) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def cmd_shards(args) -> int:
    try:
        cox = CoxeterType(args.type.upper(), args.n)
        arr = geo.coxeter_arrangement(cox)
        out = []
        for sh in geo.shards(arr):
            out.append(
                {
                    "carrier": list(arr.hyperplanes[sh.carrier].normal),
                    "sides": [
                        {"normal": list(arr.hyperplanes[k].normal), "sign": s}
                        for k, s in sh.sides
                    ],
                }
            )
        _emit({"type": args.type, "n": args.n, "shards": out})
    except CliError:
        raise
    except (ValueError, ScopeExceeded) as exc:
        raise CliError(3, str(exc)) from exc
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="arclat", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="permutation <-> noncrossing arc diagram")
    p.add_argument("--type", choices=("a", "b"), required=True)
    p.add_argument("--perm", help="permutation as a JSON array")
    p.add_argument("--diagram", help="diagram as JSON")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("quotient", help="elements, count, or covers of a quotient")
    p.add_argument("--congruence", required=True, help="name or JSON")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--count", action="store_true")
    g.add_argument("--hasse", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--format", choices=("svg", "ascii", "tikz"), default="svg")
    p.add_argument("--width", type=int, default=360)
    p.add_argument("--height", type=int, default=360)
    p.add_argument("--spacing", type=int, default=40)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="list arcs or diagrams")
    p.add_argument("--what", choices=("arcs", "diagrams"), required=True)
    p.add_argument("--type", choices=("a", "b"), default="b")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("forcing", help="subarc and forcing tests for two arcs")
    p.add_argument("first", help="arc JSON")
    p.add_argument("second", help="arc JSON")
    p.set_defaults(func=cmd_forcing)

    p = sub.add_parser("arrows", help="single forcing steps")
    p.add_argument("first", nargs="?", help="arc JSON")
    p.add_argument("second", nargs="?", help="arc JSON")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_arrows)

    p = sub.add_parser("shards", help="hyperplane pieces of a reflection arrangement")
    p.add_argument("--type", choices=("a", "b"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_shards)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
