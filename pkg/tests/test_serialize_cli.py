import io
import json
import sys

import pytest

from arclat import arcs_a, arcs_b, catalog, cli, forcing, serialize
from arclat.catalog import Designation
from arclat.permutations import SignedPermutation, all_signed_permutations


def run_cli(*argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = cli.main(list(argv))
    finally:
        sys.stdout = old
    return code, buf.getvalue()


@pytest.mark.parametrize("n", [2, 3])
def test_arc_roundtrip(n):
    for arc in arcs_b.all_arcs(n):
        assert serialize.arc_b_from_json(serialize.arc_b_to_json(arc)) == arc
    for arc in arcs_a.all_arcs_n(n):
        assert serialize.arc_a_from_json(serialize.arc_a_to_json(arc)) == arc


@pytest.mark.parametrize("n", [2, 3])
def test_diagram_and_congruence_roundtrip(n):
    for d in arcs_b.all_diagrams(n):
        assert serialize.diagram_b_from_json(serialize.diagram_b_to_json(d)) == d
    for theta in forcing.all_congruences(n):
        back = serialize.congruence_from_json(serialize.congruence_to_json(theta))
        assert back.contracted == theta.contracted


def test_designation_and_ncp_roundtrip():
    d = Designation(("R", "L"))
    assert serialize.designation_from_json(serialize.designation_to_json(d)) == d
    theta = catalog.cambrian_congruence(3, d)
    for pi in forcing.quotient_elements(theta):
        part = catalog.ncp_of_diagram(arcs_b.diagram_of_signed(pi), d)
        assert serialize.ncp_from_json(serialize.ncp_to_json(part)) == part


def test_map_subcommand_b():
    code, out = run_cli("map", "--type", "b", "--perm", "[-1,2]")
    assert code == 0
    data = json.loads(out)
    assert data == {"n": 2, "arcs": [{"kind": "orbifold", "top": 1, "right": []}]}
    code, out = run_cli("map", "--type", "b", "--diagram", json.dumps(data))
    assert code == 0 and json.loads(out) == [-1, 2]


def test_map_subcommand_a():
    code, out = run_cli("map", "--type", "a", "--perm", "[1,2,3]")
    assert code == 0
    assert json.loads(out) == {"n": 3, "arcs": []}
    code, out = run_cli("map", "--type", "a", "--perm", "[3,1,2]")
    diagram = json.loads(out)
    code, out = run_cli("map", "--type", "a", "--diagram", json.dumps(diagram))
    assert json.loads(out) == [3, 1, 2]


def test_map_errors():
    assert run_cli("map", "--type", "b", "--perm", "[-1,2")[0] == 2
    assert run_cli("map", "--type", "b", "--perm", "[1,1]")[0] == 3
    assert run_cli("map", "--type", "b")[0] == 2


def test_quotient_subcommand():
    code, out = run_cli("quotient", "--congruence", "cambrian:R", "--n", "2", "--count")
    assert code == 0 and json.loads(out) == {"count": 6}
    code, out = run_cli("quotient", "--congruence", "parabolic:s0", "--n", "3", "--count")
    assert code == 0 and json.loads(out) == {"count": 6}
    code, out = run_cli("quotient", "--congruence", "identity", "--n", "3", "--count")
    assert code == 0 and json.loads(out) == {"count": 48}
    assert run_cli("quotient", "--congruence", "nonsense", "--n", "2", "--count")[0] == 3


def test_quotient_json_congruence():
    theta = catalog.parabolic_congruence(2, [0])
    text = json.dumps(serialize.congruence_to_json(theta))
    code, out = run_cli("quotient", "--congruence", text, "--n", "2", "--count")
    assert code == 0 and json.loads(out) == {"count": 2}


def test_quotient_hasse():
    code, out = run_cli("quotient", "--congruence", "cambrian:R", "--n", "2", "--hasse")
    assert code == 0
    data = json.loads(out)
    assert len(data["elements"]) == 6
    assert len(data["covers"]) == 6  # hexagon-shaped quotient


def test_verify_subcommand():
    code, out = run_cli("verify", "--suite", "forcing-closure", "--n", "3")
    assert code == 0
    assert json.loads(out)["pass"] is True
    assert run_cli("verify", "--suite", "unknown", "--n", "3")[0] == 3


def test_verify_failure_exit_code(monkeypatch):
    from arclat import verify as verify_mod

    def failing(n):
        rep = verify_mod.Report("stub", n)
        rep.check("always fails", False, counterexample=("x",))
        return rep.done()

    monkeypatch.setitem(verify_mod.SUITES, "stub", failing)
    code, out = run_cli("verify", "--suite", "stub", "--n", "1")
    assert code == 1
    assert json.loads(out)["checks"][0]["counterexample"]


def test_enumerate_subcommand():
    code, out = run_cli("enumerate", "--what", "arcs", "--type", "b", "--n", "2")
    assert code == 0 and len(json.loads(out)) == 6
    code, out = run_cli("enumerate", "--what", "diagrams", "--n", "2")
    assert code == 0 and len(json.loads(out)) == 8
    assert run_cli("enumerate", "--what", "diagrams", "--n", "7")[0] == 3


def test_forcing_and_arrows_subcommands():
    orb1 = json.dumps({"kind": "orbifold", "top": 1, "right": []})
    orb2 = json.dumps({"kind": "orbifold", "top": 2, "right": []})
    code, out = run_cli("forcing", orb1, orb2)
    assert code == 0
    data = json.loads(out)
    assert data == {"subarc": True, "loose_subarc": True, "forces": True}
    code, out = run_cli("arrows", orb1, orb2)
    assert code == 0 and json.loads(out) == {"arrow": True}
    code, out = run_cli("arrows", "--n", "2")
    assert code == 0
    arrows = json.loads(out)["arrows"]
    closure = forcing.arrow_closure(arcs_b.all_arcs(2))
    count = sum(
        1
        for a in arcs_b.all_arcs(2)
        for b in arcs_b.all_arcs(2)
        if forcing.has_arrow(a, b)
    )
    assert len(arrows) == count


def test_shards_subcommand():
    code, out = run_cli("shards", "--type", "b", "--n", "2")
    assert code == 0
    assert len(json.loads(out)["shards"]) == 6
    assert run_cli("shards", "--type", "b", "--n", "5")[0] == 3


def test_render_subcommand():
    d = arcs_b.diagram_of_signed(SignedPermutation((-2, 1, 3)))
    text = json.dumps(serialize.diagram_b_to_json(d))
    code, out = run_cli("render", "--diagram", text, "--format", "svg")
    assert code == 0 and out.startswith("<svg")
    code2, out2 = run_cli("render", "--diagram", text, "--format", "svg")
    assert out == out2
    code, out = run_cli("render", "--diagram", text, "--format", "ascii")
    assert code == 0 and "x" in out
