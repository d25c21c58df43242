import io
import json
import os
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from oddgrace.cli import run

GOLDEN = Path(__file__).parent / "golden"

# name -> (argv, schema or None for non-JSON output)
COMMANDS = {
    "gen_near_complete": (["gen", "K 3 2 - K1 1"], None),
    "chi_circulant": (["chi", "circulant 11 1,2"], "coloring"),
    "bound_mobius": (["bound", "mobius 18"], "bound_report"),
    "solve_k44": (["solve", "K 4 4", "--no-timing"], "solve_result"),
    "solve_odd_cycle": (["solve", "cycle 5", "--no-timing"], "solve_result"),
    "exists_path": (["exists", "path 3", "-k", "3", "--no-timing"], "exists_result"),
    "enumerate_k22": (["enumerate", "K 2 2", "-k", "5", "--dedupe"], "enumerate_result"),
    "construct_k42": (["construct", "K 4 2"], "construct_result"),
    "construct_dot": (["construct", "K 2 2", "--format", "dot"], None),
    "verify_zero_label": (["verify", "K 2 2", str(GOLDEN / "k22_zero_labels.json")], "verification_report"),
    "oracle_path": (["oracle", "path 3"], "oracle_result"),
    "theorem_check_domain": (["theorem-check", "--only", "8", "--format", "json"], "theorem_check"),
}


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def schema(name):
    text = resources.files("oddgrace.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_golden_output(name):
    argv, _ = COMMANDS[name]
    code, out, _ = invoke(argv)
    assert code == 0
    path = GOLDEN / f"{name}.out"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


@pytest.mark.parametrize("name", sorted(n for n, (_, s) in COMMANDS.items() if s))
def test_json_matches_schema(name):
    argv, schema_name = COMMANDS[name]
    _, out, _ = invoke(argv)
    jsonschema.validate(json.loads(out), schema(schema_name))


def test_schemas_are_valid_documents():
    for entry in resources.files("oddgrace.schemas").iterdir():
        if entry.name.endswith(".schema.json"):
            jsonschema.Draft202012Validator.check_schema(json.loads(entry.read_text()))


@pytest.mark.parametrize("argv,schema_name", [
    (["solve", "K 5 4 - K1 2"], "solve_result"),
    (["exists", "K 3 3", "-k", "10"], "exists_result"),
    (["enumerate", "path 3", "-k", "4"], "enumerate_result"),
    (["construct", "mobius 14"], "construct_result"),
    (["bound", "cycle 7"], "bound_report"),
    (["chi", "K 3 3", "--square", "u", "--greedy"], "coloring"),
    (["oracle", "cycle 5", "--cap", "6"], "oracle_result"),
])
def test_more_outputs_match_schemas(argv, schema_name):
    code, out, _ = invoke(argv)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(schema_name))


def test_gen_round_trip(tmp_path):
    for family in ("K 4 4", "K 3 2 - K1 1", "mobius 10", "path 5"):
        _, edges, _ = invoke(["gen", family])
        path = tmp_path / "g.edges"
        path.write_text(edges)
        direct = invoke(["solve", family, "--no-timing"])[1]
        via_file = invoke(["solve", str(path), "--no-timing"])[1]
        assert json.loads(direct)["chi"] == json.loads(via_file)["chi"]
        assert direct == via_file


def test_stdin_graph(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n"))
    code, out, _ = invoke(["solve", "-", "--no-timing"])
    assert code == 0 and json.loads(out)["chi"] == 4


def test_solve_k44_value():
    _, out, _ = invoke(["solve", "K 4 4"])
    data = json.loads(out)
    assert data["chi"] == 13 and "wall_time" in data["stats"]


def test_bound_mobius_square_entry():
    _, out, _ = invoke(["bound", "mobius 18"])
    assert {"value": 10, "source": "SquareChromatic"} in json.loads(out)["upper"]


def test_verify_valid_labeling(tmp_path):
    path = tmp_path / "lab.json"
    path.write_text('{"k": 5, "labels": [1, 5, 2, 4]}')
    code, out, _ = invoke(["verify", "K 2 2", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is True and data["parity_consistent"] is True


def test_infinite_chi_is_a_string():
    code, out, _ = invoke(["solve", "cycle 5"])
    assert code == 0 and json.loads(out)["chi"] == "infinite"


@pytest.mark.parametrize("argv,code", [
    ([], 1),
    (["nope"], 1),
    (["solve", "K 4"], 1),
    (["exists", "K 2 2"], 1),
    (["solve", "K 3 3", "--node-limit", "0"], 1),
    (["verify", "K 3 3", "missing.json"], 1),
    (["solve", "K 5 5", "--node-limit", "30"], 2),
    (["solve", "K 3 3", "--k-max", "9"], 3),
    (["construct", "cycle 5"], 3),
    (["chi", "cycle 5", "--square", "u"], 3),
    (["exists", "K 2 2", "-k", "4", "--format", "dot"], 1),
])
def test_exit_codes(argv, code):
    assert invoke(argv)[0] == code


def test_disconnected_edge_list(tmp_path):
    path = tmp_path / "two.edges"
    path.write_text("0 1\n2 3\n")
    code, _, err = invoke(["solve", str(path)])
    assert code == 3 and "component" in err


def test_node_limit_env(monkeypatch):
    monkeypatch.setenv("OGK_NODE_LIMIT", "15")
    assert invoke(["solve", "K 5 5"])[0] == 2


def test_text_and_dot_formats():
    _, out, _ = invoke(["solve", "K 2 2", "--format", "text"])
    assert out.startswith("chi_og = 5")
    _, out, _ = invoke(["solve", "K 2 2", "--format", "dot"])
    assert out.startswith("graph") and "(5)" in out
    _, out, _ = invoke(["theorem-check", "--only", "8", "--no-timing"])
    assert out == "PASS  8  label domain starts at 1\n"


def test_theorem_check_all_pass():
    code, out, _ = invoke(["theorem-check", "--no-timing"])
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == ["PASS"] * 9


def test_theorem_check_failure_exit_code(monkeypatch):
    from oddgrace import acceptance

    monkeypatch.setattr(acceptance, "CHECKS", [(99, "always fails", lambda: (False, "forced"))])
    code, out, _ = invoke(["theorem-check", "--no-timing"])
    assert code == 4
    assert out == "FAIL  99  always fails\n      forced\n"
