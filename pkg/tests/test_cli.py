import json

import pytest

from qweyl.cli import main


RANK_ONE = {"n": 1, "eps": [[1, 2]], "beta": [], "mode": {}}
RANK_ONE_C = {"n": 1, "eps": [[1, 2]], "beta": [], "mode": {"c_formal": True}}
OMEGA = {"n": 1, "eps": [[1, 3]], "beta": [], "mode": {}}
OMEGA_SQ = {"n": 1, "eps": [[2, 3]], "beta": [], "mode": {}}


@pytest.fixture
def pfile(tmp_path):
    def write(data, name="params.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(pfile, capsys):
    code, out, _ = run(capsys, ["validate", "--params", pfile(RANK_ONE)])
    assert code == 0
    rep = json.loads(out)
    assert rep["valid"] and rep["n"] == 1 and rep["D"] == 2
    assert rep["free_over_center"]


def test_validate_bad_input(pfile, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, ["validate", "--params", str(bad)])
    assert code == 2 and "error" in err
    code, _, err = run(capsys, ["validate", "--params",
                                pfile({"n": 1, "eps": [[1, 1]], "beta": []},
                                      "r.json")])
    assert code == 2


def test_is_central(pfile, capsys):
    p = pfile(RANK_ONE)
    code, out, _ = run(capsys, ["is-central", "--params", p,
                                "--element", "y1^2"])
    assert code == 0 and json.loads(out)["central"] is True
    code, out, _ = run(capsys, ["is-central", "--params", p,
                                "--element", "y1*x1"])
    assert code == 0 and json.loads(out)["central"] is False
    code, _, err = run(capsys, ["is-central", "--params", p,
                                "--element", "x7"])
    assert code == 2


def test_center_basis(pfile, capsys):
    code, out, _ = run(capsys, ["center-basis", "--params", pfile(RANK_ONE),
                                "--bound", "2"])
    assert code == 0
    rep = json.loads(out)
    assert rep["count"] == 3
    assert {"b": [0], "a": [2]} in \
        [{"b": e["b"], "a": e["a"]} for e in rep["basis"]]


def test_discriminant(pfile, capsys):
    code, out, _ = run(capsys, ["discriminant", "--params", pfile(RANK_ONE)])
    assert code == 0
    rep = json.loads(out)
    assert rep["L"] == [2]
    assert rep["discriminant"] == "(-256)·Y1^2·X1^2 + (128)·Y1·X1 + -16"


def test_verify_commands(pfile, capsys):
    p = pfile(RANK_ONE)
    for which in ("theorem-b", "prop33", "specz"):
        code, out, _ = run(capsys, ["verify", which, "--params", p])
        assert code == 0, which
        assert json.loads(out)["verified"], which
    code, out, _ = run(capsys, ["verify", "theorem-71", "--params",
                                pfile(RANK_ONE_C, "c.json")])
    assert code == 0 and json.loads(out)["verified"]


def test_verify_mode_override(pfile, capsys):
    # --mode c turns the unit-mode file into a formal-c instance
    code, out, _ = run(capsys, ["verify", "theorem-71", "--params",
                                pfile(RANK_ONE), "--mode", "c"])
    assert code == 0 and json.loads(out)["verified"]


def test_poisson_table(pfile, capsys):
    code, out, _ = run(capsys, ["poisson", "--params", pfile(RANK_ONE)])
    assert code == 0
    rep = json.loads(out)
    assert rep["verified"]
    assert rep["brackets"]["{X1,Y1}"]["matches_table"]


def test_aut_check(pfile, capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"source": RANK_ONE, "tau": [-1],
                                "mu": ["1"], "nu": ["1"]}))
    code, out, _ = run(capsys, ["aut-check", "--spec", str(spec)])
    assert code == 0 and json.loads(out)["verified"]
    spec.write_text(json.dumps({"source": RANK_ONE, "tau": [-1],
                                "mu": ["1"], "nu": ["-1"]}))
    code, out, _ = run(capsys, ["aut-check", "--spec", str(spec)])
    assert code == 1 and json.loads(out)["accepted"] is False


def test_isomorphic(pfile, capsys):
    p1 = pfile(OMEGA, "a.json")
    p2 = pfile(OMEGA_SQ, "b.json")
    code, out, _ = run(capsys, ["isomorphic", "--params", p1,
                                "--params2", p2])
    assert code == 0
    rep = json.loads(out)
    assert rep["isomorphic"] and rep["tau"] == [-1]
    assert rep["shape1"]["shape"] == "Torus"


def test_acceptance_subset(pfile, capsys):
    code, out, _ = run(capsys, ["acceptance", "--only", "1,4"])
    assert code == 0
    rep = json.loads(out)
    assert rep["all_ok"] and [r["id"] for r in rep["criteria"]] == [1, 4]
    code, _, err = run(capsys, ["acceptance", "--only", "0,99"])
    assert code == 2


def test_json_output_is_deterministic(pfile, capsys):
    p = pfile(RANK_ONE)
    _, out1, _ = run(capsys, ["center-basis", "--params", p])
    _, out2, _ = run(capsys, ["center-basis", "--params", p])
    assert out1 == out2


def test_text_format(pfile, capsys):
    code, out, _ = run(capsys, ["validate", "--params", pfile(RANK_ONE),
                                "--format", "text"])
    assert code == 0
    assert "valid: True" in out
