import json
import subprocess
import sys

import pytest

from bzero.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main
from bzero.models import builtin_b0


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys):
    assert run(capsys, "check", "xyx = x^2y^2")[0] == EXIT_OK
    code, out, _ = run(capsys, "check", "xy = yx")
    assert code == EXIT_FAIL and "x=e11, y=e12" in out
    code, out, _ = run(capsys, "--model", "b2", "check", "xy + zy + zt <= xt")
    assert code == EXIT_OK and "holds in B2" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "check", "xy = yx")
    data = json.loads(out)
    assert code == EXIT_FAIL and data["holds"] is False and data["counterexample"] == {"x": "e11", "y": "e12"}


def test_decide(capsys):
    assert run(capsys, "decide", "x + y^2 = x^2y^2")[0] == EXIT_OK
    code, out, _ = run(capsys, "--output", "json", "decide", "x = y")
    assert code == EXIT_FAIL and json.loads(out)["failed_condition"] == "content"
    assert run(capsys, "decide", "x^2y + yx^2 = yx^2 + x^2y")[0] == EXIT_OK
    code, out, _ = run(capsys, "decide", "xy = yx")
    assert code == EXIT_FAIL and "arrow" in out


def test_structure(capsys):
    code, out, _ = run(capsys, "--output", "json", "structure", "x^2y + yx^2")
    data = json.loads(out)
    assert code == EXIT_OK and data["rare"] == []
    pairs = {(a["from"], a["to"]) for a in data["arrow"]}
    assert {("x", "y"), ("y", "x")} <= pairs
    code, out, _ = run(capsys, "structure", "xy")
    assert "rare: x y" in out and "x -> y" in out


def test_prove_and_verify(capsys, tmp_path):
    path = tmp_path / "c.json"
    assert run(capsys, "prove", "xyx = x^2y^2", "-o", str(path))[0] == EXIT_OK
    assert run(capsys, "verify", str(path))[0] == EXIT_OK
    data = json.loads(path.read_text())
    line = data["lines"][0]
    line["rhs"] = line["rhs"].replace("y", "z")
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_FAIL and "line 1" in out


def test_verify_malformed(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"goal": {"lhs": "x", "rel": "eq", "rhs": "x"}, "lines": [{"i": 1}]}))
    assert run(capsys, "verify", str(path))[0] == EXIT_FAIL


def test_prove_failures(capsys):
    code, out, _ = run(capsys, "prove", "xy = yx")
    assert code == EXIT_FAIL and "not valid in B0" in out
    code, out, _ = run(capsys, "prove", "y + zx^2 <= yx")
    assert code == EXIT_FAIL and "W1" in out


def test_prove_prints_lines(capsys):
    code, out, _ = run(capsys, "prove", "xy + x = xy^2")
    assert code == EXIT_OK and "AXIOM SQE_R" in out


def test_axioms(capsys):
    code, out, _ = run(capsys, "--output", "json", "axioms")
    names = [r["name"] for r in json.loads(out)["axioms"]]
    assert code == EXIT_OK and len(names) == 26 and "ROOK" in names


def test_model_validate(capsys, tmp_path):
    assert run(capsys, "model-validate", "b2")[0] == EXIT_OK
    path = tmp_path / "m.json"
    path.write_text(json.dumps(builtin_b0().to_json()))
    assert run(capsys, "model-validate", str(path))[0] == EXIT_OK
    path.write_text(json.dumps({"name": "bad", "elements": ["a", "b"], "add": [[0, 0], [1, 1]], "mul": [[0, 0], [0, 0]]}))
    code, out, _ = run(capsys, "model-validate", str(path))
    assert code == EXIT_FAIL and "axiom 1" in out


@pytest.mark.parametrize("argv", [[], ["check", "x ="], ["check", "x^0 = x"], ["--cap", "0", "check", "x = x"],
                                  ["--cap", "1", "check", "x = y"], ["verify", "/nonexistent.json"],
                                  ["--model", "nope", "check", "x = x"]])
def test_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_ERROR


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bzero", "check", "x^2 = x^3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "holds" in proc.stdout


def test_text_and_json_agree(capsys):
    for claim in ["xy = yx", "xy + x = xy^2", "x <= xy^2"]:
        code_t, _, _ = run(capsys, "check", claim)
        code_j, out, _ = run(capsys, "--output", "json", "check", claim)
        assert code_t == code_j and json.loads(out)["holds"] == (code_t == EXIT_OK)
