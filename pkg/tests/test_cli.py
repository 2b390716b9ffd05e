import json
import subprocess
import sys
from pathlib import Path

import pytest

from skeletal.cli import main

M4_TEXT = "v 4\ne 0 1 2\ne 0 1 3\ne 0 2 3\ne 2 3\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "t3.txt").write_text("v 3\ne 0 1\ne 0 2\ne 1 2\n")
    (tmp_path / "m4.txt").write_text(M4_TEXT)
    (tmp_path / "pi0.json").write_text(json.dumps({"edges": {"0": [0, 1], "3": [2, 3]}}))
    return tmp_path


def run(capsys, *argv):
    code = main([str(x) for x in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_t3(files, capsys):
    code, out, _ = run(capsys, "solve", files / "t3.txt")
    data = json.loads(out)
    assert code == 0
    assert sum(v is not None for v in data["edges"].values()) == 1
    assert data["partition"] == [[0], [1], [2]]


def test_solve_then_verify(files, capsys):
    code, out, _ = run(capsys, "solve", files / "m4.txt", "--trace", files / "trace.json", "--dot", files / "dot")
    assert code == 0
    data = json.loads(out)
    (files / "q.json").write_text(json.dumps({"edges": data["edges"]}))
    (files / "p.json").write_text(json.dumps({"partition": data["partition"]}))
    assert json.loads((files / "trace.json").read_text())["rows"]
    assert (files / "dot" / "result.dot").exists()
    code, out, _ = run(capsys, "verify", files / "m4.txt", "--quasigraph", files / "q.json",
                       "--partition", files / "p.json")
    assert code == 0 and json.loads(out)["skeletal"]


def test_verify_failure(files, capsys):
    (files / "p.json").write_text(json.dumps([[0], [1], [2]]))
    code, out, _ = run(capsys, "verify", files / "t3.txt", "--quasigraph", files / "pi0.json",
                       "--partition", files / "p.json")
    assert code == 2  # hyperedge 3 does not exist in T3
    (files / "e.json").write_text(json.dumps({"edges": {}}))
    code, out, _ = run(capsys, "verify", files / "t3.txt", "--quasigraph", files / "e.json",
                       "--partition", files / "p.json")
    assert code == 1 and not json.loads(out)["skeletal"]


def test_solve_is_deterministic(files, capsys):
    outs = {run(capsys, "solve", files / "m4.txt")[1] for _ in range(3)}
    assert len(outs) == 1


@pytest.mark.parametrize("check", ["anticomponents", "quasicycles", "skeletal", "leading-set", "max-search"])
def test_oracle_checks_agree(files, capsys, check):
    code, out, _ = run(capsys, "oracle", files / "m4.txt", "--check", check, "--quasigraph", files / "pi0.json")
    assert code == 0 and json.loads(out)["agree"]


def test_trace(files, capsys):
    code, out, _ = run(capsys, "trace", files / "m4.txt", "--quasigraph", files / "pi0.json")
    assert code == 0 and json.loads(out)["rows"]


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--vertices", 5, "--edges", 6, "--seed", 7)
    assert code == 0 and out.startswith("v 5\n") and out.count("\ne ") == 6
    assert run(capsys, "gen", "--vertices", 5, "--edges", 6, "--seed", 7)[1] == out


def test_switches_output_reads_back(tmp_path, capsys):
    (tmp_path / "bl.txt").write_text("v 5\ne 4 0\ne 4 1\ne 4 2 3\ne 0 1\n")
    code, out, _ = run(capsys, "solve", tmp_path / "bl.txt", "--allow-switches")
    assert code == 0
    data = json.loads(out)
    assert "switches" in data
    (tmp_path / "h2.txt").write_text(data["hypergraph"])
    (tmp_path / "q.json").write_text(json.dumps({"edges": data["edges"]}))
    (tmp_path / "p.json").write_text(json.dumps(data["partition"]))
    code, _, _ = run(capsys, "verify", tmp_path / "h2.txt", "--allow-parallel",
                     "--quasigraph", tmp_path / "q.json", "--partition", tmp_path / "p.json")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["solve", "missing.txt"],
    ["gen", "--vertices", "3", "--edges", "9", "--seed", "1"],
])
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert json.loads(capsys.readouterr().err)["error"]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["gen", "--vertices", "3", "--edges", "1", "--seed", "-1"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "usage"


def test_parse_error_exit_code(tmp_path, capsys):
    (tmp_path / "bad.txt").write_text("v 3\ne 0 1 2 0\n")
    code, _, err = run(capsys, "solve", tmp_path / "bad.txt")
    assert code == 2 and "line 2" in err


def test_budget_exit_code(tmp_path, capsys):
    lines = ["v 9"] + [f"e {i} {(i + 1) % 9} {(i + 2) % 9}" for i in range(9)]
    (tmp_path / "big.txt").write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "oracle", tmp_path / "big.txt", "--check", "quasicycles")
    assert code == 3 and json.loads(err)["error"] == "budget"


def test_module_entry_point(files):
    src = Path(__file__).resolve().parents[1] / "src"
    proc = subprocess.run([sys.executable, "-m", "skeletal.cli", "solve", str(files / "t3.txt")],
                          capture_output=True, text=True, env={"PYTHONPATH": str(src)})
    assert proc.returncode == 0 and json.loads(proc.stdout)["partition"]
