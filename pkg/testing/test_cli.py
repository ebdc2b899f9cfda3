import json

import pytest

from choice_tools import load_fixture
from choice_tools.cli import EXIT_DEFECT, EXIT_FAILURE, EXIT_INPUT, EXIT_OK, main
from choice_tools.dataset import read_dataset


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(["--log-level", "WARNING", *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def test_generate_lemma1_table(run, tmp_path, lemma1):
    out = tmp_path / "generated" / "lemma1.json"
    code, _, _ = run("generate", "--weak-order", "x,y,z", "--linear-order", "x > y > z", "--out", str(out))
    assert code == EXIT_OK
    assert read_dataset(out).correspondence == lemma1


def test_generate_to_stdout(run, example1):
    code, stdout, _ = run("generate", "--weak-order", "x,y > z", "--linear-order", "z > y > x")
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload == load_fixture("example1").to_dict()


def test_generate_explicit_labels(run):
    code, stdout, _ = run("generate", "--weak-order", "b > a", "--linear-order", "a > b", "--labels", "a,b")
    assert code == EXIT_OK
    assert json.loads(stdout)["alternatives"] == ["a", "b"]


def test_generate_bad_order(run):
    code, _, stderr = run("generate", "--weak-order", "x > y", "--linear-order", "x > y > z")
    assert code == EXIT_INPUT
    assert "error" in stderr


def test_check_example3_names_condition1(run, fixture_dir):
    code, stdout, _ = run("check", "--in", str(fixture_dir / "example3.json"))
    assert code == EXIT_FAILURE
    assert "cond1: FAIL" in stdout
    assert "beta: pass" in stdout


def test_check_lemma1_json(run, fixture_dir):
    code, stdout, _ = run("check", "--in", str(fixture_dir / "lemma1.json"), "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload["axioms"]["alpha"]["pass"] is False
    assert payload["axioms"]["alpha"]["witness"]["alternatives"] == ["y"]
    assert all(payload["axioms"][name]["pass"] for name in ("cond1", "cond2", "cond3", "cond4", "cond5"))


def test_generate_then_recover_round_trip(run, tmp_path):
    path = tmp_path / "pair.json"
    run("generate", "--weak-order", "y > x,z", "--linear-order", "z > x > y", "--out", str(path))
    code, stdout, _ = run("recover", "--in", str(path), "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload["outcome"] == "success"
    assert payload["regenerated"] is True

    # the recovered pair must regenerate the same table
    again = tmp_path / "again.json"
    run("generate", "--weak-order", payload["weak_order"], "--linear-order", payload["linear_order"],
        "--labels", "y,x,z", "--out", str(again))
    assert read_dataset(again).correspondence == read_dataset(path).correspondence


def test_recover_lemma1_text(run, fixture_dir):
    code, stdout, _ = run("recover", "--in", str(fixture_dir / "lemma1.json"))
    assert code == EXIT_OK
    assert "R: x,y,z" in stdout
    assert "L: x > y > z" in stdout


def test_recover_example3_failure(run, fixture_dir):
    code, stdout, _ = run("recover", "--in", str(fixture_dir / "example3.json"), "--format", "json")
    assert code == EXIT_FAILURE
    payload = json.loads(stdout)
    assert payload["condition"] == "cond1"
    assert payload["witness"]["menus"] == [["x", "y"], ["x", "y", "z"]]


def test_oracle_example1(run, fixture_dir):
    code, stdout, _ = run("oracle", "--in", str(fixture_dir / "example1.json"), "--format", "json")
    assert code == EXIT_OK
    found = json.loads(stdout)["representations"]
    assert len(found) >= 7
    assert {"weak_order": "x,y > z", "linear_order": "z > y > x"} in found
    assert sum(row["weak_order"] == "y > x > z" for row in found) == 6


def test_oracle_rational_lemma1(run, fixture_dir):
    code, stdout, _ = run("oracle", "--in", str(fixture_dir / "lemma1.json"), "--rational")
    assert code == EXIT_FAILURE
    assert "No solution found." in stdout


def test_sweep_n3(run):
    code, stdout, _ = run("sweep", "--n", "3", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload["scanned"] == 189
    assert payload["discrepancies"] == []


def test_sweep_sample(run):
    code, stdout, _ = run("sweep", "--n", "4", "--sample", "200", "--seed", "3")
    assert code == EXIT_OK
    assert "n=4 mode=sample seed=3" in stdout
    assert "discrepancies=0" in stdout


def test_sweep_sample_count_from_config(run, tmp_path):
    config = tmp_path / "config.ini"
    config.write_text("[DEFAULT]\nLOG_LEVEL = WARNING\n\n[sweep]\nSAMPLE_COUNT = 40\nSEED = 5\n")
    code, stdout, _ = run("--config", str(config), "sweep", "--n", "4", "--sample", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload["scanned"] == 40
    assert payload["seed"] == 5


def test_sweep_sample_shows_progress(run):
    code, _, stderr = run("sweep", "--n", "4", "--sample", "30", "--shards", "1")
    assert code == EXIT_OK
    assert "sweep n=4" in stderr


def test_sweep_exhaustive_n4_needs_flag(run):
    code, _, _ = run("sweep", "--n", "4", "--exhaustive")
    assert code == EXIT_INPUT


def test_census_csv(run, tmp_path):
    out = tmp_path / "census.csv"
    code, _, _ = run("census", "--n", "2", "--out", str(out))
    assert code == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].startswith("index,alpha,beta")
    assert len(lines) == 4


def test_missing_input_file(run, tmp_path):
    code, _, stderr = run("check", "--in", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT
    assert "error" in stderr


def test_incomplete_dataset(run, tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"alternatives": ["x", "y", "z"], "choices": [{"menu": ["x", "y"], "choice": ["x"]}]}))
    code, _, stderr = run("recover", "--in", str(path))
    assert code == EXIT_INPUT
    assert "incomplete domain" in stderr


def test_missing_config(run, tmp_path):
    code, _, _ = run("--config", str(tmp_path / "nope.ini"), "sweep", "--n", "2")
    assert code == EXIT_INPUT


def test_internal_defect_exit(run, fixture_dir, monkeypatch):
    from choice_tools import cli
    from choice_tools.errors import InternalDefectError

    def broken(corr):
        raise InternalDefectError("regenerated table differs")

    monkeypatch.setattr(cli, "recover", broken)
    code, _, _ = run("recover", "--in", str(fixture_dir / "lemma1.json"))
    assert code == EXIT_DEFECT
