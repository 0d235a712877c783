import json

import pytest

from coalglab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def arrow_file(tmp_path, capsys):
    path = tmp_path / "arrow.json"
    assert main(["path-coalgebra", "arrow", "--field", "GF:3", "--out", str(path)]) == 0
    capsys.readouterr()
    return str(path)


def test_path_coalgebra_document(capsys):
    code, out, _ = run(capsys, "path-coalgebra", "arrow")
    assert code == 0
    doc = json.loads(out)
    assert doc["basis"] == ["a", "b", "alpha"]
    assert doc["version"] == "coalglab/1"


def test_check_valid(capsys, arrow_file):
    code, out, _ = run(capsys, "check", arrow_file, "--format", "text")
    assert code == 0 and "valid" in out


def test_check_invalid(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"version": "coalglab/1", "field": "Q", "basis": ["g"],
                               "delta": [[0, 0, 0, "1"]], "counit": ["0"]}))
    code, out, _ = run(capsys, "check", str(bad))
    assert code == 1
    assert json.loads(out)["result"]["valid"] is False


def test_wedge_of_vertices(capsys, arrow_file):
    code, out, _ = run(capsys, "wedge", arrow_file, "--left", "a", "--right", "b")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 3


def test_cfdim_agrees_with_oracle(capsys, arrow_file):
    code, out, _ = run(capsys, "cfdim", arrow_file, "--dimvec", "a:1,b:1", "--format", "text")
    assert code == 0
    assert "dimension 3 of 3" in out and "oracle: equal" in out


def test_ext_quiver(capsys, arrow_file):
    code, out, _ = run(capsys, "ext-quiver", arrow_file)
    assert code == 0
    assert json.loads(out)["result"]["multiplicities"] == [["a", "b", 1]]


def test_wild_witness_expectation(capsys, arrow_file, tmp_path):
    code, _, _ = run(capsys, "wild-witness", arrow_file, "--expect", "found")
    assert code == 1
    code, _, _ = run(capsys, "wild-witness", "--format", "text", arrow_file, "--expect", "none")
    assert code == 0
    three = tmp_path / "three.json"
    assert main(["path-coalgebra", "three-loops", "--out", str(three)]) == 0
    code, out, _ = run(capsys, "wild-witness", str(three), "--expect", "found", "--format", "text")
    assert code == 0 and "three-loops" in out


def test_localize(capsys, arrow_file):
    code, out, _ = run(capsys, "localize", arrow_file, "--keep", "a", "--format", "text")
    assert code == 0 and "dimension 1" in out


def test_enumerate(capsys, arrow_file):
    code, out, _ = run(capsys, "enumerate", arrow_file, "--dimvec", "a:1,b:1", "--format", "text")
    assert code == 0 and out.startswith("2 isomorphism classes")


def test_verify_embedding_zero_fails(capsys):
    code, out, _ = run(capsys, "verify-embedding", "zero", "--format", "text", "--max-dim", "2", "--max-vars", "1")
    assert code == 1
    assert "FAIL zero.iso_reflection" in out


def test_field_mismatch_is_input_error(capsys, arrow_file):
    code, _, err = run(capsys, "coradical", arrow_file, "--field", "Q")
    assert code == 2 and "disagrees" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent.json")
    assert code == 2 and "cannot read" in err


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == 2


def test_budget_exceeded_exit_code(capsys):
    code, _, err = run(capsys, "path-coalgebra", "three-loops", "--max-len", "6", "--budget", "max_basis=50")
    assert code == 2 and err


def test_output_is_deterministic(capsys, arrow_file):
    first = run(capsys, "enumerate", arrow_file, "--dimvec", "a:1,b:1")
    second = run(capsys, "enumerate", arrow_file, "--dimvec", "a:1,b:1")
    assert first == second
