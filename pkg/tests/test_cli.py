import json

import pytest

from prm_hull.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_json(err):
    return json.loads([line for line in err.splitlines() if line.startswith("{")][-1])


def test_hull_self_orthogonal(capsys):
    code, out, _ = run(capsys, "hull", "-q", "5", "-m", "2", "-v", "4")
    assert code == 0
    assert json.loads(out)["case_tag"] == "SelfOrthogonalBoundary"


def test_hull_lower_open(capsys):
    code, out, _ = run(capsys, "hull", "-q", "4", "-m", "3", "-v", "4")
    data = json.loads(out)
    assert code == 0
    assert data["defect"] == 11
    assert data["interval"] == 2
    assert data["hull_dim"] == data["code_dim"] - 11


def test_hull_rejects_non_prime_power(capsys):
    code, out, err = run(capsys, "hull", "-q", "6", "-m", "2", "-v", "1")
    assert code == 2
    assert out == ""
    error = error_json(err)
    assert error["error_type"] == "NotPrimePowerError"
    assert error["error_function"] == "hull"


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "-q", "2", "-m", "2", "-v", "1")
    assert code == 0
    assert json.loads(out) == {"q": 2, "m": 2, "v": 1, "length": 7, "code_dim": 3}


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "-q", "4", "-v", "4")
    data = json.loads(out)
    assert code == 0
    assert (data["r"], data["A"], data["delta"]) == (2, 10, 11)
    assert data["delta_closed_chain"] == data["delta_explicit"] == 11


def test_delta_boundary_degree(capsys):
    code, _, err = run(capsys, "delta", "-q", "4", "-v", "3")
    assert code == 2
    assert error_json(err)["error_type"] == "IntervalMismatchError"


def test_a_count(capsys):
    code, out, _ = run(capsys, "a-count", "-q", "4", "-v", "4")
    assert code == 0
    assert json.loads(out) == {"q": 4, "r": 2, "v": 4, "A_formula": 10, "A_enumerate": 10}


def test_a_count_high_interval(capsys):
    code, out, _ = run(capsys, "a-count", "-q", "9", "-v", "39")
    data = json.loads(out)
    assert code == 0
    assert data["r"] == 9
    assert data["A_formula"] == data["A_enumerate"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--mode", "dim", "-q", "2,3", "-m", "2"],
        ["verify", "--mode", "schur", "-q", "4,5", "-m", "3"],
        ["verify", "--mode", "hull", "-q", "2", "-m", "3"],
        ["verify", "--mode", "recursion", "-q", "4,5,7", "-m", "2"],
        ["verify", "--mode", "blocks", "-q", "4,5", "-m", "3"],
    ],
)
def test_verify_modes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split("\t")[0] == "mode"
    assert len(lines) > 1
    assert all(line.split("\t")[6] == "true" for line in lines[1:])


def test_verify_dim_rows(capsys):
    _, out, _ = run(capsys, "verify", "--mode", "dim", "-q", "2,3", "-m", "2")
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert len(rows) == 9
    assert rows[0][:6] == ["dim", "2", "1", "1", "2", "2"]


def test_verify_writes_file(capsys, tmp_path):
    target = tmp_path / "sweep.tsv"
    code, out, _ = run(capsys, "verify", "--mode", "dim", "-q", "2", "-m", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0].startswith("mode\tq\tm\tv")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--mode", "dim", "-q", "2", "-m", "1"],
        ["export", "-q", "4", "-v", "2", "E"],
    ],
)
def test_unwritable_out_is_a_usage_error(capsys, tmp_path, argv):
    target = tmp_path / "missing" / "out.txt"
    code, out, err = run(capsys, *argv, "--out", str(target))
    assert code == 2
    assert out == ""
    assert error_json(err)["error_type"] == "FileNotFoundError"
    assert error_json(err)["error_function"] == argv[0]
    assert not target.exists()


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--mode", "weights", "-q", "2")[0] == 2
    assert run(capsys, "verify", "--mode", "dim", "-q", "2,x")[0] == 2
    code, _, err = run(capsys, "verify", "--mode", "dim", "-q", "2,6")
    assert code == 2
    assert error_json(err)["error_type"] == "NotPrimePowerError"


def test_export_G1(capsys):
    code, out, _ = run(capsys, "export", "-q", "4", "-m", "1", "-v", "2", "G1")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 3
    assert all(len(line.split()) == 5 for line in lines)
    again = run(capsys, "export", "-q", "4", "-m", "1", "-v", "2", "G1")[1]
    assert again == out


def test_export_E(capsys):
    code, out, _ = run(capsys, "export", "-q", "4", "-m", "2", "-v", "2", "E")
    assert code == 0
    assert out == "1,1\n0,2\n"


def test_export_invalid_selector(capsys):
    assert run(capsys, "export", "-q", "4", "-m", "2", "-v", "2", "H")[0] == 2


def test_missing_arguments(capsys):
    assert run(capsys, "hull", "-q", "4")[0] == 2
    assert run(capsys)[0] == 2


def test_help_documents_the_schema(capsys):
    code, out, _ = run(capsys, "verify", "--help")
    assert code == 0
    assert "formula_hull_dim" in out
