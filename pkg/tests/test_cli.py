import json

import pytest

from superharm.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_dims_table(capsys):
    code, out, _ = run(["dims", "--m", "2", "--n", "1", "--max-k", "4"], capsys)
    assert code == 0
    row = [line for line in out.splitlines() if line.strip().startswith("2")][0]
    assert row.split() == ["2", "8", "7"]


def test_dims_json(capsys):
    code, out, _ = run(
        ["dims", "--m", "2", "--n", "1", "--max-k", "2", "--format", "json"], capsys
    )
    obj = json.loads(out)
    assert obj["rows"][2] == {"k": 2, "dimP": 8, "dimH": 7}


def test_laplace_command(capsys):
    code, out, _ = run(["laplace", "--m", "2", "--n", "1", "x1^2 + e1*e2"], capsys)
    assert code == 0 and out.strip() == "-6"
    code, out, _ = run(
        ["laplace", "--m", "2", "--n", "1", "--variant", "fermionic", "e1*e2"], capsys
    )
    assert out.strip() == "-4"


def test_pizzetti_pole_exit_code(capsys):
    code, _, err = run(["pizzetti", "--m", "2", "--n", "1", "1"], capsys)
    assert code == 2
    assert "pole" in err


def test_pizzetti_value(capsys):
    code, out, _ = run(
        ["pizzetti", "--m", "3", "--n", "1", "--format", "json", "1"], capsys
    )
    assert json.loads(out) == {"coeff": "2", "halfPiExp": 0}


def test_berezin_value(capsys):
    code, out, _ = run(
        ["berezin", "--m", "0", "--n", "1", "--format", "json", "e1*e2"], capsys
    )
    assert code == 0
    assert json.loads(out) == {"coeff": "1", "halfPiExp": -2}


def test_fischer_report(capsys):
    code, out, _ = run(
        ["fischer", "--m", "3", "--n", "1", "--format", "json", "x1^4 + x1*x2"],
        capsys,
    )
    assert code == 0
    obj = json.loads(out)
    assert [rep["k"] for rep in obj["reports"]] == [2, 4]


def test_irreps_command(capsys):
    code, out, _ = run(
        ["irreps", "--m", "2", "--n", "1", "--format", "json", "x1*x2"], capsys
    )
    obj = json.loads(out)
    assert obj["k"] == 2
    assert [(c["l"], c["p"], c["q"]) for c in obj["components"]] == [(0, 2, 0)]


def test_sphere_command(capsys):
    code, out, _ = run(
        ["sphere", "--m", "3", "--n", "1", "--weights", "1,0", "x1^2 + 1"], capsys
    )
    assert code == 0 and out.strip() == "2"
    code, _, err = run(
        ["sphere", "--m", "3", "--n", "1", "--weights", "1", "x1"], capsys
    )
    assert code == 1  # wrong weight count


def test_parse_error_exit_code(capsys):
    code, _, err = run(["pizzetti", "--m", "2", "--n", "1", "x1^^"], capsys)
    assert code == 1
    assert "parse error" in err


def test_missing_required_flag_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--m", "2"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_input_file_and_json_input(tmp_path, capsys):
    path = tmp_path / "poly.txt"
    path.write_text("x1^2 + e1*e2\n")
    code, out, _ = run(
        ["laplace", "--m", "2", "--n", "1", "--input", str(path)], capsys
    )
    assert code == 0 and out.strip() == "-6"
    path.write_text(
        json.dumps(
            {"m": 2, "n": 1, "terms": [{"coeff": "1", "bos": [2, 0], "ferm": []}]}
        )
    )
    code, out, _ = run(
        ["laplace", "--m", "2", "--n", "1", "--input", str(path)], capsys
    )
    assert code == 0 and out.strip() == "-2"


def test_round_trip_via_cli_output(capsys):
    code, out, _ = run(
        ["laplace", "--m", "2", "--n", "1", "--format", "json", "x1^4"], capsys
    )
    obj = json.loads(out)
    code2, out2, _ = run(
        ["laplace", "--m", "2", "--n", "1", json.dumps(obj)], capsys
    )
    assert code2 == 0  # JSON inline input accepted


def test_verify_command(capsys):
    code, out, _ = run(
        ["verify", "--m", "1", "--n", "1", "--count", "4", "--seed", "1"], capsys
    )
    assert code == 0
    assert "FAIL" not in out and "PASS" in out
