import csv
import io
import json
import subprocess
import sys

import pytest

import tripleplane.classify as classify
from tripleplane.cli import main, to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--d", "1", "--c", "2,1,1")
    assert code == 0
    payload = json.loads(out)
    assert list(payload)[:5] == ["K2", "chi", "pg", "q", "chi2K"]
    assert (payload["K2"], payload["chi"], payload["pg"], payload["q"]) == (-3, 2, 1, 0)
    assert payload["formal"] is False
    assert payload["plurigenera"][0] == [1, 1, True]


def test_cohomology_json(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--d", "1", "--c", "3,2,1", "--sym", "2", "--twist", "-6"
    )
    assert code == 0
    assert json.loads(out) == {"h0": 11, "h1": 1, "h2": 0, "chi": 10}


def test_admissible_output(capsys):
    code, out, _ = run_cli(capsys, "admissible", "--d", "0", "--c", "2,2,1")
    assert code == 0
    assert out.strip() == "NotAdmissible"
    code, out, err = run_cli(
        capsys, "admissible", "--d", "2", "--c", "6,4,2", "--no-generic"
    )
    assert code == 0
    assert out.strip() == "GciAdmissibleIfSmooth"
    assert "smooth" in err


def test_table_exit_codes(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "table", "table1")
    assert code == 0
    assert "13 rows matched" in out
    # sabotage one expected cell: the diff must be reported with exit 2
    rows = list(classify.NOT_GENERAL_TYPE_ROWS)
    rows[0] = (0, 0, 99) + rows[0][3:]
    monkeypatch.setattr(classify, "NOT_GENERAL_TYPE_ROWS", tuple(rows))
    code, out, err = run_cli(capsys, "table", "notgeneral")
    assert code == 2
    assert "expected 99" in out
    assert "differences" in err


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariants", "--d", "1", "--c", "2,1"])
    assert exc.value.code == 1
    assert "error:" in capsys.readouterr().err


def test_unknown_command_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_data_error_exits_three(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    pairing = [[0] * 5 for _ in range(5)]
    pairing[2][2] = 1  # parity violation
    bad.write_text(json.dumps({"chi_structure": 1, "pairing": pairing}))
    code, _, err = run_cli(capsys, "general", "--input", str(bad))
    assert code == 3
    assert "parity" in err


def test_general_k3_file(tmp_path, capsys):
    coeffs = (0, 1, 1, 1, 1)
    pairing = [[x * y * 2 for y in coeffs] for x in coeffs]
    path = tmp_path / "k3.json"
    path.write_text(
        to_json(
            {"chi_structure": 2, "basis": ["K", "L", "C1", "C2", "C3"], "pairing": pairing}
        )
    )
    code, out, _ = run_cli(capsys, "general", "--input", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["K2T"] == 58
    assert payload["chi2KT"] == payload["chiT"] + payload["K2T"]


def test_slope_output(capsys):
    code, out, _ = run_cli(
        capsys, "slope", "--mode", "twist", "--m", "0", "--d", "1", "--c", "2,1,1"
    )
    assert code == 0
    assert out.strip() == "-3/2"
    code, out, _ = run_cli(
        capsys, "slope", "--mode", "twist", "--m", "0", "--d", "0", "--c", "1,1,1"
    )
    assert code == 0
    assert out.strip() == "undefined (chi = 0)"


def test_classify_csv_md_numeric_parity(capsys):
    args = ("classify", "--d-max", "1", "--c-max", "4", "--split-a-max", "3")
    code, csv_out, _ = run_cli(capsys, *args, "--format", "csv")
    assert code == 0
    code, md_out, _ = run_cli(capsys, *args, "--format", "md")
    assert code == 0
    csv_rows = list(csv.reader(io.StringIO(csv_out)))
    md_rows = [
        [cell.strip() for cell in line.strip().strip("|").split("|")]
        for line in md_out.splitlines()
        if line.startswith("|") and "---" not in line
    ]
    assert csv_rows == md_rows
    assert csv_rows[0] == list(
        ("kappa", "pg", "q", "K2", "d", "c1", "c2", "c3", "admissibility")
    )


def test_classify_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--d-max", "1", "--c-max", "3", "--format", "json"
    )
    assert code == 0
    assert to_json(json.loads(out)) == out.strip()


def test_classify_bucket_filter(capsys):
    code, out, _ = run_cli(
        capsys,
        "classify", "--d-max", "2", "--c-max", "5", "--bucket", "notgeneral",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 11
    assert all(rec["bucket"] == "NotGeneralType" for rec in payload)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tripleplane", "admissible", "--d", "1", "--c", "2,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "TriviallyAdmissible"
