"""The command-line surface: exit statuses, report text, tables, seeds."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from infoledger.cli import main

REPO = Path(__file__).resolve().parents[1]
SCENARIOS = REPO / "demos" / "scenarios"
GOLDEN_SWEEP = Path(__file__).parent / "data" / "golden_sweep_cloning.csv"

CLONING_FILE = str(SCENARIOS / "cloning_zero_plus.yaml")
DELETING_FILE = str(SCENARIOS / "deleting_zero_plus.yaml")
CLASSICAL_FILE = str(SCENARIOS / "classical_copy_bits.yaml")


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_audit_cloning_exit_3(capsys):
    code, out, _ = run_main(capsys, "audit", CLONING_FILE)
    assert code == 3
    assert "delta:          +0.210402 bits" in out
    assert "verdict:        IncreaseViolation" in out


def test_audit_deleting_exit_4(capsys):
    code, out, _ = run_main(capsys, "audit", DELETING_FILE)
    assert code == 4
    assert "delta:          -0.210402 bits" in out


def test_audit_classical_exit_0(capsys):
    code, out, _ = run_main(capsys, "audit", CLASSICAL_FILE)
    assert code == 0
    assert "delta:          0.000000 bits" in out
    assert "verdict:        Conserved" in out


def test_audit_writes_machine_record(capsys, tmp_path):
    record = tmp_path / "report.json"
    code, _, _ = run_main(capsys, "audit", CLONING_FILE, "--record", str(record))
    assert code == 3
    data = json.loads(record.read_text())
    assert data["verdict"] == "IncreaseViolation"
    assert abs(data["delta_bits"] - 0.2104020877662768) < 1e-10


def test_audit_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("version: 1\nkind: cloning\npsi1: [[1, 0]]\n")
    code, _, err = run_main(capsys, "audit", str(bad))
    assert code == 1
    assert "psi2" in err


def test_audit_missing_file_exit_1(capsys):
    code, _, err = run_main(capsys, "audit", "no-such-file.yaml")
    assert code == 1
    assert err


def test_usage_error_exit_1(capsys):
    code, _, _ = run_main(capsys, "sweep", "--kind", "cloning")
    assert code == 1


def test_sweep_matches_golden_table(capsys, tmp_path):
    out = tmp_path / "table.csv"
    code, _, _ = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0", "--to", "1", "--step", "0.5",
        "--out", str(out),
    )
    assert code == 0
    assert out.read_bytes() == GOLDEN_SWEEP.read_bytes()


def test_sweep_deleting_mirrors_cloning(capsys, tmp_path):
    clone_path = tmp_path / "clone.csv"
    delete_path = tmp_path / "delete.csv"
    run_main(capsys, "sweep", "--kind", "cloning", "--from", "0.1", "--to", "0.9", "--step", "0.2",
             "--out", str(clone_path))
    run_main(capsys, "sweep", "--kind", "deleting", "--from", "0.1", "--to", "0.9", "--step", "0.2",
             "--out", str(delete_path))
    clone_rows = clone_path.read_text().splitlines()[1:]
    delete_rows = delete_path.read_text().splitlines()[1:]
    for crow, drow in zip(clone_rows, delete_rows):
        c_in, c_sin, c_sout, c_delta, c_gram = crow.split(",")
        d_in, d_sin, d_sout, d_delta, d_gram = drow.split(",")
        assert c_in == d_in
        assert (c_sin, c_sout) == (d_sout, d_sin)
        assert abs(float(c_delta) + float(d_delta)) < 1e-12
        assert c_gram == d_gram


def test_sweep_single_point(capsys, tmp_path):
    out = tmp_path / "one.csv"
    code, _, _ = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0", "--to", "0", "--step", "0.5",
        "--out", str(out),
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert lines[1] == "0.000000000,1.000000000,1.000000000,0.000000000,true"


def test_sweep_rejects_empty_grid_and_bad_range(capsys, tmp_path):
    out = tmp_path / "x.csv"
    code, _, err = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0.8", "--to", "0.2", "--step", "0.1",
        "--out", str(out),
    )
    assert code == 1 and "empty grid" in err
    code, _, _ = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0", "--to", "2", "--step", "0.5",
        "--out", str(out),
    )
    assert code == 1
    code, _, _ = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0", "--to", "1", "--step", "-0.5",
        "--out", str(out),
    )
    assert code == 1


def test_sweep_unwritable_path_exit_1(capsys, tmp_path):
    code, _, err = run_main(
        capsys, "sweep", "--kind", "cloning", "--from", "0", "--to", "1", "--step", "0.5",
        "--out", str(tmp_path / "missing-dir" / "table.csv"),
    )
    assert code == 1
    assert err


def test_search_cli_is_deterministic(capsys):
    code, first, _ = run_main(
        capsys, "search", CLASSICAL_FILE, "--restarts", "2", "--iterations", "300", "--seed", "9"
    )
    assert code == 0
    code, second, _ = run_main(
        capsys, "search", CLASSICAL_FILE, "--restarts", "2", "--iterations", "300", "--seed", "9"
    )
    assert code == 0
    assert first == second
    assert "seed:       9" in first


def test_search_seed_precedence(capsys, monkeypatch):
    # File seed is 11; the environment overrides it; the flag beats both.
    monkeypatch.setenv("INFOLEDGER_SEED", "77")
    _, out, _ = run_main(capsys, "search", CLASSICAL_FILE, "--restarts", "1", "--iterations", "50")
    assert "seed:       77" in out
    _, out, _ = run_main(
        capsys, "search", CLASSICAL_FILE, "--restarts", "1", "--iterations", "50", "--seed", "5"
    )
    assert "seed:       5" in out
    monkeypatch.delenv("INFOLEDGER_SEED")
    _, out, _ = run_main(capsys, "search", CLASSICAL_FILE, "--restarts", "1", "--iterations", "50")
    assert "seed:       11" in out


def test_demo_prints_three_ledgers(capsys):
    code, out, _ = run_main(capsys, "demo")
    assert code == 0
    assert out.count("scenario:") == 3
    assert out.count("exit_status:") == 3
    for token in ("IncreaseViolation", "DecreaseViolation", "Conserved"):
        assert token in out


def test_demo_only_variants_exit_with_verdict_statuses(capsys):
    assert run_main(capsys, "demo", "--only", "cloning")[0] == 3
    assert run_main(capsys, "demo", "--only", "deleting")[0] == 4
    assert run_main(capsys, "demo", "--only", "classical")[0] == 0


def test_console_entry_point_subprocess():
    env = dict(os.environ)
    result = subprocess.run(
        [sys.executable, "-m", "infoledger.cli", "demo", "--only", "cloning"],
        capture_output=True,
        text=True,
        cwd=REPO,
        env=env,
    )
    assert result.returncode == 3
    assert "IncreaseViolation" in result.stdout
