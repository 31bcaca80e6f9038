# tests/test_cli.py
"""CLI tests: exit codes, golden output, byte stability and the cache."""
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from app.cli import run_command

PROJECT_ROOT = Path(__file__).resolve().parents[1]


def run_cli(*args):
    env = os.environ.copy()
    existing = env.get("PYTHONPATH", "")
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(PROJECT_ROOT), existing]))
    return subprocess.run(
        [sys.executable, "-m", "app.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=PROJECT_ROOT,
    )


def test_hochschild_golden():
    completed = run_cli("hochschild", "--group", "Z2", "--sigma", "trivial", "--degree", "1")
    assert completed.returncode == 0, completed.stderr
    assert completed.stdout == '{"degree":1,"dim":0,"dim_image_prev":0,"dim_kernel":0}\n'


def test_verify_passes_for_s3():
    completed = run_cli("verify", "--group", "S3", "--max-degree", "2", "--xi-trials", "20")
    assert completed.returncode == 0, completed.stderr
    checks = json.loads(completed.stdout)
    assert checks
    assert [c for c in checks if not c["pass"]] == []
    assert {c["sigma"] for c in checks if "sigma" in c} == {"char:0,0", "char:0,3"}


@pytest.mark.parametrize("args", [
    ("characters", "--group", "D4"),
    ("mpi", "--group", "Q8"),
    ("cyclic", "--group", "Z3", "--sigma", "char:1", "--degree", "2"),
    ("zline", "--lambda", "2", "--q", "step"),
    ("crossed", "--N", "2", "--classify", "mpi", "--format", "csv"),
])
def test_output_is_byte_stable(args):
    first, second = run_cli(*args), run_cli(*args)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout


def test_cache_hit_and_miss_give_the_same_bytes(tmp_path):
    args = ("mpi", "--group", "D4", "--cache", str(tmp_path))
    miss, hit = run_cli(*args), run_cli(*args)
    plain = run_cli("mpi", "--group", "D4")
    assert miss.returncode == hit.returncode == 0
    assert miss.stdout == hit.stdout == plain.stdout
    entries = [p for p in tmp_path.glob("*.json")]
    assert len(entries) == 1
    assert json.loads(entries[0].read_text())["input"]["verb"] == "mpi"


def test_csv_output_from_cache(tmp_path):
    args = ("characters", "--group", "Z2xZ2", "--format", "csv", "--cache", str(tmp_path))
    miss, hit = run_cli(*args), run_cli(*args)
    assert miss.stdout == hit.stdout
    assert miss.stdout.splitlines()[0] == "N,exponents,index,values"
    assert len(miss.stdout.splitlines()) == 5


def test_zline_reports_escape():
    completed = run_cli("zline", "--lambda", "2", "--window", "12", "--q", "step")
    payload = json.loads(completed.stdout)
    assert payload["hh1"]["dim"] == 0
    assert payload["tau2"]["escapes"] is True
    assert len(payload["tau2"]["witness"]) == 12


def test_table_input(tmp_path):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps({"order": 3, "mul": [[(x + y) % 3 for y in range(3)] for x in range(3)]}))
    completed = run_cli("hochschild", "--table", str(path), "--degree", "0")
    assert completed.returncode == 0, completed.stderr
    assert json.loads(completed.stdout)["dim"] == 1


def test_malformed_group_is_a_usage_error():
    completed = run_cli("hochschild", "--group", "Z99x", "--degree", "1")
    assert completed.returncode == 2
    assert completed.stdout == ""
    assert "Z99x" in completed.stderr


@pytest.mark.parametrize("argv,code", [
    (["hochschild", "--group", "Z10", "--degree", "5"], 1),
    (["hochschild", "--group", "Z5xZ5", "--degree", "0"], 1),
    (["hochschild", "--group", "Z2", "--sigma", "char:1,2", "--degree", "1"], 2),
    (["hochschild", "--group", "Z2", "--sigma", "sign", "--degree", "1"], 2),
    (["hochschild", "--group", "Z2"], 2),
    (["hochschild", "--degree", "1"], 2),
    (["verify", "--group", "Z2", "--format", "csv"], 2),
    (["zline", "--lambda", "0"], 2),
    (["zline", "--lambda", "2", "--window", "4", "--q", "step"], 2),
    (["zline", "--lambda", "2", "--window", "1"], 2),
    (["crossed", "--N", "1"], 2),
    (["nonsense"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert run_command(argv) == code
    assert capsys.readouterr().out == ""
