import json
import subprocess
import sys

import pytest

from dyalg.algebra import kappa, omega, r_matrix
from dyalg.bialgebra import borel_sl2


def run_cli(args, check=False):
    proc = subprocess.run(
        [sys.executable, "-m", "dyalg.cli", *args],
        capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(proc.stderr or proc.stdout)
    return proc


def test_multiply_round_trip(tmp_path):
    k = kappa(1, 1)
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(json.dumps(k.to_json()))
    right.write_text(json.dumps(k.to_json()))
    proc = run_cli(["multiply", str(left), str(right)], check=True)
    data = json.loads(proc.stdout)
    coeffs = {t["coeff"] for t in data["terms"]}
    assert coeffs == {"2", "-1"}


def test_multiply_unit(tmp_path):
    from dyalg.algebra import AlgebraElement
    unit = tmp_path / "unit.json"
    k = tmp_path / "k.json"
    unit.write_text(json.dumps(AlgebraElement.unit(1).to_json()))
    k.write_text(json.dumps(kappa(1, 1).to_json()))
    proc = run_cli(["multiply", str(unit), str(k)], check=True)
    assert json.loads(proc.stdout) == kappa(1, 1).to_json()


def test_mismatch_exit_code(tmp_path):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(json.dumps(kappa(1, 1).to_json()))
    right.write_text(json.dumps(omega(2, 1, 2).to_json()))
    proc = run_cli(["multiply", str(left), str(right)])
    assert proc.returncode == 3


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    proc = run_cli(["multiply", str(bad), str(bad)])
    assert proc.returncode == 2


def test_invalid_bialgebra_exit_code(tmp_path):
    elt = tmp_path / "elt.json"
    elt.write_text(json.dumps(kappa(1, 1).to_json()))
    bad = borel_sl2().to_json()
    bad["bracket"][0][0][1] = "1"  # breaks antisymmetry
    bia = tmp_path / "bia.json"
    bia.write_text(json.dumps(bad))
    proc = run_cli(["realize", str(elt), str(bia)])
    assert proc.returncode == 4


def test_realize_kappa(tmp_path):
    elt = tmp_path / "elt.json"
    elt.write_text(json.dumps(kappa(1, 1).to_json()))
    bia = tmp_path / "bia.json"
    bia.write_text(json.dumps(borel_sl2().to_json()))
    proc = run_cli(["realize", str(elt), str(bia)], check=True)
    matrix = json.loads(proc.stdout)["matrix"]
    assert matrix[1][1] == "6"  # hand-checked contraction entry


def test_nested_sets_command(tmp_path):
    dia = tmp_path / "a3.json"
    dia.write_text(json.dumps(
        {"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}))
    proc = run_cli(["nested-sets", str(dia)], check=True)
    assert json.loads(proc.stdout)["count"] == 5


def test_quotient_command(tmp_path):
    dia = tmp_path / "a3.json"
    dia.write_text(json.dumps(
        {"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}))
    proc = run_cli(["quotient-diagram", str(dia), "2"], check=True)
    assert json.loads(proc.stdout) == {"vertices": [1, 3],
                                       "edges": [[1, 3]]}


def test_km_build_command(tmp_path):
    gcm = tmp_path / "gcm.json"
    gcm.write_text(json.dumps({"cartan": [[2, -1], [-1, 2]], "cap": 2}))
    proc = run_cli(["km-build", str(gcm)], check=True)
    data = json.loads(proc.stdout)
    assert data["dim"] == 7 and data["windowed_validation"] == "ok"


def test_km_build_rejects_bad_gcm(tmp_path):
    gcm = tmp_path / "gcm.json"
    gcm.write_text(json.dumps(
        {"cartan": [[2, -1, -2], [-1, 2, -1], [-1, -1, 2]], "cap": 2}))
    proc = run_cli(["km-build", str(gcm)])
    assert proc.returncode == 4


def test_verify_suites_and_unknown():
    proc = run_cli(["verify", "cybe"], check=True)
    assert json.loads(proc.stdout)["assertions"][0]["ok"]
    proc = run_cli(["verify", "no-such-suite"])
    assert proc.returncode == 2


def test_deterministic_output(tmp_path):
    dia = tmp_path / "a3.json"
    dia.write_text(json.dumps(
        {"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}))
    one = run_cli(["nested-sets", str(dia)], check=True).stdout
    two = run_cli(["nested-sets", str(dia)], check=True).stdout
    assert one == two


def test_dh_and_face_commands(tmp_path):
    elt = tmp_path / "k.json"
    elt.write_text(json.dumps(kappa(1, 1).to_json()))
    proc = run_cli(["dH", str(elt)], check=True)
    from dyalg.algebra import AlgebraElement, hochschild_d
    got = AlgebraElement.from_json(json.loads(proc.stdout))
    assert got == hochschild_d(kappa(1, 1))
    proc = run_cli(["invariant-check", str(elt)], check=True)
    assert json.loads(proc.stdout) == {"invariant": False}


def test_associator_check_command():
    proc = run_cli(["--max-degree", "2", "associator-check"], check=True)
    assert all(r["ok"] for r in json.loads(proc.stdout))


def test_coxeter_check_command(tmp_path):
    dia = tmp_path / "a2.json"
    dia.write_text(json.dumps({"vertices": [1, 2], "edges": [[1, 2]]}))
    proc = run_cli(["coxeter-check", str(dia)], check=True)
    summary = json.loads(proc.stdout)
    assert all(v["failures"] == 0 for v in summary.values())
