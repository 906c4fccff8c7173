"""End-to-end tests for the command line interface: subcommands, exit codes
and environment-variable defaults."""
from __future__ import annotations

import json
import os
import subprocess
import sys
from fractions import Fraction

from polyadjoint import HomPoly, PolyMap, polymap_dumps

CLI = [sys.executable, "-m", "polyadjoint.cli"]


def run_cli(*args, stdin: str | None = None, env_extra: dict | None = None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          input=stdin, env=env)


def sample_map_json() -> str:
    P = PolyMap((
        HomPoly(2, 2, {(2, 0): Fraction(1), (0, 2): Fraction(1)}),
        HomPoly(2, 2, {(1, 1): Fraction(2)}),
    ))
    return polymap_dumps(P)


def test_no_subcommand_exits_2():
    proc = run_cli()
    assert proc.returncode == 2


def test_adjoint_subcommand(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    out = tmp_path / "adj.json"
    proc = run_cli("adjoint", str(src), "--n", "2", "--k", "1", "--out", str(out))
    assert proc.returncode == 0
    obj = json.loads(out.read_text())
    assert obj["provenance"]["op"] == "delta"
    assert obj["provenance"]["n"] == 2
    assert obj["degree"] == 2
    assert len(obj["provenance"]["source"]) == 64


def test_adjoint_reads_stdin():
    proc = run_cli("adjoint", "-", "--n", "1", "--k", "1", stdin=sample_map_json())
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert obj["provenance"]["k"] == 1


def test_norm_sup_subcommand(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    proc = run_cli("norm", str(src), "--claim", "sup")
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    # (x^2+y^2)^2 + (2xy)^2 = 1 + 4x^2y^2 on the unit circle, peaking at x = y
    assert abs(obj["value"] - 2.0 ** 0.5) < 1e-9
    assert obj["lower_bound_certified"] is True
    assert len(obj["maximizer"]) == 2


def test_norm_delta_subcommand(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    proc = run_cli("norm", str(src), "--claim", "delta", "--n", "1", "--k", "2",
                   "--restarts", "16")
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert obj["passed"] is True
    assert "wall_ms" in obj


def test_decompose_subcommand(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    proc = run_cli("decompose", str(src), "--n", "1", "--k", "2")
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert len(obj["vectors"]) == 2
    assert all("theta" in t for t in obj["terms"])


def test_malformed_json_exits_2(tmp_path):
    src = tmp_path / "bad.json"
    src.write_text("this is not json")
    proc = run_cli("norm", str(src))
    assert proc.returncode == 2
    assert "malformed" in proc.stderr


def test_missing_file_exits_2(tmp_path):
    proc = run_cli("adjoint", str(tmp_path / "nope.json"), "--n", "1", "--k", "1")
    assert proc.returncode == 2


def test_invalid_map_object_exits_2(tmp_path):
    src = tmp_path / "obj.json"
    src.write_text(json.dumps({"domain_dim": 2}))
    proc = run_cli("adjoint", str(src), "--n", "1", "--k", "1")
    assert proc.returncode == 2
    assert "missing" in proc.stderr


def test_capacity_overflow_exits_3(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    proc = run_cli("adjoint", str(src), "--n", "9", "--k", "9")
    assert proc.returncode == 3
    assert "cap" in proc.stderr


def test_env_defaults_and_flag_precedence(tmp_path):
    src = tmp_path / "map.json"
    src.write_text(sample_map_json())
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    # env seed applies when no flag is given
    p1 = run_cli("norm", str(src), "--out", str(out1),
                 env_extra={"POLYADJOINT_SEED": "500"})
    # an explicit flag overrides the env seed
    p2 = run_cli("norm", str(src), "--seed", "500", "--out", str(out2),
                 env_extra={"POLYADJOINT_SEED": "77"})
    assert p1.returncode == p2.returncode == 0
    assert json.loads(out1.read_text())["value"] == \
        json.loads(out2.read_text())["value"]


def test_bad_env_value_exits_2():
    proc = run_cli("verify", env_extra={"POLYADJOINT_SEED": "not-a-number"})
    assert proc.returncode == 2
    assert "environment" in proc.stderr


def test_verify_rational_suite(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli("verify", "--field", "rational", "--trials", "2",
                   "--seed", "99", "--out", str(out))
    assert proc.returncode == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert report["passed"] is True
    assert len(report["claims"]) == 11
    names = {c["name"] for c in report["claims"]}
    assert "composition_identity" in names
    assert "factorization_identities" in names
    # one human-readable PASS line per claim on stderr
    assert proc.stderr.count("PASS") == 11


def test_verify_reports_are_byte_identical(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        proc = run_cli("verify", "--field", "rational", "--trials", "2",
                       "--seed", "123", "--out", str(out))
        assert proc.returncode == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
