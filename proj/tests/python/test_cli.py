import json
import os
import subprocess

import pytest

CLI = os.environ.get("OPMEANS_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="OPMEANS_CLI not set")

A = '{"dim":2,"rows":[[2,1],[1,2]]}'
B = '{"dim":2,"rows":[[2,-2],[-2,5]]}'


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_compute_natural():
    p = run("compute", "natural", A, B)
    assert p.returncode == 0
    out = json.loads(p.stdout)
    assert out["op"] == "natural"
    assert out["t"] == 0.5
    assert out["dims"] == [2, 2]
    assert out["rows"][0][1] == pytest.approx(-0.1123, abs=1e-4)


def test_compute_reads_files(tmp_path):
    (tmp_path / "a.json").write_text(A)
    (tmp_path / "b.json").write_text(B)
    out_file = tmp_path / "out.json"
    p = run("compute", "arithmetic", str(tmp_path / "a.json"), str(tmp_path / "b.json"), "--out", str(out_file))
    assert p.returncode == 0
    assert json.loads(out_file.read_text())["rows"] == [[2.0, -0.5], [-0.5, 3.5]]


def test_error_json_and_exit_code():
    p = run("compute", "natural", A, '{"dim":2,"rows":[[1,2],[2,1]]}')
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["type"] == "NotPositiveDefinite"
    p = run("compute", "natural", A, '{"dim":2}')
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["type"] == "ParseError"


def test_check_exit_codes():
    assert run("check", "eq1_congruence_identity", A, B).returncode == 0
    p = run("check", "natural_symmetry", A, B)
    assert p.returncode == 1
    assert json.loads(p.stdout)["passed"] is False


def test_falsify_finds_witness():
    p = run("falsify", "natural_vs_sharp_order", "--seed", "3")
    assert p.returncode == 0
    out = json.loads(p.stdout)
    assert out["found"]
    assert "witness" in out


def test_suite_is_deterministic_and_reads_env_seed():
    args = ("suite", "--trials", "5", "--dims", "2-4")
    env = dict(os.environ, OPMEANS_SEED="77")
    first = run(*args, env=env)
    second = run(*args, "--seed", "77")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["config"]["seed"] == 77
    other = run(*args, "--seed", "78")
    assert other.stdout != first.stdout


def test_usage_error():
    p = run("compute", "natural")
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["type"] == "UsageError"
