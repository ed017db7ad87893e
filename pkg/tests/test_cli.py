import json
import os
import subprocess
import sys

import pytest

from tamloday import cache, cli
from tamloday.mackey import Violation


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)


def test_pi_reflection_circle_z3(capsys):
    code, out, _ = run(capsys, "pi", "--group", "C2", "--space", "reflection_circle()", "--coeff", "constant:z3.ring",
                       "--max-degree", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "pi[0]: fixed Z/3, free Z/3"
    assert lines[2:] == [f"pi[{n}]: fixed 0, free 0" for n in (1, 2, 3)]


def test_compare_subdivision(capsys):
    code, out, _ = run(capsys, "compare", "subdivision", "--n", "3", "--coeff", "constant:z2.ring", "--max-degree", "3")
    assert code == 0
    assert out.splitlines()[-1] == "verified"


def test_check_burnside(capsys):
    code, out, _ = run(capsys, "check", "--coeff", "burnside", "--group", "C3")
    assert code == 0 and out.strip() == "all axioms hold"


def test_check_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_tambara_axioms", lambda t: [Violation("Frobenius", (0, 0))])
    code, out, _ = run(capsys, "check", "--coeff", "burnside")
    assert code == 2 and "Frobenius: (0, 0)" in out


@pytest.mark.parametrize("argv", [
    [],
    ["pi", "--space", "point"],
    ["pi", "--space", "point", "--coeff", "burnside", "--max-degree", "-1"],
    ["pi", "--group", "C4", "--space", "point", "--coeff", "burnside"],
    ["pi", "--space", "nowhere", "--coeff", "burnside"],
    ["norm", "--ring", "no-such-ring"],
    ["norm", "--group", "C6", "--ring", "Z"],
    ["compare", "subdivision", "--coeff", "burnside"],
    ["relative-pi", "--space", "point", "--coeff", "constant:Z/4", "--base", "constant:Z/3"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_json_report_fields(capsys):
    code, out, _ = run(capsys, "pi", "--space", "reflection_circle()", "--coeff", "constant:Z/4", "--max-degree", "1",
                       "--format", "json")
    assert code == 0
    rep = json.loads(out)
    d0, d1 = rep["pi"]
    assert set(d0) == {"degree", "fixed", "free", "res", "tr", "weyl", "norm_on_generators"}
    assert d0["fixed"] == {"rank": 0, "torsion": [4], "str": "Z/4"}
    # the canonical fixed-level generator is -1, so N(1) = 1 = 3 * (-1)
    assert d0["norm_on_generators"] == [[3]]
    assert d1["norm_on_generators"] is None


def test_norm_and_box(capsys):
    code, out, _ = run(capsys, "norm", "--ring", "Z/2")
    assert code == 0 and "fixed Z/4" in out
    code, out, _ = run(capsys, "norm", "--group", "C3", "--ring", "Z")
    assert "fixed Z^2" in out
    code, out, _ = run(capsys, "box", "--left", "constant:Z/4", "--right", "burnside")
    assert code == 0 and "fixed Z/4" in out


def test_ring_file(tmp_path, capsys):
    f = tmp_path / "b.ring"
    f.write_text("ring B { generators: one, t; relations:; unit: one; mult: t*t = 2*t; one*t = t; }")
    code, out, _ = run(capsys, "norm", "--ring", str(f))
    assert code == 0
    bad = tmp_path / "bad.ring"
    bad.write_text("ring B { generators: one; }")
    code, _, err = run(capsys, "norm", "--ring", str(bad))
    assert code == 1 and "input error" in err


def test_relative_pi(capsys):
    code, out, _ = run(capsys, "relative-pi", "--space", "reflection_circle()", "--coeff", "constant:Z/4",
                       "--base", "constant:Z", "--max-degree", "1")
    assert code == 0
    assert out.splitlines()[1] == "pi[0]: fixed Z/4, free Z/4"


@pytest.mark.parametrize("kind,extra", [
    ("rotation-hc", ["--n", "3", "--max-degree", "2"]),
    ("rotation-hc", ["--n", "4", "--coeff", "constant:Z/2", "--max-degree", "1"]),
    ("reflection-bar", ["--max-degree", "2"]),
    ("suspension-bar", ["--coeff", "constant:Z/3", "--max-degree", "2"]),
    ("suspension-bar", ["--coeff", "constant:Z/3", "--flipped", "--max-degree", "2"]),
    ("properties", ["--max-degree", "1"]),
])
def test_compare_kinds(capsys, kind, extra):
    code, out, _ = run(capsys, "compare", kind, *extra)
    assert code == 0 and out.splitlines()[-1] == "verified"


def test_cache_does_not_change_results(tmp_path, capsys):
    argv = ["pi", "--space", "rotation_circle(2)", "--coeff", "constant:Z/4", "--max-degree", "1", "--format", "json"]
    _, plain, _ = run(capsys, *argv)
    d = tmp_path / "cache"
    _, first, _ = run(capsys, *argv, "--cache-dir", str(d))
    assert len(os.listdir(d)) == 1
    _, second, _ = run(capsys, *argv, "--cache-dir", str(d))
    assert plain == first == second
    assert not [n for n in os.listdir(d) if n.endswith(".tmp")]


def test_cache_hit_is_used(tmp_path, capsys):
    argv = ["pi", "--space", "point", "--coeff", "burnside", "--max-degree", "0", "--format", "json"]
    d = tmp_path / "cache"
    run(capsys, *argv, "--cache-dir", str(d))
    (entry,) = os.listdir(d)
    path = d / entry
    rep = json.loads(path.read_text())
    rep["space"] = "tampered"
    path.write_text(json.dumps(rep))
    _, out, _ = run(capsys, *argv, "--cache-dir", str(d))
    assert json.loads(out)["space"] == "tampered"


def test_env_overrides_cache_dir(tmp_path, capsys, monkeypatch):
    env_dir, cli_dir = tmp_path / "env", tmp_path / "cli"
    monkeypatch.setenv(cache.ENV_VAR, str(env_dir))
    run(capsys, "pi", "--space", "point", "--coeff", "burnside", "--max-degree", "0", "--cache-dir", str(cli_dir))
    assert len(os.listdir(env_dir)) == 1
    assert not cli_dir.exists()


def test_cache_keys_depend_on_inputs():
    assert cache.key("pi", {"a": 1}) == cache.key("pi", {"a": 1})
    assert cache.key("pi", {"a": 1}) != cache.key("pi", {"a": 2})
    assert cache.key("pi", {"a": 1}) != cache.key("box", {"a": 1})


def test_reports_are_deterministic(capsys):
    argv = ["box", "--left", "constant:Z/4", "--right", "burnside", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_console_script_entry_point(tmp_path):
    env = {k: v for k, v in os.environ.items() if k != cache.ENV_VAR}
    proc = subprocess.run([sys.executable, "-m", "tamloday.cli", "check", "--coeff", "burnside", "--group", "C3"],
                          capture_output=True, text=True, env=env, cwd=tmp_path)
    assert proc.returncode == 0 and proc.stdout.strip() == "all axioms hold"
