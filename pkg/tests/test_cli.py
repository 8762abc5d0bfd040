import json
import subprocess
import sys

import pytest

from leflab import cli
from leflab.arrangement import analyze as real_analyze

from conftest import EIGHT_LINES


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write


def test_gin_command(capsys, files):
    code, out, _ = run(capsys, "gin", files("a.txt", "x0^2, x1^2\n"), "--nvars", 3)
    assert code == 0
    assert "x0^2, x0*x1, x1^3" in out
    assert "regularity: 3" in out
    code, out, _ = run(capsys, "--format", "json", "gin", files("b.txt", "x0, x1\n"),
                       "--nvars", 3)
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == cli.SCHEMA and doc["command"] == "gin"
    assert doc["result"]["saturated"] is True


def test_parse_error_exit_code(capsys, files):
    code, _, err = run(capsys, "gin", files("bad.txt", "x0^2,\nx1 + * x2\n"))
    assert code == 2
    assert "line 2" in err and "column" in err
    code, _, _ = run(capsys, "gin", files("inhom.txt", "x0^2 + x1\n"))
    assert code == 2
    code, _, _ = run(capsys, "gin", "/nonexistent/ideal.txt")
    assert code == 2


def test_gin_failure_exit_code(capsys, files):
    code, _, err = run(capsys, "--retries", 1, "gin", files("a.txt", "x0^2, x1^2\n"),
                       "--nvars", 3)
    assert code == 3 and "gin" in err


def test_lefschetz_command(capsys, files):
    remark_a = files("a.txt", "x0^2, x0*x1, x1^2, x0*x2^2\n")
    assert run(capsys, "lefschetz", remark_a, "--property", "wlp")[0] == 0
    # the SLP holds here too (see the brute-force test in test_lefschetz)
    assert run(capsys, "lefschetz", remark_a, "--property", "slp")[0] == 0
    remark_b = files("b.txt", "x0^3, x0^2*x1, x0*x1^3, x1^4, x0*x1^2*x2\n")
    code, out, _ = run(capsys, "lefschetz", remark_b, "--property", "slp", "--cross-validate")
    assert code == 0 and "holds" in out


def test_lefschetz_failure_exit_code(capsys, files):
    from leflab.arrangement import jacobian_ideal, parse_arrangement

    gens = ", ".join(str(g) for g in jacobian_ideal(parse_arrangement(EIGHT_LINES)).generators)
    jac = files("jac.txt", gens + "\n")
    code, out, _ = run(capsys, "lefschetz", jac, "--property", "slp")
    assert code == 1
    assert "failure at (i=8, s=3)" in out and "kernel witness x0^2*x1^6" in out
    code, out, _ = run(capsys, "lefschetz", jac, "--property", "slp", "--route", "oracle")
    assert code == 1 and "route: linear-algebra-oracle" in out


def test_arr_analyze(capsys, files):
    code, out, _ = run(capsys, "arr", "analyze", files("eight.txt", EIGHT_LINES))
    assert code == 0
    assert "WLP: yes  SLP: no" in out
    assert "plus-one generated: yes POexp (1, 3, 5) level 5" in out


def test_arr_scan_table_and_totals(capsys):
    code, out, _ = run(capsys, "arr", "scan", "--count", 6, "--max-d", 5)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["#", "d", "free"]
    assert len(lines) == 8 and lines[-1].startswith("totals:")
    assert "wlp 6/6" in lines[-1]


def test_output_is_deterministic_across_jobs(capsys, tmp_path):
    args = ["--format", "json", "arr", "scan", "--count", 5, "--max-d", 5]
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    c = run(capsys, "--jobs", 2, *args)[1]
    assert a == b == c


def test_cache_hits_equal_fresh(capsys, tmp_path):
    cache = tmp_path / "cache"
    args = ["--format", "json", "--cache-dir", cache, "arr", "scan", "--count", 10,
            "--max-d", 5]
    fresh = run(capsys, *args)[1]
    assert len(list(cache.glob("*.json"))) == 10
    cfg = cli.RunConfig(cli.DEFAULT_SEED, cache_dir=cache)
    _, _, reports, hits = cli.scan(cfg, 10, 3, 5)
    assert hits == 10
    cached = run(capsys, *args)[1]
    assert cached == fresh
    assert json.loads(fresh)["result"]["reports"] == reports


def test_seed_from_environment(capsys, monkeypatch, files):
    ideal = files("a.txt", "x0^2, x1^2\n")
    monkeypatch.setenv("LEFLAB_SEED", "12345")
    out = json.loads(run(capsys, "--format", "json", "gin", ideal, "--nvars", 3)[1])
    assert out["config"]["seed"] == 12345
    out = json.loads(run(capsys, "--format", "json", "--seed", 7, "gin", ideal, "--nvars",
                         3)[1])
    assert out["config"]["seed"] == 7


def test_seed_flag_after_subcommand(capsys, files):
    ideal = files("a.txt", "x0, x1\n")
    out = json.loads(run(capsys, "gin", ideal, "--format", "json", "--seed", 9)[1])
    assert out["config"]["seed"] == 9


def test_violation_writes_reproducer(capsys, monkeypatch, tmp_path):
    def broken(A, seed=None, **kw):
        rep = real_analyze(A, seed, **kw)
        rep.checks["K3_essential_implies_WLP"] = False
        return rep

    monkeypatch.setattr(cli, "analyze", broken)
    code, _, err = run(capsys, "--cache-dir", tmp_path, "arr", "scan", "--count", 2,
                       "--max-d", 4)
    assert code == 4 and "reproducer" in err
    repro = list(tmp_path.glob("leflab-reproducer-*.txt"))
    assert len(repro) == 1
    text = repro[0].read_text()
    assert "K3_essential_implies_WLP" in text and text.splitlines()[2] == "3"


def test_aci_command(capsys, files):
    code, out, _ = run(capsys, "aci", "y*z", "x*z", "x*y")
    assert code == 0
    assert "m(I): 3" in out and "deg F: 1" in out and "WLP: yes" in out
    code, _, err = run(capsys, "aci", "x", "y", "z")
    assert code == 5 and "dimension" in err
    code, _, _ = run(capsys, "aci", "x*y", "y*z")
    assert code == 2


def test_aci_eight_lines_partials(capsys, files):
    from leflab.arrangement import jacobian_ideal, parse_arrangement

    gens = [str(g) for g in jacobian_ideal(parse_arrangement(EIGHT_LINES)).generators]
    code, out, _ = run(capsys, "--format", "json", "aci", "--file",
                       files("p.txt", ", ".join(gens) + "\n"))
    doc = json.loads(out)["result"]
    assert code == 0 and doc["wlp"]
    assert doc["deg_f"] == 19 - doc["m"] and doc["identity_holds"]


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "leflab.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("0.1.0")
