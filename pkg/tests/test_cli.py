import json
import subprocess
import sys

from cobweb import crosscheck
from cobweb.cli import main


def run_cli(*args, env=None):
    cmd = [sys.executable, "-m", "cobweb", *args]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_fib_command(capsys):
    assert main(["fib", "10"]) == 0
    assert capsys.readouterr().out == "55\n"


def test_fibonomial_default_method(capsys):
    assert main(["fibonomial", "5", "0"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_fibonomial_all_methods(capsys):
    assert main(["fibonomial", "4", "2", "--method", "all"]) == 0
    assert capsys.readouterr().out == "6\n" * 5


def test_fibonomial_gv_method(capsys):
    assert main(["fibonomial", "5", "3", "--method", "gv"]) == 0
    assert capsys.readouterr().out == "15\n"


def test_fibonomial_usage_error():
    assert main(["fibonomial", "3", "5"]) == 2  # k > n


def test_zeta_dense_first_row(capsys):
    assert main(["zeta", "--levels", "5", "--source", "order", "--format", "dense"]) == 0
    first = capsys.readouterr().out.split("\n")[0]
    assert first == " ".join(["1"] * 13)


def test_zeta_sources_byte_identical(capsys):
    for fmt in ("dense", "csv", "json"):
        main(["zeta", "--levels", "6", "--source", "order", "--format", fmt])
        order_out = capsys.readouterr().out
        main(["zeta", "--levels", "6", "--source", "explicit", "--format", fmt])
        explicit_out = capsys.readouterr().out
        assert order_out == explicit_out


def test_zeta_json_roundtrip(capsys):
    assert main(["zeta", "--levels", "4", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["size"] == 8
    assert len(doc["rows"]) == 8
    assert doc["rows"][0] == [1] * 8


def test_zeta_level_bound():
    assert main(["zeta", "--levels", "13"]) == 2


def test_mobius_json(capsys):
    assert main(["mobius", "--levels", "3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["rows"][0][0] == 1
    assert doc["rows"][0][1] == -1


def test_chains_text_and_json(capsys):
    assert main(["chains", "3", "5"]) == 0
    assert capsys.readouterr().out == "k=3 n=5 per_source=15 total=30 fibonomial=15\n"
    assert main(["chains", "2", "4", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["per_source"] == "6"
    assert doc["fibonomial"] == "6"


def test_copies_command(capsys):
    assert main(["copies", "2", "1", "2"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_konvalina_command(capsys):
    assert main(["konvalina", "--weights", "1,2,4", "--k", "2", "--kind", "second"]) == 0
    assert capsys.readouterr().out == "35\n"
    assert main(["konvalina", "--weights", "1,2,4", "--k", "2", "--kind", "second", "--brute"]) == 0
    capsys.readouterr()
    assert main(["konvalina", "--weights", "2,1", "--k", "1"]) == 2  # not nondecreasing


def test_gv_command_verbose(capsys):
    assert main(["gv", "4", "2", "--verbose"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "R=[0, 1] N=0"
    assert "R=[1, 3] N=3" in lines
    assert lines[-1] == "6"


def test_fence_command(capsys):
    assert main(["fence", "4"]) == 0
    assert capsys.readouterr().out == "8\n"
    assert main(["fence", "10", "--brute"]) == 0
    assert capsys.readouterr().out == "144\n"


def test_hasse_writes_dot(tmp_path, capsys):
    out = tmp_path / "h.dot"
    assert main(["hasse", "--levels", "5", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("label=") == 13
    assert text.count("->") == 1 * 1 + 1 * 1 + 1 * 2 + 2 * 3 + 3 * 5
    assert main(["hasse", "--levels", "0", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("label=") == 1
    assert text.count("->") == 0


def test_hasse_level_bound_and_io_error(tmp_path):
    assert main(["hasse", "--levels", "11", "--out", str(tmp_path / "x.dot")]) == 2
    assert main(["hasse", "--levels", "3", "--out", str(tmp_path / "no-dir" / "x.dot")]) == 1


def test_usage_error_exit_code_via_subprocess():
    proc = run_cli("fibonomial", "4")  # missing k
    assert proc.returncode == 2
    proc = run_cli("nonsense")
    assert proc.returncode == 2


def test_cli_runs_are_deterministic():
    for args in (
        ["fibonomial", "6", "3", "--method", "all"],
        ["zeta", "--levels", "5", "--format", "json"],
        ["gv", "5", "2", "--verbose"],
        ["mobius", "--levels", "4", "--format", "csv"],
    ):
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout


def test_crosscheck_small_bounds(capsys):
    assert main(["crosscheck", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    rows = [line for line in out.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert len(rows) >= 12
    assert all(row.startswith("PASS") for row in rows)


def test_crosscheck_jobs_output_matches_serial(capsys):
    assert main(["crosscheck", "--max-n", "4", "--jobs", "4"]) == 0
    parallel = capsys.readouterr().out
    assert main(["crosscheck", "--max-n", "4", "--jobs", "1"]) == 0
    assert capsys.readouterr().out == parallel


def test_crosscheck_detects_mutation(capsys, monkeypatch):
    # harness sensitivity: corrupt one route and the table must go red
    monkeypatch.setattr(
        crosscheck.chains, "max_chains_from_fixed", lambda k, n: 1 + 10 * n + k
    )
    assert main(["crosscheck", "--max-n", "4"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_crosscheck_writes_to_file(tmp_path):
    out = tmp_path / "report.txt"
    assert main(["crosscheck", "--max-n", "4", "--out", str(out)]) == 0
    assert "checks:" in out.read_text()


def test_oracle_env_propagates_to_subprocess(tmp_path):
    import os

    env = dict(os.environ, COBWEB_ORACLE_MAX="2")
    proc = run_cli("crosscheck", "--max-n", "4", env=env)
    assert proc.returncode == 1  # DFS-backed checks now exceed the oracle budget
    assert "FAIL" in proc.stdout
