import json
import subprocess
import sys

import pytest

from hookspecht import cli
from hookspecht.solver import HomCertificate


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "--mu", "2,1", "--d", "3", "--k", "0", "--e", "3", "--char", "3")
    cert = json.loads(out)
    assert code == 0
    assert cert["schema"] == "hook-specht/1"
    assert (cert["dimension"], cert["case"], cert["a"], cert["m"], cert["degree"]) == (1, "iii", [1, 1], 1, 1)

    code, out, _ = run(capsys, "classify", "--mu", "3", "--d", "3", "--k", "0")
    cert = json.loads(out)
    assert (cert["dimension"], cert["case"], cert["degree"]) == (1, "i", 0)

    code, out, _ = run(capsys, "classify", "--mu", "1,1,1", "--d", "3", "--k", "0", "--char", "3")
    assert json.loads(out)["dimension"] == 0 and "case" not in json.loads(out)


def test_solve_check(capsys):
    code, out, _ = run(capsys, "solve", "--mu", "6,6", "--d", "12", "--k", "1", "--e", "3", "--char", "2", "--check")
    cert = json.loads(out)
    assert code == 0 and cert["dimension"] == 1 and cert["agreement"] is True
    assert HomCertificate.from_json(cert).to_json() == cert


def test_solve_reports_disagreement(capsys, monkeypatch):
    real = cli.classify_hom

    def wrong(mu, shape, field, q):
        cert = real(mu, shape, field, q)
        cert.dimension = 1 - cert.dimension
        return cert

    monkeypatch.setattr(cli, "classify_hom", wrong)
    code, out, _ = run(capsys, "solve", "--mu", "2,1", "--d", "3", "--k", "0", "--check")
    assert code == 1 and json.loads(out)["agreement"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--mu", "1,2", "--d", "3", "--k", "0"],
        ["classify", "--mu", "2,1", "--d", "4", "--k", "0"],
        ["classify", "--mu", "2,1", "--d", "3", "--k", "0", "--e", "2"],
        ["classify", "--mu", "2,1", "--d", "3", "--k", "0", "--char", "4"],
        ["classify", "--mu", "3", "--d", "3", "--k", "3"],
        ["solve", "--mu", "13", "--d", "13", "--k", "0"],
        ["sweep", "--dmax", "13"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify", "--mu", "2,1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["sweep", "--e-list", "x"])
    assert exc.value.code == 2


def test_sweep_jsonl(capsys):
    code, out, _ = run(capsys, "sweep", "--dmax", "6", "--e-list", "3", "--char-list", "0,3", "--jobs", "1")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    summary = lines[-1]["summary"]
    assert summary["disagreements"] == 0 and summary["instances"] == len(lines) - 1
    assert all(row["agreement"] for row in lines[:-1])
    keys = [(r["e"], r["char"], r["d"], r["k"], r["mu"]) for r in lines[:-1]]
    assert keys == sorted(keys)


def test_sweep_is_deterministic(capsys):
    argv = ["sweep", "--dmax", "5", "--e-list", "3,4", "--char-list", "0,2"]
    _, first, _ = run(capsys, *argv, "--jobs", "1")
    _, second, _ = run(capsys, *argv, "--jobs", "1")
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert first == second == parallel


def test_sweep_csv(capsys):
    code, out, err = run(capsys, "sweep", "--dmax", "4", "--format", "csv", "--jobs", "1")
    rows = out.splitlines()
    assert code == 0
    assert rows[0].split(",") == list(cli.ROW_FIELDS)
    assert json.loads(err)["summary"]["disagreements"] == 0


def test_dmax_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("HOOK_SPECHT_DMAX", "4")
    code, _, err = run(capsys, "sweep", "--dmax", "5")
    assert code == 2 and "cap 4" in err
    code, _, _ = run(capsys, "solve", "--mu", "3,2", "--d", "5", "--k", "0")
    assert code == 2
    monkeypatch.setenv("HOOK_SPECHT_DMAX", "junk")
    code, _, _ = run(capsys, "sweep", "--dmax", "3")
    assert code == 2


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify-relations", "--dmax", "5", "--e-list", "3,4")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert all(r["failed"] == 0 and r["passed"] > 0 for r in rows)


def test_show_garnir_writes_stderr(capsys):
    code, out, err = run(capsys, "classify", "--mu", "6,3", "--d", "9", "--k", "1", "--show-garnir")
    assert code == 0 and json.loads(out)["dimension"] == 1
    assert "C" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hookspecht", "classify", "--mu", "2,1", "--d", "3", "--k", "0"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dimension"] == 1
