import io
import json
import subprocess
import sys

import pytest

from schubsupp.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, SCHEMA_VERSION, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_expand_perm_tsv():
    code, text = run("expand", "--perm", "1432")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[:4] == ["# permutation\t1432", "# terms\t5", "# nu\t5", "# theta\t5"]
    assert len(lines) == 5 + 5


def test_expand_comp_json():
    code, text = run("expand", "--comp", "2,1", "--format", "json")
    data = json.loads(text)
    assert code == EXIT_OK and data["schema_version"] == SCHEMA_VERSION
    assert data["polynomial"]["terms"] == [{"exponents": [2, 1], "coefficient": 1}]


def test_expand_132_terms():
    _, text = run("expand", "--perm", "132")
    assert text.splitlines()[-2:] == ["0,1,0\t1", "1,0,0\t1"]


def test_usage_errors(capsys):
    assert run("expand", "--perm", "14x2")[0] == EXIT_USAGE
    assert "position 3" in capsys.readouterr().err
    assert run("verify", "nonsense")[0] == EXIT_USAGE
    assert run("tables", "alphabeta", "--n", "8")[0] == EXIT_USAGE
    assert run("verify", "thm12", "--grid", "6")[0] == EXIT_USAGE
    assert run("expand", "--perm", "12", "--workers", "0")[0] == EXIT_USAGE


def test_verify_reports():
    code, text = run("verify", "thm12", "--grid", "3")
    assert code == EXIT_OK
    assert text.splitlines()[:3] == ["scope\tthm12", "checked\t512", "violations\t0"]
    assert text.endswith("status\tok\n")
    code, text = run("verify", "macdonald", "--n", "5", "--format", "json")
    data = json.loads(text)
    assert data["ok"] and data["results"][0]["checked"] == 120


def test_resource_cap_exit_code(monkeypatch):
    import schubsupp.weylchar as wc
    monkeypatch.setattr(wc, "DEFAULT_CAP", 5)
    monkeypatch.setattr(wc.theta_many, "__defaults__", (5, None))
    assert run("verify", "thm12", "--grid", "3")[0] == EXIT_CAP


def test_tables_layout():
    _, text = run("tables", "alphabeta", "--n", "1")
    assert text == "n\talpha_n\tw\tbeta_n\tw\n1\t1\t1\t1\t1\n"
    _, text = run("tables", "cd", "--m", "5")
    assert len(text.splitlines()) == 26


def test_byte_stable_across_workers():
    a = run("tables", "alphabeta", "--n", "6")[1]
    b = run("tables", "alphabeta", "--n", "6", "--workers", "2")[1]
    c = run("tables", "alphabeta", "--n", "6")[1]
    assert a == b == c


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "schubsupp", "expand", "--perm", "132"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "# nu\t2" in res.stdout


@pytest.mark.parametrize("scope", ["thm14", "keyres", "patterns", "prop21"])
def test_other_scopes_run(scope):
    args = ["verify", scope]
    if scope in ("patterns", "prop21"):
        args += ["--n", "4"]
    else:
        args += ["--count", "30"]
    assert run(*args)[0] == EXIT_OK
