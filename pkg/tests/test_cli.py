import io
import json
import subprocess
import sys

import pytest

from blockcount.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call("--json", *argv)
    assert code == 0, err
    return json.loads(out)


def test_verlinde_d4_genus_two():
    code, out, _ = call("verlinde", "D4", "--level", "1", "--genus", "2")
    assert (code, out.strip()) == (0, "16")
    doc = call_json("verlinde", "D4", "--level", "1", "--genus", "2")
    assert doc["result"] == 16 and doc["exact"] is True and doc["schema"] == "1"


def test_conformal_check_witness():
    doc = call_json("conformal-check", "ad", "A2")
    assert doc["result"]["conformal"] is True
    assert doc["result"]["witness"] == "4 = 4"
    assert doc["result"]["index"] == "3/1"
    doc = call_json("conformal-check", "sl", "G2")
    assert doc["result"]["conformal"] is False
    assert doc["result"]["witness"] == "28/3 != 13"


def test_alcove_a1_level_two():
    doc = call_json("alcove", "A1", "--level", "2")
    assert doc["result"] == [[0], [1], [2]]
    assert doc["query"] == {"algebra": "A1", "command": "alcove", "level": 2}


def test_aliases_are_canonicalised():
    assert call_json("alcove", "so7", "--level", "1")["query"]["algebra"] == "B3"


def test_rationals_render_as_fractions():
    doc = call_json("charge", "A2", "--level", "3", "--weight", "1,1")
    assert doc["result"] == {"central_charge": "4/1", "conformal_weight": "1/2"}


@pytest.mark.parametrize(
    "argv",
    [
        ("fuse", "A2", "1,0", "0,1", "--level", "1"),
        ("center", "D4", "--level", "1"),
        ("character", "A1", "--level", "1", "--weight", "0", "--depth", "4"),
        ("branch", "A2", "--depth", "2"),
        ("theta", "--genus", "2"),
        ("casimir", "A1"),
        ("index", "E8"),
    ],
)
def test_output_is_deterministic(argv):
    a, b = call("--json", *argv), call("--json", *argv)
    assert a == b and a[0] == 0
    doc = json.loads(a[1])
    assert set(doc) == {"schema", "query", "result", "exact", "provenance"}
    assert list(json.loads(a[1]).keys()) == sorted(doc.keys())


def test_character_and_branch_results():
    doc = call_json("character", "A1", "--level", "1", "--weight", "0", "--depth", "4")
    assert doc["result"]["dimensions"] == [1, 3, 4, 7, 13]
    doc = call_json("branch", "A2", "--depth", "2")
    vac = [c for c in doc["result"]["components"] if c["weight"] == [0, 0]]
    assert vac[0]["multiplicity"] == 1
    assert doc["result"]["residual"] == [0, 0, 0]


def test_theta_counts():
    doc = call_json("theta", "--genus", "3")
    assert doc["result"]["even"] == 36 and doc["result"]["odd"] == 28
    assert doc["result"]["b3_level1_verlinde"] == 36


@pytest.mark.parametrize(
    "argv",
    [
        ("verlinde", "Q3", "--level", "1", "--genus", "1"),
        ("verlinde", "D2", "--level", "1", "--genus", "1"),
        ("fuse", "A2", "x,y", "0,1", "--level", "1"),
        ("alcove", "A1"),
        ("nonsense",),
    ],
)
def test_parse_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err


def test_domain_errors_exit_3(monkeypatch):
    assert call("verlinde", "A2", "--level", "1", "--genus", "1", "--insert", "2,0")[0] == 3
    assert call("character", "A1", "--level", "1", "--weight", "0", "--depth", "9")[0] == 3
    assert call("casimir", "F4")[0] == 3
    monkeypatch.setenv("BLOCKCOUNT_MAX_ALCOVE", "2")
    code, _, err = call("alcove", "A1", "--level", "2")
    assert code == 3 and "cap" in err


def test_cross_check_failure_exits_4(monkeypatch):
    import blockcount.fusion as fusion

    monkeypatch.setattr(fusion, "verlinde_dim_exact", lambda p: -1)
    assert call("verlinde", "A1", "--level", "1", "--genus", "1")[0] == 4


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "blockcount.cli", "verlinde", "B3", "--level", "1", "--genus", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "36"


def test_selftest_runs_every_criterion():
    code, out, _ = call("selftest")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 10 and all(line.startswith("PASS") for line in lines)
