from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kbhomology.cli import main
from kbhomology.parse import parse_pi


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology_zero(capsys):
    code, out, _ = run(capsys, "homology", "--pi", "0", "--window", "3")
    assert code == 0
    assert json.loads(out) == {"pi": "0", "window": 3, "dims": [0, 0, 4, 0, 0], "stable": True, "euler": 4}


def test_homology_json_schema_round_trips(capsys):
    code, out, _ = run(capsys, "homology", "--pi", "z1*z2 - (1/2+i)", "--window", "3", "--exact")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"pi", "window", "dims", "stable", "euler"}
    assert parse_pi(data["pi"]) == parse_pi("z1*z2 - (1/2+i)")


def test_homology_table(capsys):
    code, out, _ = run(capsys, "homology", "--pi", "product", "--window", "3", "--format", "table")
    assert code == 0 and "dim     0    0    4    0    0" in out


def test_unstable_window_exit_code(capsys):
    code, out, err = run(capsys, "homology", "--pi", "random(1)", "--window", "1")
    assert code == 1
    assert json.loads(out)["stable"] is False
    assert "unstable" in err


@pytest.mark.parametrize("pi", ["z1^3", "z1 +", "(1+2i"])
def test_input_errors(capsys, pi):
    code, _, err = run(capsys, "homology", "--pi", pi)
    assert code == 2 and "input error" in err


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", "--pi", "1+z1^2*z2^2", "--window", "3")
    data = json.loads(out)
    assert code == 0 and data["euler"] == 4 and data["expected"] == 4
    assert data["identity_checks"]["chi_omega"] == [1, -2, 1]


def test_pairing(capsys):
    code, out, _ = run(capsys, "pairing", "--pi", "0", "--k", "2", "--window", "3")
    data = json.loads(out)
    assert code == 0 and data["rank"] == 4 and data["nondegenerate"] is True
    code, out, _ = run(capsys, "pairing", "--pi", "z1*z2", "--k", "2", "--window", "3")
    assert json.loads(out)["rank"] == 4
    code, out, _ = run(capsys, "pairing", "--pi", "0", "--k", "0", "--window", "3")
    data = json.loads(out)
    assert code == 0 and data["matrix"] == [] and data["nondegenerate"] is True


def test_pairing_bad_degree(capsys):
    code, _, _ = run(capsys, "pairing", "--pi", "0", "--k", "7", "--window", "3")
    assert code == 2


@pytest.mark.parametrize("a, b, dims", [(0, 0, [1, 0, 0]), (-2, -2, [0, 0, 1]), (3, 1, [8, 0, 0])])
def test_linebundle(capsys, a, b, dims):
    code, out, _ = run(capsys, "linebundle", str(a), str(b))
    data = json.loads(out)
    assert code == 0 and data["closed_form"] == dims and data["cech"] == dims


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "--suite", "chain-map", "--trials", "10", "--seed", "42")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["results"]) == 3
    code, out, _ = run(capsys, "check", "--trials", "0")
    assert code == 0 and all(r["trials"] == 0 for r in json.loads(out)["results"])


def test_check_failure_exit_code(capsys, monkeypatch):
    from kbhomology import checks

    false = checks.Identity("a false identity", lambda rng, d: (checks.random_poly(rng, d),), lambda p: p.is_zero(), "operators")
    monkeypatch.setattr(checks, "IDENTITIES", [false])
    code, out, err = run(capsys, "check", "--suite", "operators", "--trials", "3")
    data = json.loads(out)
    assert code == 3 and not data["ok"]
    # shrinking leaves a single monomial
    (ce,) = data["results"][0]["counterexample"]
    assert "+" not in ce and " - " not in ce
    assert "counterexample" in err


def test_byte_identical_output_across_processes():
    argv = [sys.executable, "-m", "kbhomology", "homology", "--pi", "random(3)", "--window", "3", "--seed", "5"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout
