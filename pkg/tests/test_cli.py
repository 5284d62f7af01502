"""Command-line behaviour: outputs, exit codes, JSON determinism."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from satake.cli import run

GOLDEN = Path(__file__).parent / "golden"


def test_list_contains_every_primary_name(capsys, full_catalog):
    assert run(["list"]) == 0
    out = capsys.readouterr().out
    for rec in full_catalog:
        assert rec.name in out
    assert "A1xA1 black= arrows=1:2" in out


def test_show(capsys):
    assert run(["show", "su*(4)"]) == 0
    out = capsys.readouterr().out
    assert "name: su*(4)" in out
    assert "also known as: sl(2,H)" in out
    assert "diagram: A3 black=1,3 arrows=" in out
    assert "identity involution: yes" in out
    assert "restricted type: A1" in out


def test_epsilon_identity(capsys):
    assert run(["epsilon", "sl(3,R)"]) == 0
    assert capsys.readouterr().out.strip() == "identity"


def test_epsilon_cycles(capsys):
    assert run(["epsilon", "e6(2)"]) == 0
    assert capsys.readouterr().out.strip() == "(1 6)(3 5)"


def test_epsilon_literal(capsys):
    assert run(["epsilon", "A3 black=1,3 arrows="]) == 0
    assert capsys.readouterr().out.strip() == "identity"


def test_epsilon_invalid_literal(capsys):
    assert run(["epsilon", "A2 black=1 arrows=1:2"]) == 2
    err = capsys.readouterr().err
    assert "arrow touches black node" in err


def test_epsilon_parse_error(capsys):
    assert run(["epsilon", "A2  black= arrows="]) == 2
    assert "position" in capsys.readouterr().err


def test_unknown_name_exit_1_with_suggestions(capsys):
    assert run(["show", "su(19)"]) == 1
    err = capsys.readouterr().err
    assert "unknown real form" in err
    assert "close matches" in err


def test_classify_json_deterministic(capsys):
    assert run(["classify", "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["classify", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["rank_bound"] == 8
    names = {row["name"]: row for row in payload["real_forms"]}
    assert names["so(2,6)"]["is_identity"] is True
    assert names["su(2,1)"]["automorphism"] == "(1 2)"


def test_classify_text_summary(capsys):
    assert run(["classify"]) == 0
    out = capsys.readouterr().out
    assert "identity involution: 122 of 205" in out


def test_rank_bound_flag(capsys):
    assert run(["--rank-bound", "2", "classify", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rank_bound"] == 2
    assert all("E" not in row["diagram"].split(" ")[0] for row in payload["real_forms"])
    assert run(["--rank-bound", "2", "show", "f4(4)"]) == 1
    capsys.readouterr()


def test_restricted_json(capsys):
    assert run(["restricted", "su(2,1)", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == "BC1"
    assert payload["base"] == [[{"num": 1, "den": 2}, {"num": 1, "den": 2}]]
    assert payload["positive"][0]["multiplicity"] == 2


def test_restricted_text(capsys):
    assert run(["restricted", "so(2,3)"]) == 0
    out = capsys.readouterr().out
    assert "restricted type: B2" in out
    assert "x1" in out


def test_restricted_compact(capsys):
    assert run(["restricted", "su(4)"]) == 0
    assert "none (compact)" in capsys.readouterr().out


def test_weights(capsys):
    assert run(["weights", "su(2,1)", "1,0"]) == 0
    assert capsys.readouterr().out.strip() == "0,1"


def test_weights_bad_coords(capsys):
    assert run(["weights", "su(2,1)", "1,x"]) == 2
    capsys.readouterr()
    assert run(["weights", "su(2,1)", "1,0,0"]) == 2
    capsys.readouterr()


def test_verdict_json_matches_golden(capsys):
    assert run(["verdict", "sl(3,R)", "--spherical", "--self-normalizing", "--json"]) == 0
    out = capsys.readouterr().out
    expected = (GOLDEN / "verdict_identity_spherical_selfnormalizing.json").read_text()
    assert out == expected


def test_verdict_text(capsys):
    assert run(["verdict", "su(2,1)", "--spherical"]) == 0
    out = capsys.readouterr().out
    assert "subgroup conjugacy: unknown" in out
    assert "citations: Sec6-example" in out
    assert "caveats:" in out


def test_selftest(capsys):
    assert run(["selftest"]) == 0
    assert "passed" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert run([]) == 2
    capsys.readouterr()
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_no_ansi_when_not_a_tty(capsys):
    assert run(["show", "sl(2,R)"]) == 0
    assert "\x1b[" not in capsys.readouterr().out


def test_console_entry_point_round_trip():
    cmd = [sys.executable, "-m", "satake.cli", "epsilon", "su(4,2)"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(1 5)(2 4)"
