"""Command-line behavior: exit codes, renderings, determinism, JSON schemas."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from cmkostka.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_character_single_report(capsys):
    code, out, _ = run_cli(capsys, "character", "--partition", "2,1")
    assert code == 0
    assert out == "lambda: 2,1\nkostka: 1 + q\ncharacter: q^-1 + 2 + q\ndimension: 2\n"


def test_character_json_schema(capsys):
    code, out, _ = run_cli(capsys, "character", "--partition", "2,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == "2,1"
    assert data["kostka"] == {"0": "1", "1": "1"}
    assert data["character"] == {"-1": "1", "0": "2", "1": "1"}
    assert data["dimension"] == "2"
    assert isinstance(data["dimension"], str)


def test_character_batch_over_size(capsys):
    code, out, _ = run_cli(capsys, "character", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("3:")


def test_kostka_golden_and_parse_error(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--partition", "3,1")
    assert code == 0 and out == "3,1: 1 + q + q^2\n"

    code, _, err = run_cli(capsys, "kostka", "--partition", "2,0")
    assert code == 2
    assert "position" in err


def test_kostka_gamma_label(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--gamma-partition", "1;1")
    assert code == 0 and out == "1;1: 1 + q\n"


def test_kostka_wreath_batch(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--n", "2", "--N", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert [entry["lambda"] for entry in data] == ["2;-", "1,1;-", "1;1", "-;2", "-;1,1"]


def test_tangent_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "tangent", "--partition", "2,1")
    assert code == 0 and out == "2,1: -3,-1,-1\n"
    code, out, _ = run_cli(capsys, "tangent", "--partition", "2,1", "--json")
    assert json.loads(out) == {"lambda": "2,1", "weights": ["-3", "-1", "-1"]}


def test_schur_p1n_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "schur-p1n", "--n", "3")
    assert code == 0
    assert out == "3: 1\n2,1: 2\n1,1,1: 1\n"
    code, out, _ = run_cli(capsys, "schur-p1n", "--n", "3", "--json")
    assert json.loads(out) == [
        {"lambda": "3", "m": "1"},
        {"lambda": "2,1", "m": "2"},
        {"lambda": "1,1,1", "m": "1"},
    ]


def test_schur_p1n_wreath(capsys):
    code, out, _ = run_cli(capsys, "schur-p1n", "--n", "2", "--N", "2", "--json")
    assert code == 0
    got = {entry["lambda"]: entry["m"] for entry in json.loads(out)}
    assert got == {"2;-": "1", "1,1;-": "1", "1;1": "2", "-;2": "1", "-;1,1": "1"}


def test_wreath_identity_report(capsys):
    code, out, _ = run_cli(capsys, "wreath", "--N", "2", "--n", "2")
    assert code == 0
    assert "sum of squared dimensions: 8" in out
    assert "wreath group order: 8" in out
    assert out.rstrip().endswith("verified: true")


def test_wreath_json(capsys):
    code, out, _ = run_cli(capsys, "wreath", "--N", "3", "--n", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verified"] is True
    assert data["sum_of_squares"] == data["group_order"] == "18"
    assert len(data["labels"]) == 9


def test_cm_verify_text(capsys):
    code, out, _ = run_cli(capsys, "cm-verify", "--y", "0,1", "--alpha", "0,0")
    assert code == 0
    assert "verified: true" in out
    assert "witness column: 1 1" in out


def test_cm_verify_nested_alias_matches(capsys):
    _, flat, _ = run_cli(capsys, "cm-verify", "--y", "0,1,2", "--alpha", "1/2,0,3", "--json")
    _, nested, _ = run_cli(capsys, "cm", "verify", "--y", "0,1,2", "--alpha", "1/2,0,3", "--json")
    assert flat == nested
    data = json.loads(flat)
    assert data["verified"] is True
    assert all(value == "1" for row in data["commutator_plus_identity"] for value in row)


def test_cm_verify_usage_errors(capsys):
    code, _, err = run_cli(capsys, "cm-verify", "--y", "0,0", "--alpha", "1,2")
    assert code == 2 and "distinct" in err
    code, _, err = run_cli(capsys, "cm-verify", "--y", "0,1", "--alpha", "1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["cm-verify", "--y", "0,zz", "--alpha", "1,2"])
    assert exc.value.code == 2


def test_cm_embed_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "cm-embed", "--y", "0,1", "--alpha", "1/2,0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ideal"] == ["0", "-1", "1"]
    rows = [[Fraction(v) for v in row] for row in data["subspace"]]
    assert len(rows) == 4 and all(len(r) == 2 for r in rows)
    w1 = [rows[r][0] for r in range(4)]
    assert w1[0] == 1
    assert w1[1] == Fraction(-1, 2)


def test_missing_required_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kostka"])
    assert exc.value.code == 2


def test_verify_all_small_run(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--n", "3", "--N", "2", "--seed", "7")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("all passed")


def test_verify_all_corruption_is_caught(capsys):
    code, out, _ = run_cli(
        capsys, "verify-all", "--n", "3", "--N", "2", "--inject-hook-corruption"
    )
    assert code == 1
    assert "FAIL completion-series-consistency" in out


def test_verify_all_json_items_are_strings(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--n", "3", "--N", "1", "--seed", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(isinstance(check["items"], str) for check in data["checks"])


def test_identical_config_gives_identical_bytes(capsys):
    first = run_cli(capsys, "verify-all", "--n", "3", "--N", "2", "--seed", "9", "--json")
    second = run_cli(capsys, "verify-all", "--n", "3", "--N", "2", "--seed", "9", "--json")
    assert first == second
    third = run_cli(
        capsys, "verify-all", "--n", "3", "--N", "2", "--seed", "9", "--threads", "3", "--json"
    )
    assert third == first


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "cmkostka.cli", "kostka", "--partition", "2,1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "2,1: 1 + q\n"
