from __future__ import annotations

import json

import pytest

from config import settings
from main import EXIT_INTERNAL, EXIT_OK, EXIT_UNDETERMINED, EXIT_USAGE, run


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tensor_golden_json(capsys):
    code, out, _ = _run(capsys, "tensor", "--type", "A2", "--p", "5", "--lhs", "1,0", "--rhs", "0,4", "--format", "json")
    assert code == EXIT_OK
    assert out == '{"factors":[{"weight":[1,4],"mult":1},{"weight":[0,3],"mult":1}]}\n'


def test_tensor_text(capsys):
    code, out, _ = _run(capsys, "tensor", "--type", "A2", "--p", "5", "--lhs", "1,0", "--rhs", "0,4")
    assert code == EXIT_OK
    assert out.splitlines() == ["L(1,4) x1", "L(0,3) x1"]


def test_mf_a1(capsys):
    code, out, _ = _run(capsys, "mf", "--type", "A1", "--p", "7", "--lhs", "3", "--rhs", "4")
    assert code == EXIT_OK
    assert out.startswith("HasMultiplicity")
    code, out, _ = _run(capsys, "mf", "--type", "A1", "--p", "7", "--lhs", "3", "--rhs", "4", "--format", "json")
    payload = json.loads(out)
    assert payload["value"] == "HasMultiplicity"
    assert payload["witness"] == [5]


def test_mf_both_methods(capsys):
    code, out, _ = _run(capsys, "mf", "--type", "A2", "--p", "5", "--lhs", "1,1", "--rhs", "1,1",
                        "--method", "both", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["agree"] is True
    assert payload["oracle"]["clause"] == "sl3:none"


def test_classify_unknown_and_strict(capsys):
    argv = ["classify", "--type", "B2", "--p", "5", "--lhs", "1,1", "--rhs", "2,0"]
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out.strip() == "Unknown [sp4:unresolved:ab⊗c0]"
    code, _, _ = _run(capsys, *argv, "--strict")
    assert code == EXIT_UNDETERMINED


def test_c2_is_synonym_of_b2(capsys):
    _, b2_out, _ = _run(capsys, "rootsys", "--type", "B2", "--format", "json")
    _, c2_out, _ = _run(capsys, "rootsys", "--type", "C2", "--format", "json")
    assert b2_out == c2_out
    assert json.loads(b2_out)["coxeter_number"] == 4


def test_character_commands(capsys):
    code, out, _ = _run(capsys, "weyl-dim", "--type", "B2", "--highest", "2,0")
    assert (code, out.strip()) == (EXIT_OK, "14")
    code, out, _ = _run(capsys, "weyl-char", "--type", "A", "--rank", "2", "--highest", "1,1", "--format", "json")
    assert json.loads(out) == {
        "dimension": 8,
        "terms": [{"weight": [1, 1], "mult": 1}, {"weight": [0, 0], "mult": 2}],
    }
    code, out, _ = _run(capsys, "weight-mult", "--type", "A2", "--highest", "2,2", "--weight", "0,0",
                        "--p", "5", "--simple")
    assert (code, out.strip()) == (EXIT_OK, "1")


def test_modular_commands(capsys):
    code, out, _ = _run(capsys, "jantzen", "--type", "A2", "--p", "5", "--highest", "2,2")
    assert (code, out.strip()) == (EXIT_OK, "+1 χ(1,1)")
    code, out, _ = _run(capsys, "weyl-factors", "--type", "B2", "--p", "5", "--highest", "2,0", "--format", "json")
    assert json.loads(out)["factors"] == [{"weight": [2, 0], "mult": 1}, {"weight": [0, 0], "mult": 1}]
    code, out, _ = _run(capsys, "simple-char", "--type", "B2", "--p", "5", "--highest", "2,0", "--format", "json")
    assert json.loads(out)["dimension"] == 13


def test_mf_char0(capsys):
    code, out, _ = _run(capsys, "mf-char0", "--type", "B2", "--lhs", "1,1", "--rhs", "1,1")
    assert (code, out.strip()) == (EXIT_OK, "HasMultiplicity")


def test_verify_output_is_worker_independent(capsys):
    base = ["verify", "--type", "A1", "--p", "5", "--format", "json"]
    _, serial, _ = _run(capsys, *base, "--workers", "1")
    _, parallel, _ = _run(capsys, *base, "--workers", "2")
    assert serial == parallel
    report = json.loads(serial)
    assert report["total"] == 25
    assert report["mismatches"] == []


def test_logs_go_to_stderr(capsys):
    code, out, err = _run(capsys, "verify", "--type", "A1", "--p", "3", "--format", "json", "--log-level", "INFO")
    assert code == EXIT_OK
    assert json.loads(out)["total"] == 9
    assert "[Verify]" in err


@pytest.mark.parametrize("argv", [
    [],
    ["tensor", "--type", "A2", "--p", "5", "--lhs", "1,0"],
    ["tensor", "--type", "A2", "--p", "5", "--lhs", "1,0", "--rhs", "0,4", "--format", "xml"],
    ["tensor", "--type", "D4", "--p", "5", "--lhs", "1,0", "--rhs", "0,4"],
    ["tensor", "--type", "A2", "--p", "5", "--lhs", "1", "--rhs", "0,4"],
    ["tensor", "--type", "A2", "--p", "5", "--lhs", "x,y", "--rhs", "0,4"],
    ["tensor", "--type", "A2", "--p", "5", "--lhs=-1,2", "--rhs", "0,4"],
    ["weight-mult", "--type", "A2", "--highest", "1,1", "--weight", "0,0", "--simple"],
    ["rootsys", "--type", "A2", "--log-level", "LOUD"],
])
def test_usage_errors(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err


def test_usage_error_as_json(capsys):
    code, _, err = _run(capsys, "tensor", "--type", "D4", "--p", "5", "--lhs", "1,0", "--rhs", "0,4",
                        "--format", "json")
    assert code == EXIT_USAGE
    assert json.loads(err.strip().splitlines()[-1])["type"] == "UnsupportedRootSystem"


def test_parse_error_honours_json_format(capsys):
    code, _, err = _run(capsys, "tensor", "--format", "json", "--type", "A2", "--p", "5", "--lhs", "1,0")
    assert code == EXIT_USAGE
    assert json.loads(err.strip().splitlines()[-1])["type"] == "UsageError"


def test_log_level_from_settings_is_checked(capsys, monkeypatch):
    monkeypatch.setattr(settings, "log_level", "LOUD")
    code, out, _ = _run(capsys, "rootsys", "--type", "A2")
    assert code == EXIT_USAGE
    assert out == ""
    code, _, _ = _run(capsys, "rootsys", "--type", "A2", "--log-level", "info")
    assert code == EXIT_OK


def test_help_exits_zero(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == EXIT_OK
    assert "tensor" in out


def test_recursion_limit_is_internal_error(capsys, fresh_memo, monkeypatch):
    monkeypatch.setattr(settings, "max_recursion", 0)
    code, _, err = _run(capsys, "weyl-factors", "--type", "A2", "--p", "5", "--highest", "2,2")
    assert code == EXIT_INTERNAL
    assert "erro:" in err
