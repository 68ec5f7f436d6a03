"""Smoke tests for the Python bindings: the raw command surface and the
convenience wrappers, pinned against the same worked examples as the CLI."""

import json

import pytest

import coalg


def test_run_returns_code_and_output():
    code, out = coalg.run(["product", "ccsym.fl", "[1,3]", "[1,1]"])
    assert code == 0
    assert out == "F[1,4] + F[2,3] + F[3,2] + F[4,1]\n"


def test_run_reports_errors_without_raising():
    code, out = coalg.run(["dim", "nope", "3"])
    assert code == 1
    assert out.startswith("error:")


def test_wrappers_strip_trailing_newline():
    assert coalg.product("ysym", "(. .)", "(. .)") == "F((. .) .) + F(. (. .))"
    assert coalg.coproduct("csym", "c2") == "Fc0 (x) Fc2 + Fc1 (x) Fc1 + Fc2 (x) Fc0"
    assert coalg.antipode("csym", "c3") == "-Fc3"
    assert coalg.dim("ssym-o-csym", "0..5") == "1 2 5 15 54 235"
    assert coalg.primitives("csym", 1) == "dim 1\nFc1"
    assert coalg.convert("{3,5,6}/9", "composition") == "[3,2,1,4]"
    assert coalg.convert("[4]", "subset") == "{}/3"


def test_mobius_is_an_int():
    assert coalg.mobius("((. .) .)", "(. (. .))") == -1
    assert coalg.mobius("((. .) .)", "((. .) .)") == 1


def test_verify_returns_true():
    assert coalg.verify("ccsym", max_degree=3) is True
    assert coalg.verify("psym", max_degree=3, axioms="coassoc,counit") is True


def test_json_format_through_run():
    code, out = coalg.run(["product", "ccsym.fl", "[1,3]", "[1,1]", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert [t["basis"] for t in data["terms"]] == ["[1,4]", "[2,3]", "[3,2]", "[4,1]"]
    assert all(t["coeff"] == "1" for t in data["terms"])


def test_errors_raise_runtime_error():
    with pytest.raises(RuntimeError):
        coalg.product("nope", "x", "y")
    with pytest.raises(RuntimeError):
        coalg.verify("psym", axioms="coassoc,nonsense")
