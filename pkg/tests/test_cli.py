"""Command-line interface: verbs, exit codes, exact-input validation,
JSON output."""

import json

import pytest

from axia.cli import run
from axia.serialize import algebra_from_json, load_json


def test_catalog_listing(capsys):
    assert run(["catalog"]) == 0
    out = capsys.readouterr().out
    for name in ("2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"):
        assert name in out


def test_catalog_export(tmp_path):
    path = tmp_path / "d4a.json"
    assert run(["catalog", "4A", "--out", str(path)]) == 0
    alg, form = algebra_from_json(load_json(path))
    assert alg.dim == 5
    assert form is not None


def test_build_m4b_roundtrip(tmp_path):
    path = tmp_path / "m4b.json"
    assert run(["build", "m4b", "--out", str(path)]) == 0
    doc = load_json(path)
    assert doc["field"] == "rationals"
    alg, form = algebra_from_json(doc)
    assert alg.dim == 7
    from axia.m4 import build_m4b
    built = build_m4b()
    assert alg.mul_table == built.algebra.mul_table
    assert form.gram == built.form.gram


def test_build_m4a_json_is_symbolic(tmp_path):
    path = tmp_path / "m4a.json"
    assert run(["build", "m4a", "--out", str(path)]) == 0
    doc = load_json(path)
    assert doc["field"] == "rational_functions"
    assert len(doc["labels"]) == 12


def test_verify_dihedral_exit_zero():
    assert run(["verify", "dihedral:3C"]) == 0


def test_verify_report_json(tmp_path):
    path = tmp_path / "rep.json"
    assert run(["verify", "m4b", "--out", str(path)]) == 0
    rep = json.loads(path.read_text())
    assert rep["pass"] is True
    assert any(c["name"] == "dimension" for c in rep["checks"])


def test_radical_single_point(capsys):
    assert run(["radical", "--t", "9/4"]) == 0
    assert "radical_dim=5" in capsys.readouterr().out


def test_radical_grid(capsys):
    assert run(["radical", "--grid", "0,1/12,1/6"]) == 0
    out = capsys.readouterr().out
    assert out.count("radical_dim=3") == 2
    assert "radical_dim=0" in out


def test_norton_grid(capsys):
    assert run(["norton", "--grid", "1/12,1/4"]) == 0
    out = capsys.readouterr().out
    assert "norton_psd=True" in out
    assert "norton_psd=False" in out


def test_certify_majorana(capsys):
    assert run(["certify", "majorana", "--t", "1/12"]) == 0
    assert "is_majorana=True" in capsys.readouterr().out


def test_certify_quotient_pass_and_fail():
    assert run(["certify", "quotient", "--t", "0"]) == 0
    assert run(["certify", "quotient", "--t", "1/12"]) == 1


def test_gram_report(tmp_path):
    path = tmp_path / "gram.json"
    assert run(["gram", "--out", str(path)]) == 0
    rep = json.loads(path.read_text())
    assert rep["pass"] is True
    assert rep["determinant_matches_closed_form"] is True
    assert len(rep["ldlt_diagonal"]) == 12
    assert len(rep["interval_certificates"]) == 12


# ---------------------------------------------------------------------------
# usage errors -> exit code 2
# ---------------------------------------------------------------------------

def test_unknown_verb_exits_2(capsys):
    assert run(["bogus"]) == 2


def test_decimal_parameter_rejected(capsys):
    assert run(["radical", "--t", "0.1"]) == 2
    assert "exact rational" in capsys.readouterr().err


def test_unknown_dihedral_type_rejected(capsys):
    assert run(["verify", "dihedral:9Z"]) == 2


def test_unknown_target_rejected(capsys):
    assert run(["build", "nonsense"]) == 2


def test_missing_parameter_rejected(capsys):
    assert run(["radical"]) == 2
    assert "--t" in capsys.readouterr().err


def test_unknown_flag_rejected(capsys):
    assert run(["gram", "--frobnicate"]) == 2
