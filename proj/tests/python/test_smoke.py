import json

import jsonschema
import pytest

import srank
from conftest import fixture_text


def test_version():
    assert srank.__version__.count(".") == 2


def test_normal_forms_and_equality():
    text = fixture_text("F2_3.cmon")
    assert srank.eq(text, "5a", "a+2b")["equal"] is True
    assert srank.eq(text, "b", "2a")["equal"] is False
    assert srank.nf(text, "3a")["normal_form"] == srank.nf(text, "a + b")["normal_form"]


def test_completion_and_grading():
    text = "gens a b; rel a + b = a;"
    done = srank.complete(text)
    assert done["confluent"] is True
    assert done["rules"] == ["a + b -> a"]
    assert srank.grade(text)["grading"] == [1, 0]


def test_finite_detection():
    assert srank.finite("gens a; rel 3 a = a;")["size"] == 3
    assert srank.finite(fixture_text("F2_5.cmon"))["finite"] is False


def test_stable_rank_bracket_and_certificates():
    text = fixture_text("F2_5.cmon")
    r = srank.sr(text, "a")
    assert r["sr"]["pinned"] and r["sr"]["value"] == 5
    assert r["sr_plus"]["value"] == 6
    assert r["verification"]["rejected"] == 0
    for cert in r["sr"]["chain"]:
        assert srank.verify(text, cert)["ok"]
    forged = dict(r["sr"]["chain"][-1])
    forged["params"] = {"n": forged["params"]["n"] + 1}
    assert not srank.verify(text, forged)["ok"]


def test_exact_ranks_on_tables():
    r = srank.sr(fixture_text("F6.ctab"), "a")
    assert r["exact"] and r["sr"] == "inf"
    assert r["self_cancellative"]["value"] is True
    assert r["hermite"]["value"] is False


def test_window_properties():
    p = srank.props(fixture_text("F5.cmon"))
    assert p["properties"]["separative"]["verdict"] == "Fails"
    assert p["properties"]["separative"]["certificate"]["kind"] == "Counterexample"


def test_quotients():
    text = fixture_text("F6.ctab")
    q = srank.quotient(text, "max-antisymmetric")
    assert q["classes"] == [["0"], ["a", "2a"]]
    ps = srank.quotient(text, "power-some", powers=[2])
    assert len(ps["quotient"]["elements"]) == 2
    cong = srank.quotient(text, "sr-plus", targets=["a:1"])
    assert cong["kernel_matches_relation"] in (True, False)
    assert len(cong["classes"]) == 2


def test_suite_subset():
    r = srank.suite(["F5", "F6"], samples=10)
    assert r["summary"]["passed_all"] is True
    assert [f["id"] for f in r["fixtures"]] == ["F5", "F6"]


def test_fixture_catalog_matches_files(root):
    for f in srank.fixtures():
        assert (root / "fixtures" / f["filename"]).read_text() == f["text"]


def test_errors_are_value_errors():
    with pytest.raises(srank.ParseError):
        srank.nf("gens a; rel 3 a = c;", "a")
    with pytest.raises(ValueError):
        srank.sr("gens a;", "b")
    with pytest.raises(ValueError):
        srank.quotient(fixture_text("F6.ctab"), "bogus")


def test_report_envelope_validates(schema):
    text = fixture_text("F2_5.cmon")
    rep = srank.report("sr", text, {"expr": "a"}, srank.sr, text, "a")
    jsonschema.validate(rep, schema, cls=jsonschema.Draft202012Validator)
    again = srank.report("sr", text, {"expr": "a"}, srank.sr, text, "a")
    assert again["results"] == rep["results"]
    assert json.dumps(again["results"], sort_keys=True) == json.dumps(rep["results"], sort_keys=True)
