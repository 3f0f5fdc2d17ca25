import json

import pytest

from groth.exact import EvaluationPoint
from groth.report import FAILED, VERIFIED, IdentityReport, render_csv, render_json, render_text


def test_verdict_invariant():
    rep = IdentityReport("x", {"n": 1})
    assert rep.verdict == FAILED  # no points tested yet
    rep.points = 3
    assert rep.verdict == VERIFIED
    rep.compare(EvaluationPoint.from_mapping({"z1": "1/2"}), 1, 2, "probe")
    assert rep.verdict == FAILED
    assert rep.failures[0].assignment == {"z1": "1/2"}


def test_json_round_trip_is_byte_identical():
    rep = IdentityReport("x", {"n": 2, "k": 1}, points=2)
    rep.fail({"a": "1/3"}, "5/2", "7", "c")
    text = render_json(rep)
    again = render_json(IdentityReport.from_json(json.loads(text)))
    assert text == again


def test_inconsistent_verdict_rejected():
    d = IdentityReport("x", {}, points=1).to_json()
    d["verdict"] = FAILED
    with pytest.raises(ValueError):
        IdentityReport.from_json(d)


def test_csv_and_text():
    rep = IdentityReport("x", {"n": 2}, points=1)
    assert render_csv(rep).splitlines()[1] == "x,n=2,1,0,verified-at-all-points"
    assert render_text(rep).startswith("[PASS] x n=2")
