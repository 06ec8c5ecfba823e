import json

import pytest

from hamgen_cycles import make_circuit
from hamgen_gf2 import EdgeVector
from hamgen_graph import new_graph
from hamgen_report import (
    FAIL,
    FINDING,
    PASS,
    SKIP,
    VerificationReport,
    derived,
    dumps,
    expect,
    format_text,
    paper,
    suite_document,
    summarize,
    timed,
    to_jsonable,
    trivial,
)


def test_expectations_carry_provenance():
    assert paper(3) == {"value": 3, "source": "paper"}
    assert trivial(True)["source"] == "trivial"
    assert derived([1])["source"] == "derived"
    with pytest.raises(ValueError):
        expect(1, "folklore")


def test_evaluate_passes_on_matching_values():
    report = VerificationReport.evaluate("a", {"rank": 5, "extra": 1}, {"rank": paper(5)})
    assert report.status == PASS
    assert report.diff == []
    assert report.ok


def test_evaluate_records_diff():
    report = VerificationReport.evaluate(
        "a", {"rank": 4, "list": (1, 2)}, {"rank": paper(5), "list": paper([1, 2])}
    )
    assert report.status == FAIL
    assert report.diff == [{"key": "rank", "expected": 5, "computed": 4}]
    assert not report.ok


def test_evaluate_missing_key_is_a_diff():
    report = VerificationReport.evaluate("a", {}, {"rank": paper(5)})
    assert report.diff == [{"key": "rank", "expected": 5, "computed": None}]


def test_finding_flag_overrides_status():
    report = VerificationReport.evaluate("a", {"x": 1}, {"x": paper(2)}, finding=True)
    assert report.status == FINDING
    assert report.ok


def test_soften_only_when_all_diffs_are_listed():
    expected = {"proper": paper(True), "bandwidth_ok": paper(True)}
    one = VerificationReport.evaluate("a", {"proper": False, "bandwidth_ok": True}, expected)
    assert one.soften({"proper"}, "improper").status == FINDING
    assert one.note == "improper"

    two = VerificationReport.evaluate("a", {"proper": False, "bandwidth_ok": False}, expected)
    assert two.soften({"proper"}, "improper").status == FAIL
    assert two.note == ""

    ok = VerificationReport.evaluate("a", {"proper": True, "bandwidth_ok": True}, expected)
    assert ok.soften({"proper"}, "improper").status == PASS


def test_skipped_report():
    report = VerificationReport.skipped("big", "capacity")
    assert report.status == SKIP
    assert report.note == "capacity"
    assert report.ok


def test_timed_sets_id_and_elapsed():
    report = timed("renamed", lambda: VerificationReport.evaluate("x", {}, {}))
    assert report.check_id == "renamed"
    assert report.elapsed >= 0.0


def test_to_jsonable_handles_domain_values():
    g = new_graph(3, [(0, 1), (1, 2), (0, 2)])
    circuit = make_circuit(g, [0, 1, 2])
    value = {
        1: (1, 2),
        "set": {3, 1},
        "circuit": circuit,
        "chain": EdgeVector.from_support(4, [0, 2]),
    }
    out = to_jsonable(value)
    assert out["1"] == [1, 2]
    assert out["set"] == [1, 3]
    assert out["circuit"] == str(circuit)
    assert out["chain"] == "1010"
    json.dumps(out)


def _sample():
    return [
        VerificationReport.evaluate("b.second", {"x": 1}, {"x": paper(2)}),
        VerificationReport.evaluate("a.first", {"x": 1}, {"x": paper(1)}),
        VerificationReport.skipped("c.third", "capacity"),
    ]


def test_summarize_counts_every_status():
    assert summarize(_sample()) == {PASS: 1, FAIL: 1, FINDING: 0, SKIP: 1}


def test_suite_document_is_sorted_and_stable():
    doc = suite_document("demo", _sample(), with_elapsed=False)
    assert doc["schema"] == "report-v1"
    assert doc["suite"] == "demo"
    assert [r["check_id"] for r in doc["reports"]] == ["a.first", "b.second", "c.third"]
    assert all("elapsed" not in r for r in doc["reports"])
    assert dumps(doc) == dumps(suite_document("demo", list(reversed(_sample())), False))
    assert json.loads(dumps(doc)) == doc


def test_format_text():
    text = format_text(_sample())
    lines = text.splitlines()
    assert lines[0].split() == ["PASS", "a.first"]
    assert lines[1].split() == ["FAIL", "b.second"]
    assert "x: expected 2 got 1" in lines[2]
    assert lines[-1] == "1 passed, 1 failed, 0 findings, 1 skipped"
