"""
Tests for verification reports
"""
import json

from src.freealg import Element
from src.report import REPORT_SCHEMA, VerificationReport
from src.scalar import q


def sample() -> VerificationReport:
    report = VerificationReport(title="sample")
    report.add("dga.leibniz", "x*y", True)
    report.add("hopf.counit", "x", False, Element.word("x").scale(q() - 1))
    return report


def test_failures_carry_canonical_witnesses():
    report = sample()
    assert not report.passed
    [failure] = report.failures()
    assert failure.witness == "(q - 1)*x"
    assert report.check_passed("dga.leibniz")
    assert not report.check_passed("hopf.counit")
    assert not report.check_passed("confluence")


def test_json_follows_the_versioned_schema():
    payload = json.loads(sample().to_json())
    assert payload["schema"] == REPORT_SCHEMA
    assert payload["passed"] is False
    assert payload["records"][0] == {"check": "dga.leibniz", "subject": "x*y", "status": "pass"}
    assert "index" not in payload["records"][1]
    assert "properties" in VerificationReport.json_schema()


def test_identical_runs_serialise_identically():
    assert sample().to_json() == sample().to_json()


def test_merge_orders_by_check_then_index():
    first = VerificationReport()
    first.add("hopf.counit", "a", True)
    second = VerificationReport()
    second.add("dga.leibniz", "b", True)
    merged = VerificationReport.merge([first, second], title="merged")
    assert [r.check for r in merged.records] == ["dga.leibniz", "hopf.counit"]
    assert VerificationReport.merge([second, first]).to_dict()["records"] == merged.to_dict()["records"]


def test_extend_prefixes_check_names():
    report = VerificationReport()
    report.extend(sample(), prefix="action.")
    assert [r.check for r in report.records] == ["action.dga.leibniz", "action.hopf.counit"]


def test_specialize_turns_vanishing_witnesses_into_passes():
    report = sample()
    assert report.specialize({"q": 1}).passed
    still_failing = report.specialize({"q": 2})
    assert still_failing.failures()[0].witness == "x"


def test_summary_lists_failures():
    text = sample().summary()
    assert text.splitlines()[0] == "sample: 1/2 checks passed"
    assert "FAIL hopf.counit [x]" in text
