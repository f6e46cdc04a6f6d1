"""
Tests for check reports, their renderings and batch exit codes.
"""

import json

import pytest
from pydantic import ValidationError

from laxcat.core.types import Verdict
from laxcat.toolkit.report import (
    CheckReport,
    combined_exit_code,
    failed,
    passed,
    render_reports,
    reports_frame,
    skipped,
)


@pytest.mark.unit
@pytest.mark.toolkit
class TestCheckReport:
    def test_failure_needs_a_witness(self):
        with pytest.raises(ValidationError):
            CheckReport(check="lattice", verdict=Verdict.FAIL)

    def test_skip_needs_a_hypothesis(self):
        with pytest.raises(ValidationError):
            CheckReport(check="lattice", verdict=Verdict.SKIPPED)

    def test_text_rendering(self):
        report = failed("lattice", ["family()"], "no top", subject="V", probes=["(One,p)"])

        assert report.to_text() == (
            "lattice V: fail\n"
            "  reason: no top\n"
            "  witnesses: family()\n"
            "  probes: (One,p)\n"
        )

    def test_json_leaves_timing_out(self):
        report = passed("lattice", subject="X3")
        report.elapsed_ms = 12.5

        data = json.loads(report.to_json())
        assert "elapsed_ms" not in data
        assert data["verdict"] == "pass"
        assert json.loads(report.to_json(timing=True))["elapsed_ms"] == 12.5

    def test_renderings_are_deterministic(self):
        first = passed("lattice", subject="X3")
        second = passed("lattice", subject="X3")
        second.elapsed_ms = 99.0

        assert render_reports([first]) == render_reports([second])
        assert render_reports([first], as_json=True) == render_reports([second], as_json=True)


@pytest.mark.unit
@pytest.mark.toolkit
class TestBatches:
    @pytest.mark.parametrize(
        "verdicts, code",
        [
            ([], 0),
            (["pass", "pass"], 0),
            (["pass", "skipped"], 2),
            (["skipped", "fail", "pass"], 1),
        ],
    )
    def test_combined_exit_code(self, verdicts, code):
        makers = {
            "pass": lambda: passed("c"),
            "fail": lambda: failed("c", ["w"]),
            "skipped": lambda: skipped("c", "no initial object"),
        }
        assert combined_exit_code([makers[v]() for v in verdicts]) == code

    def test_summary_table(self):
        reports = [passed("lattice", subject="X3"), failed("lattice", ["family()"], "no top", subject="V")]

        frame = reports_frame(reports)
        assert list(frame.columns) == ["check", "subject", "verdict", "reason", "witnesses"]
        assert frame["verdict"].tolist() == ["pass", "fail"]

        text = render_reports(reports)
        assert text.startswith("lattice X3: pass\n")
        assert "family()" in text.splitlines()[-1]

    def test_json_lines(self):
        reports = [passed("lattice", subject="X3"), skipped("adjunctions", "no terminal object", subject="V")]
        lines = render_reports(reports, as_json=True).splitlines()

        assert [json.loads(line)["verdict"] for line in lines] == ["pass", "skipped"]
