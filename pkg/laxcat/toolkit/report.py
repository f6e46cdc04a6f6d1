"""
Check reports and their canonical renderings.

Text and JSON renderings leave ``elapsed_ms`` out unless timing is
requested, so two runs of the same check produce identical bytes.
"""

import json
from typing import List, Sequence

import pandas as pd
from pydantic import BaseModel, Field, model_validator

from laxcat.core.types import Verdict

# ============================================================================
# REPORT MODEL
# ============================================================================


class CheckReport(BaseModel):
    """
    Outcome of one property check.

    Attributes:
        check: Check name, e.g. "lattice"
        subject: What was checked (file stem, morphism name, ...)
        verdict: pass, fail or skipped
        reason: Unmet hypothesis (skipped) or failure summary (fail)
        witnesses: Objects, morphisms or families exhibiting a failure
        probes: Names of the probe objects the verdict is relative to
        notes: Additional findings, one line each
        elapsed_ms: Wall time of the check
    """

    check: str
    subject: str = ""
    verdict: Verdict
    reason: str = ""
    witnesses: List[str] = Field(default_factory=list)
    probes: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0

    @model_validator(mode="after")
    def _verdict_is_explained(self) -> "CheckReport":
        if self.verdict == Verdict.FAIL and not self.witnesses:
            raise ValueError(f"{self.check}: a failing report needs a witness")
        if self.verdict == Verdict.SKIPPED and not self.reason:
            raise ValueError(f"{self.check}: a skipped report needs the unmet hypothesis")
        return self

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_text(self, timing: bool = False) -> str:
        head = f"{self.check} {self.subject}".rstrip() + f": {self.verdict.value}"
        lines = [head]
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        if self.witnesses:
            lines.append("  witnesses: " + " ".join(self.witnesses))
        if self.probes:
            lines.append("  probes: " + " ".join(self.probes))
        lines.extend(f"  note: {n}" for n in self.notes)
        if timing:
            lines.append(f"  elapsed_ms: {self.elapsed_ms:.1f}")
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = False) -> str:
        exclude = None if timing else {"elapsed_ms"}
        return json.dumps(self.model_dump(mode="json", exclude=exclude), sort_keys=True)


def passed(check: str, subject: str = "", **fields) -> CheckReport:
    return CheckReport(check=check, subject=subject, verdict=Verdict.PASS, **fields)


def failed(check: str, witnesses: Sequence[str], reason: str = "", subject: str = "", **fields) -> CheckReport:
    return CheckReport(
        check=check,
        subject=subject,
        verdict=Verdict.FAIL,
        witnesses=list(witnesses),
        reason=reason,
        **fields,
    )


def skipped(check: str, reason: str, subject: str = "", **fields) -> CheckReport:
    return CheckReport(check=check, subject=subject, verdict=Verdict.SKIPPED, reason=reason, **fields)


# ============================================================================
# BATCHES
# ============================================================================


def combined_exit_code(reports: Sequence[CheckReport]) -> int:
    """1 if anything failed, else 2 if anything was skipped, else 0."""
    verdicts = {r.verdict for r in reports}
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL.exit_code
    if Verdict.SKIPPED in verdicts:
        return Verdict.SKIPPED.exit_code
    return Verdict.PASS.exit_code


def reports_frame(reports: Sequence[CheckReport], timing: bool = False) -> pd.DataFrame:
    """One row per report, in input order."""
    columns = ["check", "subject", "verdict", "reason", "witnesses"]
    rows = [
        {
            "check": r.check,
            "subject": r.subject,
            "verdict": r.verdict.value,
            "reason": r.reason,
            "witnesses": " ".join(r.witnesses),
            **({"elapsed_ms": round(r.elapsed_ms, 1)} if timing else {}),
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=columns + (["elapsed_ms"] if timing else []))


def render_reports(reports: Sequence[CheckReport], as_json: bool = False, timing: bool = False) -> str:
    """Render one or more reports; several plain-text reports end with a summary table."""
    if as_json:
        return "".join(r.to_json(timing) + "\n" for r in reports)
    text = "".join(r.to_text(timing) for r in reports)
    if len(reports) > 1:
        text += "\n" + reports_frame(reports, timing).to_string(index=False) + "\n"
    return text
