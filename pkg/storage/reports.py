"""
Verification reports: one record per check, written as a single JSON
document or rendered as text.
"""

import hashlib
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "godeaux-report/1"


class CheckRecord(BaseModel):
    name: str
    example: str
    anchor: str
    inputs_digest: str = ""
    verdict: bool
    witness: dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None
    wall_ms: float = 0.0


class VerificationReport(BaseModel):
    schema_: str = Field(default=REPORT_SCHEMA, alias="schema")
    config: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckRecord] = Field(default_factory=list)

    model_config = {"populate_by_name": True}

    @property
    def passed(self) -> bool:
        return all(check.verdict for check in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [check for check in self.checks if not check.verdict]

    def document(self, include_timings: bool = True) -> dict:
        data = self.model_dump(by_alias=True)
        data["passed"] = self.passed
        if not include_timings:
            for check in data["checks"]:
                check.pop("wall_ms", None)
        return data

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.document(include_timings), indent=2, sort_keys=True, default=str) + "\n"

    def render_text(self) -> str:
        lines = []
        for check in self.checks:
            mark = "PASS" if check.verdict else "FAIL"
            lines.append(f"[{mark}] {check.example}:{check.name} ({check.wall_ms:.0f} ms) - {check.anchor}")
            if check.error:
                lines.append(f"       {check.error}")
        total = len(self.checks)
        lines.append(f"{total - len(self.failures)}/{total} checks passed")
        return "\n".join(lines) + "\n"


def digest(*parts: Any) -> str:
    """Short digest of the inputs a check consumed."""
    h = hashlib.sha256()
    for part in parts:
        h.update(json.dumps(part, sort_keys=True, default=str).encode())
    return h.hexdigest()[:16]


class ReportStore:
    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def write(self, report: VerificationReport, path: Optional[Union[str, Path]] = None) -> Path:
        if path is None:
            stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
            path = self.directory / f"report-{stamp}.json"
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.to_json())
        logger.info(f"Report written to {path}")
        return path

    def read(self, path: Union[str, Path]) -> VerificationReport:
        data = json.loads(Path(path).read_text())
        data.pop("passed", None)
        return VerificationReport.model_validate(data)


class CheckOutcome(BaseModel):
    verdict: bool
    witness: dict[str, Any] = Field(default_factory=dict)
