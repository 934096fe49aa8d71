"""
Verification reports

A report is a flat list of check records. Failing checks carry the offending
reduced element as a witness; a report fails iff some record fails.
"""
import json
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

REPORT_SCHEMA = "hdga-report/1"


class CheckRecord(BaseModel):
    """One check applied to one subject (a relation, generator or pair)"""

    check: str
    subject: str
    status: str = "pass"
    witness: Optional[str] = None

    # Ordering key and the in-memory witness; neither is serialized
    index: int = Field(default=0, exclude=True)
    witness_element: Any = Field(default=None, exclude=True)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class VerificationReport(BaseModel):
    """Structured pass/fail record per check per subject"""

    title: str = ""
    records: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def add(
        self,
        check: str,
        subject: str,
        ok: bool,
        witness_element: Any = None,
        witness: Optional[str] = None,
    ) -> CheckRecord:
        """
        Append a record

        Args:
            check: Check name, e.g. "dga.leibniz"
            subject: What was tested (relation, generator, pair)
            ok: Outcome
            witness_element: Reduced offending element when failing
            witness: Canonical string; derived from witness_element if omitted

        Returns:
            The new record
        """
        if not ok and witness is None and witness_element is not None:
            witness = str(witness_element)
        record = CheckRecord(
            check=check,
            subject=subject,
            status="pass" if ok else "fail",
            witness=None if ok else witness,
            index=len(self.records),
            witness_element=None if ok else witness_element,
        )
        self.records.append(record)
        return record

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        """Append another report's records, optionally prefixing check names"""
        for record in other.records:
            self.records.append(
                record.model_copy(
                    update={
                        "check": f"{prefix}{record.check}",
                        "index": len(self.records),
                    }
                )
            )
        return self

    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def by_check(self, check: str) -> List[CheckRecord]:
        return [record for record in self.records if record.check == check]

    def check_passed(self, check: str) -> bool:
        """True if every record of the named check passed (and there is at least one)"""
        records = self.by_check(check)
        return bool(records) and all(record.passed for record in records)

    @classmethod
    def merge(cls, reports: Iterable["VerificationReport"], title: str = "") -> "VerificationReport":
        """
        Merge reports deterministically, ordered by check name then index

        Args:
            reports: Reports to merge (order of arrival does not matter)
            title: Title of the merged report

        Returns:
            New merged report
        """
        collected = [record for report in reports for record in report.records]
        collected.sort(key=lambda record: (record.check, record.index, record.subject))
        merged = cls(title=title)
        for position, record in enumerate(collected):
            merged.records.append(record.model_copy(update={"index": position}))
        return merged

    def specialize(self, assignment: Dict[str, Any]) -> "VerificationReport":
        """
        Re-evaluate failing witnesses under a scalar substitution

        A witness vanishing under the assignment turns its record into a pass.
        """
        result = VerificationReport(title=self.title)
        for record in self.records:
            element = record.witness_element
            if record.passed or element is None or not hasattr(element, "substitute"):
                result.records.append(record.model_copy())
                continue
            specialized = element.substitute(assignment)
            ok = specialized.is_zero()
            result.records.append(
                record.model_copy(
                    update={
                        "status": "pass" if ok else "fail",
                        "witness": None if ok else str(specialized),
                        "witness_element": None if ok else specialized,
                    }
                )
            )
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "title": self.title,
            "passed": self.passed,
            "records": [record.model_dump(exclude_none=True) for record in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def json_schema(cls) -> Dict[str, Any]:
        return cls.model_json_schema()

    def summary(self) -> str:
        """Human-readable summary, failing records with witnesses"""
        failures = self.failures()
        lines = [
            f"{self.title or 'report'}: {len(self.records) - len(failures)}/{len(self.records)} checks passed"
        ]
        for record in failures:
            lines.append(f"  FAIL {record.check} [{record.subject}]: {record.witness}")
        return "\n".join(lines)
