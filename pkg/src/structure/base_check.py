"""
Base check class and verification context management
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from src.config import settings
from src.report import VerificationReport


@dataclass
class VerificationContext:
    """Shared context across all checks of one verification run"""

    # Input
    subject: str
    degree_bound: int = field(default_factory=lambda: settings.degree_bound)
    verbose: bool = field(default_factory=lambda: settings.verbose)

    # Output
    report: VerificationReport = field(default_factory=VerificationReport)

    # Execution trace
    execution_trace: List[Dict[str, Any]] = field(default_factory=list)

    # Metadata
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.report.title:
            self.report.title = self.subject

    def add_trace(self, check_name: str, action: str, result: Any):
        """Add execution trace entry"""
        self.execution_trace.append({
            "timestamp": datetime.now().isoformat(),
            "check": check_name,
            "action": action,
            "result": result,
        })

    def note(self, source: str, action: str, result: Any):
        """Trace an entry and echo it when verbose"""
        self.add_trace(source, action, result)
        if self.verbose:
            print(f"[{source}] {action}: {result}")

    def get_trace_summary(self) -> str:
        """Get human-readable trace summary"""
        lines = ["\nExecution Trace:"]
        for entry in self.execution_trace:
            lines.append(
                f"  [{entry['timestamp']}] {entry['check']}: {entry['action']} -> {entry['result']}"
            )
        return "\n".join(lines)


class BaseCheck(ABC):
    """Base class for all axiom checks"""

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def execute(self, context: VerificationContext, *args, **kwargs) -> VerificationReport:
        """
        Run the check, appending records to context.report

        Args:
            context: Shared verification context

        Returns:
            The context's report
        """
        pass

    def log_action(self, context: VerificationContext, action: str, result: Any):
        """Log action to context trace"""
        context.note(self.name, action, result)

    def record(
        self,
        context: VerificationContext,
        check: str,
        subject: str,
        ok: bool,
        witness: Any = None,
    ) -> bool:
        """Append one record; failures are also traced"""
        context.report.add(check, subject, ok, witness)
        if not ok:
            self.log_action(context, f"{check} failed on {subject}", str(witness))
        return ok

    def run(self, subject: str, *args, context: Optional[VerificationContext] = None, **kwargs) -> VerificationReport:
        """Execute in a fresh context unless one is supplied"""
        context = context or VerificationContext(subject=subject)
        before = len(context.report.records)
        self.execute(context, *args, **kwargs)
        failures = sum(1 for r in context.report.records[before:] if not r.passed)
        self.log_action(context, "done", f"{len(context.report.records) - before} records, {failures} failing")
        return context.report
