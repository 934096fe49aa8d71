"""
Exception hierarchy for the verification engine

Verification failures are never raised; they are recorded in reports.
Everything here signals a modelling, input or usage problem.
"""
from typing import Any, List, Optional


class EngineError(Exception):
    """Base class for all engine errors"""


class ScalarDomainError(EngineError):
    """Zero denominator or otherwise undefined scalar"""


class PoleError(EngineError):
    """Substitution sends a denominator to zero"""

    def __init__(self, factor: str, assignment: Optional[dict] = None):
        self.factor = factor
        self.assignment = assignment or {}
        super().__init__(f"pole: factor {factor} vanishes under {self.assignment}")


class TrivialRelationError(EngineError):
    """A relation reduced to zero before orientation"""


class OrientationError(EngineError):
    """A rewrite rule whose right-hand side is not strictly smaller"""


class DuplicateRuleError(EngineError):
    """Two rewrite rules share a left-hand side"""


class RewriteBudgetError(EngineError):
    """normal_form exceeded its step budget"""

    def __init__(self, budget: int, word: Any = None):
        self.budget = budget
        self.word = word
        super().__init__(f"rewrite budget of {budget} steps exceeded (last word {word})")


class RankMismatchError(EngineError):
    """Tensor elements of different rank were combined"""


class MissingAssignmentError(EngineError):
    """A map is undefined on a generator it was asked to extend over"""

    def __init__(self, generator: str, map_name: str = "map"):
        self.generator = generator
        self.map_name = map_name
        super().__init__(f"{map_name} has no assignment for generator {generator}")


class ConfigurationError(EngineError):
    """Structure data needed for a check is absent (e.g. no antipode)"""


class PairingTableError(EngineError):
    """A pairing table has no value on a degree-0 generator pair"""

    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"pairing table has no value on ({left}, {right})")


class NameCollisionError(EngineError):
    """Two factors of a construction declare the same generator name"""

    def __init__(self, names: List[str]):
        self.names = sorted(names)
        super().__init__(f"generator names collide, rename required: {', '.join(self.names)}")


class ConstructionRefusedError(EngineError):
    """A construction precondition failed; carries the failing report"""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class AnsatzError(EngineError):
    """An unknown coefficient multiplied another unknown"""


class CatalogLookupError(EngineError):
    """Unknown catalog entry"""

    def __init__(self, name: str, available: List[str]):
        self.name = name
        self.available = sorted(available)
        super().__init__(
            f"no catalog entry named {name!r}; available: {', '.join(self.available)}"
        )


class DSLError(EngineError):
    """Base class for located DSL diagnostics"""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class DSLSyntaxError(DSLError):
    """Malformed DSL text"""


class DSLSemanticError(DSLError):
    """Well-formed DSL text that names unknown symbols or mismatched degrees"""
