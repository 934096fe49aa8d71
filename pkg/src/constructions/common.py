"""
Shared assembly for cross-product constructions

Flow of every builder:
1. Refuse colliding generator names
2. Check the structure-map preconditions on generators
3. Merge alphabets (every left letter ranked below every right letter)
4. Emit cross relations  η·τ = value  for η in the right factor, τ in the left
5. Assemble the HopfDGA (factor tables, overrides for the new coproducts)
6. Certify: verify_dga, verify_hopf and critical pairs
7. Attach canonical (co)actions as artefacts
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from src.config import settings
from src.errors import ConstructionRefusedError, NameCollisionError
from src.freealg import DEGREE_RANK, Alphabet, Element, critical_pairs
from src.report import VerificationReport
from src.structure.base_check import VerificationContext
from src.structure.dga_check import verify_dga
from src.structure.hopf_check import verify_hopf
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement

# Critical-pair word length used when certifying a build
CERTIFY_BOUND = 3


def merge_alphabets(left: Alphabet, right: Alphabet) -> Alphabet:
    """
    Disjoint union ranking every right letter above every left letter,
    whatever their form degrees; the order inside each factor is kept

    Every cross relation then rewrites a right-left word into left-right
    order, including pairs such as d(a)·h and h·d(a).

    Raises:
        NameCollisionError: the factors share a generator name
    """
    clash = set(left.names()) & set(right.names())
    if clash:
        raise NameCollisionError(list(clash))
    merged = Alphabet()
    top = max((g.degree for g in list(left) + list(right)), default=0)
    for offset, source in ((0, left), ((top + 1) * DEGREE_RANK, right)):
        for degree in sorted({g.degree for g in source}):
            position = 0
            for g in source:
                if g.degree != degree:
                    continue
                position += 1
                merged.add(g.name, degree, offset + degree * DEGREE_RANK + position, g.weight)
    return merged


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def certify(
    h: HopfDGA,
    degree_bound: int = CERTIFY_BOUND,
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """
    DGA axioms, Hopf axioms and confluence of the oriented relations

    The critical-pair bound grows to 2l - 1 for the longest left-hand side
    l, so every overlap of two rules is resolved.
    """
    context = context or VerificationContext(subject=f"certificate of {h.name}")
    verify_dga(h, context=context)
    verify_hopf(h, context=context)
    longest = max((len(rule.lhs) for rule in h.system.rules), default=0)
    context.report.extend(critical_pairs(h.system, max(degree_bound, 2 * longest - 1)))
    return context.report


class CrossProductBuilder(ABC):
    """
    Base class for the cross-product builders

    Args:
        left: Factor whose words stand on the left in normal order
        right: Factor whose words stand on the right
        name: Display name of the result
        check: Run the precondition checks and certify the result
        degree_bound: Critical-pair bound used by the certificate
        verbose: Print the build steps
    """

    kind = "cross product"

    def __init__(
        self,
        left: HopfDGA,
        right: HopfDGA,
        name: Optional[str] = None,
        check: bool = True,
        degree_bound: int = CERTIFY_BOUND,
        verbose: Optional[bool] = None,
    ):
        self.left = left
        self.right = right
        self.name = name or f"{left.name} {self.kind} {right.name}"
        self.check = check
        self.degree_bound = degree_bound
        self.verbose = settings.verbose if verbose is None else verbose
        self.context = VerificationContext(subject=f"preconditions of {self.name}", verbose=False)

    # Hooks
    @abstractmethod
    def cross_value(self, eta: str, tau: str) -> Element:
        """η·τ moved into normal order (left-factor words first), unreduced"""

    def preconditions(self, context: VerificationContext):
        """Record precondition checks in context.report"""

    def coproduct_overrides(self) -> Dict[str, TensorElement]:
        return {}

    def antipode_overrides(self, h: HopfDGA) -> Dict[str, Element]:
        """Antipode values to set after assembly (may use h.mul)"""
        return {}

    def emit_artefacts(self, h: HopfDGA):
        """Attach canonical (co)actions to h.artefacts"""

    # Pipeline
    def say(self, message: str):
        if self.verbose:
            print(message)

    def record(self, check: str, subject: str, ok: bool, witness: Any = None):
        self.context.report.add(check, subject, ok, witness)
        if not ok:
            self.context.add_trace(self.kind, f"{check} failed on {subject}", str(witness))

    def cross_relations(self) -> List[Element]:
        relations = []
        for eta in self.right.alphabet.names():
            for tau in self.left.alphabet.names():
                rel = Element.word(eta, tau) - self.cross_value(eta, tau)
                if not rel.is_zero():
                    relations.append(rel)
        return relations

    def build(self) -> HopfDGA:
        """
        Run the construction

        Returns:
            The combined HopfDGA, with h.artefacts["certificate"] when checked

        Raises:
            NameCollisionError: the factors share a generator name
            ConstructionRefusedError: a precondition or the certificate failed
        """
        if self.verbose:
            print(f"\n{'=' * 60}")
            print(f"{self.kind.upper()}: {self.name}")
            print(f"{'=' * 60}")
        alphabet = merge_alphabets(self.left.alphabet, self.right.alphabet)

        if self.check:
            self.say("Step: preconditions")
            self.preconditions(self.context)
            report = self.context.report
            self.say(f"  {len(report.records)} records, {len(report.failures())} failing")
            if not report.passed:
                raise ConstructionRefusedError(f"{self.name}: preconditions failed", report)

        self.say("Step: cross relations")
        cross = self.cross_relations()
        self.say(f"  {len(cross)} cross relations")
        relations = self.left.system.relations() + self.right.system.relations() + cross

        coproduct = {**self.left.coproduct_table, **self.right.coproduct_table}
        coproduct.update(self.coproduct_overrides())
        counit = {**self.left.counit_table, **self.right.counit_table}
        antipode = None
        if self.left.has_antipode and self.right.has_antipode:
            antipode = {**self.left.antipode_table, **self.right.antipode_table}
        h = HopfDGA(
            self.name,
            alphabet,
            relations,
            {**self.left.differential, **self.right.differential},
            coproduct=coproduct,
            counit=counit,
            antipode=antipode,
            maximal_prolongation=self.left.maximal_prolongation and self.right.maximal_prolongation,
        )
        overrides = self.antipode_overrides(h)
        if overrides:
            h.antipode_table = {**(h.antipode_table or {}), **overrides}
            h._antipode_cache.clear()
        self.say(f"  {len(h.system)} rewrite rules")

        h.artefacts["preconditions"] = self.context.report
        self.emit_artefacts(h)
        if self.check:
            self.say("Step: certificate")
            certificate = certify(h, self.degree_bound)
            h.artefacts["certificate"] = certificate
            self.say(f"  {certificate.summary()}")
            if not certificate.passed:
                raise ConstructionRefusedError(f"{self.name}: result failed certification", certificate)
        return h

