"""
Loader for .hdga presentation documents
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.config import settings
from src.derive import (
    Ansatz,
    Constraint,
    DerivationResult,
    LeibnizConstraint,
    MapConstraint,
    VanishingConstraint,
    derive_relations,
)
from src.dsl_parser import (
    AnsatzBlock,
    ExpressionEvaluator,
    MapBlock,
    PairingBlock,
    PresentationBlock,
    PresentationDocument,
    parse_document,
)
from src.errors import ConfigurationError, DSLSemanticError
from src.freealg import Alphabet, Element, critical_pairs
from src.pairing import PairingSpec, verify_pairing_axioms
from src.report import VerificationReport
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension, verify_coaction_differentiable
from src.structure.dga_check import verify_dga
from src.structure.hopf_check import verify_hopf
from src.structure.maps import MapSpec
from src.structure.morphism import verify_morphism
from src.structure.presentation import DGAPresentation, HopfDGA

DOCUMENT_SUFFIX = ".hdga"


@dataclass
class DocumentMap:
    """A map block evaluated to a generator table"""

    kind: str
    name: str
    source: str
    target: List[str]
    table: Dict[str, Any]


@dataclass
class LoadedDocument:
    """A parsed document with its presentations, maps and pairings built"""

    document: PresentationDocument
    presentations: Dict[str, DGAPresentation] = field(default_factory=dict)
    maps: Dict[str, DocumentMap] = field(default_factory=dict)
    pairings: Dict[str, PairingSpec] = field(default_factory=dict)
    source: Optional[Path] = None
    degree_bound: int = field(default_factory=lambda: settings.degree_bound)

    @property
    def title(self) -> str:
        return str(self.source) if self.source is not None else "document"

    def presentation(self, name: str) -> DGAPresentation:
        if name not in self.presentations:
            raise ConfigurationError(
                f"no presentation named {name!r}; declared: {', '.join(self.presentations) or 'none'}"
            )
        return self.presentations[name]

    def hopf(self, name: str) -> HopfDGA:
        p = self.presentation(name)
        if not isinstance(p, HopfDGA):
            raise ConfigurationError(f"{name} has no coproduct, counit or antipode table")
        return p

    def map(self, name: str) -> DocumentMap:
        if name not in self.maps:
            raise ConfigurationError(f"no map named {name!r}")
        return self.maps[name]

    # ------------------------------------------------------------------
    # Checks
    # ------------------------------------------------------------------
    def run_check(self, check: str, subject: str, context: VerificationContext) -> VerificationReport:
        """Run one named check on a subject, appending records to context.report"""
        if check == "dga":
            return verify_dga(self.presentation(subject), context=context)
        if check == "hopf":
            return verify_hopf(self.hopf(subject), context=context)
        if check == "confluence":
            return context.report.extend(critical_pairs(self.presentation(subject).system, context.degree_bound))
        if check == "coaction":
            m = self.map(subject)
            if m.kind != "coaction":
                raise ConfigurationError(f"map {subject} is not a coaction")
            verify_coaction_differentiable(
                self.presentation(m.source), m.table, self.presentation(m.target[-1]), name=m.name, context=context
            )
            return context.report
        if check == "pairing":
            if subject not in self.pairings:
                raise ConfigurationError(f"no pairing named {subject!r}")
            return verify_pairing_axioms(self.pairings[subject], context.degree_bound, context=context)
        if check == "morphism":
            m = self.map(subject)
            return verify_morphism(self.presentation(m.source), self.presentation(m.target[0]), self.map_spec(subject), context=context)
        if check == "catalog":
            from src.catalog import catalog_run

            return context.report.extend(catalog_run(subject, degree_bound=context.degree_bound))
        raise ConfigurationError(f"unknown check {check!r}")

    def check(
        self,
        details: Optional[VerificationReport] = None,
        assignment: Optional[Dict[str, Any]] = None,
    ) -> VerificationReport:
        """
        Evaluate every expectation of the document

        Each expectation becomes one "expect.<check>" record that passes when
        the check's outcome matches the expected pass/fail; a predicted
        failure that fails is a pass.

        Args:
            details: Receives the raw records of every check
            assignment: Scalar values applied to failing witnesses before judging

        Returns:
            Report of expectation verdicts
        """
        report = VerificationReport(title=self.title)
        for expectation in self.document.expectations:
            context = VerificationContext(
                subject=f"{expectation.check} {expectation.subject}", degree_bound=self.degree_bound
            )
            self.run_check(expectation.check, expectation.subject, context)
            outcome = context.report.specialize(assignment) if assignment else context.report
            observed = bool(outcome.records) and outcome.passed
            failing = outcome.failures()
            witness = None
            if observed != expectation.expected:
                witness = failing[0].witness if failing else f"no failing record (expected {'pass' if expectation.expected else 'fail'})"
            report.add(f"expect.{expectation.check}", expectation.subject, observed == expectation.expected, witness=witness)
            if details is not None:
                details.extend(outcome)
        return report

    # ------------------------------------------------------------------
    # Maps and recipes
    # ------------------------------------------------------------------
    def map_spec(self, name: str) -> MapSpec:
        """Algebra map block as a MapSpec; d-letters follow d of the image"""
        m = self.map(name)
        if m.kind != "algebra":
            raise ConfigurationError(f"map {name} is not an algebra map")
        src, tgt = self.presentation(m.source), self.presentation(m.target[0])
        spec = MapSpec("algebra", src, tgt, dict(m.table), name=m.name)

        def forced(letter: str) -> Optional[Element]:
            if letter.startswith("d(") and letter.endswith(")") and letter[2:-1] in src.alphabet:
                return tgt.d(spec.extend_word((letter[2:-1],)))
            return None

        spec.default = forced
        return spec

    def build(self, verbose: Optional[bool] = None) -> DGAPresentation:
        """
        Run the document's recipe

        Raises:
            ConfigurationError: no recipe, or an unknown construction
        """
        recipe = self.document.recipe
        if recipe is None:
            raise ConfigurationError(f"{self.title} declares no recipe")
        args = recipe.arguments
        if recipe.construction == "catalog":
            from src.catalog import catalog_get

            if len(args) != 1:
                raise ConfigurationError("recipe catalog takes one entry name")
            return catalog_get(args[0]).recipe(VerificationContext(subject=args[0], degree_bound=self.degree_bound))
        if recipe.construction == "super_tensor":
            from src.constructions import super_tensor_dga

            if len(args) != 2:
                raise ConfigurationError("recipe super_tensor takes two presentations")
            return super_tensor_dga(self.hopf(args[0]), self.hopf(args[1]), verbose=verbose)
        if recipe.construction == "generalized_double":
            from src.constructions import generalized_double

            if len(args) != 3:
                raise ConfigurationError("recipe generalized_double takes A, H and a pairing")
            if args[2] not in self.pairings:
                raise ConfigurationError(f"no pairing named {args[2]!r}")
            return generalized_double(self.hopf(args[0]), self.hopf(args[1]), self.pairings[args[2]], verbose=verbose)
        raise ConfigurationError(f"unknown construction {recipe.construction!r}")

    # ------------------------------------------------------------------
    # Derivations
    # ------------------------------------------------------------------
    def ansatz(self, name: Optional[str] = None) -> Tuple[Ansatz, List[Constraint], str]:
        """Build the named (or only) ansatz block with its constraints"""
        blocks = self.document.ansatze
        if not blocks:
            raise ConfigurationError(f"{self.title} declares no ansatz")
        block = blocks[0] if name is None else next((b for b in blocks if b.name == name), None)
        if block is None:
            raise ConfigurationError(f"no ansatz named {name!r}")
        base = self.presentation(block.base)
        ansatz = Ansatz(base, block.prefix, block.grading or None)
        evaluator = ExpressionEvaluator(base.alphabet, self.document.scalars)
        for node in block.opened:
            word = evaluator.element(node)
            if len(word.terms) != 1 or not list(word.terms.values())[0].is_one():
                raise DSLSemanticError("open takes a single word", node.line, node.col)
            ansatz.add(*next(iter(word.terms)))
        return ansatz, [self._constraint(block, c) for c in block.constraints], block.nonlinear

    def _constraint(self, block: AnsatzBlock, c) -> Constraint:
        if c.kind == "leibniz":
            return LeibnizConstraint()
        if c.kind == "coaction":
            m = self.map(c.argument)
            b = self.presentation(m.source)
            return MapConstraint(lambda p, m=m, b=b: differentiable_extension(b, p, m.table, name=m.name), label=f"coaction {m.name}")
        base = self.presentation(block.base)
        value = ExpressionEvaluator(base.alphabet, self.document.scalars).element(c.value)
        return VanishingConstraint(lambda p, value=value: [(str(value), value)])

    def derive(self, name: Optional[str] = None) -> DerivationResult:
        ansatz, constraints, nonlinear = self.ansatz(name)
        return derive_relations(ansatz, constraints, nonlinear, name=name)


class DocumentLoader:
    """
    Load .hdga documents and build what they declare

    Args:
        catalog_dir: Directory of the shipped documents
        budget: Rewrite-step budget of every built presentation
        degree_bound: Bound used by the checks the documents request
    """

    def __init__(
        self,
        catalog_dir: Optional[Path] = None,
        budget: Optional[int] = None,
        degree_bound: Optional[int] = None,
    ):
        self.catalog_dir = catalog_dir or settings.catalog_dir
        self.budget = budget
        self.degree_bound = degree_bound or settings.degree_bound

    def load_text(self, text: str, source: Optional[Path] = None) -> LoadedDocument:
        """Parse and build a document"""
        document = parse_document(text)
        loaded = LoadedDocument(document, source=source, degree_bound=self.degree_bound)
        for block in document.presentations:
            loaded.presentations[block.name] = self.build_presentation(block, document.scalars)
        for block in document.maps:
            loaded.maps[block.name] = self.build_map(block, loaded)
        for block in document.pairings:
            loaded.pairings[block.name] = self.build_pairing(block, loaded)
        return loaded

    def load_file(self, file_path: Path) -> LoadedDocument:
        """Load a document from disk"""
        file_path = Path(file_path)
        with open(file_path, "r", encoding="utf-8") as f:
            return self.load_text(f.read(), source=file_path)

    def load_catalog(self) -> Dict[str, LoadedDocument]:
        """Load every shipped document, keyed by file stem"""
        documents = {}
        for path in sorted(Path(self.catalog_dir).glob(f"*{DOCUMENT_SUFFIX}")):
            documents[path.stem] = self.load_file(path)
        return documents

    # Builders
    def build_presentation(self, block: PresentationBlock, scalars: List[str]) -> DGAPresentation:
        alphabet = Alphabet()
        for g in block.generators:
            if g.name.startswith("d(") and g.precedence is None and g.weight == 1:
                alphabet.add_differential(g.name[2:-1])
            else:
                alphabet.add(g.name, g.degree, g.precedence, g.weight)
        evaluator = ExpressionEvaluator(alphabet, scalars)

        relations = []
        for rel in block.relations:
            value = evaluator.element(rel.lhs) - evaluator.element(rel.rhs)
            degrees = {alphabet.degree(w) for w in value.terms}
            if len(degrees) > 1:
                raise DSLSemanticError(
                    f"relation mixes form degrees {sorted(degrees)}", rel.line, rel.lhs.col
                )
            relations.append(value)
        differential = {a.target: evaluator.element(a.value) for a in block.differential}
        for target, value in differential.items():
            expected = alphabet[target].degree + 1
            if any(alphabet.degree(w) != expected for w in value.terms):
                line = next(a.line for a in block.differential if a.target == target)
                raise DSLSemanticError(f"d {target} must have degree {expected}", line, 1)

        kwargs = dict(maximal_prolongation=block.maximal, budget=self.budget)
        if not block.is_hopf:
            return DGAPresentation(block.name, alphabet, relations, differential, **kwargs)
        coproduct = {a.target: evaluator.tensor(a.value) for a in block.coproduct}
        counit = {a.target: evaluator.scalar(a.value) for a in block.counit}
        antipode = {a.target: evaluator.element(a.value) for a in block.antipode} or None
        return HopfDGA(
            block.name, alphabet, relations, differential,
            coproduct=coproduct, counit=counit, antipode=antipode, **kwargs,
        )

    def _block_alphabet(self, names: List[str], loaded: LoadedDocument) -> Alphabet:
        """Union of the generators of the named presentations (or ansatz bases)"""
        merged = Alphabet()
        for name in names:
            if name not in loaded.presentations:
                ansatz = next((a for a in loaded.document.ansatze if a.name == name), None)
                name = ansatz.base
            for g in loaded.presentations[name].alphabet:
                if g.name not in merged:
                    merged.add(g.name, g.degree, g.precedence, g.weight)
        return merged

    def build_map(self, block: MapBlock, loaded: LoadedDocument) -> DocumentMap:
        alphabet = self._block_alphabet([block.source] + block.target, loaded)
        evaluator = ExpressionEvaluator(alphabet, loaded.document.scalars)
        if block.kind == "coaction":
            table = {a.target: evaluator.tensor(a.value) for a in block.entries}
            source = self._block_alphabet([block.source], loaded)
            for name, value in table.items():
                if value.rank != 2:
                    entry = next(a for a in block.entries if a.target == name)
                    raise DSLSemanticError(f"coaction values are rank-2 tensors, got rank {value.rank}", entry.line, 1)
            missing = [g.name for g in source if g.degree == 0 and g.name not in table]
            if missing:
                raise DSLSemanticError(f"coaction {block.name} misses {', '.join(missing)}", block.line, 1)
        else:
            table = {a.target: evaluator.element(a.value) for a in block.entries}
        return DocumentMap(block.kind, block.name, block.source, list(block.target), table)

    def build_pairing(self, block: PairingBlock, loaded: LoadedDocument) -> PairingSpec:
        evaluator = ExpressionEvaluator(Alphabet(), loaded.document.scalars)
        table = {}
        for entry in block.entries:
            left, right = (part.strip() for part in entry.target.split(","))
            table[(left, right)] = evaluator.scalar(entry.value)
        try:
            return PairingSpec(
                loaded.hopf(block.left), loaded.hopf(block.right), table, block.convention, name=block.name
            )
        except ConfigurationError as exc:
            raise DSLSemanticError(str(exc), block.line, 1) from exc

