"""
Relation derivation from differentiability requirements

An Ansatz fixes the known part of a presentation and leaves commutation
relations open: every template  lhs = Σ c_i w_i  carries one unknown
coefficient per candidate word. Constraints (well-definedness of a map,
vanishing of chosen elements, the Leibniz rule) are expanded with the
unknowns as extra indeterminates of the scalar field; the coefficient of each
normal word must vanish, which gives equations in the unknowns.

Solving is staged by the form degree of the templates. Inside a stage the
linear equations go to solve_linear, their solution is substituted into the
rest and the loop repeats until nothing linear is left. Leftover nonlinear
equations raise AnsatzError unless the caller allows a polynomial solve.
"""
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Poly, Symbol, solve

from src.errors import AnsatzError, ConfigurationError
from src.freealg import Element, Word, format_word
from src.report import VerificationReport
from src.scalar import LinearSystem, Scalar, solve_linear
from src.structure.maps import MapSpec, extend_map
from src.structure.presentation import DGAPresentation

Image = Any  # Element or TensorElement

NONLINEAR_MODES = ("error", "solve")


@dataclass
class Template:
    """
    One open relation  lhs = fixed + Σ unknown_i · candidate_i

    Attributes:
        lhs: Leading word of the relation
        candidates: Words allowed on the right; generated when None
        fixed: Known part of the right-hand side
        unknowns: One name per candidate, filled by Ansatz.expand
    """

    lhs: Word
    candidates: Optional[List[Word]] = None
    fixed: Element = field(default_factory=Element.zero)
    unknowns: List[str] = field(default_factory=list)

    def relation(self, values: Optional[Mapping[str, Scalar]] = None) -> Element:
        values = values or {}
        rhs = self.fixed
        for word, name in zip(self.candidates or [], self.unknowns):
            coeff = values.get(name)
            if coeff is None:
                coeff = Scalar.symbol(name)
            rhs = rhs + Element.word(*word, coeff=coeff)
        return Element.word(*self.lhs) - rhs

    def __str__(self) -> str:
        return str(self.relation())


class Ansatz:
    """
    Known presentation plus open templates

    Args:
        base: Alphabet, known relations and differential
        prefix: Prefix of the generated unknown names
        grading: Letter -> integer vector; candidate words must carry the
            grading of their template lhs (d-letters inherit from their base)
        max_length: Longest candidate word (the lhs length by default)
    """

    def __init__(
        self,
        base: DGAPresentation,
        prefix: str = "k",
        grading: Optional[Mapping[str, Sequence[int]]] = None,
        max_length: Optional[int] = None,
    ):
        self.base = base
        self.prefix = prefix
        self.grading = {k: tuple(v) for k, v in (grading or {}).items()}
        self.max_length = max_length
        self.templates: List[Template] = []
        self._expanded = False

    def add(
        self,
        *lhs: str,
        candidates: Optional[Iterable[Sequence[str]]] = None,
        fixed: Optional[Element] = None,
    ) -> Template:
        """
        Open a relation with leading word lhs

        Raises:
            ConfigurationError: lhs is already reducible by the base relations
                or opened twice
        """
        word = tuple(lhs)
        if not self.base.system.is_irreducible(word):
            raise ConfigurationError(f"{format_word(word)} is already rewritten by the known relations")
        if any(t.lhs == word for t in self.templates):
            raise ConfigurationError(f"{format_word(word)} opened twice")
        template = Template(
            word,
            [tuple(c) for c in candidates] if candidates is not None else None,
            fixed if fixed is not None else Element.zero(),
        )
        self.templates.append(template)
        self._expanded = False
        return template

    # Candidate words
    def _grade(self, word: Word) -> Tuple[int, ...]:
        total = [0] * max((len(v) for v in self.grading.values()), default=0)
        for x in word:
            base = x[2:-1] if x.startswith("d(") and x.endswith(")") else x
            for i, v in enumerate(self.grading.get(base, ())):
                total[i] += v
        return tuple(total)

    def candidate_words(self, lhs: Word) -> List[Word]:
        """
        Words below lhs of the same form degree and grading that are normal
        for the known relations and free of every template lhs
        """
        alphabet = self.base.alphabet
        key = alphabet.key(lhs)
        degree = alphabet.degree(lhs)
        grade = self._grade(lhs)
        blocked = [t.lhs for t in self.templates]
        letters = alphabet.names()
        longest = self.max_length or len(lhs)
        out = []
        for n in range(0, longest + 1):
            for word in itertools.product(letters, repeat=n):
                if alphabet.degree(word) != degree or not alphabet.key(word) < key:
                    continue
                if self.grading and self._grade(word) != grade:
                    continue
                if not self.base.system.is_irreducible(word):
                    continue
                if any(_contains(word, b) for b in blocked):
                    continue
                out.append(word)
        return sorted(out, key=alphabet.key)

    def expand(self) -> "Ansatz":
        """Fill candidates and unknown names; idempotent"""
        if self._expanded:
            return self
        counter = 0
        for t in self.templates:
            if t.candidates is None:
                t.candidates = self.candidate_words(t.lhs)
            t.unknowns = []
            for _ in t.candidates:
                counter += 1
                t.unknowns.append(f"{self.prefix}{counter}")
        self._expanded = True
        return self

    @property
    def unknowns(self) -> List[str]:
        self.expand()
        return [u for t in self.templates for u in t.unknowns]

    def degrees(self) -> List[int]:
        return sorted({self.base.alphabet.degree(t.lhs) for t in self.templates})

    def relations(self, values: Optional[Mapping[str, Scalar]] = None, max_degree: Optional[int] = None) -> List[Element]:
        self.expand()
        return [
            t.relation(values)
            for t in self.templates
            if max_degree is None or self.base.alphabet.degree(t.lhs) <= max_degree
        ]

    def presentation(
        self,
        values: Optional[Mapping[str, Scalar]] = None,
        max_degree: Optional[int] = None,
        name: Optional[str] = None,
    ) -> DGAPresentation:
        """The base presentation with the templates of degree <= max_degree added"""
        return DGAPresentation(
            name or f"{self.base.name} ansatz",
            self.base.alphabet,
            list(self.base.relations) + self.relations(values, max_degree),
            self.base.differential,
        )


def _contains(word: Word, part: Word) -> bool:
    n = len(part)
    return any(word[i:i + n] == part for i in range(len(word) - n + 1))


# ----------------------------------------------------------------------
# Constraints
# ----------------------------------------------------------------------
class Constraint:
    """A family of images that must vanish in the ansatz presentation"""

    label = "constraint"

    def images(self, p: DGAPresentation) -> Iterable[Tuple[str, Image, Callable[[Any], int]]]:
        """(subject, image, degree of a term key) triples"""
        raise NotImplementedError


class MapConstraint(Constraint):
    """
    Well-definedness of a map built on the ansatz: every relation of its
    source maps to zero. Covers differentiable coactions and morphisms.

    Args:
        build: Ansatz presentation -> MapSpec
        label: Report label
    """

    def __init__(self, build: Callable[[DGAPresentation], MapSpec], label: str = "well_defined"):
        self.build = build
        self.label = label

    def images(self, p: DGAPresentation):
        m = self.build(p)
        if m.tensor_valued:
            def degree(key):
                return sum(m.target.degrees(key))
        else:
            degree = m.target.degree
        for rel in m.source.system.relations():
            yield str(rel), extend_map(m, rel), degree


class VanishingConstraint(Constraint):
    """
    Explicit elements that must reduce to zero, e.g. the commutation of dD
    with D for a differentiable determinant inclusion

    Args:
        build: Ansatz presentation -> [(subject, element)]
        label: Report label
    """

    def __init__(self, build: Callable[[DGAPresentation], Iterable[Tuple[str, Element]]], label: str = "vanishing"):
        self.build = build
        self.label = label

    def images(self, p: DGAPresentation):
        for subject, e in self.build(p):
            yield subject, p.reduce(e), p.degree


class LeibnizConstraint(Constraint):
    """d of every relation lies in the ideal"""

    label = "leibniz"

    def images(self, p: DGAPresentation):
        for rel in p.relations:
            yield f"d({rel})", p.d(rel), p.degree


# ----------------------------------------------------------------------
# Equations
# ----------------------------------------------------------------------
def _terms(image: Image) -> Dict[Any, Scalar]:
    return dict(image.terms)


def collect_equations(
    constraints: Sequence[Constraint],
    p: DGAPresentation,
    max_degree: Optional[int],
) -> List[Tuple[str, Any]]:
    """
    Numerators of every coefficient, as sympy expressions in q and the unknowns

    Terms whose form degree exceeds max_degree are skipped; they are checked
    again once the higher templates are present.
    """
    equations = []
    for constraint in constraints:
        for subject, image, degree in constraint.images(p):
            for key, c in _terms(image).items():
                if max_degree is not None and degree(key) > max_degree:
                    continue
                numerator = Scalar.of(c).numerator.as_expr()
                if numerator != 0:
                    equations.append((f"{constraint.label} {subject} @ {_key_text(key)}", numerator))
    return equations


def _key_text(key) -> str:
    if key and isinstance(key[0], tuple):
        return " ⊗ ".join(format_word(w) for w in key)
    return format_word(key)


@dataclass
class StageOutcome:
    degree: int
    equations: int
    solved: List[str]
    certificate: Optional[str] = None
    nonlinear_solved: bool = False


def _substitute(expr, values: Mapping[str, Scalar]):
    mapping = {Symbol(name): v.as_expr() for name, v in values.items()}
    return Scalar.from_expr(expr.xreplace(mapping)).numerator.as_expr() if mapping else expr


def _solve_stage(
    equations: List[Tuple[str, Any]],
    unknowns: Sequence[str],
    values: Dict[str, Scalar],
    nonlinear: str,
    degree: int,
) -> StageOutcome:
    symbols = {name: Symbol(name) for name in unknowns}
    pending = [(label, _substitute(expr, values)) for label, expr in equations]
    solved: List[str] = []
    while True:
        pending = [(label, expr) for label, expr in pending if expr != 0]
        system = LinearSystem(unknowns=[])
        rest = []
        for label, expr in pending:
            present = [symbols[n] for n in unknowns if symbols[n] in expr.free_symbols]
            if not present:
                return StageOutcome(degree, len(equations), solved, f"{label}: 0 = {Scalar.from_expr(expr)}")
            poly = Poly(expr, *present)
            if poly.total_degree() > 1:
                rest.append((label, expr))
                continue
            row = {str(s): Scalar.from_expr(poly.coeff_monomial(s)) for s in present}
            system.add_equation(row, -Scalar.from_expr(poly.coeff_monomial(1)), label)
        if not system.rows:
            pending = rest
            break
        solution = solve_linear(system)
        if not solution.consistent:
            return StageOutcome(degree, len(equations), solved, solution.certificate)
        new = {}
        for name, value in solution.assignments.items():
            total = value
            for free, coeff in solution.dependencies.get(name, {}).items():
                total = total + coeff * Scalar.symbol(free)
            new[name] = total
        if not new:
            pending = rest
            break
        for name in list(values):
            values[name] = values[name].substitute(new) if set(values[name].free_symbols()) & set(new) else values[name]
        values.update(new)
        solved.extend(new)
        pending = [(label, _substitute(expr, new)) for label, expr in rest]

    if not pending:
        return StageOutcome(degree, len(equations), solved)
    if nonlinear != "solve":
        raise AnsatzError(
            f"degree {degree}: {len(pending)} equations stay nonlinear, e.g. {pending[0][0]}; "
            "split the constraints into stages"
        )
    present = sorted({str(s) for _, expr in pending for s in expr.free_symbols if str(s) in symbols})
    roots = solve([expr for _, expr in pending], [symbols[n] for n in present], dict=True)
    if len(roots) != 1:
        raise AnsatzError(f"degree {degree}: nonlinear equations have {len(roots)} solutions in {present}")
    new = {str(s): Scalar.from_expr(v) for s, v in roots[0].items()}
    for name in list(values):
        values[name] = values[name].substitute(new) if set(values[name].free_symbols()) & set(new) else values[name]
    values.update(new)
    solved.extend(new)
    return StageOutcome(degree, len(equations), solved, nonlinear_solved=True)


# ----------------------------------------------------------------------
# Driver
# ----------------------------------------------------------------------
@dataclass
class DerivationResult:
    """
    Outcome of derive_relations

    Attributes:
        presentation: Base presentation with the solved templates
        relations: The solved template relations
        values: Unknown -> solved value (may involve free unknowns)
        free: Unknowns left undetermined
        certificate: Inconsistency witness, when the constraints contradict
        stages: Per-degree solving summary
        report: Consistency, uniqueness and re-run constraint records
    """

    ansatz: Ansatz
    presentation: Optional[DGAPresentation]
    relations: List[Element]
    values: Dict[str, Scalar]
    free: List[str]
    certificate: Optional[str]
    stages: List[StageOutcome]
    report: VerificationReport

    @property
    def consistent(self) -> bool:
        return self.certificate is None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.free


def derive_relations(
    ansatz: Ansatz,
    constraints: Sequence[Constraint],
    nonlinear: str = "error",
    name: Optional[str] = None,
) -> DerivationResult:
    """
    Solve the ansatz against the constraints, degree by degree

    Args:
        ansatz: Known presentation and open templates
        constraints: Requirements whose images must vanish
        nonlinear: "error" raises on nonlinear leftovers, "solve" hands them
            to sympy and accepts a unique solution
        name: Display name of the solved presentation

    Returns:
        DerivationResult; free unknowns are listed, never set to zero

    Raises:
        AnsatzError: nonlinear equations remain (mode "error") or the
            polynomial solve is not unique
    """
    if nonlinear not in NONLINEAR_MODES:
        raise ConfigurationError(f"unknown nonlinear mode {nonlinear!r}")
    ansatz.expand()
    unknowns = ansatz.unknowns
    values: Dict[str, Scalar] = {}
    stages: List[StageOutcome] = []
    report = VerificationReport(title=f"derivation of {name or ansatz.base.name}")
    certificate = None

    for degree in ansatz.degrees() or [0]:
        p = ansatz.presentation(values, degree)
        equations = collect_equations(constraints, p, degree)
        outcome = _solve_stage(equations, unknowns, values, nonlinear, degree)
        stages.append(outcome)
        report.add("derive.consistent", f"degree {degree}", outcome.certificate is None, outcome.certificate)
        if outcome.certificate is not None:
            certificate = outcome.certificate
            break

    free = [u for u in unknowns if u not in values]
    report.add("derive.unique", ansatz.base.name, certificate is None and not free, ", ".join(free) or None)
    if certificate is not None:
        return DerivationResult(ansatz, None, [], values, free, certificate, stages, report)

    relations = [rel for rel in ansatz.relations(values) if not rel.is_zero()]
    presentation = ansatz.presentation(values, name=name or f"{ansatz.base.name} derived")
    # the solved presentation must satisfy every constraint in full
    for constraint in constraints:
        for subject, image, _ in constraint.images(presentation):
            report.add(f"derive.{constraint.label}", subject, image.is_zero(), image)
    return DerivationResult(ansatz, presentation, relations, values, free, None, stages, report)
