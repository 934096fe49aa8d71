"""
Registry of the built-in catalog entries

An entry bundles a recipe with the outcome expected of each named check. The
recipe builds its presentations and appends check records to the context it
is handed; catalog_run then compares the records against the expectations.
A predicted failure that fails is a pass of the entry.
"""
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.config import settings
from src.document_loader import DocumentLoader, LoadedDocument
from src.dsl_parser import evaluate_expression
from src.errors import CatalogLookupError, ConfigurationError, ConstructionRefusedError, EngineError
from src.freealg import Element, critical_pairs
from src.report import CheckRecord, VerificationReport
from src.rmatrix import RMatrix, q_hecke_check, yang_baxter_check
from src.scalar import Scalar
from src.structure.base_check import VerificationContext
from src.structure.dga_check import verify_dga
from src.structure.hopf_check import verify_hopf
from src.structure.actions import RightAction
from src.structure.presentation import DGAPresentation, HopfDGA

Recipe = Callable[[VerificationContext], DGAPresentation]

@dataclass(frozen=True)
class CatalogEntry:
    """
    One worked example

    Attributes:
        name: Lookup key
        description: One-line summary
        source: Where the example comes from
        expectations: (check, expected pass) pairs; a check name covers every
            record whose name equals it or starts with it followed by "."
        recipe: Builds the example into a context, returns the main presentation
        notes: Provenance remarks, corrected misprints
    """

    name: str
    description: str
    source: str
    expectations: Tuple[Tuple[str, bool], ...]
    recipe: Recipe
    notes: Tuple[str, ...] = ()

    def expected(self, check: str) -> Optional[bool]:
        for name, outcome in self.expectations:
            if name == check:
                return outcome
        return None


_REGISTRY: Dict[str, CatalogEntry] = {}


def entry(
    name: str,
    description: str,
    source: str,
    expect: Mapping[str, bool],
    notes: Sequence[str] = (),
):
    """Register the decorated recipe under name"""

    def decorator(recipe: Recipe) -> Recipe:
        if name in _REGISTRY:
            raise ConfigurationError(f"catalog entry {name} registered twice")
        _REGISTRY[name] = CatalogEntry(name, description, source, tuple(expect.items()), recipe, tuple(notes))
        return recipe

    return decorator


def catalog_names() -> List[str]:
    return sorted(_REGISTRY)


def catalog_get(name: str) -> CatalogEntry:
    """
    Look up an entry

    Raises:
        CatalogLookupError: unknown name; lists the available ones
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        raise CatalogLookupError(name, list(_REGISTRY)) from None


def records_of(report: VerificationReport, check: str) -> List[CheckRecord]:
    return [r for r in report.records if r.check == check or r.check.startswith(f"{check}.")]


def catalog_run(
    name: str,
    details: Optional[VerificationReport] = None,
    degree_bound: Optional[int] = None,
) -> VerificationReport:
    """
    Run an entry and judge its expectations

    Args:
        name: Entry name
        details: Receives every raw record the recipe produced
        degree_bound: Bound handed to the recipe's checks

    Returns:
        One "expect.<check>" record per expectation

    Raises:
        CatalogLookupError: unknown name
    """
    item = catalog_get(name)
    context = VerificationContext(subject=name, degree_bound=degree_bound or settings.degree_bound)
    verdicts = VerificationReport(title=f"catalog {name}")
    context.note("catalog", "running recipe", name)
    try:
        item.recipe(context)
    except EngineError as exc:
        context.note("catalog", f"{name} recipe failed", exc)
        if isinstance(exc, ConstructionRefusedError) and exc.report is not None and details is not None:
            details.extend(exc.report)
        verdicts.add("catalog.recipe", name, False, witness=str(exc))
        return verdicts
    if details is not None:
        details.extend(context.report)

    for check, expected in item.expectations:
        found = records_of(context.report, check)
        observed = bool(found) and all(r.passed for r in found)
        witness = None
        if observed != expected:
            failing = [r for r in found if not r.passed]
            if failing:
                witness = f"{failing[0].subject}: {failing[0].witness}"
            else:
                witness = "no records" if not found else "every record passed"
        verdicts.add(f"expect.{check}", name, observed == expected, witness=witness)
    context.note("catalog", name, verdicts.summary().splitlines()[0])
    return verdicts


# ----------------------------------------------------------------------
# Helpers shared by the recipes
# ----------------------------------------------------------------------
def load(text: str, context: VerificationContext) -> LoadedDocument:
    """Build an inline .hdga document"""
    return DocumentLoader(degree_bound=context.degree_bound).load_text(text)


def element(p: DGAPresentation, text: str, scalars: Iterable[str] = ()) -> Element:
    """Evaluate an expression over the generators of p"""
    antipode = p.antipode if isinstance(p, HopfDGA) and p.has_antipode else None
    value = evaluate_expression(text, p.alphabet, scalars, antipode)
    return Element.scalar(value) if isinstance(value, Scalar) else value


def relation_records(
    context: VerificationContext,
    p: DGAPresentation,
    equations: Iterable[Tuple[str, str]],
    scalars: Iterable[str] = (),
    check: str = "catalog.relation",
):
    """Each lhs = rhs must hold in p"""
    scalars = tuple(scalars)
    for lhs, rhs in equations:
        diff = p.reduce(element(p, lhs, scalars) - element(p, rhs, scalars))
        context.report.add(check, f"{lhs} = {rhs}", diff.is_zero(), diff)


def rmatrix_records(context: VerificationContext, r: RMatrix, label: str, check: str = "rmatrix"):
    """Yang-Baxter and q-Hecke records under check.yang_baxter and check.q_hecke"""
    for result in (yang_baxter_check(r), q_hecke_check(r)):
        context.report.add(f"{check}.{result.name}", label, result.passed, witness=result.witness)


def construction_records(context: VerificationContext, h: DGAPresentation):
    """Precondition and certificate records of a build"""
    for key in ("preconditions", "certificate"):
        report = h.artefacts.get(key)
        if report is not None:
            context.report.extend(report)


def deterministic_records(context: VerificationContext, p: DGAPresentation, samples: int = 12, seed: int = 7):
    """Two randomized reduction orders must agree with the default one"""
    letters = [g.name for g in p.alphabet if g.degree <= 1]
    words = [(x, y) for x in reversed(letters) for y in letters]
    words += [(x, y, z) for x in reversed(letters) for y in reversed(letters) for z in letters[:2]]
    picker = random.Random(seed)
    chosen = picker.sample(words, min(samples, len(words)))
    for word in chosen:
        e = Element.word(*word)
        expected = p.reduce(e)
        agree = all(
            (p.system.normal_form(e, random.Random(seed + k)) - expected).is_zero()
            for k in (1, 2)
        )
        context.report.add("rewrite.deterministic", "*".join(word), agree)


def suite_records(context: VerificationContext, p: DGAPresentation):
    """
    Property suite of an entry: DGA axioms, Hopf axioms when p is Hopf,
    confluence and deterministic normal forms; a build certificate stands in
    for the first three
    """
    if "certificate" in p.artefacts:
        construction_records(context, p)
    else:
        verify_dga(p, context=context)
        if isinstance(p, HopfDGA):
            verify_hopf(p, context=context)
        context.report.extend(critical_pairs(p.system, context.degree_bound))
    deterministic_records(context, p)


def action_records(
    context: VerificationContext,
    action,
    values: Iterable[Tuple[str, str, str]],
    scalars: Iterable[str] = (),
    check: str = "catalog.action",
):
    """
    (left, right, expected) triples; for a right action left is the module
    element, for a left action the acting one
    """
    scalars = tuple(scalars)
    module, acting = action.module, action.acting
    right_action = isinstance(action, RightAction)
    symbol = "◁" if right_action else "▷"
    for left, right, expected in values:
        if right_action:
            value = action.act(element(module, left, scalars), element(acting, right, scalars))
        else:
            value = action.act(element(acting, left, scalars), element(module, right, scalars))
        diff = module.reduce(value - element(module, expected, scalars))
        context.report.add(check, f"{left}{symbol}{right} = {expected}", diff.is_zero(), diff)


def coproduct_records(
    context: VerificationContext,
    h: HopfDGA,
    values: Iterable[Tuple[str, str]],
    scalars: Iterable[str] = (),
    check: str = "catalog.coproduct",
):
    """(element, ten(...) expression) pairs: Δ of the element must match"""
    scalars = tuple(scalars)
    for text, expected in values:
        target = evaluate_expression(expected, h.alphabet, scalars)
        diff = h.tensor2.reduce(h.coproduct(element(h, text, scalars)) - target)
        context.report.add(check, f"Δ({text}) = {expected}", diff.is_zero(), diff)
