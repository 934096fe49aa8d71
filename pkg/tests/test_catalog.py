"""
Tests for the built-in catalog
"""
import pytest

from src.catalog import catalog_get, catalog_names, catalog_run
from src.catalog.gl2 import alpha_family
from src.catalog.registry import CatalogEntry, _REGISTRY, records_of, suite_records
from src.errors import CatalogLookupError, ConfigurationError
from src.freealg import Alphabet, Element
from src.report import VerificationReport
from src.structure.base_check import VerificationContext
from src.structure.presentation import DGAPresentation

EXPECTED_NAMES = {
    "borel_bplus",
    "braided_matrices_gl2",
    "double_uqb",
    "gl2_4d",
    "gl2_alpha_family",
    "gl2_derived",
    "gl2_double_R_case_i",
    "gl2_double_R_case_ii",
    "gl2_frt",
    "gl2_parabolic",
    "planck",
    "poincare11",
    "poincare11_derived",
    "su2_mirror",
}


def test_every_entry_is_registered():
    assert set(catalog_names()) == EXPECTED_NAMES
    for name in catalog_names():
        item = catalog_get(name)
        assert item.description
        assert item.expectations


def test_unknown_entry_lists_the_available_ones():
    with pytest.raises(CatalogLookupError) as excinfo:
        catalog_get("gl3_frt")
    assert "gl2_frt" in str(excinfo.value)


def test_misprint_notes_are_recorded():
    assert any("misprint" in note for note in catalog_get("planck").notes)
    assert any("misprint" in note for note in catalog_get("double_uqb").notes)


def test_borel_bosonisation_entry():
    details = VerificationReport(title="details")
    verdicts = catalog_run("borel_bplus", details)
    assert verdicts.passed, details.summary()
    assert {r.check for r in verdicts.records} == {f"expect.{check}" for check, _ in catalog_get("borel_bplus").expectations}
    assert records_of(details, "catalog.relation")


def test_double_of_uqb_entry():
    verdicts = catalog_run("double_uqb")
    assert verdicts.passed, verdicts.summary()


def test_predicted_failure_counts_as_a_pass(monkeypatch):
    def recipe(context):
        context.report.add("dga.leibniz", "x", False, witness="x")
        context.report.add("confluence", "x*x", True)

    item = CatalogEntry("broken", "a failing example", "tests", (("dga", False), ("confluence", True)), recipe)
    monkeypatch.setitem(_REGISTRY, "broken", item)
    verdicts = catalog_run("broken")
    assert verdicts.passed
    assert len(verdicts.records) == 2


def test_unmet_expectation_names_the_witness(monkeypatch):
    def recipe(context):
        context.report.add("dga.leibniz", "x", False, witness="q*x")

    item = CatalogEntry("broken", "a failing example", "tests", (("dga", True), ("hopf", True)), recipe)
    monkeypatch.setitem(_REGISTRY, "broken", item)
    verdicts = catalog_run("broken")
    failing = {r.check: r.witness for r in verdicts.failures()}
    assert failing == {"expect.dga": "x: q*x", "expect.hopf": "no records"}


def test_recipe_errors_become_records(monkeypatch):
    def recipe(context):
        raise ConfigurationError("no antipode")

    monkeypatch.setitem(_REGISTRY, "broken", CatalogEntry("broken", "", "tests", (("dga", True),), recipe))
    verdicts = catalog_run("broken")
    [record] = verdicts.records
    assert record.check == "catalog.recipe"
    assert not record.passed
    assert "no antipode" in record.witness


def test_suite_resolves_overlaps_up_to_the_context_bound():
    alphabet = Alphabet()
    for x in "xyz":
        alphabet.add(x, 0)
    w = Element.word
    # x y y z rewrites to 0 one way and to x x the other
    p = DGAPresentation(
        "overlap",
        alphabet,
        [w("x", "y", "y"), w("y", "y", "z") - w("x")],
        {x: Element.zero() for x in "xyz"},
    )
    shallow = VerificationContext(subject="overlap", degree_bound=3)
    suite_records(shallow, p)
    assert all(r.passed for r in records_of(shallow.report, "confluence"))
    deep = VerificationContext(subject="overlap", degree_bound=4)
    suite_records(deep, p)
    assert any(not r.passed for r in records_of(deep.report, "confluence"))


def test_double_of_uqb_relations_and_action_values():
    details = VerificationReport(title="details")
    catalog_run("double_uqb", details)
    relations = records_of(details, "catalog.relation")
    assert relations and all(r.passed for r in relations)
    actions = {r.subject: r.passed for r in records_of(details, "catalog.action")}
    assert actions["x◁y = 1/(1 - q^2)"]
    assert actions["x◁s = q^-2*x"]
    assert actions["d(x)◁y = 0"]
    assert len(catalog_get("double_uqb").notes) == 3


def test_negative_normalisation_gets_a_loadable_name():
    context = VerificationContext(subject="alpha")
    p = alpha_family(context, -1)
    assert p.name == "Omega_m1"
    assert alpha_family(context, 2).name == "Omega_2"


@pytest.mark.parametrize("name", sorted(EXPECTED_NAMES))
def test_entry_meets_its_expectations(name):
    details = VerificationReport(title="details")
    verdicts = catalog_run(name, details)
    assert verdicts.records
    assert not records_of(verdicts, "catalog.recipe"), verdicts.summary()
    assert verdicts.passed, verdicts.summary()


def test_su2_double_acts_by_zero_through_maurer_cartan_forms():
    details = VerificationReport(title="details")
    verdicts = catalog_run("su2_mirror", details)
    assert not records_of(verdicts, "catalog.recipe"), verdicts.summary()
    actions = {r.subject: r.passed for r in records_of(details, "catalog.action")}
    assert actions["x1◁e1 = 0"]
    assert actions["d(x2)◁e3 = 0"]
    assert actions["theta◁e2 = 0"]
    assert all(r.passed for r in records_of(details, "action"))
