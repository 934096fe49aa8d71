"""
Tests for pairings between Hopf exterior algebras
"""
import pytest

from src.catalog.borel import DOUBLE_PAIRING, borel_text
from src.document_loader import DocumentLoader
from src.errors import ConfigurationError, PairingTableError
from src.freealg import Element
from src.pairing import PairingSpec, evaluate_pairing, pairing_induced_actions, verify_pairing_axioms
from src.scalar import Scalar, q


def load(pairing=DOUBLE_PAIRING):
    text = borel_text("Uqb", "x", "t", "ti") + borel_text("Uqm", "y", "s", "si") + pairing
    return DocumentLoader().load_text(text)


def test_borel_pairing_is_well_defined():
    doc = load()
    report = verify_pairing_axioms(doc.pairings["P"])
    assert report.passed, report.summary()
    assert report.by_check("pairing.well_defined")
    assert report.by_check("pairing.convolution")


def test_pairing_extends_through_the_coproduct():
    p = load().pairings["P"]
    t, s = Element.word("t"), Element.word("s")
    assert evaluate_pairing(p, t * t, s) == q() ** -4
    # ⟨x, ys⟩ = ⟨1, y⟩⟨x, s⟩ + ⟨x, y⟩⟨t, s⟩
    value = evaluate_pairing(p, Element.word("x"), Element.word("y", "s"))
    assert value == q() ** -2 / (1 - q() ** 2)


def test_forms_pair_to_zero():
    p = load().pairings["P"]
    assert evaluate_pairing(p, Element.word("d(x)"), Element.word("y")).is_zero()
    assert evaluate_pairing(p, Element.word("t"), Element.word("d(s)")).is_zero()


def test_pairing_against_the_units():
    p = load().pairings["P"]
    assert evaluate_pairing(p, Element.one(), Element.word("s")) == Scalar.of(1)
    assert evaluate_pairing(p, Element.word("x"), Element.one()).is_zero()


def test_inconsistent_table_fails_well_definedness():
    doc = load(DOUBLE_PAIRING.replace("t, s = q^-2", "t, s = q^2"))
    report = verify_pairing_axioms(doc.pairings["P"])
    assert not report.passed
    failed = {record.check for record in report.failures()}
    assert "pairing.well_defined" in failed


def test_missing_table_entry_raises():
    doc = load(DOUBLE_PAIRING.replace("  x, y = 1/(1 - q^2)\n", ""))
    with pytest.raises(PairingTableError) as excinfo:
        evaluate_pairing(doc.pairings["P"], Element.word("x"), Element.word("y"))
    assert (excinfo.value.left, excinfo.value.right) == ("x", "y")


def test_trivial_pairing_passes():
    doc = load()
    p = PairingSpec.trivial(doc.hopf("Uqb"), doc.hopf("Uqm"))
    assert verify_pairing_axioms(p).passed
    assert evaluate_pairing(p, Element.word("t"), Element.word("s")) == Scalar.of(1)


def test_unknown_convention_is_rejected():
    doc = load()
    with pytest.raises(ConfigurationError):
        PairingSpec(doc.hopf("Uqb"), doc.hopf("Uqm"), {}, convention="braided")


def test_induced_actions_fix_grouplikes():
    actions = pairing_induced_actions(load().pairings["P"], opposite=False)
    assert actions.right(("t",), ("s",)) == Element.word("t")
    assert actions.left(("t",), ("s",)) == Element.word("s")
