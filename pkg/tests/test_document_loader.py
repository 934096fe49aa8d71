"""
Tests for loading and checking .hdga documents
"""
import pytest

from src.config import settings
from src.document_loader import DocumentLoader
from src.errors import ConfigurationError, DSLSemanticError
from src.freealg import Element
from src.report import VerificationReport
from src.scalar import q
from src.structure.presentation import HopfDGA


@pytest.fixture
def loader():
    return DocumentLoader()


def test_shipped_documents_load(loader):
    documents = loader.load_catalog()
    assert {"gl1", "gl2", "Uqb", "planck"} <= set(documents)
    assert isinstance(documents["gl1"].hopf("GL1"), HopfDGA)
    assert "DR" in documents["gl2"].maps
    assert "P" in documents["Uqb"].pairings


def test_gl1_document_meets_its_expectations(loader):
    doc = loader.load_file(settings.catalog_dir / "gl1.hdga")
    details = VerificationReport(title="details")
    report = doc.check(details)
    assert report.passed, details.summary()
    assert {r.check for r in report.records} == {"expect.dga", "expect.hopf", "expect.confluence"}
    assert details.records


def test_gl2_coaction_document(loader):
    doc = loader.load_file(settings.catalog_dir / "gl2.hdga")
    gl2 = doc.presentation("GL2")
    d_a, d = Element.word("d(a)"), Element.word("d")
    assert gl2.reduce(d_a * d) == Element.word("d", "d(a)")
    with pytest.raises(ConfigurationError):
        doc.hopf("GL2").antipode(Element.word("a"))


def test_failed_prediction_is_reported(loader):
    text = """
    hdga 1
    presentation A
      gen x deg 0
      rel: d(x)*x = q^2*x*d(x)
    end
    expect dga A pass
    """
    report = loader.load_text(text).check()
    [record] = report.records
    assert not record.passed
    assert record.witness


def test_specialised_witnesses_decide_expectations(loader):
    text = """
    hdga 1
    presentation A
      gen x deg 0
      gen t deg 0
      rel: t*x = q*x*t
      rel: d(t)*x = x*d(t)
      rel: d(x)*t = t*d(x)
      rel: d(x)*x = x*d(x)
      rel: d(t)*t = t*d(t)
      rel: d(x)*d(x) = 0
      rel: d(t)*d(t) = 0
      rel: d(t)*d(x) = -d(x)*d(t)
    end
    expect dga A pass
    """
    doc = loader.load_text(text)
    assert not doc.check().passed
    assert doc.check(assignment={"q": 1}).passed


def test_planck_derivation_is_consistent(loader):
    doc = loader.load_file(settings.catalog_dir / "planck.hdga")
    result = doc.derive()
    assert result.consistent
    assert result.presentation is not None


def test_recipe_builds_the_super_tensor_product(loader):
    doc = loader.load_file(settings.catalog_dir / "Uqb.hdga")
    built = doc.build()
    assert built.reduce(Element.word("y", "x")) == Element.word("x", "y")
    assert built.reduce(Element.word("t", "x")) == Element.word("x", "t", coeff=q() ** 2)


def test_document_errors(loader):
    doc = loader.load_text("hdga 1\npresentation A\n  gen x deg 0\nend\n")
    with pytest.raises(ConfigurationError):
        doc.presentation("B")
    with pytest.raises(ConfigurationError):
        doc.hopf("A")
    with pytest.raises(ConfigurationError):
        doc.build()
    with pytest.raises(ConfigurationError):
        doc.derive()
    with pytest.raises(DSLSemanticError):
        loader.load_text(
            "presentation A\n  gen x deg 0\n  coproduct x = ten(x, 1) + ten(1, x)\nend\n"
            "pairing P: A x A convention braided\nend\n"
        )
