"""
Tests for the cross-product builders
"""
import pytest

from src.catalog.bicross import poincare_bicross
from src.catalog.borel import DOUBLE_PAIRING, borel_text
from src.catalog.gl2 import PLANE, PLANE_ACTION, gl2, plane_as_braided, plane_coaction
from src.catalog.registry import element
from src.constructions import (
    bosonisation,
    crossed_braiding,
    generalized_double,
    merge_alphabets,
    super_tensor_dga,
)
from src.document_loader import DocumentLoader
from src.errors import ConstructionRefusedError, NameCollisionError
from src.freealg import Element
from src.rmatrix import frt_calculus, gl1_determinant, standard_gln_rmatrix
from src.scalar import q
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension
from src.structure.crossed_module import verify_crossed_module
from src.tensoralg import TensorElement

LINE = """
hdga 1
presentation line
  gen x deg 0
  rel: d(x)*x = q^2*x*d(x)
  rel: d(x)*d(x) = 0
  coproduct x = ten(x, 1) + ten(1, x)
  counit x = 0
  antipode x = -x
end
"""


def borel_pair():
    text = borel_text("Uqb", "x", "t", "ti") + borel_text("Uqm", "y", "s", "si") + DOUBLE_PAIRING
    return DocumentLoader().load_text(text)


def line_pieces(x_t="q^-2*x", x_ti="q^2*x"):
    gl1 = frt_calculus(standard_gln_rmatrix(1), [["t"]], gl1_determinant("t", "ti"), name="GL1")
    line = DocumentLoader().load_text(LINE).hopf("line")
    values = {("x", "t"): x_t, ("x", "ti"): x_ti, ("d(x)", "t"): "d(x)", ("d(x)", "ti"): "d(x)"}
    action = RightAction(line, gl1, {k: element(line, v) for k, v in values.items()}, name="◁t")
    return gl1, line, action, {"x": TensorElement.pure(("x",), ("t",))}


def test_merged_alphabet_ranks_left_factor_first():
    doc = borel_pair()
    merged = merge_alphabets(doc.hopf("Uqb").alphabet, doc.hopf("Uqm").alphabet)
    degree_zero = [g.name for g in merged if g.degree == 0]
    assert degree_zero[:3] == ["x", "t", "ti"]
    assert set(degree_zero[3:]) == {"y", "s", "si"}
    left_top = max(merged[name].precedence for name in doc.hopf("Uqb").alphabet.names())
    assert all(merged[name].precedence > left_top for name in doc.hopf("Uqm").alphabet.names())
    with pytest.raises(NameCollisionError):
        merge_alphabets(doc.hopf("Uqb").alphabet, doc.hopf("Uqb").alphabet)


def test_super_tensor_graded_commutes():
    doc = borel_pair()
    h = super_tensor_dga(doc.hopf("Uqb"), doc.hopf("Uqm"))
    assert h.artefacts["certificate"].passed
    x, y = Element.word("x"), Element.word("y")
    assert h.reduce(y * x) == Element.word("x", "y")
    dx, dy = Element.word("d(x)"), Element.word("d(y)")
    assert h.reduce(dy * dx) == -Element.word("d(x)", "d(y)")
    assert h.reduce(dy * x) == Element.word("x", "d(y)")


def test_super_tensor_refuses_shared_names():
    uqb = borel_pair().hopf("Uqb")
    with pytest.raises(NameCollisionError):
        super_tensor_dga(uqb, uqb)


def test_bosonisation_recovers_the_borel_calculus():
    gl1, line, action, coaction = line_pieces()
    h = bosonisation(gl1, line, action, coaction, name="B+")
    assert h.artefacts["certificate"].passed
    t, x = Element.word("t"), Element.word("x")
    assert h.reduce(x * t) == h.reduce(t * x).scale(q() ** -2)
    expected = TensorElement.pure((), ("x",)) + TensorElement.pure(("x",), ("t",))
    assert h.coproduct(x) == expected


def test_bosonisation_refuses_a_trivial_action():
    gl1, line, action, coaction = line_pieces(x_t="x", x_ti="x")
    with pytest.raises(ConstructionRefusedError) as excinfo:
        bosonisation(gl1, line, action, coaction)
    assert not excinfo.value.report.passed


def test_generalized_double_of_the_borel_pair():
    doc = borel_pair()
    copy, uqb = doc.hopf("Uqm"), doc.hopf("Uqb")
    inverse_antipode = {
        "y": element(copy, "-si*y"),
        "s": element(copy, "si"),
        "si": element(copy, "s"),
    }
    double = generalized_double(copy, uqb, doc.pairings["P"], inverse_antipode)
    assert double.artefacts["certificate"].passed
    for lhs, rhs in [("t*s", "s*t"), ("t*y", "q^-2*y*t"), ("d(t)*s", "s*d(t)")]:
        assert double.reduce(element(double, lhs) - element(double, rhs)).is_zero()
    action = double.artefacts["action"]
    assert action.act(Element.word("t"), Element.word("t")) == Element.word("t")


def test_crossed_braiding_on_the_line():
    gl1, line, action, table = line_pieces()
    coaction = differentiable_extension(line, gl1, table, "right", "Δ_R")
    assert crossed_braiding(("x",), ("x",), action, coaction) == TensorElement.pure(("x",), ("x",), coeff=q() ** -2)
    assert crossed_braiding(("d(x)",), ("x",), action, coaction) == TensorElement.pure(("x",), ("d(x)",))


def test_line_is_a_crossed_module_through_degree_one():
    gl1, line, action, table = line_pieces()
    coaction = differentiable_extension(line, gl1, table, "right", "Δ_R")
    report = verify_crossed_module(action, coaction, max_degree=1)
    assert report.passed, report.summary()
    assert any(record.subject == "d(x)◁d(t)" for record in report.records)


def test_quantum_plane_is_a_crossed_module_over_gl2():
    a = gl2(VerificationContext(subject="GL2"))
    plane, table = plane_coaction()
    b = plane_as_braided(plane)
    action = RightAction(b, a, {k: element(b, v) for k, v in PLANE_ACTION.items()}, name="◁t")
    coaction = differentiable_extension(b, a, {x: table[x] for x in PLANE}, "right", "Δ_R")
    assert action.act(Element.word("x1"), Element.word("D")) == Element.word("x1").scale(q() ** -3)
    report = verify_crossed_module(action, coaction, max_degree=1)
    assert report.passed, report.summary()
    assert any(record.subject == "d(x2)◁d(c)" for record in report.records)


def test_poincare_antipode_respects_every_relation():
    _, h = poincare_bicross(VerificationContext(subject="poincare"))
    certificate = h.artefacts["certificate"]
    assert certificate.passed
    assert certificate.by_check("hopf.antipode_well_defined")
    # one ambiguity of length four: the SO11 rule s·c·ds against a0·s
    s, c, ds, dc, a0 = (Element.word(x) for x in ("s", "c", "d(s)", "d(c)", "a0"))
    assert h.equal(s * c * ds * a0, (s * s * dc + dc) * a0)
    assert h.equal(a0 * s * c * ds, a0 * (s * s * dc + dc))
    straightened = h.reduce(a0 * dc).terms
    assert ("d(c)", "a0") in straightened
    assert ("a0", "d(c)") not in straightened
