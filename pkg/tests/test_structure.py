"""
Tests for presentations, structure maps and the axiom checks
"""
import pytest

from src.document_loader import DocumentLoader
from src.errors import ConfigurationError, MissingAssignmentError
from src.freealg import Element
from src.scalar import q
from src.structure.action_check import verify_action_differentiable
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import verify_coaction_differentiable
from src.structure.dga_check import verify_dga
from src.structure.forms import maurer_cartan, verify_inner, verify_left_invariance
from src.structure.hopf_check import verify_hopf
from src.structure.maps import MapSpec, extend_map, identity_map
from src.structure.morphism import verify_morphism
from src.tensoralg import TensorElement

GL1 = """
hdga 1
presentation GL1
  gen t deg 0
  gen ti deg 0
  rel: t*ti = 1
  rel: ti*t = 1
  rel: d(t)*t = q^2*t*d(t)
  rel: d(t)*ti = q^-2*ti*d(t)
  rel: d(t)*d(t) = 0
  d ti = {d_ti}
  coproduct t = ten(t, t)
  coproduct ti = ten(ti, ti)
  counit t = 1
  counit ti = 1
  antipode t = {s_t}
  antipode ti = t
end
presentation line
  gen x deg 0
  rel: d(x)*x = {line}*x*d(x)
  rel: d(x)*d(x) = 0
end
"""


def load(d_ti="-q^-2*ti*ti*d(t)", s_t="ti", line="q^2"):
    return DocumentLoader().load_text(GL1.format(d_ti=d_ti, s_t=s_t, line=line))


def line_coaction():
    return {"x": TensorElement.pure(("x",), ("t",))}


def test_gl1_is_a_hopf_dga():
    gl1 = load().hopf("GL1")
    assert verify_dga(gl1).passed
    assert verify_hopf(gl1).passed


def test_paranoid_mode_checks_longer_words():
    gl1 = load().hopf("GL1")
    context = VerificationContext(subject="GL1", degree_bound=3)
    report = verify_hopf(gl1, context=context, paranoid=True)
    assert report.passed
    assert report.by_check("hopf.paranoid.coassociativity")


def test_wrong_differential_breaks_leibniz():
    gl1 = load(d_ti="ti*ti*d(t)").presentation("GL1")
    report = verify_dga(gl1)
    assert not report.passed
    assert {r.check for r in report.failures()} == {"dga.leibniz"}


def test_wrong_antipode_is_reported_with_a_witness():
    gl1 = load(s_t="t").hopf("GL1")
    failures = verify_hopf(gl1).failures()
    assert failures
    assert any(r.check.startswith("hopf.antipode") for r in failures)
    assert all(r.witness for r in failures)


def test_differential_letters_default_to_the_coderivation():
    gl1 = load().hopf("GL1")
    expected = TensorElement.pure(("d(t)",), ("t",)) + TensorElement.pure(("t",), ("d(t)",))
    assert gl1.coproduct(Element.word("d(t)")) == expected
    assert gl1.antipode(Element.word("d(t)")) == gl1.d(Element.word("ti"))


def test_d_of_a_product_uses_the_graded_leibniz_rule():
    gl1 = load().hopf("GL1")
    t, dt = Element.word("t"), Element.word("d(t)")
    assert gl1.d(t * t) == (t * dt).scale(1 + q() ** 2)
    assert gl1.d(dt * t) == gl1.reduce(-(dt * dt))


def test_missing_antipode_is_a_configuration_error():
    doc = DocumentLoader().load_text(
        """
        hdga 1
        presentation P
          gen x deg 0
          coproduct x = ten(1, x) + ten(x, 1)
          counit x = 0
        end
        """
    )
    with pytest.raises(ConfigurationError):
        doc.hopf("P").antipode(Element.word("x"))


def test_maurer_cartan_forms_are_left_invariant():
    gl1 = load().hopf("GL1")
    form = maurer_cartan(gl1, "t")
    assert form == Element.word("ti", "d(t)")
    assert verify_left_invariance(gl1, form).passed


def test_gl1_calculus_is_inner():
    gl1 = load().hopf("GL1")
    theta = Element.word("ti", "d(t)")
    assert verify_inner(gl1, theta, 1 / (q() ** 2 - 1)).passed
    assert not verify_inner(gl1, theta, 1).passed


def test_identity_is_a_morphism():
    gl1 = load().hopf("GL1")
    assert verify_morphism(gl1, gl1, identity_map(gl1)).passed


def test_map_extension_reports_missing_generators():
    gl1 = load().hopf("GL1")
    spec = MapSpec("algebra", gl1, gl1, {"t": Element.word("ti")}, name="partial")
    with pytest.raises(MissingAssignmentError):
        extend_map(spec, Element.word("t", "ti"))


def test_anti_algebra_extension_reverses_words():
    gl1 = load().hopf("GL1")
    spec = MapSpec("anti_algebra", gl1, gl1, {"t": Element.word("ti"), "ti": Element.word("t")})
    assert extend_map(spec, Element.word("t", "t")) == Element.word("ti", "ti")


def test_line_coaction_is_differentiable():
    doc = load()
    report, extended = verify_coaction_differentiable(doc.presentation("line"), line_coaction(), doc.hopf("GL1"))
    assert report.passed
    expected = TensorElement.pure(("d(x)",), ("t",)) + TensorElement.pure(("x",), ("d(t)",))
    assert extended.extend_word(("d(x)",)) == expected


def test_line_coaction_fails_for_the_wrong_calculus():
    doc = load(line="q")
    report, _ = verify_coaction_differentiable(doc.presentation("line"), line_coaction(), doc.hopf("GL1"))
    assert not report.passed
    assert any(r.check == "coaction.well_defined" for r in report.failures())


def test_right_action_on_the_line_is_differentiable():
    doc = load()
    line, gl1 = doc.presentation("line"), doc.hopf("GL1")
    table = {
        ("x", "t"): Element.word("x").scale(q() ** -2),
        ("x", "ti"): Element.word("x").scale(q() ** 2),
        ("d(x)", "t"): Element.word("d(x)"),
        ("d(x)", "ti"): Element.word("d(x)"),
    }
    action = RightAction(line, gl1, table)
    report, _ = verify_action_differentiable(action)
    assert report.passed
    forced = action.act(Element.word("x"), Element.word("d(t)"))
    assert forced == Element.word("d(x)").scale(q() ** -2 - 1)


def test_context_notes_go_to_the_trace_and_echo_when_verbose(capsys):
    quiet = VerificationContext(subject="gl1", verbose=False)
    quiet.note("catalog", "running recipe", "gl1")
    assert quiet.execution_trace[-1]["check"] == "catalog"
    assert capsys.readouterr().out == ""

    loud = VerificationContext(subject="gl1", verbose=True)
    loud.note("catalog", "recipe failed", "no antipode")
    assert "[catalog] recipe failed: no antipode" in capsys.readouterr().out
    assert "recipe failed -> no antipode" in loud.get_trace_summary()
