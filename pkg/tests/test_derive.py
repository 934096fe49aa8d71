"""
Tests for relation derivation
"""
import pytest

from src.catalog.gl2 import DEGREE_ONE, derivation_ansatz, derivation_constraints
from src.catalog.registry import element
from src.derive import Ansatz, LeibnizConstraint, MapConstraint, VanishingConstraint, derive_relations
from src.errors import ConfigurationError
from src.freealg import Alphabet, Element
from src.rmatrix import frt_calculus, gl1_determinant, standard_gln_rmatrix
from src.scalar import q
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension
from src.structure.presentation import DGAPresentation
from src.tensoralg import TensorElement


def open_line():
    alphabet = Alphabet()
    alphabet.add("x", 0)
    alphabet.add_differential("x")
    base = DGAPresentation("line", alphabet, [Element.word("d(x)", "d(x)")])
    ansatz = Ansatz(base, grading={"x": [1]})
    ansatz.add("d(x)", "x")
    return ansatz


def coaction_constraint():
    gl1 = frt_calculus(standard_gln_rmatrix(1), [["t"]], gl1_determinant("t", "ti"), name="GL1")
    table = {"x": TensorElement.pure(("x",), ("t",))}
    return MapConstraint(lambda p: differentiable_extension(p, gl1, table, "right", "Δ_R"), label="coaction")


def test_candidates_respect_the_grading():
    ansatz = open_line().expand()
    assert ansatz.templates[0].candidates == [("x", "d(x)")]
    assert ansatz.unknowns == ["k1"]


def test_coaction_fixes_the_line_calculus():
    result = derive_relations(open_line(), [coaction_constraint()])
    assert result.consistent
    assert result.unique
    assert result.values["k1"] == q() ** 2
    assert result.report.passed, result.report.summary()
    dx, x = Element.word("d(x)"), Element.word("x")
    assert result.presentation.reduce(dx * x) == Element.word("x", "d(x)", coeff=q() ** 2)


def test_leibniz_alone_leaves_the_coefficient_free():
    result = derive_relations(open_line(), [LeibnizConstraint()])
    assert result.consistent
    assert result.free == ["k1"]
    assert not result.unique
    failed = {record.check for record in result.report.failures()}
    assert failed == {"derive.unique"}


def test_contradiction_yields_a_certificate():
    contradiction = VanishingConstraint(lambda p: [("x", Element.word("x"))], label="vanishing")
    result = derive_relations(open_line(), [contradiction])
    assert not result.consistent
    assert result.presentation is None
    assert result.certificate.endswith("0 = 1")
    assert not result.report.check_passed("derive.consistent")


def test_template_errors():
    ansatz = open_line()
    with pytest.raises(ConfigurationError):
        ansatz.add("d(x)", "x")
    with pytest.raises(ConfigurationError):
        ansatz.add("d(x)", "d(x)")
    with pytest.raises(ConfigurationError):
        derive_relations(ansatz, [], nonlinear="guess")


def test_fixed_part_is_kept():
    alphabet = Alphabet()
    alphabet.add("x", 0)
    alphabet.add("y", 0)
    ansatz = Ansatz(DGAPresentation("plane", alphabet))
    ansatz.add("y", "x", fixed=Element.word("x", "y"), candidates=[])
    result = derive_relations(ansatz, [])
    assert result.unique
    assert result.relations == [Element.word("y", "x") - Element.word("x", "y")]


def test_gl2_calculus_follows_from_linear_constraints():
    result = derive_relations(derivation_ansatz(VerificationContext(subject="GL2")), derivation_constraints())
    assert result.unique, result.report.summary()
    assert not any(stage.nonlinear_solved for stage in result.stages)
    p = result.presentation
    for lhs, rhs in DEGREE_ONE:
        assert p.equal(element(p, lhs), element(p, rhs)), lhs
