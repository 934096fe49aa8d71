"""
Tests for the presentation DSL
"""
import pytest

from src.dsl_parser import (
    evaluate_expression,
    parse_document,
    parse_expression,
    serialize_document,
    unparse,
)
from src.errors import DSLSemanticError, DSLSyntaxError
from src.freealg import Alphabet, Element
from src.scalar import Scalar, q

DOCUMENT = """
hdga 1
scalars lam   # a second indeterminate
presentation "Ω(A)"
  gen x deg 0; gen t deg 0
  rel: t*x = q^2*x*t
  rel: d(x)*x = (1 + lam)*x*d(x)
  coproduct x = ten(1, x) + ten(x, t)
  coproduct t = ten(t, t)
  counit x = 0
end
pairing P: "Ω(A)" x "Ω(A)" convention skew
  x, x = 0
  t, t = q
end
expect dga "Ω(A)" pass
expect hopf "Ω(A)" fail
"""


def test_document_blocks():
    doc = parse_document(DOCUMENT)
    assert doc.scalars == ["lam"]
    [block] = doc.presentations
    assert block.name == "Ω(A)"
    assert block.generator_names() == ["x", "t", "d(x)"]
    assert block.generators[2].degree == 1
    assert block.is_hopf
    assert doc.pairings[0].convention == "skew"
    assert [(e.check, e.expected) for e in doc.expectations] == [("dga", True), ("hopf", False)]


def test_serialized_document_parses_back_equal():
    doc = parse_document(DOCUMENT)
    text = serialize_document(doc)
    again = parse_document(text)
    assert again == doc
    assert serialize_document(again) == text


def test_empty_document():
    doc = parse_document("# nothing here\n\n")
    assert doc.is_empty()


def test_unknown_generator_is_located():
    with pytest.raises(DSLSemanticError) as excinfo:
        parse_document("hdga 1\npresentation A\n  gen x deg 0\n  rel: x*y = 1\nend\n")
    assert excinfo.value.line == 4
    assert excinfo.value.col == 10
    assert "y" in excinfo.value.message


def test_syntax_errors():
    with pytest.raises(DSLSyntaxError) as excinfo:
        parse_document("hdga 1\npresentation A\n  gen x deg 0\n  rel: x*(x = 1\nend\n")
    assert excinfo.value.line == 4
    with pytest.raises(DSLSyntaxError):
        parse_document("presentation A\n  gen x deg 0\n")
    with pytest.raises(DSLSyntaxError):
        parse_document("frobnicate A\n")
    with pytest.raises(DSLSyntaxError):
        parse_document("hdga 2\n")
    with pytest.raises(DSLSyntaxError):
        parse_document("end\n")


def test_semantic_errors():
    with pytest.raises(DSLSemanticError):
        parse_document("presentation A\n  gen x deg 0\nend\nexpect galois A pass\n")
    with pytest.raises(DSLSemanticError):
        parse_document("presentation A\n  gen x deg 0\n  gen x deg 0\nend\n")
    with pytest.raises(DSLSemanticError):
        parse_document("presentation A\n  gen x deg 0\n  gen d(x) deg 2\nend\n")
    with pytest.raises(DSLSemanticError):
        parse_document("presentation A\n  gen x deg 0\n  rel: f(x) = 0\nend\n")


def test_unparse_keeps_needed_parentheses():
    for text in ["(a + b)*c", "a - (b - c)", "a*b + c", "-(a + b)", "(q - 1)^2"]:
        assert unparse(parse_expression(text)) == text


def test_expressions_evaluate():
    alphabet = Alphabet()
    alphabet.add("x", 0)
    assert evaluate_expression("q^2 - 1", alphabet) == q() ** 2 - 1
    assert evaluate_expression("3/2*x", alphabet) == Element.word("x", coeff=Scalar.parse("3/2"))
    assert evaluate_expression("I^2", alphabet) == -1
