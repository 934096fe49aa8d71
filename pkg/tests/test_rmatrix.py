"""
Tests for R-matrices and the FRT calculi built from them
"""
from fractions import Fraction

import pytest

from src.errors import ConfigurationError, ScalarDomainError
from src.freealg import Element, critical_pairs
from src.rmatrix import (
    RMatrix,
    braided_matrices,
    conjugate_R,
    frt_calculus,
    gl1_determinant,
    gl2_determinant,
    q_hecke_check,
    quantum_plane_calculus,
    standard_gln_rmatrix,
    yang_baxter_check,
)
from src.scalar import Scalar, q
from src.structure.coaction_check import verify_coaction_differentiable
from src.structure.dga_check import verify_dga
from src.structure.hopf_check import verify_hopf

GL2 = [["a", "b"], ["c", "d"]]


def test_standard_gl2_is_yang_baxter_and_hecke():
    r = standard_gln_rmatrix(2)
    assert yang_baxter_check(r)
    hecke = q_hecke_check(r)
    assert hecke.passed
    assert hecke.details["r21_r_form"] is True


def test_standard_entries():
    r = standard_gln_rmatrix(2)
    assert r.entry(0, 0, 0, 0) == q()
    assert r.entry(0, 0, 1, 1) == 1
    assert r.entry(0, 1, 1, 0) == q() - 1 / q()
    assert r.entry(1, 0, 0, 1).is_zero()


def test_rescaled_matrix_keeps_yang_baxter_but_not_hecke():
    r = standard_gln_rmatrix(2, Fraction(-1, 2))
    assert yang_baxter_check(r).passed
    result = q_hecke_check(r)
    assert not result.passed
    assert result.witness.startswith("entry")


def test_identity_is_not_hecke():
    r = RMatrix.identity(2)
    assert yang_baxter_check(r).passed
    assert not q_hecke_check(r).passed
    with pytest.raises(ConfigurationError):
        frt_calculus(r, GL2)


def test_conjugate_is_hecke():
    r = standard_gln_rmatrix(2)
    assert q_hecke_check(conjugate_R(r)).passed
    assert yang_baxter_check(conjugate_R(r)).passed


def test_matrix_algebra():
    r = standard_gln_rmatrix(2)
    assert r @ r.inverse() == RMatrix.identity(2)
    assert r.flipped().flipped() == r
    assert r.substitute({"q": 1}) == RMatrix.identity(2)


def test_bad_grid_and_zero_parameter():
    with pytest.raises(ConfigurationError):
        RMatrix(2, [[1, 0], [0, 1]])
    with pytest.raises(ScalarDomainError):
        q_hecke_check(standard_gln_rmatrix(2), 0)


def test_unrepresentable_prefactor():
    with pytest.raises(ConfigurationError):
        standard_gln_rmatrix(2, Fraction(1, 3))


def test_frt_calculus_for_gl1():
    gl1 = frt_calculus(standard_gln_rmatrix(1), [["t"]], gl1_determinant("t", "ti"), name="GL1")
    assert verify_dga(gl1).passed
    assert verify_hopf(gl1).passed
    dt, t = Element.word("d(t)"), Element.word("t")
    assert gl1.reduce(dt * t) == gl1.reduce(t * dt).scale(q() ** 2)
    assert gl1.reduce(dt * dt).is_zero()


def test_frt_calculus_for_gl2_is_a_dga():
    gl2 = frt_calculus(standard_gln_rmatrix(2), GL2, name="GL2")
    assert verify_dga(gl2).passed
    b, a = Element.word("b"), Element.word("a")
    assert gl2.reduce(b * a) == gl2.reduce(a * b).scale(q())
    assert gl2.counit_word(("a",)) == Scalar.one()
    assert gl2.counit_word(("b",)).is_zero()


def test_quantum_plane_coaction_is_differentiable():
    r = standard_gln_rmatrix(2)
    gl2 = frt_calculus(r, GL2, name="GL2")
    plane, coaction = quantum_plane_calculus(r, matrix=GL2)
    x1, x2 = Element.word("x1"), Element.word("x2")
    assert plane.reduce(x2 * x1) == plane.reduce(x1 * x2).scale(q())
    report, _ = verify_coaction_differentiable(plane, coaction, gl2, name="Δ_R")
    assert report.passed, report.summary()


def test_unknown_braided_case():
    with pytest.raises(ConfigurationError):
        braided_matrices(standard_gln_rmatrix(2), case="iii")
    with pytest.raises(ConfigurationError):
        braided_matrices(standard_gln_rmatrix(3))


def test_gl2_with_inverted_determinant_rewrites_confluently():
    gl2 = frt_calculus(standard_gln_rmatrix(2), GL2, gl2_determinant(GL2), name="GL2")
    report = critical_pairs(gl2.system, 4)
    assert report.passed, report.summary()
    a, b, c, d = (Element.word(x) for x in "abcd")
    det, inv = Element.word("D"), Element.word("Dinv")
    assert gl2.equal(b * c, (a * d - det).scale(q()))
    assert gl2.reduce(a * d - (b * c).scale(1 / q())) == det
    assert gl2.reduce(inv * b * det) == b
    assert gl2.reduce(Element.word("d(a)") * det) == gl2.reduce(det * Element.word("d(a)")).scale(q() ** 2)


def test_double_of_gl2_rewrites_confluently():
    bm = braided_matrices(standard_gln_rmatrix(2), "ii", certify=False)
    report = critical_pairs(bm.double.system, 3)
    assert report.passed, report.summary()
    assert "Sdet" in bm.double.alphabet
    assert bm.double.equal(Element.word("Sdet", "Sinv"), Element.one())
