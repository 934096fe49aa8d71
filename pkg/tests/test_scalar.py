"""
Tests for the exact coefficient field
"""
from fractions import Fraction

import pytest

from src.errors import PoleError, ScalarDomainError
from src.scalar import LinearSystem, Scalar, lam, q, scalar_normalize, solve_linear


def test_canonical_form_cancels_common_factors():
    left = (q() ** 2 - 1) / (q() - 1)
    assert left == q() + 1
    assert hash(left) == hash(q() + 1)


def test_inverse_and_negative_powers():
    assert q() * q() ** -1 == 1
    assert (q() ** -2).inverse() == q() ** 2
    assert lam() == q() - 1 / q()


def test_zero_denominator_is_rejected():
    with pytest.raises(ScalarDomainError):
        scalar_normalize(1, 0)
    with pytest.raises(ScalarDomainError):
        Scalar.one() / Scalar.zero()


def test_parse_matches_arithmetic():
    assert Scalar.parse("1/(1 - q^2)") == Scalar.one() / (1 - q() ** 2)
    assert Scalar.parse("3/2") == Fraction(3, 2)
    assert Scalar.of("q^-2") == q() ** -2


def test_parse_error_is_a_domain_error():
    with pytest.raises(ScalarDomainError):
        Scalar.parse("q +* 2")


def test_mixed_indeterminates_unify():
    s = Scalar.symbol("lam")
    total = s * q() - q() * s
    assert total.is_zero()
    assert sorted((s + q()).free_symbols()) == ["lam", "q"]


def test_gaussian_rationals():
    i = Scalar.imaginary_unit()
    assert i * i == -1
    assert (i * Scalar.symbol("lam")) ** 2 == -(Scalar.symbol("lam") ** 2)


def test_substitution_evaluates_exactly():
    value = (q() ** 2 - 1) / (q() + 2)
    assert value.substitute({"q": 1}).is_zero()
    assert value.substitute({"q": Fraction(1, 2)}) == Fraction(-3, 10)


def test_substitution_into_a_pole_names_the_factor():
    with pytest.raises(PoleError) as info:
        (Scalar.one() / (q() - 1)).substitute({"q": 1})
    assert "q - 1" in info.value.factor


def test_to_fraction_requires_a_constant():
    assert Scalar.of(Fraction(5, 7)).to_fraction() == Fraction(5, 7)
    with pytest.raises(ScalarDomainError):
        q().to_fraction()


def test_solve_linear_unique():
    system = LinearSystem.from_grid([[1, 1], [1, -1]], [q(), 1], ["x", "y"])
    solution = solve_linear(system)
    assert solution.status == "unique"
    assert solution.assignments["x"] == (q() + 1) / 2
    assert solution.assignments["y"] == (q() - 1) / 2
    assert all(r.is_zero() for r in system.residual(solution.assignments))


def test_solve_linear_parametrized():
    system = LinearSystem(unknowns=["x", "y", "z"])
    system.add_equation({"x": 1, "y": q()}, 1)
    solution = solve_linear(system)
    assert solution.status == "parametrized"
    assert solution.free == ["y", "z"]
    assert solution.dependencies["x"] == {"y": -q()}
    assert solution.particular()["x"] == 1


def test_solve_linear_inconsistent_has_a_certificate():
    system = LinearSystem(unknowns=["x"])
    system.add_equation({"x": 1}, 1, label="first")
    system.add_equation({"x": 1}, 2, label="second")
    solution = solve_linear(system)
    assert not solution.consistent
    assert solution.certificate.startswith("second")


def test_every_constructor_gives_the_canonical_form():
    half = Scalar.of(Fraction(3, 2))
    assert half == Scalar.parse("3/2")
    assert hash(half) == hash(Scalar.parse("3/2"))
    assert Scalar.of(-4) / 6 == Scalar.of(Fraction(-2, 3))
    assert Scalar.symbol("lam") * 2 / 2 == Scalar.symbol("lam")
