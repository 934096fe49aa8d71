"""
Tests for super tensor powers
"""
import pytest

from src.errors import RankMismatchError
from src.freealg import Alphabet, Element, RewriteSystem
from src.tensoralg import (
    TensorElement,
    TensorSystem,
    component,
    contract_slot,
    expand_slot,
    flip,
    graded_map_apply,
    koszul_sign,
    tensor_multiply,
)


def exterior_line() -> RewriteSystem:
    """C[x] with dx anticommuting with itself"""
    alphabet = Alphabet()
    alphabet.add("x", 0)
    alphabet.add_differential("x")
    relations = [
        Element.word("d(x)", "x") - Element.word("x", "d(x)"),
        Element.word("d(x)", "d(x)"),
    ]
    return RewriteSystem.from_relations(alphabet, relations)


def test_koszul_sign():
    assert koszul_sign((0, 1), (1, 0)) == -1
    assert koszul_sign((1, 0), (0, 1)) == 1
    assert koszul_sign((0, 1), (0, 1)) == 1
    assert koszul_sign((0, 1), (2, 0)) == 1


def test_odd_slots_anticommute_across_the_tensor():
    system = TensorSystem.power(exterior_line(), 2)
    left = TensorElement.pure((), ("d(x)",))
    right = TensorElement.pure(("d(x)",), ())
    assert tensor_multiply(left, right, system) == TensorElement.pure(("d(x)",), ("d(x)",), coeff=-1)
    assert tensor_multiply(right, left, system) == TensorElement.pure(("d(x)",), ("d(x)",))


def test_products_reduce_slotwise():
    system = TensorSystem.power(exterior_line(), 2)
    t = TensorElement.pure(("d(x)",), ("x",))
    s = TensorElement.pure(("x",), ())
    assert system.mul(t, s) == TensorElement.pure(("x", "d(x)"), ("x",))
    assert system.mul(t, t).is_zero()


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        TensorElement.unit(2) + TensorElement.unit(3)
    with pytest.raises(RankMismatchError):
        TensorElement(2, {(("x",),): 1})


def test_graded_map_apply_is_a_super_derivation():
    line = exterior_line()
    system = TensorSystem.power(line, 2)

    def d(word):
        return Element.word("d(x)") if word == ("x",) else Element.zero()

    maps = [(0, d, 1), (1, d, 1)]
    t = TensorElement.pure(("x",), ("x",))
    expected = TensorElement.pure(("d(x)",), ("x",)) + TensorElement.pure(("x",), ("d(x)",))
    assert graded_map_apply(maps, t, system) == expected
    odd = TensorElement.pure(("d(x)",), ("x",))
    assert graded_map_apply(maps, odd, system) == TensorElement.pure(("d(x)",), ("d(x)",), coeff=-1)


def test_expand_and_contract_slots():
    t = TensorElement.pure(("x",), ("x",))

    def primitive(word):
        return TensorElement.pure(word, ()) + TensorElement.pure((), word)

    expanded = expand_slot(t, 1, primitive)
    assert expanded.rank == 3
    assert expanded == TensorElement.pure(("x",), ("x",), ()) + TensorElement.pure(("x",), (), ("x",))
    counit = contract_slot(expanded, 2, lambda w: 1 if w == () else 0)
    assert counit == TensorElement.pure(("x",), ("x",))


def test_flip_and_components():
    system = TensorSystem.power(exterior_line(), 2)
    odd = TensorElement.pure(("d(x)",), ("d(x)",))
    assert flip(odd, system) == odd.scale(-1)
    mixed = odd + TensorElement.pure(("x",), ("d(x)",))
    assert component(mixed, (0, 1), system) == TensorElement.pure(("x",), ("d(x)",))


def test_tensor_outer_product_and_collapse():
    e = Element.word("x") + Element.one()
    t = TensorElement.tensor(e, Element.word("x"))
    assert t == TensorElement.pure(("x",), ("x",)) + TensorElement.pure((), ("x",))
    assert TensorElement.tensor(e).to_element() == e
