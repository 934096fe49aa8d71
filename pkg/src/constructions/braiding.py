"""
Braiding of right crossed modules and the braided tensor square

For right crossed modules V, W over A:

    Ψ(v⊗w) = (-1)^{|v||w0|} w0 ⊗ (v◁w1),     Δ_R w = w0⊗w1

The braided tensor square B⊗B of a braided exterior algebra multiplies as
(a⊗b)(c⊗d) = a Ψ(b⊗c) d.
"""
from typing import Dict, Tuple

from src.constructions.common import sign
from src.freealg import Word, _accumulate
from src.structure.actions import RightAction
from src.structure.maps import MapSpec
from src.structure.presentation import DGAPresentation
from src.tensoralg import Slots, TensorElement, TensorSystem, graded_map_apply


def crossed_braiding(v_word: Word, w_word: Word, action: RightAction, coaction: MapSpec) -> TensorElement:
    """
    Ψ on a pair of words

    Args:
        v_word: Word of V (acted on by action)
        w_word: Word of W (coacted on by coaction)
        action: Right action of A on V
        coaction: Right coaction W -> W⊗A

    Returns:
        Rank-2 tensor in W⊗V, unreduced in the W slot
    """
    v_degree = action.module.degree(v_word)
    terms: Dict[Slots, object] = {}
    for (w0, w1), c in coaction.extend_word(w_word).terms.items():
        moved = action.act_words(v_word, w1)
        if moved.is_zero():
            continue
        s = sign(v_degree * coaction.source.degree(w0))
        for vw, vc in moved.terms.items():
            _accumulate(terms, {(w0, vw): c * vc * s})
    return TensorElement(2, terms)


def braiding_table(action: RightAction, coaction: MapSpec) -> Dict[Tuple[str, str], TensorElement]:
    """Ψ on every pair of generators (v of V, w of W)"""
    table = {}
    for v in action.module.alphabet:
        for w in coaction.source.alphabet:
            table[(v.name, w.name)] = crossed_braiding((v.name,), (w.name,), action, coaction)
    return table


class BraidedTensorSquare(TensorSystem):
    """
    B⊗B with the braided product; usable as the target of a "coaction" MapSpec
    so that multiplicative extension and verify_well_defined apply unchanged

    Args:
        b: The braided exterior algebra
        action: Right action of A on B
        coaction: Right coaction B -> B⊗A
    """

    def __init__(self, b: DGAPresentation, action: RightAction, coaction: MapSpec):
        super().__init__([b.system, b.system])
        self.b = b
        self.action = action
        self.coaction = coaction

    def mul(self, s: TensorElement, t: TensorElement) -> TensorElement:
        terms: Dict[Slots, object] = {}
        for (a, b), cs in s.terms.items():
            for (c, d), ct in t.terms.items():
                if not b or not c:
                    _accumulate(terms, {(a + c, b + d): cs * ct})
                    continue
                for (c0, b1), cp in crossed_braiding(b, c, self.action, self.coaction).terms.items():
                    _accumulate(terms, {(a + c0, b1 + d): cs * ct * cp})
        return self.reduce(TensorElement(2, terms))


def braided_coproduct_map(
    b: DGAPresentation,
    table: Dict[str, TensorElement],
    action: RightAction,
    coaction: MapSpec,
    name: str = "Δ̲",
) -> MapSpec:
    """
    The braided coproduct extended multiplicatively into the braided square

    d-letters without an entry get the coderivation image of their base.
    """
    target = BraidedTensorSquare(b, action, coaction)
    spec = MapSpec("coaction", b, target, dict(table), name=name)

    def coderivation(letter: str):
        if letter.startswith("d(") and letter.endswith(")") and letter[2:-1] in b.alphabet:
            base = spec.extend_word((letter[2:-1],))
            return graded_map_apply([(0, b.d_word, 1), (1, b.d_word, 1)], base, target)
        return None

    spec.default = coderivation
    return spec
