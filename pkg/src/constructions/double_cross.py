"""
Super double cross product Ω(A)⋈Ω(H)

The product of A-words and H-words is the tensor product; H-words move past
A-words through the mutual actions

    η·τ = Σ (-1)^{|η2||τ1|} (η1▷τ1)(η2◁τ2)

and the coproduct is the tensor coproduct of the two factors.
"""
from typing import Any, Optional

from src.constructions.common import CrossProductBuilder, sign
from src.freealg import Element
from src.structure.base_check import VerificationContext
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement

# Preconditions are checked on generators up to this form degree
PRECONDITION_DEGREE = 1


class DoubleCrossBuilder(CrossProductBuilder):
    """
    Args:
        a: Left factor Ω(A)
        h: Right factor Ω(H)
        actions: Provider of left(hw, aw) (an element of Ω(A)) and
            right(hw, aw) (an element of Ω(H)), e.g. MatchedPair or
            PairingActions
    """

    kind = "double cross product"

    def __init__(self, a: HopfDGA, h: HopfDGA, actions: Any, **kwargs):
        super().__init__(a, h, **kwargs)
        self.actions = actions

    def cross_value(self, eta: str, tau: str) -> Element:
        a, h = self.left, self.right
        total = Element.zero()
        for (h1, h2), ch in h.coproduct_word((eta,)).terms.items():
            for (a1, a2), ca in a.coproduct_word((tau,)).terms.items():
                moved = self.actions.left(h1, a1)
                if moved.is_zero():
                    continue
                rest = self.actions.right(h2, a2)
                if rest.is_zero():
                    continue
                total = total + (moved * rest).scale(ch * ca * sign(h.degree(h2) * a.degree(a1)))
        return total

    def preconditions(self, context: VerificationContext):
        a, h = self.left, self.right
        for eta in h.alphabet:
            if eta.degree > PRECONDITION_DEGREE:
                continue
            for tau in a.alphabet:
                if tau.degree > PRECONDITION_DEGREE:
                    continue
                subject = f"{eta.name}, {tau.name}"
                hw, aw = (eta.name,), (tau.name,)
                left_ok = self._module_coalgebra(a, self.actions.left, hw, aw)
                right_ok = self._module_coalgebra(h, self.actions.right, hw, aw)
                self.record("double_cross.module_coalgebra", f"▷ ({subject})", left_ok.is_zero(), left_ok)
                self.record("double_cross.module_coalgebra", f"◁ ({subject})", right_ok.is_zero(), right_ok)
                expected = h.counit_word(hw) * a.counit_word(aw)
                for label, target, value in (("▷", a, self.actions.left(hw, aw)), ("◁", h, self.actions.right(hw, aw))):
                    diff = target.counit(value) - expected
                    self.record("double_cross.counit", f"{label} ({subject})", diff.is_zero(), Element.scalar(diff))

    def _module_coalgebra(self, target: HopfDGA, act, hw, aw) -> TensorElement:
        """Δ(h∘a) - Σ (-1)^{|h2||a1|} (h1∘a1)⊗(h2∘a2), reduced"""
        a, h = self.left, self.right
        lhs = target.coproduct(act(hw, aw))
        rhs = TensorElement.zero(2)
        for (h1, h2), ch in h.coproduct_word(hw).terms.items():
            for (a1, a2), ca in a.coproduct_word(aw).terms.items():
                first = act(h1, a1)
                if first.is_zero():
                    continue
                second = act(h2, a2)
                if second.is_zero():
                    continue
                term = TensorElement.tensor(first, second).scale(ch * ca * sign(h.degree(h2) * a.degree(a1)))
                rhs = rhs + term
        return target.tensor2.reduce(lhs - rhs)


def double_cross_product(
    a: HopfDGA,
    h: HopfDGA,
    actions: Any,
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω(A)⋈Ω(H) from a matched pair of actions

    Args:
        a: Left factor; its words stand left of H-words in normal order
        h: Right factor
        actions: Matched pair: left(hw, aw) -> Ω(A), right(hw, aw) -> Ω(H)
        name: Display name
        certify: Check the matched-pair conditions and certify the result
        verbose: Print the build steps

    Returns:
        The double cross product HopfDGA

    Raises:
        ConstructionRefusedError: a matched-pair condition or the certificate failed
    """
    builder = DoubleCrossBuilder(a, h, actions, name=name or f"{a.name}⋈{h.name}", check=certify, verbose=verbose)
    return builder.build()
