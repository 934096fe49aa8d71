"""
Super bosonisation Ω(A)⋉Ω(B) of a braided exterior algebra

Ω(B) is a braided super Hopf algebra in right crossed modules over Ω(A):
a right action ◁ and a right coaction Δ_R. The bosonisation has

    η·τ = Σ (-1)^{|η||τ1|} τ1 (η◁τ2)
    Δη  = Σ η̲1^(0) ⊗ η̲1^(1) η̲2
    Sη  = Σ S̲(η^(0)) S_A(η^(1))

for η in Ω(B), τ in Ω(A).
"""
from typing import Dict, Optional

from src.constructions.braiding import braided_coproduct_map
from src.constructions.common import CrossProductBuilder, sign
from src.freealg import Element
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension, verify_coaction_differentiable
from src.structure.crossed_module import verify_crossed_module
from src.structure.maps import MapSpec, verify_well_defined
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement


class BosonisationBuilder(CrossProductBuilder):
    """
    Args:
        a: Ω(A), the left factor
        b: Ω(B) carrying the braided coproduct, counit and antipode tables
        action: Right action of Ω(A) on Ω(B)
        coaction: Right coaction of A on B on generators (d-letters forced)
    """

    kind = "bosonisation"

    def __init__(self, a: HopfDGA, b: HopfDGA, action: RightAction, coaction: Dict[str, TensorElement], **kwargs):
        super().__init__(a, b, **kwargs)
        self.action = action
        self.coaction_table = dict(coaction)
        self.coaction: MapSpec = differentiable_extension(b, a, self.coaction_table, "right", "Δ_R")
        self.braided: MapSpec = braided_coproduct_map(b, b.coproduct_table, action, self.coaction)

    def cross_value(self, eta: str, tau: str) -> Element:
        a = self.left
        eta_degree = self.right.alphabet[eta].degree
        total = Element.zero()
        for (t1, t2), c in a.coproduct_word((tau,)).terms.items():
            moved = self.action.act_words((eta,), t2)
            if moved.is_zero():
                continue
            total = total + (Element.word(*t1) * moved).scale(c * sign(eta_degree * a.degree(t1)))
        return total

    def preconditions(self, context: VerificationContext):
        verify_crossed_module(self.action, self.coaction, context=context)
        verify_coaction_differentiable(self.right, self.coaction_table, self.left, context=context)
        verify_well_defined(self.braided, report=context.report, check="bosonisation.braided_coproduct")

    def coproduct_overrides(self) -> Dict[str, TensorElement]:
        out = {}
        for eta in self.right.coproduct_table:
            terms = TensorElement.zero(2)
            for (b1, b2), c in self.braided.extend_word((eta,)).terms.items():
                for (x0, x1), cx in self.coaction.extend_word(b1).terms.items():
                    terms = terms + TensorElement.pure(x0, x1 + b2, coeff=c * cx)
            out[eta] = terms
        return out

    def antipode_overrides(self, h: HopfDGA) -> Dict[str, Element]:
        b, a = self.right, self.left
        if not b.has_antipode or not a.has_antipode:
            return {}
        out = {}
        for eta in b.antipode_table:
            total = Element.zero()
            for (x0, x1), c in self.coaction.extend_word((eta,)).terms.items():
                total = total + h.mul(b.antipode_word(x0), a.antipode_word(x1)).scale(c)
            out[eta] = h.reduce(total)
        return out

    def emit_artefacts(self, h: HopfDGA):
        table = {g.name: h.coproduct_letter(g.name) for g in self.right.alphabet if g.name in self.right.coproduct_table}
        h.artefacts["coaction_table"] = table
        h.artefacts["coaction"] = differentiable_extension(self.right, h, table, "right", "Δ_R")
        h.artefacts["braided_coproduct"] = self.braided


def bosonisation(
    a: HopfDGA,
    b: HopfDGA,
    action: RightAction,
    coaction: Dict[str, TensorElement],
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω(A)⋉Ω(B)

    Args:
        a: Acting and coacting Hopf exterior algebra
        b: Braided exterior algebra; its coproduct table holds the braided
            coproduct Δ̲ and its antipode table the braided antipode S̲
        action: Right action of Ω(A) on Ω(B)
        coaction: Δ_R on generators of B (into B⊗A)
        name: Display name
        certify: Check the crossed-module data and certify the result
        verbose: Print the build steps

    Returns:
        The bosonisation; artefacts["coaction"] is its coaction on Ω(B)

    Raises:
        ConstructionRefusedError: a precondition or the certificate failed
    """
    builder = BosonisationBuilder(
        a, b, action, coaction, name=name or f"{a.name}⋉{b.name}", check=certify, verbose=verbose
    )
    return builder.build()
