"""
Super double cross coproduct Ω(H)▸◂Ω(A)

The algebra is the super tensor product (H-words left of A-words); the
coalgebra is twisted by mutual coactions α: A -> A⊗H and β: H -> A⊗H:

    Δ(η⊗ω) = Σ (-1)^{|ω1||η2|} η1 ⊗ α(ω1)β(η2) ⊗ ω2

so that Δη = Σ η1 β(η2)^A ⊗ β(η2)^H and Δω = Σ α(ω1)^A ⊗ α(ω1)^H ω2.
"""
from typing import Dict, Optional

from src.constructions.common import CrossProductBuilder, sign
from src.freealg import Element
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension, verify_coaction_differentiable
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement, TensorSystem


class CodoubleBuilder(CrossProductBuilder):
    """
    Args:
        h: Ω(H), the left tensor factor
        a: Ω(A), the right tensor factor
        alpha: α on generators of A (right H-coaction)
        beta: β on generators of H (left A-coaction)
        antipode: Antipode overrides on generators; the factor antipodes
            are used where absent
    """

    kind = "double cross coproduct"

    def __init__(
        self,
        h: HopfDGA,
        a: HopfDGA,
        alpha: Dict[str, TensorElement],
        beta: Dict[str, TensorElement],
        antipode: Optional[Dict[str, Element]] = None,
        **kwargs,
    ):
        super().__init__(h, a, **kwargs)
        self.alpha_table = dict(alpha)
        self.beta_table = dict(beta)
        self.alpha = differentiable_extension(a, h, self.alpha_table, "right", "α")
        self.beta = differentiable_extension(h, a, self.beta_table, "left", "β")
        self.antipode = dict(antipode or {})

    def cross_value(self, eta: str, tau: str) -> Element:
        odd = self.right.alphabet[eta].degree * self.left.alphabet[tau].degree % 2
        return Element.word(tau, eta, coeff=-1 if odd else 1)

    def preconditions(self, context: VerificationContext):
        h, a = self.left, self.right
        verify_coaction_differentiable(a, self.alpha_table, h, "right", "α", context=context)
        verify_coaction_differentiable(h, self.beta_table, a, "left", "β", context=context)
        # α(ω)β(η) = (-1)^{|ω||η|} β(η)α(ω) in A⊗H
        square = TensorSystem([a.system, h.system])
        for omega in a.alphabet:
            if omega.degree > 1:
                continue
            for eta in h.alphabet:
                if eta.degree > 1:
                    continue
                x = self.alpha.extend_word((omega.name,))
                y = self.beta.extend_word((eta.name,))
                diff = square.mul(x, y) - square.mul(y, x).scale(sign(omega.degree * eta.degree))
                diff = square.reduce(diff)
                self.record("codouble.coactions_commute", f"{omega.name}, {eta.name}", diff.is_zero(), diff)

    def coproduct_overrides(self) -> Dict[str, TensorElement]:
        h, a = self.left, self.right
        out = {}
        for eta in h.coproduct_table:
            terms = TensorElement.zero(2)
            for (h1, h2), c in h.coproduct_word((eta,)).terms.items():
                for (x, y), cb in self.beta.extend_word(h2).terms.items():
                    terms = terms + TensorElement.pure(h1 + x, y, coeff=c * cb)
            out[eta] = terms
        for omega in a.coproduct_table:
            terms = TensorElement.zero(2)
            for (a1, a2), c in a.coproduct_word((omega,)).terms.items():
                for (x, y), ca in self.alpha.extend_word(a1).terms.items():
                    terms = terms + TensorElement.pure(x, y + a2, coeff=c * ca)
            out[omega] = terms
        return out

    def antipode_overrides(self, total: HopfDGA) -> Dict[str, Element]:
        return self.antipode

    def emit_artefacts(self, total: HopfDGA):
        h, a = self.left, self.right
        left_table = {name: total.coproduct_letter(name) for name in h.coproduct_table}
        right_table = {name: total.coproduct_letter(name) for name in a.coproduct_table}
        total.artefacts["left_coaction_table"] = left_table
        total.artefacts["right_coaction_table"] = right_table
        total.artefacts["left_coaction"] = differentiable_extension(h, total, left_table, "left", "Δ_L")
        total.artefacts["right_coaction"] = differentiable_extension(a, total, right_table, "right", "Δ_R")


def double_cross_coproduct(
    h: HopfDGA,
    a: HopfDGA,
    alpha: Dict[str, TensorElement],
    beta: Dict[str, TensorElement],
    antipode: Optional[Dict[str, Element]] = None,
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω(H)▸◂Ω(A)

    Args:
        h: Left tensor factor
        a: Right tensor factor
        alpha: α: A -> A⊗H on generators
        beta: β: H -> A⊗H on generators
        antipode: Antipode of the result on generators where it differs
            from the factor antipodes
        name: Display name
        certify: Check the coaction conditions and certify the result
        verbose: Print the build steps

    Returns:
        The double cross coproduct with artefacts "left_coaction" (on Ω(H))
        and "right_coaction" (on Ω(A))
    """
    builder = CodoubleBuilder(
        h, a, alpha, beta, antipode, name=name or f"{h.name}▸◂{a.name}", check=certify, verbose=verbose
    )
    return builder.build()
