"""
Super bicrossproduct Ω(A)▸◁Ω(H)

Ω(H) acts on Ω(A) from the left (▷) and Ω(A) coacts on Ω(H) from the right
(β(η) = η^(0)⊗η^(1)):

    η·τ = Σ (-1)^{|η2||τ|} (η1▷τ) η2
    Δη  = Σ η1^(0) ⊗ η1^(1) η2
    Sη  = Σ S_H(η^(0)) S_A(η^(1))

β is not multiplicative; on words it follows
    β(ηξ) = Σ (-1)^{(|η1^(1)|+|η2|)|ξ^(0)|} η1^(0)ξ^(0) ⊗ η1^(1)(η2▷ξ^(1)).
"""
from typing import Dict, Optional

from src.constructions.common import CrossProductBuilder, sign
from src.freealg import Element, Word
from src.structure.action_check import verify_action_differentiable
from src.structure.actions import LeftAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement, TensorSystem, contract_slot


class BicrossCoaction:
    """β: Ω(H) -> Ω(H)⊗Ω(A) on words, through the bicrossproduct recursion"""

    def __init__(self, h: HopfDGA, a: HopfDGA, action: LeftAction, table: Dict[str, TensorElement]):
        self.h = h
        self.a = a
        self.action = action
        self.letters = differentiable_extension(h, a, table, "right", "β")
        self.target = TensorSystem([h.system, a.system])
        self._cache: Dict[Word, TensorElement] = {}

    def word(self, word: Word) -> TensorElement:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        if not word:
            result = self.target.one()
        elif len(word) == 1:
            result = self.letters.extend_word(word)
        else:
            result = self._split(word[:1], word[1:])
        self._cache[word] = result
        return result

    def _split(self, head: Word, rest: Word) -> TensorElement:
        h, a = self.h, self.a
        tail = self.word(rest)
        total = TensorElement.zero(2)
        for (h1, h2), c in h.coproduct_word(head).terms.items():
            for (x0, x1), cx in self.word(h1).terms.items():
                for (y0, y1), cy in tail.terms.items():
                    moved = self.action.act_words(h2, y1)
                    if moved.is_zero():
                        continue
                    s = sign((a.degree(x1) + h.degree(h2)) * h.degree(y0))
                    second = a.mul(Element.word(*x1), moved)
                    first = Element.word(*(x0 + y0))
                    total = total + TensorElement.tensor(first, second).scale(c * cx * cy * s)
        return self.target.reduce(total)

    def apply(self, e: Element) -> TensorElement:
        total = TensorElement.zero(2)
        for w, c in e.terms.items():
            total = total + self.word(w).scale(c)
        return total


class BicrossBuilder(CrossProductBuilder):
    """
    Args:
        a: Ω(A), the left factor (acted on)
        h: Ω(H), the right factor (coacted on)
        action: Left action of Ω(H) on Ω(A)
        coaction: β on generators of H (d-letters forced)
    """

    kind = "bicrossproduct"

    def __init__(self, a: HopfDGA, h: HopfDGA, action: LeftAction, coaction: Dict[str, TensorElement], **kwargs):
        super().__init__(a, h, **kwargs)
        self.action = action
        self.coaction_table = dict(coaction)
        self.beta = BicrossCoaction(h, a, action, self.coaction_table)

    def cross_value(self, eta: str, tau: str) -> Element:
        h = self.right
        tau_degree = self.left.alphabet[tau].degree
        total = Element.zero()
        for (h1, h2), c in h.coproduct_word((eta,)).terms.items():
            moved = self.action.act_words(h1, (tau,))
            if moved.is_zero():
                continue
            total = total + (moved * Element.word(*h2)).scale(c * sign(h.degree(h2) * tau_degree))
        return total

    def preconditions(self, context: VerificationContext):
        a, h = self.left, self.right
        verify_action_differentiable(self.action, context=context)
        for rel in h.system.relations():
            image = self.beta.target.reduce(self.beta.apply(rel))
            self.record("bicross.coaction_well_defined", str(rel), image.is_zero(), image)
        for g in h.alphabet:
            value = contract_slot(self.beta.word((g.name,)), 1, a.counit_word).to_element()
            diff = h.reduce(value - Element.word(g.name))
            self.record("bicross.coaction_counit", g.name, diff.is_zero(), diff)
        # Δ(η▷τ) = Σ (η1^(0)▷τ1) ⊗ η1^(1)(η2▷τ2) on degree-0 letters
        for eta in h.generators(0):
            for tau in a.generators(0):
                lhs = a.coproduct(self.action.act_words((eta,), (tau,)))
                rhs = TensorElement.zero(2)
                for (h1, h2), c in h.coproduct_word((eta,)).terms.items():
                    for (x0, x1), cx in self.beta.word(h1).terms.items():
                        for (t1, t2), ct in a.coproduct_word((tau,)).terms.items():
                            first = self.action.act_words(x0, t1)
                            if first.is_zero():
                                continue
                            second = a.mul(Element.word(*x1), self.action.act_words(h2, t2))
                            rhs = rhs + TensorElement.tensor(first, second).scale(c * cx * ct)
                diff = a.tensor2.reduce(lhs - rhs)
                self.record("bicross.module_coalgebra", f"{eta}▷{tau}", diff.is_zero(), diff)

    def coproduct_overrides(self) -> Dict[str, TensorElement]:
        out = {}
        h = self.right
        for eta in h.coproduct_table:
            terms = TensorElement.zero(2)
            for (h1, h2), c in h.coproduct_word((eta,)).terms.items():
                for (x0, x1), cx in self.beta.word(h1).terms.items():
                    terms = terms + TensorElement.pure(x0, x1 + h2, coeff=c * cx)
            out[eta] = terms
        return out

    def antipode_overrides(self, h_total: HopfDGA) -> Dict[str, Element]:
        a, h = self.left, self.right
        if not a.has_antipode or not h.has_antipode:
            return {}
        out = {}
        for eta in h.antipode_table:
            total = Element.zero()
            for (x0, x1), c in self.beta.word((eta,)).terms.items():
                total = total + (h.antipode_word(x0) * a.antipode_word(x1)).scale(c)
            out[eta] = h_total.reduce(total)
        return out

    def emit_artefacts(self, h_total: HopfDGA):
        h = self.right
        table = {name: h_total.coproduct_letter(name) for name in h.coproduct_table}
        h_total.artefacts["coaction_table"] = table
        h_total.artefacts["coaction"] = differentiable_extension(h, h_total, table, "right", "Δ_R")
        h_total.artefacts["beta"] = self.beta


def bicrossproduct(
    a: HopfDGA,
    h: HopfDGA,
    action: LeftAction,
    coaction: Dict[str, TensorElement],
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω(A)▸◁Ω(H)

    Args:
        a: Ω(A), a left Ω(H)-module algebra
        h: Ω(H), a right A-comodule coalgebra
        action: Left action ▷ of Ω(H) on Ω(A)
        coaction: β on generators of H, into H⊗A
        name: Display name
        certify: Check the bicrossproduct conditions and certify the result
        verbose: Print the build steps

    Returns:
        The bicrossproduct; artefacts["coaction"] is its coaction on Ω(H)

    Raises:
        ConstructionRefusedError: a condition or the certificate failed
    """
    builder = BicrossBuilder(a, h, action, coaction, name=name or f"{a.name}▸◁{h.name}", check=certify, verbose=verbose)
    return builder.build()
