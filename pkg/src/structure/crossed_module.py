"""
Super crossed modules

A right A-crossed module V carries a right action and a right coaction with
Δ_R(v◁a) = (-1)^{|v1|(|a1|+|a2|) + |a1||a2|} v0◁a2 ⊗ (Sa1) v1 a3
for Δ_R v = v0⊗v1 and (Δ⊗id)Δa = a1⊗a2⊗a3.
"""
from typing import Optional

from src.errors import ConfigurationError
from src.freealg import Element
from src.report import VerificationReport
from src.structure.actions import RightAction
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.maps import MapSpec, extend_map
from src.tensoralg import TensorElement


class CrossedModuleCheck(BaseCheck):
    """Checks the crossed-module compatibility on generator pairs"""

    def __init__(self, max_degree: int = 1):
        super().__init__(name="CrossedModuleCheck")
        self.max_degree = max_degree

    def execute(self, context: VerificationContext, action: RightAction, coaction: MapSpec) -> VerificationReport:
        v_alg, a_alg = action.module, action.acting
        if not a_alg.has_antipode:
            raise ConfigurationError(f"crossed-module check needs the antipode of {a_alg.name}")
        target = coaction.target
        self.log_action(context, "start", f"{v_alg.name} over {a_alg.name}")

        for v in v_alg.alphabet:
            if v.degree > self.max_degree:
                continue
            v_image = coaction.extend_word((v.name,))
            for a in a_alg.alphabet:
                if a.degree > self.max_degree:
                    continue
                lhs = extend_map(coaction, action.act_words((v.name,), (a.name,)))
                rhs = self._twisted(action, v_image, (a.name,), target)
                diff = lhs - rhs
                self.record(context, "crossed_module", f"{v.name}◁{a.name}", diff.is_zero(), diff)
        return context.report

    @staticmethod
    def _twisted(action: RightAction, v_image: TensorElement, aw, target) -> TensorElement:
        a_alg = action.acting
        total = TensorElement.zero(2)
        triple = a_alg.coproduct_iterated(Element.word(*aw), 3)
        for (v0, v1), cv in v_image.terms.items():
            dv1 = a_alg.degree(v1)
            for (a1, a2, a3), ca in triple.terms.items():
                d1, d2 = a_alg.degree(a1), a_alg.degree(a2)
                sign = (dv1 * (d1 + d2) + d1 * d2) % 2
                left = action.act_words(v0, a2)
                if left.is_zero():
                    continue
                right = a_alg.product([a_alg.antipode_word(a1), Element.word(*v1), Element.word(*a3)])
                term = TensorElement.tensor(left, right).scale(cv * ca)
                total = total + (-term if sign else term)
        return target.reduce(total)


def verify_crossed_module(
    action: RightAction,
    coaction: MapSpec,
    context: Optional[VerificationContext] = None,
    max_degree: int = 1,
) -> VerificationReport:
    """
    Crossed-module condition on all generator pairs up to max_degree

    Raises:
        ConfigurationError: the acting algebra has no antipode
    """
    subject = f"crossed module {action.module.name} over {action.acting.name}"
    return CrossedModuleCheck(max_degree).run(subject, action, coaction, context=context)
