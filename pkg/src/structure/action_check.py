"""
Differentiable actions

An action of A on B given on generators is differentiable when its
extension, with the action of the differential letters of Ω(A) filled in
by the forced formula, makes Ω(B) an Ω(A)-supermodule algebra commuting
with d.
"""
from typing import Optional, Tuple, Union

from src.freealg import Element
from src.report import VerificationReport
from src.structure.actions import LeftAction, RightAction
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.maps import MapSpec

Action = Union[RightAction, LeftAction]


class ActionCheck(BaseCheck):
    """Well-definedness against both presentations plus d-compatibility"""

    def __init__(self):
        super().__init__(name="ActionCheck")

    def execute(self, context: VerificationContext, action: Action) -> VerificationReport:
        b, a = action.module, action.acting
        right = isinstance(action, RightAction)
        self.log_action(context, "start", f"{action.name}: {a.name} on {b.name}")

        def act(v: Element, x: Element) -> Element:
            return action.act(v, x) if right else action.act(x, v)

        b_letters = [Element.word(g.name) for g in b.alphabet]
        a_letters = [Element.word(g.name) for g in a.alphabet]

        for rel in b.system.relations():
            for x in a_letters:
                image = act(rel, x)
                self.record(context, "action.module_well_defined", f"({rel}) by {x}", image.is_zero(), image)

        for rel in a.system.relations():
            for v in b_letters:
                image = act(v, rel)
                self.record(context, "action.acting_well_defined", f"{v} by ({rel})", image.is_zero(), image)

        for v in b_letters:
            v_odd = b.degree(next(iter(v.terms))) % 2
            for x in a_letters:
                x_odd = a.degree(next(iter(x.terms))) % 2
                lhs = b.d(act(v, x))
                if right:
                    # d(v◁a) = (dv)◁a + (-1)^{|v|} v◁da
                    rhs = act(b.d(v), x)
                    tail = act(v, a.d(x))
                    rhs = rhs - tail if v_odd else rhs + tail
                else:
                    # d(h▷v) = (dh)▷v + (-1)^{|h|} h▷dv
                    rhs = act(v, a.d(x))
                    tail = act(b.d(v), x)
                    rhs = rhs - tail if x_odd else rhs + tail
                diff = b.reduce(lhs - rhs)
                self.record(context, "action.d_compatibility", f"{v}, {x}", diff.is_zero(), diff)
        return context.report


def verify_action_differentiable(
    action: Action,
    context: Optional[VerificationContext] = None,
) -> Tuple[VerificationReport, MapSpec]:
    """
    Certify a differentiable action

    Args:
        action: RightAction or LeftAction with its generator table; values on
            differential letters of the acting algebra are forced when absent
        context: Shared context

    Returns:
        (report, action MapSpec)
    """
    subject = f"{action.name} of {action.acting.name} on {action.module.name}"
    report = ActionCheck().run(subject, action, context=context)
    spec = MapSpec("action", action.module, action.module, name=action.name, action=action)
    return report, spec
