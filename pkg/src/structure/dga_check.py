"""
Differential graded algebra axioms: graded Leibniz rule and d² = 0
"""
from typing import Optional

from src.freealg import Element
from src.report import VerificationReport
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.presentation import DGAPresentation


class DGACheck(BaseCheck):
    """Checks that d descends to the quotient and squares to zero"""

    def __init__(self):
        super().__init__(name="DGACheck")

    def execute(self, context: VerificationContext, p: DGAPresentation) -> VerificationReport:
        self.log_action(context, "start", f"{p.name}: {len(p.system)} rules")

        for g in p.alphabet:
            image = p.d_letter(g.name)
            wrong = [w for w in image.terms if p.degree(w) != g.degree + 1]
            self.record(
                context,
                "dga.degree",
                g.name,
                not wrong,
                Element({w: image.terms[w] for w in wrong}),
            )

        for rel in p.system.relations():
            image = p.d(rel)
            self.record(context, "dga.leibniz", str(rel), image.is_zero(), image)

        for g in p.alphabet:
            image = p.d(p.d(Element.word(g.name)))
            self.record(context, "dga.d_squared", g.name, image.is_zero(), image)

        return context.report


def verify_dga(p: DGAPresentation, context: Optional[VerificationContext] = None) -> VerificationReport:
    """
    Graded Leibniz rule on every relation and d² = 0 on every generator

    Args:
        p: Presentation to check
        context: Shared context (a fresh one otherwise)

    Returns:
        Report with "dga.degree", "dga.leibniz" and "dga.d_squared" records
    """
    return DGACheck().run(p.name, p, context=context)
