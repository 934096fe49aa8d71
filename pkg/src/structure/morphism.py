"""
Morphisms of exterior algebras and Hopf exterior algebras
"""
from typing import Optional

from src.freealg import Element
from src.report import VerificationReport
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.maps import MapSpec, extend_map, verify_well_defined
from src.structure.presentation import DGAPresentation, HopfDGA
from src.tensoralg import TensorElement


class MorphismCheck(BaseCheck):
    """Relations go to zero, d commutes, and Δ and ε intertwine when both sides are Hopf"""

    def __init__(self):
        super().__init__(name="MorphismCheck")

    def execute(
        self,
        context: VerificationContext,
        src: DGAPresentation,
        tgt: DGAPresentation,
        genmap: MapSpec,
    ) -> VerificationReport:
        self.log_action(context, "start", f"{genmap.name}: {src.name} -> {tgt.name}")
        verify_well_defined(genmap, src, context.report, check="morphism.well_defined")

        hopf = isinstance(src, HopfDGA) and isinstance(tgt, HopfDGA)
        for g in src.alphabet:
            x = Element.word(g.name)
            image = extend_map(genmap, x)
            diff = tgt.reduce(extend_map(genmap, src.d(x)) - tgt.d(image))
            self.record(context, "morphism.d", g.name, diff.is_zero(), diff)
            if not hopf:
                continue
            mapped = TensorElement.zero(2)
            for (w1, w2), c in src.coproduct_word((g.name,)).terms.items():
                left = genmap.extend_word(w1)
                right = genmap.extend_word(w2)
                mapped = mapped + TensorElement.tensor(left, right).scale(c)
            delta_diff = tgt.tensor2.reduce(tgt.coproduct(image) - mapped)
            self.record(context, "morphism.coproduct", g.name, delta_diff.is_zero(), delta_diff)
            eps = tgt.counit(image) - src.counit_word((g.name,))
            self.record(context, "morphism.counit", g.name, eps.is_zero(), Element.scalar(eps))
        return context.report


def verify_morphism(
    src: DGAPresentation,
    tgt: DGAPresentation,
    genmap: MapSpec,
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """
    Check that a generator map is a morphism of (Hopf) exterior algebras

    Args:
        src: Source presentation
        tgt: Target presentation
        genmap: Algebra map on every generator of src (differential letters
            included)
        context: Shared context

    Returns:
        Report with "morphism.*" records
    """
    return MorphismCheck().run(f"{genmap.name}: {src.name} -> {tgt.name}", src, tgt, genmap, context=context)
