"""
Differentiable coactions

A right coaction Δ_R: B -> B⊗A given on degree-0 generators extends to the
exterior algebras by the forced formula
    Δ_R*(db) = (d⊗id + (-1)^{|.|} id⊗d) Δ_R(b),
and the coaction is differentiable iff that extension is well defined on
every relation of Ω(B). Left coactions B -> A⊗B are handled symmetrically.
"""
from typing import Dict, Optional, Tuple

from src.freealg import Element
from src.report import VerificationReport
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.maps import MapSpec, extend_map
from src.structure.presentation import DGAPresentation, HopfDGA
from src.tensoralg import (
    TensorElement,
    TensorSystem,
    component,
    contract_slot,
    expand_slot,
    graded_map_apply,
)


def differentiable_extension(
    b: DGAPresentation,
    a: HopfDGA,
    table: Dict[str, TensorElement],
    side: str = "right",
    name: str = "Δ_R*",
) -> MapSpec:
    """
    The coaction extended to differential letters by the forced formula

    Args:
        b: Coacted exterior algebra
        a: Coacting Hopf exterior algebra
        table: Generator -> coaction image (any degree; d(x) letters optional)
        side: "right" for B -> B⊗A, "left" for A -> A⊗B order
        name: Map name for diagnostics

    Returns:
        Coaction MapSpec into the tensor system of the two factors
    """
    systems = [b.system, a.system] if side == "right" else [a.system, b.system]
    target = TensorSystem(systems)
    d_maps = [(0, b.d_word, 1), (1, a.d_word, 1)] if side == "right" else [(0, a.d_word, 1), (1, b.d_word, 1)]
    spec = MapSpec("coaction", b, target, dict(table), name=name)

    def forced(letter: str) -> Optional[TensorElement]:
        if letter.startswith("d(") and letter.endswith(")") and letter[2:-1] in b.alphabet:
            base = spec.extend_word((letter[2:-1],))
            return graded_map_apply(d_maps, base, target)
        return None

    spec.default = forced
    return spec


class CoactionCheck(BaseCheck):
    """Checks that a coaction is differentiable"""

    def __init__(self, side: str = "right"):
        super().__init__(name="CoactionCheck")
        self.side = side
        self.extended: Optional[MapSpec] = None

    def execute(
        self,
        context: VerificationContext,
        b: DGAPresentation,
        table: Dict[str, TensorElement],
        a: HopfDGA,
        name: str = "Δ_R*",
    ) -> VerificationReport:
        spec = differentiable_extension(b, a, table, self.side, name)
        self.extended = spec
        right = self.side == "right"
        own, other = (0, 1) if right else (1, 0)
        self.log_action(context, "start", f"{name} on {b.name} over {a.name}")

        for rel in b.system.relations():
            image = extend_map(spec, rel)
            degree = max(b.degree(w) for w in rel.terms)
            self.record(context, "coaction.well_defined", f"[deg {degree}] {rel}", image.is_zero(), image)

        rank3 = TensorSystem(
            [b.system, a.system, a.system] if right else [a.system, a.system, b.system]
        )
        for g in b.alphabet:
            w = (g.name,)
            delta = spec.extend_word(w)
            # (Δ_R⊗id)Δ_R = (id⊗Δ_A)Δ_R, mirrored for left coactions
            if right:
                lhs = expand_slot(delta, 0, spec.extend_word)
                rhs = expand_slot(delta, 1, a.coproduct_word)
            else:
                lhs = expand_slot(delta, 1, spec.extend_word)
                rhs = expand_slot(delta, 0, a.coproduct_word)
            diff = rank3.reduce(lhs - rhs)
            self.record(context, "coaction.coassociativity", g.name, diff.is_zero(), diff)

            value = contract_slot(delta, other, a.counit_word).to_element()
            diff = b.reduce(value - Element.word(g.name))
            self.record(context, "coaction.counit", g.name, diff.is_zero(), diff)

            base = g.name[2:-1] if g.name.startswith("d(") and g.name.endswith(")") else None
            if base is not None and base in b.alphabet:
                degrees = [0, 0]
                degrees[own] = g.degree
                outer = component(delta, degrees, spec.target)
                expected = _slot_d(spec.extend_word((base,)), own, b, spec.target)
                diff = outer - expected
                self.record(context, "coaction.compatibility", g.name, diff.is_zero(), diff)
        return context.report


def _slot_d(t: TensorElement, slot: int, b: DGAPresentation, system: TensorSystem) -> TensorElement:
    sign_parity = 1 if slot == 1 else 0
    return graded_map_apply([(slot, b.d_word, sign_parity)], t, system)


def verify_coaction_differentiable(
    b: DGAPresentation,
    table: Dict[str, TensorElement],
    a: HopfDGA,
    side: str = "right",
    name: str = "Δ_R*",
    context: Optional[VerificationContext] = None,
) -> Tuple[VerificationReport, MapSpec]:
    """
    Extend a coaction to the exterior algebras and certify it

    Args:
        b: Coacted exterior algebra; all its relations are checked, including
            the degree-2 ones of a maximal prolongation
        table: Coaction on generators (degree-0 generators at least)
        a: Coacting Hopf exterior algebra
        side: "right" or "left"
        name: Map name
        context: Shared context

    Returns:
        (report, extended coaction)
    """
    check = CoactionCheck(side)
    report = check.run(f"{name} on {b.name}", b, table, a, name, context=context)
    return report, check.extended


def coaction_from_matrix(b_letters, a_letters) -> Dict[str, TensorElement]:
    """Δ_R x_i = Σ_j x_j ⊗ t^j_i for a vector of letters and a matrix of letters"""
    table = {}
    for i, x in enumerate(b_letters):
        table[x] = TensorElement(
            2, {((b_letters[j],), (a_letters[j][i],)): 1 for j in range(len(b_letters))}
        )
    return table

