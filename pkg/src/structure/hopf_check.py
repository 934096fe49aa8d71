"""
Super Hopf algebra axioms for exterior algebras

Coassociativity, counit, antipode and coderivation identities are checked on
generators: both sides of each identity extend along algebra maps, so
agreement on generators together with well-definedness gives agreement
everywhere. Paranoid mode repeats coassociativity and counit on every normal
word up to the degree bound.
"""
from typing import Iterator, Optional

from src.freealg import Element, Word
from src.report import VerificationReport
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.presentation import HopfDGA
from src.tensoralg import (
    TensorElement,
    contract_slot,
    expand_slot,
    graded_map_apply,
)


def normal_words(h, max_length: int) -> Iterator[Word]:
    """Irreducible words of 1..max_length letters, shortest first"""
    names = h.alphabet.names()
    frontier = [()]
    for _ in range(max_length):
        nxt = []
        for prefix in frontier:
            for x in names:
                w = prefix + (x,)
                if h.system.is_irreducible(w):
                    nxt.append(w)
                    yield w
        frontier = nxt


class HopfCheck(BaseCheck):
    """Checks the super Hopf algebra axioms and the super-coderivation property"""

    def __init__(self, paranoid: bool = False):
        super().__init__(name="HopfCheck")
        self.paranoid = paranoid

    def execute(self, context: VerificationContext, h: HopfDGA) -> VerificationReport:
        self.log_action(context, "start", f"{h.name}: antipode={'yes' if h.has_antipode else 'no'}")
        self.check_well_defined(context, h)
        for g in h.alphabet:
            w = (g.name,)
            self.check_bidegree(context, h, w)
            self.check_coassociative(context, h, w)
            self.check_counit(context, h, w)
            if h.has_antipode:
                self.check_antipode(context, h, w)
            self.check_coderivation(context, h, w)
        if self.paranoid:
            self.log_action(context, "paranoid", f"words up to {context.degree_bound} letters")
            for w in normal_words(h, context.degree_bound):
                if len(w) > 1:
                    self.check_coassociative(context, h, w, check="hopf.paranoid.coassociativity")
                    self.check_counit(context, h, w, check="hopf.paranoid.counit")
        return context.report

    def check_well_defined(self, context: VerificationContext, h: HopfDGA):
        for rel in h.system.relations():
            subject = str(rel)
            image = h.coproduct(rel)
            self.record(context, "hopf.well_defined", subject, image.is_zero(), image)
            value = h.counit(rel)
            self.record(context, "hopf.counit_well_defined", subject, value.is_zero(), Element.scalar(value))
            if h.has_antipode:
                s = h.antipode(rel)
                self.record(context, "hopf.antipode_well_defined", subject, s.is_zero(), s)

    def check_bidegree(self, context: VerificationContext, h: HopfDGA, w: Word):
        image = h.coproduct_word(w)
        degree = h.degree(w)
        wrong = {s: c for s, c in image.terms.items() if sum(h.tensor2.degrees(s)) != degree}
        self.record(context, "hopf.bidegree", w[0], not wrong, TensorElement(2, wrong))

    def check_coassociative(self, context: VerificationContext, h: HopfDGA, w: Word, check: str = "hopf.coassociativity"):
        delta = h.coproduct_word(w)
        t3 = h.tensor_system(3)
        left = t3.reduce(expand_slot(delta, 0, h.coproduct_word))
        right = t3.reduce(expand_slot(delta, 1, h.coproduct_word))
        diff = left - right
        self.record(context, check, "*".join(w), diff.is_zero(), diff)

    def check_counit(self, context: VerificationContext, h: HopfDGA, w: Word, check: str = "hopf.counit"):
        delta = h.coproduct_word(w)
        target = h.reduce(Element.word(*w))
        for slot, side in ((0, "left"), (1, "right")):
            value = contract_slot(delta, slot, h.counit_word).to_element()
            diff = h.reduce(value - target)
            self.record(context, check, f"{'*'.join(w)} ({side})", diff.is_zero(), diff)

    def check_antipode(self, context: VerificationContext, h: HopfDGA, w: Word):
        delta = h.coproduct_word(w)
        unit = Element.one().scale(h.counit_word(w))
        left = Element.sum(
            h.mul(h.antipode_word(a), Element.word(*b)).scale(c) for (a, b), c in delta.terms.items()
        )
        right = Element.sum(
            h.mul(Element.word(*a), h.antipode_word(b)).scale(c) for (a, b), c in delta.terms.items()
        )
        for side, value in (("S*id", left), ("id*S", right)):
            diff = h.reduce(value - unit)
            self.record(context, "hopf.antipode", f"{w[0]} ({side})", diff.is_zero(), diff)

    def check_coderivation(self, context: VerificationContext, h: HopfDGA, w: Word):
        forced = graded_map_apply(
            [(0, h.d_word, 1), (1, h.d_word, 1)], h.coproduct_word(w), h.tensor2
        )
        actual = h.coproduct(h.d(Element.word(*w)))
        diff = actual - forced
        self.record(context, "hopf.coderivation", w[0], diff.is_zero(), diff)


def verify_hopf(
    h: HopfDGA,
    context: Optional[VerificationContext] = None,
    paranoid: bool = False,
) -> VerificationReport:
    """
    Super Hopf algebra axioms with d a super-coderivation

    Args:
        h: Hopf exterior algebra
        context: Shared context (a fresh one otherwise)
        paranoid: Also check every normal word up to the context's degree bound

    Returns:
        Report with "hopf.*" records
    """
    return HopfCheck(paranoid=paranoid).run(h.name, h, context=context)


def tensor_of_maps(t: TensorElement, maps, system) -> TensorElement:
    """(f1 ⊗ f2 ⊗ ...)(t) for even maps fi: Word -> Element, slotwise reduced"""
    total = TensorElement.zero(len(maps))
    for slots, c in t.terms.items():
        pieces = [fn(w) for fn, w in zip(maps, slots)]
        total = total + TensorElement.tensor(*pieces).scale(c)
    return system.reduce(total)
