"""
Hopf pairings, skew pairings and coquasitriangular structures

Values are given on pairs of degree-0 generators and extended to words by
the multiplicativity laws of the declared convention:

    hopf                ⟨hg, a⟩ = ⟨h, a1⟩⟨g, a2⟩     ⟨h, ab⟩ = ⟨h1, a⟩⟨h2, b⟩
    skew / coquasitri.  σ(hg, a) = σ(h, a1)σ(g, a2)  σ(h, ab) = σ(h1, b)σ(h2, a)

Anything involving a word of form degree >= 1 pairs to zero.
"""
from typing import Any, Dict, Mapping, Optional, Tuple

from src.config import settings
from src.errors import ConfigurationError, PairingTableError
from src.freealg import Element, Word
from src.report import VerificationReport
from src.scalar import Scalar
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.hopf_check import normal_words
from src.structure.presentation import HopfDGA, opposite_element

CONVENTIONS = ("hopf", "skew", "coquasitriangular")


class PairingSpec:
    """
    A bilinear form between two Hopf exterior algebras

    Args:
        left: Left argument algebra
        right: Right argument algebra
        table: (left letter, right letter) -> value on degree-0 letters
        convention: One of CONVENTIONS
        inverse_table: Values of the convolution inverse on letters; needed
            for invertibility checks when the left side has no antipode
        name: Display name
    """

    def __init__(
        self,
        left: HopfDGA,
        right: HopfDGA,
        table: Mapping[Tuple[str, str], Any],
        convention: str = "hopf",
        inverse_table: Optional[Mapping[Tuple[str, str], Any]] = None,
        name: str = "⟨,⟩",
    ):
        if convention not in CONVENTIONS:
            raise ConfigurationError(f"unknown pairing convention {convention!r}")
        self.left = left
        self.right = right
        self.table: Dict[Tuple[str, str], Scalar] = {k: Scalar.of(v) for k, v in table.items()}
        self.convention = convention
        self.inverse_table = (
            {k: Scalar.of(v) for k, v in inverse_table.items()} if inverse_table is not None else None
        )
        self.name = name
        self._cache: Dict[Tuple[Word, Word, bool], Scalar] = {}

    @classmethod
    def trivial(cls, left: HopfDGA, right: HopfDGA, convention: str = "hopf") -> "PairingSpec":
        """⟨h, a⟩ = ε(h)ε(a)"""
        table = {}
        for g in left.alphabet:
            for a in right.alphabet:
                if g.degree == 0 and a.degree == 0:
                    table[(g.name, a.name)] = left.counit_word((g.name,)) * right.counit_word((a.name,))
        inverse = dict(table) if convention != "hopf" else None
        return cls(left, right, table, convention, inverse, name="ε⊗ε")

    def evaluate_words(self, hw: Word, aw: Word, inverse: bool = False) -> Scalar:
        key = (hw, aw, inverse)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self._evaluate(hw, aw, inverse)
        self._cache[key] = value
        return value

    def _evaluate(self, hw: Word, aw: Word, inverse: bool) -> Scalar:
        if self.left.degree(hw) or self.right.degree(aw):
            return Scalar.zero()
        if not hw:
            return self.right.counit_word(aw)
        if not aw:
            return self.left.counit_word(hw)
        if len(hw) == 1 and len(aw) == 1:
            return self._letter(hw[0], aw[0], inverse)
        if len(hw) > 1:
            # laws on the left argument: split through Δ of the right word
            head, rest = hw[:1], hw[1:]
            first, second = (rest, head) if inverse else (head, rest)
            total = Scalar.zero()
            for (a1, a2), c in self.right.coproduct_word(aw).terms.items():
                x = self.evaluate_words(first, a1, inverse)
                if x.is_zero():
                    continue
                total = total + c * x * self.evaluate_words(second, a2, inverse)
            return total
        head, rest = aw[:1], aw[1:]
        # hopf: ⟨h, ab⟩ = ⟨h1, a⟩⟨h2, b⟩; skew: σ(h, ab) = σ(h1, b)σ(h2, a)
        swapped = self.convention != "hopf"
        if inverse:
            swapped = not swapped
        first, second = (rest, head) if swapped else (head, rest)
        total = Scalar.zero()
        for (h1, h2), c in self.left.coproduct_word(hw).terms.items():
            x = self.evaluate_words(h1, first, inverse)
            if x.is_zero():
                continue
            total = total + c * x * self.evaluate_words(h2, second, inverse)
        return total

    def _letter(self, h: str, a: str, inverse: bool) -> Scalar:
        if not inverse:
            if (h, a) not in self.table:
                raise PairingTableError(h, a)
            return self.table[(h, a)]
        if self.inverse_table is not None:
            if (h, a) not in self.inverse_table:
                raise PairingTableError(h, a)
            return self.inverse_table[(h, a)]
        if not self.left.has_antipode:
            raise ConfigurationError(f"{self.name}: inverse needs an inverse table or an antipode")
        return self.evaluate(self.left.antipode_word((h,)), Element.word(a))

    def evaluate(self, eta: Element, omega: Element) -> Scalar:
        total = Scalar.zero()
        for hw, hc in eta.terms.items():
            for aw, ac in omega.terms.items():
                value = self.evaluate_words(hw, aw)
                if not value.is_zero():
                    total = total + hc * ac * value
        return total

    def evaluate_inverse(self, eta: Element, omega: Element) -> Scalar:
        total = Scalar.zero()
        for hw, hc in eta.terms.items():
            for aw, ac in omega.terms.items():
                value = self.evaluate_words(hw, aw, inverse=True)
                if not value.is_zero():
                    total = total + hc * ac * value
        return total


def evaluate_pairing(p: PairingSpec, eta: Element, omega: Element) -> Scalar:
    """
    Evaluate a pairing on arbitrary elements

    Args:
        p: Pairing specification
        eta: Element of the left algebra
        omega: Element of the right algebra

    Returns:
        The value; zero whenever only degree >= 1 words are involved

    Raises:
        PairingTableError: a needed pair of degree-0 letters has no value
    """
    return p.evaluate(eta, omega)


class PairingCheck(BaseCheck):
    """Well-definedness, convolution invertibility and quantum commutativity"""

    def __init__(self, max_length: int = 3):
        super().__init__(name="PairingCheck")
        self.max_length = max_length

    def execute(self, context: VerificationContext, p: PairingSpec) -> VerificationReport:
        left, right = p.left, p.right
        left_words = [w for w in normal_words(left, self.max_length) if left.degree(w) == 0]
        right_words = [w for w in normal_words(right, self.max_length) if right.degree(w) == 0]
        self.log_action(context, "start", f"{len(left_words)}x{len(right_words)} words")

        for rel in left.system.relations():
            if any(left.degree(w) for w in rel.terms):
                continue
            for aw in right_words:
                value = p.evaluate(rel, Element.word(*aw))
                self.record(context, "pairing.well_defined", f"({rel}, {'*'.join(aw)})", value.is_zero(), Element.scalar(value))
        for rel in right.system.relations():
            if any(right.degree(w) for w in rel.terms):
                continue
            for hw in left_words:
                value = p.evaluate(Element.word(*hw), rel)
                self.record(context, "pairing.well_defined", f"({'*'.join(hw)}, {rel})", value.is_zero(), Element.scalar(value))

        can_invert = p.inverse_table is not None or left.has_antipode
        for g in left.alphabet:
            if g.degree:
                continue
            for a in right.alphabet:
                if a.degree:
                    continue
                if can_invert:
                    value = _convolution(p, (g.name,), (a.name,))
                    expected = left.counit_word((g.name,)) * right.counit_word((a.name,))
                    diff = value - expected
                    self.record(context, "pairing.convolution", f"({g.name}, {a.name})", diff.is_zero(), Element.scalar(diff))
                if p.convention == "coquasitriangular" and p.left is p.right:
                    diff = quantum_commutator(p, (g.name,), (a.name,))
                    self.record(context, "pairing.quantum_commutativity", f"({g.name}, {a.name})", diff.is_zero(), diff)
        return context.report


def _convolution(p: PairingSpec, hw: Word, aw: Word) -> Scalar:
    """Σ σ(h1, a1) σ⁻¹(h2, a2)"""
    total = Scalar.zero()
    for (h1, h2), c in p.left.coproduct_word(hw).terms.items():
        for (a1, a2), c2 in p.right.coproduct_word(aw).terms.items():
            x = p.evaluate_words(h1, a1)
            if x.is_zero():
                continue
            total = total + c * c2 * x * p.evaluate_words(h2, a2, inverse=True)
    return total


def quantum_commutator(p: PairingSpec, aw: Word, bw: Word) -> Element:
    """a1 b1 ℛ(b2, a2) - ℛ(b1, a1) b2 a2 for ℛ on A⊗A"""
    h = p.left
    da, db = h.coproduct_word(aw), h.coproduct_word(bw)
    total = Element.zero()
    for (a1, a2), ca in da.terms.items():
        for (b1, b2), cb in db.terms.items():
            r = p.evaluate_words(b2, a2)
            if not r.is_zero():
                total = total + h.mul(Element.word(*a1), Element.word(*b1)).scale(ca * cb * r)
            r = p.evaluate_words(b1, a1)
            if not r.is_zero():
                total = total - h.mul(Element.word(*b2), Element.word(*a2)).scale(ca * cb * r)
    return h.reduce(total)


def verify_pairing_axioms(
    p: PairingSpec,
    degree_bound: Optional[int] = None,
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """
    Check a pairing against both presentations

    Args:
        p: Pairing specification
        degree_bound: Longest words paired against relations (at most 3 by default)
        context: Shared context

    Returns:
        Report with "pairing.*" records
    """
    bound = min(degree_bound or settings.degree_bound, 3)
    return PairingCheck(bound).run(f"{p.name}: {p.left.name} x {p.right.name}", p, context=context)


def verify_super_coquasitriangular(
    h: HopfDGA,
    r: PairingSpec,
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """
    ℛ(η1, ω1) η2 ω2 = (-1)^{|η||ω|} ω1 η1 ℛ(η2, ω2) on all generator pairs

    ℛ is extended by zero to degree >= 1.
    """
    context = context or VerificationContext(subject=f"super coquasitriangular {h.name}")
    for eta in h.alphabet:
        for omega in h.alphabet:
            de = h.coproduct_word((eta.name,))
            do = h.coproduct_word((omega.name,))
            sign = -1 if eta.degree * omega.degree % 2 else 1
            total = Element.zero()
            for (e1, e2), ce in de.terms.items():
                for (o1, o2), co in do.terms.items():
                    x = r.evaluate_words(e1, o1)
                    if not x.is_zero():
                        total = total + h.mul(Element.word(*e2), Element.word(*o2)).scale(ce * co * x)
                    y = r.evaluate_words(e2, o2)
                    if not y.is_zero():
                        total = total - h.mul(Element.word(*o1), Element.word(*e1)).scale(ce * co * y * sign)
            diff = h.reduce(total)
            context.report.add("pairing.super_coquasitriangular", f"({eta.name}, {omega.name})", diff.is_zero(), diff)
    return context.report


class PairingActions:
    """
    Mutual actions induced by a Hopf pairing ⟨,⟩: Ω(H)⊗Ω(A) -> k

        h◁a = h2 ⟨Sh1, a1⟩⟨h3, a2⟩        (an element of Ω(H))
        h▷a = a2 ⟨Sh1, a1⟩⟨h2, a3⟩        (an element of Ω(A))

    With opposite=True the A-side words are words of the opposite algebra
    and are converted on the way in and out.
    """

    def __init__(self, p: PairingSpec, a_side: HopfDGA, opposite: bool = True):
        if not p.left.has_antipode:
            raise ConfigurationError(f"{p.left.name} needs an antipode for induced actions")
        self.p = p
        self.h = p.left
        self.a = a_side
        self.opposite = opposite
        self._left: Dict[Tuple[Word, Word], Element] = {}
        self._right: Dict[Tuple[Word, Word], Element] = {}

    def _to_a(self, aw: Word) -> Element:
        e = Element.word(*aw)
        return opposite_element(e, self.p.right.alphabet) if self.opposite else e

    def _from_a(self, e: Element) -> Element:
        return opposite_element(e, self.p.right.alphabet) if self.opposite else e

    def right(self, hw: Word, aw: Word) -> Element:
        key = (hw, aw)
        cached = self._right.get(key)
        if cached is not None:
            return cached
        h, p = self.h, self.p
        a_elem = self._to_a(aw)
        total = Element.zero()
        triple = h.coproduct_iterated(Element.word(*hw), 3)
        delta_a = p.right.coproduct(a_elem)
        for (h1, h2, h3), c in triple.terms.items():
            if h.degree(h1) or h.degree(h3):
                continue
            s1 = h.antipode_word(h1)
            for (a1, a2), ca in delta_a.terms.items():
                x = p.evaluate(s1, Element.word(*a1))
                if x.is_zero():
                    continue
                y = p.evaluate_words(h3, a2)
                if y.is_zero():
                    continue
                total = total + Element.word(*h2).scale(c * ca * x * y)
        result = h.reduce(total)
        self._right[key] = result
        return result

    def left(self, hw: Word, aw: Word) -> Element:
        key = (hw, aw)
        cached = self._left.get(key)
        if cached is not None:
            return cached
        h, p = self.h, self.p
        a_elem = self._to_a(aw)
        triple = p.right.coproduct_iterated(a_elem, 3)
        total = Element.zero()
        for (h1, h2), c in h.coproduct_word(hw).terms.items():
            if h.degree(h1) or h.degree(h2):
                continue
            s1 = h.antipode_word(h1)
            for (a1, a2, a3), ca in triple.terms.items():
                x = p.evaluate(s1, Element.word(*a1))
                if x.is_zero():
                    continue
                y = p.evaluate_words(h2, a3)
                if y.is_zero():
                    continue
                total = total + Element.word(*a2).scale(c * ca * x * y)
        result = self.a.reduce(self._from_a(total))
        self._left[key] = result
        return result


def pairing_induced_actions(p: PairingSpec, a_side: Optional[HopfDGA] = None, opposite: bool = True) -> PairingActions:
    """
    Actions of Ω(H) and Ω(A) on each other induced by a pairing

    Args:
        p: Hopf pairing with H on the left and A on the right
        a_side: Algebra the A-side results live in (the opposite algebra for
            the generalised double)
        opposite: A-side words are words of the opposite algebra

    Returns:
        Action provider usable by the double cross product builder
    """
    return PairingActions(p, a_side or p.right, opposite=opposite)
