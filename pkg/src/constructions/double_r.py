"""
The double A⋈_ℛA of a coquasitriangular exterior algebra

Ω′(A) (letters s) stands left of Ω(A) (letters t); the two copies may carry
different calculi. ℛ: A⊗A′ -> k is extended by zero to forms:

    η·τ = (-1)^{|η||τ|} Σ ℛ⁻¹(η1, τ1) ℛ(η3, τ3) τ2 η2
"""
from typing import Optional

from src.constructions.common import CrossProductBuilder, sign
from src.freealg import Element
from src.pairing import PairingSpec, verify_pairing_axioms
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.presentation import HopfDGA


class DoubleRBuilder(CrossProductBuilder):
    kind = "double by ℛ"

    def __init__(self, a_prime: HopfDGA, a: HopfDGA, r: PairingSpec, pairing_bound: int = 2, **kwargs):
        super().__init__(a_prime, a, **kwargs)
        self.r = r
        self.pairing_bound = pairing_bound

    def cross_value(self, eta: str, tau: str) -> Element:
        a_prime, a = self.left, self.right
        total = Element.zero()
        eta3 = a.coproduct_iterated(Element.word(eta), 3)
        tau3 = a_prime.coproduct_iterated(Element.word(tau), 3)
        for (e1, e2, e3), ce in eta3.terms.items():
            for (t1, t2, t3), ct in tau3.terms.items():
                inner = self.r.evaluate_words(e1, t1, inverse=True)
                if inner.is_zero():
                    continue
                outer = self.r.evaluate_words(e3, t3)
                if outer.is_zero():
                    continue
                total = total + (Element.word(*t2) * Element.word(*e2)).scale(ce * ct * inner * outer)
        return total.scale(sign(a.alphabet[eta].degree * a_prime.alphabet[tau].degree))

    def preconditions(self, context: VerificationContext):
        verify_pairing_axioms(self.r, degree_bound=self.pairing_bound, context=context)

    def emit_artefacts(self, h: HopfDGA):
        h.artefacts["action"] = canonical_r_action(self.right, h, self.r)


def canonical_r_action(a: HopfDGA, double: HopfDGA, r: PairingSpec) -> RightAction:
    """
    Right action of A⋈_ℛA on Ω(A)

        ξ◁s = Σ ξ1 ℛ(ξ2, s)               s a degree-0 letter of A′
        ξ◁η = Σ (-1)^{|η1||ξ|} (Sη1) ξ η2   η in Ω(A)

    d-letters of A′ act through the forced formula.
    """
    prime_letters = set(r.right.alphabet.names())

    def value(xi: str, letter: str) -> Optional[Element]:
        if letter in prime_letters:
            if double.alphabet[letter].degree:
                return None
            total = Element.zero()
            for (x1, x2), c in a.coproduct_word((xi,)).terms.items():
                weight = r.evaluate_words(x2, (letter,))
                if not weight.is_zero():
                    total = total + Element.word(*x1).scale(c * weight)
            return total
        xi_degree = a.alphabet[xi].degree
        total = Element.zero()
        for (e1, e2), c in a.coproduct_word((letter,)).terms.items():
            term = a.product([a.antipode_word(e1), Element.word(xi), Element.word(*e2)])
            total = total + term.scale(c * sign(a.degree(e1) * xi_degree))
        return total

    return RightAction(a, double, default=value, name="◁ℛ")


def double_R(
    a_prime: HopfDGA,
    a: HopfDGA,
    r: PairingSpec,
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω′(A)⋈_ℛΩ(A)

    Args:
        a_prime: The left copy (its calculus may differ from a's)
        a: The right copy
        r: Coquasitriangular form with r.left = a and r.right = a_prime
        name: Display name
        certify: Verify ℛ and the result
        verbose: Print the build steps

    Returns:
        The double; artefacts["action"] is its right action on Ω(A)
    """
    builder = DoubleRBuilder(
        a_prime, a, r, name=name or f"{a_prime.name}⋈ℛ{a.name}", check=certify, verbose=verbose
    )
    return builder.build()
