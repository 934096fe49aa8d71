"""
Generalised quantum double Ω(A)^op⋈Ω(H) of a Hopf pairing ⟨,⟩: H⊗A -> k

The opposite algebra of Ω(A) is materialised (reversed relations), the
mutual actions come from the pairing, and the double cross product builder
does the rest. The double acts on Ω(H) from the right:

    ξ◁a = Σ ξ1 ⟨ξ2, a⟩                      a a generator of A other than d(b)
    ξ◁η = Σ (-1)^{|η1||ξ|} (Sη1) ξ η2        η in Ω(H)

and on d(a) through the forced formula of a differentiable action.
"""
from typing import Dict, Mapping, Optional

from src.constructions.common import sign
from src.constructions.double_cross import DoubleCrossBuilder
from src.freealg import Element
from src.pairing import PairingActions, PairingSpec, verify_pairing_axioms
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.presentation import HopfDGA, opposite, opposite_element


def opposite_with_inverse_antipode(
    a: HopfDGA,
    inverse_antipode: Optional[Mapping[str, Element]] = None,
) -> HopfDGA:
    """
    Ω(A)^op with antipode S⁻¹

    Args:
        a: Source algebra (must have an antipode)
        inverse_antipode: S⁻¹ on generators, written in Ω(A); defaults to S,
            which is right only when S² = id (verify_hopf flags misuse)

    Returns:
        The opposite algebra, antipode written in opposite words
    """
    table = dict(inverse_antipode) if inverse_antipode is not None else dict(a.antipode_table or {})
    antipode = {k: opposite_element(v, a.alphabet) for k, v in table.items()}
    return opposite(a, antipode=antipode)


class GeneralizedDoubleBuilder(DoubleCrossBuilder):
    kind = "generalised double"

    def __init__(self, a_op: HopfDGA, h: HopfDGA, p: PairingSpec, **kwargs):
        super().__init__(a_op, h, PairingActions(p, a_op, opposite=True), **kwargs)
        self.pairing = p

    def preconditions(self, context: VerificationContext):
        verify_pairing_axioms(self.pairing, context=context)
        super().preconditions(context)

    def emit_artefacts(self, h: HopfDGA):
        h.artefacts["action"] = canonical_double_action(self.right, h, self.pairing)
        h.artefacts["opposite"] = self.left


def _differential_of(letter: str, names) -> bool:
    return letter.startswith("d(") and letter.endswith(")") and letter[2:-1] in names


def canonical_double_action(h: HopfDGA, double: HopfDGA, p: PairingSpec) -> RightAction:
    """Right action of the double on Ω(H): coregular on A, adjoint on H"""
    a_letters = set(p.right.alphabet.names())

    def value(xi: str, letter: str) -> Optional[Element]:
        if letter in a_letters:
            if double.alphabet[letter].degree and _differential_of(letter, a_letters):
                return None
            total = Element.zero()
            for (x1, x2), c in h.coproduct_word((xi,)).terms.items():
                if h.degree(x2):
                    continue
                pairing = p.evaluate_words(x2, (letter,))
                if not pairing.is_zero():
                    total = total + Element.word(*x1).scale(c * pairing)
            return total
        xi_degree = h.alphabet[xi].degree
        total = Element.zero()
        for (e1, e2), c in h.coproduct_word((letter,)).terms.items():
            term = h.product([h.antipode_word(e1), Element.word(xi), Element.word(*e2)])
            total = total + term.scale(c * sign(h.degree(e1) * xi_degree))
        return total

    return RightAction(h, double, default=value, name="◁D")


def generalized_double(
    a: HopfDGA,
    h: HopfDGA,
    p: PairingSpec,
    inverse_antipode: Optional[Dict[str, Element]] = None,
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Build Ω(D(A,H)) = Ω(A)^op⋈Ω(H)

    Args:
        a: Ω(A), the right argument of the pairing
        h: Ω(H), the left argument of the pairing; needs an antipode
        p: Hopf pairing with p.left = h and p.right = a
        inverse_antipode: S⁻¹ of A on generators, written in Ω(A)
        name: Display name
        certify: Verify the pairing, the induced actions and the result
        verbose: Print the build steps

    Returns:
        The double; artefacts["action"] is its right action on Ω(H)

    Raises:
        ConfigurationError: h has no antipode
        ConstructionRefusedError: a precondition or the certificate failed
    """
    a_op = opposite_with_inverse_antipode(a, inverse_antipode)
    builder = GeneralizedDoubleBuilder(
        a_op, h, p, name=name or f"D({a.name},{h.name})", check=certify, verbose=verbose
    )
    return builder.build()
