"""
Super tensor product of two strongly bicovariant exterior algebras
"""
from typing import Optional

from src.constructions.common import CrossProductBuilder
from src.freealg import Element
from src.structure.presentation import HopfDGA


class SuperTensorBuilder(CrossProductBuilder):
    """η·τ = (-1)^{|η||τ|} τ·η, tensor coproduct, d = d_A⊗id + (-1)^{|.|} id⊗d_H"""

    kind = "super tensor"

    def cross_value(self, eta: str, tau: str) -> Element:
        odd = self.right.alphabet[eta].degree * self.left.alphabet[tau].degree % 2
        return Element.word(tau, eta, coeff=-1 if odd else 1)


def super_tensor_dga(
    a: HopfDGA,
    h: HopfDGA,
    name: Optional[str] = None,
    certify: bool = True,
    verbose: Optional[bool] = None,
) -> HopfDGA:
    """
    Ω(A)⊗Ω(H) with graded-commuting factors

    Args:
        a: Left factor
        h: Right factor
        name: Display name
        certify: Verify the result (DGA, Hopf, confluence)
        verbose: Print the build steps

    Returns:
        The tensor product HopfDGA

    Raises:
        NameCollisionError: a and h share a generator name
    """
    return SuperTensorBuilder(a, h, name or f"{a.name}⊗{h.name}", check=certify, verbose=verbose).build()
