"""
Maurer-Cartan forms, left invariance and inner exterior algebras
"""
from typing import Any, Optional, Union

from src.freealg import Element
from src.report import VerificationReport
from src.structure.base_check import VerificationContext
from src.structure.presentation import DGAPresentation, HopfDGA
from src.tensoralg import TensorElement, component


def maurer_cartan(h: HopfDGA, a: Union[str, Element]) -> Element:
    """ϖ(a) = (S a1) d a2, normal-formed"""
    x = Element.word(a) if isinstance(a, str) else a
    total = Element.zero()
    for (a1, a2), c in h.coproduct(x).terms.items():
        total = total + h.mul(h.antipode_word(a1), h.d_word(a2)).scale(c)
    return total


def verify_left_invariance(
    h: HopfDGA,
    form: Element,
    subject: str = "",
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """The (0, deg) component of Δ(form) must be 1⊗form"""
    context = context or VerificationContext(subject=f"left invariance in {h.name}")
    degree = max((h.degree(w) for w in form.terms), default=0)
    outer = component(h.coproduct(form), (0, degree), h.tensor2)
    expected = TensorElement.tensor(Element.one(), form)
    diff = h.tensor2.reduce(outer - expected)
    context.report.add("forms.left_invariance", subject or str(form), diff.is_zero(), diff)
    return context.report


def verify_inner(
    p: DGAPresentation,
    theta: Element,
    scale: Any = 1,
    context: Optional[VerificationContext] = None,
) -> VerificationReport:
    """
    d ω = scale·(θω - (-1)^{|ω|} ωθ) on every generator ω

    Args:
        p: Exterior algebra
        theta: Degree-1 element
        scale: Scalar in front of the graded commutator
        context: Shared context
    """
    context = context or VerificationContext(subject=f"inner form on {p.name}")
    for g in p.alphabet:
        w = Element.word(g.name)
        bracket = p.mul(theta, w) - p.mul(w, theta).scale(-1 if g.degree % 2 else 1)
        diff = p.reduce(p.d(w) - bracket.scale(scale))
        context.report.add("forms.inner", g.name, diff.is_zero(), diff)
    return context.report

