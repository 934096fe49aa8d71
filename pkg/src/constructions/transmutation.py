"""
Transmutation of a coquasitriangular exterior algebra

Ω(A) with ℛ extended by zero becomes a braided exterior algebra Ω(A̲) on the
same coalgebra and differential, with the product

    ω∙η = Σ ω2 η2 ℛ((Sω1)ω3, Sη1)

The braided algebra is re-presented on renamed generators: every linear
dependency among ∙-products of at most two generators becomes a relation.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.config import settings
from src.errors import ConfigurationError
from src.freealg import Alphabet, Element, Word, differential_name
from src.pairing import PairingSpec
from src.scalar import LinearSystem, Scalar, solve_linear
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement


class BraidedProduct:
    """ω∙η on Ω(A), memoized per word pair"""

    def __init__(self, a: HopfDGA, r: PairingSpec):
        if not a.has_antipode:
            raise ConfigurationError(f"transmutation needs the antipode of {a.name}")
        self.a = a
        self.r = r
        self._cache: Dict[Tuple[Word, Word], Element] = {}

    def words(self, ow: Word, ew: Word) -> Element:
        key = (ow, ew)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        a, r = self.a, self.r
        total = Element.zero()
        triple = a.coproduct_iterated(Element.word(*ow), 3)
        pair = a.coproduct_word(ew)
        for (o1, o2, o3), co in triple.terms.items():
            if a.degree(o1) or a.degree(o3):
                continue
            left = a.mul(a.antipode_word(o1), Element.word(*o3))
            for (e1, e2), ce in pair.terms.items():
                if a.degree(e1):
                    continue
                weight = r.evaluate(left, a.antipode_word(e1))
                if weight.is_zero():
                    continue
                total = total + (Element.word(*o2) * Element.word(*e2)).scale(co * ce * weight)
        result = a.reduce(total)
        self._cache[key] = result
        return result

    def __call__(self, omega: Element, eta: Element) -> Element:
        total = Element.zero()
        for ow, oc in omega.terms.items():
            for ew, ec in eta.terms.items():
                total = total + self.words(ow, ew).scale(oc * ec)
        return total


@dataclass
class TransmutedAlgebra:
    """
    The braided algebra Ω(A̲) on renamed generators

    Attributes:
        source: Ω(A)
        presentation: HopfDGA on the renamed letters; its coproduct table is
            the braided coproduct (the coalgebra of A, renamed)
        rename: Source letter -> braided letter
        bullet: The braided product on Ω(A)
        coaction: Adjoint coaction Δ_R u = u2 ⊗ (S u1) u3 into B⊗A
    """

    source: HopfDGA
    presentation: HopfDGA
    rename: Dict[str, str]
    bullet: BraidedProduct
    coaction: Dict[str, TensorElement] = field(default_factory=dict)

    @property
    def back(self) -> Dict[str, str]:
        return {v: k for k, v in self.rename.items()}

    def realize(self, e: Element) -> Element:
        """A braided element as an element of Ω(A): words become iterated ∙-products"""
        back = self.back
        total = Element.zero()
        for w, c in e.terms.items():
            value = Element.one()
            for x in w:
                value = self.bullet(value, Element.word(back[x]))
            total = total + value.scale(c)
        return self.source.reduce(total)


def _renamed_alphabet(a: HopfDGA, rename: Dict[str, str]) -> Alphabet:
    alphabet = Alphabet()
    for g in a.alphabet:
        if g.name in rename:
            alphabet.add(rename[g.name], g.degree, g.precedence, g.weight)
    return alphabet


def _full_rename(a: HopfDGA, letters: Dict[str, str]) -> Dict[str, str]:
    rename = dict(letters)
    for x, u in letters.items():
        dx = differential_name(x)
        if dx in a.alphabet:
            rename[dx] = differential_name(u)
    return rename


def transmuted_relations(
    bullet: BraidedProduct,
    letters: List[str],
    rename: Dict[str, str],
    degree: int,
) -> List[Element]:
    """
    Kernel of the ∙-products of at most two letters, per total form degree

    Args:
        bullet: Braided product
        letters: Source letters taking part
        rename: Source -> braided names
        degree: Highest total form degree of the products considered

    Returns:
        Relations in the braided letters
    """
    a = bullet.a
    relations: List[Element] = []
    for k in range(degree + 1):
        candidates: Dict[str, Tuple[Word, Element]] = {}
        if k == 0:
            candidates["1"] = ((), Element.one())
        for x in letters:
            if a.alphabet[x].degree == k:
                candidates[rename[x]] = ((rename[x],), a.reduce(Element.word(x)))
        for x in letters:
            for y in letters:
                if a.alphabet[x].degree + a.alphabet[y].degree != k:
                    continue
                candidates[f"{rename[x]}*{rename[y]}"] = ((rename[x], rename[y]), bullet.words((x,), (y,)))
        system = LinearSystem(unknowns=list(candidates))
        basis = sorted({w for _, value in candidates.values() for w in value.terms}, key=a.alphabet.key)
        for w in basis:
            system.add_equation(
                {name: value.coefficient(w) for name, (_, value) in candidates.items()},
                0,
                label=str(Element.word(*w)),
            )
        solution = solve_linear(system)
        for free in solution.free:
            combination = {candidates[free][0]: Scalar.one()}
            for pivot, deps in solution.dependencies.items():
                if free in deps:
                    combination[candidates[pivot][0]] = deps[free]
            rel = Element(combination)
            if not rel.is_zero():
                relations.append(rel)
    return relations


def transmute(
    a: HopfDGA,
    r: PairingSpec,
    letters: Optional[Dict[str, str]] = None,
    degree: Optional[int] = None,
    name: Optional[str] = None,
) -> TransmutedAlgebra:
    """
    Braided exterior algebra Ω(A̲) of a coquasitriangular Ω(A)

    Args:
        a: Ω(A) with an antipode
        r: ℛ on A⊗A, extended by zero to forms
        letters: Degree-0 source letters -> braided names; their
            differentials follow. Defaults to every degree-0 letter with a
            "u" prefix
        degree: Highest total form degree of the emitted relations
        name: Display name

    Returns:
        TransmutedAlgebra with its presentation, braided coproduct and
        adjoint coaction

    Raises:
        ConfigurationError: a has no antipode
    """
    degree = settings.transmute_degree if degree is None else degree
    letters = letters or {x: f"u{x}" for x in a.generators(0)}
    rename = _full_rename(a, letters)
    bullet = BraidedProduct(a, r)
    relations = transmuted_relations(bullet, list(rename), rename, degree)

    coproduct = {}
    counit = {}
    coaction = {}
    for x, u in rename.items():
        if a.alphabet[x].degree == 0:
            coproduct[u] = TensorElement(
                2,
                {tuple(tuple(rename[y] for y in w) for w in slots): c for slots, c in a.coproduct_word((x,)).terms.items()},
            )
            counit[u] = a.counit_word((x,))
        adjoint = TensorElement.zero(2)
        for (x1, x2, x3), c in a.coproduct_iterated(Element.word(x), 3).terms.items():
            right = a.mul(a.antipode_word(x1), Element.word(*x3))
            if right.is_zero():
                continue
            moved = TensorElement.tensor(Element.word(*(rename[y] for y in x2)), right)
            odd = a.degree(x1) * a.degree(x2) % 2
            adjoint = adjoint + moved.scale(-c if odd else c)
        coaction[u] = adjoint

    presentation = HopfDGA(
        name or f"{a.name} transmuted",
        _renamed_alphabet(a, rename),
        relations,
        coproduct=coproduct,
        counit=counit,
        maximal_prolongation=a.maximal_prolongation,
    )
    return TransmutedAlgebra(a, presentation, rename, bullet, coaction)
