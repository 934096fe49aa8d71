"""
Presented differential graded algebras and super Hopf algebras

A DGAPresentation carries generators, relations and the differential on
generators. HopfDGA adds coproduct, counit and (optionally) antipode tables.
Every structure map is extended from generators on demand and memoized per
word; results are always in normal form.
"""
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from src.errors import ConfigurationError, MissingAssignmentError
from src.freealg import Alphabet, Element, RewriteSystem, Word, differential_name
from src.scalar import Scalar
from src.tensoralg import (
    TensorElement,
    TensorSystem,
    as_tensor,
    expand_slot,
    graded_map_apply,
)


def koszul_reversal_sign(word: Word, alphabet: Alphabet) -> int:
    """Sign of reversing a word of graded letters: prod_{i<j} (-1)^{|x_i||x_j|}"""
    odd = [alphabet[x].degree % 2 for x in word]
    count = 0
    seen = 0
    for parity in odd:
        if parity:
            count += seen
            seen += 1
    return -1 if count % 2 else 1


class DGAPresentation:
    """
    Finitely presented graded algebra with a differential

    Args:
        name: Display name
        alphabet: All generators, including differential letters "d(x)"
        relations: Relations as elements equal to zero
        differential: Explicit d on generators; a generator x without an
            entry maps to its letter d(x) when declared, and d(d(x)) = 0
        maximal_prolongation: Degree-2 relations are the maximal
            prolongation of the degree-1 ones
        system: Prebuilt rewrite system (oriented from relations otherwise)
    """

    def __init__(
        self,
        name: str,
        alphabet: Alphabet,
        relations: Iterable[Element] = (),
        differential: Optional[Mapping[str, Element]] = None,
        maximal_prolongation: bool = False,
        top_degree: Optional[int] = None,
        system: Optional[RewriteSystem] = None,
        budget: Optional[int] = None,
    ):
        self.name = name
        self.alphabet = alphabet
        self.relations: List[Element] = list(relations)
        self.differential: Dict[str, Element] = dict(differential or {})
        self.maximal_prolongation = maximal_prolongation
        self.top_degree = top_degree
        self.system = system or RewriteSystem.from_relations(alphabet, self.relations, budget=budget)
        self._d_cache: Dict[Word, Element] = {}
        # Side products of a construction: canonical (co)actions, certificates
        self.artefacts: Dict[str, Any] = {}

    # Algebra surface
    def one(self) -> Element:
        return Element.one()

    def zero(self) -> Element:
        return Element.zero()

    def word(self, *letters: str) -> Element:
        return Element.word(*letters)

    def reduce(self, e: Element) -> Element:
        return self.system.normal_form(e)

    def mul(self, a: Element, b: Element) -> Element:
        return self.system.normal_form(a * b)

    def product(self, factors: Iterable[Element]) -> Element:
        return self.system.product(factors)

    def equal(self, a: Element, b: Element) -> bool:
        return self.reduce(a - b).is_zero()

    def degree(self, word: Word) -> int:
        return self.alphabet.degree(word)

    def generators(self, degree: Optional[int] = None) -> List[str]:
        return [g.name for g in self.alphabet if degree is None or g.degree == degree]

    def relations_of_degree(self, degree: int) -> List[Element]:
        return [r for r in self.relations if max(self.degree(w) for w in r.terms) == degree]

    # Differential
    def d_letter(self, name: str) -> Element:
        """d on one generator, unreduced"""
        if name in self.differential:
            return self.differential[name]
        dname = differential_name(name)
        if dname in self.alphabet:
            return Element.word(dname)
        if name.startswith("d(") and name.endswith(")") and name[2:-1] in self.alphabet:
            return Element.zero()
        raise MissingAssignmentError(name, "d")

    def d_word(self, word: Word) -> Element:
        cached = self._d_cache.get(word)
        if cached is not None:
            return cached
        total = Element.zero()
        degree = 0
        for i, x in enumerate(word):
            image = self.d_letter(x)
            if not image.is_zero():
                term = Element.word(*word[:i]) * image * Element.word(*word[i + 1:])
                total = total + (term if degree % 2 == 0 else -term)
            degree += self.alphabet[x].degree
        cached = self.reduce(total)
        self._d_cache[word] = cached
        return cached

    def d(self, e: Element) -> Element:
        """Graded Leibniz extension of d, in normal form"""
        return Element.sum(self.d_word(w).scale(c) for w, c in e.terms.items())

    def describe(self) -> str:
        lines = [f"{self.name}: {len(self.alphabet)} generators, {len(self.system)} rules"]
        for rule in self.system.rules:
            lines.append(f"  {rule}")
        return "\n".join(lines)


class HopfDGA(DGAPresentation):
    """
    Exterior algebra that is a super Hopf algebra

    Args:
        coproduct: Generator -> rank-2 tensor; d(x) letters default to the
            coderivation image of Delta(x)
        counit: Degree-0 generator -> Scalar; degree >= 1 generators map to 0
        antipode: Generator -> element; d(x) letters default to d(S x)
    """

    def __init__(
        self,
        name: str,
        alphabet: Alphabet,
        relations: Iterable[Element] = (),
        differential: Optional[Mapping[str, Element]] = None,
        coproduct: Optional[Mapping[str, TensorElement]] = None,
        counit: Optional[Mapping[str, Any]] = None,
        antipode: Optional[Mapping[str, Element]] = None,
        **kwargs,
    ):
        super().__init__(name, alphabet, relations, differential, **kwargs)
        self.coproduct_table: Dict[str, TensorElement] = dict(coproduct or {})
        self.counit_table: Dict[str, Scalar] = {k: Scalar.of(v) for k, v in (counit or {}).items()}
        self.antipode_table: Optional[Dict[str, Element]] = (
            dict(antipode) if antipode is not None else None
        )
        self.tensor2 = TensorSystem.power(self.system, 2)
        self._delta_cache: Dict[Word, TensorElement] = {}
        self._antipode_cache: Dict[Word, Element] = {}
        self._iterated_cache: Dict[Tuple[Word, int], TensorElement] = {}

    @classmethod
    def from_presentation(cls, p: DGAPresentation, **tables) -> "HopfDGA":
        return cls(
            p.name,
            p.alphabet,
            p.relations,
            p.differential,
            maximal_prolongation=p.maximal_prolongation,
            top_degree=p.top_degree,
            system=p.system,
            **tables,
        )

    @property
    def has_antipode(self) -> bool:
        return self.antipode_table is not None

    def tensor_system(self, rank: int) -> TensorSystem:
        return TensorSystem.power(self.system, rank)

    # Coproduct
    def coproduct_letter(self, name: str) -> TensorElement:
        if name in self.coproduct_table:
            return self.coproduct_table[name]
        if name.startswith("d(") and name.endswith(")") and name[2:-1] in self.alphabet:
            base = self.coproduct_letter(name[2:-1])
            return graded_map_apply(
                [(0, self.d_word, 1), (1, self.d_word, 1)], base, self.tensor2
            )
        raise MissingAssignmentError(name, "coproduct")

    def coproduct_word(self, word: Word) -> TensorElement:
        cached = self._delta_cache.get(word)
        if cached is None:
            cached = self.tensor2.product(self.coproduct_letter(x) for x in word)
            self._delta_cache[word] = cached
        return cached

    def coproduct(self, e: Element) -> TensorElement:
        total = TensorElement.zero(2)
        for w, c in e.terms.items():
            total = total + self.coproduct_word(w).scale(c)
        return total

    def coproduct_iterated(self, e: Element, rank: int) -> TensorElement:
        """(Delta ⊗ id ⊗ ...)...Delta, expanding the left slot"""
        total = TensorElement.zero(rank)
        for w, c in e.terms.items():
            total = total + self._iterated_word(w, rank).scale(c)
        return total

    def _iterated_word(self, word: Word, rank: int) -> TensorElement:
        if rank == 1:
            return as_tensor(Element.word(*word))
        key = (word, rank)
        cached = self._iterated_cache.get(key)
        if cached is None:
            lower = self._iterated_word(word, rank - 1)
            cached = self.tensor_system(rank).reduce(expand_slot(lower, 0, self.coproduct_word))
            self._iterated_cache[key] = cached
        return cached

    # Counit
    def counit_word(self, word: Word) -> Scalar:
        value = Scalar.one()
        for x in word:
            if self.alphabet[x].degree > 0:
                return Scalar.zero()
            if x not in self.counit_table:
                raise MissingAssignmentError(x, "counit")
            value = value * self.counit_table[x]
        return value

    def counit(self, e: Element) -> Scalar:
        total = Scalar.zero()
        for w, c in e.terms.items():
            total = total + c * self.counit_word(w)
        return total

    # Antipode
    def antipode_letter(self, name: str) -> Element:
        if self.antipode_table is None:
            raise ConfigurationError(f"{self.name} has no antipode")
        if name in self.antipode_table:
            return self.antipode_table[name]
        if name.startswith("d(") and name.endswith(")") and name[2:-1] in self.alphabet:
            return self.d(self.antipode(Element.word(name[2:-1])))
        raise MissingAssignmentError(name, "antipode")

    def antipode_word(self, word: Word) -> Element:
        cached = self._antipode_cache.get(word)
        if cached is None:
            images = [self.antipode_letter(x) for x in reversed(word)]
            cached = self.product(images).scale(koszul_reversal_sign(word, self.alphabet))
            self._antipode_cache[word] = cached
        return cached

    def antipode(self, e: Element) -> Element:
        return Element.sum(self.antipode_word(w).scale(c) for w, c in e.terms.items())


def opposite_element(e: Element, alphabet: Alphabet) -> Element:
    """Rewrite an element of A as an element of A^op (reversed words, Koszul sign)"""
    return Element(
        {tuple(reversed(w)): c * koszul_reversal_sign(w, alphabet) for w, c in e.terms.items()}
    )


def opposite_tensor(t: TensorElement, alphabet: Alphabet) -> TensorElement:
    return TensorElement(
        t.rank,
        {
            tuple(tuple(reversed(w)) for w in slots): c
            * _product_sign(koszul_reversal_sign(w, alphabet) for w in slots)
            for slots, c in t.terms.items()
        },
    )


def _product_sign(signs: Iterable[int]) -> int:
    out = 1
    for s in signs:
        out *= s
    return out


def opposite(h: HopfDGA, antipode: Optional[Mapping[str, Element]] = None, name: Optional[str] = None) -> HopfDGA:
    """
    The opposite exterior algebra with the same coalgebra and differential

    Args:
        h: Source Hopf exterior algebra
        antipode: Antipode of the opposite algebra (the inverse of the
            original antipode), written in opposite words
        name: Display name

    Returns:
        HopfDGA on the same generators with reversed relations
    """
    alphabet = h.alphabet
    return HopfDGA(
        name or f"{h.name}^op",
        alphabet.copy(),
        [opposite_element(r, alphabet) for r in h.relations],
        {k: opposite_element(v, alphabet) for k, v in h.differential.items()},
        coproduct={k: opposite_tensor(v, alphabet) for k, v in h.coproduct_table.items()},
        counit=h.counit_table,
        antipode=antipode,
        maximal_prolongation=h.maximal_prolongation,
    )
