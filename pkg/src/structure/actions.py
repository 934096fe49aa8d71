"""
Super module-algebra actions and matched pairs

Right actions satisfy (vw)◁a = (-1)^{|w||a1|}(v◁a1)(w◁a2) and
v◁(ab) = (v◁a)◁b. Left actions satisfy h▷(vw) = (-1)^{|h2||v|}(h1▷v)(h2▷w)
and (hg)▷v = h▷(g▷v). Values on generators come from a table; when the
acting letter is a differential d(x) missing from the table, the forced
formula of a differentiable action fills it in.
"""
from typing import Callable, Dict, Mapping, Optional, Tuple

from src.errors import MissingAssignmentError
from src.freealg import Element, Word
from src.structure.presentation import DGAPresentation, HopfDGA

LetterTable = Mapping[Tuple[str, str], Element]


def _base_of_differential(name: str, alphabet) -> Optional[str]:
    if name.startswith("d(") and name.endswith(")") and name[2:-1] in alphabet:
        return name[2:-1]
    return None


class RightAction:
    """
    Right action v◁a of a Hopf exterior algebra on an exterior algebra

    Args:
        module: The algebra acted upon
        acting: The acting Hopf exterior algebra
        table: (module letter, acting letter) -> Element of module
        forced: Derive v◁d(x) from the differentiability formula
        default: Fallback for letter pairs absent from the table
    """

    def __init__(
        self,
        module: DGAPresentation,
        acting: HopfDGA,
        table: Optional[LetterTable] = None,
        forced: bool = True,
        default: Optional[Callable[[str, str], Optional[Element]]] = None,
        name: str = "◁",
    ):
        self.module = module
        self.acting = acting
        self.table: Dict[Tuple[str, str], Element] = dict(table or {})
        self.forced = forced
        self.default = default
        self.name = name
        self._cache: Dict[Tuple[Word, Word], Element] = {}

    @classmethod
    def trivial(cls, module: DGAPresentation, acting: HopfDGA) -> "RightAction":
        """v◁a = ε(a) v"""
        return cls(
            module,
            acting,
            forced=False,
            default=lambda v, a: Element.word(v).scale(acting.counit_word((a,))),
            name="◁ε",
        )

    def act(self, v: Element, a: Element) -> Element:
        total = Element.zero()
        for vw, vc in v.terms.items():
            for aw, ac in a.terms.items():
                total = total + self.act_words(vw, aw).scale(vc * ac)
        return total

    def act_words(self, vw: Word, aw: Word) -> Element:
        key = (vw, aw)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if not aw:
            result = self.module.reduce(Element.word(*vw))
        elif len(aw) > 1:
            result = self.act(self.act_words(vw, aw[:1]), Element.word(*aw[1:]))
        elif not vw:
            result = Element.one().scale(self.acting.counit_word(aw))
        elif len(vw) == 1:
            result = self.module.reduce(self.letter(vw[0], aw[0]))
        else:
            result = self._split(vw, aw)
        self._cache[key] = result
        return result

    def _split(self, vw: Word, aw: Word) -> Element:
        head, rest = vw[:1], vw[1:]
        rest_degree = self.module.degree(rest)
        total = Element.zero()
        for (a1, a2), c in self.acting.coproduct_word(aw).terms.items():
            left = self.act_words(head, a1)
            if left.is_zero():
                continue
            right = self.act_words(rest, a2)
            term = self.module.mul(left, right).scale(c)
            if rest_degree * self.acting.degree(a1) % 2:
                term = -term
            total = total + term
        return total

    def letter(self, v: str, a: str) -> Element:
        if (v, a) in self.table:
            return self.table[(v, a)]
        if self.default is not None:
            value = self.default(v, a)
            if value is not None:
                return value
        base = _base_of_differential(a, self.acting.alphabet) if self.forced else None
        if base is not None:
            # η◁dx = (-1)^{|η|}(d(η◁x) - (dη)◁x)
            eta = Element.word(v)
            value = self.module.d(self.act_words((v,), (base,))) - self.act(
                self.module.d(eta), Element.word(base)
            )
            return -value if self.module.alphabet[v].degree % 2 else value
        raise MissingAssignmentError(f"{v}◁{a}", self.name)


class LeftAction:
    """
    Left action h▷v of a Hopf exterior algebra on an exterior algebra

    Args:
        module: The algebra acted upon
        acting: The acting Hopf exterior algebra
        table: (acting letter, module letter) -> Element of module
        forced: Derive d(x)▷v from the differentiability formula
    """

    def __init__(
        self,
        module: DGAPresentation,
        acting: HopfDGA,
        table: Optional[LetterTable] = None,
        forced: bool = True,
        default: Optional[Callable[[str, str], Optional[Element]]] = None,
        name: str = "▷",
    ):
        self.module = module
        self.acting = acting
        self.table: Dict[Tuple[str, str], Element] = dict(table or {})
        self.forced = forced
        self.default = default
        self.name = name
        self._cache: Dict[Tuple[Word, Word], Element] = {}

    @classmethod
    def trivial(cls, module: DGAPresentation, acting: HopfDGA) -> "LeftAction":
        return cls(
            module,
            acting,
            forced=False,
            default=lambda h, v: Element.word(v).scale(acting.counit_word((h,))),
            name="ε▷",
        )

    def act(self, h: Element, v: Element) -> Element:
        total = Element.zero()
        for hw, hc in h.terms.items():
            for vw, vc in v.terms.items():
                total = total + self.act_words(hw, vw).scale(hc * vc)
        return total

    def act_words(self, hw: Word, vw: Word) -> Element:
        key = (hw, vw)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if not hw:
            result = self.module.reduce(Element.word(*vw))
        elif len(hw) > 1:
            result = self.act(Element.word(*hw[:-1]), self.act_words(hw[-1:], vw))
        elif not vw:
            result = Element.one().scale(self.acting.counit_word(hw))
        elif len(vw) == 1:
            result = self.module.reduce(self.letter(hw[0], vw[0]))
        else:
            result = self._split(hw, vw)
        self._cache[key] = result
        return result

    def _split(self, hw: Word, vw: Word) -> Element:
        head, rest = vw[:1], vw[1:]
        head_degree = self.module.degree(head)
        total = Element.zero()
        for (h1, h2), c in self.acting.coproduct_word(hw).terms.items():
            left = self.act_words(h1, head)
            if left.is_zero():
                continue
            right = self.act_words(h2, rest)
            term = self.module.mul(left, right).scale(c)
            if head_degree * self.acting.degree(h2) % 2:
                term = -term
            total = total + term
        return total

    def letter(self, h: str, v: str) -> Element:
        if (h, v) in self.table:
            return self.table[(h, v)]
        if self.default is not None:
            value = self.default(h, v)
            if value is not None:
                return value
        base = _base_of_differential(h, self.acting.alphabet) if self.forced else None
        if base is not None:
            # (dx)▷v = d(x▷v) - (-1)^{|x|} x▷dv
            value = self.module.d(self.act_words((base,), (v,)))
            inner = self.act(Element.word(base), self.module.d(Element.word(v)))
            if self.acting.alphabet[base].degree % 2:
                return value + inner
            return value - inner
        raise MissingAssignmentError(f"{h}▷{v}", self.name)


class MatchedPair:
    """
    Mutual actions H▷A and H◁A of a double cross product

    A left action of H on A and a right action of A on H, extended to
    words through the matched-pair laws
        h▷(ab) = (-1)^{|h2||a1|} (h1▷a1)((h2◁a2)▷b)
        (hg)◁a = (-1)^{|g2||a1|} (h◁(g1▷a1))(g2◁a2)
    """

    def __init__(
        self,
        a: HopfDGA,
        h: HopfDGA,
        left_table: Optional[LetterTable] = None,
        right_table: Optional[LetterTable] = None,
    ):
        self.a = a
        self.h = h
        self.left_table: Dict[Tuple[str, str], Element] = dict(left_table or {})
        self.right_table: Dict[Tuple[str, str], Element] = dict(right_table or {})
        self._left: Dict[Tuple[Word, Word], Element] = {}
        self._right: Dict[Tuple[Word, Word], Element] = {}

    @classmethod
    def trivial(cls, a: HopfDGA, h: HopfDGA) -> "MatchedPair":
        pair = cls(a, h)
        pair.left_letter = lambda x, y: Element.word(y).scale(h.counit_word((x,)))
        pair.right_letter = lambda x, y: Element.word(x).scale(a.counit_word((y,)))
        return pair

    def left_letter(self, h: str, a: str) -> Element:
        try:
            return self.left_table[(h, a)]
        except KeyError:
            raise MissingAssignmentError(f"{h}▷{a}", "▷") from None

    def right_letter(self, h: str, a: str) -> Element:
        try:
            return self.right_table[(h, a)]
        except KeyError:
            raise MissingAssignmentError(f"{h}◁{a}", "◁") from None

    def left(self, hw: Word, aw: Word) -> Element:
        """h▷a, an element of A"""
        key = (hw, aw)
        cached = self._left.get(key)
        if cached is not None:
            return cached
        if not hw:
            result = self.a.reduce(Element.word(*aw))
        elif not aw:
            result = Element.one().scale(self.h.counit_word(hw))
        elif len(hw) > 1:
            inner = self.left(hw[1:], aw)
            result = Element.sum(self.left(hw[:1], w).scale(c) for w, c in inner.terms.items())
        elif len(aw) == 1:
            result = self.a.reduce(self.left_letter(hw[0], aw[0]))
        else:
            result = Element.zero()
            head, rest = aw[:1], aw[1:]
            for (h1, h2), c in self.h.coproduct_word(hw).terms.items():
                for (a1, a2), c2 in self.a.coproduct_word(head).terms.items():
                    first = self.left(h1, a1)
                    if first.is_zero():
                        continue
                    moved = self.right(h2, a2)
                    second = Element.sum(
                        self.left(w, rest).scale(wc) for w, wc in moved.terms.items()
                    )
                    term = self.a.mul(first, second).scale(c * c2)
                    if self.h.degree(h2) * self.a.degree(a1) % 2:
                        term = -term
                    result = result + term
        self._left[key] = result
        return result

    def right(self, hw: Word, aw: Word) -> Element:
        """h◁a, an element of H"""
        key = (hw, aw)
        cached = self._right.get(key)
        if cached is not None:
            return cached
        if not aw:
            result = self.h.reduce(Element.word(*hw))
        elif not hw:
            result = Element.one().scale(self.a.counit_word(aw))
        elif len(aw) > 1:
            inner = self.right(hw, aw[:1])
            result = Element.sum(self.right(w, aw[1:]).scale(c) for w, c in inner.terms.items())
        elif len(hw) == 1:
            result = self.h.reduce(self.right_letter(hw[0], aw[0]))
        else:
            result = Element.zero()
            head, rest = hw[:1], hw[1:]
            for (g1, g2), c in self.h.coproduct_word(rest).terms.items():
                for (a1, a2), c2 in self.a.coproduct_word(aw).terms.items():
                    moved = self.left(g1, a1)
                    first = Element.sum(self.right(head, w).scale(wc) for w, wc in moved.terms.items())
                    if first.is_zero():
                        continue
                    term = self.h.mul(first, self.right(g2, a2)).scale(c * c2)
                    if self.h.degree(g2) * self.a.degree(a1) % 2:
                        term = -term
                    result = result + term
        self._right[key] = result
        return result
