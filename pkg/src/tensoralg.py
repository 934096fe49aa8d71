"""
Super tensor powers of presented algebras

Multiplication carries the Koszul sign: moving the i-th slot of the left
factor past the j-th slot (j < i) of the right factor costs
(-1)^{|a_i||b_j|}.
"""
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.errors import RankMismatchError
from src.freealg import Element, RewriteSystem, Word, _accumulate, _coeff, format_term, format_word
from src.scalar import Scalar

Slots = Tuple[Word, ...]

# A per-slot map entry for graded_map_apply: (slot index, map, parity of the map)
SlotMap = Tuple[int, Callable[[Word], Element], int]


class TensorElement:
    """Rank-k tensor: finite combination of k-tuples of words"""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Optional[Mapping[Slots, Any]] = None):
        if rank < 1:
            raise RankMismatchError(f"tensor rank must be positive, got {rank}")
        self.rank = rank
        self.terms: Dict[Slots, Any] = {}
        for slots, c in (terms or {}).items():
            slots = tuple(tuple(w) for w in slots)
            if len(slots) != rank:
                raise RankMismatchError(f"term of rank {len(slots)} in a rank-{rank} tensor")
            c = _coeff(c)
            if not c.is_zero():
                self.terms[slots] = c

    @classmethod
    def pure(cls, *words: Word, coeff: Any = 1) -> "TensorElement":
        return cls(len(words), {tuple(words): coeff})

    @classmethod
    def unit(cls, rank: int) -> "TensorElement":
        return cls(rank, {tuple(() for _ in range(rank)): 1})

    @classmethod
    def zero(cls, rank: int) -> "TensorElement":
        return cls(rank)

    @classmethod
    def tensor(cls, *elements: Element) -> "TensorElement":
        """Outer product e1 ⊗ e2 ⊗ ... (no reduction, no sign)"""
        terms: Dict[Slots, Any] = {(): Scalar.one()}
        for e in elements:
            nxt: Dict[Slots, Any] = {}
            for slots, c in terms.items():
                for w, v in e.terms.items():
                    _accumulate(nxt, {slots + (w,): c * v})
            terms = nxt
        return cls(len(elements), terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TensorElement"):
        if not isinstance(other, TensorElement) or other.rank != self.rank:
            raise RankMismatchError(
                f"rank {self.rank} combined with rank {getattr(other, 'rank', None)}"
            )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return TensorElement(self.rank, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.rank, {s: -c for s, c in self.terms.items()})

    def scale(self, c: Any) -> "TensorElement":
        c = _coeff(c)
        return TensorElement(self.rank, {s: c * v for s, v in self.terms.items()})

    def __rmul__(self, c: Any) -> "TensorElement":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and (self - other).is_zero()

    __hash__ = None

    def substitute(self, assignment: Mapping[str, Any]) -> "TensorElement":
        return TensorElement(
            self.rank, {s: c.substitute(assignment) for s, c in self.terms.items()}
        )

    def slot_element(self, slot: int) -> Element:
        """Sum of the slot's words weighted by coefficients (rank-1 collapse helper)"""
        return Element.sum(Element({s[slot]: c}) for s, c in self.terms.items())

    def to_element(self) -> Element:
        if self.rank != 1:
            raise RankMismatchError(f"cannot collapse rank {self.rank} to an element")
        return Element({s[0]: c for s, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for slots in sorted(self.terms, key=lambda s: (tuple(len(w) for w in s), s)):
            body = " ⊗ ".join(format_word(w) for w in slots)
            parts.append(format_term(self.terms[slots], ("(" + body + ")",)))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TensorElement({self})"


def as_tensor(e: Element) -> TensorElement:
    return TensorElement(1, {(w,): c for w, c in e.terms.items()})


class TensorSystem:
    """One rewrite system per tensor slot"""

    def __init__(self, systems: Sequence[RewriteSystem]):
        self.systems: List[RewriteSystem] = list(systems)

    @classmethod
    def power(cls, system: RewriteSystem, rank: int) -> "TensorSystem":
        return cls([system] * rank)

    @property
    def rank(self) -> int:
        return len(self.systems)

    def slot_degree(self, slot: int, word: Word) -> int:
        return self.systems[slot].alphabet.degree(word)

    def degrees(self, slots: Slots) -> Tuple[int, ...]:
        return tuple(self.slot_degree(i, w) for i, w in enumerate(slots))

    def reduce(self, t: TensorElement) -> TensorElement:
        """Reduce every slot by its system"""
        if t.rank != self.rank:
            raise RankMismatchError(f"rank {t.rank} tensor in a rank-{self.rank} system")
        terms: Dict[Slots, Any] = {}
        for slots, c in t.terms.items():
            expanded: Dict[Slots, Any] = {(): c}
            for i, w in enumerate(slots):
                nf = self.systems[i].normal_form(Element.word(*w))
                nxt: Dict[Slots, Any] = {}
                for prefix, pc in expanded.items():
                    for nw, nc in nf.terms.items():
                        _accumulate(nxt, {prefix + (nw,): pc * nc})
                expanded = nxt
            _accumulate(terms, expanded)
        return TensorElement(self.rank, terms)

    def one(self) -> TensorElement:
        return TensorElement.unit(self.rank)

    def zero(self) -> TensorElement:
        return TensorElement.zero(self.rank)

    def mul(self, s: TensorElement, t: TensorElement) -> TensorElement:
        return self.reduce(tensor_multiply(s, t, self, reduce=False))

    def product(self, factors: Iterable[TensorElement]) -> TensorElement:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def equal(self, s: TensorElement, t: TensorElement) -> bool:
        return self.reduce(s - t).is_zero()


def koszul_sign(left_degrees: Sequence[int], right_degrees: Sequence[int]) -> int:
    """Sign of (a_1⊗...⊗a_k)(b_1⊗...⊗b_k) -> ±(a_1b_1⊗...⊗a_kb_k)"""
    exponent = 0
    for i, da in enumerate(left_degrees):
        if da % 2 == 0:
            continue
        for db in right_degrees[:i]:
            exponent += da * db
    return -1 if exponent % 2 else 1


def tensor_multiply(
    s: TensorElement,
    t: TensorElement,
    system: TensorSystem,
    reduce: bool = True,
) -> TensorElement:
    """
    Product in the super tensor product algebra

    Args:
        s: Left factor
        t: Right factor
        system: Slot systems (supply slot degrees and reduction)
        reduce: Reduce the product slotwise

    Returns:
        The product, slotwise reduced unless reduce is False

    Raises:
        RankMismatchError: ranks differ
    """
    s._check(t)
    terms: Dict[Slots, Any] = {}
    for sa, ca in s.terms.items():
        da = system.degrees(sa)
        for sb, cb in t.terms.items():
            db = system.degrees(sb)
            sign = koszul_sign(da, db)
            slots = tuple(a + b for a, b in zip(sa, sb))
            c = ca * cb
            _accumulate(terms, {slots: c if sign == 1 else -c})
    out = TensorElement(s.rank, terms)
    return system.reduce(out) if reduce else out


def graded_map_apply(
    maps: Sequence[SlotMap],
    t: TensorElement,
    system: Optional[TensorSystem] = None,
) -> TensorElement:
    """
    Apply a sum of slot maps, e.g. d⊗id + (-1)^{|.|} id⊗d

    Each entry (slot, fn, parity) contributes fn on that slot with the sign
    (-1)^{parity * (total degree of the slots before it)}.

    Raises:
        MissingAssignmentError: propagated from fn
    """
    terms: Dict[Slots, Any] = {}
    for slots, c in t.terms.items():
        degs = system.degrees(slots) if system else None
        for slot, fn, parity in maps:
            image = fn(slots[slot])
            if image.is_zero():
                continue
            before = sum(degs[:slot]) if degs is not None else 0
            sign = -1 if (parity * before) % 2 else 1
            for w, v in image.terms.items():
                new = slots[:slot] + (w,) + slots[slot + 1:]
                value = c * v
                _accumulate(terms, {new: value if sign == 1 else -value})
    out = TensorElement(t.rank, terms)
    return system.reduce(out) if system else out


def expand_slot(
    t: TensorElement,
    slot: int,
    fn: Callable[[Word], TensorElement],
) -> TensorElement:
    """Replace one slot by a rank-r tensor (an even map such as a coproduct)"""
    terms: Dict[Slots, Any] = {}
    rank = None
    for slots, c in t.terms.items():
        image = fn(slots[slot])
        rank = image.rank
        for inner, v in image.terms.items():
            _accumulate(terms, {slots[:slot] + inner + slots[slot + 1:]: c * v})
    if rank is None:
        probe = fn(())
        rank = probe.rank
    return TensorElement(t.rank - 1 + rank, terms)


def contract_slot(t: TensorElement, slot: int, fn: Callable[[Word], Any]) -> TensorElement:
    """Remove one slot through a scalar-valued even map such as the counit"""
    if t.rank < 2:
        raise RankMismatchError("cannot contract the only slot")
    terms: Dict[Slots, Any] = {}
    for slots, c in t.terms.items():
        value = _coeff(fn(slots[slot]))
        if value.is_zero():
            continue
        _accumulate(terms, {slots[:slot] + slots[slot + 1:]: c * value})
    return TensorElement(t.rank - 1, terms)


def component(t: TensorElement, multidegree: Sequence[int], system: TensorSystem) -> TensorElement:
    """Terms whose per-slot form degrees equal multidegree"""
    target = tuple(multidegree)
    return TensorElement(
        t.rank, {s: c for s, c in t.terms.items() if system.degrees(s) == target}
    )


def flip(t: TensorElement, system: TensorSystem) -> TensorElement:
    """Signed swap of a rank-2 tensor: a⊗b -> (-1)^{|a||b|} b⊗a"""
    if t.rank != 2:
        raise RankMismatchError("flip needs a rank-2 tensor")
    terms: Dict[Slots, Any] = {}
    for (a, b), c in t.terms.items():
        da, db = system.degrees((a, b))
        _accumulate(terms, {(b, a): -c if (da * db) % 2 else c})
    return TensorElement(2, terms)
