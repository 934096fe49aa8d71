"""
Graded free algebra with an oriented rewrite system

Words are tuples of generator names. Elements are finite linear
combinations of words with Scalar coefficients; unknown coefficients of a
derivation are extra indeterminates of the same field.
"""
import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from src.config import settings
from src.errors import (
    DuplicateRuleError,
    OrientationError,
    RewriteBudgetError,
    TrivialRelationError,
)
from src.report import VerificationReport
from src.scalar import Scalar

Word = Tuple[str, ...]

# Precedence offset per form degree for generators without an explicit rank
DEGREE_RANK = 10 ** 6


def differential_name(name: str) -> str:
    return f"d({name})"


def _coeff(c: Any) -> Any:
    if isinstance(c, (int, Fraction)):
        return Scalar.of(c)
    return c


@dataclass(frozen=True)
class Generator:
    """A graded generator symbol"""

    name: str
    degree: int = 0
    precedence: int = 0
    weight: int = 1

    @property
    def parity(self) -> int:
        return self.degree % 2


class Alphabet:
    """Generators of a presentation and the monomial order they induce"""

    def __init__(self, generators: Iterable[Generator] = ()):
        self._generators: Dict[str, Generator] = {}
        for g in generators:
            self._insert(g)

    def _insert(self, g: Generator):
        if g.name in self._generators:
            raise ValueError(f"generator {g.name} declared twice")
        if g.weight < 1:
            raise ValueError(f"generator {g.name} needs a positive weight")
        self._generators[g.name] = g

    def add(
        self,
        name: str,
        degree: int = 0,
        precedence: Optional[int] = None,
        weight: int = 1,
    ) -> Generator:
        """
        Declare a generator

        Without an explicit precedence the generator ranks above every
        generator of the same form degree declared before it, and every
        form-degree-n generator ranks above all degree-(n-1) ones.
        """
        if precedence is None:
            same = [g.precedence for g in self._generators.values() if g.degree == degree]
            precedence = max(same, default=degree * DEGREE_RANK) + 1
        g = Generator(name, degree, precedence, weight)
        self._insert(g)
        return g

    def add_differential(self, name: str) -> Generator:
        """Declare d(name) one degree up, ranked with the same offset as name"""
        base = self._generators[name]
        dname = differential_name(name)
        if dname in self._generators:
            return self._generators[dname]
        return self.add(dname, base.degree + 1, base.precedence + DEGREE_RANK, base.weight)

    def __getitem__(self, name: str) -> Generator:
        return self._generators[name]

    def __contains__(self, name: str) -> bool:
        return name in self._generators

    def __iter__(self) -> Iterator[Generator]:
        return iter(sorted(self._generators.values(), key=lambda g: g.precedence))

    def __len__(self) -> int:
        return len(self._generators)

    def names(self) -> List[str]:
        return [g.name for g in self]

    def copy(self) -> "Alphabet":
        return Alphabet(self._generators.values())

    def degree(self, word: Word) -> int:
        return sum(self._generators[x].degree for x in word)

    def parity(self, word: Word) -> int:
        return self.degree(word) % 2

    def key(self, word: Word) -> tuple:
        """Sort key: form degree, then weight, then precedence lexicographically"""
        gens = self._generators
        return (
            sum(gens[x].degree for x in word),
            sum(gens[x].weight for x in word),
            tuple(gens[x].precedence for x in word),
        )

    def descending_key(self, word: Word) -> tuple:
        """Key whose ascending order is the monomial order reversed"""
        deg, weight, precs = self.key(word)
        return (-deg, -weight, tuple(-p for p in precs) + (1,))


class Element:
    """Finite linear combination of words"""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Word, Any]] = None):
        self.terms: Dict[Word, Any] = {}
        for word, c in (terms or {}).items():
            c = _coeff(c)
            if not c.is_zero():
                self.terms[tuple(word)] = c

    # Construction
    @classmethod
    def word(cls, *letters: str, coeff: Any = 1) -> "Element":
        return cls({tuple(letters): coeff})

    @classmethod
    def scalar(cls, c: Any) -> "Element":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def one(cls) -> "Element":
        return cls({(): 1})

    @classmethod
    def sum(cls, elements: Iterable["Element"]) -> "Element":
        out: Dict[Word, Any] = {}
        for e in elements:
            _accumulate(out, e.terms)
        return cls(out)

    # Inspection
    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> List[Word]:
        return sorted(self.terms, key=lambda w: (len(w), w))

    def items(self):
        return self.terms.items()

    def coefficient(self, word: Word) -> Any:
        return self.terms.get(tuple(word), Scalar.zero())

    def letters(self) -> set:
        return {x for word in self.terms for x in word}

    def leading(self, alphabet: Alphabet) -> Tuple[Word, Any]:
        word = max(self.terms, key=alphabet.key)
        return word, self.terms[word]

    def degree_component(self, alphabet: Alphabet, degree: int) -> "Element":
        return Element({w: c for w, c in self.terms.items() if alphabet.degree(w) == degree})

    def parity_layers(self, alphabet: Alphabet) -> Dict[int, "Element"]:
        """Split into parity-homogeneous parts"""
        layers: Dict[int, Dict[Word, Any]] = {}
        for w, c in self.terms.items():
            layers.setdefault(alphabet.parity(w), {})[w] = c
        return {p: Element(t) for p, t in layers.items()}

    # Arithmetic
    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return Element(out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def scale(self, c: Any) -> "Element":
        c = _coeff(c)
        if c.is_zero():
            return Element()
        return Element({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            out: Dict[Word, Any] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _accumulate(out, {w1 + w2: c1 * c2})
            return Element(out)
        return self.scale(other)

    def __rmul__(self, other) -> "Element":
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "Element":
        return Element({w: fn(c) for w, c in self.terms.items()})

    def substitute(self, assignment: Mapping[str, Any]) -> "Element":
        return self.map_coefficients(lambda c: c.substitute(assignment))

    def rename(self, mapping: Mapping[str, str]) -> "Element":
        return Element({tuple(mapping.get(x, x) for x in w): c for w, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            parts.append(format_term(self.terms[w], w))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Element({self})"


def format_word(word: Word) -> str:
    return "*".join(word) if word else "1"


def format_term(c: Any, word: Word) -> str:
    text = str(c)
    if text == "1":
        return format_word(word)
    if text == "-1":
        return "-" + format_word(word)
    simple = text.lstrip("-").isalnum()
    if not simple:
        text = f"({text})"
    return text if not word else f"{text}*{format_word(word)}"


def _accumulate(out: Dict[Any, Any], terms: Mapping[Any, Any]):
    for w, c in terms.items():
        if w in out:
            total = out[w] + c
            if total.is_zero():
                del out[w]
            else:
                out[w] = total
        elif not c.is_zero():
            out[w] = c


@dataclass(frozen=True)
class RewriteRule:
    """lhs -> rhs with every rhs word strictly below lhs"""

    lhs: Word
    rhs: Element

    def __post_init__(self):
        if len(self.lhs) < 1:
            raise OrientationError("rule with empty left-hand side")

    def as_relation(self) -> Element:
        return Element.word(*self.lhs) - self.rhs

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {self.rhs}"


def orient_relation(rel: Element, alphabet: Alphabet) -> RewriteRule:
    """
    Turn a relation (an element equal to zero) into a rewrite rule

    Args:
        rel: The relation lhs - rhs
        alphabet: Alphabet inducing the monomial order

    Returns:
        Rule with the order-maximal word as left-hand side

    Raises:
        TrivialRelationError: rel is zero
        OrientationError: the leading word survives in the right-hand side
    """
    if rel.is_zero():
        raise TrivialRelationError("relation is zero")
    lead, c = rel.leading(alphabet)
    rest = rel - Element({lead: c})
    rhs = (-rest).scale(Scalar.one() / c if isinstance(c, Scalar) else c.inverse())
    if lead in rhs.terms:
        raise OrientationError(f"leading word {format_word(lead)} reappears in {rhs}")
    return RewriteRule(lead, rhs)


class RewriteSystem:
    """
    Oriented rewrite rules over an alphabet

    Reduction rewrites the order-maximal reducible word of an element at its
    leftmost redex, preferring the longest matching rule there.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        rules: Iterable[RewriteRule] = (),
        strict: bool = True,
        budget: Optional[int] = None,
        debug: Optional[bool] = None,
    ):
        self.alphabet = alphabet
        self.strict = strict
        self.budget = budget or settings.rewrite_budget
        self.debug = settings.debug_rewriting if debug is None else debug
        self.rules: List[RewriteRule] = []
        self._by_first: Dict[str, List[RewriteRule]] = {}
        self._lhs: Dict[Word, RewriteRule] = {}
        self._cache: Dict[Word, Dict[Word, Any]] = {}
        for rule in rules:
            self._add(rule)

    def _add(self, rule: RewriteRule):
        key = self.alphabet.key(rule.lhs)
        for w in rule.rhs.terms:
            if not self.alphabet.key(w) < key:
                raise OrientationError(
                    f"rule {rule} is not reducing: {format_word(w)} is not below {format_word(rule.lhs)}"
                )
        if rule.lhs in self._lhs:
            if self.strict:
                raise DuplicateRuleError(f"two rules rewrite {format_word(rule.lhs)}")
        else:
            self._lhs[rule.lhs] = rule
        self.rules.append(rule)
        bucket = self._by_first.setdefault(rule.lhs[0], [])
        bucket.append(rule)
        bucket.sort(key=lambda r: -len(r.lhs))

    @classmethod
    def from_relations(
        cls,
        alphabet: Alphabet,
        relations: Iterable[Element],
        strict: bool = True,
        budget: Optional[int] = None,
    ) -> "RewriteSystem":
        """
        Orient a list of relations after linear interreduction

        Relations are brought to reduced row echelon form over their words
        (largest word first) so that distinct rules get distinct left-hand
        sides; linearly dependent relations are dropped.
        """
        rows: List[Dict[Word, Any]] = []
        for rel in relations:
            row = dict(rel.terms)
            for pivot_row in rows:
                pivot = max(pivot_row, key=alphabet.key)
                if pivot in row:
                    factor = row[pivot]
                    _accumulate(row, {w: -factor * c for w, c in pivot_row.items()})
            if not row:
                continue
            pivot = max(row, key=alphabet.key)
            inv = Scalar.one() / row[pivot]
            row = {w: c * inv for w, c in row.items()}
            for other in rows:
                if pivot in other:
                    factor = other[pivot]
                    _accumulate(other, {w: -factor * c for w, c in row.items()})
            rows.append(row)
        rules = [orient_relation(Element(row), alphabet) for row in rows]
        return cls(alphabet, rules, strict=strict, budget=budget)

    def extend(self, rules: Iterable[RewriteRule], alphabet: Optional[Alphabet] = None) -> "RewriteSystem":
        return RewriteSystem(
            alphabet or self.alphabet,
            list(self.rules) + list(rules),
            strict=self.strict,
            budget=self.budget,
            debug=self.debug,
        )

    def relations(self) -> List[Element]:
        return [rule.as_relation() for rule in self.rules]

    # Redex search
    def redexes(self, word: Word) -> List[Tuple[int, RewriteRule]]:
        """All (position, rule) matches in word, leftmost first, longest first"""
        found = []
        for i, x in enumerate(word):
            for rule in self._by_first.get(x, ()):
                n = len(rule.lhs)
                if word[i:i + n] == rule.lhs:
                    found.append((i, rule))
        return found

    def find_redex(self, word: Word) -> Optional[Tuple[int, RewriteRule]]:
        for i, x in enumerate(word):
            for rule in self._by_first.get(x, ()):
                n = len(rule.lhs)
                if word[i:i + n] == rule.lhs:
                    return i, rule
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_redex(word) is None

    # Reduction
    def normal_form(self, e: Element, rng: Optional[random.Random] = None) -> Element:
        """
        Reduce e until no rule applies

        Args:
            e: Element to reduce
            rng: If given, rewrite a randomly chosen redex instead of the
                leftmost one (used to compare reduction orders)

        Returns:
            The normal form

        Raises:
            RewriteBudgetError: more than `budget` rewrite steps were needed
        """
        if rng is None and len(e.terms) == 1:
            (word, c), = e.terms.items()
            return Element(self._word_normal_form(word)).scale(c)
        return Element(self._reduce_terms(dict(e.terms), rng))

    def _word_normal_form(self, word: Word) -> Dict[Word, Any]:
        cached = self._cache.get(word)
        if cached is None:
            cached = self._reduce_terms({word: Scalar.one()}, None)
            self._cache[word] = cached
        return cached

    def _reduce_terms(self, pending: Dict[Word, Any], rng: Optional[random.Random]) -> Dict[Word, Any]:
        alphabet = self.alphabet
        heap = [(alphabet.descending_key(w), w) for w in pending]
        heapq.heapify(heap)
        result: Dict[Word, Any] = {}
        steps = 0
        while heap:
            _, word = heapq.heappop(heap)
            c = pending.pop(word, None)
            if c is None or c.is_zero():
                continue
            if rng is None and word in self._cache:
                _accumulate(result, {w: c * v for w, v in self._cache[word].items()})
                continue
            if rng is None:
                redex = self.find_redex(word)
            else:
                options = self.redexes(word)
                redex = rng.choice(options) if options else None
            if redex is None:
                _accumulate(result, {word: c})
                continue
            steps += 1
            if steps > self.budget:
                raise RewriteBudgetError(self.budget, format_word(word))
            i, rule = redex
            prefix, suffix = word[:i], word[i + len(rule.lhs):]
            for rw, rc in rule.rhs.terms.items():
                new = prefix + rw + suffix
                if self.debug and not alphabet.key(new) < alphabet.key(word):
                    raise OrientationError(
                        f"step {format_word(word)} -> {format_word(new)} does not decrease the order"
                    )
                value = c * rc
                if new in pending:
                    total = pending[new] + value
                    if total.is_zero():
                        del pending[new]
                    else:
                        pending[new] = total
                else:
                    pending[new] = value
                    heapq.heappush(heap, (alphabet.descending_key(new), new))
        return result

    # Duck-typed algebra surface shared with TensorSystem
    def one(self) -> Element:
        return Element.one()

    def zero(self) -> Element:
        return Element.zero()

    def generator(self, name: str) -> Element:
        return Element.word(name)

    def reduce(self, e: Element) -> Element:
        return self.normal_form(e)

    def mul(self, a: Element, b: Element) -> Element:
        return self.normal_form(a * b)

    def product(self, factors: Iterable[Element]) -> Element:
        out = Element.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def degree(self, word: Word) -> int:
        return self.alphabet.degree(word)

    def __len__(self) -> int:
        return len(self.rules)


def normal_form(e: Element, system: RewriteSystem) -> Element:
    return system.normal_form(e)


def elements_equal(e1: Element, e2: Element, system: RewriteSystem) -> bool:
    return system.normal_form(e1 - e2).is_zero()


def critical_pairs(system: RewriteSystem, degree_bound: Optional[int] = None) -> VerificationReport:
    """
    Resolve every overlap and inclusion of rule left-hand sides

    Args:
        system: Rewrite system to diagnose
        degree_bound: Longest ambiguity word considered (number of letters)

    Returns:
        Report with one "confluence" record per ambiguity; a failing record
        carries the difference of the two normal forms
    """
    bound = degree_bound or settings.degree_bound
    report = VerificationReport(title="critical pairs")
    rules = system.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # overlaps: suffix of l1 equals prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] != l2[:k]:
                    continue
                if len(l1) + len(l2) - k > bound:
                    continue
                left = r1.rhs * Element.word(*l2[k:])
                right = Element.word(*l1[:-k]) * r2.rhs
                diff = system.normal_form(left - right)
                subject = f"{format_word(l1)} / {format_word(l2)} overlap {k}"
                report.add("confluence", subject, diff.is_zero(), diff)
            # inclusions: l2 strictly inside l1
            if r1 is r2 or len(l2) > len(l1) or len(l1) > bound:
                continue
            for i in range(len(l1) - len(l2) + 1):
                if l1[i:i + len(l2)] != l2 or (len(l2) == len(l1) and r1 is r2):
                    continue
                left = r1.rhs
                right = Element.word(*l1[:i]) * r2.rhs * Element.word(*l1[i + len(l2):])
                diff = system.normal_form(left - right)
                subject = f"{format_word(l1)} / {format_word(l2)} inclusion {i}"
                report.add("confluence", subject, diff.is_zero(), diff)
    return report
