"""
Presentation DSL: parser, expression evaluator and serializer

A document is line oriented; ";" separates statements on one line and "#"
starts a comment. Blocks (presentation, map, pairing, ansatz) close with
"end".

    hdga 1
    scalars lam
    presentation Uqb
      gen x deg 0
      gen t deg 0
      rel: t*x = q^2*x*t
      rel: d(t)*t = q^2*t*d(t)
      coproduct t = ten(t, t)
    end
    expect hopf Uqb pass

Expressions are sums of products of integers, scalar indeterminates (q is
always available, I is the Gaussian unit), generators, d(x) differential
letters, S(...) antipodes and ten(...) tensors, with + - * / and integer
powers (^ or **). Using d(x) auto-declares the differential letter one
degree above x.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pyparsing as pp

from src.errors import DSLSemanticError, DSLSyntaxError
from src.freealg import Alphabet, Element, differential_name
from src.scalar import DEFAULT_INDETERMINATE, Scalar
from src.tensoralg import TensorElement

pp.ParserElement.enable_packrat()

DSL_VERSION = 1
IMAGINARY_UNIT = "I"
FUNCTIONS = ("d", "S", "ten")
MAP_KINDS = ("coaction", "algebra")
CONSTRAINT_KINDS = ("leibniz", "coaction", "vanish")
CHECK_KINDS = ("dga", "hopf", "confluence", "coaction", "pairing", "morphism", "catalog")

Value = Union[Scalar, Element, TensorElement]


# ----------------------------------------------------------------------
# Expression syntax tree
# ----------------------------------------------------------------------
class Node:
    """Base of the expression tree; position attributes never take part in equality"""

    line = 0
    col = 0
    pos = 0

    def at(self, pos: int) -> "Node":
        self.pos = pos
        return self


@dataclass
class Num(Node):
    value: int


@dataclass
class Name(Node):
    id: str


@dataclass
class Call(Node):
    func: str
    args: Tuple[Node, ...]


@dataclass
class Neg(Node):
    operand: Node


@dataclass
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Pow(Node):
    base: Node
    exponent: int


def _children(node: Node) -> Iterable[Node]:
    if isinstance(node, Call):
        return node.args
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    if isinstance(node, Pow):
        return (node.base,)
    return ()


def walk(node: Node) -> Iterable[Node]:
    yield node
    for child in _children(node):
        yield from walk(child)


def _fold(tokens) -> Node:
    items = list(tokens[0])
    node = items[0]
    for op, right in zip(items[1::2], items[2::2]):
        node = BinOp(op, node, right).at(node.pos)
    return node


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    ident = pp.Regex(r"[^\W\d]\w*")
    expr = pp.Forward()

    def located(build):
        def action(s, loc, toks):
            return build(loc, toks)

        return action

    call = ident + pp.Suppress("(") + pp.Group(pp.Optional(pp.delimited_list(expr))) + pp.Suppress(")")
    call.set_parse_action(located(lambda loc, t: Call(t[0], tuple(t[1])).at(loc)))
    name = ident.copy().set_parse_action(located(lambda loc, t: Name(t[0]).at(loc)))
    number = pp.Regex(r"\d+").set_parse_action(located(lambda loc, t: Num(int(t[0])).at(loc)))
    paren = pp.Suppress("(") + expr + pp.Suppress(")")
    atom = call | name | number | paren
    power = atom + pp.Optional(pp.Suppress(pp.Literal("**") | pp.Literal("^")) + pp.Regex(r"-?\d+"))
    power.set_parse_action(located(lambda loc, t: Pow(t[0], int(t[1])).at(loc) if len(t) == 2 else t[0]))

    expr <<= pp.infix_notation(
        power,
        [
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, located(lambda loc, t: Neg(t[0][1]).at(loc))),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold),
        ],
    )
    return expr


def parse_expression(text: str, line: int = 1, col: int = 1) -> Node:
    """
    Parse one expression; positions are reported relative to (line, col)

    Raises:
        DSLSyntaxError: malformed expression
    """
    if not text.strip():
        raise DSLSyntaxError("empty expression", line, col)
    try:
        node = _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise DSLSyntaxError(f"cannot parse {text.strip()!r}: {exc.msg}", line, col + exc.loc) from exc
    for n in walk(node):
        n.line, n.col = line, col + n.pos
    return node


# Unparsing with minimal parentheses; the result parses back to an equal tree
_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG_LEVEL = 3
_ATOM_LEVEL = 5


def _level(node: Node) -> int:
    if isinstance(node, BinOp):
        return _LEVEL[node.op]
    if isinstance(node, Neg):
        return _NEG_LEVEL
    if isinstance(node, Pow):
        return 4
    return _ATOM_LEVEL


def unparse(node: Node) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return f"{node.func}({', '.join(unparse(a) for a in node.args)})"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if _level(node.base) < _ATOM_LEVEL:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Neg):
        inner = unparse(node.operand)
        if _level(node.operand) < 4:
            inner = f"({inner})"
        return f"-{inner}"
    level = _LEVEL[node.op]
    left = unparse(node.left)
    if _level(node.left) < level:
        left = f"({left})"
    right = unparse(node.right)
    if _level(node.right) <= level:
        right = f"({right})"
    return f"{left} {node.op} {right}" if level == 1 else f"{left}{node.op}{right}"


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------
class ExpressionEvaluator:
    """
    Evaluate syntax trees to scalars, elements or tensors

    Args:
        alphabet: Generators in scope
        scalars: Declared scalar indeterminates (q is always in scope)
        antipode: Antipode used by S(...), when available
        declare_differentials: Add d(x) to the alphabet on first use
    """

    def __init__(
        self,
        alphabet: Alphabet,
        scalars: Iterable[str] = (),
        antipode: Optional[Callable[[Element], Element]] = None,
        declare_differentials: bool = False,
    ):
        self.alphabet = alphabet
        self.scalars = set(scalars) | {DEFAULT_INDETERMINATE}
        self.antipode = antipode
        self.declare_differentials = declare_differentials

    def __call__(self, node: Node) -> Value:
        return self.evaluate(node)

    def evaluate(self, node: Node) -> Value:
        if isinstance(node, Num):
            return Scalar.of(node.value)
        if isinstance(node, Name):
            return self._name(node)
        if isinstance(node, Call):
            return self._call(node)
        if isinstance(node, Neg):
            return _scale(self.evaluate(node.operand), -1)
        if isinstance(node, Pow):
            return self._power(node)
        left, right = self.evaluate(node.left), self.evaluate(node.right)
        if node.op == "+":
            return _add(left, right, node)
        if node.op == "-":
            return _add(left, _scale(right, -1), node)
        if node.op == "*":
            return _mul(left, right, node)
        if not isinstance(right, Scalar):
            raise DSLSemanticError("only scalars can divide", node.line, node.col)
        if right.is_zero():
            raise DSLSemanticError("division by zero", node.line, node.col)
        return _scale(left, Scalar.one() / right)

    def element(self, node: Node) -> Element:
        """Evaluate to an Element (scalars are promoted)"""
        value = self.evaluate(node)
        if isinstance(value, Scalar):
            return Element.scalar(value)
        if isinstance(value, TensorElement):
            raise DSLSemanticError("expected an element, got a tensor", node.line, node.col)
        return value

    def tensor(self, node: Node) -> TensorElement:
        value = self.evaluate(node)
        if not isinstance(value, TensorElement):
            raise DSLSemanticError("expected ten(...) terms", node.line, node.col)
        return value

    def scalar(self, node: Node) -> Scalar:
        value = self.evaluate(node)
        if isinstance(value, Element) and set(value.terms) <= {()}:
            return value.coefficient(())
        if not isinstance(value, Scalar):
            raise DSLSemanticError("expected a scalar", node.line, node.col)
        return value

    def _name(self, node: Name) -> Value:
        if node.id in self.alphabet:
            return Element.word(node.id)
        if node.id == IMAGINARY_UNIT:
            return Scalar.imaginary_unit()
        if node.id in self.scalars:
            return Scalar.symbol(node.id)
        raise DSLSemanticError(f"unknown generator {node.id}", node.line, node.col)

    def _call(self, node: Call) -> Value:
        if node.func == "d":
            if len(node.args) != 1 or not isinstance(node.args[0], Name):
                raise DSLSemanticError("d() takes one generator name", node.line, node.col)
            base = node.args[0]
            if base.id not in self.alphabet:
                raise DSLSemanticError(f"unknown generator {base.id}", base.line, base.col)
            dname = differential_name(base.id)
            if dname not in self.alphabet:
                if not self.declare_differentials:
                    raise DSLSemanticError(f"unknown generator {dname}", node.line, node.col)
                self.alphabet.add_differential(base.id)
            return Element.word(dname)
        if node.func == "S":
            if self.antipode is None:
                raise DSLSemanticError("S() needs a presentation with an antipode", node.line, node.col)
            if len(node.args) != 1:
                raise DSLSemanticError("S() takes one argument", node.line, node.col)
            return self.antipode(self.element(node.args[0]))
        if node.func == "ten":
            if not node.args:
                raise DSLSemanticError("ten() needs at least one slot", node.line, node.col)
            return TensorElement.tensor(*(self.element(a) for a in node.args))
        raise DSLSemanticError(f"unknown function {node.func}", node.line, node.col)

    def _power(self, node: Pow) -> Value:
        base = self.evaluate(node.base)
        if isinstance(base, Scalar):
            if base.is_zero() and node.exponent < 0:
                raise DSLSemanticError("division by zero", node.line, node.col)
            return base ** node.exponent
        if isinstance(base, Element) and node.exponent >= 0:
            result = Element.one()
            for _ in range(node.exponent):
                result = result * base
            return result
        raise DSLSemanticError("only scalars take negative or tensor powers", node.line, node.col)


def _scale(value: Value, c) -> Value:
    if isinstance(value, Scalar):
        return value * Scalar.of(c)
    return value.scale(c)


def _add(a: Value, b: Value, node: Node) -> Value:
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a + b
    if isinstance(a, TensorElement) or isinstance(b, TensorElement):
        if isinstance(a, TensorElement) and isinstance(b, TensorElement) and a.rank == b.rank:
            return a + b
        raise DSLSemanticError("cannot add a tensor to a non-tensor of its rank", node.line, node.col)
    a = Element.scalar(a) if isinstance(a, Scalar) else a
    b = Element.scalar(b) if isinstance(b, Scalar) else b
    return a + b


def _mul(a: Value, b: Value, node: Node) -> Value:
    if isinstance(a, Scalar):
        return a * b if isinstance(b, Scalar) else b.scale(a)
    if isinstance(b, Scalar):
        return a.scale(b)
    if isinstance(a, TensorElement) or isinstance(b, TensorElement):
        raise DSLSemanticError("tensors multiply only with scalars", node.line, node.col)
    return a * b


def evaluate_expression(
    text: str,
    alphabet: Alphabet,
    scalars: Iterable[str] = (),
    antipode: Optional[Callable[[Element], Element]] = None,
) -> Value:
    """Parse and evaluate in one go"""
    return ExpressionEvaluator(alphabet, scalars, antipode).evaluate(parse_expression(text))


# ----------------------------------------------------------------------
# Document model
# ----------------------------------------------------------------------
@dataclass
class GeneratorDecl:
    name: str
    degree: int
    precedence: Optional[int] = None
    weight: int = 1
    line: int = field(default=0, compare=False)


@dataclass
class Relation:
    lhs: Node
    rhs: Node
    line: int = field(default=0, compare=False)


@dataclass
class Assignment:
    """name = value inside a block; pairing entries use "h, a" as target"""

    target: str
    value: Node
    line: int = field(default=0, compare=False)


@dataclass
class PresentationBlock:
    name: str
    generators: List[GeneratorDecl] = field(default_factory=list)
    relations: List[Relation] = field(default_factory=list)
    differential: List[Assignment] = field(default_factory=list)
    coproduct: List[Assignment] = field(default_factory=list)
    counit: List[Assignment] = field(default_factory=list)
    antipode: List[Assignment] = field(default_factory=list)
    maximal: bool = False
    line: int = field(default=0, compare=False)

    def generator_names(self) -> List[str]:
        return [g.name for g in self.generators]

    @property
    def is_hopf(self) -> bool:
        return bool(self.coproduct or self.counit or self.antipode)


@dataclass
class MapBlock:
    kind: str
    name: str
    source: str
    target: List[str]
    entries: List[Assignment] = field(default_factory=list)
    line: int = field(default=0, compare=False)


@dataclass
class PairingBlock:
    name: str
    left: str
    right: str
    convention: str = "hopf"
    entries: List[Assignment] = field(default_factory=list)
    line: int = field(default=0, compare=False)


@dataclass
class Constraint:
    kind: str
    argument: Optional[str] = None
    value: Optional[Node] = None
    line: int = field(default=0, compare=False)


@dataclass
class AnsatzBlock:
    name: str
    base: str
    prefix: str = "k"
    opened: List[Node] = field(default_factory=list)
    grading: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    constraints: List[Constraint] = field(default_factory=list)
    nonlinear: str = "error"
    line: int = field(default=0, compare=False)


@dataclass
class Recipe:
    construction: str
    arguments: List[str] = field(default_factory=list)
    line: int = field(default=0, compare=False)


@dataclass
class Expectation:
    check: str
    subject: str
    expected: bool = True
    line: int = field(default=0, compare=False)


@dataclass
class PresentationDocument:
    """Everything one .hdga file declares, as parsed (not yet built)"""

    version: int = DSL_VERSION
    scalars: List[str] = field(default_factory=list)
    presentations: List[PresentationBlock] = field(default_factory=list)
    maps: List[MapBlock] = field(default_factory=list)
    pairings: List[PairingBlock] = field(default_factory=list)
    ansatze: List[AnsatzBlock] = field(default_factory=list)
    recipe: Optional[Recipe] = None
    expectations: List[Expectation] = field(default_factory=list)

    def presentation(self, name: str) -> Optional[PresentationBlock]:
        return next((p for p in self.presentations if p.name == name), None)

    def is_empty(self) -> bool:
        return not (self.presentations or self.maps or self.pairings or self.ansatze or self.recipe or self.expectations)


# ----------------------------------------------------------------------
# Statement parser
# ----------------------------------------------------------------------
_IDENT = r"[^\W\d]\w*"
_NAME = rf'(?:"[^"]+"|{_IDENT})'
_GEN = rf"(?:d\({_IDENT}\)|{_IDENT})"

_HEADER = re.compile(r"hdga\s+(\d+)$")
_SCALARS = re.compile(rf"scalars((?:\s+{_IDENT})+)$")
_PRESENTATION = re.compile(rf"presentation\s+({_NAME})$")
_GEN_DECL = re.compile(rf"gen\s+({_GEN})\s+deg\s+(\d+)(?:\s+prec\s+(-?\d+))?(?:\s+weight\s+(\d+))?$")
_REL = re.compile(r"rel\s*:(.*)$")
_TABLE = re.compile(rf"(d|coproduct|counit|antipode)\s+({_GEN})\s*=(.*)$")
_MAP = re.compile(rf"map\s+(\w+)\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME}(?:\s+{_NAME})*)$")
_PAIRING = re.compile(rf"pairing\s+({_NAME})\s*:\s*({_NAME})\s+x\s+({_NAME})(?:\s+convention\s+(\w+))?$")
_ANSATZ = re.compile(rf"ansatz\s+({_NAME})\s+base\s+({_NAME})(?:\s+prefix\s+({_IDENT}))?$")
_RECIPE = re.compile(rf"recipe\s+(\w+)((?:\s+{_NAME})*)$")
_EXPECT = re.compile(rf"expect\s+(\w+)\s+({_NAME})\s+(pass|fail)$")
_ENTRY = re.compile(rf"({_GEN})\s*=(.*)$")
_PAIR_ENTRY = re.compile(rf"({_GEN})\s*,\s*({_GEN})\s*=(.*)$")
_OPEN = re.compile(r"open\s*:(.*)$")
_GRADE = re.compile(rf"grade\s+({_IDENT})\s*=\s*(-?\d+(?:\s+-?\d+)*)$")
_CONSTRAINT = re.compile(rf"constraint\s+(\w+)(?:\s+({_NAME}))?\s*(?::(.*))?$")
_NONLINEAR = re.compile(r"nonlinear\s+(\w+)$")


def _unquote(name: str) -> str:
    return name[1:-1] if name.startswith('"') else name


def _quote(name: str) -> str:
    return name if re.fullmatch(_IDENT, name) else f'"{name}"'


def _statements(text: str) -> Iterable[Tuple[str, int, int]]:
    """(statement, line, column) triples with comments stripped"""
    for lineno, raw in enumerate(text.splitlines(), 1):
        code = raw.split("#", 1)[0]
        start = 0
        for piece in code.split(";"):
            stripped = piece.strip()
            if stripped:
                yield stripped, lineno, start + len(piece) - len(piece.lstrip()) + 1
            start += len(piece) + 1


class _DocumentParser:
    def __init__(self):
        self.document = PresentationDocument()
        self.block: Optional[object] = None
        self.line = 0

    # Helpers
    def syntax(self, message: str, col: int = 1) -> DSLSyntaxError:
        return DSLSyntaxError(message, self.line, col)

    def expression(self, text: str, col: int) -> Node:
        offset = len(text) - len(text.lstrip())
        return parse_expression(text.strip(), self.line, col + offset)

    def scope(self, names: Iterable[str]) -> set:
        return set(names) | set(self.document.scalars) | {DEFAULT_INDETERMINATE, IMAGINARY_UNIT}

    def check_names(self, node: Node, known: set, block: Optional[PresentationBlock] = None):
        """Unknown identifiers are semantic errors; d(x) auto-declares in block"""
        for n in walk(node):
            if isinstance(n, Call):
                if n.func not in FUNCTIONS:
                    raise DSLSemanticError(f"unknown function {n.func}", n.line, n.col)
                if n.func == "d" and len(n.args) == 1 and isinstance(n.args[0], Name):
                    base = n.args[0].id
                    dname = differential_name(base)
                    if base in known and dname not in known:
                        if block is None:
                            raise DSLSemanticError(f"unknown generator {dname}", n.line, n.col)
                        degree = next(g.degree for g in block.generators if g.name == base)
                        block.generators.append(GeneratorDecl(dname, degree + 1, line=self.line))
                        known.add(dname)
            if isinstance(n, Name) and n.id not in known and n.id not in self.scope(()):
                raise DSLSemanticError(f"unknown generator {n.id}", n.line, n.col)

    def presentation_names(self, names: Iterable[str]) -> set:
        known = set()
        for name in names:
            block = self.document.presentation(name)
            if block is not None:
                known |= set(block.generator_names())
        return known

    def require(self, kind, keyword: str):
        if not isinstance(self.block, kind):
            raise self.syntax(f"{keyword} outside a {kind.__name__.replace('Block', '').lower()} block")
        return self.block

    # Dispatch
    def statement(self, text: str, col: int):
        keyword = re.match(r"[^\s:=,]+", text).group(0)
        if keyword == "end":
            if self.block is None:
                raise self.syntax("end without an open block", col)
            self.block = None
            return
        if isinstance(self.block, MapBlock) and keyword not in ("map",):
            return self.map_entry(text, col)
        if isinstance(self.block, PairingBlock) and keyword not in ("pairing",):
            return self.pairing_entry(text, col)
        handler = getattr(self, f"stmt_{keyword}", None)
        if handler is None:
            raise self.syntax(f"unknown statement {keyword!r}", col)
        handler(text, col)

    def stmt_hdga(self, text: str, col: int):
        m = _HEADER.match(text)
        if not m:
            raise self.syntax("header must read 'hdga <version>'", col)
        if int(m.group(1)) != DSL_VERSION:
            raise self.syntax(f"unsupported version {m.group(1)} (expected {DSL_VERSION})", col)
        self.document.version = int(m.group(1))

    def stmt_scalars(self, text: str, col: int):
        m = _SCALARS.match(text)
        if not m:
            raise self.syntax("scalars takes a list of names", col)
        for name in m.group(1).split():
            if name not in self.document.scalars:
                self.document.scalars.append(name)

    def stmt_presentation(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("presentation inside another block", col)
        m = _PRESENTATION.match(text)
        if not m:
            raise self.syntax("presentation takes a name", col)
        name = _unquote(m.group(1))
        if self.document.presentation(name) is not None:
            raise DSLSemanticError(f"presentation {name} declared twice", self.line, col)
        self.block = PresentationBlock(name, line=self.line)
        self.document.presentations.append(self.block)

    def stmt_gen(self, text: str, col: int):
        block = self.require(PresentationBlock, "gen")
        m = _GEN_DECL.match(text)
        if not m:
            raise self.syntax("gen takes: <name> deg <n> [prec <p>] [weight <w>]", col)
        name = m.group(1)
        if name in block.generator_names():
            raise DSLSemanticError(f"generator {name} declared twice", self.line, col)
        if name.startswith("d("):
            base = name[2:-1]
            decl = next((g for g in block.generators if g.name == base), None)
            if decl is None:
                raise DSLSemanticError(f"unknown generator {base}", self.line, col)
            if int(m.group(2)) != decl.degree + 1:
                raise DSLSemanticError(f"{name} must have degree {decl.degree + 1}", self.line, col)
        block.generators.append(
            GeneratorDecl(
                name,
                int(m.group(2)),
                int(m.group(3)) if m.group(3) is not None else None,
                int(m.group(4)) if m.group(4) is not None else 1,
                line=self.line,
            )
        )

    def stmt_maximal(self, text: str, col: int):
        block = self.require(PresentationBlock, "maximal")
        if text != "maximal":
            raise self.syntax("maximal takes no arguments", col)
        block.maximal = True

    def stmt_rel(self, text: str, col: int):
        block = self.require(PresentationBlock, "rel")
        m = _REL.match(text)
        body = m.group(1)
        if body.count("=") != 1:
            raise self.syntax("a relation reads 'rel: lhs = rhs'", col)
        left, right = body.split("=")
        body_col = col + m.start(1)
        lhs = self.expression(left, body_col)
        rhs = self.expression(right, body_col + len(left) + 1)
        known = set(block.generator_names())
        for node in (lhs, rhs):
            self.check_names(node, known, block)
        block.relations.append(Relation(lhs, rhs, line=self.line))

    def _table(self, text: str, col: int):
        block = self.require(PresentationBlock, text.split()[0])
        m = _TABLE.match(text)
        if not m:
            raise self.syntax(f"{text.split()[0]} takes: <generator> = <expression>", col)
        kind, target = m.group(1), m.group(2)
        known = set(block.generator_names())
        if target not in known:
            raise DSLSemanticError(f"unknown generator {target}", self.line, col + m.start(2))
        value = self.expression(m.group(3), col + m.start(3))
        self.check_names(value, known, block)
        getattr(block, "differential" if kind == "d" else kind).append(Assignment(target, value, line=self.line))

    stmt_d = stmt_coproduct = stmt_counit = stmt_antipode = _table

    def stmt_map(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("map inside another block", col)
        m = _MAP.match(text)
        if not m:
            raise self.syntax("map takes: <kind> <name>: <source> -> <target...>", col)
        kind = m.group(1)
        if kind not in MAP_KINDS:
            raise self.syntax(f"unknown map kind {kind!r}; use one of {', '.join(MAP_KINDS)}", col)
        names = [_unquote(n) for n in re.findall(_NAME, m.group(4))]
        for name in [_unquote(m.group(3))] + names:
            if self.document.presentation(name) is None and not any(a.name == name for a in self.document.ansatze):
                raise DSLSemanticError(f"unknown presentation {name}", self.line, col)
        self.block = MapBlock(kind, _unquote(m.group(2)), _unquote(m.group(3)), names, line=self.line)
        self.document.maps.append(self.block)

    def _ansatz_generators(self, name: str) -> set:
        ansatz = next((a for a in self.document.ansatze if a.name == name), None)
        return self.presentation_names([ansatz.base]) if ansatz is not None else set()

    def map_entry(self, text: str, col: int):
        block: MapBlock = self.block
        m = _ENTRY.match(text)
        if not m:
            raise self.syntax("map entries read '<generator> = <expression>'", col)
        source = self.presentation_names([block.source]) | self._ansatz_generators(block.source)
        if m.group(1) not in source:
            raise DSLSemanticError(f"unknown generator {m.group(1)}", self.line, col)
        value = self.expression(m.group(2), col + m.start(2))
        known = self.presentation_names(block.target) | source
        for name in block.target:
            known |= self._ansatz_generators(name)
        self.check_names(value, known)
        block.entries.append(Assignment(m.group(1), value, line=self.line))

    def stmt_pairing(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("pairing inside another block", col)
        m = _PAIRING.match(text)
        if not m:
            raise self.syntax("pairing takes: <name>: <left> x <right> [convention <c>]", col)
        left, right = _unquote(m.group(2)), _unquote(m.group(3))
        for name in (left, right):
            if self.document.presentation(name) is None:
                raise DSLSemanticError(f"unknown presentation {name}", self.line, col)
        self.block = PairingBlock(_unquote(m.group(1)), left, right, m.group(4) or "hopf", line=self.line)
        self.document.pairings.append(self.block)

    def pairing_entry(self, text: str, col: int):
        block: PairingBlock = self.block
        m = _PAIR_ENTRY.match(text)
        if not m:
            raise self.syntax("pairing entries read '<left>, <right> = <scalar>'", col)
        if m.group(1) not in self.presentation_names([block.left]):
            raise DSLSemanticError(f"unknown generator {m.group(1)}", self.line, col)
        if m.group(2) not in self.presentation_names([block.right]):
            raise DSLSemanticError(f"unknown generator {m.group(2)}", self.line, col + m.start(2))
        value = self.expression(m.group(3), col + m.start(3))
        self.check_names(value, set())
        block.entries.append(Assignment(f"{m.group(1)}, {m.group(2)}", value, line=self.line))

    def stmt_ansatz(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("ansatz inside another block", col)
        m = _ANSATZ.match(text)
        if not m:
            raise self.syntax("ansatz takes: <name> base <presentation> [prefix <p>]", col)
        base = _unquote(m.group(2))
        if self.document.presentation(base) is None:
            raise DSLSemanticError(f"unknown presentation {base}", self.line, col)
        self.block = AnsatzBlock(_unquote(m.group(1)), base, m.group(3) or "k", line=self.line)
        self.document.ansatze.append(self.block)

    def stmt_open(self, text: str, col: int):
        block = self.require(AnsatzBlock, "open")
        m = _OPEN.match(text)
        node = self.expression(m.group(1), col + m.start(1))
        self.check_names(node, self.presentation_names([block.base]))
        block.opened.append(node)

    def stmt_grade(self, text: str, col: int):
        block = self.require(AnsatzBlock, "grade")
        m = _GRADE.match(text)
        if not m:
            raise self.syntax("grade takes: <generator> = <integers>", col)
        block.grading[m.group(1)] = tuple(int(v) for v in m.group(2).split())

    def stmt_constraint(self, text: str, col: int):
        block = self.require(AnsatzBlock, "constraint")
        m = _CONSTRAINT.match(text)
        if not m or m.group(1) not in CONSTRAINT_KINDS:
            raise self.syntax(f"constraint takes one of {', '.join(CONSTRAINT_KINDS)}", col)
        kind = m.group(1)
        if kind == "coaction":
            if not m.group(2):
                raise self.syntax("constraint coaction names a map", col)
            block.constraints.append(Constraint(kind, _unquote(m.group(2)), line=self.line))
        elif kind == "vanish":
            if m.group(3) is None:
                raise self.syntax("constraint vanish reads 'constraint vanish: <expression>'", col)
            node = self.expression(m.group(3), col + m.start(3))
            self.check_names(node, self.presentation_names([block.base]))
            block.constraints.append(Constraint(kind, value=node, line=self.line))
        else:
            block.constraints.append(Constraint(kind, line=self.line))

    def stmt_nonlinear(self, text: str, col: int):
        block = self.require(AnsatzBlock, "nonlinear")
        m = _NONLINEAR.match(text)
        if not m or m.group(1) not in ("error", "solve"):
            raise self.syntax("nonlinear takes 'error' or 'solve'", col)
        block.nonlinear = m.group(1)

    def stmt_recipe(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("recipe inside a block", col)
        m = _RECIPE.match(text)
        if not m:
            raise self.syntax("recipe takes: <construction> <arguments...>", col)
        if self.document.recipe is not None:
            raise DSLSemanticError("a document holds one recipe", self.line, col)
        arguments = [_unquote(a) for a in re.findall(_NAME, m.group(2))]
        self.document.recipe = Recipe(m.group(1), arguments, line=self.line)

    def stmt_expect(self, text: str, col: int):
        if self.block is not None:
            raise self.syntax("expect inside a block", col)
        m = _EXPECT.match(text)
        if not m:
            raise self.syntax("expect takes: <check> <subject> pass|fail", col)
        if m.group(1) not in CHECK_KINDS:
            raise DSLSemanticError(
                f"unknown check {m.group(1)!r}; use one of {', '.join(CHECK_KINDS)}", self.line, col
            )
        self.document.expectations.append(
            Expectation(m.group(1), _unquote(m.group(2)), m.group(3) == "pass", line=self.line)
        )


def parse_document(text: str) -> PresentationDocument:
    """
    Parse a .hdga document

    Raises:
        DSLSyntaxError: malformed statement or expression (with line/column)
        DSLSemanticError: unknown generator, presentation or check
    """
    parser = _DocumentParser()
    for statement, line, col in _statements(text):
        parser.line = line
        parser.statement(statement, col)
    if parser.block is not None:
        raise DSLSyntaxError("block is not closed with 'end'", parser.line, 1)
    return parser.document


# ----------------------------------------------------------------------
# Serializer
# ----------------------------------------------------------------------
def _generator_line(g: GeneratorDecl) -> str:
    text = f"gen {g.name} deg {g.degree}"
    if g.precedence is not None:
        text += f" prec {g.precedence}"
    if g.weight != 1:
        text += f" weight {g.weight}"
    return text


def serialize_document(document: PresentationDocument) -> str:
    """Canonical text of a document; parsing it gives back an equal document"""
    lines = [f"hdga {document.version}"]
    if document.scalars:
        lines.append("scalars " + " ".join(document.scalars))
    for block in document.presentations:
        lines.append(f"presentation {_quote(block.name)}")
        lines.extend(f"  {_generator_line(g)}" for g in block.generators)
        if block.maximal:
            lines.append("  maximal")
        lines.extend(f"  rel: {unparse(r.lhs)} = {unparse(r.rhs)}" for r in block.relations)
        for keyword, entries in (
            ("d", block.differential),
            ("coproduct", block.coproduct),
            ("counit", block.counit),
            ("antipode", block.antipode),
        ):
            lines.extend(f"  {keyword} {a.target} = {unparse(a.value)}" for a in entries)
        lines.append("end")
    for block in document.ansatze:
        lines.append(f"ansatz {_quote(block.name)} base {_quote(block.base)} prefix {block.prefix}")
        for letter, vector in block.grading.items():
            lines.append(f"  grade {letter} = {' '.join(str(v) for v in vector)}")
        lines.extend(f"  open: {unparse(node)}" for node in block.opened)
        for c in block.constraints:
            if c.kind == "coaction":
                lines.append(f"  constraint coaction {_quote(c.argument)}")
            elif c.kind == "vanish":
                lines.append(f"  constraint vanish: {unparse(c.value)}")
            else:
                lines.append(f"  constraint {c.kind}")
        if block.nonlinear != "error":
            lines.append(f"  nonlinear {block.nonlinear}")
        lines.append("end")
    for block in document.maps:
        target = " ".join(_quote(t) for t in block.target)
        lines.append(f"map {block.kind} {_quote(block.name)}: {_quote(block.source)} -> {target}")
        lines.extend(f"  {a.target} = {unparse(a.value)}" for a in block.entries)
        lines.append("end")
    for block in document.pairings:
        lines.append(
            f"pairing {_quote(block.name)}: {_quote(block.left)} x {_quote(block.right)} convention {block.convention}"
        )
        lines.extend(f"  {a.target} = {unparse(a.value)}" for a in block.entries)
        lines.append("end")
    if document.recipe is not None:
        lines.append(" ".join(["recipe", document.recipe.construction] + [_quote(a) for a in document.recipe.arguments]))
    for e in document.expectations:
        lines.append(f"expect {e.check} {_quote(e.subject)} {'pass' if e.expected else 'fail'}")
    return "\n".join(lines) + "\n"


def _tensor_text(t: TensorElement) -> str:
    if t.is_zero():
        return "0"
    parts = []
    for slots in sorted(t.terms, key=lambda s: (tuple(len(w) for w in s), s)):
        body = ", ".join("*".join(w) if w else "1" for w in slots)
        c = str(t.terms[slots])
        term = f"ten({body})"
        if c == "-1":
            term = f"-{term}"
        elif c != "1":
            term = f"({c})*{term}"
        parts.append(term)
    return " + ".join(parts).replace("+ -", "- ")


def serialize_presentation(p, scalars: Sequence[str] = ()) -> str:
    """
    DSL text of a built presentation: generators with their precedences, the
    oriented relations, explicit differentials and, for Hopf exterior
    algebras, the generator tables

    Args:
        p: DGAPresentation or HopfDGA
        scalars: Scalar indeterminates to declare besides q
    """
    found = set(scalars)
    values = [rule.rhs for rule in p.system.rules] + list(p.differential.values())
    values += list((getattr(p, "antipode_table", None) or {}).values())
    for value in values:
        for c in value.terms.values():
            found |= set(c.free_symbols())
    for value in getattr(p, "coproduct_table", {}).values():
        for c in value.terms.values():
            found |= set(c.free_symbols())
    found.discard(DEFAULT_INDETERMINATE)
    lines = [f"hdga {DSL_VERSION}"]
    if found:
        lines.append("scalars " + " ".join(sorted(found)))
    lines.append(f"presentation {_quote(p.name)}")
    for g in p.alphabet:
        text = f"  gen {g.name} deg {g.degree} prec {g.precedence}"
        if g.weight != 1:
            text += f" weight {g.weight}"
        lines.append(text)
    if p.maximal_prolongation:
        lines.append("  maximal")
    for rule in p.system.rules:
        lines.append(f"  rel: {'*'.join(rule.lhs)} = {rule.rhs}")
    for name, value in p.differential.items():
        lines.append(f"  d {name} = {value}")
    for name, value in getattr(p, "coproduct_table", {}).items():
        lines.append(f"  coproduct {name} = {_tensor_text(value)}")
    for name, value in getattr(p, "counit_table", {}).items():
        lines.append(f"  counit {name} = {value}")
    antipode = getattr(p, "antipode_table", None) or {}
    for name, value in antipode.items():
        lines.append(f"  antipode {name} = {value}")
    lines.append("end")
    return "\n".join(lines) + "\n"
