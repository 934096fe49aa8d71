"""
Exact coefficient field: multivariate rational functions over QQ or QQ(i)

Scalars wrap sympy sparse fraction-field elements. Each scalar lives in the
field generated by the indeterminates it needs (always including q); binary
operations lift both operands into the union field first.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from sympy import I, Integer, Rational, Symbol, sympify
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.fields import FracField
from sympy.polys.orderings import grlex

from src.errors import PoleError, ScalarDomainError

DEFAULT_INDETERMINATE = "q"

Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def _field(names: Tuple[str, ...], gaussian: bool) -> FracField:
    return FracField(names, QQ_I if gaussian else QQ, grlex)


def _field_for(names: Iterable[str], gaussian: bool) -> FracField:
    return _field(tuple(sorted(set(names) | {DEFAULT_INDETERMINATE})), gaussian)


def _is_gaussian(value) -> bool:
    return value.field.domain == QQ_I


def _monic(K: FracField, numer, denom):
    """Canonical representative: reduced fraction, monic denominator, zero as 0/1"""
    if not denom:
        raise ScalarDomainError("zero denominator")
    if not numer:
        return K.raw_new(K.ring.zero, K.ring.one)
    lc = denom.LC
    if lc != K.ring.domain.one:
        numer = numer.quo_ground(lc)
        denom = denom.quo_ground(lc)
    return K.raw_new(numer, denom)


def _lift(value, K: FracField):
    if value.field == K:
        return value
    return K.raw_new(value.numer.set_ring(K.ring), value.denom.set_ring(K.ring))


class Scalar:
    """
    Immutable exact rational function

    The wrapped fraction is always reduced with a monic denominator under the
    graded lexicographic order on alphabetically sorted indeterminates.
    """

    __slots__ = ("_value", "_hash")

    def __init__(self, value):
        self._value = value
        self._hash = None

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def of(cls, x: Any) -> "Scalar":
        """Coerce an int, Fraction, sympy number/expression or Scalar"""
        if isinstance(x, Scalar):
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, (int, Fraction)):
            K = _field_for((), False)
            value = K.ground_new(Rational(x.numerator, x.denominator))
            return cls(_monic(K, value.numer, value.denom))
        if isinstance(x, str):
            return cls.parse(x)
        return cls.from_expr(sympify(x))

    @classmethod
    def symbol(cls, name: str) -> "Scalar":
        K = _field_for((name,), False)
        value = K.from_expr(Symbol(name))
        return cls(_monic(K, value.numer, value.denom))

    @classmethod
    def zero(cls) -> "Scalar":
        return cls.of(0)

    @classmethod
    def one(cls) -> "Scalar":
        return cls.of(1)

    @classmethod
    def imaginary_unit(cls) -> "Scalar":
        return cls.from_expr(I)

    @classmethod
    def from_expr(cls, expr) -> "Scalar":
        """Build from a sympy expression that is a rational function"""
        expr = sympify(expr)
        names = [str(s) for s in expr.free_symbols]
        K = _field_for(names, bool(expr.has(I)))
        value = K.from_expr(expr)
        return cls(_monic(K, value.numer, value.denom))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse textual scalars such as "q^2 - 1", "3/2" or "1/(1-q^2)" """
        transformations = standard_transformations + (convert_xor,)
        try:
            expr = parse_expr(text, transformations=transformations, evaluate=True)
        except (SyntaxError, TypeError, ValueError) as exc:
            raise ScalarDomainError(f"cannot parse scalar {text!r}: {exc}") from exc
        return cls.from_expr(expr)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def numerator(self):
        return self._value.numer

    @property
    def denominator(self):
        return self._value.denom

    @property
    def indeterminates(self) -> Tuple[str, ...]:
        return tuple(str(s) for s in self._value.field.symbols)

    def free_symbols(self) -> List[str]:
        expr = self.as_expr()
        return sorted(str(s) for s in expr.free_symbols)

    def as_expr(self):
        return self._value.numer.as_expr() / self._value.denom.as_expr()

    def is_zero(self) -> bool:
        return not self._value.numer

    def is_one(self) -> bool:
        return self._value.numer == self._value.denom

    def is_constant(self) -> bool:
        return self._value.numer.is_ground and self._value.denom.is_ground

    def to_fraction(self) -> Fraction:
        """Exact rational value of a constant real scalar"""
        if not self.is_constant() or _is_gaussian(self._value) and self.as_expr().has(I):
            raise ScalarDomainError(f"{self} is not a rational constant")
        value = Rational(self.as_expr())
        return Fraction(int(value.p), int(value.q))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.of(other)
        if isinstance(other, (Integer, Rational)):
            return Scalar.from_expr(other)
        return None

    def _unify(self, other: "Scalar"):
        a, b = self._value, other._value
        if a.field == b.field:
            return a.field, a, b
        names = set(self.indeterminates) | set(other.indeterminates)
        K = _field_for(names, _is_gaussian(a) or _is_gaussian(b))
        return K, _lift(a, K), _lift(b, K)

    def _wrap(self, K, value) -> "Scalar":
        return Scalar(_monic(K, value.numer, value.denom))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        K, a, b = self._unify(other)
        return self._wrap(K, a + b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        K, a, b = self._unify(other)
        return self._wrap(K, a - b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        K, a, b = self._unify(other)
        return self._wrap(K, a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ScalarDomainError(f"division of {self} by zero")
        K, a, b = self._unify(other)
        return self._wrap(K, a / b)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "Scalar":
        return Scalar(self._value.field.raw_new(-self._value.numer, self._value.denom))

    def __pos__(self) -> "Scalar":
        return self

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise ScalarDomainError(f"only integer powers are supported, got {n!r}")
        if n < 0 and self.is_zero():
            raise ScalarDomainError("negative power of zero")
        return self._wrap(self._value.field, self._value ** n)

    def inverse(self) -> "Scalar":
        return Scalar.one() / self

    # ------------------------------------------------------------------
    # Comparison and hashing
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        _, a, b = self._unify(other)
        return a.numer * b.denom == b.numer * a.denom

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self._value.numer.as_expr(), self._value.denom.as_expr())
            )
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # Substitution and printing
    # ------------------------------------------------------------------
    def substitute(self, assignment: Mapping[str, Any]) -> "Scalar":
        """
        Evaluate indeterminates exactly, re-normalizing the result

        Args:
            assignment: indeterminate name -> Scalar, int, Fraction or text

        Returns:
            The substituted scalar

        Raises:
            PoleError: the denominator vanishes under the assignment
        """
        mapping = {Symbol(name): Scalar.of(value).as_expr() for name, value in assignment.items()}
        numer = Scalar.from_expr(self._value.numer.as_expr().xreplace(mapping))
        denom = Scalar.from_expr(self._value.denom.as_expr().xreplace(mapping))
        if denom.is_zero():
            raise PoleError(
                self._vanishing_factor(mapping),
                {name: str(Scalar.of(value)) for name, value in assignment.items()},
            )
        return numer / denom

    def _vanishing_factor(self, mapping) -> str:
        try:
            _, factors = self._value.denom.factor_list()
        except (NotImplementedError, TypeError):
            factors = [(self._value.denom, 1)]
        for factor, _multiplicity in factors:
            if Scalar.from_expr(factor.as_expr().xreplace(mapping)).is_zero():
                return _render(factor.as_expr())
        return _render(self._value.denom.as_expr())

    def __str__(self) -> str:
        return _render(self.as_expr())

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _render(expr) -> str:
    return str(expr).replace("**", "^")


def scalar_normalize(numerator: Any, denominator: Any = 1) -> Scalar:
    """
    Unique reduced representative of numerator/denominator

    Raises:
        ScalarDomainError: the denominator is zero
    """
    numerator, denominator = Scalar.of(numerator), Scalar.of(denominator)
    if denominator.is_zero():
        raise ScalarDomainError(f"zero denominator in {numerator}/0")
    return numerator / denominator


def scalar_substitute(s: Scalar, assignment: Mapping[str, Any]) -> Scalar:
    return Scalar.of(s).substitute(assignment)


def q() -> Scalar:
    """The deformation parameter"""
    return Scalar.symbol(DEFAULT_INDETERMINATE)


def lam() -> Scalar:
    """q - 1/q"""
    return q() - q().inverse()


# ----------------------------------------------------------------------
# Linear systems
# ----------------------------------------------------------------------
@dataclass
class LinearSystem:
    """Sparse linear system over the scalar field"""

    unknowns: List[str]
    rows: List[Dict[str, Scalar]] = field(default_factory=list)
    rhs: List[Scalar] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.rows) != len(self.rhs):
            raise ValueError("row count must equal rhs length")
        while len(self.labels) < len(self.rows):
            self.labels.append(f"row {len(self.labels)}")

    @classmethod
    def from_grid(cls, grid: List[List[Any]], rhs: List[Any], unknowns: List[str]) -> "LinearSystem":
        rows = [
            {name: Scalar.of(c) for name, c in zip(unknowns, row) if not Scalar.of(c).is_zero()}
            for row in grid
        ]
        return cls(unknowns=list(unknowns), rows=rows, rhs=[Scalar.of(v) for v in rhs])

    def add_equation(self, coefficients: Mapping[str, Any], rhs: Any = 0, label: str = ""):
        """Add sum(coefficients[u] * u) = rhs"""
        row = {}
        for name, c in coefficients.items():
            if name not in self.unknowns:
                self.unknowns.append(name)
            c = Scalar.of(c)
            if not c.is_zero():
                row[name] = c
        self.rows.append(row)
        self.rhs.append(Scalar.of(rhs))
        self.labels.append(label or f"row {len(self.labels)}")

    def residual(self, values: Mapping[str, Scalar]) -> List[Scalar]:
        """lhs - rhs per row under the given values (missing unknowns count as 0)"""
        out = []
        for row, b in zip(self.rows, self.rhs):
            total = -b
            for name, c in row.items():
                if name in values:
                    total = total + c * values[name]
            out.append(total)
        return out


@dataclass
class LinearSolution:
    """Outcome of solve_linear"""

    status: str  # "unique" | "parametrized" | "inconsistent"
    assignments: Dict[str, Scalar] = field(default_factory=dict)
    dependencies: Dict[str, Dict[str, Scalar]] = field(default_factory=dict)
    free: List[str] = field(default_factory=list)
    certificate: Optional[str] = None

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"

    def particular(self) -> Dict[str, Scalar]:
        """Pivot values with every free unknown set to zero"""
        values = dict(self.assignments)
        for name in self.free:
            values[name] = Scalar.zero()
        return values


def solve_linear(system: LinearSystem) -> LinearSolution:
    """
    Gaussian elimination to reduced row echelon form

    Rows are absorbed in order; each new row is reduced against the current
    pivots and, if nonzero, pivots on its first nonzero unknown in declared
    unknown order.

    Args:
        system: the linear system

    Returns:
        LinearSolution with pivot assignments (free unknowns set to 0),
        dependencies of pivots on free unknowns, or an inconsistency certificate
    """
    order = {name: i for i, name in enumerate(system.unknowns)}
    pivots: Dict[str, Tuple[Dict[str, Scalar], Scalar]] = {}

    for row, b, label in zip(system.rows, system.rhs, system.labels):
        row = dict(row)
        for name in [n for n in row if n in pivots]:
            if name not in row:
                continue
            factor = row[name]
            prow, pb = pivots[name]
            for other, c in prow.items():
                value = row.get(other, Scalar.zero()) - factor * c
                if value.is_zero():
                    row.pop(other, None)
                else:
                    row[other] = value
            b = b - factor * pb
        if not row:
            if not b.is_zero():
                return LinearSolution(
                    status="inconsistent",
                    certificate=f"{label}: 0 = {b}",
                )
            continue
        pivot = min(row, key=lambda n: order[n])
        scale = row[pivot].inverse()
        row = {n: c * scale for n, c in row.items()}
        b = b * scale
        # keep the echelon form reduced
        for name, (prow, pb) in list(pivots.items()):
            if pivot not in prow:
                continue
            factor = prow[pivot]
            new_row = dict(prow)
            for other, c in row.items():
                value = new_row.get(other, Scalar.zero()) - factor * c
                if value.is_zero():
                    new_row.pop(other, None)
                else:
                    new_row[other] = value
            pivots[name] = (new_row, pb - factor * b)
        pivots[pivot] = (row, b)

    free = [name for name in system.unknowns if name not in pivots]
    assignments = {}
    dependencies = {}
    for name in system.unknowns:
        if name not in pivots:
            continue
        prow, pb = pivots[name]
        assignments[name] = pb
        deps = {other: -c for other, c in prow.items() if other != name}
        if deps:
            dependencies[name] = deps
    status = "unique" if not free else "parametrized"
    return LinearSolution(
        status=status,
        assignments=assignments,
        dependencies=dependencies,
        free=free,
    )
