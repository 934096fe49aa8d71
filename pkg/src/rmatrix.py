"""
R-matrices and the FRT family of presentations

An R-matrix of dimension n is stored as an n²×n² grid with
    grid[(i, k), (j, l)] = R^i_j^k_l      (row i*n + k, column j*n + l).
Matrix identities are expanded index by index into scalar relations on
generator words when the FRT bialgebra, its calculus and the quantum plane
are built.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.errors import ConfigurationError, ScalarDomainError
from src.freealg import Alphabet, Element
from src.scalar import Scalar, q as q_symbol
from src.structure.coaction_check import coaction_from_matrix
from src.structure.presentation import DGAPresentation, HopfDGA
from src.tensoralg import TensorElement

Grid = List[List[Scalar]]

# Indeterminate standing for a fixed square root of q
SQRT_Q = "q_half"


def _zeros(m: int) -> Grid:
    return [[Scalar.zero() for _ in range(m)] for _ in range(m)]


def _identity(m: int) -> Grid:
    grid = _zeros(m)
    for i in range(m):
        grid[i][i] = Scalar.one()
    return grid


def _matmul(a: Grid, b: Grid) -> Grid:
    m = len(a)
    out = _zeros(m)
    for i in range(m):
        for k in range(m):
            if a[i][k].is_zero():
                continue
            aik = a[i][k]
            for j in range(m):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def _add(a: Grid, b: Grid, scale: Any = 1) -> Grid:
    return [[x + y * scale for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _inverse(a: Grid) -> Grid:
    """Gauss-Jordan inversion over the scalar field"""
    m = len(a)
    work = [list(row) + ident for row, ident in zip(a, _identity(m))]
    for col in range(m):
        pivot = next((r for r in range(col, m) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise ScalarDomainError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Scalar.one() / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(m):
            if r != col and not work[r][col].is_zero():
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[m:] for row in work]


def _first_difference(a: Grid, b: Grid) -> Optional[Tuple[int, int]]:
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return i, j
    return None


@dataclass
class MatrixCheckResult:
    """Outcome of an exact matrix identity check"""

    name: str
    passed: bool
    witness: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


class RMatrix:
    """
    An n²×n² matrix of scalars indexed R^i_j^k_l (0-based indices)

    Args:
        n: Dimension of the fundamental representation
        grid: n²×n² rows of scalars (anything Scalar.of accepts)
    """

    def __init__(self, n: int, grid: Sequence[Sequence[Any]]):
        size = n * n
        if len(grid) != size or any(len(row) != size for row in grid):
            raise ConfigurationError(f"an R-matrix of dimension {n} needs a {size}x{size} grid")
        self.n = n
        self.grid: Grid = [[Scalar.of(x) for x in row] for row in grid]

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(n, _identity(n * n))

    @classmethod
    def permutation(cls, n: int) -> "RMatrix":
        """P^i_j^k_l = δ^i_l δ^k_j"""
        grid = _zeros(n * n)
        for i in range(n):
            for k in range(n):
                grid[i * n + k][k * n + i] = Scalar.one()
        return cls(n, grid)

    def entry(self, i: int, j: int, k: int, l: int) -> Scalar:
        n = self.n
        return self.grid[i * n + k][j * n + l]

    def flipped(self) -> "RMatrix":
        """R21 = P R P"""
        n = self.n
        grid = _zeros(n * n)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        grid[i * n + k][j * n + l] = self.entry(k, l, i, j)
        return RMatrix(n, grid)

    def inverse(self) -> "RMatrix":
        return RMatrix(self.n, _inverse(self.grid))

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        return RMatrix(self.n, _matmul(self.grid, other.grid))

    def scaled(self, c: Any) -> "RMatrix":
        c = Scalar.of(c)
        return RMatrix(self.n, [[c * x for x in row] for row in self.grid])

    def substitute(self, assignment: Dict[str, Any]) -> "RMatrix":
        return RMatrix(self.n, [[x.substitute(assignment) for x in row] for row in self.grid])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.n == other.n and _first_difference(self.grid, other.grid) is None

    __hash__ = None

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.grid)


def _leg(r: RMatrix, legs: Tuple[int, int]) -> Grid:
    """R acting on two of three tensor legs, as an n³×n³ grid"""
    n = r.n
    size = n ** 3
    grid = _zeros(size)
    for row in range(size):
        i = (row // (n * n), (row // n) % n, row % n)
        for col in range(size):
            j = (col // (n * n), (col // n) % n, col % n)
            other = 3 - legs[0] - legs[1]
            if i[other] != j[other]:
                continue
            value = r.entry(i[legs[0]], j[legs[0]], i[legs[1]], j[legs[1]])
            if not value.is_zero():
                grid[row][col] = value
    return grid


def yang_baxter_check(r: RMatrix) -> MatrixCheckResult:
    """
    R12 R13 R23 = R23 R13 R12, exactly

    Returns:
        Result whose witness names the first differing (row, column)
    """
    r12, r13, r23 = _leg(r, (0, 1)), _leg(r, (0, 2)), _leg(r, (1, 2))
    lhs = _matmul(_matmul(r12, r13), r23)
    rhs = _matmul(_matmul(r23, r13), r12)
    where = _first_difference(lhs, rhs)
    if where is None:
        return MatrixCheckResult("yang_baxter", True)
    i, j = where
    return MatrixCheckResult(
        "yang_baxter",
        False,
        f"entry {where}: {lhs[i][j]} != {rhs[i][j]}",
        {"row": i, "col": j},
    )


def q_hecke_check(r: RMatrix, q: Any = None) -> MatrixCheckResult:
    """
    (PR - q)(PR + q⁻¹) = 0, with the equivalent R21 R = id + (q - q⁻¹) PR

    Args:
        r: R-matrix
        q: Hecke parameter (the indeterminate q by default)
    """
    q = q_symbol() if q is None else Scalar.of(q)
    if q.is_zero():
        raise ScalarDomainError("q-Hecke parameter must be nonzero")
    m = r.n * r.n
    pr = (RMatrix.permutation(r.n) @ r).grid
    ident = _identity(m)
    product = _matmul(_add(pr, ident, -q), _add(pr, ident, Scalar.one() / q))
    where = _first_difference(product, _zeros(m))
    lam = q - Scalar.one() / q
    r21r = _matmul(r.flipped().grid, r.grid)
    equivalent = _first_difference(r21r, _add(ident, pr, lam)) is None
    if where is None:
        return MatrixCheckResult("q_hecke", True, details={"r21_r_form": equivalent})
    i, j = where
    return MatrixCheckResult(
        "q_hecke",
        False,
        f"entry {where}: {product[i][j]} != 0",
        {"row": i, "col": j, "r21_r_form": equivalent},
    )


def conjugate_R(r: RMatrix) -> RMatrix:
    """-R21⁻¹, q-Hecke whenever R is and defining the same bialgebra"""
    return r.flipped().inverse().scaled(-1)


def _q_power(alpha: Any) -> Scalar:
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        return q_symbol() ** int(alpha)
    if alpha.denominator == 2:
        return Scalar.symbol(SQRT_Q) ** int(alpha * 2)
    raise ConfigurationError(f"q^{alpha} is not representable: use an integer or half-integer exponent")


def standard_gln_rmatrix(n: int = 2, alpha: Any = 0) -> RMatrix:
    """
    Standard GL_n R-matrix with prefactor q^alpha

    Diagonal entries R^i_i^i_i = q, R^i_i^k_k = 1 for i != k and
    R^i_k^k_i = q - q⁻¹ for i < k. Half-integer alpha uses the indeterminate
    SQRT_Q for a square root of q.
    """
    q = q_symbol()
    lam = q - Scalar.one() / q
    grid = _zeros(n * n)
    for i in range(n):
        for k in range(n):
            grid[i * n + k][i * n + k] = q if i == k else Scalar.one()
            if i < k:
                grid[i * n + k][k * n + i] = lam
    r = RMatrix(n, grid)
    return r if Fraction(alpha) == 0 else r.scaled(_q_power(alpha))


def matrix_names(prefix: str, n: int) -> List[List[str]]:
    return [[f"{prefix}{i + 1}{j + 1}" for j in range(n)] for i in range(n)]


@dataclass
class DeterminantData:
    """
    A grouplike central element to invert

    Args:
        expression: The determinant as an element in the matrix generators
        inverse_name: Name of the adjoined inverse generator
        antipode: Antipode on the matrix generators (may use the inverse)
        dt_factor: c with (dt)D = c D dt for every matrix generator t;
            computed from the calculus when None
        name: Generator standing for a composite determinant, or None
    """

    expression: Element
    inverse_name: str
    antipode: Dict[str, Element]
    dt_factor: Any = None
    name: Optional[str] = None

    @property
    def letters(self) -> List[str]:
        """The adjoined generators, the determinant letter first"""
        return ([self.name] if self.name else []) + [self.inverse_name]


def gl2_determinant(
    names: Optional[List[List[str]]] = None, inverse_name: str = "Dinv", name: str = "D"
) -> DeterminantData:
    """q-determinant D = ad - q⁻¹bc of the standard GL_2 matrix"""
    (a, b), (c, d) = names or [["a", "b"], ["c", "d"]]
    q = q_symbol()
    qi = Scalar.one() / q
    w = Element.word
    return DeterminantData(
        expression=w(a, d) - w(b, c).scale(qi),
        inverse_name=inverse_name,
        antipode={
            a: w(inverse_name, d),
            b: w(inverse_name, b).scale(-q),
            c: w(inverse_name, c).scale(-qi),
            d: w(inverse_name, a),
        },
        dt_factor=q * q,
        name=name,
    )


def gl1_determinant(name: str = "t", inverse_name: str = "ti") -> DeterminantData:
    return DeterminantData(
        expression=Element.word(name),
        inverse_name=inverse_name,
        antipode={name: Element.word(inverse_name)},
        dt_factor=q_symbol() * q_symbol(),
    )


def frt_relations(r: RMatrix, names: List[List[str]]) -> Tuple[List[Element], List[Element], List[Element]]:
    """
    Index expansion of R t1 t2 = t2 t1 R, (dt1) t2 = R21 t2 dt1 R and
    dt1 dt2 = -R21 dt2 dt1 R

    Returns:
        (degree-0, degree-1, degree-2) relations
    """
    n = r.n
    rng = range(n)
    t = lambda i, j: names[i][j]
    dt = lambda i, j: f"d({names[i][j]})"
    deg0, deg1, deg2 = [], [], []
    for i in rng:
        for k in rng:
            for j in rng:
                for l in rng:
                    lhs0, rhs0 = {}, {}
                    for a_ in rng:
                        for b_ in rng:
                            c = r.entry(i, a_, k, b_)
                            if not c.is_zero():
                                _acc(lhs0, (t(a_, j), t(b_, l)), c)
                            c = r.entry(a_, j, b_, l)
                            if not c.is_zero():
                                _acc(rhs0, (t(k, b_), t(i, a_)), c)
                    deg0.append(Element(lhs0) - Element(rhs0))
                    rhs1, rhs2 = {}, {}
                    for a_ in rng:
                        for b_ in rng:
                            outer = r.entry(k, b_, i, a_)
                            if outer.is_zero():
                                continue
                            for c_ in rng:
                                for e_ in rng:
                                    inner = r.entry(c_, j, e_, l)
                                    if inner.is_zero():
                                        continue
                                    _acc(rhs1, (t(b_, e_), dt(a_, c_)), outer * inner)
                                    _acc(rhs2, (dt(b_, e_), dt(a_, c_)), -(outer * inner))
                    deg1.append(Element.word(dt(i, j), t(k, l)) - Element(rhs1))
                    deg2.append(Element.word(dt(i, j), dt(k, l)) - Element(rhs2))
    return deg0, deg1, deg2


def _acc(terms: Dict, word, c: Scalar):
    total = terms.get(word, Scalar.zero()) + c
    if total.is_zero():
        terms.pop(word, None)
    else:
        terms[word] = total


def frt_calculus(
    r: RMatrix,
    names: Optional[List[List[str]]] = None,
    determinant: Optional[DeterminantData] = None,
    name: str = "Ω(A(R))",
    check_hecke: bool = True,
) -> HopfDGA:
    """
    The FRT bialgebra A(R) with its strongly bicovariant calculus

    Args:
        r: R-matrix, q-Hecke
        names: n×n generator names (t11, t12, ... by default)
        determinant: Grouplike central element to invert; adds the antipode
        name: Display name
        check_hecke: Refuse R that fails the q-Hecke condition

    Returns:
        HopfDGA with Δt = t⊗t, Δdt = dt⊗t + t⊗dt and the calculus relations

    Raises:
        ConfigurationError: R is not q-Hecke
    """
    if check_hecke:
        hecke = q_hecke_check(r)
        if not hecke.passed:
            raise ConfigurationError(f"R is not q-Hecke: {hecke.witness}")
    n = r.n
    names = names or matrix_names("t", n)
    alphabet = Alphabet()
    for row in names:
        for x in row:
            alphabet.add(x, 0)
    if determinant is not None:
        for x in determinant.letters:
            alphabet.add(x, 0)
    for row in names:
        for x in row:
            alphabet.add_differential(x)

    deg0, deg1, deg2 = frt_relations(r, names)
    relations = [e for e in deg0 + deg1 + deg2 if not e.is_zero()]
    coproduct = {}
    counit = {}
    for i in range(n):
        for j in range(n):
            coproduct[names[i][j]] = TensorElement(
                2, {((names[i][k],), (names[k][j],)): 1 for k in range(n)}
            )
            counit[names[i][j]] = 1 if i == j else 0

    differential = {}
    antipode = None
    if determinant is not None:
        inv = determinant.inverse_name
        letters = [x for row in names for x in row]
        factor = determinant.dt_factor
        if factor is None:
            factor = determinant_dt_factor(r, names, determinant)
        det = determinant.expression
        antipode = dict(determinant.antipode)
        if determinant.name:
            # composite determinant: D = expression as a letter of its own
            det = Element.word(determinant.name)
            relations.append(determinant.expression - det)
            relations.append(Element.word(inv, determinant.name) - Element.one())
            coproduct[determinant.name] = TensorElement.pure((determinant.name,), (determinant.name,))
            counit[determinant.name] = 1
            antipode[determinant.name] = Element.word(inv)
        relations.append(det * Element.word(inv) - Element.one())
        for x in letters:
            relations.append(Element.word(inv, x) - Element.word(x, inv))
            relations.append(
                Element.word(f"d({x})", inv)
                - Element.word(inv, f"d({x})").scale(Scalar.one() / Scalar.of(factor))
            )
            if determinant.name:
                relations.append(det * Element.word(x) - Element.word(x) * det)
                relations.append(
                    Element.word(f"d({x})", determinant.name)
                    - Element.word(determinant.name, f"d({x})").scale(Scalar.of(factor))
                )
        coproduct[inv] = TensorElement.pure((inv,), (inv,))
        counit[inv] = 1
        antipode[inv] = det
    h = HopfDGA(
        name,
        alphabet,
        relations,
        differential,
        coproduct=coproduct,
        counit=counit,
        antipode=antipode,
        maximal_prolongation=True,
    )
    if determinant is not None:
        inv = determinant.inverse_name
        d_det = h.d(determinant.expression)
        if determinant.name:
            h.differential[determinant.name] = d_det
        # d(D⁻¹) = -D⁻¹ (dD) D⁻¹
        h.differential[inv] = h.reduce(-(Element.word(inv) * d_det * Element.word(inv)))
        h._d_cache.clear()
    return h


def quantum_plane_calculus(
    r: RMatrix,
    q: Any = None,
    names: Optional[List[str]] = None,
    matrix: Optional[List[List[str]]] = None,
    name: str = "Ω(V(R))",
) -> Tuple[DGAPresentation, Dict[str, TensorElement]]:
    """
    The quantum plane q x1 x2 = x2 x1 R with its calculus

    Relations (dx1) x2 = q x2 dx1 R and -dx1 dx2 = q dx2 dx1 R.

    Args:
        r: R-matrix
        q: Normalisation (the indeterminate q by default)
        names: Coordinate names (x1, x2, ... by default)
        matrix: Names of the coacting matrix generators

    Returns:
        (presentation, right coaction table Δ_R x_i = x_j ⊗ t^j_i)
    """
    q = q_symbol() if q is None else Scalar.of(q)
    n = r.n
    names = names or [f"x{i + 1}" for i in range(n)]
    matrix = matrix or matrix_names("t", n)
    alphabet = Alphabet()
    for x in names:
        alphabet.add(x, 0)
    for x in names:
        alphabet.add_differential(x)
    dx = [f"d({x})" for x in names]
    relations = []
    for j in range(n):
        for l in range(n):
            rhs0, rhs1, rhs2 = {}, {}, {}
            for i in range(n):
                for k in range(n):
                    c = r.entry(i, j, k, l)
                    if c.is_zero():
                        continue
                    _acc(rhs0, (names[k], names[i]), c)
                    _acc(rhs1, (names[k], dx[i]), q * c)
                    _acc(rhs2, (dx[k], dx[i]), q * c)
            relations.append(Element.word(names[j], names[l]).scale(q) - Element(rhs0))
            relations.append(Element.word(dx[j], names[l]) - Element(rhs1))
            relations.append(-Element.word(dx[j], dx[l]) - Element(rhs2))
    relations = [e for e in relations if not e.is_zero()]
    plane = DGAPresentation(name, alphabet, relations, maximal_prolongation=True)
    return plane, coaction_from_matrix(names, matrix)


def determinant_dt_factor(r: RMatrix, names: List[List[str]], determinant: DeterminantData) -> Scalar:
    """
    The c with (dx) D = c D dx, read off the calculus without D⁻¹

    Raises:
        ConfigurationError: the factor differs between generators
    """
    bare = frt_calculus(r, names, None, check_hecke=False)
    found: Optional[Scalar] = None
    for x in (x for row in names for x in row):
        lhs = bare.reduce(Element.word(f"d({x})") * determinant.expression)
        rhs = bare.reduce(determinant.expression * Element.word(f"d({x})"))
        if rhs.is_zero():
            raise ConfigurationError(f"D d({x}) vanishes; no commutation factor")
        word = next(iter(rhs.terms))
        c = lhs.coefficient(word) / rhs.coefficient(word)
        if not bare.reduce(lhs - rhs.scale(c)).is_zero() or (found is not None and c != found):
            raise ConfigurationError(f"(d{x})D is not a multiple of D d{x}")
        found = c
    return found


def frt_skew_pairing(
    a: HopfDGA,
    a_prime: HopfDGA,
    r: RMatrix,
    names: List[List[str]],
    prime_names: List[List[str]],
    determinant: Optional[DeterminantData] = None,
    prime_determinant: Optional[DeterminantData] = None,
    name: str = "ℛ",
) -> "PairingSpec":
    """
    The coquasitriangular form ℛ(t^i_j, s^k_l) = R^i_j^k_l between two
    copies of A(R), with its values on adjoined determinant inverses

    Args:
        a: Left copy (letters names)
        a_prime: Right copy (letters prime_names); may be a itself
        r: R-matrix
        names: Matrix letters of a
        prime_names: Matrix letters of a_prime
        determinant: Determinant data of a, when D⁻¹ is adjoined
        prime_determinant: Determinant data of a_prime

    Returns:
        PairingSpec with the coquasitriangular convention; its inverse comes
        from the antipode of a
    """
    from src.pairing import PairingSpec

    n = r.n
    table: Dict[Tuple[str, str], Any] = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    table[(names[i][j], prime_names[k][l])] = r.entry(i, j, k, l)
    p = PairingSpec(a, a_prime, table, "coquasitriangular", name=name)
    if prime_determinant is not None:
        # ℛ(t, D′⁻¹) is the inverse matrix of ℛ(t, D′)
        m = [[p.evaluate(Element.word(names[i][j]), prime_determinant.expression) for j in range(n)] for i in range(n)]
        inv = _inverse(m)
        for i in range(n):
            for j in range(n):
                if prime_determinant.name:
                    table[(names[i][j], prime_determinant.name)] = m[i][j]
                table[(names[i][j], prime_determinant.inverse_name)] = inv[i][j]
    if determinant is not None:
        m = [[p.evaluate(determinant.expression, Element.word(prime_names[i][j])) for j in range(n)] for i in range(n)]
        inv = _inverse(m)
        for i in range(n):
            for j in range(n):
                if determinant.name:
                    table[(determinant.name, prime_names[i][j])] = m[i][j]
                table[(determinant.inverse_name, prime_names[i][j])] = inv[i][j]
    if determinant is not None and prime_determinant is not None:
        dd = p.evaluate(determinant.expression, prime_determinant.expression)
        for x in determinant.letters:
            for y in prime_determinant.letters:
                inverted = (x == determinant.inverse_name) != (y == prime_determinant.inverse_name)
                table[(x, y)] = Scalar.one() / dd if inverted else dd
    return PairingSpec(a, a_prime, table, "coquasitriangular", name=name)


def frt_coquasitriangular(
    a: HopfDGA,
    r: RMatrix,
    names: List[List[str]],
    determinant: Optional[DeterminantData] = None,
) -> "PairingSpec":
    """ℛ on A(R)⊗A(R), ℛ(t1, t2) = R"""
    return frt_skew_pairing(a, a, r, names, names, determinant, determinant)


@dataclass
class BraidedMatrices:
    """
    B(R) by transmutation together with the double that coacts on it

    Attributes:
        case: "i" (both copies carry the calculus of R) or "ii" (the left
            copy carries the calculus of the conjugate -R21⁻¹)
        source: Ω(A(R)) with D⁻¹
        transmuted: The braided matrices, letters u
        double: Ω′(A)⋈_ℛΩ(A)
        coaction: Δ_R u^i_j = Σ u^k_l ⊗ S(s^i_k) t^l_j into B(R)⊗(A⋈_ℛA)
    """

    case: str
    source: HopfDGA
    transmuted: Any
    double: HopfDGA
    coaction: Dict[str, TensorElement] = field(default_factory=dict)


def braided_matrices(
    r: RMatrix,
    case: str = "ii",
    names: Optional[List[List[str]]] = None,
    prime_names: Optional[List[List[str]]] = None,
    certify: bool = True,
) -> BraidedMatrices:
    """
    Braided matrices B(R) and the coaction of A⋈_ℛA on them

    Only n = 2 with the q-determinant is supported.

    Args:
        r: Standard GL_2 R-matrix (q-Hecke)
        case: "i" or "ii"
        names: Letters of A (default a, b, c, d)
        prime_names: Letters of the left copy (default s11 ... s22)
        certify: Certify the double

    Returns:
        BraidedMatrices ready for verify_coaction_differentiable

    Raises:
        ConfigurationError: unknown case or n != 2
    """
    from src.constructions import double_R, transmute

    if case not in ("i", "ii"):
        raise ConfigurationError(f"unknown braided-matrix case {case!r}")
    if r.n != 2:
        raise ConfigurationError("braided matrices are built for n = 2 only")
    names = names or [["a", "b"], ["c", "d"]]
    prime_names = prime_names or matrix_names("s", 2)
    det = gl2_determinant(names, "Dinv")
    prime_det = gl2_determinant(prime_names, "Sinv", "Sdet")
    prime_det.dt_factor = None

    a = frt_calculus(r, names, det, name="Ω(A(R))")
    a_prime = frt_calculus(r if case == "i" else conjugate_R(r), prime_names, prime_det, name="Ω′(A(R))")
    transmuted = transmute(
        a,
        frt_coquasitriangular(a, r, names, det),
        {names[i][j]: f"u{i + 1}{j + 1}" for i in range(2) for j in range(2)},
        name="Ω(B(R))",
    )
    skew = frt_skew_pairing(a, a_prime, r, names, prime_names, det, prime_det)
    double = double_R(a_prime, a, skew, name=f"A⋈ℛA case {case}", certify=certify)

    coaction = {}
    for i in range(2):
        for j in range(2):
            terms = TensorElement.zero(2)
            for k in range(2):
                for l in range(2):
                    right = double.mul(double.antipode_word((prime_names[i][k],)), Element.word(names[l][j]))
                    u = transmuted.rename[names[k][l]]
                    terms = terms + TensorElement.tensor(Element.word(u), right)
            coaction[transmuted.rename[names[i][j]]] = terms
    return BraidedMatrices(case, a, transmuted, double, coaction)
