"""
C_q[GL_2] examples

The FRT calculus of the standard R-matrix, its Maurer-Cartan basis and the
isomorphism onto the inner family built on left-invariant forms, the
derivation of the calculus from differentiability, and the bosonisation by
the quantum plane.
"""
from fractions import Fraction
from typing import List, Tuple

from src.catalog.registry import (
    action_records,
    coproduct_records,
    element,
    entry,
    load,
    relation_records,
    rmatrix_records,
    suite_records,
)
from src.constructions import bosonisation
from src.derive import Ansatz, LeibnizConstraint, MapConstraint, VanishingConstraint, derive_relations
from src.freealg import Element
from src.rmatrix import (
    conjugate_R,
    frt_calculus,
    gl1_determinant,
    gl2_determinant,
    quantum_plane_calculus,
    standard_gln_rmatrix,
)
from src.scalar import q as q_symbol
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import differentiable_extension, verify_coaction_differentiable
from src.structure.forms import maurer_cartan, verify_inner, verify_left_invariance
from src.structure.maps import MapSpec
from src.structure.morphism import verify_morphism
from src.structure.presentation import HopfDGA
from src.tensoralg import TensorElement

NAMES = [["a", "b"], ["c", "d"]]
LETTERS = ["a", "b", "c", "d"]
PLANE = ["x1", "x2"]
LAM = "(q - q^-1)"
DETERMINANT = "(a*d - q^-1*b*c)"

QUANTUM_MATRIX_RELATIONS = """
  rel: b*a = q*a*b
  rel: c*a = q*a*c
  rel: d*b = q*b*d
  rel: d*c = q*c*d
  rel: c*b = b*c
  rel: d*a = a*d + (q - q^-1)*b*c
"""

DEGREE_ONE = [
    ("d(a)*a", "q^2*a*d(a)"),
    ("d(a)*b", "q*b*d(a)"),
    ("d(a)*c", "q*c*d(a)"),
    ("d(a)*d", "d*d(a)"),
    ("d(b)*a", "q*a*d(b) + (q^2 - 1)*b*d(a)"),
    ("d(b)*b", "q^2*b*d(b)"),
    ("d(b)*c", f"c*d(b) + {LAM}*d*d(a)"),
    ("d(b)*d", "q*d*d(b)"),
    ("d(c)*a", "q*a*d(c) + (q^2 - 1)*c*d(a)"),
    ("d(c)*b", f"b*d(c) + {LAM}*d*d(a)"),
    ("d(c)*c", "q^2*c*d(c)"),
    ("d(c)*d", "q*d*d(c)"),
    ("d(d)*a", f"a*d(d) + {LAM}*(b*d(c) + c*d(b) + {LAM}*d*d(a))"),
    ("d(d)*b", "q*b*d(d) + (q^2 - 1)*d*d(b)"),
    ("d(d)*c", "q*c*d(d) + (q^2 - 1)*d*d(c)"),
    ("d(d)*d", "q^2*d*d(d)"),
]

DEGREE_TWO = [
    ("d(a)*d(a)", "0"),
    ("d(b)*d(b)", "0"),
    ("d(c)*d(c)", "0"),
    ("d(d)*d(d)", "0"),
    ("d(b)*d(a)", "-q^-1*d(a)*d(b)"),
    ("d(c)*d(a)", "-q^-1*d(a)*d(c)"),
    ("d(d)*d(b)", "-q^-1*d(b)*d(d)"),
    ("d(d)*d(c)", "-q^-1*d(c)*d(d)"),
    ("d(c)*d(b)", f"-d(b)*d(c) + {LAM}*d(a)*d(d)"),
    ("d(d)*d(a)", "-d(a)*d(d)"),
]

MAURER_CARTAN = {
    "a": "Dinv*(d*d(a) - q*b*d(c))",
    "b": "Dinv*(d*d(b) - q*b*d(d))",
    "c": "Dinv*(a*d(c) - q^-1*c*d(a))",
    "d": "Dinv*(a*d(d) - q^-1*c*d(b))",
}

# images of the differentials under the isomorphism onto the inner calculus
ISOMORPHISM = {
    "d(a)": f"q*{LAM}*a*e_a + {LAM}*b*e_b",
    "d(b)": f"{LAM}*a*e_c + b*(q*{LAM}*e_d + {LAM}^2*e_a)",
    "d(c)": f"q*{LAM}*c*e_a + {LAM}*d*e_b",
    "d(d)": f"{LAM}*c*e_c + d*(q*{LAM}*e_d + {LAM}^2*e_a)",
}

PLANE_RELATIONS = [
    ("x2*x1", "q*x1*x2"),
    ("d(x1)*x1", "q^2*x1*d(x1)"),
    ("d(x2)*x2", "q^2*x2*d(x2)"),
    ("d(x1)*x2", "q*x2*d(x1)"),
    ("d(x2)*x1", "q*x1*d(x2) + (q^2 - 1)*x2*d(x1)"),
    ("d(x1)*d(x1)", "0"),
    ("d(x2)*d(x2)", "0"),
    ("d(x2)*d(x1)", "-q^-1*d(x1)*d(x2)"),
]

# (module letter, acting letter) -> value of the crossed-module action
PLANE_ACTION = {
    ("x1", "a"): "q^-2*x1",
    ("x1", "b"): f"-q^-1*{LAM}*x2",
    ("x1", "c"): "0",
    ("x1", "d"): "q^-1*x1",
    ("x2", "a"): "q^-1*x2",
    ("x2", "b"): "0",
    ("x2", "c"): "0",
    ("x2", "d"): "q^-2*x2",
    ("d(x1)", "a"): "d(x1)",
    ("d(x1)", "b"): "0",
    ("d(x1)", "c"): "0",
    ("d(x1)", "d"): "q^-1*d(x1)",
    ("d(x2)", "a"): "q^-1*d(x2)",
    ("d(x2)", "b"): "0",
    ("d(x2)", "c"): f"q^-1*{LAM}*d(x1)",
    ("d(x2)", "d"): "d(x2)",
    ("x1", "D"): "q^-3*x1",
    ("x2", "D"): "q^-3*x2",
    ("d(x1)", "D"): "q^-1*d(x1)",
    ("d(x2)", "D"): "q^-1*d(x2)",
    ("x1", "Dinv"): "q^3*x1",
    ("x2", "Dinv"): "q^3*x2",
    ("d(x1)", "Dinv"): "q*d(x1)",
    ("d(x2)", "Dinv"): "q*d(x2)",
}

FORCED_ACTION = [
    ("x1", "d(a)", f"-q^-1*{LAM}*d(x1)"),
    ("x1", "d(b)", f"-q^-1*{LAM}*d(x2)"),
    ("x1", "d(c)", "0"),
    ("x1", "d(d)", "0"),
    ("x2", "d(a)", "0"),
    ("x2", "d(b)", "0"),
    ("x2", "d(c)", f"-q^-1*{LAM}*d(x1)"),
    ("x2", "d(d)", f"-q^-1*{LAM}*d(x2)"),
    ("d(x1)", "d(a)", "0"),
    ("d(x2)", "d(d)", "0"),
]

PARABOLIC_RELATIONS = [
    ("x1*a", "q^-2*a*x1"),
    ("x1*b", f"q^-1*b*x1 - q^-1*{LAM}*a*x2"),
    ("x1*c", "q^-2*c*x1"),
    ("x1*d", f"q^-1*d*x1 - q^-1*{LAM}*c*x2"),
    ("x2*a", "q^-1*a*x2"),
    ("x2*b", "q^-2*b*x2"),
    ("x2*c", "q^-1*c*x2"),
    ("x2*d", "q^-2*d*x2"),
    ("d(x1)*a", "a*d(x1)"),
    ("d(x1)*b", "q^-1*b*d(x1)"),
    ("d(x1)*c", "c*d(x1)"),
    ("d(x1)*d", "q^-1*d*d(x1)"),
    ("d(x2)*a", f"q^-1*a*d(x2) + q^-1*{LAM}*b*d(x1)"),
    ("d(x2)*b", "b*d(x2)"),
    ("d(x2)*c", f"q^-1*c*d(x2) + q^-1*{LAM}*d*d(x1)"),
    ("d(x2)*d", "d*d(x2)"),
    ("x1*d(a)", f"q^-2*d(a)*x1 - q^-1*{LAM}*a*d(x1)"),
    ("x2*d(b)", f"q^-2*d(b)*x2 - q^-1*{LAM}*b*d(x2)"),
    ("d(x1)*d(a)", "-d(a)*d(x1)"),
    ("d(x1)*d(b)", "-q^-1*d(b)*d(x1)"),
    ("d(x2)*d(b)", "-d(b)*d(x2)"),
]


def gl2(context: VerificationContext, determinant: bool = True, name: str = "Ω(C_q[GL_2])") -> HopfDGA:
    r = standard_gln_rmatrix(2)
    return frt_calculus(r, NAMES, gl2_determinant(NAMES, "Dinv") if determinant else None, name=name)


def plane_coaction(matrix: List[List[str]] = NAMES, names: List[str] = PLANE):
    return quantum_plane_calculus(standard_gln_rmatrix(2), names=names, matrix=matrix, name="Ω(C_q^2)")


def alpha_family_text(k: int, name: str) -> str:
    """
    The inner calculus C_q[GL_2]⋉Λ with R normalised by q^(k/2); d = [θ, ·]
    with θ = e_a + e_d, Dinv left out
    """
    p = lambda n: f"q^{n}"
    lines = [
        "hdga 1",
        f"presentation {name}",
        *(f"  gen {x} deg 0 prec {i + 1}" for i, x in enumerate(LETTERS)),
        *(f"  gen e_{x} deg 1 prec {101 + i}" for i, x in enumerate(LETTERS)),
        QUANTUM_MATRIX_RELATIONS,
        f"  rel: e_a*a = {p(k + 2)}*a*e_a",
        f"  rel: e_a*b = {p(k)}*b*e_a",
        f"  rel: e_a*c = {p(k + 2)}*c*e_a",
        f"  rel: e_a*d = {p(k)}*d*e_a",
        f"  rel: e_b*a = {p(k + 1)}*a*e_b",
        f"  rel: e_b*b = {p(k + 1)}*(b*e_b + {LAM}*a*e_a)",
        f"  rel: e_b*c = {p(k + 1)}*c*e_b",
        f"  rel: e_b*d = {p(k + 1)}*(d*e_b + {LAM}*c*e_a)",
        f"  rel: e_c*a = {p(k + 1)}*(a*e_c + {LAM}*b*e_a)",
        f"  rel: e_c*b = {p(k + 1)}*b*e_c",
        f"  rel: e_c*c = {p(k + 1)}*(c*e_c + {LAM}*d*e_a)",
        f"  rel: e_c*d = {p(k + 1)}*d*e_c",
        f"  rel: e_d*a = {p(k)}*(a*e_d + {LAM}*b*e_b)",
        f"  rel: e_d*b = {p(k + 2)}*b*e_d + {p(k)}*{LAM}*(a*e_c + {LAM}*b*e_a)",
        f"  rel: e_d*c = {p(k)}*(c*e_d + {LAM}*d*e_b)",
        f"  rel: e_d*d = {p(k + 2)}*d*e_d + {p(k)}*{LAM}*(c*e_c + {LAM}*d*e_a)",
        "  rel: e_a*e_a = 0",
        "  rel: e_b*e_b = 0",
        "  rel: e_c*e_c = 0",
        "  rel: e_b*e_a = -e_a*e_b",
        "  rel: e_c*e_a = -e_a*e_c",
        "  rel: e_c*e_b = -e_b*e_c",
        f"  rel: e_d*e_a = -e_a*e_d - q^-1*{LAM}*e_c*e_b",
        f"  rel: e_d*e_c = -q^2*e_c*e_d - q^-1*{LAM}*e_a*e_c",
        f"  rel: e_d*e_b = -q^-2*e_b*e_d - q^-3*{LAM}*e_b*e_a",
        f"  rel: e_d*e_d = q^-1*{LAM}*e_c*e_b",
    ]
    theta = "(e_a + e_d)"
    for x in LETTERS:
        lines.append(f"  d {x} = {theta}*{x} - {x}*{theta}")
    for x in LETTERS:
        lines.append(f"  d e_{x} = {theta}*e_{x} + e_{x}*{theta}")
    lines.append("end")
    return "\n".join(lines)


def alpha_family(context: VerificationContext, k: int):
    name = f"Omega_{'m' if k < 0 else ''}{abs(k)}"
    return load(alpha_family_text(k, name), context).presentation(name)


@entry(
    "gl2_frt",
    "FRT calculus on C_q[GL_2] with the q-determinant inverted",
    "Standard GL_2 R-matrix in the q-Hecke normalisation",
    expect={
        "rmatrix.yang_baxter": True,
        "rmatrix.q_hecke": True,
        "rmatrix_shifted.yang_baxter": True,
        "rmatrix_shifted.q_hecke": False,
        "rmatrix_conjugate.q_hecke": True,
        "dga": True,
        "hopf": True,
        "confluence": True,
        "rewrite.deterministic": True,
        "catalog.relation": True,
        "catalog.plane": True,
        "coaction": True,
    },
)
def gl2_frt(context: VerificationContext):
    r = standard_gln_rmatrix(2)
    rmatrix_records(context, r, "R")
    rmatrix_records(context, standard_gln_rmatrix(2, Fraction(-1, 2)), "q^(-1/2) R", check="rmatrix_shifted")
    rmatrix_records(context, conjugate_R(r), "-R21^-1", check="rmatrix_conjugate")

    h = gl2(context)
    suite_records(context, h)
    relation_records(context, h, DEGREE_ONE + DEGREE_TWO)
    det = element(h, DETERMINANT)
    d_det = h.d(det)
    expected = element(h, "a*d(d) - q^-1*b*d(c) - q^-1*c*d(b) + q^-2*d*d(a)")
    diff = h.reduce(d_det - expected)
    context.report.add("catalog.relation", "dD", diff.is_zero(), diff)
    q2 = q_symbol() ** 2
    for x in LETTERS:
        dx = Element.word(f"d({x})")
        diff = h.reduce(dx * det - (det * dx).scale(q2))
        context.report.add("catalog.relation", f"(d{x})D = q^2 D d{x}", diff.is_zero(), diff)
        diff = h.reduce(d_det * Element.word(x) - Element.word(x) * d_det - (det * dx).scale(q2 - 1))
        context.report.add("catalog.relation", f"(dD){x} = {x} dD + (q^2 - 1) D d{x}", diff.is_zero(), diff)

    plane, table = plane_coaction()
    relation_records(context, plane, PLANE_RELATIONS, check="catalog.plane")
    verify_coaction_differentiable(plane, table, h, name="Δ_R on C_q^2", context=context)

    r1 = standard_gln_rmatrix(1)
    gl1 = frt_calculus(r1, [["t"]], gl1_determinant("t", "ti"), name="Ω(C_q[GL_1])")
    line, line_table = quantum_plane_calculus(r1, names=["x"], matrix=[["t"]], name="Ω(C_q^1)")
    verify_coaction_differentiable(line, line_table, gl1, name="Δ_R on C_q^1", context=context)
    return h


@entry(
    "gl2_4d",
    "Maurer-Cartan basis of the FRT calculus and its isomorphism onto the inner calculus",
    "Left-invariant forms of Ω(C_q[GL_2]) against the α = 0 member of the inner family",
    expect={
        "catalog.maurer_cartan": True,
        "forms.left_invariance": True,
        "morphism": True,
    },
)
def gl2_4d(context: VerificationContext):
    h = gl2(context)
    for x, text in MAURER_CARTAN.items():
        form = maurer_cartan(h, x)
        diff = h.reduce(form - element(h, text))
        context.report.add("catalog.maurer_cartan", f"ω_{x} = {text}", diff.is_zero(), diff)
        verify_left_invariance(h, form, subject=f"ω_{x}", context=context)

    source = gl2(context, determinant=False, name="Ω(A(R))")
    target = alpha_family(context, 0)
    assignments = {x: Element.word(x) for x in LETTERS}
    assignments.update({k: element(target, v) for k, v in ISOMORPHISM.items()})
    phi = MapSpec("algebra", source, target, assignments, name="φ")
    verify_morphism(source, target, phi, context=context)
    return h


@entry(
    "gl2_alpha_family",
    "Inner calculi on C_q[GL_2] for several normalisations of R",
    "Left-invariant forms e_a, e_b, e_c, e_d with θ = e_a + e_d",
    expect={
        "dga": True,
        "confluence": True,
        "forms.inner": True,
        "rewrite.deterministic": True,
    },
    notes=("the inverse determinant is left out; the relations and d are those of the matrix generators",),
)
def gl2_alpha_family(context: VerificationContext):
    last = None
    for k in (0, -1, 2):
        p = alpha_family(context, k)
        theta = element(p, "e_a + e_d")
        diff = p.reduce(theta * theta)
        context.report.add("forms.inner", f"θ^2 in {p.name}", diff.is_zero(), diff)
        verify_inner(p, theta, context=context)
        suite_records(context, p)
        last = p
    return last


def derivation_ansatz(context: VerificationContext) -> Ansatz:
    text = "\n".join(
        [
            "hdga 1",
            "presentation GL2base",
            *(f"  gen {x} deg 0" for x in LETTERS),
            *(f"  gen d({x}) deg 1" for x in LETTERS),
            QUANTUM_MATRIX_RELATIONS,
            "end",
        ]
    )
    base = load(text, context).presentation("GL2base")
    grading = {"a": (1, 0, 1, 0), "b": (1, 0, 0, 1), "c": (0, 1, 1, 0), "d": (0, 1, 0, 1)}
    ansatz = Ansatz(base, "k", grading)
    for x in LETTERS:
        for y in LETTERS:
            ansatz.add(f"d({x})", y)
    for i, x in enumerate(LETTERS):
        for y in LETTERS[i:]:
            ansatz.add(f"d({y})", f"d({x})")
    return ansatz


def determinant_constraint(p) -> List[Tuple[str, Element]]:
    """
    (da)D = q^2 D da, which holds once the determinant inclusion is
    differentiable and forces [da, d] = 0 given the coaction relations
    """
    det = Element.word("a", "d") - Element.word("b", "c").scale(q_symbol().inverse())
    da = Element.word("d(a)")
    return [("(da)D - q^2 D da", da * det - (det * da).scale(q_symbol() ** 2))]


def derivation_constraints():
    plane, table = plane_coaction()
    return [
        MapConstraint(lambda p: differentiable_extension(plane, p, table, "right", "Δ_R*"), label="coaction"),
        VanishingConstraint(determinant_constraint, label="determinant"),
        LeibnizConstraint(),
    ]


@entry(
    "gl2_derived",
    "The FRT calculus on C_q[GL_2] recovered from differentiability alone",
    "Coaction on the quantum plane and the determinant inclusion made differentiable",
    expect={
        "derive": True,
        "catalog.relation": True,
    },
    notes=("d(d) d(b) = -q^-1 d(b) d(d): the usual listing has d(c) on the right, a misprint",),
)
def gl2_derived(context: VerificationContext):
    ansatz = derivation_ansatz(context)
    result = derive_relations(ansatz, derivation_constraints(), name="Ω(C_q[GL_2]) derived")
    context.report.extend(result.report)
    if result.presentation is None:
        return ansatz.base
    relation_records(context, result.presentation, DEGREE_ONE + DEGREE_TWO)
    return result.presentation


def plane_as_braided(plane) -> HopfDGA:
    """The quantum plane with primitive x_i as a braided Hopf algebra"""
    coproduct = {x: TensorElement.pure((x,), ()) + TensorElement.pure((), (x,)) for x in PLANE}
    antipode = {x: Element.word(x).scale(-1) for x in PLANE}
    return HopfDGA.from_presentation(plane, coproduct=coproduct, counit={x: 0 for x in PLANE}, antipode=antipode)


@entry(
    "gl2_parabolic",
    "Bosonisation of the quantum plane by C_q[GL_2], a quantum maximal parabolic",
    "Ω(C_q[GL_2]) acting and coacting on the braided quantum plane",
    expect={
        "dga": True,
        "hopf": True,
        "confluence": True,
        "crossed_module": True,
        "rewrite.deterministic": True,
        "catalog.action": True,
        "catalog.relation": True,
        "catalog.coproduct": True,
        "coaction": True,
    },
    notes=(
        "x2 a = q^-1 a x2 and (dx2) c = q^-1 c dx2 + q^-1 λ d dx1: the usual tables print x1 and dx2 there, misprints",
    ),
)
def gl2_parabolic(context: VerificationContext):
    a = gl2(context)
    plane, table = plane_coaction()
    b = plane_as_braided(plane)
    action = RightAction(b, a, {k: element(b, v) for k, v in PLANE_ACTION.items()}, name="◁t")
    coaction = {x: table[x] for x in PLANE}
    h = bosonisation(a, b, action, coaction, name="Ω(C_q[GL_2]⋉C_q^2)")
    suite_records(context, h)
    action_records(context, action, FORCED_ACTION)
    relation_records(context, h, PARABOLIC_RELATIONS)
    coproduct_records(
        context,
        h,
        [
            ("x1", "ten(1, x1) + ten(x1, a) + ten(x2, c)"),
            ("x2", "ten(1, x2) + ten(x1, b) + ten(x2, d)"),
            ("d(x1)", "ten(1, d(x1)) + ten(d(x1), a) + ten(d(x2), c) + ten(x1, d(a)) + ten(x2, d(c))"),
        ],
    )
    verify_coaction_differentiable(b, h.artefacts["coaction_table"], h, name="Δ_R", context=context)
    return h
