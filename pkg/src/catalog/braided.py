"""
Doubles A⋈_ℛA of C_q[GL_2] and the braided matrices they coact on
"""

from src.catalog.registry import entry, records_of, suite_records
from src.errors import PoleError
from src.freealg import Element
from src.report import VerificationReport
from src.rmatrix import BraidedMatrices, RMatrix, braided_matrices, standard_gln_rmatrix
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import verify_coaction_differentiable
from src.structure.dga_check import verify_dga

NAMES = [["a", "b"], ["c", "d"]]
PRIME_NAMES = [["s11", "s12"], ["s21", "s22"]]


def canonical_action_records(context: VerificationContext, bm: BraidedMatrices, r: RMatrix):
    """t◁s = t R on the matrix letters, t◁ds = 0"""
    double = bm.double
    action = double.artefacts["action"]
    for i in range(2):
        for j in range(2):
            t = Element.word(NAMES[i][j])
            for k in range(2):
                for l in range(2):
                    s = PRIME_NAMES[k][l]
                    expected = Element.zero()
                    for m in range(2):
                        expected = expected + Element.word(NAMES[i][m]).scale(r.entry(m, j, k, l))
                    diff = bm.source.reduce(action.act(t, Element.word(s)) - expected)
                    context.report.add("catalog.action", f"{NAMES[i][j]}◁{s}", diff.is_zero(), diff)
                    value = bm.source.reduce(action.act(t, Element.word(f"d({s})")))
                    context.report.add("catalog.action", f"{NAMES[i][j]}◁d({s})", value.is_zero(), value)


def coaction_report(context: VerificationContext, bm: BraidedMatrices) -> VerificationReport:
    local = VerificationContext(subject=f"coaction on {bm.transmuted.presentation.name}", degree_bound=context.degree_bound)
    verify_coaction_differentiable(
        bm.transmuted.presentation, bm.coaction, bm.double, name="Δ_R on B(R)", context=local
    )
    context.report.extend(local.report)
    return local.report


def double_case(context: VerificationContext, case: str) -> BraidedMatrices:
    r = standard_gln_rmatrix(2)
    bm = braided_matrices(r, case, NAMES, PRIME_NAMES)
    suite_records(context, bm.double)
    canonical_action_records(context, bm, r)
    return bm


@entry(
    "gl2_double_R_case_i",
    "A⋈_ℛA for C_q[GL_2] with the calculus of R on both copies",
    "Double of a coquasitriangular Hopf algebra with itself, same calculus on both factors",
    expect={
        "dga": True,
        "hopf": True,
        "confluence": True,
        "rewrite.deterministic": True,
        "catalog.action": True,
        "coaction": False,
        "coaction_involutive": True,
    },
    notes=("the coaction on B(R) is expected to fail for generic q and to hold once R is involutive (q = 1)",),
)
def gl2_double_R_case_i(context: VerificationContext):
    bm = double_case(context, "i")
    report = coaction_report(context, bm)
    try:
        classical = report.specialize({"q": 1})
    except PoleError as exc:
        context.note("gl2_double_R_case_i", "specialisation at q = 1 hit a pole", exc)
        context.report.add("coaction_involutive", "q = 1", False, witness=str(exc))
        return bm.double
    for record in records_of(classical, "coaction"):
        context.report.add("coaction_involutive", f"{record.check} {record.subject}", record.passed, witness=record.witness)
    return bm.double


@entry(
    "gl2_double_R_case_ii",
    "A⋈_ℛA for C_q[GL_2] with the conjugate calculus on the left copy",
    "Double of a coquasitriangular Hopf algebra with itself, calculus of -R21^-1 on the left factor",
    expect={
        "dga": True,
        "hopf": True,
        "confluence": True,
        "rewrite.deterministic": True,
        "catalog.action": True,
        "coaction": True,
    },
)
def gl2_double_R_case_ii(context: VerificationContext):
    bm = double_case(context, "ii")
    coaction_report(context, bm)
    return bm.double


@entry(
    "braided_matrices_gl2",
    "Braided matrices B(R) by transmutation and the differentiable coaction of A⋈_ℛA",
    "Transmutation of C_q[GL_2] with its calculus, conjugate calculus on the left factor of the double",
    expect={
        "catalog.transmutation": True,
        "dga": True,
        "coaction": True,
    },
)
def braided_matrices_gl2(context: VerificationContext):
    bm = braided_matrices(standard_gln_rmatrix(2), "ii", NAMES, PRIME_NAMES)
    transmuted = bm.transmuted
    braided = transmuted.presentation
    for rel in braided.system.relations():
        image = transmuted.realize(rel)
        context.report.add("catalog.transmutation", str(rel), image.is_zero(), image)
    verify_dga(braided, context=context)
    coaction_report(context, bm)
    return braided
