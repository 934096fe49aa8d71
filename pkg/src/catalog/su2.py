"""
Ω(C[SU_2])⋊Ω(U(su_2)) as a generalised double

The calculus on C[SU_2] is presented through left-invariant Maurer-Cartan
forms: dt = tE with E = (e1 e2; e3 -e1). λ stays a free indeterminate and
the *-structure is not checked.
"""
from typing import Dict, List

from src.catalog.registry import action_records, element, entry, load, relation_records, suite_records
from src.constructions import generalized_double
from src.freealg import Element
from src.structure.action_check import verify_action_differentiable
from src.structure.base_check import VerificationContext
from src.structure.presentation import HopfDGA

SCALARS = ("lam",)
T = [["t11", "t12"], ["t21", "t22"]]
E = ["e1", "e2", "e3"]
X = ["x1", "x2", "x3"]

PAULI: Dict[str, List[List[str]]] = {
    "x1": [["0", "1"], ["1", "0"]],
    "x2": [["0", "-I"], ["I", "0"]],
    "x3": [["1", "0"], ["0", "-1"]],
}

SU2 = """
presentation SU2
  gen t11 deg 0
  gen t12 deg 0
  gen t21 deg 0
  gen t22 deg 0
  gen e1 deg 1
  gen e2 deg 1
  gen e3 deg 1
  rel: t12*t11 = t11*t12
  rel: t21*t11 = t11*t21
  rel: t22*t11 = t11*t22
  rel: t21*t12 = t12*t21
  rel: t22*t12 = t12*t22
  rel: t22*t21 = t21*t22
  rel: t11*t22 - t12*t21 = 1
{commuting}  rel: e1*e1 = 0
  rel: e2*e2 = 0
  rel: e3*e3 = 0
  rel: e2*e1 = -e1*e2
  rel: e3*e1 = -e1*e3
  rel: e3*e2 = -e2*e3
  d t11 = t11*e1 + t12*e3
  d t12 = t11*e2 - t12*e1
  d t21 = t21*e1 + t22*e3
  d t22 = t21*e2 - t22*e1
  d e1 = -e2*e3
  d e2 = -2*e1*e2
  d e3 = 2*e1*e3
  coproduct t11 = ten(t11, t11) + ten(t12, t21)
  coproduct t12 = ten(t11, t12) + ten(t12, t22)
  coproduct t21 = ten(t21, t11) + ten(t22, t21)
  coproduct t22 = ten(t21, t12) + ten(t22, t22)
  coproduct e1 = ten(1, e1) + ten(e1, t11*t22 + t12*t21) + ten(e2, t21*t22) - ten(e3, t11*t12)
  coproduct e2 = ten(1, e2) + 2*ten(e1, t12*t22) + ten(e2, t22*t22) - ten(e3, t12*t12)
  coproduct e3 = ten(1, e3) - 2*ten(e1, t11*t21) - ten(e2, t21*t21) + ten(e3, t11*t11)
  counit t11 = 1
  counit t12 = 0
  counit t21 = 0
  counit t22 = 1
  counit e1 = 0
  counit e2 = 0
  counit e3 = 0
  antipode t11 = t22
  antipode t12 = -t12
  antipode t21 = -t21
  antipode t22 = t11
  antipode e1 = -(t11*t22 + t12*t21)*e1 + t11*t21*e2 - t12*t22*e3
  antipode e2 = 2*t11*t12*e1 - t11*t11*e2 + t12*t12*e3
  antipode e3 = -2*t21*t22*e1 + t21*t21*e2 - t22*t22*e3
end
"""

USU2 = """
presentation Usu2
  gen x1 deg 0
  gen x2 deg 0
  gen x3 deg 0
  gen d(x1) deg 1
  gen d(x2) deg 1
  gen d(x3) deg 1
  gen theta deg 1
  rel: x2*x1 = x1*x2 - 2*lam*x3
  rel: x3*x1 = x1*x3 + 2*lam*x2
  rel: x3*x2 = x2*x3 - 2*lam*x1
  rel: d(x1)*x1 = x1*d(x1) - lam^2*theta
  rel: d(x1)*x2 = x2*d(x1) + lam*d(x3)
  rel: d(x1)*x3 = x3*d(x1) - lam*d(x2)
  rel: d(x2)*x1 = x1*d(x2) - lam*d(x3)
  rel: d(x2)*x2 = x2*d(x2) - lam^2*theta
  rel: d(x2)*x3 = x3*d(x2) + lam*d(x1)
  rel: d(x3)*x1 = x1*d(x3) + lam*d(x2)
  rel: d(x3)*x2 = x2*d(x3) - lam*d(x1)
  rel: d(x3)*x3 = x3*d(x3) - lam^2*theta
  rel: theta*x1 = x1*theta + d(x1)
  rel: theta*x2 = x2*theta + d(x2)
  rel: theta*x3 = x3*theta + d(x3)
  rel: d(x1)*d(x1) = 0
  rel: d(x2)*d(x2) = 0
  rel: d(x3)*d(x3) = 0
  rel: d(x2)*d(x1) = -d(x1)*d(x2)
  rel: d(x3)*d(x1) = -d(x1)*d(x3)
  rel: d(x3)*d(x2) = -d(x2)*d(x3)
  rel: theta*d(x1) = -d(x1)*theta
  rel: theta*d(x2) = -d(x2)*theta
  rel: theta*d(x3) = -d(x3)*theta
  rel: theta*theta = 0
  d theta = 0
  coproduct x1 = ten(1, x1) + ten(x1, 1)
  coproduct x2 = ten(1, x2) + ten(x2, 1)
  coproduct x3 = ten(1, x3) + ten(x3, 1)
  coproduct theta = ten(1, theta) + ten(theta, 1)
  counit x1 = 0
  counit x2 = 0
  counit x3 = 0
  counit theta = 0
  antipode x1 = -x1
  antipode x2 = -x2
  antipode x3 = -x3
  antipode theta = -theta
end
"""


def su2_document_text() -> str:
    commuting = "".join(f"  rel: {e}*{t} = {t}*{e}\n" for e in E for row in T for t in row)
    pairs = "".join(
        f"  {x}, {T[i][j]} = -I*lam*({PAULI[x][i][j]})\n" for x in X for i in range(2) for j in range(2)
    )
    pairing = f"pairing P: Usu2 x SU2\n{pairs}end\n"
    return "hdga 1\nscalars lam\n" + SU2.format(commuting=commuting) + USU2 + pairing


def pauli_bracket(double: HopfDGA, x: str, entries: List[List[Element]]) -> List[List[Element]]:
    """-iλ(Mσ - σM) for a 2x2 matrix M of elements"""
    sigma = [[element(double, s) for s in row] for row in PAULI[x]]
    coeff = element(double, "-I*lam", SCALARS)
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            total = Element.zero()
            for k in range(2):
                total = total + entries[i][k] * sigma[k][j] - sigma[i][k] * entries[k][j]
            row.append(double.reduce(coeff * total))
        out.append(row)
    return out


def cross_records(context: VerificationContext, double: HopfDGA):
    """[x_a, t] and [x_a, dt] against the Pauli brackets"""
    t = [[Element.word(n) for n in row] for row in T]
    dt = [[double.d(e) for e in row] for row in t]
    for x in X:
        xe = Element.word(x)
        for label, matrix in (("t", t), ("dt", dt)):
            expected = pauli_bracket(double, x, matrix)
            for i in range(2):
                for j in range(2):
                    m = matrix[i][j]
                    diff = double.reduce(xe * m - m * xe - expected[i][j])
                    context.report.add("catalog.relation", f"[{x}, {label}{i + 1}{j + 1}]", diff.is_zero(), diff)


def action_table() -> List[tuple]:
    values = []
    for x in X:
        for i in range(2):
            for j in range(2):
                delta = int(i == j)
                values.append((x, T[i][j], f"{delta}*{x} - I*lam*({PAULI[x][i][j]})"))
                values.append((f"d({x})", T[i][j], f"{delta}*d({x})"))
        for e in E:
            values.append((x, e, "0"))
            values.append((f"d({x})", e, "0"))
        for y in X:
            values.append((x, y, f"{x}*{y} - {y}*{x}"))
            values.append((f"d({x})", y, f"d({x})*{y} - {y}*d({x})"))
    for i in range(2):
        for j in range(2):
            values.append(("theta", T[i][j], f"{int(i == j)}*theta"))
    values += [("theta", e, "0") for e in E]
    return values


@entry(
    "su2_mirror",
    "Ω(C[SU_2])⋊Ω(U(su_2)) from the pairing ⟨x_a, t⟩ = -iλσ_a, acting on Ω(U(su_2))",
    "U(su_2) with its 4D calculus paired with C[SU_2] and its classical 3D calculus",
    expect={
        "dga": True,
        "hopf": True,
        "confluence": True,
        "pairing": True,
        "rewrite.deterministic": True,
        "catalog.relation": True,
        "catalog.action": True,
        "action": True,
    },
    notes=(
        "λ is a free indeterminate; the *-structure is not checked",
        "the C[SU_2] calculus uses the Maurer-Cartan forms e1, e2, e3 as generators",
    ),
)
def su2_mirror(context: VerificationContext):
    doc = load(su2_document_text(), context)
    su2, usu2 = doc.hopf("SU2"), doc.hopf("Usu2")
    # C[SU_2] is commutative, so S^-1 = S
    inverse_antipode = {name: su2.antipode_word((name,)) for name in su2.antipode_table}
    double = generalized_double(su2, usu2, doc.pairings["P"], inverse_antipode, name="Ω(C[SU_2])⋊Ω(U(su_2))")
    suite_records(context, double)
    cross_records(context, double)
    relation_records(
        context,
        double,
        [(f"{a}*{b}", f"{b}*{a}") for a in ("d(x1)", "d(x2)", "d(x3)", "theta") for row in T for b in row],
        SCALARS,
    )
    relation_records(
        context,
        double,
        [(f"{a}*{e}", f"-{e}*{a}") for a in ("d(x1)", "d(x2)", "d(x3)", "theta") for e in E],
        SCALARS,
    )
    action = double.artefacts["action"]
    action_records(context, action, action_table(), SCALARS)
    verify_action_differentiable(action, context=context)
    return double
