"""
Borel examples: the double of U_q(b+) and the bosonisation C_q[GL_1]⋉C[x]
"""
from src.catalog.registry import (
    action_records,
    coproduct_records,
    element,
    entry,
    load,
    relation_records,
    suite_records,
)
from src.constructions import bosonisation, generalized_double
from src.rmatrix import frt_calculus, gl1_determinant, standard_gln_rmatrix
from src.structure.action_check import verify_action_differentiable
from src.structure.actions import RightAction
from src.structure.base_check import VerificationContext
from src.structure.coaction_check import verify_coaction_differentiable
from src.tensoralg import TensorElement

BOREL_TEMPLATE = """
hdga 1
presentation {name}
  gen {x} deg 0
  gen {t} deg 0
  gen {ti} deg 0
  rel: {t}*{x} = q^2*{x}*{t}
  rel: {ti}*{x} = q^-2*{x}*{ti}
  rel: {t}*{ti} = 1
  rel: {ti}*{t} = 1
  rel: d({t})*{t} = q^2*{t}*d({t})
  rel: d({x})*{x} = q^2*{x}*d({x})
  rel: d({x})*{t} = {t}*d({x})
  rel: d({t})*{x} = q^2*{x}*d({t}) + (q^2 - 1)*{t}*d({x})
  rel: d({x})*{ti} = {ti}*d({x})
  rel: d({t})*{ti} = q^-2*{ti}*d({t})
  rel: d({t})*d({t}) = 0
  rel: d({x})*d({x}) = 0
  rel: d({t})*d({x}) = -d({x})*d({t})
  d {ti} = -q^-2*{ti}*{ti}*d({t})
  coproduct {x} = ten(1, {x}) + ten({x}, {t})
  coproduct {t} = ten({t}, {t})
  coproduct {ti} = ten({ti}, {ti})
  counit {x} = 0
  counit {t} = 1
  counit {ti} = 1
  antipode {x} = -{x}*{ti}
  antipode {t} = {ti}
  antipode {ti} = {t}
end
"""

DOUBLE_PAIRING = """
pairing P: Uqb x Uqm
  t, s = q^-2
  t, si = q^2
  ti, s = q^2
  ti, si = q^-2
  x, y = 1/(1 - q^2)
  x, s = 0
  x, si = 0
  t, y = 0
  ti, y = 0
end
"""

DOUBLE_RELATIONS = [
    ("t*s", "s*t"),
    ("t*y", "q^-2*y*t"),
    ("x*s", "q^-2*s*x"),
    ("x*y", "q^-2*y*x + (1 - s*t)/(1 - q^2)"),
    ("d(t)*s", "s*d(t)"),
    ("d(s)*t", "t*d(s)"),
    ("d(x)*s", "q^-2*s*d(x)"),
    ("d(s)*x", "q^2*x*d(s)"),
    ("d(t)*y", "q^-2*y*d(t)"),
    ("d(y)*t", "q^2*t*d(y)"),
    ("d(x)*y", "q^-2*y*d(x) - s*d(t)/(1 - q^2)"),
    ("d(y)*x", "q^2*x*d(y) + t*d(s)/(q^-2 - 1)"),
    ("d(t)*d(s)", "-d(s)*d(t)"),
    ("d(t)*d(y)", "-q^-2*d(y)*d(t)"),
    ("d(x)*d(s)", "-q^-2*d(s)*d(x)"),
    ("d(x)*d(y)", "-q^-2*d(y)*d(x) + d(s)*d(t)/(1 - q^2)"),
]

DOUBLE_ACTION = [
    ("t", "t", "t"),
    ("t", "x", "(1 - q^-2)*t*x"),
    ("x", "t", "q^-2*x"),
    ("x", "x", "(1 - q^-2)*x*x"),
    ("d(t)", "t", "q^2*d(t)"),
    ("d(t)", "x", "(q^2 - 1)*t*d(x)"),
    ("d(x)", "t", "d(x)"),
    ("d(x)", "x", "(q^2 - 1)*x*d(x)"),
    ("t", "d(t)", "(1 - q^2)*d(t)"),
    ("t", "d(x)", "(q^2 - 1)*x*d(t)"),
    ("x", "d(t)", "(q^-2 - 1)*d(x)"),
    ("x", "d(x)", "(1 - q^-2)*x*d(x)"),
    ("d(t)", "d(t)", "0"),
    ("d(t)", "d(x)", "(1 - q^2)*d(t)*d(x)"),
    ("d(x)", "d(t)", "0"),
    ("d(x)", "d(x)", "0"),
    ("t", "s", "q^-2*t"),
    ("t", "y", "0"),
    ("x", "s", "q^-2*x"),
    ("x", "y", "1/(1 - q^2)"),
    ("d(t)", "s", "q^-2*d(t)"),
    ("d(t)", "y", "0"),
    ("d(x)", "s", "q^-2*d(x)"),
    ("d(x)", "y", "0"),
    ("t", "d(s)", "0"),
    ("t", "d(y)", "0"),
    ("x", "d(s)", "0"),
    ("x", "d(y)", "0"),
]


def borel_text(name: str, x: str, t: str, ti: str) -> str:
    return BOREL_TEMPLATE.format(name=name, x=x, t=t, ti=ti)


@entry(
    "double_uqb",
    "Calculus on the quantum double D(U_q(b+)) built as a generalised double",
    "U_q(b+) with its 4D bicovariant calculus paired with a second copy",
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
        "(dx)s = q^-2 s dx: the usual listing prints q^-2 s ds, a misprint",
        "dx dy = -q^-2 dy dx + ds dt/(1 - q^2) as d of the (dx)y relation: "
        "the usual listing prints -ds dt/(1 - q^2), a misprint",
        "x◁s = q^-2 x, x◁y = 1/(1 - q^2), dx◁s = q^-2 dx, dx◁y = 0 pair the second coproduct leg with s and y: "
        "the usual listing prints x, t/(1 - q^2), dx, dt/(1 - q^2), a misprint",
    ),
)
def double_uqb(context: VerificationContext):
    text = borel_text("Uqb", "x", "t", "ti") + borel_text("Uqm", "y", "s", "si") + DOUBLE_PAIRING
    doc = load(text, context)
    uqb, copy = doc.hopf("Uqb"), doc.hopf("Uqm")
    inverse_antipode = {
        "y": element(copy, "-si*y"),
        "s": element(copy, "si"),
        "si": element(copy, "s"),
    }
    double = generalized_double(copy, uqb, doc.pairings["P"], inverse_antipode, name="D(U_q(b+))")
    suite_records(context, double)
    relation_records(context, double, DOUBLE_RELATIONS)
    action = double.artefacts["action"]
    action_records(context, action, DOUBLE_ACTION)
    verify_action_differentiable(action, context=context)
    return double


@entry(
    "borel_bplus",
    "Bosonisation of the braided line by C_q[GL_1] recovering C_q[B+]",
    "Ω(C_q[GL_1]) acting and coacting on the braided line C[x]",
    expect={
        "dga": True,
        "hopf": True,
        "confluence": True,
        "crossed_module": True,
        "rewrite.deterministic": True,
        "coaction": True,
        "catalog.relation": True,
        "catalog.coproduct": True,
        "catalog.action": True,
    },
)
def borel_bplus(context: VerificationContext):
    gl1 = frt_calculus(standard_gln_rmatrix(1), [["t"]], gl1_determinant("t", "ti"), name="Ω(C_q[GL_1])")
    line = load(
        """
        hdga 1
        presentation line
          gen x deg 0
          rel: d(x)*x = q^2*x*d(x)
          rel: d(x)*d(x) = 0
          coproduct x = ten(x, 1) + ten(1, x)
          counit x = 0
          antipode x = -x
        end
        """,
        context,
    ).hopf("line")
    values = {
        ("x", "t"): "q^-2*x",
        ("x", "ti"): "q^2*x",
        ("d(x)", "t"): "d(x)",
        ("d(x)", "ti"): "d(x)",
    }
    action = RightAction(line, gl1, {k: element(line, v) for k, v in values.items()}, name="◁t")
    coaction = {"x": TensorElement.pure(("x",), ("t",))}
    h = bosonisation(gl1, line, action, coaction, name="Ω(C_q[B+])")
    suite_records(context, h)
    relation_records(
        context,
        h,
        [
            ("x*t", "q^-2*t*x"),
            ("d(x)*t", "t*d(x)"),
            ("d(t)*x", "q^2*x*d(t) + (q^2 - 1)*t*d(x)"),
            ("d(x)*d(t)", "-d(t)*d(x)"),
        ],
    )
    coproduct_records(context, h, [("x", "ten(1, x) + ten(x, t)")])
    action_records(context, action, [("x", "d(t)", "(q^-2 - 1)*d(x)"), ("d(x)", "d(t)", "0")])
    verify_coaction_differentiable(line, h.artefacts["coaction_table"], h, name="Δ_R", context=context)
    return h
