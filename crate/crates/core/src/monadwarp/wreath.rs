use super::monad::SpanMonad;
use crate::spaneng::{check_equation, identity_span, Cell2, Env, Span};
use crate::ValidationReport;

/// A wreath over a span monad `B`: an endo-span `A` with
/// `d: BA ⇒ AB`, `q: AA ⇒ AB` and `j: 1 ⇒ AB`. Not validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wreath {
    pub base: SpanMonad,
    pub endo: Span,
    pub d: Cell2,
    pub q: Cell2,
    pub j: Cell2,
}

pub(crate) fn wreath_env(w: &Wreath, r: &mut ValidationReport) -> Option<Env> {
    let mut env = w.base.env();
    if w.endo.src() != w.base.objects() || w.endo.dst() != w.base.objects() {
        r.structural("endo-span is not on the base objects");
        return None;
    }
    env.bind_span("A", &w.endo);
    for (name, dom, cell) in [("d", "BA", &w.d), ("q", "AA", &w.q), ("j", "", &w.j)] {
        if let Err(e) = env.bind_cell(name, dom, "AB", cell) {
            r.structural(e.to_string());
        }
    }
    r.is_structurally_sound().then_some(env)
}

/// Axioms of a wreath, as `(rule, lhs, rhs)` pasting equations.
pub const WREATH_AXIOMS: [(&str, &str, &str); 7] = [
    ("axiom 1", "(Ap)(dB)(Bd)", "d(pA)"),
    ("axiom 2", "d(eA)", "Ae"),
    ("axiom 3", "(Ap)(qB)(Ad)(dA)", "(Ap)(dB)(Bq)"),
    ("axiom 4", "(Ap)(jB)", "(Ap)(dB)(Bj)"),
    ("axiom 5", "(Ap)(qB)(Aq)", "(Ap)(qB)(Ad)(qA)"),
    ("axiom 6", "(Ap)(qB)(Aj)", "Ae"),
    ("axiom 7", "(Ap)(qB)(Ad)(jA)", "Ae"),
];

pub fn validate_wreath(w: &Wreath) -> ValidationReport {
    let mut r = ValidationReport::new("wreath");
    let Some(env) = wreath_env(w, &mut r) else {
        return r;
    };
    for (rule, lhs, rhs) in WREATH_AXIOMS {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

impl Wreath {
    /// `A = 1`, `d = 1_B`, `q = j = e`.
    pub fn identity(base: &SpanMonad) -> Self {
        Wreath {
            base: base.clone(),
            endo: identity_span(base.objects()),
            d: Cell2::identity(base.carrier()),
            q: base.unit().clone(),
            j: base.unit().clone(),
        }
    }
}
