use super::monad::SpanMonad;
use crate::spaneng::{check_equation, identity_span, Cell2, Env, Span};
use crate::ValidationReport;

/// A warping of a span monad `B` by an endo-span `A`: cells
/// `t: ABA ⇒ AB` and `k: 1 ⇒ AB`. Not validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warping {
    pub base: SpanMonad,
    pub endo: Span,
    pub t: Cell2,
    pub k: Cell2,
}

/// Binds `A`, `t` and `k` on top of the base environment, recording any
/// frame problem as a structural failure.
pub(crate) fn warping_env(w: &Warping, r: &mut ValidationReport) -> Option<Env> {
    let mut env = w.base.env();
    if w.endo.src() != w.base.objects() || w.endo.dst() != w.base.objects() {
        r.structural("endo-span is not on the base objects");
        return None;
    }
    env.bind_span("A", &w.endo);
    for (name, dom, cell) in [("t", "ABA", &w.t), ("k", "", &w.k)] {
        if let Err(e) = env.bind_cell(name, dom, "AB", cell) {
            r.structural(e.to_string());
        }
    }
    r.is_structurally_sound().then_some(env)
}

/// Axioms of a warping, as `(rule, lhs, rhs)` pasting equations.
pub const WARPING_AXIOMS: [(&str, &str, &str); 3] = [
    ("axiom 1", "t(ApA)(tBA)", "(Ap)(tB)(ABt)"),
    ("axiom 2", "t(kA)", "Ae"),
    ("axiom 3", "(Ap)(tB)(ABk)", "AB"),
];

pub fn validate_warping(w: &Warping) -> ValidationReport {
    let mut r = ValidationReport::new("warping");
    let Some(env) = warping_env(w, &mut r) else {
        return r;
    };
    for (rule, lhs, rhs) in WARPING_AXIOMS {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

impl Warping {
    /// `A = 1`, `t = 1_B`, `k = e`.
    pub fn identity(base: &SpanMonad) -> Self {
        Warping {
            base: base.clone(),
            endo: identity_span(base.objects()),
            t: Cell2::identity(base.carrier()),
            k: base.unit().clone(),
        }
    }
}
