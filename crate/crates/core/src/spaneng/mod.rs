//! Strict model of the bicategory of spans of finite sets.
//!
//! Elements of composite spans are flattened [`PathElem`]s, so composing
//! spans is associative and unital on the nose and 2-cell equations reduce to
//! pointwise comparison. [`PastingExpr`] is a small language for whiskered
//! vertical composites, evaluated against an [`Env`] of named spans and cells.

mod cell;
mod pasting;
mod span;

pub use cell::{
    cells_equal, count_cells, elements, enumerate_cells, vcompose, whisker, whisker_left, whisker_right, Cell2,
    CellWitness,
};
pub use pasting::{eval_pasting, word, Binding, Env, PastingExpr, Word};
pub use span::{compose_spans, compose_word, identity_span, restrict_star, star_function, PathElem, Span, STAR};

/// Checks `lhs = rhs` (two pasting expressions) and records a witness on failure.
pub(crate) fn check_equation(
    env: &Env,
    report: &mut crate::ValidationReport,
    rule: &str,
    lhs: &str,
    rhs: &str,
) -> crate::Result<()> {
    let l = env.eval_str(lhs)?;
    let r = env.eval_str(rhs)?;
    if let Err(w) = cells_equal(&l, &r) {
        report.violation(rule, format!("{lhs} vs {rhs}: {w}"));
    }
    Ok(())
}
