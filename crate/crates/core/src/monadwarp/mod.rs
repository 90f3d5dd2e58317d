//! Monads in spans, warpings, wreaths and mw-monads, with validators.
//!
//! Axioms are stated once as pasting equations and checked by evaluating
//! both sides over every element of the relevant composite span.

mod monad;
mod mw;
mod warping;
mod wreath;

pub use monad::{category_to_monad, monad_to_category, validate_span_monad, SpanMonad};
pub use mw::{mw_to_warping, mw_view, validate_mw, MwMonad};
pub(crate) use warping::warping_env;
pub use warping::{validate_warping, Warping, WARPING_AXIOMS};
pub(crate) use wreath::wreath_env;
pub use wreath::{validate_wreath, Wreath, WREATH_AXIOMS};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{p1_mw, w1, w1_mw, z2};
    use crate::spaneng::PathElem;

    #[test]
    fn w1_valid_and_mw_equations_hold() {
        assert!(validate_mw(&w1_mw()).is_valid());
        let r = validate_warping(&w1());
        assert!(r.is_valid(), "{r}");
    }

    #[test]
    fn w1_with_k_s_fails_axiom_3_at_identity() {
        let mut m = w1_mw();
        m.unit_arrows.insert("o".into(), "s".into());
        let r = validate_mw(&m);
        assert!(r.failed_rules().contains(&"axiom 3"));
        assert!(r.first_witness("axiom 3").unwrap().starts_with("f=1:"));
        let w = mw_to_warping(&m).unwrap();
        let r = validate_warping(&w);
        assert!(r.failed_rules().contains(&"axiom 3"), "{r}");
    }

    #[test]
    fn identity_structures_are_valid() {
        let base = category_to_monad(&z2()).unwrap();
        assert!(validate_warping(&Warping::identity(&base)).is_valid());
        assert!(validate_wreath(&Wreath::identity(&base)).is_valid());
        let v = mw_view(&Warping::identity(&base)).unwrap();
        assert_eq!(v, MwMonad::identity(&z2()));
    }

    #[test]
    fn views_roundtrip() {
        for m in [w1_mw(), p1_mw()] {
            let w = mw_to_warping(&m).unwrap();
            let r = validate_warping(&w);
            assert!(r.is_valid(), "{r}");
            assert_eq!(mw_view(&w).unwrap(), m);
            assert_eq!(mw_to_warping(&mw_view(&w).unwrap()).unwrap(), w);
        }
    }

    #[test]
    fn mutated_t_is_caught() {
        let w = w1();
        let e = w.t.dom().entry("o", "o").elements()[0].clone();
        let img = w.t.apply("o", "o", &e).unwrap().clone();
        let other =
            w.t.cod()
                .entry("o", "o")
                .iter()
                .find(|x| **x != img)
                .cloned()
                .unwrap_or_else(PathElem::empty);
        let mut bad = w.clone();
        bad.t = w.t.with_value("o", "o", &e, other).unwrap();
        assert!(!validate_warping(&bad).is_valid());
    }
}
