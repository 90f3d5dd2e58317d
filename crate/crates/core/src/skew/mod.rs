//! Finite skew bicategories, skew warpings, their Kleisli construction and
//! skew algebras.
//!
//! Structure cells are stored componentwise and every axiom is checked by
//! evaluating [`SkewPastingExpr`] terms over all tuples of 1-cells and 2-cells.

mod algebra;
mod bicat;
mod embed;
mod expr;
mod monoidal;
mod search;
mod warping;

pub use algebra::{validate_skew_algebra, SkewAlgebra};
pub use bicat::{pair_functor, validate_skew_bicategory, CellFamily, SkewBicategory};
pub use embed::{discrete_skew, mw_as_skew_warping};
pub use expr::{build, Cell1Expr, Mor2, Obj1, SkewEnv, SkewPastingExpr};
pub use monoidal::{one_object_view, skew_monoidal_of, thin_arrow, SkewMonoidalCategory};
pub use search::{algebra_slots, search_algebra_cells, search_warping_cells, warping_slots, CellSearch, Slot};
pub use warping::{skew_kleisli, validate_skew_warping, SkewWarping};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspond::kleisli_category;
    use crate::fincore::Arrow;
    use crate::fixtures::{m2_strict, p1_mw, s1, s1_const_top_warping, s1_monoidal, w1_mw, z2};

    #[test]
    fn fixtures_are_valid() {
        for s in [s1(), m2_strict(), discrete_skew(&z2()).unwrap()] {
            let r = validate_skew_bicategory(&s);
            assert!(r.is_valid(), "{r}");
        }
    }

    #[test]
    fn m2_with_alpha_s_fails() {
        let mut s = m2_strict();
        for v in s.assoc.values_mut() {
            *v = "s".into();
        }
        let r = validate_skew_bicategory(&s);
        assert!(!r.is_valid());
        assert!(r.is_structurally_sound(), "{r}");
        let failed = r.failed_rules();
        assert!(
            failed.contains(&"axiom 2") && failed.contains(&"axiom 3") && failed.contains(&"axiom 4"),
            "{failed:?}"
        );
    }

    #[test]
    fn identity_warping_kleisli_is_base() {
        for s in [s1(), m2_strict()] {
            let w = SkewWarping::identity(&s).unwrap();
            let r = validate_skew_warping(&w);
            assert!(r.is_valid(), "{r}");
            assert_eq!(skew_kleisli(&w).unwrap(), s);
        }
    }

    #[test]
    fn const_top_kleisli_is_genuinely_skew() {
        let w = s1_const_top_warping();
        let r = validate_skew_warping(&w);
        assert!(r.is_valid(), "{r}");
        let k = skew_kleisli(&w).unwrap();
        assert!(validate_skew_bicategory(&k).is_valid());
        assert_eq!(k.compose("o", "o", "o", "top", "bot").unwrap(), "bot");
        assert_eq!(k.compose("o", "o", "o", "bot", "top").unwrap(), "top");
        let rho_bot = &k.right_unitor[&vec!["o".to_string(), "o".into(), "bot".into()]];
        assert_eq!(rho_bot, "<");
        let (search, _) = search_warping_cells(&w, 1000).unwrap();
        assert!(search.rigid && search.valid == 1);
    }

    #[test]
    fn m2_nu_mutation_fails_and_search_counts() {
        let w = SkewWarping::identity(&m2_strict()).unwrap();
        let mut bad = w.clone();
        for v in bad.nu.values_mut() {
            *v = "s".into();
        }
        let r = validate_skew_warping(&bad);
        assert!(r.failed_rules().contains(&"axiom 2"), "{r}");
        let (search, found) = search_warping_cells(&w, 1000).unwrap();
        assert!(!search.rigid);
        assert!(found.contains(&w));
        for f in &found {
            assert!(validate_skew_bicategory(&skew_kleisli(f).unwrap()).is_valid());
        }
    }

    #[test]
    fn monoidal_roundtrip() {
        let m = s1_monoidal();
        assert_eq!(skew_monoidal_of(&one_object_view(&m)).unwrap(), m);
        assert_eq!(one_object_view(&skew_monoidal_of(&s1()).unwrap()), s1());
        assert!(skew_monoidal_of(&discrete_skew(&crate::fixtures::p1()).unwrap()).is_err());
    }

    #[test]
    fn discrete_agreement_with_kleisli() {
        for m in [w1_mw(), p1_mw()] {
            let w = mw_as_skew_warping(&m).unwrap();
            assert!(validate_skew_warping(&w).is_valid());
            let k = skew_kleisli(&w).unwrap();
            assert_eq!(k, discrete_skew(&kleisli_category(&m).unwrap()).unwrap());
        }
    }

    #[test]
    fn algebras() {
        for w in [
            SkewWarping::identity(&s1()).unwrap(),
            s1_const_top_warping(),
            SkewWarping::identity(&m2_strict()).unwrap(),
        ] {
            let a = SkewAlgebra::self_algebra(&w, "o").unwrap();
            let r = validate_skew_algebra(&a);
            assert!(r.is_valid(), "{r}");
        }
        let w = SkewWarping::identity(&m2_strict()).unwrap();
        let mut a = SkewAlgebra::self_algebra(&w, "o").unwrap();
        for v in a.cell_kappa.values_mut() {
            *v = "s".into();
        }
        assert!(!validate_skew_algebra(&a).is_valid());
    }

    #[test]
    fn expression_typing() {
        use build::*;
        let s = s1();
        let env = SkewEnv::new(&s);
        let bot = cell("o", "o", "bot");
        let top = cell("o", "o", "top");
        let m = env.eval(&alpha(&top, &bot, &top)).unwrap();
        assert_eq!(m.arrow, Arrow::new("bot", "bot", "1"));
        assert!(env.eval(&nu0("o")).is_err());
        assert!(env.eval(&then(vec![id(&bot), id(&top)])).is_err());
    }
}
