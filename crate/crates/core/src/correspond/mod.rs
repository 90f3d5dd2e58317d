//! Monads on `AB` from warpings and back, warpings to wreaths and back, the
//! Kleisli category of an mw-monad, and algebras.

mod algebra;
mod kleisli;
mod monad_ab;
mod wreaths;

pub use algebra::{
    algebra_as_e_family, algebra_to_em_algebra, classical_monad, e_family_to_algebra, em_algebra_to_e_family,
    em_algebras, validate_algebra, validate_classical_monad, validate_e_family, validate_em_algebra, ClassicalMonad,
    EFamily, EmAlgebra, WarpAlgebra, ALGEBRA_AXIOMS, POINT,
};
pub use kleisli::{category_via_star, kleisli_category, relabel};
pub use monad_ab::{
    monad_to_warping, validate_monad_laws, validate_monad_on_ab, validate_side_condition, warping_to_monad, MonadOnAB,
};
pub use wreaths::{warping_to_wreath, wreath_to_monad, wreath_to_warping};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{p1, p1_mw, p1_warping, w1, w1_mw, z2};
    use crate::monadwarp::{category_to_monad, monad_to_category, validate_warping, validate_wreath, Warping, Wreath};
    use crate::spaneng::PathElem;

    #[test]
    fn w1_monad_is_z2() {
        let m = warping_to_monad(&w1()).unwrap();
        assert!(validate_monad_on_ab(&m).is_valid());
        assert_eq!(category_via_star(&w1_mw()).unwrap(), z2());
        assert_eq!(kleisli_category(&w1_mw()).unwrap(), z2());
        assert_eq!(monad_to_warping(&m).unwrap(), w1());
    }

    #[test]
    fn identity_cases() {
        let base = category_to_monad(&z2()).unwrap();
        let id = Warping::identity(&base);
        let m = warping_to_monad(&id).unwrap();
        assert_eq!(m.as_span_monad().unwrap(), base);
        assert_eq!(monad_to_warping(&m).unwrap(), id);
        assert_eq!(warping_to_wreath(&id).unwrap(), Wreath::identity(&base));
        assert_eq!(wreath_to_warping(&Wreath::identity(&base)).unwrap(), id);
        assert_eq!(
            wreath_to_monad(&Wreath::identity(&base))
                .unwrap()
                .as_span_monad()
                .unwrap(),
            base
        );
    }

    #[test]
    fn p1_paths() {
        let w = p1_warping();
        let m = warping_to_monad(&w).unwrap();
        assert_eq!(m.carrier().entry("0", "0").len(), 1);
        let wr = warping_to_wreath(&w).unwrap();
        assert!(validate_wreath(&wr).is_valid());
        assert_eq!(wreath_to_warping(&wr).unwrap(), w);
        assert_eq!(wreath_to_monad(&wr).unwrap(), m);
        let k = kleisli_category(&p1_mw()).unwrap();
        assert_eq!(k.hom("0", "0").elements(), ["u"]);
        assert_eq!(k.hom("0", "1").elements(), ["u"]);
        assert_eq!(k.hom("1", "0").elements(), ["1"]);
        assert_eq!(k.hom("1", "1").elements(), ["1"]);
        assert_eq!(category_via_star(&p1_mw()).unwrap(), k);
        assert_eq!(monad_to_category(&category_to_monad(&p1()).unwrap()), p1());
    }

    #[test]
    fn w1_wreath_d_is_identity_and_constant_d_fails() {
        let wr = warping_to_wreath(&w1()).unwrap();
        for f in wr.d.components().values() {
            for (a, b) in f.pairs() {
                assert_eq!(a.atoms()[1], b.atoms()[0]);
            }
        }
        let mut bad = wr.clone();
        let s = PathElem::from_parts(vec!["*".into(), "s".into()], vec!["o".into()]).unwrap();
        let one = PathElem::from_parts(vec!["1".into(), "*".into()], vec!["o".into()]).unwrap();
        bad.d = wr.d.with_value("o", "o", &s, one).unwrap();
        let r = validate_wreath(&bad);
        assert!(!r.is_valid());
        assert!(r.failed_rules().contains(&"axiom 4"), "{r}");
    }

    #[test]
    fn algebras_and_e_families() {
        let w = w1();
        assert!(validate_algebra(&WarpAlgebra::self_action(&w)).is_valid());
        let e = EFamily::from_fn(&w1_mw(), "o", |_, g| g.to_string()).unwrap();
        assert!(validate_e_family(&e).is_valid());
        let alg = e_family_to_algebra(&e).unwrap();
        assert!(validate_algebra(&alg).is_valid());
        assert_eq!(algebra_as_e_family(&alg).unwrap(), e);
        let bad = EFamily::from_fn(&w1_mw(), "o", |_, _| "s".into()).unwrap();
        let r = validate_e_family(&bad);
        assert!(r.failed_rules().contains(&"axiom 2"));
        assert!(r.first_witness("axiom 2").unwrap().starts_with("g=1:"));
        assert!(!validate_algebra(&e_family_to_algebra(&bad).unwrap()).is_valid());
        let cm = classical_monad(&w1_mw()).unwrap();
        assert!(validate_classical_monad(&cm).is_valid());
        let em = algebra_to_em_algebra(&e).unwrap();
        assert_eq!(em.structure, "1");
        assert_eq!(em_algebra_to_e_family(&w1_mw(), &cm, &em).unwrap(), e);
    }

    #[test]
    fn mutated_self_action_fails() {
        let w = w1();
        let mut alg = WarpAlgebra::self_action(&w);
        let e = alg.act.dom().entry("o", "o").elements()[0].clone();
        let img = alg.act.apply("o", "o", &e).unwrap().clone();
        let other = alg
            .act
            .cod()
            .entry("o", "o")
            .iter()
            .find(|x| **x != img)
            .unwrap()
            .clone();
        alg.act = alg.act.with_value("o", "o", &e, other).unwrap();
        assert!(!validate_algebra(&alg).is_valid());
        assert!(validate_warping(&w).is_valid());
    }
}
