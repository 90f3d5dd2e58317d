mod common;

use warpings::correspond::*;
use warpings::enumerate::*;
use warpings::fixtures::*;
use warpings::monadwarp::*;
use warpings::spaneng::{compose_word, enumerate_cells, identity_span, restrict_star};

#[test]
fn mw_view_inverts_mw_to_warping() {
    for c in [z2(), m2(), p1(), d2()] {
        let base = category_to_monad(&c).unwrap();
        for t in object_maps(c.objects()) {
            let mws = enumerate_mw_monads(&c, Some(&t), DEFAULT_LIMIT).unwrap();
            for m in &mws {
                let w = mw_to_warping(m).unwrap();
                assert!(validate_warping(&w).is_valid());
                assert_eq!(&mw_view(&w).unwrap(), m);
            }
            let a = restrict_star(&t);
            if let Ok(ws) = enumerate_warpings(&base, &a, DEFAULT_LIMIT) {
                assert_eq!(ws.len(), mws.len(), "T={t:?}");
                for w in &ws {
                    assert_eq!(&mw_to_warping(&mw_view(w).unwrap()).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn warping_and_mw_validators_agree_on_every_candidate() {
    for c in [z2(), p1()] {
        let base = category_to_monad(&c).unwrap();
        for t in object_maps(c.objects()) {
            let a = restrict_star(&t);
            let ab = compose_word(&[&a, base.carrier()]).unwrap();
            let aba = compose_word(&[&a, base.carrier(), &a]).unwrap();
            let ks: Vec<_> = enumerate_cells(&identity_span(base.objects()), &ab).unwrap().collect();
            for tc in enumerate_cells(&aba, &ab).unwrap() {
                for k in &ks {
                    let w = Warping {
                        base: base.clone(),
                        endo: a.clone(),
                        t: tc.clone(),
                        k: k.clone(),
                    };
                    let m = mw_view(&w).unwrap();
                    assert_eq!(validate_warping(&w).is_valid(), validate_mw(&m).is_valid());
                }
            }
        }
    }
}

#[test]
fn identity_endo_is_read_as_identity_map() {
    let base = category_to_monad(&z2()).unwrap();
    let w = Warping::identity(&base);
    let m = mw_view(&w).unwrap();
    assert!(validate_mw(&m).is_valid());
    assert_eq!(m, MwMonad::identity(&z2()));
}

#[test]
fn side_condition_failures_are_refused() {
    let base = category_to_monad(&z2()).unwrap();
    let a = restrict_star(&warpings::fincore::FinFunction::identity(z2().objects()));
    let monads = enumerate_monads_on_ab(&base, &a, DEFAULT_LIMIT).unwrap();
    let mut refused = 0;
    for m in &monads {
        let side = validate_side_condition(m).is_valid();
        assert_eq!(monad_to_warping(m).is_ok(), side);
        if !side {
            refused += 1;
        }
    }
    assert!(refused > 0);
}

#[test]
fn wreath_monad_is_warping_monad_on_fixtures() {
    for w in [w1(), p1_warping()] {
        let r = warping_to_wreath(&w).unwrap();
        assert!(validate_wreath(&r).is_valid());
        assert_eq!(wreath_to_monad(&r).unwrap(), warping_to_monad(&w).unwrap());
        assert_eq!(wreath_to_warping(&r).unwrap(), w);
    }
}

#[test]
fn algebra_translations_on_fixtures() {
    let e = common::w1_algebra();
    assert!(validate_e_family(&e).is_valid());
    let alg = e_family_to_algebra(&e).unwrap();
    assert!(validate_algebra(&alg).is_valid());
    let em = algebra_to_em_algebra(&e).unwrap();
    let cm = classical_monad(&w1_mw()).unwrap();
    assert!(validate_em_algebra(&cm, &em).is_valid());
    assert_eq!(em_algebra_to_e_family(&w1_mw(), &cm, &em).unwrap(), e);
}
