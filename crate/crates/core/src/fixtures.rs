//! Small named structures used by tests, examples and the CLI fixtures.

use std::collections::BTreeMap;

use crate::fincore::{FinCategory, FinFunction, FinFunctor, FinSet};
use crate::monadwarp::{mw_to_warping, MwMonad, Warping};
use crate::skew::{one_object_view, thin_arrow, SkewBicategory, SkewMonoidalCategory, SkewWarping};

/// The group `Z/2 = {1, s}` as a one-object category on `o`.
pub fn z2() -> FinCategory {
    FinCategory::from_monoid(
        "o",
        &["1", "s"],
        "1",
        |g, f| if g == f { "1".into() } else { "s".into() },
    )
}

/// The idempotent monoid `{1, s}` with `ss = s`, on one object `o`.
pub fn m2() -> FinCategory {
    FinCategory::from_monoid("o", &["1", "s"], "1", |g, f| {
        if g == "1" && f == "1" {
            "1".into()
        } else {
            "s".into()
        }
    })
}

/// The arrow category: objects `0`, `1` and one arrow `u: 0 → 1`.
pub fn p1() -> FinCategory {
    FinCategory::builder(&["0", "1"])
        .identity("0", "1")
        .identity("1", "1")
        .arrow("0", "1", "u")
        .build()
}

/// The discrete category on `{0, 1}`.
pub fn d2() -> FinCategory {
    FinCategory::discrete(&FinSet::of(&["0", "1"]))
}

/// `T = id`, `ext = id`, `K = 1` on `Z/2`.
pub fn w1_mw() -> MwMonad {
    MwMonad::identity(&z2())
}

pub fn w1() -> Warping {
    mw_to_warping(&w1_mw()).expect("W1")
}

/// `T` constant at `1` on the arrow category; every choice is forced.
pub fn p1_mw() -> MwMonad {
    let c = p1();
    let t = FinFunction::from_fn(c.objects().clone(), c.objects().clone(), |_| "1".to_string()).expect("T");
    MwMonad::from_fn(
        &c,
        t,
        |_, _, _| "1".into(),
        |x| if x == "0" { "u".into() } else { "1".into() },
    )
    .expect("P1")
}

pub fn p1_warping() -> Warping {
    mw_to_warping(&p1_mw()).expect("P1")
}

/// The arrow category `bot → top` with meet as tensor and `top` as unit;
/// every structure cell is an identity.
pub fn s1_monoidal() -> SkewMonoidalCategory {
    let c = FinCategory::from_preorder(&["bot", "top"], |a, b| a == b || a == "bot");
    let meet = |a: &str, b: &str| if a == "top" { b.to_string() } else { "bot".to_string() };
    let one = |_: &str| Some("1".to_string());
    SkewMonoidalCategory::from_fn(
        "o",
        &c,
        |a, b| Some(meet(a, b)),
        |b, a| thin_arrow(&c, &meet(&b.src, &a.src), &meet(&b.tgt, &a.tgt)),
        "top",
        |_, _, _| Some("1".into()),
        one,
        one,
    )
    .expect("S1")
}

pub fn s1() -> SkewBicategory {
    one_object_view(&s1_monoidal())
}

/// One 1-cell `e` whose endomorphisms form the idempotent monoid `{1, s}`;
/// horizontal composition is multiplication and every structure cell is `1`.
pub fn m2_strict_monoidal() -> SkewMonoidalCategory {
    let mul = |a: &str, b: &str| {
        if a == "1" && b == "1" {
            "1".to_string()
        } else {
            "s".to_string()
        }
    };
    let c = FinCategory::from_monoid("e", &["1", "s"], "1", mul);
    let one = |_: &str| Some("1".to_string());
    SkewMonoidalCategory::from_fn(
        "o",
        &c,
        |_, _| Some("e".into()),
        |b, a| Some(mul(&b.name, &a.name)),
        "e",
        |_, _, _| Some("1".into()),
        one,
        one,
    )
    .expect("M2")
}

pub fn m2_strict() -> SkewBicategory {
    one_object_view(&m2_strict_monoidal())
}

/// On S1: `T` sends every 1-cell to `top`, `K = top`; all cells are forced.
/// Its Kleisli structure has `a ⊛ b = b` and a non-invertible right unitor.
pub fn s1_const_top_warping() -> SkewWarping {
    let base = s1();
    let hom = base.hom("o", "o").clone();
    let ext = BTreeMap::from([(
        ("o".to_string(), "o".to_string()),
        FinFunctor::constant(&hom, &hom, "top").expect("constant functor"),
    )]);
    let k = BTreeMap::from([("o".to_string(), "top".to_string())]);
    let t = FinFunction::identity(&base.objects);
    SkewWarping::with_cells(&base, t, ext, k, thin_arrow).expect("S1 warping")
}
