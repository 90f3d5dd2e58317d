#![allow(dead_code)]

use std::path::PathBuf;

use warpings::cli::{MonadTable, Structure};
use warpings::correspond::warping_to_wreath;
use warpings::correspond::EFamily;
use warpings::fixtures::*;
use warpings::monadwarp::{category_to_monad, mw_to_warping, MwMonad, Warping};
use warpings::skew::{SkewAlgebra, SkewWarping};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.json"))
}

pub fn w1_k_s_mw() -> MwMonad {
    let mut m = w1_mw();
    m.unit_arrows.insert("o".into(), "s".into());
    m
}

pub fn w1_algebra() -> EFamily {
    let m = w1_mw();
    EFamily::from_fn(&m, "o", |z, g| m.ext_at(z, "o", g).unwrap().clone()).unwrap()
}

/// Every structure shipped as a fixture file, by file stem.
pub fn catalogue() -> Vec<(&'static str, Structure)> {
    let z2_monad = category_to_monad(&z2()).unwrap();
    let w1_monad = warpings::correspond::warping_to_monad(&w1()).unwrap();
    vec![
        ("z2.category", Structure::Category(z2())),
        ("m2.category", Structure::Category(m2())),
        ("p1.category", Structure::Category(p1())),
        ("d2.category", Structure::Category(d2())),
        (
            "z2.monad",
            Structure::Monad(MonadTable {
                table: z2(),
                over: None,
            }),
        ),
        ("w1.mw_monad", Structure::MwMonad(w1_mw())),
        ("w1.warping", Structure::Warping(w1())),
        ("w1.wreath", Structure::Wreath(warping_to_wreath(&w1()).unwrap())),
        (
            "w1.monad",
            Structure::Monad(MonadTable::of_monad_on_ab(&w1_monad).unwrap()),
        ),
        ("w1.algebra", Structure::Algebra(w1_algebra())),
        ("w1_k_s.mw_monad", Structure::MwMonad(w1_k_s_mw())),
        (
            "w1_k_s.warping",
            Structure::Warping(mw_to_warping(&w1_k_s_mw()).unwrap()),
        ),
        ("p1.mw_monad", Structure::MwMonad(p1_mw())),
        ("p1.warping", Structure::Warping(p1_warping())),
        (
            "p1.wreath",
            Structure::Wreath(warping_to_wreath(&p1_warping()).unwrap()),
        ),
        ("identity_z2.warping", Structure::Warping(Warping::identity(&z2_monad))),
        ("identity_p1.mw_monad", Structure::MwMonad(MwMonad::identity(&p1()))),
        ("s1.skew_bicategory", Structure::SkewBicategory(s1())),
        (
            "s1_identity.skew_warping",
            Structure::SkewWarping(SkewWarping::identity(&s1()).unwrap()),
        ),
        (
            "s1_const_top.skew_warping",
            Structure::SkewWarping(s1_const_top_warping()),
        ),
        (
            "s1_const_top.skew_algebra",
            Structure::SkewAlgebra(SkewAlgebra::self_algebra(&s1_const_top_warping(), "o").unwrap()),
        ),
        ("m2_strict.skew_bicategory", Structure::SkewBicategory(m2_strict())),
        (
            "m2_strict_identity.skew_warping",
            Structure::SkewWarping(SkewWarping::identity(&m2_strict()).unwrap()),
        ),
    ]
}

/// Fixture files that are not valid structures: stem and the bytes.
pub fn broken_files() -> Vec<(&'static str, String)> {
    let w1_text = warpings::cli::emit(&Structure::Warping(w1()));
    vec![
        ("truncated", w1_text[..w1_text.len() / 2].to_string()),
        ("unknown_kind", "{\n  \"kind\": \"tricategory\"\n}\n".to_string()),
    ]
}

/// Runs the CLI in-process.
pub fn warp(args: &[&str]) -> (i32, String, String) {
    let mut all = vec!["warp"];
    all.extend_from_slice(args);
    warpings::cli::execute(all)
}
