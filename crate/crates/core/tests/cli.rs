use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_warp")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}{out}");
    out
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(out: &str) -> Value {
    serde_json::from_str(out).unwrap()
}

#[test]
fn validate_exit_codes() {
    let out = run_ok(&["validate", path(&fixture("w1.warping"))]);
    assert_eq!(report(&out)["verdict"], "valid");

    let (code, out, _) = run(&["validate", path(&fixture("w1_k_s.warping"))]);
    assert_eq!(code, 1);
    let r = report(&out);
    assert_eq!(r["verdict"], "invalid");
    let rules: Vec<&str> = r["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["rule"].as_str().unwrap())
        .collect();
    assert!(rules.contains(&"axiom 3"), "{rules:?}");

    let (code, out, _) = run(&["validate", path(&fixture("truncated"))]);
    assert_eq!(code, 2);
    let r = report(&out);
    assert_eq!(r["verdict"], "malformed");
    assert!(r["message"].as_str().unwrap().contains("line"), "{r}");

    let (code, _, _) = run(&["validate", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
}

#[test]
fn convert_roundtrips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let w1 = fixture("w1.warping");
    let wreath = dir.path().join("w.json");
    run_ok(&["convert", path(&w1), "--to", "wreath", "-o", path(&wreath)]);
    assert_eq!(
        std::fs::read_to_string(&wreath).unwrap(),
        std::fs::read_to_string(fixture("w1.wreath")).unwrap()
    );
    let back = run_ok(&["convert", path(&wreath), "--to", "warping"]);
    assert_eq!(back, std::fs::read_to_string(&w1).unwrap());

    let direct = run_ok(&["convert", path(&wreath), "--to", "monad"]);
    let warping = dir.path().join("back.json");
    std::fs::write(&warping, &back).unwrap();
    assert_eq!(direct, run_ok(&["convert", path(&warping), "--to", "monad"]));
}

#[test]
fn identity_warping_converts_to_base_monad() {
    let out = run_ok(&["convert", path(&fixture("identity_z2.warping")), "--to", "monad"]);
    assert_eq!(out, std::fs::read_to_string(fixture("z2.monad")).unwrap());
}

#[test]
fn kleisli_outputs_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_ok(&["kleisli", path(&fixture("identity_p1.mw_monad"))]);
    assert_eq!(out, std::fs::read_to_string(fixture("p1.category")).unwrap());
    for name in [
        "p1.mw_monad",
        "w1.mw_monad",
        "s1_identity.skew_warping",
        "s1_const_top.skew_warping",
    ] {
        let target = dir.path().join(format!("{name}.json"));
        run_ok(&["kleisli", path(&fixture(name)), "-o", path(&target)]);
        run_ok(&["validate", path(&target)]);
    }
    let (code, _, _) = run(&["kleisli", path(&fixture("w1_k_s.mw_monad"))]);
    assert_eq!(code, 1);
}

#[test]
fn enumerate_counts() {
    let z2 = fixture("z2.category");
    let mw = report(&run_ok(&["enumerate", path(&z2), "--kind", "mw_monad"]));
    let wreath = report(&run_ok(&["enumerate", path(&z2), "--kind", "wreath"]));
    assert_eq!(mw["counts"]["instances"], 2);
    assert_eq!(wreath["counts"]["instances"], mw["counts"]["instances"]);

    let d2 = report(&run_ok(&[
        "enumerate",
        path(&fixture("d2.category")),
        "--kind",
        "mw_monad",
    ]));
    assert_eq!(d2["counts"]["instances"], 1);

    let (code, out, _) = run(&[
        "enumerate",
        path(&fixture("m2.category")),
        "--kind",
        "warping",
        "--max-hom",
        "1",
    ]);
    assert_eq!(code, 2);
    assert_eq!(report(&out)["verdict"], "refused");
}

#[test]
fn reports_are_reproducible() {
    for args in [
        vec!["validate", "w1_k_s.mw_monad"],
        vec!["enumerate", "p1.category", "--kind", "warping"],
        vec!["--witnesses", "first", "validate", "w1_k_s.warping"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| {
                if a.contains('.') {
                    path(&fixture(a)).to_string()
                } else {
                    a.to_string()
                }
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args), run(&args));
    }
}

#[test]
fn pretty_format() {
    let (code, out, err) = run(&["--format", "pretty", "validate", path(&fixture("w1.warping"))]);
    assert_eq!(code, 0);
    assert!(out.contains("wall time") && err.is_empty());
}
