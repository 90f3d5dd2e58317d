//! The shipped fixture files and their expected reports.
//!
//! Run with `WARP_BLESS=1` to rewrite them after an intentional change.

mod common;

use std::fs;

use common::{broken_files, catalogue, fixture_path, fixtures_dir, warp};
use warpings::cli::{emit, parse, validate_structure};

fn bless() -> bool {
    std::env::var_os("WARP_BLESS").is_some()
}

fn check_file(path: &std::path::Path, expected: &str) {
    if bless() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, expected).unwrap();
        return;
    }
    let actual = fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{} is stale; rerun with WARP_BLESS=1", path.display());
}

#[test]
fn structure_files_match_library_fixtures() {
    for (name, s) in catalogue() {
        check_file(&fixture_path(name), &emit(&s));
    }
    for (name, text) in broken_files() {
        check_file(&fixture_path(name), &text);
    }
}

#[test]
fn parse_emit_roundtrip() {
    for (name, s) in catalogue() {
        let text = emit(&s);
        let back = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(emit(&back), text, "{name}");
    }
}

#[test]
fn expected_reports() {
    let names: Vec<&str> = catalogue()
        .iter()
        .map(|(n, _)| *n)
        .chain(broken_files().iter().map(|(n, _)| *n))
        .collect();
    for name in names {
        let path = fixture_path(name);
        let (_, stdout, _) = warp(&["validate", path.to_str().unwrap()]);
        check_file(
            &fixtures_dir().join("expected").join(format!("{name}.validate.json")),
            &stdout,
        );
    }
}

#[test]
fn fixture_verdicts() {
    for (name, s) in catalogue() {
        let r = validate_structure(&s);
        assert_eq!(r.is_valid(), !name.starts_with("w1_k_s"), "{name}: {r}");
    }
}
