//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Runs without the libtest harness so that the per-criterion lines are
//! always printed.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{broken_files, catalogue, fixture_path, w1_algebra, w1_k_s_mw, warp};
use warpings::cli::{emit, parse};
use warpings::correspond::*;
use warpings::enumerate::*;
use warpings::fincore::{validate_category, validate_functor, Arrow, FinCategory, FinFunctor, FinSet};
use warpings::fixtures::*;
use warpings::monadwarp::*;
use warpings::skew::*;
use warpings::spaneng::*;
use warpings::ValidationReport;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn bases() -> Vec<(&'static str, FinCategory)> {
    vec![("Z/2", z2()), ("P1", p1())]
}

/// Every object map of every base, with the span monad and `A = T*`.
fn instances() -> Vec<(String, SpanMonad, Span)> {
    let mut out = Vec::new();
    for (name, c) in bases() {
        let base = category_to_monad(&c).unwrap();
        for t in object_maps(c.objects()) {
            let label: Vec<String> = t.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
            out.push((format!("{name} T={}", label.join(",")), base.clone(), restrict_star(&t)));
        }
    }
    out
}

fn warping_monad_bijection() -> Outcome {
    let mut total = 0;
    for (label, base, a) in instances() {
        let ws = ok(enumerate_warpings(&base, &a, DEFAULT_LIMIT), &label)?;
        let all = ok(enumerate_monads_on_ab(&base, &a, DEFAULT_LIMIT), &label)?;
        let ms: Vec<MonadOnAB> = all
            .into_iter()
            .filter(|m| validate_side_condition(m).is_valid())
            .collect();
        ensure(ws.len() == ms.len(), || {
            format!("{label}: {} warpings vs {} monads", ws.len(), ms.len())
        })?;
        for w in &ws {
            let m = ok(warping_to_monad(w), &label)?;
            ensure(ms.contains(&m), || {
                format!("{label}: image of a warping is not an enumerated monad")
            })?;
            ensure(ok(monad_to_warping(&m), &label)? == *w, || {
                format!("{label}: warping roundtrip")
            })?;
        }
        for m in &ms {
            let w = ok(monad_to_warping(m), &label)?;
            ensure(ws.contains(&w), || {
                format!("{label}: image of a monad is not an enumerated warping")
            })?;
            ensure(ok(warping_to_monad(&w), &label)? == *m, || {
                format!("{label}: monad roundtrip")
            })?;
        }
        total += ws.len();
    }
    Ok(format!("{total} warpings matched one-to-one with monads on AB"))
}

fn warping_wreath_bijection() -> Outcome {
    let mut total = 0;
    for (label, base, a) in instances() {
        let ws = ok(enumerate_warpings(&base, &a, DEFAULT_LIMIT), &label)?;
        let rs = ok(enumerate_wreaths(&base, &a, DEFAULT_LIMIT), &label)?;
        ensure(ws.len() == rs.len(), || {
            format!("{label}: {} warpings vs {} wreaths", ws.len(), rs.len())
        })?;
        for w in &ws {
            let r = ok(warping_to_wreath(w), &label)?;
            ensure(rs.contains(&r), || {
                format!("{label}: image of a warping is not an enumerated wreath")
            })?;
            ensure(ok(wreath_to_warping(&r), &label)? == *w, || {
                format!("{label}: warping roundtrip")
            })?;
        }
        for r in &rs {
            let w = ok(wreath_to_warping(r), &label)?;
            ensure(ws.contains(&w), || {
                format!("{label}: image of a wreath is not an enumerated warping")
            })?;
            ensure(ok(warping_to_wreath(&w), &label)? == *r, || {
                format!("{label}: wreath roundtrip")
            })?;
        }
        total += rs.len();
    }
    Ok(format!("{total} wreaths matched one-to-one with warpings"))
}

fn path_independence() -> Outcome {
    let mut total = 0;
    for (label, base, a) in instances() {
        for r in ok(enumerate_wreaths(&base, &a, DEFAULT_LIMIT), &label)? {
            let direct = ok(wreath_to_monad(&r), &label)?;
            let via = ok(warping_to_monad(&ok(wreath_to_warping(&r), &label)?), &label)?;
            ensure(cells_equal(direct.mult(), via.mult()).is_ok(), || {
                format!("{label}: multiplications differ")
            })?;
            ensure(direct == via, || format!("{label}: monads differ"))?;
            total += 1;
        }
    }
    Ok(format!("{total} wreaths, both paths equal"))
}

fn kleisli() -> Outcome {
    let mut total = 0;
    for (name, c) in bases() {
        for m in ok(enumerate_mw_monads(&c, None, DEFAULT_LIMIT), name)? {
            let k = ok(kleisli_category(&m), name)?;
            let r = validate_category(&k);
            ensure(r.is_valid(), || format!("{name}: {r}"))?;
            let wreath = ok(warping_to_wreath(&ok(mw_to_warping(&m), name)?), name)?;
            let monad = ok(ok(wreath_to_monad(&wreath), name)?.as_span_monad(), name)?;
            let classical = ok(
                relabel(&monad_to_category(&monad), |n| {
                    let e = PathElem::parse(n)?;
                    match e.atoms() {
                        [f, star] if star == STAR => Ok(f.clone()),
                        _ => Err(warpings::Error::Shape(n.to_string())),
                    }
                }),
                name,
            )?;
            ensure(classical == k, || format!("{name}: Kleisli tables differ"))?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} mw-monads, Kleisli categories valid and equal to the wreath path"
    ))
}

fn algebras() -> Outcome {
    let mut lines = Vec::new();
    for (name, m) in [("W1", w1_mw()), ("P1", p1_mw())] {
        let cm = ok(classical_monad(&m), name)?;
        let r = validate_classical_monad(&cm);
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        for a in m.base.objects() {
            let fams = ok(enumerate_e_families(&m, a, DEFAULT_LIMIT), name)?;
            let ems = em_algebras(&cm, a);
            ensure(fams.len() == ems.len(), || {
                format!("{name} at {a}: {} E-families vs {} EM algebras", fams.len(), ems.len())
            })?;
            for e in &fams {
                let alg = ok(algebra_to_em_algebra(e), name)?;
                ensure(ems.contains(&alg), || {
                    format!("{name} at {a}: structure map not enumerated")
                })?;
                ensure(ok(em_algebra_to_e_family(&m, &cm, &alg), name)? == *e, || {
                    format!("{name} at {a}: roundtrip")
                })?;
                let span = validate_algebra(&ok(e_family_to_algebra(e), name)?);
                ensure(span.is_valid(), || format!("{name} at {a}: {span}"))?;
            }
            for alg in &ems {
                let e = ok(em_algebra_to_e_family(&m, &cm, alg), name)?;
                ensure(ok(algebra_to_em_algebra(&e), name)? == *alg, || {
                    format!("{name} at {a}: roundtrip")
                })?;
            }
            lines.push(format!("{name}@{a}: {}", fams.len()));
        }
    }
    Ok(lines.join(", "))
}

fn skew_kleisli_criterion() -> Outcome {
    let mut warpings: Vec<(String, SkewWarping)> = vec![
        ("S1 identity".into(), SkewWarping::identity(&s1()).unwrap()),
        ("S1 const top".into(), s1_const_top_warping()),
        ("M2 identity".into(), SkewWarping::identity(&m2_strict()).unwrap()),
        ("W1 discrete".into(), mw_as_skew_warping(&w1_mw()).unwrap()),
        ("P1 discrete".into(), mw_as_skew_warping(&p1_mw()).unwrap()),
    ];
    let seeds: Vec<SkewWarping> = warpings.iter().map(|(_, w)| w.clone()).collect();
    for (i, w) in seeds.iter().enumerate() {
        let (_, found) = ok(search_warping_cells(w, 1 << 16), "cell search")?;
        for (j, f) in found.into_iter().enumerate() {
            warpings.push((format!("search {i}.{j}"), f));
        }
    }
    for (name, w) in &warpings {
        let r = validate_skew_warping(w);
        ensure(r.is_valid(), || format!("{name}: {r}"))?;
        let k = ok(skew_kleisli(w), name)?;
        let r = validate_skew_bicategory(&k);
        ensure(r.is_valid(), || format!("{name}: Kleisli {r}"))?;
    }
    Ok(format!(
        "{} skew warpings, every Kleisli skew bicategory valid",
        warpings.len()
    ))
}

// ---- engine soundness ----

fn random_set(rng: &mut StdRng, prefix: &str) -> FinSet {
    let n = rng.gen_range(1..=3);
    FinSet::new((0..n).map(|i| format!("{prefix}{i}")).collect()).unwrap()
}

fn random_span(rng: &mut StdRng, src: &FinSet, dst: &FinSet, tag: &str, min: usize) -> Span {
    let mut entries = BTreeMap::new();
    for x in src {
        for y in dst {
            let n = rng.gen_range(min..=2);
            entries.insert((x.clone(), y.clone()), (0..n).map(|i| format!("{tag}{i}")).collect());
        }
    }
    Span::basic(src.clone(), dst.clone(), entries).unwrap()
}

/// A random cell `dom ⇒ cod`; `cod` must be non-empty wherever `dom` is.
fn random_cell(rng: &mut StdRng, dom: &Span, cod: &Span) -> Cell2 {
    let mut choice = BTreeMap::new();
    for (x, y, e) in elements(dom) {
        let targets = cod.entry(x, y).elements();
        choice.insert(
            (x.clone(), y.clone(), e.clone()),
            targets[rng.gen_range(0..targets.len())].clone(),
        );
    }
    Cell2::from_fn(dom.clone(), cod.clone(), |x, y, e| {
        choice.get(&(x.into(), y.into(), e.clone())).cloned()
    })
    .unwrap()
}

/// `α ∗ β = (α N') ∘ (M β)` for `α: M ⇒ M'`, `β: N ⇒ N'`.
fn hcomp(a: &Cell2, b: &Cell2) -> Cell2 {
    vcompose(&whisker_right(a, b.cod()).unwrap(), &whisker_left(a.dom(), b).unwrap()).unwrap()
}

fn engine_random(rng: &mut StdRng) -> Result<(), String> {
    for i in 0..1000 {
        let xs: Vec<FinSet> = (0..4).map(|k| random_set(rng, &format!("x{k}_"))).collect();
        let p = random_span(rng, &xs[0], &xs[1], "p", 0);
        let n = random_span(rng, &xs[1], &xs[2], "n", 0);
        let m = random_span(rng, &xs[2], &xs[3], "m", 0);
        let left = compose_spans(&compose_spans(&m, &n).unwrap(), &p).unwrap();
        let right = compose_spans(&m, &compose_spans(&n, &p).unwrap()).unwrap();
        ensure(left == right, || format!("triple {i}: associativity"))?;
        ensure(compose_spans(&identity_span(&xs[3]), &m).unwrap() == m, || {
            format!("triple {i}: left unit")
        })?;
        ensure(compose_spans(&m, &identity_span(&xs[2])).unwrap() == m, || {
            format!("triple {i}: right unit")
        })?;

        let m1 = random_span(rng, &xs[2], &xs[3], "q", 1);
        let m2 = random_span(rng, &xs[2], &xs[3], "r", 1);
        let n1 = random_span(rng, &xs[1], &xs[2], "s", 1);
        let n2 = random_span(rng, &xs[1], &xs[2], "t", 1);
        let (a, a2) = (random_cell(rng, &m, &m1), random_cell(rng, &m1, &m2));
        let (b, b2) = (random_cell(rng, &n, &n1), random_cell(rng, &n1, &n2));
        let other = vcompose(&whisker_left(&m1, &b).unwrap(), &whisker_right(&a, &n).unwrap()).unwrap();
        ensure(cells_equal(&hcomp(&a, &b), &other).is_ok(), || {
            format!("triple {i}: whiskering order")
        })?;
        let lhs = hcomp(&vcompose(&a2, &a).unwrap(), &vcompose(&b2, &b).unwrap());
        let rhs = vcompose(&hcomp(&a2, &b2), &hcomp(&a, &b)).unwrap();
        ensure(cells_equal(&lhs, &rhs).is_ok(), || format!("triple {i}: interchange"))?;
    }
    Ok(())
}

fn set_image(c: &Cell2, x: &str, y: &str, e: &str, img: &str) -> Cell2 {
    c.with_value(x, y, &PathElem::parse(e).unwrap(), PathElem::parse(img).unwrap())
        .unwrap()
}

/// Single-field mutations of valid fixtures, each with its validator.
fn mutations() -> Vec<(&'static str, ValidationReport)> {
    let z2m = category_to_monad(&z2()).unwrap();
    let w = w1();
    let wr = warping_to_wreath(&w).unwrap();
    let mut out = Vec::new();

    out.push((
        "category: s∘1 := 1",
        validate_category(&z2().with_composite("o", "o", "o", "s", "1", "1")),
    ));
    let f = FinFunctor::identity(&m2()).with_arrow_image(&Arrow::new("o", "o", "1"), "s");
    out.push(("functor: F(1) := s", validate_functor(&f)));
    let mult = set_image(z2m.mult(), "o", "o", "1|o|s", "1");
    out.push((
        "span monad: p(1,s) := 1",
        validate_span_monad(z2m.carrier(), &mult, z2m.unit()),
    ));

    out.push((
        "warping: k := s",
        validate_warping(&mw_to_warping(&w1_k_s_mw()).unwrap()),
    ));
    let mut bad = w.clone();
    bad.t = set_image(&w.t, "o", "o", "*|o|s|o|*", "1|o|*");
    out.push(("warping: t(*,s,*) := 1", validate_warping(&bad)));

    let mut mw = w1_mw();
    let e = mw.ext[&("o".to_string(), "o".to_string())]
        .with_value(&"s".to_string(), "1".into())
        .unwrap();
    mw.ext.insert(("o".into(), "o".into()), e);
    out.push(("mw-monad: T(s) := 1", validate_mw(&mw)));

    let mut bad = wr.clone();
    bad.d = set_image(&wr.d, "o", "o", "*|o|s", "1|o|*");
    out.push(("wreath: d(*,s) := 1", validate_wreath(&bad)));
    let mut bad = wr.clone();
    bad.q = set_image(&wr.q, "o", "o", "*|o|*", "s|o|*");
    out.push(("wreath: q(*,*) := s", validate_wreath(&bad)));
    let mut bad = wr.clone();
    bad.j = set_image(&wr.j, "o", "o", "()", "s|o|*");
    out.push(("wreath: j := s", validate_wreath(&bad)));

    let m = warping_to_monad(&w).unwrap();
    let mult = set_image(m.mult(), "o", "o", "1|o|*|o|1|o|*", "s|o|*");
    let bad = MonadOnAB::new(m.base(), m.endo(), mult, m.unit().clone()).unwrap();
    out.push(("monad on AB: m(1*,1*) := s*", validate_monad_on_ab(&bad)));

    let mut e = w1_algebra();
    let f = e.e_maps["o"].with_value(&"1".to_string(), "s".into()).unwrap();
    e.e_maps.insert("o".into(), f);
    out.push(("E-family: E(1) := s", validate_e_family(&e)));

    let mut alg = WarpAlgebra::self_action(&w);
    alg.act = set_image(&alg.act, "o", "o", "*|o|1|o|*", "s|o|*");
    out.push(("algebra: m(*,1,*) := s", validate_algebra(&alg)));

    let cm = classical_monad(&w1_mw()).unwrap();
    let em = EmAlgebra {
        object: "o".into(),
        structure: "s".into(),
    };
    out.push(("EM algebra: α := s", validate_em_algebra(&cm, &em)));

    let mut s = m2_strict();
    let key = s.assoc.keys().next().unwrap().clone();
    s.assoc.insert(key, "s".into());
    out.push(("skew bicategory: one α := s", validate_skew_bicategory(&s)));

    let mut sw = SkewWarping::identity(&m2_strict()).unwrap();
    let key = sw.nu0.keys().next().unwrap().clone();
    sw.nu0.insert(key, "s".into());
    out.push(("skew warping: ν0 := s", validate_skew_warping(&sw)));

    let mut sa = SkewAlgebra::self_algebra(&SkewWarping::identity(&m2_strict()).unwrap(), "o").unwrap();
    let key = sa.cell_kappa.keys().next().unwrap().clone();
    sa.cell_kappa.insert(key, "s".into());
    out.push(("skew algebra: one κE := s", validate_skew_algebra(&sa)));
    out
}

fn engine_soundness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    engine_random(&mut rng)?;
    let muts = mutations();
    for (name, r) in &muts {
        ensure(r.is_structurally_sound(), || format!("{name}: structural {r}"))?;
        let v = r.violations.first().ok_or_else(|| format!("{name}: not rejected"))?;
        ensure(!v.witness.is_empty(), || format!("{name}: empty witness"))?;
        println!("    rejected {name}: {} at {}", v.rule, v.witness);
    }
    Ok(format!(
        "1000 random triples; {} mutations rejected with witnesses",
        muts.len()
    ))
}

fn cli_determinism() -> Outcome {
    let mut files = 0;
    for (name, _) in catalogue() {
        let path = fixture_path(name);
        let text = ok(std::fs::read_to_string(&path), name)?;
        let parsed = ok(parse(&text), name)?;
        ensure(emit(&parsed) == text, || {
            format!("{name}: emit(parse(file)) differs from the file")
        })?;
        let p = path.to_str().unwrap();
        let first = warp(&["validate", p]);
        ensure(first == warp(&["validate", p]), || {
            format!("{name}: report not reproducible")
        })?;
        let expected = if name.starts_with("w1_k_s") { 1 } else { 0 };
        ensure(first.0 == expected, || {
            format!("{name}: exit {} (expected {expected})", first.0)
        })?;
        files += 1;
    }
    for (name, _) in broken_files() {
        let (code, _, _) = warp(&["validate", fixture_path(name).to_str().unwrap()]);
        ensure(code == 2, || format!("{name}: exit {code} (expected 2)"))?;
    }
    let dir = ok(tempfile::tempdir(), "tempdir")?;
    let wreath = dir.path().join("w1.wreath.json");
    let w1 = fixture_path("w1.warping");
    let (code, _, _) = warp(&[
        "convert",
        w1.to_str().unwrap(),
        "--to",
        "wreath",
        "-o",
        wreath.to_str().unwrap(),
    ]);
    ensure(code == 0, || format!("convert to wreath exited {code}"))?;
    let (code, back, _) = warp(&["convert", wreath.to_str().unwrap(), "--to", "warping"]);
    ensure(code == 0 && back == ok(std::fs::read_to_string(&w1), "w1")?, || {
        "W1 wreath roundtrip not byte-identical".into()
    })?;
    Ok(format!(
        "{files} fixtures roundtrip byte-exactly; exit codes 0/1/2 as expected"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 warping/monad bijection",
            warping_monad_bijection,
            Duration::from_secs(5),
        ),
        (
            "2 warping/wreath bijection",
            warping_wreath_bijection,
            Duration::from_secs(5),
        ),
        ("3 path independence", path_independence, Duration::from_secs(5)),
        ("4 Kleisli correctness", kleisli, Duration::from_secs(5)),
        ("5 algebra correspondence", algebras, Duration::from_secs(5)),
        ("6 skew Kleisli", skew_kleisli_criterion, Duration::from_secs(10)),
        ("7 engine soundness", engine_soundness, Duration::from_secs(10)),
        ("8 CLI determinism", cli_determinism, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > budget;
        match (&outcome, over) {
            (Ok(detail), false) => println!("PASS criterion {name}: {detail} ({:.2}s)", took.as_secs_f64()),
            (Ok(detail), true) => {
                failed += 1;
                println!(
                    "FAIL criterion {name}: {detail}, but took {:.2}s (budget {}s)",
                    took.as_secs_f64(),
                    budget.as_secs()
                );
            }
            (Err(e), _) => {
                failed += 1;
                println!("FAIL criterion {name}: {e} ({:.2}s)", took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
