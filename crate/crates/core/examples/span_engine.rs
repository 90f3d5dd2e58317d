use std::collections::BTreeMap;

use warpings::fincore::FinSet;
use warpings::spaneng::{cells_equal, compose_spans, compose_word, identity_span, vcompose, whisker, Cell2, Span};

fn span(objects: &FinSet, entries: &[(&str, &str, &[&str])]) -> Span {
    let table: BTreeMap<_, _> = entries
        .iter()
        .map(|(x, y, es)| {
            (
                (x.to_string(), y.to_string()),
                es.iter().map(|e| e.to_string()).collect(),
            )
        })
        .collect();
    Span::basic(objects.clone(), objects.clone(), table).unwrap()
}

fn main() {
    let xs = FinSet::of(&["a", "b"]);
    let m = span(&xs, &[("a", "b", &["m1", "m2"]), ("b", "b", &["m3"])]);
    let n = span(&xs, &[("a", "a", &["n1"]), ("a", "b", &["n2"])]);
    let p = span(&xs, &[("b", "a", &["p1"])]);

    let mn = compose_spans(&m, &n).unwrap();
    println!("M N (N applied first):\n{mn}");

    let left = compose_spans(&compose_spans(&m, &n).unwrap(), &p).unwrap();
    let right = compose_spans(&m, &compose_spans(&n, &p).unwrap()).unwrap();
    println!("(MN)P == M(NP): {}", left == right);

    let one = identity_span(&xs);
    println!(
        "1M == M == M1: {}",
        compose_spans(&one, &m).unwrap() == m && compose_spans(&m, &one).unwrap() == m
    );

    // A cell M ⇒ M swapping m1 and m2, whiskered by N on the right.
    let swap = Cell2::from_fn(m.clone(), m.clone(), |_, _, e| {
        let name = match e.render().as_str() {
            "m1" => "m2",
            "m2" => "m1",
            other => return warpings::spaneng::PathElem::parse(other).ok(),
        };
        Some(warpings::spaneng::PathElem::atom(name))
    })
    .unwrap();
    let twice = vcompose(&swap, &swap).unwrap();
    println!(
        "swap ∘ swap == 1: {}",
        cells_equal(&twice, &Cell2::identity(&m)).is_ok()
    );
    match cells_equal(&swap, &Cell2::identity(&m)) {
        Ok(()) => println!("swap == 1"),
        Err(w) => println!("swap != 1, witness {w}"),
    }
    let w = whisker(&one, &swap, &n).unwrap();
    println!(
        "1·swap·N is a cell on MN: {}",
        *w.dom() == compose_word(&[&m, &n]).unwrap()
    );
}
