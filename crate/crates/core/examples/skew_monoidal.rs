use warpings::fixtures::{m2_strict, s1};
use warpings::skew::{skew_monoidal_of, validate_skew_bicategory};

fn main() {
    let s = s1();
    println!("{}", validate_skew_bicategory(&s));
    let m = skew_monoidal_of(&s).unwrap();
    println!(
        "unit {}, tensor objects {:?}",
        m.unit,
        m.tensor.obj_map().pairs().collect::<Vec<_>>()
    );

    // On the idempotent monoid {1, s}, replace one associator component by s.
    let mut bad = m2_strict();
    let key = bad.assoc.keys().next().unwrap().clone();
    bad.assoc.insert(key, "s".into());
    print!("{}", validate_skew_bicategory(&bad));
}
