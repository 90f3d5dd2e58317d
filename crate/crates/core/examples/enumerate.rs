use warpings::correspond::validate_side_condition;
use warpings::enumerate::*;
use warpings::fixtures::{p1, z2};
use warpings::monadwarp::category_to_monad;
use warpings::spaneng::restrict_star;

fn main() {
    for (name, c) in [("Z/2", z2()), ("P1", p1())] {
        let base = category_to_monad(&c).unwrap();
        for t in object_maps(c.objects()) {
            let a = restrict_star(&t);
            let mw = enumerate_mw_monads(&c, Some(&t), DEFAULT_LIMIT).unwrap().len();
            let warpings = enumerate_warpings(&base, &a, DEFAULT_LIMIT).unwrap().len();
            let wreaths = enumerate_wreaths(&base, &a, DEFAULT_LIMIT).unwrap().len();
            let monads = enumerate_monads_on_ab(&base, &a, DEFAULT_LIMIT).unwrap();
            let side = monads.iter().filter(|m| validate_side_condition(m).is_valid()).count();
            let tm: Vec<String> = t.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
            println!(
                "{name} T={}: mw {mw}, warpings {warpings}, wreaths {wreaths}, monads on AB {} ({side} with the embedding condition)",
                tm.join(","),
                monads.len()
            );
        }
    }
}
