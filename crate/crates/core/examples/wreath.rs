use warpings::correspond::{warping_to_monad, warping_to_wreath, wreath_to_monad, wreath_to_warping};
use warpings::fixtures::{p1_warping, w1};
use warpings::monadwarp::validate_wreath;
use warpings::spaneng::PathElem;

fn main() {
    let w = p1_warping();
    let wr = warping_to_wreath(&w).unwrap();
    println!("{}", validate_wreath(&wr));
    println!("wreath -> warping roundtrip: {}", wreath_to_warping(&wr).unwrap() == w);

    let direct = wreath_to_monad(&wr).unwrap();
    let via = warping_to_monad(&wreath_to_warping(&wr).unwrap()).unwrap();
    println!(
        "monad through the wreath equals monad through the warping: {}",
        direct == via
    );

    // On W1, send the distributive law's value at s to 1 instead.
    let mut bad = warping_to_wreath(&w1()).unwrap();
    let e = PathElem::parse("*|o|s").unwrap();
    bad.d = bad
        .d
        .with_value("o", "o", &e, PathElem::parse("1|o|*").unwrap())
        .unwrap();
    print!("{}", validate_wreath(&bad));
}
