use warpings::correspond::{monad_to_warping, validate_monad_on_ab, warping_to_monad};
use warpings::fixtures::{w1, w1_mw};
use warpings::monadwarp::{mw_to_warping, mw_view, validate_mw, validate_warping};

fn main() {
    let w = w1();
    println!("{}", validate_warping(&w));

    let m = warping_to_monad(&w).unwrap();
    println!("{}", validate_monad_on_ab(&m));
    println!("carrier:\n{}", m.carrier());
    println!("back to the same warping: {}", monad_to_warping(&m).unwrap() == w);
    println!("mw view is W1: {}", mw_view(&w).unwrap() == w1_mw());

    let mut bad = w1_mw();
    bad.unit_arrows.insert("o".into(), "s".into());
    println!("{}", validate_mw(&bad));
    print!("{}", validate_warping(&mw_to_warping(&bad).unwrap()));
}
