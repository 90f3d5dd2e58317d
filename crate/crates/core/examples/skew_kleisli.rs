use warpings::fixtures::s1_const_top_warping;
use warpings::skew::{search_warping_cells, skew_kleisli, validate_skew_bicategory, validate_skew_warping};

fn main() {
    let w = s1_const_top_warping();
    println!("{}", validate_skew_warping(&w));

    let k = skew_kleisli(&w).unwrap();
    println!("{}", validate_skew_bicategory(&k));
    println!("bot ⊛ top = {}", k.compose("o", "o", "o", "top", "bot").unwrap());
    for (key, c) in &k.right_unitor {
        println!("  rho at {} = {c}", key[2]);
    }

    let (search, _) = search_warping_cells(&w, 1 << 16).unwrap();
    println!(
        "{} cell slots, {} assignments, {} valid, rigid: {}",
        search.slots, search.assignments, search.valid, search.rigid
    );
}
