use warpings::correspond::{category_via_star, kleisli_category};
use warpings::fincore::validate_category;
use warpings::fixtures::{p1, p1_mw};
use warpings::monadwarp::MwMonad;

fn main() {
    let m = p1_mw();
    let k = kleisli_category(&m).unwrap();
    println!("{}", validate_category(&k));
    for a in k.arrows() {
        println!("  {a}");
    }
    println!(
        "same as the category of the monad on T*B: {}",
        category_via_star(&m).unwrap() == k
    );
    println!(
        "identity mw-monad gives back P1: {}",
        kleisli_category(&MwMonad::identity(&p1())).unwrap() == p1()
    );
}
