use warpings::fixtures::w1;
use warpings::monadwarp::WARPING_AXIOMS;
use warpings::spaneng::{cells_equal, Env, PastingExpr};

fn main() {
    let w = w1();
    let mut env: Env = w.base.env();
    env.bind_span("A", &w.endo);
    env.bind_cell("t", "ABA", "AB", &w.t).unwrap();
    env.bind_cell("k", "", "AB", &w.k).unwrap();

    for (rule, lhs, rhs) in WARPING_AXIOMS {
        let (l, r) = (PastingExpr::parse(lhs).unwrap(), PastingExpr::parse(rhs).unwrap());
        let (dom, cod) = env.boundary(&l).unwrap();
        let holds = cells_equal(&env.eval(&l).unwrap(), &env.eval(&r).unwrap()).is_ok();
        println!(
            "{rule}: {l} = {r}  [{} => {}]  holds: {holds}",
            dom.concat(),
            cod.concat()
        );
    }

    // An ill-typed composite is rejected before evaluation.
    match env.eval_str("t(Ap)") {
        Ok(_) => println!("unexpectedly typed"),
        Err(e) => println!("t(Ap): {e}"),
    }
}
