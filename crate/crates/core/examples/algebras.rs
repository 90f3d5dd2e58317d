use warpings::correspond::{
    algebra_to_em_algebra, classical_monad, e_family_to_algebra, em_algebras, validate_algebra,
};
use warpings::enumerate::{enumerate_e_families, DEFAULT_LIMIT};
use warpings::fixtures::{p1_mw, w1_mw};

fn main() {
    for (name, m) in [("W1", w1_mw()), ("P1", p1_mw())] {
        let cm = classical_monad(&m).unwrap();
        for a in m.base.objects() {
            let fams = enumerate_e_families(&m, a, DEFAULT_LIMIT).unwrap();
            let em = em_algebras(&cm, a);
            println!(
                "{name} at {a}: {} E-families, {} Eilenberg-Moore algebras",
                fams.len(),
                em.len()
            );
            for e in &fams {
                let alg = algebra_to_em_algebra(e).unwrap();
                let span_form = validate_algebra(&e_family_to_algebra(e).unwrap());
                println!("  structure map {} ; span form {}", alg.structure, span_form.summary());
            }
        }
    }
}
