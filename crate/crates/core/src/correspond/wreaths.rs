use super::monad_ab::MonadOnAB;
use crate::monadwarp::{validate_warping, validate_wreath, warping_env, wreath_env, Warping, Wreath};
use crate::{Error, Result, ValidationReport};

/// `d = t(ApA)(kBA)`, `q = t(AeA)`, `j = k`.
pub fn warping_to_wreath(w: &Warping) -> Result<Wreath> {
    let r = validate_warping(w);
    if !r.is_valid() {
        return Err(Error::invalid("warping", &r));
    }
    let env = warping_env(w, &mut ValidationReport::new("warping")).expect("validated");
    Ok(Wreath {
        base: w.base.clone(),
        endo: w.endo.clone(),
        d: env.eval_str("t(ApA)(kBA)")?,
        q: env.eval_str("t(AeA)")?,
        j: w.k.clone(),
    })
}

fn checked_env(w: &Wreath) -> Result<crate::spaneng::Env> {
    let r = validate_wreath(w);
    if !r.is_valid() {
        return Err(Error::invalid("wreath", &r));
    }
    Ok(wreath_env(w, &mut ValidationReport::new("wreath")).expect("validated"))
}

/// `t = (Ap)(qB)(Ad)`, `k = j`.
pub fn wreath_to_warping(w: &Wreath) -> Result<Warping> {
    let env = checked_env(w)?;
    Ok(Warping {
        base: w.base.clone(),
        endo: w.endo.clone(),
        t: env.eval_str("(Ap)(qB)(Ad)")?,
        k: w.j.clone(),
    })
}

/// Multiplication `ABAB ⇒ AABB ⇒ ABBB ⇒ ABB ⇒ AB` through `d`, `q` and
/// two uses of `p`; unit `j`.
pub fn wreath_to_monad(w: &Wreath) -> Result<MonadOnAB> {
    let env = checked_env(w)?;
    let mult = env.eval_str("(Ap)(ABp)(qBB)(AdB)")?;
    MonadOnAB::new(&w.base, &w.endo, mult, w.j.clone())
}
