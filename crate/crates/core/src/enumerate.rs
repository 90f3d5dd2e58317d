//! Exhaustive enumeration of small structures, used as independent oracles
//! for the correspondences.
//!
//! Every function takes a `limit` on the number of raw candidates it would
//! visit and refuses with [`Error::Bounds`] beyond it.

use std::collections::BTreeMap;

use crate::correspond::{validate_e_family, validate_monad_laws, EFamily, MonadOnAB};
use crate::fincore::{enumerate_functions, Atom, FinCategory, FinFunction, FinSet};
use crate::monadwarp::{validate_mw, validate_warping, validate_wreath, MwMonad, SpanMonad, Warping, Wreath};
use crate::spaneng::{compose_word, count_cells, enumerate_cells, identity_span, Cell2, Span};
use crate::{Error, Result};

/// Default cap on raw candidates per enumeration.
pub const DEFAULT_LIMIT: u128 = 1 << 20;

fn check(total: u128, limit: u128, what: &str) -> Result<()> {
    if total > limit {
        return Err(Error::Bounds(format!(
            "{what}: {total} candidates exceed the limit of {limit}"
        )));
    }
    Ok(())
}

/// Every endofunction of `xs`.
pub fn object_maps(xs: &FinSet) -> Vec<FinFunction> {
    enumerate_functions(xs, xs).collect()
}

/// Visits every element of the product of `choices`.
fn product_visit<T>(choices: &[Vec<T>], mut visit: impl FnMut(&[&T])) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let pick: Vec<&T> = choices.iter().zip(&idx).map(|(c, &i)| &c[i]).collect();
        visit(&pick);
        let mut pos = 0;
        loop {
            if pos == choices.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn cells_of(frames: &[(Span, Span)], limit: u128, what: &str) -> Result<Vec<Vec<Cell2>>> {
    let total = frames
        .iter()
        .try_fold(1u128, |acc, (d, c)| acc.checked_mul(count_cells(d, c)))
        .unwrap_or(u128::MAX);
    check(total, limit, what)?;
    frames
        .iter()
        .map(|(d, c)| Ok(enumerate_cells(d, c)?.collect()))
        .collect()
}

/// Number of raw mw-monad candidates for a fixed `T`.
pub fn mw_candidate_count(c: &FinCategory, t: &FinFunction) -> u128 {
    let xs = c.objects();
    let mut total: u128 = 1;
    for x in xs {
        for y in xs {
            let (tx, ty) = (t.apply(x), t.apply(y));
            let (d, cod) = (c.hom(x, ty).len() as u32, c.hom(tx, ty).len() as u128);
            total = total.saturating_mul(cod.saturating_pow(d));
        }
        total = total.saturating_mul(c.hom(x, t.apply(x)).len() as u128);
    }
    total
}

/// Every valid mw-monad on `c` with object map `t` (or any object map).
pub fn enumerate_mw_monads(c: &FinCategory, t: Option<&FinFunction>, limit: u128) -> Result<Vec<MwMonad>> {
    let maps = match t {
        Some(t) => vec![t.clone()],
        None => object_maps(c.objects()),
    };
    let xs = c.objects();
    let mut out = Vec::new();
    for t in maps {
        check(mw_candidate_count(c, &t), limit, "mw-monads")?;
        let pairs: Vec<(Atom, Atom)> = xs
            .iter()
            .flat_map(|x| xs.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        let ext_choices: Vec<Vec<FinFunction>> = pairs
            .iter()
            .map(|(x, y)| enumerate_functions(c.hom(x, t.apply(y)), c.hom(t.apply(x), t.apply(y))).collect())
            .collect();
        let k_choices: Vec<Vec<Atom>> = xs.iter().map(|x| c.hom(x, t.apply(x)).elements().to_vec()).collect();
        product_visit(&k_choices, |ks| {
            let unit_arrows: BTreeMap<Atom, Atom> = xs.iter().cloned().zip(ks.iter().map(|k| (*k).clone())).collect();
            product_visit(&ext_choices, |exts| {
                let m = MwMonad {
                    base: c.clone(),
                    obj_map: t.clone(),
                    ext: pairs.iter().cloned().zip(exts.iter().map(|f| (*f).clone())).collect(),
                    unit_arrows: unit_arrows.clone(),
                };
                if validate_mw(&m).is_valid() {
                    out.push(m);
                }
            });
        });
    }
    Ok(out)
}

/// Every valid warping of `base` by `endo`, by brute force over all cells.
pub fn enumerate_warpings(base: &SpanMonad, endo: &Span, limit: u128) -> Result<Vec<Warping>> {
    let b = base.carrier();
    let ab = compose_word(&[endo, b])?;
    let aba = compose_word(&[endo, b, endo])?;
    let one = identity_span(base.objects());
    let cells = cells_of(&[(aba, ab.clone()), (one, ab)], limit, "warpings")?;
    let mut out = Vec::new();
    product_visit(&cells, |c| {
        let w = Warping {
            base: base.clone(),
            endo: endo.clone(),
            t: c[0].clone(),
            k: c[1].clone(),
        };
        if validate_warping(&w).is_valid() {
            out.push(w);
        }
    });
    Ok(out)
}

/// Every valid wreath over `base` on `endo`, by brute force over all cells.
pub fn enumerate_wreaths(base: &SpanMonad, endo: &Span, limit: u128) -> Result<Vec<Wreath>> {
    let b = base.carrier();
    let ab = compose_word(&[endo, b])?;
    let ba = compose_word(&[b, endo])?;
    let aa = compose_word(&[endo, endo])?;
    let one = identity_span(base.objects());
    let cells = cells_of(&[(ba, ab.clone()), (aa, ab.clone()), (one, ab)], limit, "wreaths")?;
    let mut out = Vec::new();
    product_visit(&cells, |c| {
        let w = Wreath {
            base: base.clone(),
            endo: endo.clone(),
            d: c[0].clone(),
            q: c[1].clone(),
            j: c[2].clone(),
        };
        if validate_wreath(&w).is_valid() {
            out.push(w);
        }
    });
    Ok(out)
}

/// Every monad structure on `AB` (monad laws only; the side condition is
/// left to the caller).
pub fn enumerate_monads_on_ab(base: &SpanMonad, endo: &Span, limit: u128) -> Result<Vec<MonadOnAB>> {
    let b = base.carrier();
    let ab = compose_word(&[endo, b])?;
    let abab = compose_word(&[endo, b, endo, b])?;
    let one = identity_span(base.objects());
    let cells = cells_of(&[(abab, ab.clone()), (one, ab)], limit, "monads on AB")?;
    let mut out = Vec::new();
    let mut err = None;
    product_visit(&cells, |c| {
        match MonadOnAB::new(base, endo, c[0].clone(), c[1].clone()) {
            Ok(m) => {
                if validate_monad_laws(&m).is_valid() {
                    out.push(m);
                }
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Every valid E-family of `m` at `a`.
pub fn enumerate_e_families(m: &MwMonad, a: &str, limit: u128) -> Result<Vec<EFamily>> {
    let c = &m.base;
    let xs = c.objects();
    let choices: Vec<Vec<FinFunction>> = xs
        .iter()
        .map(|z| enumerate_functions(c.hom(z, a), c.hom(m.t(z), a)).collect())
        .collect();
    let total = choices
        .iter()
        .try_fold(1u128, |acc, v| acc.checked_mul(v.len() as u128))
        .unwrap_or(u128::MAX);
    check(total, limit, "E-families")?;
    let mut out = Vec::new();
    product_visit(&choices, |fs| {
        let e = EFamily {
            base: m.clone(),
            object: a.into(),
            e_maps: xs.iter().cloned().zip(fs.iter().map(|f| (*f).clone())).collect(),
        };
        if validate_e_family(&e).is_valid() {
            out.push(e);
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspond::validate_side_condition;
    use crate::fixtures::{d2, m2, p1, z2};
    use crate::monadwarp::category_to_monad;
    use crate::spaneng::restrict_star;

    #[test]
    fn z2_counts() {
        let c = z2();
        let id = FinFunction::identity(c.objects());
        assert_eq!(mw_candidate_count(&c, &id), 8);
        let mws = enumerate_mw_monads(&c, Some(&id), DEFAULT_LIMIT).unwrap();
        assert_eq!(mws.len(), 2);
        let base = category_to_monad(&c).unwrap();
        let a = restrict_star(&id);
        assert_eq!(enumerate_warpings(&base, &a, DEFAULT_LIMIT).unwrap().len(), 2);
        assert_eq!(enumerate_wreaths(&base, &a, DEFAULT_LIMIT).unwrap().len(), 2);
        let monads = enumerate_monads_on_ab(&base, &a, DEFAULT_LIMIT).unwrap();
        let side: Vec<_> = monads
            .iter()
            .filter(|m| validate_side_condition(m).is_valid())
            .collect();
        assert_eq!(side.len(), 2);
        assert!(monads.len() > side.len());
    }

    #[test]
    fn degenerate_bases() {
        let c = d2();
        let swap = FinFunction::from_fn(c.objects().clone(), c.objects().clone(), |x| {
            if x == "0" {
                "1".to_string()
            } else {
                "0".to_string()
            }
        })
        .unwrap();
        assert!(enumerate_mw_monads(&c, Some(&swap), DEFAULT_LIMIT).unwrap().is_empty());
        let const0 = FinFunction::from_fn(p1().objects().clone(), p1().objects().clone(), |_| "0".to_string()).unwrap();
        assert!(enumerate_mw_monads(&p1(), Some(&const0), DEFAULT_LIMIT)
            .unwrap()
            .is_empty());
        assert!(!enumerate_mw_monads(&m2(), None, DEFAULT_LIMIT).unwrap().is_empty());
        assert!(matches!(enumerate_mw_monads(&z2(), None, 3), Err(Error::Bounds(_))));
    }
}
