use std::collections::BTreeMap;

use super::monad_ab::warping_to_monad;
use crate::fincore::{validate_category, Atom, FinCategory, FinSet};
use crate::monadwarp::{monad_to_category, mw_to_warping, validate_mw, MwMonad};
use crate::spaneng::PathElem;
use crate::{Error, Result};

/// Kleisli category of an mw-monad: `hom(x, y) = B(x, Ty)`, composition
/// `g ⊛ f = Tg ∘ f`, identities `K_x`.
pub fn kleisli_category(m: &MwMonad) -> Result<FinCategory> {
    let r = validate_mw(m);
    if !r.is_valid() {
        return Err(Error::invalid("mw-monad", &r));
    }
    let c = &m.base;
    let xs = c.objects();
    let homs = xs
        .iter()
        .flat_map(|x| xs.iter().map(move |y| (x, y)))
        .map(|(x, y)| ((x.clone(), y.clone()), c.hom(x, m.t(y)).clone()))
        .collect();
    let mut comp = BTreeMap::new();
    for x in xs {
        for y in xs {
            for z in xs {
                let (ty, tz) = (m.t(y), m.t(z));
                let mut table = BTreeMap::new();
                for f in c.hom(x, ty) {
                    for g in c.hom(y, tz) {
                        let tg = m.ext_at(y, z, g).expect("valid");
                        let h = c.compose_names(x, ty, tz, tg, f).expect("valid");
                        table.insert((g.clone(), f.clone()), h.clone());
                    }
                }
                comp.insert((x.clone(), y.clone(), z.clone()), table);
            }
        }
    }
    let ident = xs.iter().map(|x| (x.clone(), m.k(x).expect("valid").clone())).collect();
    let k = FinCategory::from_parts(xs.clone(), homs, comp, ident);
    debug_assert!(validate_category(&k).is_valid());
    Ok(k)
}

/// The category of the monad on `T*B` built from `m`, with each carrier
/// element `(f, *)` of `(T*B)(x, y) = B(x, Ty)` renamed to `f`.
pub fn category_via_star(m: &MwMonad) -> Result<FinCategory> {
    let monad = warping_to_monad(&mw_to_warping(m)?)?;
    let raw = monad_to_category(&monad.as_span_monad()?);
    relabel(&raw, |name| {
        let e = PathElem::parse(name).map_err(|_| Error::Shape(format!("unexpected carrier element {name}")))?;
        match e.atoms() {
            [f, star] if star == crate::spaneng::STAR => Ok(f.clone()),
            _ => Err(Error::Shape(format!(
                "carrier element {name} is not of the form f|Ty|*"
            ))),
        }
    })
}

/// Renames every arrow through `rename`, which must be injective per hom-set.
pub fn relabel(c: &FinCategory, rename: impl Fn(&str) -> Result<Atom>) -> Result<FinCategory> {
    let mut homs = BTreeMap::new();
    for (k, s) in c.homs() {
        let names = s.iter().map(|a| rename(a)).collect::<Result<Vec<_>>>()?;
        homs.insert(k.clone(), FinSet::new(names)?);
    }
    let mut comp = BTreeMap::new();
    for (k, table) in c.comp_table() {
        let mut t = BTreeMap::new();
        for ((g, f), h) in table {
            t.insert((rename(g)?, rename(f)?), rename(h)?);
        }
        comp.insert(k.clone(), t);
    }
    let ident = c
        .identities()
        .iter()
        .map(|(x, i)| Ok((x.clone(), rename(i)?)))
        .collect::<Result<_>>()?;
    Ok(FinCategory::from_parts(c.objects().clone(), homs, comp, ident))
}
