use std::collections::BTreeMap;

use super::bicat::SkewBicategory;
use super::warping::SkewWarping;
use crate::fincore::{FinCategory, FinFunctor};
use crate::monadwarp::MwMonad;
use crate::{Error, Result};

/// A category as a skew bicategory with discrete hom-categories: 1-cells are
/// its arrows, composition is its composition and every structure cell is an
/// identity.
pub fn discrete_skew(c: &FinCategory) -> Result<SkewBicategory> {
    let xs = c.objects();
    let mut homs = BTreeMap::new();
    for x in xs {
        for y in xs {
            homs.insert((x.clone(), y.clone()), FinCategory::discrete(c.hom(x, y)));
        }
    }
    let units = xs
        .iter()
        .map(|x| {
            Ok((
                x.clone(),
                c.identity_name(x)
                    .ok_or_else(|| Error::Malformed(format!("no identity at {x}")))?
                    .clone(),
            ))
        })
        .collect::<Result<_>>()?;
    let one = |_: &[&str]| Some("1".to_string());
    SkewBicategory::from_fn(
        xs,
        homs,
        |x, y, z, g, f| c.compose_names(x, y, z, g, f).cloned(),
        |_, _, _, _, _| Some("1".into()),
        units,
        one,
        one,
        one,
    )
}

/// An mw-monad as a skew warping on [`discrete_skew`] of its base. Fails if
/// an mw-monad equation does not hold, since the cells must be identities.
pub fn mw_as_skew_warping(m: &MwMonad) -> Result<SkewWarping> {
    let base = discrete_skew(&m.base)?;
    let xs = base.objects.clone();
    let mut ext = BTreeMap::new();
    for x in &xs {
        for y in &xs {
            let (tx, ty) = (m.t(x), m.t(y));
            let f = FinFunctor::tabulate(
                base.hom(x, ty),
                base.hom(tx, ty),
                |f| m.ext_at(x, y, f).cloned(),
                |_| Some("1".into()),
            )?;
            ext.insert((x.clone(), y.clone()), f);
        }
    }
    let one_if_equal = |_: &FinCategory, a: &str, b: &str| (a == b).then(|| "1".to_string());
    SkewWarping::with_cells(&base, m.obj_map.clone(), ext, m.unit_arrows.clone(), one_if_equal)
}
