use std::collections::BTreeMap;

use super::bicat::{key, pair_functor, CellFamily, SkewBicategory};
use crate::fincore::{product, Arrow, Atom, FinCategory, FinFunctor, FinSet};
use crate::{Error, Result};

/// A finite skew monoidal category. `tensor` is a functor
/// `C × C → C`, `(a, b) ↦ a ⊗ b`; `assoc[a, b, c]: (a⊗b)⊗c → a⊗(b⊗c)`,
/// `left_unitor[a]: I⊗a → a`, `right_unitor[a]: a → a⊗I`. `object` names
/// the single object of the one-object skew bicategory view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMonoidalCategory {
    pub object: Atom,
    pub category: FinCategory,
    pub tensor: FinFunctor,
    pub unit: Atom,
    pub assoc: CellFamily,
    pub left_unitor: CellFamily,
    pub right_unitor: CellFamily,
}

impl SkewMonoidalCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn(
        object: &str,
        category: &FinCategory,
        obj: impl Fn(&str, &str) -> Option<Atom>,
        arr: impl Fn(&Arrow, &Arrow) -> Option<Atom>,
        unit: &str,
        assoc: impl Fn(&str, &str, &str) -> Option<Atom>,
        left: impl Fn(&str) -> Option<Atom>,
        right: impl Fn(&str) -> Option<Atom>,
    ) -> Result<Self> {
        let tensor = pair_functor(category, category, category, obj, arr)?;
        let objs = category.objects();
        let missing = |what: &str| Error::Malformed(format!("{what} undefined"));
        let mut a = CellFamily::new();
        let mut l = CellFamily::new();
        let mut r = CellFamily::new();
        for x in objs {
            l.insert(key(&[x]), left(x).ok_or_else(|| missing("left unitor"))?);
            r.insert(key(&[x]), right(x).ok_or_else(|| missing("right unitor"))?);
            for y in objs {
                for z in objs {
                    a.insert(key(&[x, y, z]), assoc(x, y, z).ok_or_else(|| missing("associator"))?);
                }
            }
        }
        Ok(SkewMonoidalCategory {
            object: object.into(),
            category: category.clone(),
            tensor,
            unit: unit.into(),
            assoc: a,
            left_unitor: l,
            right_unitor: r,
        })
    }
}

/// Name of the unique arrow `src → tgt` in a thin category.
pub fn thin_arrow(c: &FinCategory, src: &str, tgt: &str) -> Option<Atom> {
    match c.hom(src, tgt).elements() {
        [a] => Some(a.clone()),
        _ => None,
    }
}

/// The one-object skew bicategory of a skew monoidal category.
pub fn one_object_view(m: &SkewMonoidalCategory) -> SkewBicategory {
    let o = m.object.clone();
    let widen = |fam: &CellFamily| -> CellFamily {
        fam.iter()
            .map(|(k, v)| {
                let pad = if k.len() == 3 { 4 } else { 2 };
                let mut kk = vec![o.clone(); pad];
                kk.extend(k.iter().cloned());
                (kk, v.clone())
            })
            .collect()
    };
    SkewBicategory {
        objects: FinSet::singleton(o.clone()),
        homs: BTreeMap::from([((o.clone(), o.clone()), m.category.clone())]),
        comp: BTreeMap::from([((o.clone(), o.clone(), o.clone()), m.tensor.clone())]),
        units: BTreeMap::from([(o.clone(), m.unit.clone())]),
        assoc: widen(&m.assoc),
        left_unitor: widen(&m.left_unitor),
        right_unitor: widen(&m.right_unitor),
    }
}

/// The skew monoidal category of a one-object skew bicategory.
pub fn skew_monoidal_of(s: &SkewBicategory) -> Result<SkewMonoidalCategory> {
    let [o] = s.objects.elements() else {
        return Err(Error::Shape(format!("expected one object, found {}", s.objects.len())));
    };
    let category = s.hom(o, o).clone();
    let tensor = s
        .comp_functor(o, o, o)
        .ok_or_else(|| Error::Malformed("no composition functor".into()))?
        .clone();
    if tensor.dom() != &product(&category, &category) {
        return Err(Error::Malformed("composition functor has the wrong frame".into()));
    }
    let narrow = |fam: &CellFamily, pad: usize| -> CellFamily {
        fam.iter().map(|(k, v)| (k[pad..].to_vec(), v.clone())).collect()
    };
    Ok(SkewMonoidalCategory {
        object: o.clone(),
        category,
        tensor,
        unit: s.unit(o).ok_or_else(|| Error::Malformed("no unit".into()))?.clone(),
        assoc: narrow(&s.assoc, 4),
        left_unitor: narrow(&s.left_unitor, 2),
        right_unitor: narrow(&s.right_unitor, 2),
    })
}
