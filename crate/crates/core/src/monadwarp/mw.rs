use std::collections::BTreeMap;

use super::monad::{category_to_monad, monad_to_category};
use super::warping::Warping;
use crate::fincore::{validate_category, Arrow, Atom, FinCategory, FinFunction};
use crate::spaneng::{compose_word, identity_span, restrict_star, star_function, Cell2, PathElem, STAR};
use crate::{Error, Result, ValidationReport};

/// An mw-monad on a finite category: an object map `T`, extension maps
/// `ext_{x,y}: B(x, Ty) → B(Tx, Ty)` and units `K_x ∈ B(x, Tx)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwMonad {
    pub base: FinCategory,
    pub obj_map: FinFunction,
    pub ext: BTreeMap<(Atom, Atom), FinFunction>,
    pub unit_arrows: BTreeMap<Atom, Atom>,
}

impl MwMonad {
    /// Tabulates from closures; `ext(x, y, f)` and `unit(x)` return arrow names.
    pub fn from_fn(
        base: &FinCategory,
        obj_map: FinFunction,
        ext: impl Fn(&str, &str, &str) -> Atom,
        unit: impl Fn(&str) -> Atom,
    ) -> Result<Self> {
        let xs = base.objects();
        let mut table = BTreeMap::new();
        for x in xs {
            for y in xs {
                let (tx, ty) = (obj_map.apply(x), obj_map.apply(y));
                let f = FinFunction::from_fn(base.hom(x, ty).clone(), base.hom(tx, ty).clone(), |f| ext(x, y, f))
                    .map_err(|e| Error::Malformed(format!("ext at ({x},{y}): {e}")))?;
                table.insert((x.clone(), y.clone()), f);
            }
        }
        Ok(MwMonad {
            base: base.clone(),
            obj_map,
            ext: table,
            unit_arrows: xs.iter().map(|x| (x.clone(), unit(x))).collect(),
        })
    }

    /// `T = id`, `ext = id`, `K_x = 1_x`.
    pub fn identity(c: &FinCategory) -> Self {
        MwMonad::from_fn(
            c,
            FinFunction::identity(c.objects()),
            |_, _, f| f.to_string(),
            |x| c.identity_name(x).cloned().unwrap_or_default(),
        )
        .expect("identity mw-monad")
    }

    pub fn t(&self, x: &str) -> &Atom {
        self.obj_map.apply(&x.to_string())
    }

    pub fn ext_at(&self, x: &str, y: &str, f: &str) -> Option<&Atom> {
        self.ext.get(&(x.to_string(), y.to_string()))?.get(&f.to_string())
    }

    pub fn k(&self, x: &str) -> Option<&Atom> {
        self.unit_arrows.get(x)
    }

    /// The extension as an arrow `Tx → Ty`.
    pub fn extend(&self, f: &Arrow) -> Option<Arrow> {
        let y = self
            .base
            .objects()
            .iter()
            .find(|y| self.t(y) == &f.tgt && self.base.hom(&f.src, self.t(y)).contains(&f.name))?;
        let g = self.ext_at(&f.src, y, &f.name)?;
        Some(Arrow::new(self.t(&f.src).clone(), self.t(y).clone(), g.clone()))
    }
}

/// Structural checks and the three mw-monad equations, numbered as the
/// warping axioms they correspond to.
pub fn validate_mw(m: &MwMonad) -> ValidationReport {
    let mut r = ValidationReport::new("mw-monad");
    let c = &m.base;
    let base_report = validate_category(c);
    if !base_report.is_valid() {
        r.structural(format!("base category: {}", base_report.summary()));
        return r;
    }
    let xs = c.objects();
    if m.obj_map.dom() != xs || m.obj_map.cod() != xs {
        r.structural("object map is not an endofunction of the objects");
        return r;
    }
    for x in xs {
        for y in xs {
            let (tx, ty) = (m.t(x), m.t(y));
            match m.ext.get(&(x.clone(), y.clone())) {
                Some(f) if f.dom() == c.hom(x, ty) && f.cod() == c.hom(tx, ty) => {}
                _ => r.structural(format!("ext at ({x},{y}) is missing or has the wrong frame")),
            }
        }
        match m.k(x) {
            Some(k) if c.hom(x, m.t(x)).contains(k) => {}
            _ => r.structural(format!("K_{x} is missing or not in B({x}, T{x})")),
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let ext = |x: &str, y: &str, f: &str| m.ext_at(x, y, f).expect("checked").clone();
    let comp = |x: &str, y: &str, z: &str, g: &str, f: &str| c.compose_names(x, y, z, g, f).expect("valid").clone();
    for x in xs {
        for y in xs {
            for z in xs {
                let (ty, tz) = (m.t(y), m.t(z));
                for f in c.hom(x, ty) {
                    for g in c.hom(y, tz) {
                        let tg = ext(y, z, g);
                        let lhs = ext(x, z, &comp(x, ty, tz, &tg, f));
                        let rhs = comp(m.t(x), ty, tz, &tg, &ext(x, y, f));
                        if lhs != rhs {
                            r.violation("axiom 1", format!("f={f}:{x}->{ty}, g={g}:{y}->{tz}: {lhs} vs {rhs}"));
                        }
                    }
                }
            }
        }
    }
    for x in xs {
        let tx = m.t(x);
        let tk = ext(x, x, m.k(x).expect("checked"));
        let one = c.identity_name(tx).expect("valid");
        if &tk != one {
            r.violation("axiom 2", format!("T(K_{x}) = {tk}, expected {one}"));
        }
    }
    for x in xs {
        for y in xs {
            let ty = m.t(y);
            for f in c.hom(x, ty) {
                let back = comp(x, m.t(x), ty, &ext(x, y, f), m.k(x).expect("checked"));
                if &back != f {
                    r.violation("axiom 3", format!("f={f}:{x}->{ty}: Tf∘K_{x} = {back}"));
                }
            }
        }
    }
    r
}

/// Reads an mw-monad off a warping whose endo-span is `T*` for some `T`
/// (or the identity span, read as `T = id`).
pub fn mw_view(w: &Warping) -> Result<MwMonad> {
    let xs = w.base.objects();
    if w.base.carrier().arity() != 1 {
        return Err(Error::Shape("base monad is not carried by a basic span".into()));
    }
    let base = monad_to_category(&w.base);
    if w.endo == identity_span(xs) {
        let read = |x: &str, y: &str, f: &str| Some(w.t.apply(x, y, &PathElem::atom(f))?.render());
        return from_readers(&base, FinFunction::identity(xs), read, |x| {
            Some(w.k.apply(x, x, &PathElem::empty())?.render())
        });
    }
    let t = star_function(&w.endo).ok_or_else(|| Error::Shape("endo-span is not of the form T*".into()))?;
    let read = |x: &str, y: &str, f: &str| -> Option<Atom> {
        let (tx, ty) = (t.apply(&x.to_string()), t.apply(&y.to_string()));
        let aba = PathElem::from_parts(vec![STAR.into(), f.into(), STAR.into()], vec![x.into(), ty.clone()]).ok()?;
        let img = w.t.apply(tx, y, &aba)?;
        (img.arity() == 2 && img.atoms()[1] == STAR).then(|| img.atoms()[0].clone())
    };
    from_readers(&base, t.clone(), read, |x| {
        let img = w.k.apply(x, x, &PathElem::empty())?;
        (img.arity() == 2 && img.atoms()[1] == STAR).then(|| img.atoms()[0].clone())
    })
}

fn from_readers(
    base: &FinCategory,
    obj_map: FinFunction,
    ext: impl Fn(&str, &str, &str) -> Option<Atom>,
    unit: impl Fn(&str) -> Option<Atom>,
) -> Result<MwMonad> {
    let xs = base.objects();
    let mut table = BTreeMap::new();
    for x in xs {
        for y in xs {
            let (tx, ty) = (obj_map.apply(x), obj_map.apply(y));
            let mut map = BTreeMap::new();
            for f in base.hom(x, ty) {
                let g = ext(x, y, f).ok_or_else(|| Error::Shape(format!("t has no readable component at {f}")))?;
                map.insert(f.clone(), g);
            }
            table.insert(
                (x.clone(), y.clone()),
                FinFunction::new(base.hom(x, ty).clone(), base.hom(tx, ty).clone(), map)
                    .map_err(|e| Error::Shape(format!("ext at ({x},{y}): {e}")))?,
            );
        }
    }
    let mut units = BTreeMap::new();
    for x in xs {
        let k = unit(x).ok_or_else(|| Error::Shape(format!("k has no readable component at {x}")))?;
        units.insert(x.clone(), k);
    }
    Ok(MwMonad {
        base: base.clone(),
        obj_map,
        ext: table,
        unit_arrows: units,
    })
}

/// The warping of `T*` over the span monad of the base category.
pub fn mw_to_warping(m: &MwMonad) -> Result<Warping> {
    let base = category_to_monad(&m.base)?;
    let xs = base.objects().clone();
    let a = restrict_star(&m.obj_map);
    let b = base.carrier().clone();
    let ab = compose_word(&[&a, &b])?;
    let aba = compose_word(&[&a, &b, &a])?;
    let tagged = |g: &str, ty: &str| PathElem::from_parts(vec![g.into(), STAR.into()], vec![ty.into()]).ok();
    let t = Cell2::from_fn(aba, ab.clone(), |_, y, e| {
        let (z, f) = (&e.pivots()[0], &e.atoms()[1]);
        tagged(m.ext_at(z, y, f)?, m.t(y))
    })?;
    let k = Cell2::from_fn(identity_span(&xs), ab, |x, _, _| tagged(m.k(x)?, m.t(x)))?;
    Ok(Warping { base, endo: a, t, k })
}
