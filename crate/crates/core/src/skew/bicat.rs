use std::collections::BTreeMap;

use crate::fincore::{
    pair_tag, product, validate_category, validate_functor, Arrow, Atom, FinCategory, FinFunction, FinFunctor, FinSet,
};
use crate::{Error, Result, ValidationReport};

/// Components of a family of 2-cells, keyed by the objects and 1-cells that
/// index them (e.g. `[x, y, z, w, h, g, f]` for an associator component).
pub type CellFamily = BTreeMap<Vec<Atom>, Atom>;

/// A finite skew bicategory.
///
/// `homs[(x, y)]` is the hom-category of 1-cells `x → y`; `comp[(x, y, z)]`
/// is the composition functor `hom(y, z) × hom(x, y) → hom(x, z)`. The
/// associator `(h∘g)∘f → h∘(g∘f)`, left unitor `1∘f → f` and right unitor
/// `f → f∘1` need not be invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBicategory {
    pub objects: FinSet,
    pub homs: BTreeMap<(Atom, Atom), FinCategory>,
    pub comp: BTreeMap<(Atom, Atom, Atom), FinFunctor>,
    pub units: BTreeMap<Atom, Atom>,
    pub assoc: CellFamily,
    pub left_unitor: CellFamily,
    pub right_unitor: CellFamily,
}

pub(crate) fn key(parts: &[&str]) -> Vec<Atom> {
    parts.iter().map(|s| s.to_string()).collect()
}

/// The functor `c × d → cod` given on objects and arrows by closures.
pub fn pair_functor(
    c: &FinCategory,
    d: &FinCategory,
    cod: &FinCategory,
    obj: impl Fn(&str, &str) -> Option<Atom>,
    arr: impl Fn(&Arrow, &Arrow) -> Option<Atom>,
) -> Result<FinFunctor> {
    let dom = product(c, d);
    let mut obj_table = BTreeMap::new();
    for a in c.objects() {
        for b in d.objects() {
            let v = obj(a, b).ok_or_else(|| Error::Malformed(format!("composite of ({a},{b}) undefined")))?;
            obj_table.insert(pair_tag(a, b), v);
        }
    }
    let obj_map = FinFunction::new(dom.objects().clone(), cod.objects().clone(), obj_table)
        .map_err(|e| Error::Malformed(format!("composition on objects: {e}")))?;
    let mut arr_tables: BTreeMap<(Atom, Atom), BTreeMap<Atom, Atom>> = BTreeMap::new();
    for a in c.arrows() {
        for b in d.arrows() {
            let v = arr(&a, &b).ok_or_else(|| Error::Malformed(format!("composite of ({a}, {b}) undefined")))?;
            arr_tables
                .entry((pair_tag(&a.src, &b.src), pair_tag(&a.tgt, &b.tgt)))
                .or_default()
                .insert(pair_tag(&a.name, &b.name), v);
        }
    }
    let mut mor_map = BTreeMap::new();
    for s in dom.objects() {
        for t in dom.objects() {
            let table = arr_tables.remove(&(s.clone(), t.clone())).unwrap_or_default();
            let (fs, ft) = (obj_map.apply(s), obj_map.apply(t));
            let f = FinFunction::new(dom.hom(s, t).clone(), cod.hom(fs, ft).clone(), table)
                .map_err(|e| Error::Malformed(format!("composition on arrows {s} -> {t}: {e}")))?;
            mor_map.insert((s.clone(), t.clone()), f);
        }
    }
    Ok(FinFunctor::from_parts(dom, cod.clone(), obj_map, mor_map))
}

impl SkewBicategory {
    /// Builds all tables from closures: `obj(x, y, z, g, f)` names `g∘f`,
    /// `arr(x, y, z, β, φ)` names `β∗φ`, and the structure cells name arrows of
    /// the relevant hom-category.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn(
        objects: &FinSet,
        homs: BTreeMap<(Atom, Atom), FinCategory>,
        obj: impl Fn(&str, &str, &str, &str, &str) -> Option<Atom>,
        arr: impl Fn(&str, &str, &str, &Arrow, &Arrow) -> Option<Atom>,
        units: BTreeMap<Atom, Atom>,
        assoc: impl Fn(&[&str]) -> Option<Atom>,
        left: impl Fn(&[&str]) -> Option<Atom>,
        right: impl Fn(&[&str]) -> Option<Atom>,
    ) -> Result<Self> {
        let hom = |x: &str, y: &str| {
            homs.get(&(x.to_string(), y.to_string()))
                .ok_or_else(|| Error::Malformed(format!("no hom-category ({x},{y})")))
        };
        let mut comp = BTreeMap::new();
        for x in objects {
            for y in objects {
                for z in objects {
                    let f = pair_functor(
                        hom(y, z)?,
                        hom(x, y)?,
                        hom(x, z)?,
                        |g, f| obj(x, y, z, g, f),
                        |b, a| arr(x, y, z, b, a),
                    )?;
                    comp.insert((x.clone(), y.clone(), z.clone()), f);
                }
            }
        }
        let mut s = SkewBicategory {
            objects: objects.clone(),
            homs,
            comp,
            units,
            assoc: CellFamily::new(),
            left_unitor: CellFamily::new(),
            right_unitor: CellFamily::new(),
        };
        let missing = |what: &str, k: &[&str]| Error::Malformed(format!("{what} undefined at {k:?}"));
        let mut assoc_f = CellFamily::new();
        let mut left_f = CellFamily::new();
        let mut right_f = CellFamily::new();
        for x in objects {
            for y in objects {
                for f in s.hom(x, y).objects() {
                    let k = [x.as_str(), y.as_str(), f.as_str()];
                    left_f.insert(key(&k), left(&k).ok_or_else(|| missing("left unitor", &k))?);
                    right_f.insert(key(&k), right(&k).ok_or_else(|| missing("right unitor", &k))?);
                }
                for z in objects {
                    for w in objects {
                        for h in s.hom(z, w).objects() {
                            for g in s.hom(y, z).objects() {
                                for f in s.hom(x, y).objects() {
                                    let k = [x, y, z, w, h, g, f].map(|a| a.as_str());
                                    assoc_f.insert(key(&k), assoc(&k).ok_or_else(|| missing("associator", &k))?);
                                }
                            }
                        }
                    }
                }
            }
        }
        s.assoc = assoc_f;
        s.left_unitor = left_f;
        s.right_unitor = right_f;
        Ok(s)
    }

    pub fn hom(&self, x: &str, y: &str) -> &FinCategory {
        static EMPTY: std::sync::OnceLock<FinCategory> = std::sync::OnceLock::new();
        self.homs
            .get(&(x.to_string(), y.to_string()))
            .unwrap_or_else(|| EMPTY.get_or_init(|| FinCategory::discrete(&FinSet::empty())))
    }

    pub fn comp_functor(&self, x: &str, y: &str, z: &str) -> Option<&FinFunctor> {
        self.comp.get(&(x.to_string(), y.to_string(), z.to_string()))
    }

    /// `g ∘ f` for `f: x → y`, `g: y → z`.
    pub fn compose(&self, x: &str, y: &str, z: &str, g: &str, f: &str) -> Option<&Atom> {
        self.comp_functor(x, y, z)?.apply_obj(&pair_tag(g, f))
    }

    /// `β ∗ φ` for `φ` in `hom(x, y)` and `β` in `hom(y, z)`.
    pub fn hcompose(&self, x: &str, y: &str, z: &str, b: &Arrow, a: &Arrow) -> Option<Arrow> {
        let pair = Arrow::new(
            pair_tag(&b.src, &a.src),
            pair_tag(&b.tgt, &a.tgt),
            pair_tag(&b.name, &a.name),
        );
        self.comp_functor(x, y, z)?.apply(&pair)
    }

    pub fn unit(&self, x: &str) -> Option<&Atom> {
        self.units.get(x)
    }
}

/// Whether every composite, unit and structure cell is defined and lands
/// where it should, before any law is checked.
pub(crate) fn structural_checks(s: &SkewBicategory, r: &mut ValidationReport) {
    for x in &s.objects {
        for y in &s.objects {
            match s.homs.get(&(x.clone(), y.clone())) {
                None => r.structural(format!("no hom-category ({x},{y})")),
                Some(c) => {
                    let cr = validate_category(c);
                    if !cr.is_valid() {
                        r.structural(format!("hom({x},{y}): {}", cr.summary()));
                    }
                }
            }
        }
        match s.unit(x) {
            Some(u) if s.hom(x, x).objects().contains(u) => {}
            _ => r.structural(format!("unit at {x} is missing or not a 1-cell {x} -> {x}")),
        }
    }
    if !r.is_structurally_sound() {
        return;
    }
    for x in &s.objects {
        for y in &s.objects {
            for z in &s.objects {
                let Some(f) = s.comp_functor(x, y, z) else {
                    r.structural(format!("no composition functor ({x},{y},{z})"));
                    continue;
                };
                if f.dom() != &product(s.hom(y, z), s.hom(x, y)) || f.cod() != s.hom(x, z) {
                    r.structural(format!("composition functor ({x},{y},{z}) has the wrong frame"));
                    continue;
                }
                let fr = validate_functor(f);
                if !fr.is_structurally_sound() {
                    r.structural(format!("composition functor ({x},{y},{z}): {}", fr.summary()));
                } else {
                    r.absorb(&format!("composition ({x},{y},{z})"), fr);
                }
            }
        }
    }
}

/// Naturality of `α`, `λ`, `ρ` and the five skew axioms, checked over every
/// tuple of objects, 1-cells and 2-cells.
pub fn validate_skew_bicategory(s: &SkewBicategory) -> ValidationReport {
    use super::expr::build::*;
    use super::expr::{check_eq, SkewEnv};
    let mut r = ValidationReport::new("skew bicategory");
    structural_checks(s, &mut r);
    if !r.is_valid() {
        return r;
    }
    let env = SkewEnv::new(s);
    let xs = &s.objects;
    let objs = |x: &str, y: &str| s.hom(x, y).objects().elements().to_vec();
    for x in xs {
        for y in xs {
            for p in s.hom(x, y).arrows() {
                let (f, f2) = (cell(x, y, &p.src), cell(x, y, &p.tgt));
                let pe = arrow(x, y, &p);
                let at = format!("φ={p}");
                check_eq(
                    &env,
                    &mut r,
                    "naturality of λ",
                    &at,
                    &then(vec![hc(id(&unit(y)), pe.clone()), lambda(&f2)]),
                    &then(vec![lambda(&f), pe.clone()]),
                );
                check_eq(
                    &env,
                    &mut r,
                    "naturality of ρ",
                    &at,
                    &then(vec![pe.clone(), rho(&f2)]),
                    &then(vec![rho(&f), hc(pe, id(&unit(x)))]),
                );
            }
            for z in xs {
                for w in xs {
                    for n in s.hom(z, w).arrows() {
                        for b in s.hom(y, z).arrows() {
                            for p in s.hom(x, y).arrows() {
                                let (ne, be, pe) = (arrow(z, w, &n), arrow(y, z, &b), arrow(x, y, &p));
                                let lhs = then(vec![
                                    hc(hc(ne.clone(), be.clone()), pe.clone()),
                                    alpha(&cell(z, w, &n.tgt), &cell(y, z, &b.tgt), &cell(x, y, &p.tgt)),
                                ]);
                                let rhs = then(vec![
                                    alpha(&cell(z, w, &n.src), &cell(y, z, &b.src), &cell(x, y, &p.src)),
                                    hc(ne, hc(be, pe)),
                                ]);
                                check_eq(&env, &mut r, "naturality of α", &format!("({n}, {b}, {p})"), &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    for x in xs {
        for y in xs {
            for z in xs {
                for w in xs {
                    for v in xs {
                        for f in objs(x, y) {
                            for g in objs(y, z) {
                                for h in objs(z, w) {
                                    for k in objs(w, v) {
                                        let (f, g, h, k) =
                                            (cell(x, y, &f), cell(y, z, &g), cell(z, w, &h), cell(w, v, &k));
                                        let lhs =
                                            then(vec![alpha(&comp(&k, &h), &g, &f), alpha(&k, &h, &comp(&g, &f))]);
                                        let rhs = then(vec![
                                            hc(alpha(&k, &h, &g), id(&f)),
                                            alpha(&k, &comp(&h, &g), &f),
                                            hc(id(&k), alpha(&h, &g, &f)),
                                        ]);
                                        check_eq(&env, &mut r, "axiom 1", &format!("({k},{h},{g},{f})"), &lhs, &rhs);
                                    }
                                }
                            }
                        }
                    }
                }
                for f in objs(x, y) {
                    for g in objs(y, z) {
                        let (f, g) = (cell(x, y, &f), cell(y, z, &g));
                        let at = format!("({g},{f})");
                        let gf = comp(&g, &f);
                        check_eq(
                            &env,
                            &mut r,
                            "axiom 2",
                            &at,
                            &then(vec![
                                hc(rho(&g), id(&f)),
                                alpha(&g, &unit(y), &f),
                                hc(id(&g), lambda(&f)),
                            ]),
                            &id(&gf),
                        );
                        check_eq(
                            &env,
                            &mut r,
                            "axiom 3",
                            &at,
                            &then(vec![alpha(&unit(z), &g, &f), lambda(&gf)]),
                            &hc(lambda(&g), id(&f)),
                        );
                        check_eq(
                            &env,
                            &mut r,
                            "axiom 4",
                            &at,
                            &then(vec![rho(&gf), alpha(&g, &f, &unit(x))]),
                            &hc(id(&g), rho(&f)),
                        );
                    }
                }
            }
        }
        check_eq(
            &env,
            &mut r,
            "axiom 5",
            x,
            &then(vec![rho(&unit(x)), lambda(&unit(x))]),
            &id(&unit(x)),
        );
    }
    r
}
