use std::collections::BTreeMap;

use super::bicat::{key, validate_skew_bicategory, CellFamily, SkewBicategory};
use super::expr::build::{k as k_, *};
use super::expr::Obj1;
use super::expr::{check_eq, SkewEnv};
use crate::fincore::{validate_functor, Atom, FinCategory, FinFunction, FinFunctor};
use crate::{Error, Result, ValidationReport};

/// A skew warping on a skew bicategory: an object map `T`, functors
/// `ext_{x,y}: hom(x, Ty) → hom(Tx, Ty)`, 1-cells `K_x: x → Tx` and cells
/// `ν_{g,f}: T(Tg∘f) → Tg∘Tf`, `ν0_x: TK_x → 1_{Tx}`, `κ_f: f → Tf∘K_x`.
///
/// Keys: `nu[x, y, z, g, f]` for `f: x → Ty`, `g: y → Tz`; `nu0[x]`;
/// `kappa[x, y, f]` for `f: x → Ty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewWarping {
    pub base: SkewBicategory,
    pub obj_map: FinFunction,
    pub ext: BTreeMap<(Atom, Atom), FinFunctor>,
    pub k: BTreeMap<Atom, Atom>,
    pub nu: CellFamily,
    pub nu0: CellFamily,
    pub kappa: CellFamily,
}

impl SkewWarping {
    pub fn t(&self, x: &str) -> &Atom {
        self.obj_map.apply(&x.to_string())
    }

    /// Fills `ν`, `ν0` and `κ` from `choose(hom, src, tgt)`, which names an
    /// arrow `src → tgt` of the hom-category holding the component.
    pub fn with_cells(
        base: &SkewBicategory,
        obj_map: FinFunction,
        ext: BTreeMap<(Atom, Atom), FinFunctor>,
        k: BTreeMap<Atom, Atom>,
        choose: impl Fn(&FinCategory, &str, &str) -> Option<Atom>,
    ) -> Result<Self> {
        let mut w = SkewWarping {
            base: base.clone(),
            obj_map,
            ext,
            k,
            nu: CellFamily::new(),
            nu0: CellFamily::new(),
            kappa: CellFamily::new(),
        };
        let xs = base.objects.clone();
        let mut nu = CellFamily::new();
        let mut nu0 = CellFamily::new();
        let mut kap = CellFamily::new();
        {
            let env = SkewEnv::with_warping(&w);
            let pick = |src: &Obj1, tgt: &Obj1, what: &str| {
                choose(base.hom(&src.src, &src.tgt), &src.name, &tgt.name)
                    .ok_or_else(|| Error::Malformed(format!("no {what} component {} -> {}", src.name, tgt.name)))
            };
            for x in &xs {
                for y in &xs {
                    let ty = w.t(y).clone();
                    for f in base.hom(x, &ty).objects() {
                        let fc = cell(x, &ty, f);
                        let tgt = env.eval_cell(&comp(&t(y, &fc), &k_(x)))?;
                        kap.insert(key(&[x, y, f]), pick(&env.eval_cell(&fc)?, &tgt, "κ")?);
                        for z in &xs {
                            let tz = w.t(z).clone();
                            for g in base.hom(y, &tz).objects() {
                                let tg = t(z, &cell(y, &tz, g));
                                let src = env.eval_cell(&t(z, &comp(&tg, &fc)))?;
                                let tgt = env.eval_cell(&comp(&tg, &t(y, &fc)))?;
                                nu.insert(key(&[x, y, z, g, f]), pick(&src, &tgt, "ν")?);
                            }
                        }
                    }
                }
                let src = env.eval_cell(&t(x, &k_(x)))?;
                let tgt = env.eval_cell(&unit(w.t(x)))?;
                nu0.insert(key(&[x]), pick(&src, &tgt, "ν0")?);
            }
        }
        w.nu = nu;
        w.nu0 = nu0;
        w.kappa = kap;
        Ok(w)
    }

    /// `T = id`, `ext = id`, `K = 1`, `ν` and `ν0` identities, `κ = ρ`.
    pub fn identity(base: &SkewBicategory) -> Result<Self> {
        let xs = &base.objects;
        let mut ext = BTreeMap::new();
        for x in xs {
            for y in xs {
                ext.insert((x.clone(), y.clone()), FinFunctor::identity(base.hom(x, y)));
            }
        }
        let ident = |c: &FinCategory, a: &str, b: &str| {
            let id = c.identity_name(a).filter(|_| a == b);
            id.or_else(|| c.hom(a, b).elements().first()).cloned()
        };
        let mut w = SkewWarping::with_cells(base, FinFunction::identity(xs), ext, base.units.clone(), ident)?;
        w.kappa = base.right_unitor.clone();
        Ok(w)
    }
}

/// Checks the base, functoriality of `ext`, naturality of `ν` and `κ`, and
/// the five skew-warping axioms.
pub fn validate_skew_warping(w: &SkewWarping) -> ValidationReport {
    let mut r = ValidationReport::new("skew warping");
    let base = validate_skew_bicategory(&w.base);
    if !base.is_valid() {
        r.structural(format!("base: {}", base.summary()));
        return r;
    }
    let s = &w.base;
    let xs = &s.objects;
    if w.obj_map.dom() != xs || w.obj_map.cod() != xs {
        r.structural("object map is not an endofunction of the objects");
        return r;
    }
    for x in xs {
        for y in xs {
            let (tx, ty) = (w.t(x), w.t(y));
            match w.ext.get(&(x.clone(), y.clone())) {
                Some(f) if f.dom() == s.hom(x, ty) && f.cod() == s.hom(tx, ty) => {
                    r.absorb(&format!("ext ({x},{y})"), validate_functor(f));
                }
                _ => r.structural(format!("ext ({x},{y}) is missing or has the wrong frame")),
            }
        }
        match w.k.get(x) {
            Some(kx) if s.hom(x, w.t(x)).objects().contains(kx) => {}
            _ => r.structural(format!("K at {x} is missing or not a 1-cell {x} -> T{x}")),
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let env = SkewEnv::with_warping(w);
    let objs = |x: &str, y: &str| s.hom(x, y).objects().elements().to_vec();
    for x in xs {
        for y in xs {
            let ty = w.t(y).clone();
            for p in s.hom(x, &ty).arrows() {
                let pe = arrow(x, &ty, &p);
                check_eq(
                    &env,
                    &mut r,
                    "naturality of κ",
                    &format!("φ={p}"),
                    &then(vec![pe.clone(), kappa(&cell(x, &ty, &p.tgt), y)]),
                    &then(vec![kappa(&cell(x, &ty, &p.src), y), hc(tm(y, pe), id(&k(x)))]),
                );
            }
            for z in xs {
                let tz = w.t(z).clone();
                for b in s.hom(y, &tz).arrows() {
                    for p in s.hom(x, &ty).arrows() {
                        let (be, pe) = (arrow(y, &tz, &b), arrow(x, &ty, &p));
                        let (g, g2) = (cell(y, &tz, &b.src), cell(y, &tz, &b.tgt));
                        let (f, f2) = (cell(x, &ty, &p.src), cell(x, &ty, &p.tgt));
                        check_eq(
                            &env,
                            &mut r,
                            "naturality of ν",
                            &format!("({b}, {p})"),
                            &then(vec![tm(z, hc(tm(z, be.clone()), pe.clone())), nu(&g2, &f2, z)]),
                            &then(vec![nu(&g, &f, z), hc(tm(z, be), tm(y, pe))]),
                        );
                    }
                }
            }
        }
    }
    for x in xs {
        let kx = k(x);
        for y in xs {
            let ty = w.t(y).clone();
            for f in objs(x, &ty) {
                let f = cell(x, &ty, &f);
                let tf = t(y, &f);
                let at = format!("f={f}: {x} -> T{y}");
                check_eq(
                    &env,
                    &mut r,
                    "axiom 2",
                    &at,
                    &then(vec![tm(y, kappa(&f, y)), nu(&f, &kx, y), hc(id(&tf), nu0(x))]),
                    &rho(&tf),
                );
                check_eq(
                    &env,
                    &mut r,
                    "axiom 3",
                    &at,
                    &then(vec![nu(&k(y), &f, y), hc(nu0(y), id(&tf)), lambda(&tf)]),
                    &then(vec![tm(y, hc(nu0(y), id(&f))), tm(y, lambda(&f))]),
                );
                for z in xs {
                    let tz = w.t(z).clone();
                    for g in objs(y, &tz) {
                        let g = cell(y, &tz, &g);
                        let tg = t(z, &g);
                        let at = format!("g={g}: {y} -> T{z}, f={f}: {x} -> T{y}");
                        check_eq(
                            &env,
                            &mut r,
                            "axiom 4",
                            &at,
                            &then(vec![
                                kappa(&comp(&tg, &f), z),
                                hc(nu(&g, &f, z), id(&kx)),
                                alpha(&tg, &tf, &kx),
                            ]),
                            &hc(id(&tg), kappa(&f, y)),
                        );
                        for v in xs {
                            let tv = w.t(v).clone();
                            for h in objs(z, &tv) {
                                let h = cell(z, &tv, &h);
                                let th = t(v, &h);
                                let lhs = then(vec![
                                    nu(&comp(&th, &g), &f, v),
                                    hc(nu(&h, &g, v), id(&tf)),
                                    alpha(&th, &tg, &tf),
                                ]);
                                let rhs = then(vec![
                                    tm(v, hc(nu(&h, &g, v), id(&f))),
                                    tm(v, alpha(&th, &tg, &f)),
                                    nu(&h, &comp(&tg, &f), v),
                                    hc(id(&th), nu(&g, &f, z)),
                                ]);
                                check_eq(&env, &mut r, "axiom 1", &format!("h={h}, {at}"), &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
        check_eq(
            &env,
            &mut r,
            "axiom 5",
            x,
            &then(vec![kappa(&kx, x), hc(nu0(x), id(&kx)), lambda(&kx)]),
            &id(&kx),
        );
    }
    r
}

/// The skew bicategory with `hom(x, y) = hom(x, Ty)`, `g ⊛ f = Tg ∘ f`, units
/// `K_x`, associator `α_{Th,Tg,f} ∘ (ν_{h,g} ∗ f)`, left unitor
/// `λ_f ∘ (ν0 ∗ f)` and right unitor `κ`.
pub fn skew_kleisli(w: &SkewWarping) -> Result<SkewBicategory> {
    let r = validate_skew_warping(w);
    if !r.is_valid() {
        return Err(Error::invalid("skew warping", &r));
    }
    let s = &w.base;
    let xs = &s.objects;
    let env = SkewEnv::with_warping(w);
    let mut homs = BTreeMap::new();
    for x in xs {
        for y in xs {
            homs.insert((x.clone(), y.clone()), s.hom(x, w.t(y)).clone());
        }
    }
    let name = |m: &crate::skew::SkewPastingExpr| env.eval(m).ok().map(|v| v.arrow.name);
    let obj = |x: &str, y: &str, z: &str, g: &str, f: &str| {
        let (ty, tz) = (w.t(y), w.t(z));
        env.eval_cell(&comp(&t(z, &cell(y, tz, g)), &cell(x, ty, f)))
            .ok()
            .map(|o| o.name)
    };
    let arr = |x: &str, y: &str, z: &str, b: &crate::fincore::Arrow, a: &crate::fincore::Arrow| {
        name(&hc(tm(z, arrow(y, w.t(z), b)), arrow(x, w.t(y), a)))
    };
    let assoc = |kk: &[&str]| {
        let [x, y, z, v, h, g, f] = kk else { return None };
        let (h, g, f) = (cell(z, w.t(v), h), cell(y, w.t(z), g), cell(x, w.t(y), f));
        name(&then(vec![hc(nu(&h, &g, v), id(&f)), alpha(&t(v, &h), &t(z, &g), &f)]))
    };
    let left = |kk: &[&str]| {
        let [x, y, f] = kk else { return None };
        let f = cell(x, w.t(y), f);
        name(&then(vec![hc(nu0(y), id(&f)), lambda(&f)]))
    };
    let right = |kk: &[&str]| {
        let [x, y, f] = kk else { return None };
        name(&kappa(&cell(x, w.t(y), f), y))
    };
    SkewBicategory::from_fn(xs, homs, obj, arr, w.k.clone(), assoc, left, right)
}
