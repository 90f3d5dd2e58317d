use std::collections::BTreeMap;

use super::bicat::{key, CellFamily};
use super::expr::build::*;
use super::expr::{check_eq, SkewEnv};
use super::warping::{validate_skew_warping, SkewWarping};
use crate::fincore::{validate_functor, Atom, FinFunctor};
use crate::{Result, ValidationReport};

/// An algebra for a skew warping at an object `a`: functors
/// `E_z: hom(z, a) → hom(Tz, a)` with cells `νE_{g,f}: E(Eg∘f) → Eg∘Tf`
/// (key `[x, y, g, f]`, `g: y → a`, `f: x → Ty`) and `κE_g: g → Eg∘K_y`
/// (key `[y, g]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewAlgebra {
    pub warping: SkewWarping,
    pub object: Atom,
    pub e_funcs: BTreeMap<Atom, FinFunctor>,
    pub cell_nu: CellFamily,
    pub cell_kappa: CellFamily,
}

impl SkewAlgebra {
    /// The algebra at `a = Ty` given by `E = ext_{-,y}`, `νE = ν`, `κE = κ`.
    pub fn self_algebra(w: &SkewWarping, y: &str) -> Result<Self> {
        let xs = &w.base.objects;
        let a = w.t(y).clone();
        let mut e_funcs = BTreeMap::new();
        let mut cell_nu = CellFamily::new();
        let mut cell_kappa = CellFamily::new();
        for z in xs {
            let f = w
                .ext
                .get(&(z.clone(), y.to_string()))
                .ok_or_else(|| crate::Error::Malformed(format!("no ext functor ({z},{y})")))?;
            e_funcs.insert(z.clone(), f.clone());
            for g in w.base.hom(z, &a).objects() {
                if let Some(c) = w.kappa.get(&key(&[z, y, g])) {
                    cell_kappa.insert(key(&[z, g]), c.clone());
                }
            }
        }
        for (kk, c) in &w.nu {
            if kk[2] == y {
                cell_nu.insert(
                    vec![kk[0].clone(), kk[1].clone(), kk[3].clone(), kk[4].clone()],
                    c.clone(),
                );
            }
        }
        Ok(SkewAlgebra {
            warping: w.clone(),
            object: a,
            e_funcs,
            cell_nu,
            cell_kappa,
        })
    }
}

/// Checks functoriality of `E`, naturality of `νE` and `κE`, and the two
/// coherence axioms: the associativity-type axiom (shaped like skew-warping
/// axiom 1 with the outer `T` replaced by `E`) and the unit-type axiom
/// (shaped like skew-warping axiom 4).
pub fn validate_skew_algebra(a: &SkewAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new("skew algebra");
    let wr = validate_skew_warping(&a.warping);
    if !wr.is_valid() {
        r.structural(format!("warping: {}", wr.summary()));
        return r;
    }
    let w = &a.warping;
    let s = &w.base;
    let xs = &s.objects;
    let obj = a.object.as_str();
    if !xs.contains(&a.object) {
        r.structural(format!("{obj} is not an object"));
        return r;
    }
    for z in xs {
        match a.e_funcs.get(z) {
            Some(f) if f.dom() == s.hom(z, obj) && f.cod() == s.hom(w.t(z), obj) => {
                r.absorb(&format!("E at {z}"), validate_functor(f));
            }
            _ => r.structural(format!("E at {z} is missing or has the wrong frame")),
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let env = SkewEnv::with_algebra(a);
    let objs = |x: &str, y: &str| s.hom(x, y).objects().elements().to_vec();
    for y in xs {
        for q in s.hom(y, obj).arrows() {
            let qe = arrow(y, obj, &q);
            check_eq(
                &env,
                &mut r,
                "naturality of κE",
                &format!("ψ={q}"),
                &then(vec![qe.clone(), alg_kappa(&cell(y, obj, &q.tgt))]),
                &then(vec![alg_kappa(&cell(y, obj, &q.src)), hc(em(qe), id(&k(y)))]),
            );
        }
        for x in xs {
            let ty = w.t(y).clone();
            for b in s.hom(y, obj).arrows() {
                for p in s.hom(x, &ty).arrows() {
                    let (be, pe) = (arrow(y, obj, &b), arrow(x, &ty, &p));
                    let (g, g2) = (cell(y, obj, &b.src), cell(y, obj, &b.tgt));
                    let (f, f2) = (cell(x, &ty, &p.src), cell(x, &ty, &p.tgt));
                    check_eq(
                        &env,
                        &mut r,
                        "naturality of νE",
                        &format!("({b}, {p})"),
                        &then(vec![em(hc(em(be.clone()), pe.clone())), alg_nu(&g2, &f2)]),
                        &then(vec![alg_nu(&g, &f), hc(em(be), tm(y, pe))]),
                    );
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
                for g in objs(y, obj) {
                    let g = cell(y, obj, &g);
                    let eg = e(&g);
                    check_eq(
                        &env,
                        &mut r,
                        "axiom 2",
                        &format!("g={g}: {y} -> {obj}, h={f}: {x} -> T{y}"),
                        &then(vec![
                            alg_kappa(&comp(&eg, &f)),
                            hc(alg_nu(&g, &f), id(&kx)),
                            alpha(&eg, &tf, &kx),
                        ]),
                        &hc(id(&eg), kappa(&f, y)),
                    );
                }
                for z in xs {
                    let tz = w.t(z).clone();
                    for g in objs(y, &tz) {
                        let g = cell(y, &tz, &g);
                        let tg = t(z, &g);
                        for h in objs(z, obj) {
                            let h = cell(z, obj, &h);
                            let eh = e(&h);
                            let lhs = then(vec![
                                alg_nu(&comp(&eh, &g), &f),
                                hc(alg_nu(&h, &g), id(&tf)),
                                alpha(&eh, &tg, &tf),
                            ]);
                            let rhs = then(vec![
                                em(hc(alg_nu(&h, &g), id(&f))),
                                em(alpha(&eh, &tg, &f)),
                                alg_nu(&h, &comp(&tg, &f)),
                                hc(id(&eh), nu(&g, &f, z)),
                            ]);
                            check_eq(&env, &mut r, "axiom 1", &format!("h={h}, g={g}, f={f}"), &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    r
}
