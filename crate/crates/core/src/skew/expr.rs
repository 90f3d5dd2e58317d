use std::fmt;

use super::algebra::SkewAlgebra;
use super::bicat::{key, CellFamily, SkewBicategory};
use super::warping::SkewWarping;
use crate::fincore::{Arrow, Atom};
use crate::{Error, Result};

/// A formal 1-cell: an object of some hom-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell1Expr {
    Named {
        src: Atom,
        tgt: Atom,
        name: Atom,
    },
    Unit(Atom),
    /// `K_x: x → Tx`.
    K(Atom),
    /// `g ∘ f`.
    Comp(Box<Cell1Expr>, Box<Cell1Expr>),
    /// `T` applied to `f: x → Ty`; `y` is needed because `T` need not be injective.
    Ext {
        y: Atom,
        arg: Box<Cell1Expr>,
    },
    /// `E` applied to `g: z → a`.
    Act(Box<Cell1Expr>),
}

/// A formal 2-cell: a morphism of some hom-category built from structure
/// cells, functor images, horizontal composites and vertical composites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewPastingExpr {
    Given {
        src: Atom,
        tgt: Atom,
        arrow: Arrow,
    },
    Id(Cell1Expr),
    /// `α_{h,g,f}`.
    Assoc(Cell1Expr, Cell1Expr, Cell1Expr),
    LeftUnitor(Cell1Expr),
    RightUnitor(Cell1Expr),
    /// `ν_{g,f}` with `g: y → Tz`.
    Nu {
        g: Cell1Expr,
        f: Cell1Expr,
        z: Atom,
    },
    Nu0(Atom),
    /// `κ_f` with `f: x → Ty`.
    Kappa {
        f: Cell1Expr,
        y: Atom,
    },
    AlgNu {
        g: Cell1Expr,
        f: Cell1Expr,
    },
    AlgKappa(Cell1Expr),
    Ext {
        y: Atom,
        arg: Box<SkewPastingExpr>,
    },
    Act(Box<SkewPastingExpr>),
    /// `β ∗ φ`, with `φ` the inner (first) factor.
    Hcomp(Box<SkewPastingExpr>, Box<SkewPastingExpr>),
    /// Vertical composite; the first element is applied first.
    Then(Vec<SkewPastingExpr>),
}

pub mod build {
    //! Short constructors for writing axioms.
    use super::{Cell1Expr as C, SkewPastingExpr as M};
    use crate::fincore::Arrow;

    pub fn cell(src: &str, tgt: &str, name: &str) -> C {
        C::Named {
            src: src.into(),
            tgt: tgt.into(),
            name: name.into(),
        }
    }
    pub fn unit(x: &str) -> C {
        C::Unit(x.into())
    }
    pub fn k(x: &str) -> C {
        C::K(x.into())
    }
    pub fn comp(g: &C, f: &C) -> C {
        C::Comp(Box::new(g.clone()), Box::new(f.clone()))
    }
    pub fn t(y: &str, f: &C) -> C {
        C::Ext {
            y: y.into(),
            arg: Box::new(f.clone()),
        }
    }
    pub fn e(g: &C) -> C {
        C::Act(Box::new(g.clone()))
    }
    pub fn arrow(src: &str, tgt: &str, a: &Arrow) -> M {
        M::Given {
            src: src.into(),
            tgt: tgt.into(),
            arrow: a.clone(),
        }
    }
    pub fn id(c: &C) -> M {
        M::Id(c.clone())
    }
    pub fn alpha(h: &C, g: &C, f: &C) -> M {
        M::Assoc(h.clone(), g.clone(), f.clone())
    }
    pub fn lambda(f: &C) -> M {
        M::LeftUnitor(f.clone())
    }
    pub fn rho(f: &C) -> M {
        M::RightUnitor(f.clone())
    }
    pub fn nu(g: &C, f: &C, z: &str) -> M {
        M::Nu {
            g: g.clone(),
            f: f.clone(),
            z: z.into(),
        }
    }
    pub fn nu0(x: &str) -> M {
        M::Nu0(x.into())
    }
    pub fn kappa(f: &C, y: &str) -> M {
        M::Kappa {
            f: f.clone(),
            y: y.into(),
        }
    }
    pub fn alg_nu(g: &C, f: &C) -> M {
        M::AlgNu {
            g: g.clone(),
            f: f.clone(),
        }
    }
    pub fn alg_kappa(g: &C) -> M {
        M::AlgKappa(g.clone())
    }
    pub fn tm(y: &str, m: M) -> M {
        M::Ext {
            y: y.into(),
            arg: Box::new(m),
        }
    }
    pub fn em(m: M) -> M {
        M::Act(Box::new(m))
    }
    pub fn hc(b: M, a: M) -> M {
        M::Hcomp(Box::new(b), Box::new(a))
    }
    pub fn then(list: Vec<M>) -> M {
        M::Then(list)
    }
}

impl fmt::Display for Cell1Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell1Expr::Named { name, .. } => write!(f, "{name}"),
            Cell1Expr::Unit(x) => write!(f, "1_{x}"),
            Cell1Expr::K(x) => write!(f, "K_{x}"),
            Cell1Expr::Comp(g, h) => write!(f, "({g}∘{h})"),
            Cell1Expr::Ext { arg, .. } => write!(f, "T{arg}"),
            Cell1Expr::Act(arg) => write!(f, "E{arg}"),
        }
    }
}

impl fmt::Display for SkewPastingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SkewPastingExpr as M;
        match self {
            M::Given { arrow, .. } => write!(f, "{}", arrow.name),
            M::Id(c) => write!(f, "1[{c}]"),
            M::Assoc(h, g, x) => write!(f, "α[{h},{g},{x}]"),
            M::LeftUnitor(c) => write!(f, "λ[{c}]"),
            M::RightUnitor(c) => write!(f, "ρ[{c}]"),
            M::Nu { g, f: x, .. } => write!(f, "ν[{g},{x}]"),
            M::Nu0(x) => write!(f, "ν0[{x}]"),
            M::Kappa { f: x, .. } => write!(f, "κ[{x}]"),
            M::AlgNu { g, f: x } => write!(f, "νE[{g},{x}]"),
            M::AlgKappa(g) => write!(f, "κE[{g}]"),
            M::Ext { arg, .. } => write!(f, "T({arg})"),
            M::Act(arg) => write!(f, "E({arg})"),
            M::Hcomp(b, a) => write!(f, "({b} * {a})"),
            M::Then(list) => {
                let parts: Vec<String> = list.iter().map(|m| m.to_string()).collect();
                write!(f, "[{}]", parts.join(" ; "))
            }
        }
    }
}

/// A 1-cell `name: src → tgt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obj1 {
    pub src: Atom,
    pub tgt: Atom,
    pub name: Atom,
}

/// A morphism `arrow` of `hom(src, tgt)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor2 {
    pub src: Atom,
    pub tgt: Atom,
    pub arrow: Arrow,
}

/// What the names in an expression refer to.
#[derive(Clone, Copy, Debug)]
pub struct SkewEnv<'a> {
    base: &'a SkewBicategory,
    warping: Option<&'a SkewWarping>,
    algebra: Option<&'a SkewAlgebra>,
}

fn ill(msg: String) -> Error {
    Error::IllTyped(msg)
}

impl<'a> SkewEnv<'a> {
    pub fn new(base: &'a SkewBicategory) -> Self {
        SkewEnv {
            base,
            warping: None,
            algebra: None,
        }
    }

    pub fn with_warping(w: &'a SkewWarping) -> Self {
        SkewEnv {
            base: &w.base,
            warping: Some(w),
            algebra: None,
        }
    }

    pub fn with_algebra(a: &'a SkewAlgebra) -> Self {
        SkewEnv {
            base: &a.warping.base,
            warping: Some(&a.warping),
            algebra: Some(a),
        }
    }

    fn warping(&self) -> Result<&'a SkewWarping> {
        self.warping.ok_or_else(|| ill("no warping in scope".into()))
    }

    fn algebra(&self) -> Result<&'a SkewAlgebra> {
        self.algebra.ok_or_else(|| ill("no algebra in scope".into()))
    }

    fn t(&self, x: &str) -> Result<Atom> {
        self.warping()?
            .obj_map
            .get(&x.to_string())
            .cloned()
            .ok_or_else(|| ill(format!("T undefined at {x}")))
    }

    fn compose_obj(&self, g: &Obj1, f: &Obj1) -> Result<Obj1> {
        if f.tgt != g.src {
            return Err(ill(format!("cannot compose {} after {}", g.name, f.name)));
        }
        let name = self
            .base
            .compose(&f.src, &f.tgt, &g.tgt, &g.name, &f.name)
            .ok_or_else(|| ill(format!("composite {}∘{} undefined", g.name, f.name)))?;
        Ok(Obj1 {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            name: name.clone(),
        })
    }

    pub fn eval_cell(&self, c: &Cell1Expr) -> Result<Obj1> {
        match c {
            Cell1Expr::Named { src, tgt, name } => {
                if !self.base.hom(src, tgt).objects().contains(name) {
                    return Err(ill(format!("{name} is not a 1-cell {src} -> {tgt}")));
                }
                Ok(Obj1 {
                    src: src.clone(),
                    tgt: tgt.clone(),
                    name: name.clone(),
                })
            }
            Cell1Expr::Unit(x) => Ok(Obj1 {
                src: x.clone(),
                tgt: x.clone(),
                name: self.base.unit(x).ok_or_else(|| ill(format!("no unit at {x}")))?.clone(),
            }),
            Cell1Expr::K(x) => Ok(Obj1 {
                src: x.clone(),
                tgt: self.t(x)?,
                name: self
                    .warping()?
                    .k
                    .get(x)
                    .ok_or_else(|| ill(format!("no K at {x}")))?
                    .clone(),
            }),
            Cell1Expr::Comp(g, f) => self.compose_obj(&self.eval_cell(g)?, &self.eval_cell(f)?),
            Cell1Expr::Ext { y, arg } => {
                let f = self.eval_cell(arg)?;
                let ty = self.t(y)?;
                if f.tgt != ty {
                    return Err(ill(format!("T{y}: argument {} does not land in T{y}", f.name)));
                }
                let functor = self
                    .warping()?
                    .ext
                    .get(&(f.src.clone(), y.clone()))
                    .ok_or_else(|| ill(format!("no ext functor ({},{y})", f.src)))?;
                let name = functor
                    .apply_obj(&f.name)
                    .ok_or_else(|| ill(format!("ext undefined at {}", f.name)))?;
                Ok(Obj1 {
                    src: self.t(&f.src)?,
                    tgt: ty,
                    name: name.clone(),
                })
            }
            Cell1Expr::Act(arg) => {
                let g = self.eval_cell(arg)?;
                let alg = self.algebra()?;
                if g.tgt != alg.object {
                    return Err(ill(format!("E: argument {} does not land in {}", g.name, alg.object)));
                }
                let functor = alg
                    .e_funcs
                    .get(&g.src)
                    .ok_or_else(|| ill(format!("no E functor at {}", g.src)))?;
                let name = functor
                    .apply_obj(&g.name)
                    .ok_or_else(|| ill(format!("E undefined at {}", g.name)))?;
                Ok(Obj1 {
                    src: self.t(&g.src)?,
                    tgt: g.tgt,
                    name: name.clone(),
                })
            }
        }
    }

    fn lookup(&self, what: &str, fam: &CellFamily, k: &[&str], src: &Obj1, tgt: &Obj1) -> Result<Mor2> {
        let name = fam
            .get(&key(k))
            .ok_or_else(|| ill(format!("{what} has no component at {k:?}")))?;
        self.given(src, tgt, name).map_err(|_| {
            ill(format!(
                "{what} component {name} at {k:?} is not an arrow {} -> {}",
                src.name, tgt.name
            ))
        })
    }

    fn given(&self, src: &Obj1, tgt: &Obj1, name: &str) -> Result<Mor2> {
        let c = self.base.hom(&src.src, &src.tgt);
        if src.src != tgt.src || src.tgt != tgt.tgt || !c.hom(&src.name, &tgt.name).contains(&name.to_string()) {
            return Err(ill(format!("{name} is not an arrow {} -> {}", src.name, tgt.name)));
        }
        Ok(Mor2 {
            src: src.src.clone(),
            tgt: src.tgt.clone(),
            arrow: Arrow::new(src.name.clone(), tgt.name.clone(), name),
        })
    }

    pub fn eval(&self, m: &SkewPastingExpr) -> Result<Mor2> {
        use build::*;
        use SkewPastingExpr as M;
        match m {
            M::Given { src, tgt, arrow } => {
                if !self.base.hom(src, tgt).contains(arrow) {
                    return Err(ill(format!("{arrow} is not in hom({src},{tgt})")));
                }
                Ok(Mor2 {
                    src: src.clone(),
                    tgt: tgt.clone(),
                    arrow: arrow.clone(),
                })
            }
            M::Id(c) => {
                let o = self.eval_cell(c)?;
                let a = self
                    .base
                    .hom(&o.src, &o.tgt)
                    .identity(&o.name)
                    .ok_or_else(|| ill(format!("no identity on {}", o.name)))?;
                Ok(Mor2 {
                    src: o.src,
                    tgt: o.tgt,
                    arrow: a,
                })
            }
            M::Assoc(h, g, f) => {
                let (ho, go, fo) = (self.eval_cell(h)?, self.eval_cell(g)?, self.eval_cell(f)?);
                let src = self.eval_cell(&comp(&comp(h, g), f))?;
                let tgt = self.eval_cell(&comp(h, &comp(g, f)))?;
                let k = [&fo.src, &fo.tgt, &go.tgt, &ho.tgt, &ho.name, &go.name, &fo.name].map(|s| s.as_str());
                self.lookup("associator", &self.base.assoc, &k, &src, &tgt)
            }
            M::LeftUnitor(f) => {
                let fo = self.eval_cell(f)?;
                let src = self.eval_cell(&comp(&unit(&fo.tgt), f))?;
                self.lookup(
                    "left unitor",
                    &self.base.left_unitor,
                    &[&fo.src, &fo.tgt, &fo.name],
                    &src,
                    &fo,
                )
            }
            M::RightUnitor(f) => {
                let fo = self.eval_cell(f)?;
                let tgt = self.eval_cell(&comp(f, &unit(&fo.src)))?;
                self.lookup(
                    "right unitor",
                    &self.base.right_unitor,
                    &[&fo.src, &fo.tgt, &fo.name],
                    &fo,
                    &tgt,
                )
            }
            M::Nu { g, f, z } => {
                let (go, fo) = (self.eval_cell(g)?, self.eval_cell(f)?);
                let y = go.src.clone();
                let tg = t(z, g);
                let src = self.eval_cell(&t(z, &comp(&tg, f)))?;
                let tgt = self.eval_cell(&comp(&tg, &t(&y, f)))?;
                let k = [&fo.src, &y, z, &go.name, &fo.name].map(|s| s.as_str());
                self.lookup("ν", &self.warping()?.nu, &k, &src, &tgt)
            }
            M::Nu0(x) => {
                let src = self.eval_cell(&t(x, &k(x)))?;
                let tx = self.t(x)?;
                let tgt = self.eval_cell(&unit(&tx))?;
                self.lookup("ν0", &self.warping()?.nu0, &[x], &src, &tgt)
            }
            M::Kappa { f, y } => {
                let fo = self.eval_cell(f)?;
                let tgt = self.eval_cell(&comp(&t(y, f), &k(&fo.src)))?;
                self.lookup("κ", &self.warping()?.kappa, &[&fo.src, y, &fo.name], &fo, &tgt)
            }
            M::AlgNu { g, f } => {
                let (go, fo) = (self.eval_cell(g)?, self.eval_cell(f)?);
                let y = go.src.clone();
                let eg = e(g);
                let src = self.eval_cell(&e(&comp(&eg, f)))?;
                let tgt = self.eval_cell(&comp(&eg, &t(&y, f)))?;
                let k = [&fo.src, &y, &go.name, &fo.name].map(|s| s.as_str());
                self.lookup("νE", &self.algebra()?.cell_nu, &k, &src, &tgt)
            }
            M::AlgKappa(g) => {
                let go = self.eval_cell(g)?;
                let tgt = self.eval_cell(&comp(&e(g), &k(&go.src)))?;
                self.lookup("κE", &self.algebra()?.cell_kappa, &[&go.src, &go.name], &go, &tgt)
            }
            M::Ext { y, arg } => {
                let a = self.eval(arg)?;
                let ty = self.t(y)?;
                if a.tgt != ty {
                    return Err(ill(format!("T{y} applied to an arrow of hom({},{})", a.src, a.tgt)));
                }
                let functor = self
                    .warping()?
                    .ext
                    .get(&(a.src.clone(), y.clone()))
                    .ok_or_else(|| ill(format!("no ext functor ({},{y})", a.src)))?;
                let img = functor
                    .apply(&a.arrow)
                    .ok_or_else(|| ill(format!("ext undefined at {}", a.arrow)))?;
                Ok(Mor2 {
                    src: self.t(&a.src)?,
                    tgt: ty,
                    arrow: img,
                })
            }
            M::Act(arg) => {
                let a = self.eval(arg)?;
                let alg = self.algebra()?;
                if a.tgt != alg.object {
                    return Err(ill(format!("E applied to an arrow of hom({},{})", a.src, a.tgt)));
                }
                let functor = alg
                    .e_funcs
                    .get(&a.src)
                    .ok_or_else(|| ill(format!("no E functor at {}", a.src)))?;
                let img = functor
                    .apply(&a.arrow)
                    .ok_or_else(|| ill(format!("E undefined at {}", a.arrow)))?;
                Ok(Mor2 {
                    src: self.t(&a.src)?,
                    tgt: a.tgt,
                    arrow: img,
                })
            }
            M::Hcomp(b, a) => {
                let (bo, ao) = (self.eval(b)?, self.eval(a)?);
                if ao.tgt != bo.src {
                    return Err(ill(format!("cannot whisker {b} after {a}")));
                }
                let img = self
                    .base
                    .hcompose(&ao.src, &ao.tgt, &bo.tgt, &bo.arrow, &ao.arrow)
                    .ok_or_else(|| ill(format!("horizontal composite {b} * {a} undefined")))?;
                Ok(Mor2 {
                    src: ao.src,
                    tgt: bo.tgt,
                    arrow: img,
                })
            }
            M::Then(list) => {
                let (first, rest) = list.split_first().ok_or_else(|| ill("empty composite".into()))?;
                let mut acc = self.eval(first)?;
                for m in rest {
                    let next = self.eval(m)?;
                    if (next.src.as_str(), next.tgt.as_str()) != (acc.src.as_str(), acc.tgt.as_str())
                        || next.arrow.src != acc.arrow.tgt
                    {
                        return Err(ill(format!(
                            "{m} expects {} but receives {}",
                            next.arrow.src, acc.arrow.tgt
                        )));
                    }
                    let c = self.base.hom(&acc.src, &acc.tgt);
                    acc.arrow = c
                        .compose(&next.arrow, &acc.arrow)
                        .ok_or_else(|| ill(format!("composite at {m} undefined")))?;
                }
                Ok(acc)
            }
        }
    }
}

/// Evaluates both sides and records a violation (or, if either side is ill
/// typed, a structural failure) when they differ.
pub(crate) fn check_eq(
    env: &SkewEnv,
    r: &mut crate::ValidationReport,
    rule: &str,
    at: &str,
    lhs: &SkewPastingExpr,
    rhs: &SkewPastingExpr,
) {
    match (env.eval(lhs), env.eval(rhs)) {
        (Ok(l), Ok(rr)) => {
            if l != rr {
                r.violation(
                    rule,
                    format!("{at}: {lhs} = {} but {rhs} = {}", l.arrow.name, rr.arrow.name),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => r.structural(format!("{rule} at {at}: {e}")),
    }
}
