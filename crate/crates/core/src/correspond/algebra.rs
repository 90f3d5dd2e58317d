use std::collections::BTreeMap;

use super::wreaths::warping_to_wreath;
use crate::fincore::{validate_functor, Arrow, Atom, FinCategory, FinFunction, FinFunctor, FinSet};
use crate::monadwarp::{mw_to_warping, mw_view, validate_mw, warping_env, MwMonad, Warping};
use crate::spaneng::{
    check_equation, compose_word, identity_span, restrict_star, star_function, Cell2, PathElem, Span, STAR,
};
use crate::{Error, Result, ValidationReport};

/// An algebra for a warping: a span `M: X → Y` with `m: MBA ⇒ MB`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WarpAlgebra {
    pub warping: Warping,
    pub y: FinSet,
    pub module: Span,
    pub act: Cell2,
}

/// Axioms of an algebra, as `(rule, lhs, rhs)` pasting equations.
pub const ALGEBRA_AXIOMS: [(&str, &str, &str); 2] = [
    ("axiom 1", "m(MpA)(mBA)", "(Mp)(mB)(MBt)"),
    ("axiom 2", "(Mp)(mB)(MBk)", "MB"),
];

pub fn validate_algebra(a: &WarpAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new("algebra");
    let Some(mut env) = warping_env(&a.warping, &mut r) else {
        return r;
    };
    if a.module.src() != a.warping.base.objects() || a.module.dst() != &a.y {
        r.structural("module span does not run from the base objects to Y");
        return r;
    }
    env.bind_span("M", &a.module);
    if let Err(e) = env.bind_cell("m", "MBA", "MB", &a.act) {
        r.structural(e.to_string());
        return r;
    }
    for (rule, lhs, rhs) in ALGEBRA_AXIOMS {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

impl WarpAlgebra {
    /// `A` acting on itself through `t`.
    pub fn self_action(w: &Warping) -> Self {
        WarpAlgebra {
            warping: w.clone(),
            y: w.base.objects().clone(),
            module: w.endo.clone(),
            act: w.t.clone(),
        }
    }

    /// Over the identity warping, any `M` with the identity action.
    pub fn trivial(w: &Warping, module: &Span) -> Result<Self> {
        let mb = compose_word(&[module, w.base.carrier()])?;
        Ok(WarpAlgebra {
            warping: w.clone(),
            y: module.dst().clone(),
            module: module.clone(),
            act: Cell2::identity(&mb),
        })
    }
}

/// An algebra at an object `a`, in hom-set form: maps
/// `E_z: B(z, a) → B(Tz, a)` for every object `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EFamily {
    pub base: MwMonad,
    pub object: Atom,
    pub e_maps: BTreeMap<Atom, FinFunction>,
}

impl EFamily {
    pub fn from_fn(base: &MwMonad, object: &str, e: impl Fn(&str, &str) -> Atom) -> Result<Self> {
        let c = &base.base;
        let mut e_maps = BTreeMap::new();
        for z in c.objects() {
            let f = FinFunction::from_fn(c.hom(z, object).clone(), c.hom(base.t(z), object).clone(), |g| e(z, g))
                .map_err(|err| Error::Malformed(format!("E at {z}: {err}")))?;
            e_maps.insert(z.clone(), f);
        }
        Ok(EFamily {
            base: base.clone(),
            object: object.into(),
            e_maps,
        })
    }

    pub fn e_at(&self, z: &str, g: &str) -> Option<&Atom> {
        self.e_maps.get(z)?.get(&g.to_string())
    }
}

/// `E(Eg ∘ f) = Eg ∘ Tf` and `g = Eg ∘ K`, numbered as the algebra axioms.
pub fn validate_e_family(e: &EFamily) -> ValidationReport {
    let mut r = ValidationReport::new("E-family");
    let m = &e.base;
    let base_report = validate_mw(m);
    if !base_report.is_valid() {
        r.structural(format!("mw-monad: {}", base_report.summary()));
        return r;
    }
    let c = &m.base;
    let a = e.object.as_str();
    if !c.objects().contains(&e.object) {
        r.structural(format!("{a} is not an object"));
        return r;
    }
    for z in c.objects() {
        match e.e_maps.get(z) {
            Some(f) if f.dom() == c.hom(z, a) && f.cod() == c.hom(m.t(z), a) => {}
            _ => r.structural(format!("E at {z} is missing or has the wrong frame")),
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let ee = |z: &str, g: &str| e.e_at(z, g).expect("checked").clone();
    for x in c.objects() {
        for y in c.objects() {
            let (tx, ty) = (m.t(x), m.t(y));
            for f in c.hom(x, ty) {
                for g in c.hom(y, a) {
                    let eg = ee(y, g);
                    let lhs = ee(x, c.compose_names(x, ty, a, &eg, f).expect("valid"));
                    let tf = m.ext_at(x, y, f).expect("valid");
                    let rhs = c.compose_names(tx, ty, a, &eg, tf).expect("valid");
                    if &lhs != rhs {
                        r.violation("axiom 1", format!("f={f}:{x}->{ty}, g={g}:{y}->{a}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    for y in c.objects() {
        let ky = m.k(y).expect("valid");
        for g in c.hom(y, a) {
            let back = c.compose_names(y, m.t(y), a, &ee(y, g), ky).expect("valid");
            if back != g {
                r.violation("axiom 2", format!("g={g}:{y}->{a}: Eg∘K_{y} = {back}"));
            }
        }
    }
    r
}

/// Name of the single object of `Y` in algebras built from an [`EFamily`].
pub const POINT: &str = "pt";

/// The algebra on `M = a*` with `m` given by `E`.
pub fn e_family_to_algebra(e: &EFamily) -> Result<WarpAlgebra> {
    let m = &e.base;
    let warping = mw_to_warping(m)?;
    let xs = m.base.objects().clone();
    let y = FinSet::singleton(POINT.to_string());
    let pick = FinFunction::from_fn(y.clone(), xs, |_| e.object.clone())?;
    let module = restrict_star(&pick);
    let mb = compose_word(&[&module, warping.base.carrier()])?;
    let mba = compose_word(&[&module, warping.base.carrier(), &warping.endo])?;
    let a = e.object.clone();
    let act = Cell2::from_fn(mba, mb, |_, _, el| {
        let (w, g) = (&el.pivots()[0], &el.atoms()[1]);
        PathElem::from_parts(vec![e.e_at(w, g)?.clone(), STAR.into()], vec![a.clone()]).ok()
    })?;
    Ok(WarpAlgebra {
        warping,
        y,
        module,
        act,
    })
}

/// Reads `E` off an algebra whose `Y` is a point and whose `M` is `a*`.
pub fn algebra_as_e_family(alg: &WarpAlgebra) -> Result<EFamily> {
    let base = mw_view(&alg.warping)?;
    if alg.y.len() != 1 {
        return Err(Error::Shape("Y is not a single object".into()));
    }
    let pick = star_function(&alg.module).ok_or_else(|| Error::Shape("M is not of the form a*".into()))?;
    let pt = &alg.y.elements()[0];
    let a = pick.apply(pt).clone();
    let trivial_endo = alg.warping.endo == identity_span(alg.warping.base.objects());
    let mut e_maps = BTreeMap::new();
    let c = &base.base;
    for z in c.objects() {
        let tz = base.t(z);
        let mut map = BTreeMap::new();
        for g in c.hom(z, &a) {
            let el = if trivial_endo {
                PathElem::from_parts(vec![g.clone(), STAR.into()], vec![a.clone()])?
            } else {
                PathElem::from_parts(vec![STAR.into(), g.clone(), STAR.into()], vec![z.clone(), a.clone()])?
            };
            let img = alg
                .act
                .apply(tz, pt, &el)
                .ok_or_else(|| Error::Shape(format!("action undefined at {el}")))?;
            map.insert(g.clone(), img.atoms()[0].clone());
        }
        let f = FinFunction::new(c.hom(z, &a).clone(), c.hom(tz, &a).clone(), map)
            .map_err(|err| Error::Shape(format!("E at {z}: {err}")))?;
        e_maps.insert(z.clone(), f);
    }
    Ok(EFamily {
        base,
        object: a,
        e_maps,
    })
}

/// A monad on a finite category in the usual sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalMonad {
    pub functor: FinFunctor,
    pub mu: BTreeMap<Atom, Atom>,
    pub eta: BTreeMap<Atom, Atom>,
}

impl ClassicalMonad {
    pub fn base(&self) -> &FinCategory {
        self.functor.dom()
    }

    pub fn t(&self, x: &str) -> &Atom {
        self.functor.apply_obj(x).expect("object")
    }

    pub fn map(&self, f: &Arrow) -> Arrow {
        self.functor.apply(f).expect("arrow")
    }
}

/// The monad of an mw-monad, read off its wreath: `T` on arrows from `d`,
/// `μ` from `q`, `η` from `j`.
pub fn classical_monad(m: &MwMonad) -> Result<ClassicalMonad> {
    let w = warping_to_wreath(&mw_to_warping(m)?)?;
    let c = &m.base;
    let head = |cell: &Cell2, x: &str, y: &str, el: PathElem| -> Option<Atom> {
        Some(cell.apply(x, y, &el)?.atoms()[0].clone())
    };
    let functor = FinFunctor::tabulate(
        c,
        c,
        |x| Some(m.t(x).clone()),
        |f| {
            let el = PathElem::from_parts(vec![STAR.into(), f.name.clone()], vec![f.src.clone()]).ok()?;
            head(&w.d, m.t(&f.src), &f.tgt, el)
        },
    )?;
    let mut mu = BTreeMap::new();
    let mut eta = BTreeMap::new();
    for y in c.objects() {
        let ty = m.t(y);
        let el = PathElem::from_parts(vec![STAR.into(), STAR.into()], vec![ty.clone()])?;
        let mu_y = head(&w.q, m.t(ty), y, el).ok_or_else(|| Error::Shape(format!("q undefined at {y}")))?;
        mu.insert(y.clone(), mu_y);
        let eta_y = head(&w.j, y, y, PathElem::empty()).ok_or_else(|| Error::Shape(format!("j undefined at {y}")))?;
        eta.insert(y.clone(), eta_y);
    }
    Ok(ClassicalMonad { functor, mu, eta })
}

fn arrow(c: &FinCategory, x: &str, y: &str, name: &str) -> Arrow {
    debug_assert!(c.hom(x, y).contains(&name.to_string()));
    Arrow::new(x, y, name)
}

/// Functoriality, naturality of `μ` and `η`, and the monad laws.
pub fn validate_classical_monad(cm: &ClassicalMonad) -> ValidationReport {
    let mut r = ValidationReport::new("monad");
    r.absorb("functor", validate_functor(&cm.functor));
    if !r.is_valid() {
        return r;
    }
    let c = cm.base();
    let t = |x: &str| cm.t(x).clone();
    let mu = |x: &str| arrow(c, &t(&t(x)), &t(x), &cm.mu[x]);
    let eta = |x: &str| arrow(c, x, &t(x), &cm.eta[x]);
    let comp = |g: &Arrow, f: &Arrow| c.compose(g, f).expect("composable");
    for f in c.arrows() {
        let tf = cm.map(&f);
        if comp(&tf, &eta(&f.src)) != comp(&eta(&f.tgt), &f) {
            r.violation("eta naturality", format!("at {f}"));
        }
        if comp(&tf, &mu(&f.src)) != comp(&mu(&f.tgt), &cm.map(&tf)) {
            r.violation("mu naturality", format!("at {f}"));
        }
    }
    for x in c.objects() {
        let one = c.identity(&t(x)).expect("identity");
        if comp(&mu(x), &cm.map(&mu(x))) != comp(&mu(x), &mu(&t(x))) {
            r.violation("associativity", format!("at {x}"));
        }
        if comp(&mu(x), &cm.map(&eta(x))) != one {
            r.violation("left unit", format!("at {x}"));
        }
        if comp(&mu(x), &eta(&t(x))) != one {
            r.violation("right unit", format!("at {x}"));
        }
    }
    r
}

/// An Eilenberg–Moore algebra `α: Ta → a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EmAlgebra {
    pub object: Atom,
    pub structure: Atom,
}

pub fn validate_em_algebra(cm: &ClassicalMonad, alg: &EmAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new("EM algebra");
    let c = cm.base();
    let a = alg.object.as_str();
    if !c.objects().contains(&alg.object) || !c.hom(cm.t(a), a).contains(&alg.structure) {
        r.structural(format!("{} is not an arrow T{a} -> {a}", alg.structure));
        return r;
    }
    let ta = cm.t(a).clone();
    let alpha = Arrow::new(ta.clone(), a, alg.structure.clone());
    let eta = Arrow::new(a, ta.clone(), cm.eta[a].clone());
    let mu = Arrow::new(cm.t(&ta).clone(), ta.clone(), cm.mu[a].clone());
    let comp = |g: &Arrow, f: &Arrow| c.compose(g, f).expect("composable");
    if comp(&alpha, &eta) != c.identity(a).expect("identity") {
        r.violation("unit", format!("α∘η_{a} ≠ 1"));
    }
    if comp(&alpha, &mu) != comp(&alpha, &cm.map(&alpha)) {
        r.violation("multiplication", format!("α∘μ_{a} ≠ α∘Tα"));
    }
    r
}

/// Every EM algebra structure on `a`.
pub fn em_algebras(cm: &ClassicalMonad, a: &str) -> Vec<EmAlgebra> {
    cm.base()
        .hom(cm.t(a), a)
        .iter()
        .map(|s| EmAlgebra {
            object: a.into(),
            structure: s.clone(),
        })
        .filter(|alg| validate_em_algebra(cm, alg).is_valid())
        .collect()
}

/// Structure map `E(1_a)`.
pub fn algebra_to_em_algebra(e: &EFamily) -> Result<EmAlgebra> {
    let r = validate_e_family(e);
    if !r.is_valid() {
        return Err(Error::invalid("E-family", &r));
    }
    let one = e.base.base.identity_name(&e.object).expect("valid").clone();
    Ok(EmAlgebra {
        object: e.object.clone(),
        structure: e.e_at(&e.object, &one).expect("valid").clone(),
    })
}

/// `E_z(g) = α ∘ Tg`, with `T` on arrows taken from `cm`.
pub fn em_algebra_to_e_family(m: &MwMonad, cm: &ClassicalMonad, alg: &EmAlgebra) -> Result<EFamily> {
    let r = validate_em_algebra(cm, alg);
    if !r.is_valid() {
        return Err(Error::invalid("EM algebra", &r));
    }
    let c = &m.base;
    let a = alg.object.as_str();
    let alpha = Arrow::new(cm.t(a).clone(), a, alg.structure.clone());
    EFamily::from_fn(m, a, |z, g| {
        let tg = cm.map(&Arrow::new(z, a, g));
        c.compose(&alpha, &tg).expect("composable").name
    })
}
