use std::collections::BTreeMap;

use super::category::{Arrow, FinCategory};
use super::function::FinFunction;
use super::set::Atom;
use crate::{Error, Result, ValidationReport};

/// A functor between finite categories, as an object map plus one function
/// per hom-set `hom(x, y) → hom(Fx, Fy)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFunctor {
    dom: FinCategory,
    cod: FinCategory,
    obj_map: FinFunction,
    mor_map: BTreeMap<(Atom, Atom), FinFunction>,
}

impl FinFunctor {
    /// Raw tables, no checks.
    pub fn from_parts(
        dom: FinCategory,
        cod: FinCategory,
        obj_map: FinFunction,
        mor_map: BTreeMap<(Atom, Atom), FinFunction>,
    ) -> Self {
        FinFunctor {
            dom,
            cod,
            obj_map,
            mor_map,
        }
    }

    /// Tabulates a functor from closures. Fails if an image falls outside
    /// the codomain; functor laws are left to [`validate_functor`].
    pub fn tabulate(
        dom: &FinCategory,
        cod: &FinCategory,
        obj: impl Fn(&str) -> Option<Atom>,
        arr: impl Fn(&Arrow) -> Option<Atom>,
    ) -> Result<Self> {
        let mut obj_table = BTreeMap::new();
        for x in dom.objects() {
            let fx = obj(x).ok_or_else(|| Error::Malformed(format!("object map undefined at {x}")))?;
            obj_table.insert(x.clone(), fx);
        }
        let obj_map = FinFunction::new(dom.objects().clone(), cod.objects().clone(), obj_table)?;
        let mut mor_map = BTreeMap::new();
        for x in dom.objects() {
            for y in dom.objects() {
                let (fx, fy) = (obj_map.apply(x), obj_map.apply(y));
                let mut table = BTreeMap::new();
                for a in dom.hom_arrows(x, y) {
                    let fa = arr(&a).ok_or_else(|| Error::Malformed(format!("arrow map undefined at {a}")))?;
                    table.insert(a.name.clone(), fa);
                }
                let f = FinFunction::new(dom.hom(x, y).clone(), cod.hom(fx, fy).clone(), table)
                    .map_err(|e| Error::Malformed(format!("hom ({x},{y}): {e}")))?;
                mor_map.insert((x.clone(), y.clone()), f);
            }
        }
        Ok(FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            obj_map,
            mor_map,
        })
    }

    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor::tabulate(c, c, |x| Some(x.to_string()), |a| Some(a.name.clone())).expect("identity")
    }

    /// Constant functor at `object`, every arrow sent to its identity.
    pub fn constant(dom: &FinCategory, cod: &FinCategory, object: &str) -> Result<Self> {
        let id = cod
            .identity_name(object)
            .ok_or_else(|| Error::Malformed(format!("no identity at {object}")))?
            .clone();
        FinFunctor::tabulate(dom, cod, |_| Some(object.to_string()), |_| Some(id.clone()))
    }

    pub fn dom(&self) -> &FinCategory {
        &self.dom
    }

    pub fn cod(&self) -> &FinCategory {
        &self.cod
    }

    pub fn obj_map(&self) -> &FinFunction {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &BTreeMap<(Atom, Atom), FinFunction> {
        &self.mor_map
    }

    pub fn apply_obj(&self, x: &str) -> Option<&Atom> {
        self.obj_map.get(&x.to_string())
    }

    pub fn apply(&self, a: &Arrow) -> Option<Arrow> {
        let fx = self.apply_obj(&a.src)?;
        let fy = self.apply_obj(&a.tgt)?;
        let name = self.mor_map.get(&(a.src.clone(), a.tgt.clone()))?.get(&a.name)?;
        Some(Arrow::new(fx.clone(), fy.clone(), name.clone()))
    }

    /// Replaces the image of one arrow; used for mutation fixtures.
    pub fn with_arrow_image(&self, a: &Arrow, image: &str) -> Self {
        let mut f = self.clone();
        if let Some(m) = f.mor_map.get_mut(&(a.src.clone(), a.tgt.clone())) {
            if let Ok(m2) = m.with_value(&a.name, image.to_string()) {
                *m = m2;
            }
        }
        f
    }
}

pub fn validate_functor(f: &FinFunctor) -> ValidationReport {
    let mut r = ValidationReport::new("functor");
    let (c, d) = (f.dom(), f.cod());
    if f.obj_map.dom() != c.objects() || f.obj_map.cod() != d.objects() {
        r.structural("object map frame differs from the categories' object sets");
        return r;
    }
    for x in c.objects() {
        for y in c.objects() {
            let (fx, fy) = (f.obj_map.apply(x), f.obj_map.apply(y));
            match f.mor_map.get(&(x.clone(), y.clone())) {
                None => r.structural(format!("no arrow map on hom({x},{y})")),
                Some(m) if m.dom() != c.hom(x, y) || m.cod() != d.hom(fx, fy) => {
                    r.structural(format!("arrow map on hom({x},{y}) does not land in hom({fx},{fy})"))
                }
                _ => {}
            }
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    for x in c.objects() {
        let (Some(id), Some(fid)) = (c.identity(x), d.identity(f.obj_map.apply(x))) else {
            r.structural(format!("missing identity at {x}"));
            continue;
        };
        let img = f.apply(&id).expect("total");
        if img != fid {
            r.violation("identity", format!("F({id}) = {} but 1 = {}", img.name, fid.name));
        }
    }
    for a in c.arrows() {
        for z in c.objects() {
            for b in c.hom_arrows(&a.tgt, z) {
                let Some(ba) = c.compose(&b, &a) else { continue };
                let lhs = f.apply(&ba).expect("total");
                let Some(rhs) = d.compose(&f.apply(&b).expect("total"), &f.apply(&a).expect("total")) else {
                    r.structural(format!("codomain composite F({})∘F({}) undefined", b.name, a.name));
                    continue;
                };
                if lhs != rhs {
                    r.violation(
                        "composition",
                        format!("(g,f) = ({b}, {a}): F(g∘f) = {} but F(g)∘F(f) = {}", lhs.name, rhs.name),
                    );
                }
            }
        }
    }
    r
}

/// A natural transformation `F ⇒ G`; `components[x] ∈ hom(Fx, Gx)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinNatTrans {
    pub dom: FinFunctor,
    pub cod: FinFunctor,
    pub components: BTreeMap<Atom, Atom>,
}

pub fn validate_nat_trans(n: &FinNatTrans) -> ValidationReport {
    let mut r = ValidationReport::new("natural transformation");
    let (f, g) = (&n.dom, &n.cod);
    if f.dom() != g.dom() || f.cod() != g.cod() {
        r.structural("functors are not parallel");
        return r;
    }
    let (c, d) = (f.dom(), f.cod());
    for x in c.objects() {
        let (fx, gx) = (f.apply_obj(x), g.apply_obj(x));
        let (Some(fx), Some(gx)) = (fx, gx) else {
            r.structural(format!("object map undefined at {x}"));
            continue;
        };
        match n.components.get(x) {
            None => r.structural(format!("no component at {x}")),
            Some(a) if !d.hom(fx, gx).contains(a) => {
                r.structural(format!("component {a} at {x} is not in hom({fx},{gx})"))
            }
            _ => {}
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let comp = |x: &str| {
        Arrow::new(
            f.apply_obj(x).unwrap().clone(),
            g.apply_obj(x).unwrap().clone(),
            n.components[x].clone(),
        )
    };
    for a in c.arrows() {
        let (Some(fa), Some(ga)) = (f.apply(&a), g.apply(&a)) else {
            r.structural(format!("functor undefined at {a}"));
            continue;
        };
        let lhs = d.compose(&ga, &comp(&a.src));
        let rhs = d.compose(&comp(&a.tgt), &fa);
        match (lhs, rhs) {
            (Some(l), Some(rh)) if l != rh => r.violation(
                "naturality",
                format!(
                    "square at {a}: G(f)∘η_{} = {} but η_{}∘F(f) = {}",
                    a.src, l.name, a.tgt, rh.name
                ),
            ),
            (Some(_), Some(_)) => {}
            _ => r.structural(format!("naturality square at {a} has an undefined composite")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincore::validate_category;

    fn parallel_pair() -> FinCategory {
        FinCategory::builder(&["a", "b"])
            .identity("a", "1")
            .identity("b", "1")
            .arrow("a", "b", "u")
            .arrow("a", "b", "v")
            .build()
    }

    fn arrow_cat() -> FinCategory {
        FinCategory::from_preorder(&["0", "1"], |x, y| x <= y)
    }

    fn pick(image: &'static str) -> FinFunctor {
        FinFunctor::tabulate(
            &arrow_cat(),
            &parallel_pair(),
            |x| Some(if x == "0" { "a" } else { "b" }.to_string()),
            |a| Some(if a.src == a.tgt { "1" } else { image }.to_string()),
        )
        .unwrap()
    }

    #[test]
    fn identity_and_constant_functors() {
        let c = parallel_pair();
        assert!(validate_category(&c).is_valid());
        assert!(validate_functor(&FinFunctor::identity(&c)).is_valid());
        let k = FinFunctor::constant(&c, &arrow_cat(), "0").unwrap();
        assert!(validate_functor(&k).is_valid());
    }

    #[test]
    fn broken_functor() {
        let f = FinFunctor::identity(&parallel_pair());
        let bad = f.with_arrow_image(&Arrow::new("a", "a", "1"), "1");
        assert!(validate_functor(&bad).is_valid());
        let m = FinCategory::from_monoid(
            "*",
            &["1", "s"],
            "1",
            |g, f| if g == f { "1".into() } else { "s".into() },
        );
        let bad = FinFunctor::identity(&m).with_arrow_image(&Arrow::new("*", "*", "1"), "s");
        let r = validate_functor(&bad);
        assert_eq!(r.failed_rules()[0], "identity");
    }

    #[test]
    fn naturality_search() {
        // identity components from pick(u) to pick(g) for each g; only g = u is natural
        let mut natural = Vec::new();
        for g in ["u", "v"] {
            let n = FinNatTrans {
                dom: pick("u"),
                cod: pick(g),
                components: [("0".to_string(), "1".to_string()), ("1".to_string(), "1".to_string())].into(),
            };
            let r = validate_nat_trans(&n);
            assert!(r.is_structurally_sound());
            if r.is_valid() {
                natural.push(g);
            } else {
                assert!(r.first_witness("naturality").unwrap().contains("<:0->1"));
            }
        }
        assert_eq!(natural, vec!["u"]);
    }

    #[test]
    fn misplaced_component_is_structural() {
        let n = FinNatTrans {
            dom: pick("u"),
            cod: pick("u"),
            components: [("0".to_string(), "u".to_string()), ("1".to_string(), "1".to_string())].into(),
        };
        assert!(!validate_nat_trans(&n).is_structurally_sound());
    }
}
