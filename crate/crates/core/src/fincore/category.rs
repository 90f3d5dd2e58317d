use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::set::{pair_tag, Atom, FinSet, EMPTY_ATOMS};
use crate::ValidationReport;

/// A morphism of a finite category, identified by its endpoints and name.
///
/// Names are only unique within a hom-set, so the endpoints are part of the
/// identity of an arrow.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub src: Atom,
    pub tgt: Atom,
    pub name: Atom,
}

impl Arrow {
    pub fn new(src: impl Into<Atom>, tgt: impl Into<Atom>, name: impl Into<Atom>) -> Self {
        Arrow {
            src: src.into(),
            tgt: tgt.into(),
            name: name.into(),
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self.name, self.src, self.tgt)
    }
}

type CompTable = BTreeMap<(Atom, Atom, Atom), BTreeMap<(Atom, Atom), Atom>>;

/// A finite category given by explicit tables.
///
/// `comp[(x, y, z)][(g, f)]` is `g ∘ f` for `f: x → y`, `g: y → z`. Every
/// ordered pair of objects has a hom entry, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinCategory {
    objects: FinSet,
    homs: BTreeMap<(Atom, Atom), FinSet>,
    comp: CompTable,
    ident: BTreeMap<Atom, Atom>,
}

impl FinCategory {
    /// Assembles a category from raw tables without checking any law.
    /// Hom entries and composition tables missing for a pair (triple) of
    /// objects are added empty and hom-sets are sorted, so equal categories
    /// have equal tables.
    pub fn from_parts(
        objects: FinSet,
        mut homs: BTreeMap<(Atom, Atom), FinSet>,
        mut comp: CompTable,
        ident: BTreeMap<Atom, Atom>,
    ) -> Self {
        for x in &objects {
            for y in &objects {
                let h = homs.entry((x.clone(), y.clone())).or_default();
                *h = h.sorted();
                for z in &objects {
                    comp.entry((x.clone(), y.clone(), z.clone())).or_default();
                }
            }
        }
        FinCategory {
            objects,
            homs,
            comp,
            ident,
        }
    }

    pub fn builder(objects: &[&str]) -> CategoryBuilder {
        CategoryBuilder {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            homs: BTreeMap::new(),
            comp: BTreeMap::new(),
            ident: BTreeMap::new(),
        }
    }

    /// Only identities, each named `1`.
    pub fn discrete(objects: &FinSet) -> Self {
        let names: Vec<&str> = objects.iter().map(|s| s.as_str()).collect();
        let mut b = FinCategory::builder(&names);
        for x in objects {
            b = b.identity(x, "1");
        }
        b.build()
    }

    /// One-object category of a monoid; `mul(g, f)` is `g ∘ f`.
    pub fn from_monoid(object: &str, elements: &[&str], unit: &str, mul: impl Fn(&str, &str) -> String) -> Self {
        let mut b = FinCategory::builder(&[object]);
        for e in elements {
            b = b.arrow(object, object, e);
        }
        b = b.identity(object, unit);
        for g in elements {
            for f in elements {
                b = b.compose(object, object, object, g, f, &mul(g, f));
            }
        }
        b.build()
    }

    /// Thin category of a preorder; identities are named `1`, other arrows `<`.
    pub fn from_preorder(objects: &[&str], leq: impl Fn(&str, &str) -> bool) -> Self {
        let name = |a: &str, b: &str| if a == b { "1" } else { "<" };
        let mut b = FinCategory::builder(objects);
        for x in objects {
            for y in objects {
                if x == y {
                    b = b.identity(x, "1");
                } else if leq(x, y) {
                    b = b.arrow(x, y, "<");
                }
            }
        }
        for x in objects {
            for y in objects {
                for z in objects {
                    if leq(x, y) && leq(y, z) {
                        b = b.compose(x, y, z, name(y, z), name(x, y), name(x, z));
                    }
                }
            }
        }
        b.build()
    }

    pub fn objects(&self) -> &FinSet {
        &self.objects
    }

    pub fn homs(&self) -> &BTreeMap<(Atom, Atom), FinSet> {
        &self.homs
    }

    pub fn comp_table(&self) -> &CompTable {
        &self.comp
    }

    pub fn identities(&self) -> &BTreeMap<Atom, Atom> {
        &self.ident
    }

    pub fn hom(&self, x: &str, y: &str) -> &FinSet {
        self.homs.get(&(x.to_string(), y.to_string())).unwrap_or(&EMPTY_ATOMS)
    }

    pub fn identity_name(&self, x: &str) -> Option<&Atom> {
        self.ident.get(x)
    }

    pub fn identity(&self, x: &str) -> Option<Arrow> {
        self.ident.get(x).map(|n| Arrow::new(x, x, n.clone()))
    }

    pub fn compose_names(&self, x: &str, y: &str, z: &str, g: &str, f: &str) -> Option<&Atom> {
        self.comp
            .get(&(x.to_string(), y.to_string(), z.to_string()))?
            .get(&(g.to_string(), f.to_string()))
    }

    /// `g ∘ f`, or `None` if the arrows do not meet or the table has no entry.
    pub fn compose(&self, g: &Arrow, f: &Arrow) -> Option<Arrow> {
        if f.tgt != g.src {
            return None;
        }
        self.compose_names(&f.src, &f.tgt, &g.tgt, &g.name, &f.name)
            .map(|h| Arrow::new(f.src.clone(), g.tgt.clone(), h.clone()))
    }

    pub fn contains(&self, a: &Arrow) -> bool {
        self.hom(&a.src, &a.tgt).contains(&a.name)
    }

    pub fn hom_arrows<'a>(&'a self, x: &'a str, y: &'a str) -> impl Iterator<Item = Arrow> + 'a {
        self.hom(x, y).iter().map(move |n| Arrow::new(x, y, n.clone()))
    }

    /// All arrows, grouped by hom in object order.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for x in &self.objects {
            for y in &self.objects {
                out.extend(self.hom_arrows(x, y));
            }
        }
        out
    }

    pub fn arrow_count(&self) -> usize {
        self.homs.values().map(FinSet::len).sum()
    }

    /// Overwrites one composite; used for mutation fixtures.
    pub fn with_composite(&self, x: &str, y: &str, z: &str, g: &str, f: &str, h: &str) -> Self {
        let mut c = self.clone();
        c.comp
            .entry((x.into(), y.into(), z.into()))
            .or_default()
            .insert((g.into(), f.into()), h.into());
        c
    }

    pub fn with_identity(&self, x: &str, name: &str) -> Self {
        let mut c = self.clone();
        c.ident.insert(x.into(), name.into());
        c
    }
}

/// Incremental construction of code-level fixtures.
///
/// `build` fills in unit-law composites (`1 ∘ f = f`, `f ∘ 1 = f`) that were
/// not given explicitly.
pub struct CategoryBuilder {
    objects: Vec<Atom>,
    homs: BTreeMap<(Atom, Atom), Vec<Atom>>,
    comp: CompTable,
    ident: BTreeMap<Atom, Atom>,
}

impl CategoryBuilder {
    pub fn arrow(mut self, src: &str, tgt: &str, name: &str) -> Self {
        let hom = self.homs.entry((src.into(), tgt.into())).or_default();
        if !hom.iter().any(|n| n == name) {
            hom.push(name.into());
        }
        self
    }

    pub fn identity(mut self, x: &str, name: &str) -> Self {
        self = self.arrow(x, x, name);
        self.ident.insert(x.into(), name.into());
        self
    }

    pub fn compose(mut self, x: &str, y: &str, z: &str, g: &str, f: &str, h: &str) -> Self {
        self.comp
            .entry((x.into(), y.into(), z.into()))
            .or_default()
            .insert((g.into(), f.into()), h.into());
        self
    }

    pub fn build(mut self) -> FinCategory {
        let homs = self.homs.clone();
        for ((x, y), fs) in &homs {
            for f in fs {
                if let Some(iy) = self.ident.get(y).cloned() {
                    self.comp
                        .entry((x.clone(), y.clone(), y.clone()))
                        .or_default()
                        .entry((iy, f.clone()))
                        .or_insert_with(|| f.clone());
                }
                if let Some(ix) = self.ident.get(x).cloned() {
                    self.comp
                        .entry((x.clone(), x.clone(), y.clone()))
                        .or_default()
                        .entry((f.clone(), ix))
                        .or_insert_with(|| f.clone());
                }
            }
        }
        let objects = FinSet::new(self.objects).expect("distinct objects");
        let homs = self
            .homs
            .into_iter()
            .map(|(k, v)| (k, FinSet::new(v).expect("distinct arrows")))
            .collect();
        FinCategory::from_parts(objects, homs, self.comp, self.ident)
    }
}

/// Checks totality of the tables, then the unit and associativity laws.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut r = ValidationReport::new("category");
    let obs = c.objects();
    for (x, y) in c.homs().keys() {
        if !obs.contains(x) || !obs.contains(y) {
            r.structural(format!("hom ({x},{y}) between unknown objects"));
        }
    }
    for x in obs {
        match c.identity_name(x) {
            None => r.structural(format!("no identity at {x}")),
            Some(i) if !c.hom(x, x).contains(i) => r.structural(format!("identity {i} at {x} is not in hom({x},{x})")),
            _ => {}
        }
    }
    for x in obs {
        for y in obs {
            for z in obs {
                for f in c.hom(x, y) {
                    for g in c.hom(y, z) {
                        match c.compose_names(x, y, z, g, f) {
                            None => r.structural(format!("composite {g}∘{f} ({x}->{y}->{z}) undefined")),
                            Some(h) if !c.hom(x, z).contains(h) => {
                                r.structural(format!("composite {g}∘{f} = {h} is not in hom({x},{z})"))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    for ((x, y, z), table) in c.comp_table() {
        for (g, f) in table.keys() {
            if !c.hom(x, y).contains(f) || !c.hom(y, z).contains(g) {
                r.structural(format!("composition entry {g}∘{f} ({x}->{y}->{z}) for unknown arrows"));
            }
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }

    for f in c.arrows() {
        let idy = c.identity(&f.tgt).expect("checked");
        let idx = c.identity(&f.src).expect("checked");
        let left = c.compose(&idy, &f).expect("checked");
        if left != f {
            r.violation(
                "left_unit",
                format!(
                    "({}, {}): {}∘{} = {}, expected {}",
                    idy.name, f.name, idy.name, f.name, left.name, f.name
                ),
            );
        }
        let right = c.compose(&f, &idx).expect("checked");
        if right != f {
            r.violation(
                "right_unit",
                format!(
                    "({}, {}): {}∘{} = {}, expected {}",
                    f.name, idx.name, f.name, idx.name, right.name, f.name
                ),
            );
        }
    }
    for f in c.arrows() {
        for y2 in obs {
            for g in c.hom_arrows(&f.tgt, y2) {
                for z2 in obs {
                    for h in c.hom_arrows(&g.tgt, z2) {
                        let hg_f = c.compose(&c.compose(&h, &g).expect("checked"), &f).expect("checked");
                        let h_gf = c.compose(&h, &c.compose(&g, &f).expect("checked")).expect("checked");
                        if hg_f != h_gf {
                            r.violation(
                                "associativity",
                                format!(
                                    "(h,g,f) = ({}, {}, {}): (h∘g)∘f = {} but h∘(g∘f) = {}",
                                    h, g, f, hg_f.name, h_gf.name
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    r
}

/// Product category; objects and arrows are tagged pairs.
pub fn product(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let mut objects = Vec::new();
    for a in c.objects() {
        for b in d.objects() {
            objects.push(pair_tag(a, b));
        }
    }
    let mut homs = BTreeMap::new();
    let mut comp: CompTable = BTreeMap::new();
    let mut ident = BTreeMap::new();
    for a in c.objects() {
        for b in d.objects() {
            if let (Some(i), Some(j)) = (c.identity_name(a), d.identity_name(b)) {
                ident.insert(pair_tag(a, b), pair_tag(i, j));
            }
            for a2 in c.objects() {
                for b2 in d.objects() {
                    let names: Vec<Atom> = c
                        .hom(a, a2)
                        .iter()
                        .flat_map(|f| d.hom(b, b2).iter().map(move |g| pair_tag(f, g)))
                        .collect();
                    homs.insert((pair_tag(a, b), pair_tag(a2, b2)), FinSet::from_distinct(names));
                    for a3 in c.objects() {
                        for b3 in d.objects() {
                            let mut table = BTreeMap::new();
                            for f in c.hom(a, a2) {
                                for f2 in c.hom(a2, a3) {
                                    for g in d.hom(b, b2) {
                                        for g2 in d.hom(b2, b3) {
                                            if let (Some(h1), Some(h2)) =
                                                (c.compose_names(a, a2, a3, f2, f), d.compose_names(b, b2, b3, g2, g))
                                            {
                                                table.insert((pair_tag(f2, g2), pair_tag(f, g)), pair_tag(h1, h2));
                                            }
                                        }
                                    }
                                }
                            }
                            if !table.is_empty() {
                                comp.insert((pair_tag(a, b), pair_tag(a2, b2), pair_tag(a3, b3)), table);
                            }
                        }
                    }
                }
            }
        }
    }
    FinCategory::from_parts(FinSet::from_distinct(objects), homs, comp, ident)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idempotent() -> FinCategory {
        FinCategory::from_monoid(
            "*",
            &["1", "s"],
            "1",
            |g, f| if g == "1" { f.into() } else { "s".into() },
        )
    }

    #[test]
    fn discrete_is_valid() {
        assert!(validate_category(&FinCategory::discrete(&FinSet::of(&["0", "1"]))).is_valid());
    }

    #[test]
    fn idempotent_monoid_is_valid() {
        let c = idempotent();
        // all 8 associativity triples, checked directly against the table
        let mul = |g: &str, f: &str| c.compose_names("*", "*", "*", g, f).unwrap().clone();
        for h in ["1", "s"] {
            for g in ["1", "s"] {
                for f in ["1", "s"] {
                    assert_eq!(mul(&mul(h, g), f), mul(h, &mul(g, f)));
                }
            }
        }
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn broken_unit_gives_witness() {
        let c = idempotent().with_composite("*", "*", "*", "s", "1", "1");
        let r = validate_category(&c);
        assert!(r.is_structurally_sound());
        assert_eq!(r.failed_rules()[0], "right_unit");
        assert!(r.first_witness("right_unit").unwrap().starts_with("(s, 1)"));
    }

    #[test]
    fn missing_composite_is_structural() {
        let mut c = idempotent();
        c.comp
            .get_mut(&("*".into(), "*".into(), "*".into()))
            .unwrap()
            .remove(&("s".into(), "s".into()));
        let r = validate_category(&c);
        assert!(!r.is_structurally_sound());
    }

    #[test]
    fn product_is_valid() {
        let arrow = FinCategory::from_preorder(&["0", "1"], |a, b| a <= b);
        let p = product(&arrow, &idempotent());
        assert_eq!(p.objects().len(), 2);
        assert_eq!(p.arrow_count(), 3 * 2);
        assert!(validate_category(&p).is_valid());
    }

    #[test]
    fn validation_is_pure() {
        let c = idempotent().with_composite("*", "*", "*", "s", "s", "1");
        assert_eq!(validate_category(&c), validate_category(&c));
    }
}
