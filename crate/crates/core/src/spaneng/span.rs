use std::collections::BTreeMap;
use std::fmt;

use crate::fincore::{Atom, FinFunction, FinSet};
use crate::{Error, Result};

/// One element of a composite span, flattened.
///
/// `atoms` lists the chosen entry elements in application order (the factor
/// applied first comes first, the leftmost factor of the word comes last);
/// `pivots[i]` is the intermediate object between `atoms[i]` and
/// `atoms[i + 1]`. Identity spans contribute no atom and no pivot, which is
/// what makes horizontal composition strictly associative and unital.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathElem {
    atoms: Vec<Atom>,
    pivots: Vec<Atom>,
}

impl PathElem {
    pub fn empty() -> Self {
        PathElem::default()
    }

    pub fn atom(a: impl Into<Atom>) -> Self {
        PathElem {
            atoms: vec![a.into()],
            pivots: Vec::new(),
        }
    }

    /// Builds a path from atoms and the pivots between them.
    pub fn from_parts(atoms: Vec<Atom>, pivots: Vec<Atom>) -> Result<Self> {
        if atoms.len().saturating_sub(1) != pivots.len() {
            return Err(Error::Malformed(format!(
                "path with {} atoms needs {} pivots, got {}",
                atoms.len(),
                atoms.len().saturating_sub(1),
                pivots.len()
            )));
        }
        Ok(PathElem { atoms, pivots })
    }

    pub fn arity(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn pivots(&self) -> &[Atom] {
        &self.pivots
    }

    /// `first` followed by `then`, meeting at `pivot`; empty sides are elided.
    pub fn join(first: &PathElem, pivot: &str, then: &PathElem) -> PathElem {
        if first.atoms.is_empty() {
            return then.clone();
        }
        if then.atoms.is_empty() {
            return first.clone();
        }
        let mut atoms = first.atoms.clone();
        atoms.extend(then.atoms.iter().cloned());
        let mut pivots = first.pivots.clone();
        pivots.push(pivot.to_string());
        pivots.extend(then.pivots.iter().cloned());
        PathElem { atoms, pivots }
    }

    /// The object reached after the first `k` atoms of a path living in entry `(x, y)`.
    pub fn object_after<'a>(&'a self, k: usize, x: &'a str, y: &'a str) -> &'a str {
        if k == 0 {
            x
        } else if k == self.atoms.len() {
            y
        } else {
            &self.pivots[k - 1]
        }
    }

    /// The sub-path of `len` atoms starting at atom `start`.
    pub fn slice(&self, start: usize, len: usize) -> PathElem {
        if len == 0 {
            return PathElem::empty();
        }
        PathElem {
            atoms: self.atoms[start..start + len].to_vec(),
            pivots: self.pivots[start..start + len - 1].to_vec(),
        }
    }

    /// Renders as `a|p|b|q|c`; the empty path renders as `()`.
    pub fn render(&self) -> String {
        if self.atoms.is_empty() {
            return "()".into();
        }
        let mut s = self.atoms[0].clone();
        for (p, a) in self.pivots.iter().zip(&self.atoms[1..]) {
            s.push('|');
            s.push_str(p);
            s.push('|');
            s.push_str(a);
        }
        s
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "()" {
            return Ok(PathElem::empty());
        }
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len().is_multiple_of(2) || parts.iter().any(|p| p.is_empty()) {
            return Err(Error::Malformed(format!("bad path element {s:?}")));
        }
        let atoms = parts.iter().step_by(2).map(|p| p.to_string()).collect();
        let pivots = parts.iter().skip(1).step_by(2).map(|p| p.to_string()).collect();
        Ok(PathElem { atoms, pivots })
    }
}

impl fmt::Display for PathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A span `X → Y` of finite sets: one entry set per pair `(x, y)`.
///
/// Every element of a span has the same arity (number of atoms): basic spans
/// have arity 1, identities arity 0, and composites add arities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    src: FinSet,
    dst: FinSet,
    arity: usize,
    entries: BTreeMap<(Atom, Atom), FinSet<PathElem>>,
}

static EMPTY_ENTRY: FinSet<PathElem> = FinSet::<PathElem>::EMPTY;

impl Span {
    /// A basic span whose entries are sets of atoms. Missing pairs are empty.
    pub fn basic(src: FinSet, dst: FinSet, entries: BTreeMap<(Atom, Atom), Vec<Atom>>) -> Result<Self> {
        let entries = entries
            .into_iter()
            .map(|(k, v)| Ok((k, FinSet::new(v.into_iter().map(PathElem::atom).collect())?)))
            .collect::<Result<_>>()?;
        Span::from_entries(src, dst, 1, entries)
    }

    /// Assembles a span of the given arity, checking frames and arities.
    /// Entries are stored sorted, so equal spans compare equal however built.
    pub fn from_entries(
        src: FinSet,
        dst: FinSet,
        arity: usize,
        mut entries: BTreeMap<(Atom, Atom), FinSet<PathElem>>,
    ) -> Result<Self> {
        for (x, y) in entries.keys() {
            if !src.contains(x) || !dst.contains(y) {
                return Err(Error::Malformed(format!("span entry ({x},{y}) outside its frame")));
            }
        }
        for ((x, y), set) in &entries {
            if let Some(e) = set.iter().find(|e| e.arity() != arity) {
                return Err(Error::Malformed(format!(
                    "element {e} of entry ({x},{y}) has arity {} but the span has arity {arity}",
                    e.arity()
                )));
            }
        }
        for x in &src {
            for y in &dst {
                entries.entry((x.clone(), y.clone())).or_default();
            }
        }
        for set in entries.values_mut() {
            *set = set.sorted();
        }
        Ok(Span {
            src,
            dst,
            arity,
            entries,
        })
    }

    pub fn src(&self) -> &FinSet {
        &self.src
    }

    pub fn dst(&self) -> &FinSet {
        &self.dst
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &BTreeMap<(Atom, Atom), FinSet<PathElem>> {
        &self.entries
    }

    pub fn entry(&self, x: &str, y: &str) -> &FinSet<PathElem> {
        self.entries
            .get(&(x.to_string(), y.to_string()))
            .unwrap_or(&EMPTY_ENTRY)
    }

    /// Total number of elements over all entries.
    pub fn size(&self) -> usize {
        self.entries.values().map(FinSet::len).sum()
    }

    /// Entry cardinalities, for comparisons up to bijection.
    pub fn cardinalities(&self) -> BTreeMap<(Atom, Atom), usize> {
        self.entries.iter().map(|(k, v)| (k.clone(), v.len())).collect()
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "span (arity {})", self.arity)?;
        for ((x, y), set) in &self.entries {
            let els: Vec<String> = set.iter().map(PathElem::render).collect();
            writeln!(f, "  ({x},{y}): {{{}}}", els.join(", "))?;
        }
        Ok(())
    }
}

/// Identity span on `x`: the empty path on the diagonal, empty elsewhere.
pub fn identity_span(x: &FinSet) -> Span {
    let entries = x
        .iter()
        .map(|a| ((a.clone(), a.clone()), FinSet::singleton(PathElem::empty())))
        .collect();
    Span::from_entries(x.clone(), x.clone(), 0, entries).expect("identity frame")
}

/// Atom carried by the single element of every non-empty entry of `F*`.
pub const STAR: &str = "*";

/// The span `F*` of a function `F: D → C`, running from `C` to `D`, whose
/// entry `(c, d)` is a singleton exactly when `F d = c`.
///
/// Pre-composition reindexes: `(F* M)(z, d) = M(z, F d)`.
pub fn restrict_star(f: &FinFunction) -> Span {
    let mut entries = BTreeMap::new();
    for d in f.dom() {
        entries.insert((f.apply(d).clone(), d.clone()), FinSet::singleton(PathElem::atom(STAR)));
    }
    Span::from_entries(f.cod().clone(), f.dom().clone(), 1, entries).expect("star frame")
}

/// Reads back the function of an `F*`-shaped span, if it has that shape.
pub fn star_function(s: &Span) -> Option<FinFunction> {
    if s.arity() != 1 {
        return None;
    }
    let mut map = BTreeMap::new();
    for d in s.dst() {
        let mut hits = s.src().iter().filter(|c| !s.entry(c, d).is_empty());
        let c = hits.next()?;
        if hits.next().is_some() || s.entry(c, d).elements() != [PathElem::atom(STAR)] {
            return None;
        }
        map.insert(d.clone(), c.clone());
    }
    let f = FinFunction::new(s.dst().clone(), s.src().clone(), map).ok()?;
    (restrict_star(&f) == *s).then_some(f)
}

/// Matrix composite `m n` (apply `n` first): entry `(x, y)` is the disjoint
/// union over `z` of `m(z, y) × n(x, z)`, as flattened paths.
pub fn compose_spans(m: &Span, n: &Span) -> Result<Span> {
    if n.dst != m.src {
        return Err(Error::Frame(format!(
            "cannot compose: inner target {:?} differs from outer source {:?}",
            n.dst.elements(),
            m.src.elements()
        )));
    }
    let mut entries = BTreeMap::new();
    for x in &n.src {
        for y in &m.dst {
            let mut elems = Vec::new();
            for z in &n.dst {
                for a in n.entry(x, z) {
                    for b in m.entry(z, y) {
                        elems.push(PathElem::join(a, z, b));
                    }
                }
            }
            elems.sort();
            entries.insert((x.clone(), y.clone()), FinSet::from_distinct(elems));
        }
    }
    Ok(Span {
        src: n.src.clone(),
        dst: m.dst.clone(),
        arity: m.arity + n.arity,
        entries,
    })
}

/// Composite of a word `[W1, …, Wn]` = `W1 ⋯ Wn` (`Wn` applied first).
pub fn compose_word(spans: &[&Span]) -> Result<Span> {
    let (last, rest) = spans
        .split_last()
        .ok_or_else(|| Error::Frame("empty word has no frame".into()))?;
    let mut acc = (*last).clone();
    for s in rest.iter().rev() {
        acc = compose_spans(s, &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[&str]) -> FinSet {
        FinSet::of(xs)
    }

    fn basic(src: &[&str], dst: &[&str], entries: &[(&str, &str, &[&str])]) -> Span {
        let map = entries
            .iter()
            .map(|(x, y, es)| {
                (
                    (x.to_string(), y.to_string()),
                    es.iter().map(|e| e.to_string()).collect(),
                )
            })
            .collect();
        Span::basic(set(src), set(dst), map).unwrap()
    }

    #[test]
    fn matrix_cardinality() {
        let n = basic(
            &["x"],
            &["z1", "z2"],
            &[("x", "z1", &["a", "b"]), ("x", "z2", &["c", "d"])],
        );
        let m = basic(
            &["z1", "z2"],
            &["y"],
            &[("z1", "y", &["p", "q", "r"]), ("z2", "y", &["s", "t", "u"])],
        );
        let mn = compose_spans(&m, &n).unwrap();
        assert_eq!(mn.entry("x", "y").len(), 12);
        assert_eq!(mn.arity(), 2);
        let e = &mn.entry("x", "y").elements()[0];
        assert_eq!(e.render(), "a|z1|p");
    }

    #[test]
    fn identity_entries() {
        let one = identity_span(&set(&["a"]));
        assert_eq!(one.entry("a", "a").len(), 1);
        let two = identity_span(&set(&["a", "b"]));
        assert_eq!(two.entry("a", "a").len(), 1);
        assert_eq!(two.entry("b", "b").len(), 1);
        assert!(two.entry("a", "b").is_empty());
        assert!(two.entry("b", "a").is_empty());
        assert_eq!(compose_spans(&two, &two).unwrap(), two);
    }

    #[test]
    fn identity_is_strict_unit() {
        let n = basic(&["0", "1"], &["0", "1"], &[("0", "1", &["u"]), ("1", "1", &["v", "w"])]);
        let id = identity_span(&set(&["0", "1"]));
        assert_eq!(compose_spans(&id, &n).unwrap(), n);
        assert_eq!(compose_spans(&n, &id).unwrap(), n);
    }

    #[test]
    fn star_shape() {
        let x = set(&["0", "1"]);
        let f = FinFunction::from_fn(x.clone(), x.clone(), |_| "1".to_string()).unwrap();
        let s = restrict_star(&f);
        assert_eq!(s.entry("1", "0").len(), 1);
        assert_eq!(s.entry("1", "1").len(), 1);
        assert!(s.entry("0", "0").is_empty());
        assert!(s.entry("0", "1").is_empty());
        assert_eq!(star_function(&s), Some(f));
        assert_eq!(star_function(&identity_span(&x)), None);
    }

    #[test]
    fn star_of_identity_matches_identity_up_to_bijection() {
        let x = set(&["a", "b"]);
        let s = restrict_star(&FinFunction::identity(&x));
        assert_eq!(s.cardinalities(), identity_span(&x).cardinalities());
    }

    #[test]
    fn star_reindexes() {
        // (F* B)(z, x) ≅ B(z, F x) with F: 0↦1, 1↦1
        let x = set(&["0", "1"]);
        let f = FinFunction::from_fn(x.clone(), x.clone(), |_| "1".to_string()).unwrap();
        let b = basic(
            &["0", "1"],
            &["0", "1"],
            &[("0", "0", &["1"]), ("0", "1", &["u"]), ("1", "1", &["1"])],
        );
        let fb = compose_spans(&restrict_star(&f), &b).unwrap();
        for z in &x {
            for w in &x {
                assert_eq!(fb.entry(z, w).len(), b.entry(z, f.apply(w)).len());
            }
        }
        assert_eq!(fb.entry("0", "0").len(), 1);
        assert_eq!(fb.entry("0", "0").elements()[0].atoms()[0], "u");
    }

    #[test]
    fn star_post_composition_sums_fibres() {
        // (N F*)(c, z) = ⨿_{d : F d = c} N(d, z)
        let x = set(&["0", "1"]);
        let f = FinFunction::from_fn(x.clone(), x.clone(), |_| "1".to_string()).unwrap();
        let n = basic(
            &["0", "1"],
            &["0", "1"],
            &[("0", "0", &["a"]), ("1", "0", &["b", "c"]), ("1", "1", &["d"])],
        );
        let nf = compose_spans(&n, &restrict_star(&f)).unwrap();
        for c in &x {
            for z in &x {
                let fibre: usize = x.iter().filter(|d| f.apply(d) == c).map(|d| n.entry(d, z).len()).sum();
                assert_eq!(nf.entry(c, z).len(), fibre);
            }
        }
    }

    #[test]
    fn star_is_contravariant() {
        // (F∘G)* = G* F*
        let x = set(&["0", "1", "2"]);
        let g = FinFunction::from_fn(x.clone(), x.clone(), |a| if a == "0" { "1".into() } else { "2".into() }).unwrap();
        let f = FinFunction::from_fn(x.clone(), x.clone(), |a| if a == "2" { "0".into() } else { a.clone() }).unwrap();
        let fg = f.after(&g).unwrap();
        let lhs = restrict_star(&fg);
        let rhs = compose_spans(&restrict_star(&g), &restrict_star(&f)).unwrap();
        assert_eq!(lhs.cardinalities(), rhs.cardinalities());
    }

    #[test]
    fn path_render_roundtrip() {
        let p = PathElem::from_parts(vec!["a".into(), "b".into()], vec!["z".into()]).unwrap();
        assert_eq!(PathElem::parse(&p.render()).unwrap(), p);
        assert_eq!(PathElem::parse("()").unwrap(), PathElem::empty());
        assert!(PathElem::parse("a|b").is_err());
    }
}
