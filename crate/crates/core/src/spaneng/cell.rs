use std::collections::BTreeMap;
use std::fmt;

use super::span::{compose_spans, identity_span, PathElem, Span};
use crate::fincore::{enumerate_functions, Atom, FinFunction};
use crate::{Error, Result};

/// A 2-cell between spans with the same frame: one function per entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell2 {
    dom: Span,
    cod: Span,
    components: BTreeMap<(Atom, Atom), FinFunction<PathElem, PathElem>>,
}

impl Cell2 {
    pub fn new(
        dom: Span,
        cod: Span,
        components: BTreeMap<(Atom, Atom), FinFunction<PathElem, PathElem>>,
    ) -> Result<Self> {
        if dom.src() != cod.src() || dom.dst() != cod.dst() {
            return Err(Error::Frame("2-cell between spans with different frames".into()));
        }
        for x in dom.src() {
            for y in dom.dst() {
                let c = components
                    .get(&(x.clone(), y.clone()))
                    .ok_or_else(|| Error::Malformed(format!("2-cell has no component at ({x},{y})")))?;
                if c.dom() != dom.entry(x, y) || c.cod() != cod.entry(x, y) {
                    return Err(Error::Malformed(format!("component at ({x},{y}) has the wrong frame")));
                }
            }
        }
        if components.len() != dom.src().len() * dom.dst().len() {
            return Err(Error::Malformed("2-cell has components outside its frame".into()));
        }
        Ok(Cell2 { dom, cod, components })
    }

    /// Tabulates `f(x, y, element)` over every entry.
    pub fn from_fn(dom: Span, cod: Span, f: impl Fn(&str, &str, &PathElem) -> Option<PathElem>) -> Result<Self> {
        let mut components = BTreeMap::new();
        for x in dom.src() {
            for y in dom.dst() {
                let mut map = BTreeMap::new();
                for e in dom.entry(x, y) {
                    let img = f(x, y, e)
                        .ok_or_else(|| Error::Malformed(format!("2-cell undefined at element {e} of ({x},{y})")))?;
                    map.insert(e.clone(), img);
                }
                let c = FinFunction::new(dom.entry(x, y).clone(), cod.entry(x, y).clone(), map)
                    .map_err(|e| Error::Malformed(format!("component at ({x},{y}): {e}")))?;
                components.insert((x.clone(), y.clone()), c);
            }
        }
        Cell2::new(dom, cod, components)
    }

    pub fn identity(s: &Span) -> Self {
        let components = s
            .entries()
            .iter()
            .map(|(k, set)| (k.clone(), FinFunction::identity(set)))
            .collect();
        Cell2 {
            dom: s.clone(),
            cod: s.clone(),
            components,
        }
    }

    pub fn dom(&self) -> &Span {
        &self.dom
    }

    pub fn cod(&self) -> &Span {
        &self.cod
    }

    pub fn components(&self) -> &BTreeMap<(Atom, Atom), FinFunction<PathElem, PathElem>> {
        &self.components
    }

    pub fn component(&self, x: &str, y: &str) -> &FinFunction<PathElem, PathElem> {
        &self.components[&(x.to_string(), y.to_string())]
    }

    pub fn apply(&self, x: &str, y: &str, e: &PathElem) -> Option<&PathElem> {
        self.components.get(&(x.to_string(), y.to_string()))?.get(e)
    }

    /// Redirects one element; used for mutation fixtures.
    pub fn with_value(&self, x: &str, y: &str, e: &PathElem, image: PathElem) -> Result<Self> {
        let mut c = self.clone();
        let key = (x.to_string(), y.to_string());
        let comp = c
            .components
            .get(&key)
            .ok_or_else(|| Error::Malformed(format!("no entry ({x},{y})")))?
            .with_value(e, image)?;
        c.components.insert(key, comp);
        Ok(c)
    }
}

impl fmt::Display for Cell2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((x, y), c) in &self.components {
            for (a, b) in c.pairs() {
                writeln!(f, "  ({x},{y}): {a} ↦ {b}")?;
            }
        }
        Ok(())
    }
}

/// `a ∘ b` (apply `b` first).
pub fn vcompose(a: &Cell2, b: &Cell2) -> Result<Cell2> {
    if b.cod != a.dom {
        return Err(Error::Frame(
            "vertical composite: codomain of the first cell is not the domain of the second".into(),
        ));
    }
    let components = a
        .components
        .iter()
        .map(|(k, f)| Ok((k.clone(), f.after(&b.components[k])?)))
        .collect::<Result<_>>()?;
    Ok(Cell2 {
        dom: b.dom.clone(),
        cod: a.cod.clone(),
        components,
    })
}

/// Whiskering `left · c · right`: `c` acts on the middle segment of each path
/// and the outer segments pass through unchanged.
pub fn whisker(left: &Span, c: &Cell2, right: &Span) -> Result<Cell2> {
    let dom = compose_spans(left, &compose_spans(&c.dom, right)?)?;
    let cod = compose_spans(left, &compose_spans(&c.cod, right)?)?;
    let (r, m) = (right.arity(), c.dom.arity());
    let l = left.arity();
    Cell2::from_fn(dom, cod, |x, y, e| {
        let b1 = e.object_after(r, x, y);
        let b2 = e.object_after(r + m, x, y);
        let mid = c.apply(b1, b2, &e.slice(r, m))?;
        let head = PathElem::join(&e.slice(0, r), b1, mid);
        Some(PathElem::join(&head, b2, &e.slice(r + m, l)))
    })
}

/// Whiskering by identities on the frames of `c`.
pub fn whisker_left(left: &Span, c: &Cell2) -> Result<Cell2> {
    whisker(left, c, &identity_span(c.dom.src()))
}

pub fn whisker_right(c: &Cell2, right: &Span) -> Result<Cell2> {
    whisker(&identity_span(c.dom.dst()), c, right)
}

/// Where two cells first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellWitness {
    pub entry: Option<(Atom, Atom)>,
    pub element: Option<PathElem>,
    pub left: Option<PathElem>,
    pub right: Option<PathElem>,
}

impl fmt::Display for CellWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.entry, &self.element, &self.left, &self.right) {
            (Some((x, y)), Some(e), Some(l), Some(r)) => {
                write!(f, "entry ({x},{y}), element {e}: {l} vs {r}")
            }
            _ => write!(f, "frames differ"),
        }
    }
}

/// `Ok(())` when the cells are equal; otherwise one witness.
#[allow(clippy::result_large_err)]
pub fn cells_equal(a: &Cell2, b: &Cell2) -> Result<(), CellWitness> {
    let frames = CellWitness {
        entry: None,
        element: None,
        left: None,
        right: None,
    };
    if a.dom != b.dom || a.cod != b.cod {
        return Err(frames);
    }
    for (k, fa) in &a.components {
        let fb = &b.components[k];
        for (e, ia) in fa.pairs() {
            let ib = fb.apply(e);
            if ia != ib {
                return Err(CellWitness {
                    entry: Some(k.clone()),
                    element: Some(e.clone()),
                    left: Some(ia.clone()),
                    right: Some(ib.clone()),
                });
            }
        }
    }
    Ok(())
}

/// Every 2-cell `dom ⇒ cod`, as the product over entries of all functions.
pub fn enumerate_cells(dom: &Span, cod: &Span) -> Result<impl Iterator<Item = Cell2>> {
    if dom.src() != cod.src() || dom.dst() != cod.dst() {
        return Err(Error::Frame("cannot enumerate cells between different frames".into()));
    }
    let keys: Vec<(Atom, Atom)> = dom.entries().keys().cloned().collect();
    let choices: Vec<Vec<FinFunction<PathElem, PathElem>>> = keys
        .iter()
        .map(|(x, y)| enumerate_functions(dom.entry(x, y), cod.entry(x, y)).collect())
        .collect();
    let exhausted = choices.iter().any(Vec::is_empty);
    let (dom, cod) = (dom.clone(), cod.clone());
    let mut digits = vec![0usize; keys.len()];
    let mut done = exhausted;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let components = keys
            .iter()
            .zip(&digits)
            .zip(&choices)
            .map(|((k, &i), cs)| (k.clone(), cs[i].clone()))
            .collect();
        let cell = Cell2 {
            dom: dom.clone(),
            cod: cod.clone(),
            components,
        };
        let mut i = 0;
        loop {
            if i == digits.len() {
                done = true;
                break;
            }
            digits[i] += 1;
            if digits[i] < choices[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        Some(cell)
    }))
}

/// Number of cells `enumerate_cells` would yield, without building them.
pub fn count_cells(dom: &Span, cod: &Span) -> u128 {
    dom.entries()
        .iter()
        .map(|((x, y), set)| (cod.entry(x, y).len() as u128).saturating_pow(set.len() as u32))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

/// Every element of every entry, with its entry key.
pub fn elements(s: &Span) -> impl Iterator<Item = (&Atom, &Atom, &PathElem)> {
    s.entries()
        .iter()
        .flat_map(|((x, y), set)| set.iter().map(move |e| (x, y, e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincore::FinSet;
    use crate::spaneng::span::compose_spans;

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
        Span::basic(FinSet::of(src), FinSet::of(dst), map).unwrap()
    }

    fn swap_cell(s: &Span) -> Cell2 {
        Cell2::from_fn(s.clone(), s.clone(), |x, y, e| {
            let set = s.entry(x, y);
            let i = set.position(e)?;
            Some(set.elements()[(i + 1) % set.len()].clone())
        })
        .unwrap()
    }

    #[test]
    fn identity_laws() {
        let s = basic(&["0"], &["0"], &[("0", "0", &["a", "b"])]);
        let c = swap_cell(&s);
        assert_eq!(vcompose(&Cell2::identity(&s), &c).unwrap(), c);
        assert_eq!(vcompose(&c, &Cell2::identity(&s)).unwrap(), c);
        let id = identity_span(s.src());
        assert_eq!(whisker(&id, &c, &id).unwrap(), c);
        assert!(cells_equal(&c, &vcompose(&Cell2::identity(&s), &c).unwrap()).is_ok());
    }

    #[test]
    fn distinct_constants_differ() {
        let one = basic(&["0"], &["0"], &[("0", "0", &["e"])]);
        let two = basic(&["0"], &["0"], &[("0", "0", &["a", "b"])]);
        let ca = Cell2::from_fn(one.clone(), two.clone(), |_, _, _| Some(PathElem::atom("a"))).unwrap();
        let cb = Cell2::from_fn(one, two, |_, _, _| Some(PathElem::atom("b"))).unwrap();
        let w = cells_equal(&ca, &cb).unwrap_err();
        assert_eq!(w.element, Some(PathElem::atom("e")));
    }

    #[test]
    fn interchange_small() {
        let m = basic(&["0", "1"], &["0", "1"], &[("0", "1", &["a", "b"]), ("1", "1", &["c"])]);
        let n = basic(&["0", "1"], &["0", "1"], &[("0", "0", &["d", "e"]), ("1", "0", &["f"])]);
        let (cm, cn) = (swap_cell(&m), swap_cell(&n));
        // (cm · N') ∘ (M · cn) = (M' · cn) ∘ (cm · N)
        let id = identity_span(m.src());
        let lhs = vcompose(&whisker(&id, &cm, &n).unwrap(), &whisker(&m, &cn, &id).unwrap()).unwrap();
        let rhs = vcompose(&whisker(&m, &cn, &id).unwrap(), &whisker(&id, &cm, &n).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.dom(), &compose_spans(&m, &n).unwrap());
    }

    #[test]
    fn enumeration_count() {
        let s = basic(&["0"], &["0"], &[("0", "0", &["a", "b"])]);
        assert_eq!(enumerate_cells(&s, &s).unwrap().count(), 4);
        assert_eq!(count_cells(&s, &s), 4);
        let e = basic(&["0"], &["0"], &[]);
        assert_eq!(enumerate_cells(&s, &e).unwrap().count(), 0);
        assert_eq!(enumerate_cells(&e, &s).unwrap().count(), 1);
    }
}
