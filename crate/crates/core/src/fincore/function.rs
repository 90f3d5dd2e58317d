use std::collections::BTreeMap;
use std::fmt::Debug;

use super::set::{Atom, FinSet};
use crate::{Error, Result};

/// A total function between finite sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFunction<A = Atom, B = Atom> {
    dom: FinSet<A>,
    cod: FinSet<B>,
    map: BTreeMap<A, B>,
}

impl<A, B> FinFunction<A, B>
where
    A: Ord + Clone + Debug,
    B: Ord + Clone + Debug,
{
    pub fn new(dom: FinSet<A>, cod: FinSet<B>, map: BTreeMap<A, B>) -> Result<Self> {
        for a in &dom {
            match map.get(a) {
                None => return Err(Error::Malformed(format!("function undefined at {a:?}"))),
                Some(b) if !cod.contains(b) => {
                    return Err(Error::Malformed(format!("image {b:?} of {a:?} outside codomain")))
                }
                _ => {}
            }
        }
        if map.len() != dom.len() {
            return Err(Error::Malformed("function defined outside its domain".into()));
        }
        Ok(FinFunction { dom, cod, map })
    }

    pub fn from_fn(dom: FinSet<A>, cod: FinSet<B>, f: impl Fn(&A) -> B) -> Result<Self> {
        let map = dom.iter().map(|a| (a.clone(), f(a))).collect();
        FinFunction::new(dom, cod, map)
    }

    pub fn dom(&self) -> &FinSet<A> {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet<B> {
        &self.cod
    }

    pub fn get(&self, a: &A) -> Option<&B> {
        self.map.get(a)
    }

    /// Panics when `a` is outside the domain.
    pub fn apply(&self, a: &A) -> &B {
        self.map.get(a).unwrap_or_else(|| panic!("{a:?} not in domain"))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&A, &B)> {
        self.dom.iter().map(move |a| (a, &self.map[a]))
    }

    /// `g.after(f)` is `g ∘ f`.
    pub fn after<C>(&self, f: &FinFunction<C, A>) -> Result<FinFunction<C, B>>
    where
        C: Ord + Clone + Debug,
    {
        if f.cod != self.dom {
            return Err(Error::Frame("composed functions do not meet".into()));
        }
        let map = f.map.iter().map(|(c, a)| (c.clone(), self.map[a].clone())).collect();
        Ok(FinFunction {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            map,
        })
    }

    /// Replaces one value; used to build mutated fixtures.
    pub fn with_value(&self, a: &A, b: B) -> Result<Self> {
        let mut map = self.map.clone();
        map.insert(a.clone(), b);
        FinFunction::new(self.dom.clone(), self.cod.clone(), map)
    }
}

impl<A: Ord + Clone + Debug> FinFunction<A, A> {
    pub fn identity(set: &FinSet<A>) -> Self {
        let map = set.iter().map(|a| (a.clone(), a.clone())).collect();
        FinFunction {
            dom: set.clone(),
            cod: set.clone(),
            map,
        }
    }
}

/// All `|b|^|a|` total functions `a → b`, in odometer order over `b`'s order.
pub fn enumerate_functions<A, B>(a: &FinSet<A>, b: &FinSet<B>) -> FunctionIter<A, B>
where
    A: Ord + Clone + Debug,
    B: Ord + Clone + Debug,
{
    let done = !a.is_empty() && b.is_empty();
    FunctionIter {
        dom: a.clone(),
        cod: b.clone(),
        digits: vec![0; a.len()],
        done,
    }
}

pub struct FunctionIter<A, B> {
    dom: FinSet<A>,
    cod: FinSet<B>,
    digits: Vec<usize>,
    done: bool,
}

impl<A, B> Iterator for FunctionIter<A, B>
where
    A: Ord + Clone + Debug,
    B: Ord + Clone + Debug,
{
    type Item = FinFunction<A, B>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let map = self
            .dom
            .iter()
            .zip(&self.digits)
            .map(|(a, &i)| (a.clone(), self.cod.elements()[i].clone()))
            .collect();
        let out = FinFunction {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            map,
        };
        // advance; the most significant digit is the last domain element
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.cod.len() {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let e: FinSet = FinSet::empty();
        let one = FinSet::of(&["x"]);
        let two = FinSet::of(&["p", "q"]);
        assert_eq!(enumerate_functions(&one, &e).count(), 0);
        assert_eq!(enumerate_functions(&e, &two).count(), 1);
        assert_eq!(enumerate_functions(&two, &two).count(), 4);
        assert_eq!(enumerate_functions(&FinSet::of(&["a", "b", "c"]), &two).count(), 8);
    }

    #[test]
    fn distinct_and_deterministic() {
        let a = FinSet::of(&["a", "b", "c"]);
        let b = FinSet::of(&["0", "1", "2"]);
        let all: Vec<_> = enumerate_functions(&a, &b).collect();
        let again: Vec<_> = enumerate_functions(&a, &b).collect();
        assert_eq!(all, again);
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), 27);
    }

    #[test]
    fn rejects_partial() {
        let a = FinSet::of(&["a", "b"]);
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), "a".to_string());
        assert!(FinFunction::new(a.clone(), a, m).is_err());
    }
}
