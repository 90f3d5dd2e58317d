use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::{Error, Result};

/// Atoms are plain strings; derived elements carry rendered structured tags.
pub type Atom = String;

/// A finite set with a fixed, deterministic iteration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet<T = Atom> {
    elements: Vec<T>,
}

pub(crate) static EMPTY_ATOMS: FinSet<Atom> = FinSet::EMPTY;

impl<T> FinSet<T> {
    pub const EMPTY: FinSet<T> = FinSet { elements: Vec::new() };
}

impl<T> Default for FinSet<T> {
    fn default() -> Self {
        FinSet { elements: Vec::new() }
    }
}

impl<T: Ord + Clone + Debug> FinSet<T> {
    pub fn new(elements: Vec<T>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(Error::Malformed(format!("duplicate element {e:?}")));
            }
        }
        Ok(FinSet { elements })
    }

    /// Caller guarantees distinctness (e.g. elements generated from distinct tags).
    pub(crate) fn from_distinct(elements: Vec<T>) -> Self {
        debug_assert!(FinSet::new(elements.clone()).is_ok());
        FinSet { elements }
    }

    pub fn empty() -> Self {
        FinSet { elements: Vec::new() }
    }

    pub fn singleton(e: T) -> Self {
        FinSet { elements: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elements.iter()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn contains(&self, e: &T) -> bool {
        self.elements.contains(e)
    }

    pub fn position(&self, e: &T) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// Same elements, lexicographically sorted.
    pub fn sorted(&self) -> Self {
        let mut elements = self.elements.clone();
        elements.sort();
        FinSet { elements }
    }
}

impl FinSet<Atom> {
    /// Convenience constructor for atom sets; panics on duplicates.
    pub fn of(atoms: &[&str]) -> Self {
        FinSet::new(atoms.iter().map(|s| s.to_string()).collect()).expect("distinct atoms")
    }
}

impl<'a, T> IntoIterator for &'a FinSet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Canonical tag for a pair; injective on atoms free of `(`, `)` and `,`.
pub fn pair_tag(a: &str, b: &str) -> Atom {
    format!("({a},{b})")
}

/// Atoms supplied from outside must avoid the characters used by derived tags.
pub fn check_atom(a: &str) -> Result<()> {
    if a.is_empty() {
        return Err(Error::Malformed("empty atom".into()));
    }
    if let Some(c) = a.chars().find(|c| matches!(c, '(' | ')' | ',' | '|')) {
        return Err(Error::Malformed(format!(
            "atom {a:?} contains reserved character {c:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_rejected() {
        assert!(FinSet::new(vec!["a".to_string(), "a".to_string()]).is_err());
        assert_eq!(FinSet::of(&["b", "a"]).elements(), &["b", "a"]);
    }

    #[test]
    fn reserved_atoms() {
        assert!(check_atom("x").is_ok());
        assert!(check_atom("a,b").is_err());
        assert!(check_atom("").is_err());
    }
}
