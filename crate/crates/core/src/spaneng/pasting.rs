use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

use super::cell::{vcompose, whisker, Cell2};
use super::span::{compose_word, identity_span, Span};
use crate::fincore::{Atom, FinSet};
use crate::{Error, Result};

/// A word of 1-cell generators, written as in `ABA`: the last letter acts first.
pub type Word = Vec<Atom>;

pub fn word(letters: &str) -> Word {
    letters.chars().map(|c| c.to_string()).collect()
}

fn show_word(w: &[Atom]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.concat()
    }
}

/// A formal pasting composite of whiskered basic 2-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PastingExpr {
    Cell(Atom),
    Identity(Word),
    Whisker {
        left: Word,
        inner: Box<PastingExpr>,
        right: Word,
    },
    /// Vertical composite; the first element is applied first.
    Vertical(Vec<PastingExpr>),
}

impl PastingExpr {
    pub fn whiskered(left: &str, cell: &str, right: &str) -> Self {
        let inner = PastingExpr::Cell(cell.into());
        if left.is_empty() && right.is_empty() {
            return inner;
        }
        PastingExpr::Whisker {
            left: word(left),
            inner: Box::new(inner),
            right: word(right),
        }
    }

    /// Parses the usual notation: parenthesised factors composed right to
    /// left, e.g. `(Ap)(tB)(ABk)` or `t(ApA)(kBA)`. Inside a factor,
    /// upper-case letters are 1-cell generators, a lower-case letter (or a
    /// `{name}`) is the basic 2-cell, and `1` alone is the identity on the
    /// empty word.
    pub fn parse(src: &str) -> Result<Self> {
        let err = |m: String| Error::Parse {
            locus: format!("pasting expression {src:?}"),
            message: m,
        };
        let mut groups: Vec<String> = Vec::new();
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c == '(' {
                chars.next();
                let mut g = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some('(') => return Err(err("nested parentheses".into())),
                        Some(c) => g.push(c),
                        None => return Err(err("unclosed parenthesis".into())),
                    }
                }
                groups.push(g);
            } else if c == ')' {
                return Err(err("unbalanced ')'".into()));
            } else {
                let mut g = String::new();
                while let Some(&c) = chars.peek() {
                    if c == '(' || c == ')' || c.is_whitespace() {
                        break;
                    }
                    g.push(c);
                    chars.next();
                }
                groups.push(g);
            }
        }
        if groups.is_empty() {
            return Err(err("empty expression".into()));
        }
        let mut factors = groups
            .iter()
            .map(|g| parse_factor(g).map_err(|m| err(format!("factor {g:?}: {m}"))))
            .collect::<Result<Vec<_>>>()?;
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        factors.reverse();
        Ok(PastingExpr::Vertical(factors))
    }
}

fn parse_factor(g: &str) -> std::result::Result<PastingExpr, String> {
    if g == "1" {
        return Ok(PastingExpr::Identity(Vec::new()));
    }
    let (mut left, mut right) = (Word::new(), Word::new());
    let mut cell: Option<Atom> = None;
    let mut chars = g.chars();
    while let Some(c) = chars.next() {
        let side = if cell.is_some() { &mut right } else { &mut left };
        if c.is_ascii_uppercase() {
            side.push(c.to_string());
        } else if c.is_ascii_lowercase() || c == '{' {
            if cell.is_some() {
                return Err("more than one 2-cell".into());
            }
            let name = if c == '{' {
                let name: String = chars.by_ref().take_while(|&c| c != '}').collect();
                if name.is_empty() {
                    return Err("empty cell name".into());
                }
                name
            } else {
                c.to_string()
            };
            cell = Some(name);
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(match cell {
        None => PastingExpr::Identity(left),
        Some(name) if left.is_empty() && right.is_empty() => PastingExpr::Cell(name),
        Some(name) => PastingExpr::Whisker {
            left,
            inner: Box::new(PastingExpr::Cell(name)),
            right,
        },
    })
}

impl fmt::Display for PastingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn cell_name(n: &str) -> String {
            if n.len() == 1 {
                n.into()
            } else {
                format!("{{{n}}}")
            }
        }
        match self {
            PastingExpr::Cell(n) => write!(f, "{}", cell_name(n)),
            PastingExpr::Identity(w) => write!(f, "{}", show_word(w)),
            PastingExpr::Whisker { left, inner, right } => {
                write!(f, "{}{}{}", left.concat(), inner, right.concat())
            }
            PastingExpr::Vertical(list) => {
                for e in list.iter().rev() {
                    write!(f, "({e})")?;
                }
                Ok(())
            }
        }
    }
}

/// A named 2-cell together with its formal boundary words.
#[derive(Clone, Debug)]
pub struct Binding {
    pub dom: Word,
    pub cod: Word,
    pub cell: Cell2,
}

/// Names for generator spans and basic cells.
///
/// `base` is the object set used for the identity on the empty word when no
/// surrounding cell pins it down.
#[derive(Debug)]
pub struct Env {
    base: FinSet,
    spans: BTreeMap<Atom, Span>,
    cells: BTreeMap<Atom, Binding>,
    cache: RefCell<BTreeMap<Word, Span>>,
}

impl Env {
    pub fn new(base: &FinSet) -> Self {
        Env {
            base: base.clone(),
            spans: BTreeMap::new(),
            cells: BTreeMap::new(),
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn bind_span(&mut self, name: &str, s: &Span) {
        self.spans.insert(name.into(), s.clone());
        self.cache.borrow_mut().clear();
    }

    /// Binds a cell with boundary words given as letter strings (`""` is the
    /// empty word). Fails if the cell's spans are not the word composites.
    pub fn bind_cell(&mut self, name: &str, dom: &str, cod: &str, cell: &Cell2) -> Result<()> {
        let (dw, cw) = (word(dom), word(cod));
        let ds = self.word_span_at(&dw, cell.dom().src(), cell.dom().dst())?;
        let cs = self.word_span_at(&cw, cell.cod().src(), cell.cod().dst())?;
        if ds != *cell.dom() {
            return Err(Error::Frame(format!(
                "cell {name}: domain is not the composite {}",
                show_word(&dw)
            )));
        }
        if cs != *cell.cod() {
            return Err(Error::Frame(format!(
                "cell {name}: codomain is not the composite {}",
                show_word(&cw)
            )));
        }
        self.cells.insert(
            name.into(),
            Binding {
                dom: dw,
                cod: cw,
                cell: cell.clone(),
            },
        );
        Ok(())
    }

    pub fn span(&self, name: &str) -> Option<&Span> {
        self.spans.get(name)
    }

    /// Composite span of a non-empty word.
    pub fn word_span(&self, w: &[Atom]) -> Result<Span> {
        if w.is_empty() {
            return Ok(identity_span(&self.base));
        }
        if let Some(s) = self.cache.borrow().get(w) {
            return Ok(s.clone());
        }
        let spans = w
            .iter()
            .map(|g| {
                self.spans
                    .get(g)
                    .ok_or_else(|| Error::IllTyped(format!("unknown 1-cell {g}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = compose_word(&spans).map_err(|e| Error::IllTyped(format!("word {}: {e}", show_word(w))))?;
        self.cache.borrow_mut().insert(w.to_vec(), s.clone());
        Ok(s)
    }

    fn word_span_at(&self, w: &[Atom], src: &FinSet, dst: &FinSet) -> Result<Span> {
        if w.is_empty() {
            if src != dst {
                return Err(Error::Frame("empty word between different object sets".into()));
            }
            return Ok(identity_span(src));
        }
        self.word_span(w)
    }

    /// Formal boundary words of an expression, without evaluating it.
    pub fn boundary(&self, e: &PastingExpr) -> Result<(Word, Word)> {
        match e {
            PastingExpr::Cell(n) => {
                let b = self
                    .cells
                    .get(n)
                    .ok_or_else(|| Error::IllTyped(format!("unknown 2-cell {n}")))?;
                Ok((b.dom.clone(), b.cod.clone()))
            }
            PastingExpr::Identity(w) => Ok((w.clone(), w.clone())),
            PastingExpr::Whisker { left, inner, right } => {
                let (d, c) = self.boundary(inner)?;
                Ok((
                    [left.clone(), d, right.clone()].concat(),
                    [left.clone(), c, right.clone()].concat(),
                ))
            }
            PastingExpr::Vertical(list) => {
                let mut it = list.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::IllTyped("empty vertical composite".into()))?;
                let (dom, mut cod) = self.boundary(first)?;
                for (i, e) in it.enumerate() {
                    let (d, c) = self.boundary(e)?;
                    if d != cod {
                        return Err(Error::IllTyped(format!(
                            "factor {} ({e}) expects {} but receives {}",
                            i + 2,
                            show_word(&d),
                            show_word(&cod)
                        )));
                    }
                    cod = c;
                }
                Ok((dom, cod))
            }
        }
    }

    pub fn eval(&self, e: &PastingExpr) -> Result<Cell2> {
        self.boundary(e)?;
        self.eval_inner(e)
    }

    pub fn eval_str(&self, src: &str) -> Result<Cell2> {
        self.eval(&PastingExpr::parse(src)?)
    }

    fn eval_inner(&self, e: &PastingExpr) -> Result<Cell2> {
        match e {
            PastingExpr::Cell(n) => Ok(self.cells[n].cell.clone()),
            PastingExpr::Identity(w) => Ok(Cell2::identity(&self.word_span(w)?)),
            PastingExpr::Whisker { left, inner, right } => {
                let c = self.eval_inner(inner)?;
                let l = if left.is_empty() {
                    identity_span(c.dom().dst())
                } else {
                    self.word_span(left)?
                };
                let r = if right.is_empty() {
                    identity_span(c.dom().src())
                } else {
                    self.word_span(right)?
                };
                whisker(&l, &c, &r).map_err(|err| Error::IllTyped(format!("whiskering {e}: {err}")))
            }
            PastingExpr::Vertical(list) => {
                let mut acc = self.eval_inner(&list[0])?;
                for f in &list[1..] {
                    let c = self.eval_inner(f)?;
                    acc = vcompose(&c, &acc).map_err(|err| Error::IllTyped(format!("at {f}: {err}")))?;
                }
                Ok(acc)
            }
        }
    }
}

/// Evaluates `e` in `env`.
pub fn eval_pasting(e: &PastingExpr, env: &Env) -> Result<Cell2> {
    env.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_shapes() {
        let e = PastingExpr::parse("(Ap)(tB)").unwrap();
        assert_eq!(
            e,
            PastingExpr::Vertical(vec![
                PastingExpr::whiskered("", "t", "B"),
                PastingExpr::whiskered("A", "p", "")
            ])
        );
        assert_eq!(e.to_string(), "(Ap)(tB)");
        let e = PastingExpr::parse("t(ApA)(kBA)").unwrap();
        assert_eq!(e.to_string(), "(t)(ApA)(kBA)");
        assert_eq!(PastingExpr::parse("AB{pAB}").unwrap().to_string(), "AB{pAB}");
        assert_eq!(PastingExpr::parse("1").unwrap(), PastingExpr::Identity(vec![]));
        assert_eq!(PastingExpr::parse("AB").unwrap(), PastingExpr::Identity(word("AB")));
        assert!(PastingExpr::parse("(tk)").is_err());
        assert!(PastingExpr::parse("(t").is_err());
        assert!(PastingExpr::parse("A3").is_err());
    }
}
