use std::collections::BTreeMap;

use crate::fincore::{validate_category, Atom, FinCategory, FinSet};
use crate::spaneng::{check_equation, Cell2, Env, PathElem, Span};
use crate::{Error, Result, ValidationReport};

type CompTable = BTreeMap<(Atom, Atom, Atom), BTreeMap<(Atom, Atom), Atom>>;

/// A monad in the bicategory of spans: a span `B: X → X` with `p: BB ⇒ B`
/// and `e: 1 ⇒ B`. Values of this type always satisfy the monad laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanMonad {
    carrier: Span,
    mult: Cell2,
    unit: Cell2,
}

/// Checks associativity and both unit laws of `(carrier, mult, unit)`.
pub fn validate_span_monad(carrier: &Span, mult: &Cell2, unit: &Cell2) -> ValidationReport {
    let mut r = ValidationReport::new("span monad");
    if carrier.src() != carrier.dst() {
        r.structural("carrier is not an endo-span");
        return r;
    }
    let mut env = Env::new(carrier.src());
    env.bind_span("B", carrier);
    for (name, dom, cell) in [("p", "BB", mult), ("e", "", unit)] {
        if let Err(e) = env.bind_cell(name, dom, "B", cell) {
            r.structural(e.to_string());
        }
    }
    if !r.is_structurally_sound() {
        return r;
    }
    let laws = [
        ("associativity", "p(pB)", "p(Bp)"),
        ("left unit", "p(eB)", "B"),
        ("right unit", "p(Be)", "B"),
    ];
    for (rule, lhs, rhs) in laws {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

impl SpanMonad {
    pub fn new(carrier: Span, mult: Cell2, unit: Cell2) -> Result<Self> {
        let r = validate_span_monad(&carrier, &mult, &unit);
        if !r.is_structurally_sound() {
            return Err(Error::Frame(r.structural.join("; ")));
        }
        if !r.is_valid() {
            return Err(Error::invalid("span monad", &r));
        }
        Ok(SpanMonad { carrier, mult, unit })
    }

    pub fn objects(&self) -> &FinSet {
        self.carrier.src()
    }

    pub fn carrier(&self) -> &Span {
        &self.carrier
    }

    pub fn mult(&self) -> &Cell2 {
        &self.mult
    }

    pub fn unit(&self) -> &Cell2 {
        &self.unit
    }

    /// An environment binding `B`, `p` and `e`.
    pub fn env(&self) -> Env {
        let mut env = Env::new(self.objects());
        env.bind_span("B", &self.carrier);
        env.bind_cell("p", "BB", "B", &self.mult).expect("validated");
        env.bind_cell("e", "", "B", &self.unit).expect("validated");
        env
    }
}

/// The span monad of a category: `B(x, y) = hom(x, y)`, `p` is composition
/// and `e` picks identities.
pub fn category_to_monad(c: &FinCategory) -> Result<SpanMonad> {
    let r = validate_category(c);
    if !r.is_valid() {
        return Err(Error::invalid("category", &r));
    }
    let entries: BTreeMap<(Atom, Atom), Vec<Atom>> = c
        .homs()
        .iter()
        .map(|(k, s)| (k.clone(), s.elements().to_vec()))
        .collect();
    let carrier = Span::basic(c.objects().clone(), c.objects().clone(), entries)?;
    let bb = crate::spaneng::compose_spans(&carrier, &carrier)?;
    let mult = Cell2::from_fn(bb, carrier.clone(), |x, z, e| {
        let y = &e.pivots()[0];
        let (f, g) = (&e.atoms()[0], &e.atoms()[1]);
        c.compose_names(x, y, z, g, f).map(|h| PathElem::atom(h.as_str()))
    })?;
    let unit = Cell2::from_fn(
        crate::spaneng::identity_span(c.objects()),
        carrier.clone(),
        |x, _, _| c.identity_name(x).map(|i| PathElem::atom(i.as_str())),
    )?;
    SpanMonad::new(carrier, mult, unit)
}

/// The category of a span monad. Arrow names are rendered carrier elements,
/// so a category survives `category_to_monad` followed by this unchanged.
pub fn monad_to_category(m: &SpanMonad) -> FinCategory {
    let b = m.carrier();
    let homs = b
        .entries()
        .iter()
        .map(|(k, s)| (k.clone(), FinSet::from_distinct(s.iter().map(|e| e.render()).collect())))
        .collect();
    let mut comp: CompTable = BTreeMap::new();
    let xs = m.objects();
    for x in xs {
        for y in xs {
            for z in xs {
                let table = comp.entry((x.clone(), y.clone(), z.clone())).or_default();
                for f in b.entry(x, y) {
                    for g in b.entry(y, z) {
                        let h = m.mult.apply(x, z, &PathElem::join(f, y, g)).expect("total");
                        table.insert((g.render(), f.render()), h.render());
                    }
                }
            }
        }
    }
    let ident = xs
        .iter()
        .map(|x| {
            (
                x.clone(),
                m.unit.apply(x, x, &PathElem::empty()).expect("total").render(),
            )
        })
        .collect();
    FinCategory::from_parts(xs.clone(), homs, comp, ident)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinCategory {
        FinCategory::from_monoid(
            "o",
            &["1", "s"],
            "1",
            |g, f| if g == f { "1".into() } else { "s".into() },
        )
    }

    #[test]
    fn z2_roundtrip_and_table() {
        let c = z2();
        let m = category_to_monad(&c).unwrap();
        assert_eq!(m.carrier().entry("o", "o").len(), 2);
        let ss = PathElem::join(&PathElem::atom("s"), "o", &PathElem::atom("s"));
        assert_eq!(m.mult().apply("o", "o", &ss), Some(&PathElem::atom("1")));
        assert_eq!(monad_to_category(&m), c);
    }

    #[test]
    fn discrete_monad_is_identity_like() {
        let objs = FinSet::of(&["0", "1"]);
        let c = FinCategory::discrete(&objs);
        let m = category_to_monad(&c).unwrap();
        assert_eq!(
            m.carrier().cardinalities(),
            crate::spaneng::identity_span(&objs).cardinalities()
        );
        assert_eq!(monad_to_category(&m), c);
    }

    #[test]
    fn broken_unit_rejected() {
        let c = z2();
        let m = category_to_monad(&c).unwrap();
        let bad = m
            .unit()
            .with_value("o", "o", &PathElem::empty(), PathElem::atom("s"))
            .unwrap();
        let r = validate_span_monad(m.carrier(), m.mult(), &bad);
        assert_eq!(r.failed_rules(), vec!["left unit", "right unit"]);
        assert!(SpanMonad::new(m.carrier().clone(), m.mult().clone(), bad).is_err());
    }
}
