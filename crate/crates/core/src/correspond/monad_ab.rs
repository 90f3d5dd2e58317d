use crate::monadwarp::{validate_warping, warping_env, SpanMonad, Warping};
use crate::spaneng::{check_equation, compose_word, Cell2, Env, Span};
use crate::{Error, Result, ValidationReport};

/// A monad structure on the composite `AB`, remembering the factors.
///
/// `base_embedding` is `(Ap)(uB): B ⇒ AB`, where `u` is the unit; the
/// correspondence with warpings holds exactly for structures where it is a
/// monoid map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadOnAB {
    base: SpanMonad,
    endo: Span,
    carrier: Span,
    mult: Cell2,
    unit: Cell2,
    base_embedding: Cell2,
}

impl MonadOnAB {
    /// Assembles the data without checking any law. Fails only on frames.
    pub fn new(base: &SpanMonad, endo: &Span, mult: Cell2, unit: Cell2) -> Result<Self> {
        let carrier = compose_word(&[endo, base.carrier()])?;
        let mut env = base.env();
        env.bind_span("A", endo);
        env.bind_cell("u", "", "AB", &unit)?;
        let base_embedding = env.eval_str("(Ap)(uB)")?;
        env.bind_cell("m", "ABAB", "AB", &mult)?;
        Ok(MonadOnAB {
            base: base.clone(),
            endo: endo.clone(),
            carrier,
            mult,
            unit,
            base_embedding,
        })
    }

    pub fn base(&self) -> &SpanMonad {
        &self.base
    }

    pub fn endo(&self) -> &Span {
        &self.endo
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

    pub fn base_embedding(&self) -> &Cell2 {
        &self.base_embedding
    }

    /// Forgets the factorisation. Fails if the monad laws do not hold.
    pub fn as_span_monad(&self) -> Result<SpanMonad> {
        SpanMonad::new(self.carrier.clone(), self.mult.clone(), self.unit.clone())
    }

    /// Binds `A`, `B`, `p`, `e`, the multiplication `m`, unit `u` and the
    /// embedding `{phi}`.
    pub fn env(&self) -> Env {
        let mut env = self.base.env();
        env.bind_span("A", &self.endo);
        env.bind_cell("m", "ABAB", "AB", &self.mult).expect("frames checked");
        env.bind_cell("u", "", "AB", &self.unit).expect("frames checked");
        env.bind_cell("phi", "B", "AB", &self.base_embedding)
            .expect("frames checked");
        env
    }
}

/// Monad laws of `(AB, m, u)`.
pub fn validate_monad_laws(m: &MonadOnAB) -> ValidationReport {
    let mut r = ValidationReport::new("monad on AB");
    let env = m.env();
    let laws = [
        ("associativity", "m(mAB)", "m(ABm)"),
        ("left unit", "m(uAB)", "AB"),
        ("right unit", "m(ABu)", "AB"),
    ];
    for (rule, lhs, rhs) in laws {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

/// Whether `(Ap)(uB): B ⇒ AB` preserves multiplication and unit.
pub fn validate_side_condition(m: &MonadOnAB) -> ValidationReport {
    let mut r = ValidationReport::new("base embedding");
    let env = m.env();
    let laws = [
        ("monoid map (mult)", "{phi}(p)", "m(AB{phi})({phi}B)"),
        ("monoid map (unit)", "{phi}(e)", "u"),
    ];
    for (rule, lhs, rhs) in laws {
        if let Err(e) = check_equation(&env, &mut r, rule, lhs, rhs) {
            r.structural(e.to_string());
        }
    }
    r
}

/// Monad laws together with the side condition.
pub fn validate_monad_on_ab(m: &MonadOnAB) -> ValidationReport {
    let mut r = validate_monad_laws(m);
    let side = validate_side_condition(m);
    r.structural.extend(side.structural);
    r.violations.extend(side.violations);
    r
}

/// `p^{AB} = (Ap)(tB)` and `e^{AB} = k`.
pub fn warping_to_monad(w: &Warping) -> Result<MonadOnAB> {
    let r = validate_warping(w);
    if !r.is_valid() {
        return Err(Error::invalid("warping", &r));
    }
    let mut scratch = ValidationReport::new("warping");
    let env = warping_env(w, &mut scratch).expect("validated");
    let mult = env.eval_str("(Ap)(tB)")?;
    MonadOnAB::new(&w.base, &w.endo, mult, w.k.clone())
}

/// `t = m(ABAe)` and `k = u`. Rejects structures failing the monad laws or
/// the side condition, with a witness.
pub fn monad_to_warping(m: &MonadOnAB) -> Result<Warping> {
    let r = validate_monad_on_ab(m);
    if !r.is_valid() {
        return Err(Error::invalid("monad on AB", &r));
    }
    let t = m.env().eval_str("m(ABAe)")?;
    Ok(Warping {
        base: m.base.clone(),
        endo: m.endo.clone(),
        t,
        k: m.unit.clone(),
    })
}
