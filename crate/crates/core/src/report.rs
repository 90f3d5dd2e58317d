use std::fmt;

use serde::Serialize;

/// One failed instance of a law, with a rendered witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

/// Outcome of a validator.
///
/// Structural problems (non-total tables, elements outside their declared
/// sets) are kept apart from law violations, so callers can tell a malformed
/// input from a well-formed structure that fails an axiom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub structural: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn structural(&mut self, msg: impl Into<String>) {
        self.structural.push(msg.into());
    }

    pub fn violation(&mut self, rule: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.into(),
            witness: witness.into(),
        });
    }

    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }

    pub fn is_structurally_sound(&self) -> bool {
        self.structural.is_empty()
    }

    /// Rules with at least one violation, in first-failure order, deduplicated.
    pub fn failed_rules(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.rule.as_str()) {
                out.push(&v.rule);
            }
        }
        out
    }

    pub fn first_witness(&self, rule: &str) -> Option<&str> {
        self.violations
            .iter()
            .find(|v| v.rule == rule)
            .map(|v| v.witness.as_str())
    }

    /// Folds another report into this one, prefixing its messages.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for s in other.structural {
            self.structural.push(format!("{prefix}: {s}"));
        }
        for v in other.violations {
            self.violations.push(Violation {
                rule: format!("{prefix}.{}", v.rule),
                witness: v.witness,
            });
        }
    }

    /// Keeps at most `n` witnesses per rule (and `n` structural messages).
    pub fn truncate_witnesses(&mut self, n: usize) {
        self.structural.truncate(n);
        let mut seen: Vec<(String, usize)> = Vec::new();
        self.violations
            .retain(|v| match seen.iter_mut().find(|(r, _)| *r == v.rule) {
                Some((_, count)) => {
                    *count += 1;
                    *count <= n
                }
                None => {
                    seen.push((v.rule.clone(), 1));
                    n > 0
                }
            });
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "valid".into();
        }
        if let Some(s) = self.structural.first() {
            return format!("structural: {s}");
        }
        let v = &self.violations[0];
        format!("{} violated at {}", v.rule, v.witness)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{}: valid", self.subject);
        }
        writeln!(f, "{}: invalid", self.subject)?;
        for s in &self.structural {
            writeln!(f, "  structural: {s}")?;
        }
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.rule, v.witness)?;
        }
        Ok(())
    }
}
