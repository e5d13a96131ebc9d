use std::collections::HashMap;
use std::fmt;

/// One `coefficient * variable` term.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub var: String,
}

impl Term {
    pub fn new(coef: f64, var: impl Into<String>) -> Self {
        Self { coef, var: var.into() }
    }
}

/// A linear expression over named variables.
///
/// Duplicate variables are merged on construction; term order is
/// first-appearance order, which makes serialization deterministic. A term
/// whose merged coefficient is zero is kept, so the variable stays part of
/// the expression's variable set.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearExpression {
    terms: Vec<Term>,
}

impl LinearExpression {
    pub fn new(raw: impl IntoIterator<Item = (f64, String)>) -> Self {
        let mut expr = Self::default();
        for (coef, var) in raw {
            expr.add_term(coef, var);
        }
        expr
    }

    /// Expression with no terms (the literal `0`).
    pub fn zero() -> Self {
        Self::default()
    }

    /// Add `coef * var`, merging with an existing term for `var`.
    pub fn add_term(&mut self, coef: f64, var: impl Into<String>) {
        let var = var.into();
        if let Some(t) = self.terms.iter_mut().find(|t| t.var == var) {
            t.coef += coef;
            if t.coef == 0.0 {
                t.coef = 0.0; // normalize -0.0
            }
        } else {
            let coef = if coef == 0.0 { 0.0 } else { coef };
            self.terms.push(Term::new(coef, var));
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coef_of(&self, var: &str) -> Option<f64> {
        self.terms.iter().find(|t| t.var == var).map(|t| t.coef)
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.var.as_str())
    }

    /// Evaluate at a (possibly partial) assignment; missing variables count
    /// as zero.
    pub fn evaluate(&self, assignment: &HashMap<String, f64>) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef * assignment.get(&t.var).copied().unwrap_or(0.0))
            .sum()
    }

    /// Remove every term for the given variables, returning how many were
    /// removed.
    pub fn remove_vars(&mut self, vars: &std::collections::BTreeSet<String>) -> usize {
        let before = self.terms.len();
        self.terms.retain(|t| !vars.contains(&t.var));
        before - self.terms.len()
    }

    pub fn all_finite(&self) -> bool {
        self.terms.iter().all(|t| t.coef.is_finite())
    }
}

impl fmt::Display for LinearExpression {
    /// Canonical rendering: `x + 2 y - z`; unit coefficients print the bare
    /// variable, the empty expression prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coef.abs();
            let negative = t.coef < 0.0;
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == 1.0 {
                write!(f, "{}", t.var)?;
            } else {
                write!(f, "{} {}", fmt_coef(mag), t.var)?;
            }
        }
        Ok(())
    }
}

/// Shortest round-trippable decimal for a finite f64 (Rust's `Display` is
/// already shortest-digits; this just pins the call site).
pub(crate) fn fmt_coef(v: f64) -> String {
    format!("{v}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_duplicates_in_first_appearance_order() {
        let e = LinearExpression::new(vec![
            (1.0, "x".to_string()),
            (2.0, "y".to_string()),
            (3.0, "x".to_string()),
        ]);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coef_of("x"), Some(4.0));
        assert_eq!(e.terms()[0].var, "x");
        assert_eq!(e.to_string(), "4 x + 2 y");
    }

    #[test]
    fn zero_coefficient_term_is_kept() {
        let e = LinearExpression::new(vec![(1.0, "x".to_string()), (-1.0, "x".to_string())]);
        assert_eq!(e.len(), 1);
        assert_eq!(e.coef_of("x"), Some(0.0));
        assert_eq!(e.to_string(), "0 x");
    }

    #[test]
    fn display_signs_and_units() {
        let e = LinearExpression::new(vec![
            (-1.0, "a".to_string()),
            (1.0, "b".to_string()),
            (-2.5, "c".to_string()),
        ]);
        assert_eq!(e.to_string(), "-a + b - 2.5 c");
        assert_eq!(LinearExpression::zero().to_string(), "0");
    }
}
