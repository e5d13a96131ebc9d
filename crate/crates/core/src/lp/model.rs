use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::expr::LinearExpression;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveSense {
    Minimize,
    Maximize,
}

impl fmt::Display for ObjectiveSense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveSense::Minimize => write!(f, "Minimize"),
            ObjectiveSense::Maximize => write!(f, "Maximize"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintSense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for ConstraintSense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintSense::Le => write!(f, "<="),
            ConstraintSense::Ge => write!(f, ">="),
            ConstraintSense::Eq => write!(f, "="),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VarKind {
    Continuous,
    Integer,
    Binary,
}

/// Inclusive variable bounds over the extended reals.
pub type Bound = (f64, f64);

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("constraint {0:?} has an empty expression")]
    EmptyConstraint(String),
    #[error("duplicate constraint name {0:?}")]
    DuplicateConstraint(String),
    #[error("non-finite coefficient in {0:?}")]
    NonFiniteCoefficient(String),
    #[error("non-finite right-hand side in {0:?}")]
    NonFiniteRhs(String),
    #[error("{entry} references variable {var:?} absent from objective and constraints")]
    UnknownVariable { entry: &'static str, var: String },
    #[error("invalid bound for {0:?} (NaN)")]
    InvalidBound(String),
}

/// One named linear constraint `expr sense rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedConstraint {
    pub name: String,
    pub expression: LinearExpression,
    pub sense: ConstraintSense,
    pub rhs: f64,
}

impl NamedConstraint {
    pub fn new(
        name: impl Into<String>,
        expression: LinearExpression,
        sense: ConstraintSense,
        rhs: f64,
    ) -> Result<Self, ModelError> {
        let name = name.into();
        if expression.is_empty() {
            return Err(ModelError::EmptyConstraint(name));
        }
        if !expression.all_finite() {
            return Err(ModelError::NonFiniteCoefficient(name));
        }
        if !rhs.is_finite() {
            return Err(ModelError::NonFiniteRhs(name));
        }
        Ok(Self { name, expression, sense, rhs })
    }
}

/// A complete LP-format optimization model.
///
/// Invariants enforced at construction:
/// * constraint names are unique;
/// * bounds/integrality entries reference only variables appearing in the
///   objective or a constraint;
/// * explicit bounds equal to the kind's default are canonicalized away, so
///   structurally equal models compare equal field-wise.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub sense: ObjectiveSense,
    pub objective_name: String,
    pub objective: LinearExpression,
    constraints: Vec<NamedConstraint>,
    bounds: BTreeMap<String, Bound>,
    integrality: BTreeMap<String, VarKind>,
    pub metadata: BTreeMap<String, String>,
}

impl Default for ObjectiveSense {
    fn default() -> Self {
        ObjectiveSense::Minimize
    }
}

impl Model {
    pub fn new(
        sense: ObjectiveSense,
        objective_name: impl Into<String>,
        objective: LinearExpression,
    ) -> Self {
        Self {
            sense,
            objective_name: objective_name.into(),
            objective,
            constraints: Vec::new(),
            bounds: BTreeMap::new(),
            integrality: BTreeMap::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn add_constraint(&mut self, c: NamedConstraint) -> Result<(), ModelError> {
        if self.constraints.iter().any(|e| e.name == c.name) {
            return Err(ModelError::DuplicateConstraint(c.name));
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn constraints(&self) -> &[NamedConstraint] {
        &self.constraints
    }

    pub fn constraint(&self, name: &str) -> Option<&NamedConstraint> {
        self.constraints.iter().find(|c| c.name == name)
    }

    /// Replace the constraint list wholesale (used by pruning). Names must
    /// stay unique; callers pass an already-deduplicated list.
    pub(crate) fn set_constraints(&mut self, constraints: Vec<NamedConstraint>) {
        self.constraints = constraints;
    }

    /// The variable universe in first-appearance order: objective terms,
    /// then constraint terms in constraint order.
    pub fn variables(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut push = |name: &str| {
            if seen.insert(name.to_string()) {
                out.push(name.to_string());
            }
        };
        for t in self.objective.terms() {
            push(&t.var);
        }
        for c in &self.constraints {
            for t in c.expression.terms() {
                push(&t.var);
            }
        }
        out
    }

    pub fn variable_set(&self) -> BTreeSet<String> {
        self.variables().into_iter().collect()
    }

    pub fn has_variable(&self, name: &str) -> bool {
        self.objective.coef_of(name).is_some()
            || self
                .constraints
                .iter()
                .any(|c| c.expression.coef_of(name).is_some())
    }

    pub fn var_kind(&self, name: &str) -> VarKind {
        self.integrality
            .get(name)
            .copied()
            .unwrap_or(VarKind::Continuous)
    }

    /// Declare integrality for a variable already in the universe.
    pub fn set_kind(&mut self, name: &str, kind: VarKind) -> Result<(), ModelError> {
        if !self.has_variable(name) {
            return Err(ModelError::UnknownVariable {
                entry: "integrality entry",
                var: name.to_string(),
            });
        }
        if kind == VarKind::Continuous {
            self.integrality.remove(name);
        } else {
            self.integrality.insert(name.to_string(), kind);
        }
        self.canonicalize_bound(name);
        Ok(())
    }

    pub fn integrality(&self) -> &BTreeMap<String, VarKind> {
        &self.integrality
    }

    fn default_bound(&self, name: &str) -> Bound {
        match self.var_kind(name) {
            VarKind::Binary => (0.0, 1.0),
            _ => (0.0, f64::INFINITY),
        }
    }

    /// Set explicit bounds for a variable already in the universe. Bounds
    /// equal to the kind default are canonicalized away.
    pub fn set_bounds(&mut self, name: &str, lower: f64, upper: f64) -> Result<(), ModelError> {
        if !self.has_variable(name) {
            return Err(ModelError::UnknownVariable {
                entry: "bounds entry",
                var: name.to_string(),
            });
        }
        if lower.is_nan() || upper.is_nan() {
            return Err(ModelError::InvalidBound(name.to_string()));
        }
        self.bounds.insert(name.to_string(), (lower, upper));
        self.canonicalize_bound(name);
        Ok(())
    }

    fn canonicalize_bound(&mut self, name: &str) {
        let default = self.default_bound(name);
        if self.bounds.get(name) == Some(&default) {
            self.bounds.remove(name);
        }
    }

    /// Explicit (non-default) bound entries.
    pub fn explicit_bounds(&self) -> &BTreeMap<String, Bound> {
        &self.bounds
    }

    pub(crate) fn remove_var_decls(&mut self, name: &str) {
        self.bounds.remove(name);
        self.integrality.remove(name);
    }

    /// Effective bounds: explicit entry or the kind default; binary bounds
    /// are intersected with [0, 1].
    pub fn effective_bounds(&self, name: &str) -> Bound {
        let (mut lo, mut hi) = self
            .bounds
            .get(name)
            .copied()
            .unwrap_or_else(|| self.default_bound(name));
        if self.var_kind(name) == VarKind::Binary {
            lo = lo.max(0.0);
            hi = hi.min(1.0);
        }
        (lo, hi)
    }

    /// Map of every variable to its kind and effective bounds, in universe
    /// order.
    pub fn variable_table(&self) -> Vec<(String, VarKind, Bound)> {
        self.variables()
            .into_iter()
            .map(|v| {
                let kind = self.var_kind(&v);
                let b = self.effective_bounds(&v);
                (v, kind, b)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr(terms: &[(f64, &str)]) -> LinearExpression {
        LinearExpression::new(terms.iter().map(|(c, v)| (*c, v.to_string())))
    }

    #[test]
    fn duplicate_constraint_name_rejected() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "x")]));
        m.add_constraint(
            NamedConstraint::new("c1", expr(&[(1.0, "x")]), ConstraintSense::Ge, 1.0).unwrap(),
        )
        .unwrap();
        let err = m
            .add_constraint(
                NamedConstraint::new("c1", expr(&[(1.0, "x")]), ConstraintSense::Le, 2.0).unwrap(),
            )
            .unwrap_err();
        assert_eq!(err, ModelError::DuplicateConstraint("c1".into()));
    }

    #[test]
    fn default_bounds_are_canonicalized_away() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "x")]));
        m.set_bounds("x", 0.0, f64::INFINITY).unwrap();
        assert!(m.explicit_bounds().is_empty());
        assert_eq!(m.effective_bounds("x"), (0.0, f64::INFINITY));
        m.set_bounds("x", -1.0, 5.0).unwrap();
        assert_eq!(m.effective_bounds("x"), (-1.0, 5.0));
    }

    #[test]
    fn binary_effective_bounds_clamped() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "b")]));
        m.set_kind("b", VarKind::Binary).unwrap();
        assert_eq!(m.effective_bounds("b"), (0.0, 1.0));
        m.set_bounds("b", 0.0, 2.0).unwrap();
        assert_eq!(m.effective_bounds("b"), (0.0, 1.0));
    }

    #[test]
    fn bounds_require_known_variable() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "x")]));
        assert!(m.set_bounds("ghost", 0.0, 1.0).is_err());
    }

    #[test]
    fn universe_is_first_appearance_order() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "b"), (1.0, "a")]));
        m.add_constraint(
            NamedConstraint::new("c", expr(&[(1.0, "z"), (1.0, "a")]), ConstraintSense::Le, 1.0)
                .unwrap(),
        )
        .unwrap();
        assert_eq!(m.variables(), vec!["b", "a", "z"]);
    }
}
