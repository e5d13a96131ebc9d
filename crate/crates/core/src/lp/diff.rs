use std::collections::BTreeSet;

use super::model::Model;

/// Structural difference between two models. Constraints are matched by
/// name, variables by the derived universe; a variable counts as modified
/// when its kind or effective bounds change.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StructuralDiff {
    pub objective_changed: bool,
    pub added_constraints: Vec<String>,
    pub removed_constraints: Vec<String>,
    pub modified_constraints: Vec<String>,
    pub added_variables: Vec<String>,
    pub removed_variables: Vec<String>,
    pub modified_variables: Vec<String>,
}

impl StructuralDiff {
    pub fn is_empty(&self) -> bool {
        !self.objective_changed
            && self.added_constraints.is_empty()
            && self.removed_constraints.is_empty()
            && self.modified_constraints.is_empty()
            && self.added_variables.is_empty()
            && self.removed_variables.is_empty()
            && self.modified_variables.is_empty()
    }

    /// True when the second model only adds to the first: objective intact,
    /// nothing removed, nothing modified.
    pub fn additions_only(&self) -> bool {
        !self.objective_changed
            && self.removed_constraints.is_empty()
            && self.modified_constraints.is_empty()
            && self.removed_variables.is_empty()
            && self.modified_variables.is_empty()
    }
}

/// Compare two models structurally. `objective_changed` is false iff sense,
/// objective name and objective expression are identical.
pub fn diff_models(a: &Model, b: &Model) -> StructuralDiff {
    let mut diff = StructuralDiff {
        objective_changed: a.sense != b.sense
            || a.objective_name != b.objective_name
            || a.objective != b.objective,
        ..Default::default()
    };

    let a_names: BTreeSet<&str> = a.constraints().iter().map(|c| c.name.as_str()).collect();
    let b_names: BTreeSet<&str> = b.constraints().iter().map(|c| c.name.as_str()).collect();
    for c in b.constraints() {
        if !a_names.contains(c.name.as_str()) {
            diff.added_constraints.push(c.name.clone());
        }
    }
    for c in a.constraints() {
        match b.constraint(&c.name) {
            None => diff.removed_constraints.push(c.name.clone()),
            Some(other) => {
                if other.expression != c.expression || other.sense != c.sense || other.rhs != c.rhs
                {
                    diff.modified_constraints.push(c.name.clone());
                }
            }
        }
    }

    let a_vars = a.variable_set();
    let b_vars = b.variable_set();
    for v in &b_vars {
        if !a_vars.contains(v) {
            diff.added_variables.push(v.clone());
        }
    }
    for v in &a_vars {
        if !b_vars.contains(v) {
            diff.removed_variables.push(v.clone());
        } else if a.var_kind(v) != b.var_kind(v) || a.effective_bounds(v) != b.effective_bounds(v)
        {
            diff.modified_variables.push(v.clone());
        }
    }
    diff
}

#[cfg(test)]
mod tests {
    use super::super::expr::LinearExpression;
    use super::super::model::{ConstraintSense, Model, NamedConstraint, ObjectiveSense};
    use super::*;

    fn expr(terms: &[(f64, &str)]) -> LinearExpression {
        LinearExpression::new(terms.iter().map(|(c, v)| (*c, v.to_string())))
    }

    fn base() -> Model {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "x")]));
        m.add_constraint(
            NamedConstraint::new("c1", expr(&[(1.0, "x")]), ConstraintSense::Ge, 1.0).unwrap(),
        )
        .unwrap();
        m
    }

    #[test]
    fn identity_diff_is_empty() {
        let m = base();
        assert!(diff_models(&m, &m).is_empty());
    }

    #[test]
    fn rhs_perturbation_is_one_modified_constraint() {
        let a = base();
        let mut b = base();
        let mut cs = b.constraints().to_vec();
        cs[0].rhs = 2.0;
        b.set_constraints(cs);
        let d = diff_models(&a, &b);
        assert_eq!(d.modified_constraints, vec!["c1".to_string()]);
        assert!(!d.objective_changed);
        assert!(!d.additions_only());
    }

    #[test]
    fn additions_only_detects_added_rows_and_vars() {
        let a = base();
        let mut b = base();
        b.add_constraint(
            NamedConstraint::new("c2", expr(&[(1.0, "y")]), ConstraintSense::Le, 3.0).unwrap(),
        )
        .unwrap();
        let d = diff_models(&a, &b);
        assert!(d.additions_only());
        assert_eq!(d.added_constraints, vec!["c2".to_string()]);
        assert_eq!(d.added_variables, vec!["y".to_string()]);
    }

    #[test]
    fn objective_change_is_flagged() {
        let a = base();
        let mut b = base();
        b.objective = expr(&[(2.0, "x")]);
        assert!(diff_models(&a, &b).objective_changed);
    }
}
