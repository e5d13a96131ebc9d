use super::diagnostic::{codes, Diagnostic};
use super::model::{Model, VarKind};

/// Check a model for solver-readiness. An empty result means the model can
/// be loaded by the solver without error; warnings flag conventions the
/// caller may want to know about (defaulted bounds, clamped binary bounds).
pub fn validate(model: &Model) -> Vec<Diagnostic> {
    let mut diags = Vec::new();

    if !model.objective.all_finite() {
        diags.push(Diagnostic::error(
            codes::NUMERIC_INVALID,
            "objective has a non-finite coefficient",
        ));
    }
    for c in model.constraints() {
        if c.expression.is_empty() {
            diags.push(Diagnostic::error(
                codes::EMPTY_CONSTRAINT,
                format!("constraint {:?} has no terms", c.name),
            ));
        }
        if !c.expression.all_finite() || !c.rhs.is_finite() {
            diags.push(Diagnostic::error(
                codes::NUMERIC_INVALID,
                format!("constraint {:?} has a non-finite value", c.name),
            ));
        }
    }

    // appearance counts: objective + constraints, for the single-use check
    let mut appearances: std::collections::BTreeMap<&str, usize> = Default::default();
    for t in model.objective.terms() {
        *appearances.entry(t.var.as_str()).or_default() += 1;
    }
    for c in model.constraints() {
        for t in c.expression.terms() {
            *appearances.entry(t.var.as_str()).or_default() += 1;
        }
    }

    for v in model.variables() {
        let kind = model.var_kind(&v);
        let explicit = model.explicit_bounds().get(&v).copied();
        if kind == VarKind::Binary {
            if let Some((lo, hi)) = explicit {
                if lo < 0.0 || hi > 1.0 {
                    diags.push(Diagnostic::warning(
                        codes::BOUND_CONFLICT_BINARY,
                        format!(
                            "binary variable {v:?} has explicit bounds [{lo}, {hi}] outside [0, 1]; effective bounds are clamped"
                        ),
                    ));
                }
            }
        }
        let (lo, hi) = model.effective_bounds(&v);
        if lo > hi {
            diags.push(Diagnostic::warning(
                codes::BOUND_EMPTY,
                format!("variable {v:?} has empty bound interval [{lo}, {hi}]"),
            ));
        }
        if appearances.get(v.as_str()) == Some(&1) && explicit.is_none() && kind == VarKind::Continuous
        {
            diags.push(Diagnostic::warning(
                codes::DEFAULT_BOUND_ASSUMED,
                format!("variable {v:?} appears once and has no bounds; default 0 <= {v} assumed"),
            ));
        }
    }
    diags
}

#[cfg(test)]
mod tests {
    use super::super::expr::LinearExpression;
    use super::super::model::{ConstraintSense, Model, NamedConstraint, ObjectiveSense};
    use super::*;

    fn expr(terms: &[(f64, &str)]) -> LinearExpression {
        LinearExpression::new(terms.iter().map(|(c, v)| (*c, v.to_string())))
    }

    fn tiny() -> Model {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "x"), (1.0, "y")]));
        m.add_constraint(
            NamedConstraint::new("c1", expr(&[(1.0, "x"), (1.0, "y")]), ConstraintSense::Ge, 1.0)
                .unwrap(),
        )
        .unwrap();
        m
    }

    #[test]
    fn well_formed_model_is_clean() {
        assert!(validate(&tiny()).is_empty());
    }

    #[test]
    fn binary_bound_conflict_is_warned() {
        let mut m = tiny();
        m.set_bounds("x", 0.0, 2.0).unwrap();
        m.set_kind("x", VarKind::Binary).unwrap();
        let diags = validate(&m);
        assert!(diags.iter().any(|d| d.code == codes::BOUND_CONFLICT_BINARY));
        assert!(diags.iter().all(|d| !d.is_error()));
    }

    #[test]
    fn single_use_unbounded_variable_warns_not_errors() {
        let mut m = tiny();
        m.add_constraint(
            NamedConstraint::new("c2", expr(&[(1.0, "lonely")]), ConstraintSense::Le, 5.0).unwrap(),
        )
        .unwrap();
        let diags = validate(&m);
        assert!(diags.iter().any(|d| d.code == codes::DEFAULT_BOUND_ASSUMED));
        assert!(diags.iter().all(|d| !d.is_error()));
    }
}
