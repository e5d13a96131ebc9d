use std::fmt::Write as _;

use super::expr::fmt_coef;
use super::model::{Model, VarKind};

/// Render a model as canonical LP text. Equal models render byte-identically
/// and `parse_lp(serialize_lp(m))` is structurally equal to `m`.
///
/// Layout: metadata as `\ meta k = v` comment lines, objective, `Subject To`
/// rows (with block-header comments re-emitted before their constraint),
/// then `Bounds`, `General`, `Binary` sections in variable-universe order,
/// each omitted when empty, then `End`.
pub fn serialize_lp(model: &Model) -> String {
    let mut out = String::new();
    for (k, v) in &model.metadata {
        if !k.starts_with("comment_before.") {
            let _ = writeln!(out, "\\ meta {k} = {v}");
        }
    }
    let _ = writeln!(out, "{}", model.sense);
    let _ = writeln!(out, " {}: {}", model.objective_name, model.objective);
    let _ = writeln!(out, "Subject To");
    for c in model.constraints() {
        if let Some(comment) = model.metadata.get(&format!("comment_before.{}", c.name)) {
            let _ = writeln!(out, "\\ {comment}");
        }
        let _ = writeln!(out, " {}: {} {} {}", c.name, c.expression, c.sense, fmt_coef(c.rhs));
    }

    let universe = model.variables();
    let mut bound_lines = Vec::new();
    for v in &universe {
        if let Some(&(lo, hi)) = model.explicit_bounds().get(v) {
            bound_lines.push(render_bound(v, lo, hi));
        } else if model.var_kind(v) == VarKind::Integer {
            // integers get an explicit default-bound line so files are
            // self-contained
            bound_lines.push(format!(" {v} >= 0"));
        }
    }
    if !bound_lines.is_empty() {
        let _ = writeln!(out, "Bounds");
        for l in bound_lines {
            let _ = writeln!(out, "{l}");
        }
    }

    for (kind, header) in [(VarKind::Integer, "General"), (VarKind::Binary, "Binary")] {
        let names: Vec<&String> = universe.iter().filter(|v| model.var_kind(v) == kind).collect();
        if !names.is_empty() {
            let _ = writeln!(out, "{header}");
            for n in names {
                let _ = writeln!(out, " {n}");
            }
        }
    }
    let _ = writeln!(out, "End");
    out
}

fn render_bound(v: &str, lo: f64, hi: f64) -> String {
    if lo == f64::NEG_INFINITY && hi == f64::INFINITY {
        format!(" {v} free")
    } else if lo == hi {
        format!(" {v} = {}", fmt_coef(lo))
    } else if lo == f64::NEG_INFINITY {
        format!(" -inf <= {v} <= {}", fmt_coef(hi))
    } else if hi == f64::INFINITY {
        format!(" {v} >= {}", fmt_coef(lo))
    } else if lo == 0.0 {
        format!(" {v} <= {}", fmt_coef(hi))
    } else {
        format!(" {} <= {v} <= {}", fmt_coef(lo), fmt_coef(hi))
    }
}

#[cfg(test)]
mod tests {
    use super::super::expr::LinearExpression;
    use super::super::model::{ConstraintSense, NamedConstraint, ObjectiveSense};
    use super::super::parse::parse_lp;
    use super::*;

    fn expr(terms: &[(f64, &str)]) -> LinearExpression {
        LinearExpression::new(terms.iter().map(|(c, v)| (*c, v.to_string())))
    }

    #[test]
    fn degenerate_model_has_required_sections() {
        let m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(0.0, "x")]));
        let text = serialize_lp(&m);
        assert!(text.contains("Minimize"));
        assert!(text.contains("Subject To"));
        assert!(text.trim_end().ends_with("End"));
        assert!(text.contains(" obj: 0 x"));
        let back = parse_lp(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn batch_row_renders_paper_form() {
        let mut m = Model::new(ObjectiveSense::Minimize, "obj", expr(&[(1.0, "q_1_1")]));
        m.add_constraint(
            NamedConstraint::new(
                "batch_1_1",
                expr(&[(1.0, "q_1_1"), (-100.0, "k_1_1")]),
                ConstraintSense::Eq,
                0.0,
            )
            .unwrap(),
        )
        .unwrap();
        m.set_kind("k_1_1", super::super::model::VarKind::Integer).unwrap();
        let text = serialize_lp(&m);
        assert!(text.contains("q_1_1 - 100 k_1_1 = 0"), "got:\n{text}");
        assert!(text.contains("General"));
        assert!(text.contains(" k_1_1 >= 0"));
    }

    #[test]
    fn serialization_is_insertion_order_independent_after_merge() {
        // same terms added in different orders but identical first-appearance
        // order serialize identically
        let a = expr(&[(1.0, "x"), (2.0, "y"), (3.0, "x")]);
        let b = expr(&[(4.0, "x"), (2.0, "y")]);
        let ma = Model::new(ObjectiveSense::Minimize, "obj", a);
        let mb = Model::new(ObjectiveSense::Minimize, "obj", b);
        assert_eq!(serialize_lp(&ma), serialize_lp(&mb));
    }

    #[test]
    fn round_trip_preserves_bounds_and_kinds() {
        let text = "Minimize\n obj: x + k + u + f\nSubject To\n c1: x + k + u + f >= 1\nBounds\n x <= 9.5\n f free\nGeneral\n k\nBinary\n u\nEnd\n";
        let m = parse_lp(text).unwrap();
        let rendered = serialize_lp(&m);
        let back = parse_lp(&rendered).unwrap();
        assert_eq!(back, m);
        // second serialization is byte-stable
        assert_eq!(serialize_lp(&back), rendered);
    }
}
