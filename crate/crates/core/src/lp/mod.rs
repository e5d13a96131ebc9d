//! LP-format model representation: parse, serialize, validate, diff.
//!
//! The dialect is a defined subset of the common commercial-solver LP text
//! format:
//!
//! * sections `Minimize`/`Maximize`, `Subject To`, `Bounds`, `General`,
//!   `Binary`, `End`, in that order;
//! * constraint senses `<=`, `>=`, `=` (`<` and `>` are accepted as
//!   synonyms on input);
//! * `\` starts a comment running to end of line;
//! * identifiers match `[A-Za-z_][A-Za-z0-9_]*`;
//! * undeclared continuous variables default to bounds `0 <= v < +inf`,
//!   binaries to `[0, 1]`.
//!
//! Serialization is canonical: equal models render byte-identically, and
//! `parse(serialize(m))` is structurally equal to `m`.

mod diagnostic;
mod diff;
mod expr;
mod model;
mod parse;
mod validate;
mod write;

pub use diagnostic::{codes, Diagnostic, Severity};
pub use diff::{diff_models, StructuralDiff};
pub use expr::{LinearExpression, Term};
pub use model::{
    Bound, ConstraintSense, Model, ModelError, NamedConstraint, ObjectiveSense, VarKind,
};
pub use parse::{parse_lp, parse_lp_detailed, ParseOutput};
pub use validate::validate;
pub use write::serialize_lp;
