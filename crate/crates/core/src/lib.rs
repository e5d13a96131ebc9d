//! lpkit-core: deterministic tooling for the lifecycle of industrial MILP
//! models expressed in the LP text format.
//!
//! The crate is organised around a single immutable [`lp::Model`] value:
//!
//! * [`lp`] — parse, validate, serialize and diff LP-format models.
//! * [`inject`] — append business-constraint blocks (setup time, workforce,
//!   batch/inventory, cross-period production, split delivery) to an existing
//!   model without touching its objective or original constraints.
//! * [`repair`] — rule-based post-processing that turns near-valid LP text
//!   into solver-ready text.
//! * [`solver`] — exact rational branch-and-bound for desk-scale MILPs, plus
//!   a brute-force enumeration oracle.
//! * [`prune`] — certify variables as prunable (zero in every optimal
//!   solution), apply pruning, and score predictions.
//! * [`datagen`] — seeded generators for scheduling models, training pairs,
//!   down-scaled instances and mutated repair corpora.
//! * [`metrics`] — the generation / executability / accuracy metric ladder
//!   over corpora of candidate models.
//!
//! Everything is a pure function of its inputs; equal seeds give byte-equal
//! outputs.

pub mod datagen;
pub mod inject;
pub mod kv;
pub mod lp;
pub mod metrics;
pub mod prune;
pub mod repair;
pub mod solver;

pub use lp::{
    ConstraintSense, Diagnostic, LinearExpression, Model, NamedConstraint, ObjectiveSense,
    Severity, StructuralDiff, VarKind,
};
pub use solver::{SolveConfig, Solution, SolveStatus};

/// Tool version reported in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
