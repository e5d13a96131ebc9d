//! Branch-and-bound over the LP relaxation, plus the exhaustive enumeration
//! oracle used to certify it in tests.
//!
//! Search rules are fixed for reproducibility: depth-first, down-branch
//! first, branching on the most-fractional integer variable with ties
//! broken by variable name order.

use super::scalar::Scalar;
use super::simplex::{solve_relaxation, LpForm, LpOutcome, SimplexFailure};

#[derive(Debug, Clone)]
pub(crate) enum MilpOutcome<T> {
    Optimal { objective: T, values: Vec<T> },
    Infeasible,
    Unbounded,
    NodeLimit,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct SearchStats {
    pub nodes: u64,
    pub iterations: u64,
    pub root_bound: Option<f64>,
}

struct Node<T> {
    lower: Vec<Option<T>>,
    upper: Vec<Option<T>>,
}

/// Minimize over `form` honoring its integrality mask. `int_tol` is only
/// consulted by the float fallback; exact arithmetic tests integrality
/// exactly.
pub(crate) fn branch_and_bound<T: Scalar>(
    form: &LpForm<T>,
    node_limit: u64,
    int_tol: f64,
) -> Result<(MilpOutcome<T>, SearchStats), SimplexFailure> {
    let mut stats = SearchStats::default();
    let mut incumbent: Option<(T, Vec<T>)> = None;

    let mut stack: Vec<Node<T>> = vec![Node {
        lower: form.lower.clone(),
        upper: form.upper.clone(),
    }];
    let mut root = true;

    while let Some(node) = stack.pop() {
        if stats.nodes >= node_limit {
            return Ok((MilpOutcome::NodeLimit, stats));
        }
        stats.nodes += 1;
        let outcome = solve_relaxation(form, &node.lower, &node.upper)?;
        let (objective, values, iterations) = match outcome {
            LpOutcome::Optimal { objective, values, iterations } => {
                (objective, values, iterations)
            }
            LpOutcome::Infeasible => {
                if root {
                    return Ok((MilpOutcome::Infeasible, stats));
                }
                continue;
            }
            LpOutcome::Unbounded => {
                // unboundedness is decided at the root relaxation; children
                // only tighten bounds and cannot be unbounded when the root
                // was bounded
                return Ok((MilpOutcome::Unbounded, stats));
            }
        };
        stats.iterations += iterations;
        if root {
            stats.root_bound = Some(objective.to_f64());
            root = false;
        }
        // bound pruning: an equal-or-worse relaxation cannot improve the
        // incumbent objective
        if let Some((best, _)) = &incumbent {
            if objective >= *best {
                continue;
            }
        }
        // most-fractional integer variable, ties by name order
        let mut branch_var: Option<(usize, f64)> = None;
        for (j, is_int) in form.integer.iter().enumerate() {
            if !is_int || values[j].is_integral(int_tol) {
                continue;
            }
            let frac = {
                let v = values[j].to_f64();
                let f = v - v.floor();
                f.min(1.0 - f)
            };
            branch_var = match branch_var {
                None => Some((j, frac)),
                Some((bj, bf)) => {
                    if frac > bf || (frac == bf && form.names[j] < form.names[bj]) {
                        Some((j, frac))
                    } else {
                        Some((bj, bf))
                    }
                }
            };
        }
        match branch_var {
            None => {
                // integer-feasible candidate
                let better = match &incumbent {
                    None => true,
                    Some((best, _)) => objective < *best,
                };
                if better {
                    incumbent = Some((objective, values));
                }
            }
            Some((j, _)) => {
                let down_bound = values[j].floor_int();
                let up_bound = down_bound.clone() + T::one();
                let mut up = Node {
                    lower: node.lower.clone(),
                    upper: node.upper.clone(),
                };
                up.lower[j] = Some(match &node.lower[j] {
                    Some(l) if *l > up_bound => l.clone(),
                    _ => up_bound,
                });
                let mut down = node;
                down.upper[j] = Some(match &down.upper[j] {
                    Some(u) if *u < down_bound => u.clone(),
                    _ => down_bound,
                });
                // LIFO: push up first so the down branch explores first
                stack.push(up);
                stack.push(down);
            }
        }
    }

    Ok(match incumbent {
        Some((objective, values)) => MilpOutcome::Optimal { objective, values },
        None => MilpOutcome::Infeasible,
    })
}

/// Exhaustive enumeration over the integer lattice; the continuous part of
/// each lattice point is solved by the LP relaxation. Used as the
/// independent oracle for [`branch_and_bound`].
pub(crate) fn brute_force<T: Scalar>(
    form: &LpForm<T>,
    lattice_cap: u64,
) -> Result<Option<(MilpOutcome<T>, SearchStats)>, SimplexFailure> {
    let n = form.names.len();
    let int_vars: Vec<usize> = (0..n).filter(|&j| form.integer[j]).collect();

    // every integer variable needs finite bounds; count lattice points
    let mut dims: Vec<(usize, i64, i64)> = Vec::new();
    let mut points: u128 = 1;
    for &j in &int_vars {
        let (Some(lo), Some(hi)) = (&form.lower[j], &form.upper[j]) else {
            return Ok(None); // unbounded lattice
        };
        let lo = lo.ceil_int().to_f64() as i64;
        let hi = hi.floor_int().to_f64() as i64;
        if lo > hi {
            return Ok(Some((MilpOutcome::Infeasible, SearchStats::default())));
        }
        points = points.saturating_mul((hi - lo + 1) as u128);
        if points > lattice_cap as u128 {
            return Ok(None);
        }
        dims.push((j, lo, hi));
    }

    let has_continuous = (0..n).any(|j| !form.integer[j]);
    let mut stats = SearchStats::default();
    let mut best: Option<(T, Vec<T>)> = None;

    let mut odo: Vec<i64> = dims.iter().map(|&(_, lo, _)| lo).collect();
    loop {
        stats.nodes += 1;
        // fix the integer variables at the current lattice point
        let mut lower = form.lower.clone();
        let mut upper = form.upper.clone();
        for (k, &(j, _, _)) in dims.iter().enumerate() {
            let v = T::from_f64(odo[k] as f64).expect("lattice value is finite");
            lower[j] = Some(v.clone());
            upper[j] = Some(v);
        }
        if has_continuous || !dims.is_empty() {
            match solve_relaxation(form, &lower, &upper)? {
                LpOutcome::Optimal { objective, values, iterations } => {
                    stats.iterations += iterations;
                    let better = match &best {
                        None => true,
                        Some((b, _)) => objective < *b,
                    };
                    if better {
                        best = Some((objective, values));
                    }
                }
                LpOutcome::Infeasible => {}
                LpOutcome::Unbounded => {
                    return Ok(Some((MilpOutcome::Unbounded, stats)));
                }
            }
        } else {
            // no variables at all: feasibility of the constant rows
            match solve_relaxation(form, &lower, &upper)? {
                LpOutcome::Optimal { objective, values, .. } => {
                    best = Some((objective, values));
                }
                LpOutcome::Infeasible => {}
                LpOutcome::Unbounded => unreachable!("no variables"),
            }
        }
        // advance odometer (last dimension fastest)
        let mut k = dims.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            odo[k] += 1;
            if odo[k] <= dims[k].2 {
                break;
            }
            odo[k] = dims[k].1;
            if k == 0 {
                k = usize::MAX;
                break;
            }
        }
        if dims.is_empty() || k == usize::MAX {
            break;
        }
    }

    Ok(Some(match best {
        Some((objective, values)) => (MilpOutcome::Optimal { objective, values }, stats),
        None => (MilpOutcome::Infeasible, stats),
    }))
}

#[cfg(test)]
mod tests {
    use num::rational::BigRational;
    use num::FromPrimitive;

    use crate::lp::ConstraintSense;

    use super::super::simplex::FormRow;
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_i64(v).unwrap()
    }

    fn knapsack() -> LpForm<BigRational> {
        // min -(3a + 2b) s.t. a + b <= 1, a,b binary
        LpForm {
            names: vec!["a".into(), "b".into()],
            objective: vec![r(-3), r(-2)],
            rows: vec![FormRow {
                name: "c".into(),
                coeffs: vec![(0, r(1)), (1, r(1))],
                sense: ConstraintSense::Le,
                rhs: r(1),
            }],
            lower: vec![Some(r(0)), Some(r(0))],
            upper: vec![Some(r(1)), Some(r(1))],
            integer: vec![true, true],
        }
    }

    #[test]
    fn binary_knapsack_agrees_with_enumeration() {
        let form = knapsack();
        let (bb, _) = branch_and_bound(&form, 1_000, 1e-6).unwrap();
        let (bf, _) = brute_force(&form, 1_000).unwrap().unwrap();
        match (bb, bf) {
            (
                MilpOutcome::Optimal { objective: o1, values: v1 },
                MilpOutcome::Optimal { objective: o2, .. },
            ) => {
                assert_eq!(o1, r(-3));
                assert_eq!(o2, r(-3));
                assert_eq!(v1, vec![r(1), r(0)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fractional_relaxation_forces_branching() {
        // min -x s.t. 2x <= 3, x integer in [0, 5] -> relaxation 1.5, integer 1
        let form = LpForm {
            names: vec!["x".into()],
            objective: vec![r(-1)],
            rows: vec![FormRow {
                name: "c".into(),
                coeffs: vec![(0, r(2))],
                sense: ConstraintSense::Le,
                rhs: r(3),
            }],
            lower: vec![Some(r(0))],
            upper: vec![Some(r(5))],
            integer: vec![true],
        };
        let (bb, stats) = branch_and_bound(&form, 1_000, 1e-6).unwrap();
        match bb {
            MilpOutcome::Optimal { objective, values } => {
                assert_eq!(objective, r(-1));
                assert_eq!(values[0], r(1));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(stats.nodes > 1, "branching expected");
    }

    #[test]
    fn unbounded_lattice_is_rejected() {
        let mut form = knapsack();
        form.upper[0] = None;
        assert!(brute_force(&form, 1_000).unwrap().is_none());
    }

    #[test]
    fn lattice_cap_is_respected() {
        let form = knapsack();
        assert!(brute_force(&form, 1).unwrap().is_none());
    }
}
