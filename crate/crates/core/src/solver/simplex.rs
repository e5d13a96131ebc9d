//! Two-phase primal simplex over a dense tableau with Bland's rule.
//!
//! The entry point works on an [`LpForm`]: named variables with optional
//! lower/upper bounds and linear rows. Bounds are eliminated by variable
//! shifts (lower), mirroring (upper-only) or splitting (free); finite boxes
//! add one explicit `x' <= u - l` row. Bland's rule makes every run
//! deterministic and, with exact arithmetic, guarantees termination.

use crate::lp::ConstraintSense;

use super::scalar::Scalar;

/// A solver-internal linear problem in original variable space. `objective`
/// is always minimized; callers handle maximization by negation.
#[derive(Debug, Clone)]
pub(crate) struct LpForm<T> {
    pub names: Vec<String>,
    pub objective: Vec<T>,
    pub rows: Vec<FormRow<T>>,
    pub lower: Vec<Option<T>>,
    pub upper: Vec<Option<T>>,
    pub integer: Vec<bool>,
}

#[derive(Debug, Clone)]
pub(crate) struct FormRow<T> {
    pub name: String,
    pub coeffs: Vec<(usize, T)>,
    pub sense: ConstraintSense,
    pub rhs: T,
}

#[derive(Debug, Clone)]
pub(crate) enum LpOutcome<T> {
    Optimal {
        objective: T,
        values: Vec<T>,
        iterations: u64,
    },
    Infeasible,
    Unbounded,
}

/// Iteration guard tripped. With exact arithmetic Bland's rule terminates,
/// so this is the float fallback's numerical-instability signal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SimplexFailure;

const MAX_PIVOTS: u64 = 500_000;

enum ColMap<T> {
    /// x = offset + x'
    Shift { offset: T },
    /// x = offset - x''
    Mirror { offset: T },
    /// x = pos - neg (two columns, this is the positive one)
    FreePair,
    /// x fixed to a constant; no column.
    Fixed { value: T },
}

/// Solve `min objective` over the form with per-call bound vectors (the
/// branch-and-bound overrides bounds per node). Integrality is ignored.
pub(crate) fn solve_relaxation<T: Scalar>(
    form: &LpForm<T>,
    lower: &[Option<T>],
    upper: &[Option<T>],
) -> Result<LpOutcome<T>, SimplexFailure> {
    let n = form.names.len();
    debug_assert_eq!(lower.len(), n);
    debug_assert_eq!(upper.len(), n);

    // column layout
    let mut maps: Vec<ColMap<T>> = Vec::with_capacity(n);
    let mut col_of: Vec<usize> = Vec::with_capacity(n); // first column per var
    let mut ncols = 0usize;
    let mut box_rows: Vec<(usize, T)> = Vec::new(); // (column, width) for x' <= u-l
    for j in 0..n {
        match (&lower[j], &upper[j]) {
            (Some(l), Some(u)) => {
                if l > u {
                    return Ok(LpOutcome::Infeasible);
                }
                if l == u {
                    maps.push(ColMap::Fixed { value: l.clone() });
                    col_of.push(usize::MAX);
                } else {
                    maps.push(ColMap::Shift { offset: l.clone() });
                    col_of.push(ncols);
                    box_rows.push((ncols, u.clone() - l.clone()));
                    ncols += 1;
                }
            }
            (Some(l), None) => {
                maps.push(ColMap::Shift { offset: l.clone() });
                col_of.push(ncols);
                ncols += 1;
            }
            (None, Some(u)) => {
                maps.push(ColMap::Mirror { offset: u.clone() });
                col_of.push(ncols);
                ncols += 1;
            }
            (None, None) => {
                maps.push(ColMap::FreePair);
                col_of.push(ncols);
                ncols += 2;
            }
        }
    }

    // assemble equality rows over the transformed columns
    struct RawRow<T> {
        coeffs: Vec<(usize, T)>,
        sense: ConstraintSense,
        rhs: T,
    }
    let mut raw: Vec<RawRow<T>> = Vec::with_capacity(form.rows.len() + box_rows.len());
    for row in &form.rows {
        let mut rhs = row.rhs.clone();
        let mut coeffs: Vec<(usize, T)> = Vec::with_capacity(row.coeffs.len() + 1);
        for (j, a) in &row.coeffs {
            if a.is_zero() {
                continue;
            }
            match &maps[*j] {
                ColMap::Fixed { value } => {
                    rhs = rhs - a.clone() * value.clone();
                }
                ColMap::Shift { offset } => {
                    rhs = rhs - a.clone() * offset.clone();
                    push_coeff(&mut coeffs, col_of[*j], a.clone());
                }
                ColMap::Mirror { offset } => {
                    rhs = rhs - a.clone() * offset.clone();
                    push_coeff(&mut coeffs, col_of[*j], -a.clone());
                }
                ColMap::FreePair => {
                    push_coeff(&mut coeffs, col_of[*j], a.clone());
                    push_coeff(&mut coeffs, col_of[*j] + 1, -a.clone());
                }
            }
        }
        if coeffs.is_empty() {
            // all variables fixed: the row is a constant comparison
            let sat = match row.sense {
                ConstraintSense::Le => !rhs.is_negative() || rhs.eps_zero(),
                ConstraintSense::Ge => !rhs.is_positive() || rhs.eps_zero(),
                ConstraintSense::Eq => rhs.eps_zero(),
            };
            if !sat {
                return Ok(LpOutcome::Infeasible);
            }
            continue;
        }
        raw.push(RawRow { coeffs, sense: row.sense, rhs });
    }
    for (col, width) in box_rows {
        raw.push(RawRow {
            coeffs: vec![(col, T::one())],
            sense: ConstraintSense::Le,
            rhs: width,
        });
    }

    // objective over transformed columns plus a constant
    let mut cost = vec![T::zero(); ncols];
    let mut constant = T::zero();
    for j in 0..n {
        let c = form.objective[j].clone();
        if c.is_zero() {
            continue;
        }
        match &maps[j] {
            ColMap::Fixed { value } => constant = constant + c * value.clone(),
            ColMap::Shift { offset } => {
                constant = constant + c.clone() * offset.clone();
                cost[col_of[j]] = cost[col_of[j]].clone() + c;
            }
            ColMap::Mirror { offset } => {
                constant = constant + c.clone() * offset.clone();
                cost[col_of[j]] = cost[col_of[j]].clone() - c;
            }
            ColMap::FreePair => {
                cost[col_of[j]] = cost[col_of[j]].clone() + c.clone();
                cost[col_of[j] + 1] = cost[col_of[j] + 1].clone() - c;
            }
        }
    }

    // slack columns, then sign-normalize rhs, then artificial columns
    let m = raw.len();
    let mut slack_cols = 0usize;
    for r in raw.iter() {
        if r.sense != ConstraintSense::Eq {
            slack_cols += 1;
        }
    }
    let total_structural = ncols + slack_cols;
    let total = total_structural + m; // one artificial per row
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut next_slack = ncols;
    for (i, r) in raw.iter().enumerate() {
        let mut dense = vec![T::zero(); total + 1];
        for (j, a) in &r.coeffs {
            dense[*j] = dense[*j].clone() + a.clone();
        }
        match r.sense {
            ConstraintSense::Le => {
                dense[next_slack] = T::one();
                next_slack += 1;
            }
            ConstraintSense::Ge => {
                dense[next_slack] = -T::one();
                next_slack += 1;
            }
            ConstraintSense::Eq => {}
        }
        dense[total] = r.rhs.clone();
        if dense[total].is_negative() {
            for cell in dense.iter_mut() {
                *cell = -cell.clone();
            }
        }
        dense[total_structural + i] = T::one();
        tab.push(dense);
    }

    let mut basis: Vec<usize> = (0..m).map(|i| total_structural + i).collect();

    // phase-1 objective: sum of artificials; phase-2: real costs
    let mut obj1 = vec![T::zero(); total + 1];
    for i in 0..m {
        obj1[total_structural + i] = T::one();
    }
    let mut obj2 = vec![T::zero(); total + 1];
    obj2[..ncols].clone_from_slice(&cost);

    // price out the initial basis from both objective rows
    for i in 0..m {
        let c1 = obj1[basis[i]].clone();
        if !c1.is_zero() {
            axpy_neg(&mut obj1, &tab[i], &c1);
        }
        let c2 = obj2[basis[i]].clone();
        if !c2.is_zero() {
            axpy_neg(&mut obj2, &tab[i], &c2);
        }
    }

    let mut iterations = 0u64;

    // phase 1: minimize artificial sum over all columns
    match run_phase(&mut tab, &mut basis, &mut obj1, &mut obj2, total, total, &mut iterations)? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => unreachable!("phase-1 objective is bounded below by zero"),
    }
    if !(-obj1[total].clone()).eps_zero() {
        return Ok(LpOutcome::Infeasible);
    }

    // drive leftover artificial basics out (degenerate pivots) or drop
    // all-zero rows
    let mut drop_rows: Vec<usize> = Vec::new();
    for i in 0..m {
        if basis[i] < total_structural {
            continue;
        }
        let mut pivot_col = None;
        for j in 0..total_structural {
            if !tab[i][j].eps_zero() {
                pivot_col = Some(j);
                break;
            }
        }
        match pivot_col {
            Some(j) => {
                pivot(&mut tab, &mut basis, &mut [&mut obj1, &mut obj2], i, j, total);
                iterations += 1;
            }
            None => drop_rows.push(i),
        }
    }
    for &i in drop_rows.iter().rev() {
        tab.remove(i);
        basis.remove(i);
    }

    // phase 2: minimize the real objective over structural columns only
    match run_phase(
        &mut tab,
        &mut basis,
        &mut obj2,
        &mut obj1,
        total_structural,
        total,
        &mut iterations,
    )? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => return Ok(LpOutcome::Unbounded),
    }

    // extract transformed-column values
    let mut colvals = vec![T::zero(); total_structural];
    for (i, &b) in basis.iter().enumerate() {
        if b < total_structural {
            colvals[b] = tab[i][total].clone();
        }
    }
    // map back to original variables
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        let v = match &maps[j] {
            ColMap::Fixed { value } => value.clone(),
            ColMap::Shift { offset } => offset.clone() + colvals[col_of[j]].clone(),
            ColMap::Mirror { offset } => offset.clone() - colvals[col_of[j]].clone(),
            ColMap::FreePair => colvals[col_of[j]].clone() - colvals[col_of[j] + 1].clone(),
        };
        values.push(v);
    }
    let objective = constant + (-obj2[total].clone());
    Ok(LpOutcome::Optimal { objective, values, iterations })
}

fn push_coeff<T: Scalar>(coeffs: &mut Vec<(usize, T)>, col: usize, a: T) {
    for (j, existing) in coeffs.iter_mut() {
        if *j == col {
            *existing = existing.clone() + a;
            return;
        }
    }
    coeffs.push((col, a));
}

/// `target -= factor * source` over full row length.
fn axpy_neg<T: Scalar>(target: &mut [T], source: &[T], factor: &T) {
    for (t, s) in target.iter_mut().zip(source.iter()) {
        if !s.is_zero() {
            *t = t.clone() - factor.clone() * s.clone();
        }
    }
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

/// Bland-rule pivot loop minimizing `obj`. `enter_limit` restricts entering
/// columns (phase 2 excludes artificials); `other` is the second objective
/// row kept in sync.
#[allow(clippy::too_many_arguments)]
fn run_phase<T: Scalar>(
    tab: &mut Vec<Vec<T>>,
    basis: &mut Vec<usize>,
    obj: &mut Vec<T>,
    other: &mut Vec<T>,
    enter_limit: usize,
    rhs_col: usize,
    iterations: &mut u64,
) -> Result<PhaseEnd, SimplexFailure> {
    loop {
        if *iterations > MAX_PIVOTS {
            return Err(SimplexFailure);
        }
        // entering: smallest column index with negative reduced cost
        let mut entering = None;
        for (j, c) in obj.iter().enumerate().take(enter_limit) {
            if c.is_negative() && !c.eps_zero() {
                entering = Some(j);
                break;
            }
        }
        let Some(jcol) = entering else {
            return Ok(PhaseEnd::Optimal);
        };
        // ratio test: min rhs / a over a > 0; ties by smallest basis column
        let mut best: Option<(usize, T)> = None; // (row, ratio)
        for (i, row) in tab.iter().enumerate() {
            let a = &row[jcol];
            if a.is_positive() && !a.eps_zero() {
                let ratio = row[rhs_col].clone() / a.clone();
                match &best {
                    None => best = Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < *br || (ratio == *br && basis[i] < basis[*bi]) {
                            best = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((r, _)) = best else {
            return Ok(PhaseEnd::Unbounded);
        };
        pivot(tab, basis, &mut [&mut *obj, &mut *other], r, jcol, rhs_col);
        *iterations += 1;
    }
}

fn pivot<T: Scalar>(
    tab: &mut [Vec<T>],
    basis: &mut [usize],
    obj_rows: &mut [&mut Vec<T>],
    r: usize,
    jcol: usize,
    rhs_col: usize,
) {
    let p = tab[r][jcol].clone();
    debug_assert!(!p.is_zero());
    if !(p.clone() - T::one()).is_zero() {
        let row = &mut tab[r];
        for cell in row.iter_mut() {
            if !cell.is_zero() {
                *cell = cell.clone() / p.clone();
            }
        }
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r {
            continue;
        }
        let factor = row[jcol].clone();
        if !factor.is_zero() {
            axpy_neg(row, &pivot_row, &factor);
            row[jcol] = T::zero(); // cancel rounding residue in float mode
        }
    }
    for obj in obj_rows.iter_mut() {
        let factor = obj[jcol].clone();
        if !factor.is_zero() {
            axpy_neg(obj, &pivot_row, &factor);
            obj[jcol] = T::zero();
        }
    }
    let _ = rhs_col;
    basis[r] = jcol;
}

#[cfg(test)]
mod tests {
    use num::rational::BigRational;
    use num::FromPrimitive;

    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_i64(v).unwrap()
    }

    fn form(
        n: usize,
        objective: Vec<i64>,
        rows: Vec<(Vec<(usize, i64)>, ConstraintSense, i64)>,
    ) -> LpForm<BigRational> {
        LpForm {
            names: (0..n).map(|i| format!("x{i}")).collect(),
            objective: objective.into_iter().map(r).collect(),
            rows: rows
                .into_iter()
                .enumerate()
                .map(|(i, (coeffs, sense, rhs))| FormRow {
                    name: format!("r{i}"),
                    coeffs: coeffs.into_iter().map(|(j, a)| (j, r(a))).collect(),
                    sense,
                    rhs: r(rhs),
                })
                .collect(),
            lower: vec![Some(r(0)); n],
            upper: vec![None; n],
            integer: vec![false; n],
        }
    }

    #[test]
    fn min_x_with_lower_row() {
        // min x s.t. x >= 2
        let f = form(1, vec![1], vec![(vec![(0, 1)], ConstraintSense::Ge, 2)]);
        match solve_relaxation(&f, &f.lower, &f.upper).unwrap() {
            LpOutcome::Optimal { objective, values, .. } => {
                assert_eq!(objective, r(2));
                assert_eq!(values[0], r(2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_box() {
        // x >= 1 and x <= 0
        let f = form(
            1,
            vec![1],
            vec![
                (vec![(0, 1)], ConstraintSense::Ge, 1),
                (vec![(0, 1)], ConstraintSense::Le, 0),
            ],
        );
        assert!(matches!(
            solve_relaxation(&f, &f.lower, &f.upper).unwrap(),
            LpOutcome::Infeasible
        ));
    }

    #[test]
    fn unbounded_direction() {
        // min -x, x >= 0, no upper structure
        let f = form(1, vec![-1], vec![]);
        assert!(matches!(
            solve_relaxation(&f, &f.lower, &f.upper).unwrap(),
            LpOutcome::Unbounded
        ));
    }

    #[test]
    fn knapsack_relaxation() {
        // min -(3a + 2b) s.t. a + b <= 1, 0 <= a,b <= 1
        let mut f = form(
            2,
            vec![-3, -2],
            vec![(vec![(0, 1), (1, 1)], ConstraintSense::Le, 1)],
        );
        f.upper = vec![Some(r(1)), Some(r(1))];
        match solve_relaxation(&f, &f.lower, &f.upper).unwrap() {
            LpOutcome::Optimal { objective, values, .. } => {
                assert_eq!(objective, r(-3));
                assert_eq!(values[0], r(1));
                assert_eq!(values[1], r(0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn free_variable_split() {
        // min x, x free, x >= -5 via row
        let mut f = form(1, vec![1], vec![(vec![(0, 1)], ConstraintSense::Ge, -5)]);
        f.lower = vec![None];
        match solve_relaxation(&f, &f.lower, &f.upper).unwrap() {
            LpOutcome::Optimal { objective, .. } => assert_eq!(objective, r(-5)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fixed_variable_constant_row() {
        // x fixed to 3 by bounds, row x <= 2 is a violated constant
        let mut f = form(1, vec![1], vec![(vec![(0, 1)], ConstraintSense::Le, 2)]);
        f.lower = vec![Some(r(3))];
        f.upper = vec![Some(r(3))];
        assert!(matches!(
            solve_relaxation(&f, &f.lower, &f.upper).unwrap(),
            LpOutcome::Infeasible
        ));
    }

    #[test]
    fn equality_rows_and_degenerate_pivots() {
        // min x + y s.t. x + y = 4, x - y = 0 -> x = y = 2
        let f = form(
            2,
            vec![1, 1],
            vec![
                (vec![(0, 1), (1, 1)], ConstraintSense::Eq, 4),
                (vec![(0, 1), (1, -1)], ConstraintSense::Eq, 0),
            ],
        );
        match solve_relaxation(&f, &f.lower, &f.upper).unwrap() {
            LpOutcome::Optimal { objective, values, .. } => {
                assert_eq!(objective, r(4));
                assert_eq!(values, vec![r(2), r(2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
