//! Self-contained linear-program solver: two-phase primal simplex on a
//! condensed (Tucker) tableau with Bland's anti-cycling rule.
//!
//! The tableau keeps one dense row per constraint over the current nonbasic
//! columns only; a pivot swaps a basic and a nonbasic label in place, so
//! memory stays at O(rows x structural columns) regardless of how many
//! slack variables the standard form introduces.
//!
//! The pivoting core is generic over the scalar, with two instantiations:
//! `f64` with 1e-9 feasibility/optimality tolerances, and `BigRational`
//! with exact comparisons for constraint systems carrying rational data.

use crate::geometry::{LinearSystem, Relation};
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

pub const DEFAULT_MAX_PIVOTS: usize = 1_000_000;
pub const FEASIBILITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// The pivot budget ran out before any of the other three verdicts.
    IterationLimit,
}

/// A minimization problem: objective over n_vars variables, sparse
/// inequality constraints, optional equality rows, and per-variable bounds
/// (defaulting to [0, +inf)).
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub n_vars: usize,
    pub objective: Vec<f64>,
    pub constraints: LinearSystem,
    pub equalities: Vec<(Vec<(usize, f64)>, f64)>,
    pub lower: Vec<f64>,
    pub upper: Vec<Option<f64>>,
    pub max_pivots: usize,
}

impl LpProblem {
    pub fn new(n_vars: usize, objective: Vec<f64>) -> Self {
        assert_eq!(objective.len(), n_vars);
        assert!(objective.iter().all(|c| c.is_finite()));
        LpProblem {
            n_vars,
            objective,
            constraints: LinearSystem::new(n_vars),
            equalities: Vec::new(),
            lower: vec![0.0; n_vars],
            upper: vec![None; n_vars],
            max_pivots: DEFAULT_MAX_PIVOTS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Objective value at the optimum; NaN unless status is Optimal.
    pub value: f64,
    /// Optimal point; empty unless status is Optimal.
    pub point: Vec<f64>,
    pub iterations: usize,
}

/// Same problem shape with exact rational data.
#[derive(Debug, Clone)]
pub struct RationalLpProblem {
    pub n_vars: usize,
    pub objective: Vec<BigRational>,
    pub constraints: Vec<(Vec<(usize, BigRational)>, Relation, BigRational)>,
    pub equalities: Vec<(Vec<(usize, BigRational)>, BigRational)>,
    pub max_pivots: usize,
}

impl RationalLpProblem {
    pub fn new(n_vars: usize, objective: Vec<BigRational>) -> Self {
        assert_eq!(objective.len(), n_vars);
        RationalLpProblem {
            n_vars,
            objective,
            constraints: Vec::new(),
            equalities: Vec::new(),
            max_pivots: DEFAULT_MAX_PIVOTS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RationalLpSolution {
    pub status: LpStatus,
    pub value: Option<BigRational>,
    pub point: Vec<BigRational>,
    pub iterations: usize,
}

/// Scalar abstraction for the pivoting core.
pub trait SimplexScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
    + std::fmt::Debug
{
    /// Comparison tolerance: entries within it count as zero.
    fn tol() -> Self;
}

impl SimplexScalar for f64 {
    fn tol() -> f64 {
        FEASIBILITY_TOL
    }
}

impl SimplexScalar for BigRational {
    fn tol() -> BigRational {
        BigRational::zero()
    }
}

struct StandardForm<S> {
    n_structural: usize,
    // one entry per constraint row: dense coefficients over the initial
    // nonbasic columns, the rhs (nonnegative), and the basic label
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basic: Vec<usize>,
    col_label: Vec<usize>,
    artificial_from: usize,
    phase2_cost: Vec<S>, // indexed by column position
}

fn build_standard_form<S: SimplexScalar>(
    n: usize,
    objective: &[S],
    rows_in: Vec<(Vec<(usize, S)>, Relation, S)>,
    equalities: Vec<(Vec<(usize, S)>, S)>,
) -> StandardForm<S> {
    // pass 1: count flipped slacks so column labels can be assigned up front
    let mut flipped = Vec::with_capacity(rows_in.len());
    for (_, rel, rhs) in &rows_in {
        let neg_rhs = match rel {
            Relation::Le => *rhs < S::zero(),
            Relation::Ge => !(*rhs < S::zero()) && !rhs.is_zero(),
        };
        flipped.push(neg_rhs);
    }
    let n_slacks = rows_in.len();
    let n_flipped = flipped.iter().filter(|&&f| f).count();
    let n_cols = n + n_flipped;
    let artificial_from = n + n_slacks;

    // columns: structural variables first, then the slacks of flipped rows
    let mut col_label: Vec<usize> = (0..n).collect();
    let mut flipped_col_of_slack = vec![usize::MAX; n_slacks];
    for (r, &f) in flipped.iter().enumerate() {
        if f {
            flipped_col_of_slack[r] = col_label.len();
            col_label.push(n + r);
        }
    }

    let mut rows = Vec::with_capacity(rows_in.len() + equalities.len());
    let mut rhs_out = Vec::with_capacity(rows.capacity());
    let mut basic = Vec::with_capacity(rows.capacity());
    let mut next_artificial = artificial_from;

    for (r, (coeffs, rel, rhs)) in rows_in.into_iter().enumerate() {
        // normalize to a <= row first
        let (mut dense, mut b) = (vec![S::zero(); n_cols], rhs);
        let negate_rel = matches!(rel, Relation::Ge);
        for (i, c) in coeffs {
            let v = if negate_rel { -c } else { c };
            dense[i] = dense[i].clone() + v;
        }
        if negate_rel {
            b = -b;
        }
        if b < S::zero() {
            // flip the whole row; the slack keeps coefficient -1 and starts
            // nonbasic while an artificial becomes basic
            for v in dense.iter_mut() {
                *v = -std::mem::replace(v, S::zero());
            }
            b = -b;
            dense[flipped_col_of_slack[r]] = -S::one();
            basic.push(next_artificial);
            next_artificial += 1;
        } else {
            basic.push(n + r); // slack basic
        }
        rows.push(dense);
        rhs_out.push(b);
    }
    for (coeffs, rhs) in equalities {
        let mut dense = vec![S::zero(); n_cols];
        let negate = rhs < S::zero();
        for (i, c) in coeffs {
            let v = if negate { -c } else { c };
            dense[i] = dense[i].clone() + v;
        }
        rows.push(dense);
        rhs_out.push(if negate { -rhs } else { rhs });
        basic.push(next_artificial);
        next_artificial += 1;
    }

    let phase2_cost = col_label
        .iter()
        .map(|&l| {
            if l < n {
                objective[l].clone()
            } else {
                S::zero()
            }
        })
        .collect();

    StandardForm {
        n_structural: n,
        rows,
        rhs: rhs_out,
        basic,
        col_label,
        artificial_from,
        phase2_cost,
    }
}

struct SimplexOutcome<S> {
    status: LpStatus,
    value: Option<S>,
    point: Vec<S>,
    iterations: usize,
}

/// Runs two-phase simplex on a standard form; `point` is over the structural
/// variables.
fn simplex<S: SimplexScalar>(mut sf: StandardForm<S>, max_pivots: usize) -> SimplexOutcome<S> {
    let n_cols = sf.col_label.len();
    let mut dead = vec![false; n_cols];
    let mut iterations = 0usize;

    // objective rows in reduced form: z = value + sum d[j] * x_col[j]
    let mut d2 = sf.phase2_cost.clone();
    let mut z2 = S::zero();
    let mut d1 = vec![S::zero(); n_cols];
    let mut z1 = S::zero();
    let art_from = sf.artificial_from;
    for (r, &b) in sf.basic.iter().enumerate() {
        if b >= art_from {
            for (j, dj) in d1.iter_mut().enumerate() {
                *dj = dj.clone() - sf.rows[r][j].clone();
            }
            z1 = z1 + sf.rhs[r].clone();
        }
    }

    let needs_phase1 = sf.basic.iter().any(|&b| b >= art_from);

    for phase in [1u8, 2] {
        if phase == 1 && !needs_phase1 {
            continue;
        }
        loop {
            let d = if phase == 1 { &d1 } else { &d2 };
            // Bland: entering column with negative reduced cost and the
            // smallest variable label
            let mut entering: Option<(usize, usize)> = None; // (label, col)
            for (j, dj) in d.iter().enumerate() {
                if dead[j] || sf.col_label[j] >= art_from {
                    continue;
                }
                if dj.clone() < -S::tol() {
                    let label = sf.col_label[j];
                    if entering.map_or(true, |(best, _)| label < best) {
                        entering = Some((label, j));
                    }
                }
            }
            let Some((_, e)) = entering else {
                break; // phase optimal
            };

            // ratio test; ties go to the smallest basic label
            let mut leave: Option<(S, usize, usize)> = None; // (ratio, label, row)
            for r in 0..sf.rows.len() {
                let t = sf.rows[r][e].clone();
                if t > S::tol() {
                    let ratio = sf.rhs[r].clone() / t;
                    let label = sf.basic[r];
                    let better = match &leave {
                        None => true,
                        Some((best, best_label, _)) => {
                            ratio < *best || (ratio == *best && label < *best_label)
                        }
                    };
                    if better {
                        leave = Some((ratio, label, r));
                    }
                }
            }
            let Some((_, _, r)) = leave else {
                if phase == 1 {
                    // phase-1 objective is bounded below; no pivot row means
                    // numerically stuck, treat as infeasible
                    return SimplexOutcome {
                        status: LpStatus::Infeasible,
                        value: None,
                        point: Vec::new(),
                        iterations,
                    };
                }
                return SimplexOutcome {
                    status: LpStatus::Unbounded,
                    value: None,
                    point: Vec::new(),
                    iterations,
                };
            };

            if iterations >= max_pivots {
                return SimplexOutcome {
                    status: LpStatus::IterationLimit,
                    value: None,
                    point: Vec::new(),
                    iterations,
                };
            }
            iterations += 1;
            pivot(&mut sf, &mut d1, &mut z1, &mut d2, &mut z2, r, e);
            if sf.col_label[e] >= art_from {
                dead[e] = true; // artificials never re-enter
            }
        }

        if phase == 1 {
            if z1 > S::tol() {
                return SimplexOutcome {
                    status: LpStatus::Infeasible,
                    value: None,
                    point: Vec::new(),
                    iterations,
                };
            }
            // drive leftover artificials out of the basis or drop their rows
            let mut r = 0;
            while r < sf.rows.len() {
                if sf.basic[r] >= art_from {
                    let col = (0..n_cols).find(|&j| {
                        !dead[j]
                            && sf.col_label[j] < art_from
                            && (sf.rows[r][j].clone() > S::tol()
                                || sf.rows[r][j].clone() < -S::tol())
                    });
                    match col {
                        Some(e) => {
                            iterations += 1;
                            pivot(&mut sf, &mut d1, &mut z1, &mut d2, &mut z2, r, e);
                            dead[e] = true;
                        }
                        None => {
                            // redundant constraint
                            sf.rows.remove(r);
                            sf.rhs.remove(r);
                            sf.basic.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }
    }

    let mut point = vec![S::zero(); sf.n_structural];
    for (r, &b) in sf.basic.iter().enumerate() {
        if b < sf.n_structural {
            point[b] = sf.rhs[r].clone();
        }
    }
    SimplexOutcome {
        status: LpStatus::Optimal,
        value: Some(z2),
        point,
        iterations,
    }
}

fn pivot<S: SimplexScalar>(
    sf: &mut StandardForm<S>,
    d1: &mut [S],
    z1: &mut S,
    d2: &mut [S],
    z2: &mut S,
    r: usize,
    e: usize,
) {
    let p = sf.rows[r][e].clone();
    let n_cols = sf.col_label.len();
    // normalize the pivot row
    for j in 0..n_cols {
        if j != e {
            sf.rows[r][j] = sf.rows[r][j].clone() / p.clone();
        }
    }
    sf.rhs[r] = sf.rhs[r].clone() / p.clone();
    sf.rows[r][e] = S::one() / p.clone();

    for i in 0..sf.rows.len() {
        if i == r {
            continue;
        }
        let factor = sf.rows[i][e].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..n_cols {
            if j != e {
                let delta = factor.clone() * sf.rows[r][j].clone();
                sf.rows[i][j] = sf.rows[i][j].clone() - delta;
            }
        }
        sf.rhs[i] = sf.rhs[i].clone() - factor.clone() * sf.rhs[r].clone();
        sf.rows[i][e] = -(factor / p.clone());
    }
    for (d, z) in [(&mut *d1, &mut *z1), (&mut *d2, &mut *z2)] {
        let factor = d[e].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..n_cols {
            if j != e {
                let delta = factor.clone() * sf.rows[r][j].clone();
                d[j] = d[j].clone() - delta;
            }
        }
        *z = (*z).clone() + factor.clone() * sf.rhs[r].clone();
        d[e] = -(factor / p.clone());
    }
    std::mem::swap(&mut sf.basic[r], &mut sf.col_label[e]);
}

/// Solves an f64 problem. Variable lower bounds are shifted away and finite
/// upper bounds become extra rows before the simplex runs.
pub fn solve_lp(p: &LpProblem) -> LpSolution {
    assert_eq!(p.lower.len(), p.n_vars);
    assert_eq!(p.upper.len(), p.n_vars);
    let mut rows: Vec<(Vec<(usize, f64)>, Relation, f64)> = Vec::new();
    let shift_constant: f64 = p.objective.iter().zip(&p.lower).map(|(c, l)| c * l).sum();
    for (i, u) in p.upper.iter().enumerate() {
        if let Some(u) = u {
            if *u < p.lower[i] {
                return LpSolution {
                    status: LpStatus::Infeasible,
                    value: f64::NAN,
                    point: Vec::new(),
                    iterations: 0,
                };
            }
            rows.push((vec![(i, 1.0)], Relation::Le, u - p.lower[i]));
        }
    }
    for ineq in &p.constraints.rows {
        let shift: f64 = ineq.coeffs.iter().map(|&(i, c)| c * p.lower[i]).sum();
        rows.push((ineq.coeffs.clone(), ineq.rel, ineq.rhs - shift));
    }
    let equalities: Vec<(Vec<(usize, f64)>, f64)> = p
        .equalities
        .iter()
        .map(|(coeffs, rhs)| {
            let shift: f64 = coeffs.iter().map(|&(i, c)| c * p.lower[i]).sum();
            (coeffs.clone(), rhs - shift)
        })
        .collect();

    let sf = build_standard_form(p.n_vars, &p.objective, rows, equalities);
    let out = simplex(sf, p.max_pivots);
    match out.status {
        LpStatus::Optimal => {
            let point: Vec<f64> = out.point.iter().zip(&p.lower).map(|(y, l)| y + l).collect();
            let solution = LpSolution {
                status: LpStatus::Optimal,
                value: out.value.unwrap() + shift_constant,
                point,
                iterations: out.iterations,
            };
            debug_assert!(optimal_solution_consistent(p, &solution));
            solution
        }
        status => LpSolution {
            status,
            value: f64::NAN,
            point: Vec::new(),
            iterations: out.iterations,
        },
    }
}

/// Feasibility and objective consistency of a reported optimum, checked in
/// debug builds on every solve.
fn optimal_solution_consistent(p: &LpProblem, sol: &LpSolution) -> bool {
    let bounds_ok = sol.point.iter().enumerate().all(|(i, &x)| {
        x >= p.lower[i] - 1e-7 && p.upper[i].map_or(true, |u| x <= u + 1e-7)
    });
    let eq_ok = p.equalities.iter().all(|(coeffs, rhs)| {
        let lhs: f64 = coeffs.iter().map(|&(i, c)| c * sol.point[i]).sum();
        (lhs - rhs).abs() <= 1e-7
    });
    let value: f64 = p.objective.iter().zip(&sol.point).map(|(c, x)| c * x).sum();
    bounds_ok
        && eq_ok
        && p.constraints.max_violation(&sol.point) <= 1e-7
        && (value - sol.value).abs() <= 1e-9 * (1.0 + value.abs())
}

/// Solves a problem with exact rational data; all variables are
/// nonnegative and unbounded above.
pub fn solve_lp_rational(p: &RationalLpProblem) -> RationalLpSolution {
    let sf = build_standard_form(
        p.n_vars,
        &p.objective,
        p.constraints.clone(),
        p.equalities.clone(),
    );
    let out = simplex(sf, p.max_pivots);
    RationalLpSolution {
        status: out.status,
        value: out.value.filter(|_| out.status == LpStatus::Optimal),
        point: out.point,
        iterations: out.iterations,
    }
}

/// Convenience conversion for building rational problems from integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn ratio_from_f64(v: f64) -> BigRational {
    BigRational::from_f64(v).expect("finite value")
}

pub fn ratio_to_f64(v: &BigRational) -> f64 {
    v.to_f64().expect("representable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn check_solution(p: &LpProblem, sol: &LpSolution) {
        assert_eq!(sol.status, LpStatus::Optimal);
        for (i, x) in sol.point.iter().enumerate() {
            assert!(*x >= p.lower[i] - 1e-7);
            if let Some(u) = p.upper[i] {
                assert!(*x <= u + 1e-7);
            }
        }
        assert!(p.constraints.max_violation(&sol.point) <= 1e-7);
        for (coeffs, rhs) in &p.equalities {
            let lhs: f64 = coeffs.iter().map(|&(i, c)| c * sol.point[i]).sum();
            assert!((lhs - rhs).abs() <= 1e-7);
        }
        let value: f64 = p.objective.iter().zip(&sol.point).map(|(c, x)| c * x).sum();
        assert!((value - sol.value).abs() <= 1e-9 * (1.0 + value.abs()));
    }

    #[test]
    fn minimize_above_lower_bound() {
        let mut p = LpProblem::new(1, vec![1.0]);
        p.constraints.push(vec![(0, 1.0)], Relation::Ge, 3.0);
        let sol = solve_lp(&p);
        check_solution(&p, &sol);
        assert!((sol.value - 3.0).abs() < 1e-9);
        assert!((sol.point[0] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn unbounded_direction() {
        let p = LpProblem::new(1, vec![-1.0]);
        assert_eq!(solve_lp(&p).status, LpStatus::Unbounded);
    }

    #[test]
    fn single_check_polytope_matches_vertex_enumeration() {
        // feasible set: conv{000, 110, 101, 011}; enumerate the vertices as
        // the oracle and compare the LP optimum for several objectives
        use crate::codes::Code;
        use crate::geometry::polytope_inequalities;
        let code = Code::from_row_supports(3, vec![vec![0, 1, 2]]).unwrap();
        let sys = polytope_inequalities(&code).unwrap();
        let vertices = [
            [0.0, 0.0, 0.0],
            [1.0, 1.0, 0.0],
            [1.0, 0.0, 1.0],
            [0.0, 1.0, 1.0],
        ];
        for gamma in [
            [1.0, 1.0, -1.0],
            [-1.0, -1.0, 3.0],
            [2.0, -1.0, -1.0],
            [1.0, 2.0, 3.0],
        ] {
            let oracle = vertices
                .iter()
                .map(|v| v.iter().zip(&gamma).map(|(x, g)| x * g).sum::<f64>())
                .fold(f64::INFINITY, f64::min);
            let mut p = LpProblem::new(3, gamma.to_vec());
            p.constraints = sys.clone();
            let sol = solve_lp(&p);
            check_solution(&p, &sol);
            assert!((sol.value - oracle).abs() < 1e-9, "gamma {gamma:?}");
        }
    }

    #[test]
    fn single_check_mixed_sign_objective_is_zero() {
        use crate::codes::Code;
        use crate::geometry::polytope_inequalities;
        let code = Code::from_row_supports(3, vec![vec![0, 1, 2]]).unwrap();
        let mut p = LpProblem::new(3, vec![1.0, 1.0, -1.0]);
        p.constraints = polytope_inequalities(&code).unwrap();
        let sol = solve_lp(&p);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value, 0.0);
    }

    #[test]
    fn equality_constraint() {
        let mut p = LpProblem::new(2, vec![1.0, 2.0]);
        p.equalities.push((vec![(0, 1.0), (1, 1.0)], 2.0));
        let sol = solve_lp(&p);
        check_solution(&p, &sol);
        assert!((sol.value - 2.0).abs() < 1e-9);
        assert!((sol.point[0] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_box() {
        let mut p = LpProblem::new(1, vec![1.0]);
        p.constraints.push(vec![(0, 1.0)], Relation::Le, -1.0);
        assert_eq!(solve_lp(&p).status, LpStatus::Infeasible);
    }

    #[test]
    fn upper_bound_drives_maximization() {
        let mut p = LpProblem::new(1, vec![-1.0]);
        p.upper[0] = Some(1.0);
        let sol = solve_lp(&p);
        check_solution(&p, &sol);
        assert!((sol.value + 1.0).abs() < 1e-9);
    }

    #[test]
    fn nonzero_lower_bounds_are_shifted() {
        let mut p = LpProblem::new(2, vec![1.0, 1.0]);
        p.lower = vec![-2.0, 1.0];
        p.constraints
            .push(vec![(0, 1.0), (1, 1.0)], Relation::Ge, 0.5);
        let sol = solve_lp(&p);
        check_solution(&p, &sol);
        assert!((sol.value - 0.5).abs() < 1e-9); // x0 = -0.5, x1 = 1
        assert!((sol.point[0] + 0.5).abs() < 1e-9);
    }

    #[test]
    fn iteration_limit_is_reported() {
        // Bland enters x0 first, so the optimum (which needs x1) takes a
        // second pivot the budget does not allow
        let mut p = LpProblem::new(2, vec![-1.0, -3.0]);
        p.constraints
            .push(vec![(0, 1.0), (1, 1.0)], Relation::Le, 1.0);
        p.constraints
            .push(vec![(0, 1.0), (1, 2.0)], Relation::Le, 2.0);
        p.max_pivots = 1;
        assert_eq!(solve_lp(&p).status, LpStatus::IterationLimit);
    }

    #[test]
    fn beales_cycling_example_terminates() {
        // classic Dantzig-rule cycling instance; Bland must finish at -1/20
        let mut p = LpProblem::new(4, vec![-0.75, 150.0, -0.02, 6.0]);
        p.constraints.push(
            vec![(0, 0.25), (1, -60.0), (2, -1.0 / 25.0), (3, 9.0)],
            Relation::Le,
            0.0,
        );
        p.constraints.push(
            vec![(0, 0.5), (1, -90.0), (2, -1.0 / 50.0), (3, 3.0)],
            Relation::Le,
            0.0,
        );
        p.constraints.push(vec![(2, 1.0)], Relation::Le, 1.0);
        let sol = solve_lp(&p);
        check_solution(&p, &sol);
        assert!((sol.value + 0.05).abs() < 1e-9);
    }

    #[test]
    fn deterministic_solves() {
        let mut p = LpProblem::new(3, vec![1.0, -2.0, 0.5]);
        p.constraints
            .push(vec![(0, 1.0), (1, 1.0), (2, 1.0)], Relation::Le, 4.0);
        p.constraints
            .push(vec![(0, -1.0), (1, 2.0)], Relation::Le, 3.0);
        p.constraints
            .push(vec![(1, 1.0), (2, -1.0)], Relation::Ge, -2.0);
        let a = solve_lp(&p);
        let b = solve_lp(&p);
        assert_eq!(a.status, b.status);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.iterations, b.iterations);
        assert!(a
            .point
            .iter()
            .zip(&b.point)
            .all(|(x, y)| x.to_bits() == y.to_bits()));
    }

    #[test]
    fn optimum_below_sampled_feasible_points() {
        // 50 random LPs whose feasible set contains 20 known points: the
        // reported minimum may not exceed any sampled objective
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..50 {
            let n = rng.random_range(2..6);
            let samples: Vec<Vec<f64>> = (0..20)
                .map(|_| (0..n).map(|_| rng.random::<f64>()).collect())
                .collect();
            let mut p =
                LpProblem::new(n, (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect());
            for i in 0..n {
                p.upper[i] = Some(1.0);
            }
            for _ in 0..8 {
                let coeffs: Vec<(usize, f64)> = (0..n)
                    .map(|i| (i, rng.random::<f64>() * 2.0 - 1.0))
                    .collect();
                let bound = samples
                    .iter()
                    .map(|s| coeffs.iter().map(|&(i, c)| c * s[i]).sum::<f64>())
                    .fold(f64::NEG_INFINITY, f64::max);
                p.constraints.push(coeffs, Relation::Le, bound);
            }
            let sol = solve_lp(&p);
            check_solution(&p, &sol);
            for s in &samples {
                let obj: f64 = p.objective.iter().zip(s).map(|(c, x)| c * x).sum();
                assert!(sol.value <= obj + 1e-7);
            }
        }
    }

    #[test]
    fn rational_solver_is_exact() {
        // min x0 + 2 x1 subject to x0 + x1 >= 1/3, x1 <= 1/7
        let mut p = RationalLpProblem::new(2, vec![ratio(1, 1), ratio(2, 1)]);
        p.constraints.push((
            vec![(0, ratio(1, 1)), (1, ratio(1, 1))],
            Relation::Ge,
            ratio(1, 3),
        ));
        p.constraints
            .push((vec![(1, ratio(1, 1))], Relation::Le, ratio(1, 7)));
        let sol = solve_lp_rational(&p);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value.unwrap(), ratio(1, 3)); // all mass on x0
        assert_eq!(sol.point[0], ratio(1, 3));
        assert_eq!(sol.point[1], ratio(0, 1));
    }

    #[test]
    fn rational_unbounded_and_infeasible() {
        let p = RationalLpProblem::new(1, vec![ratio(-1, 1)]);
        assert_eq!(solve_lp_rational(&p).status, LpStatus::Unbounded);

        let mut p = RationalLpProblem::new(1, vec![ratio(1, 1)]);
        p.constraints
            .push((vec![(0, ratio(1, 1))], Relation::Le, ratio(-1, 1)));
        assert_eq!(solve_lp_rational(&p).status, LpStatus::Infeasible);
    }

    #[test]
    fn rational_matches_float_on_shared_instance() {
        let mut pf = LpProblem::new(3, vec![1.0, -1.0, 0.25]);
        pf.constraints
            .push(vec![(0, 1.0), (1, 1.0)], Relation::Le, 1.0);
        pf.constraints
            .push(vec![(1, 1.0), (2, 1.0)], Relation::Le, 0.5);
        pf.constraints
            .push(vec![(0, 1.0), (2, -1.0)], Relation::Ge, -0.25);
        let f = solve_lp(&pf);

        let mut pr = RationalLpProblem::new(3, vec![ratio(1, 1), ratio(-1, 1), ratio(1, 4)]);
        pr.constraints.push((
            vec![(0, ratio(1, 1)), (1, ratio(1, 1))],
            Relation::Le,
            ratio(1, 1),
        ));
        pr.constraints.push((
            vec![(1, ratio(1, 1)), (2, ratio(1, 1))],
            Relation::Le,
            ratio(1, 2),
        ));
        pr.constraints.push((
            vec![(0, ratio(1, 1)), (2, ratio(-1, 1))],
            Relation::Ge,
            ratio(-1, 4),
        ));
        let r = solve_lp_rational(&pr);
        assert_eq!(f.status, LpStatus::Optimal);
        assert_eq!(r.status, LpStatus::Optimal);
        assert!((f.value - ratio_to_f64(&r.value.unwrap())).abs() < 1e-12);
    }
}
