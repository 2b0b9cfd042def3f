//! 2-neighborhood threshold bounds for the BSC: sign-pattern orbits on the
//! depth-2 tree of a girth-six regular Tanner graph, the probability-weighted
//! LP over the per-orbit assignment values alpha, and the bisection for the
//! resulting threshold upper bound.
//!
//! An orbit is a (center sign, branch-count multiset) class: on a girth-six
//! (w_col, w_row)-regular graph the 2-neighborhood of a variable node is a
//! tree with w_col check branches of w_row - 1 leaves each, and an assignment
//! invariant under the tree symmetries depends only on the center sign and
//! the multiset of negative-leaf counts per branch.
//!
//! Two constraint systems describe "the expanded vector lies in the
//! fundamental cone for every sign pattern":
//!
//! * the exhaustive system enumerates every joint configuration of w_row
//!   variable types around one check and emits the pivot inequality for each
//!   (`build_cone_constraints`), which is transparent but combinatorial;
//! * the reduced system introduces one auxiliary variable m(s, c) per
//!   (sign, on-check count) pair, constrained as a lower bound on every
//!   compatible alpha, and writes the pivot inequality against those minima
//!   (`Bound2Setup`). Minimization is separable across the other w_row - 1
//!   variables on the check, so projecting out the auxiliaries gives exactly
//!   the exhaustive feasible set at a tiny fraction of its size.
//!
//! The bound computations default to the reduced system; the test suite
//! checks the two systems' optima agree where the exhaustive one is
//! tractable.

use crate::channels::LlrVector;
use crate::codes::Code;
use crate::geometry::{FractionalVector, LinearSystem, Relation};
use crate::lp::{
    ratio_from_f64, solve_lp, solve_lp_rational, LpProblem, LpSolution, LpStatus,
    RationalLpProblem, RationalLpSolution,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Cap on the number of orbits a pair may generate.
pub const ORBIT_CAP: u64 = 100_000;
/// Cap on joint configurations for the exhaustive constraint generator.
pub const JOINT_CLASS_CAP: u64 = 1_000_000;
/// LP optimum below this counts as a certified negative.
pub const NEGATIVITY_THRESHOLD: f64 = -1e-9;
/// Default bisection tolerance on epsilon.
pub const DEFAULT_EPS_TOL: f64 = 1e-4;
const MONOTONICITY_GRID: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub enum Bounds2Error {
    OrbitCapExceeded {
        w_col: usize,
        w_row: usize,
        orbits: u64,
        cap: u64,
    },
    JointClassCapExceeded {
        w_col: usize,
        w_row: usize,
        classes: u64,
        cap: u64,
    },
    Lp(LpStatus),
    CodeMismatch {
        reason: String,
    },
}

impl fmt::Display for Bounds2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounds2Error::OrbitCapExceeded {
                w_col,
                w_row,
                orbits,
                cap,
            } => write!(
                f,
                "pair ({w_col},{w_row}) needs {orbits} orbits, above the cap {cap}"
            ),
            Bounds2Error::JointClassCapExceeded {
                w_col,
                w_row,
                classes,
                cap,
            } => write!(
                f,
                "pair ({w_col},{w_row}) needs {classes} joint classes, above the cap {cap}"
            ),
            Bounds2Error::Lp(status) => write!(f, "LP solver failed with status {status:?}"),
            Bounds2Error::CodeMismatch { reason } => write!(f, "{reason}"),
        }
    }
}

impl std::error::Error for Bounds2Error {}

/// A symmetry class of local LLR sign patterns on the 2-neighborhood tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternOrbit {
    pub center_negative: bool,
    /// Nondecreasing multiset of negative-leaf counts, one entry per check
    /// branch; values in 0..w_row-1.
    pub branch_counts: Vec<u8>,
    pub orbit_index: usize,
    /// Number of ordered branch labelings in the class.
    pub multiplicity: u64,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> u64 {
    (2..=n).product::<u64>().max(1)
}

/// All nondecreasing length-k vectors over 0..n_values.
fn multisets(k: usize, n_values: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; k];
    fn rec(out: &mut Vec<Vec<u8>>, current: &mut Vec<u8>, pos: usize, min: u8, n_values: u8) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in min..n_values {
            current[pos] = v;
            rec(out, current, pos + 1, v, n_values);
        }
    }
    if k == 0 {
        out.push(Vec::new());
    } else {
        rec(&mut out, &mut current, 0, 0, n_values as u8);
    }
    out
}

fn multiset_multiplicity(counts: &[u8]) -> u64 {
    let mut mult = factorial(counts.len() as u64);
    let mut run = 1u64;
    for w in counts.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            mult /= factorial(run);
            run = 1;
        }
    }
    mult / factorial(run)
}

/// The orbit list for a degree pair, with an index for pattern lookup.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub w_col: usize,
    pub w_row: usize,
    pub orbits: Vec<PatternOrbit>,
    /// Index of the normalization orbit: all LLRs in the neighborhood
    /// negative (center negative, every branch count w_row - 1).
    pub all_negative: usize,
    index: HashMap<(bool, Vec<u8>), usize>,
}

impl OrbitTable {
    pub fn orbit_of(&self, center_negative: bool, sorted_counts: &[u8]) -> usize {
        self.index[&(center_negative, sorted_counts.to_vec())]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Enumerates all 2 * C(w_col + w_row - 1, w_col) orbits: positive centers
/// first, branch multisets in lexicographic order.
pub fn enumerate_orbits(w_col: usize, w_row: usize) -> Result<OrbitTable, Bounds2Error> {
    assert!(w_col >= 2 && w_row >= 2);
    let count = 2 * binomial((w_col + w_row - 1) as u64, w_col as u64);
    if count > ORBIT_CAP {
        return Err(Bounds2Error::OrbitCapExceeded {
            w_col,
            w_row,
            orbits: count,
            cap: ORBIT_CAP,
        });
    }
    let mut orbits = Vec::with_capacity(count as usize);
    let mut index = HashMap::with_capacity(count as usize);
    for center_negative in [false, true] {
        for counts in multisets(w_col, w_row) {
            let orbit_index = orbits.len();
            index.insert((center_negative, counts.clone()), orbit_index);
            orbits.push(PatternOrbit {
                center_negative,
                multiplicity: multiset_multiplicity(&counts),
                branch_counts: counts,
                orbit_index,
            });
        }
    }
    let all_negative = index[&(true, vec![(w_row - 1) as u8; w_col])];
    Ok(OrbitTable {
        w_col,
        w_row,
        orbits,
        all_negative,
        index,
    })
}

/// Probability that a variable node on a girth-six graph realizes the orbit
/// under i.i.d. BSC signs: center-sign probability times the multinomial
/// branch term.
pub fn orbit_probability(orbit: &PatternOrbit, eps: f64, w_row: usize) -> f64 {
    let leaves = (w_row - 1) as u64;
    let mut p = if orbit.center_negative {
        eps
    } else {
        1.0 - eps
    };
    p *= orbit.multiplicity as f64;
    for &c in &orbit.branch_counts {
        p *= binomial(leaves, c as u64) as f64
            * eps.powi(c as i32)
            * (1.0 - eps).powi((leaves - c as u64) as i32);
    }
    p
}

fn orbit_probability_rational(
    orbit: &PatternOrbit,
    eps: &BigRational,
    w_row: usize,
) -> BigRational {
    let leaves = (w_row - 1) as u64;
    let one_minus = BigRational::one() - eps.clone();
    let mut p = if orbit.center_negative {
        eps.clone()
    } else {
        one_minus.clone()
    };
    p *= BigRational::from_integer(orbit.multiplicity.into());
    for &c in &orbit.branch_counts {
        p *= BigRational::from_integer(binomial(leaves, c as u64).into());
        for _ in 0..c {
            p *= eps.clone();
        }
        for _ in 0..(leaves - c as u64) {
            p *= one_minus.clone();
        }
    }
    p
}

/// A variable "type" around a check: its sign and the branch counts of its
/// other w_col - 1 checks. The count on the shared check is determined by
/// the joint sign configuration.
fn variable_types(w_col: usize, w_row: usize) -> Vec<(bool, Vec<u8>)> {
    let mut types = Vec::new();
    for negative in [false, true] {
        for other in multisets(w_col - 1, w_row) {
            types.push((negative, other));
        }
    }
    types
}

fn orbit_for_type(table: &OrbitTable, ty: &(bool, Vec<u8>), on_check: u8) -> usize {
    let mut counts = ty.1.clone();
    counts.push(on_check);
    counts.sort_unstable();
    table.orbit_of(ty.0, &counts)
}

/// Exhaustively enumerates every joint configuration of w_row variable
/// types around one check and emits each pivot's cone inequality over the
/// orbit variables, deduplicated by canonical coefficient pattern; the
/// alpha >= 0 rows come first. Returns the system and the number of joint
/// classes visited.
pub fn build_cone_constraints(
    w_col: usize,
    w_row: usize,
) -> Result<(LinearSystem, u64), Bounds2Error> {
    build_cone_constraints_capped(w_col, w_row, JOINT_CLASS_CAP)
}

pub fn build_cone_constraints_capped(
    w_col: usize,
    w_row: usize,
    cap: u64,
) -> Result<(LinearSystem, u64), Bounds2Error> {
    let table = enumerate_orbits(w_col, w_row)?;
    let types = variable_types(w_col, w_row);
    let n_types = types.len() as u64;
    let classes = binomial(n_types + w_row as u64 - 1, w_row as u64);
    if classes > cap {
        return Err(Bounds2Error::JointClassCapExceeded {
            w_col,
            w_row,
            classes,
            cap,
        });
    }

    let mut sys = LinearSystem::new(table.len());
    for i in 0..table.len() {
        sys.push(vec![(i, 1.0)], Relation::Ge, 0.0);
    }

    let mut seen = HashSet::new();
    let mut class_count = 0u64;
    for joint in multisets(w_row, types.len()) {
        class_count += 1;
        let neg_total: u8 = joint.iter().map(|&t| types[t as usize].0 as u8).sum();
        // orbit realized by each slot of the configuration
        let slot_orbits: Vec<usize> = joint
            .iter()
            .map(|&t| {
                let ty = &types[t as usize];
                let on_check = neg_total - ty.0 as u8;
                orbit_for_type(&table, ty, on_check)
            })
            .collect();
        let mut last_pivot = usize::MAX;
        for (slot, &pivot_orbit) in slot_orbits.iter().enumerate() {
            if joint[slot] as usize == last_pivot {
                continue; // same type pivoted already
            }
            last_pivot = joint[slot] as usize;
            let mut coeff: HashMap<usize, f64> = HashMap::new();
            *coeff.entry(pivot_orbit).or_insert(0.0) += 1.0;
            for (other_slot, &orbit) in slot_orbits.iter().enumerate() {
                if other_slot != slot {
                    *coeff.entry(orbit).or_insert(0.0) -= 1.0;
                }
            }
            let mut row: Vec<(usize, f64)> = coeff.into_iter().filter(|&(_, c)| c != 0.0).collect();
            if row.is_empty() {
                continue;
            }
            row.sort_unstable_by_key(|&(i, _)| i);
            let signature: Vec<(usize, i64)> = row.iter().map(|&(i, c)| (i, c as i64)).collect();
            if seen.insert(signature) {
                sys.push(row, Relation::Le, 0.0);
            }
        }
    }
    Ok((sys, class_count))
}

/// The reduced constraint system and everything reused across epsilon
/// evaluations for one degree pair.
#[derive(Debug, Clone)]
pub struct Bound2Setup {
    pub table: OrbitTable,
    /// Constraints over n_orbits alpha variables followed by n_auxepsilon
    /// auxiliary minimum variables.
    pub system: LinearSystem,
    pub n_aux: usize,
}

impl Bound2Setup {
    /// Builds the reduced system: variables alpha (per orbit) and m(s, c)
    /// for s in {+,-}, c in 0..w_row-1, with
    ///   m(s, c) <= alpha(s, O + {c})            for every branch multiset O,
    ///   alpha(s', O' + {c'}) <= k' m(-, k-1) + (w_row-1-k') m(+, k)
    ///     for every total negative count k, pivot sign s' and multiset O',
    ///     where k' = k - [s' negative].
    pub fn new(w_col: usize, w_row: usize) -> Result<Self, Bounds2Error> {
        let table = enumerate_orbits(w_col, w_row)?;
        let n_orbits = table.len();
        let aux = |negative: bool, c: usize| n_orbits + 2 * c + negative as usize;
        let n_aux = 2 * w_row;
        let mut sys = LinearSystem::new(n_orbits + n_aux);
        for i in 0..n_orbits {
            sys.push(vec![(i, 1.0)], Relation::Ge, 0.0);
        }
        let others = multisets(w_col - 1, w_row);
        for c in 0..w_row {
            for negative in [false, true] {
                for o in &others {
                    let orbit = orbit_for_type(&table, &(negative, o.clone()), c as u8);
                    sys.push(
                        vec![(aux(negative, c), 1.0), (orbit, -1.0)],
                        Relation::Le,
                        0.0,
                    );
                }
            }
        }
        for k in 0..=w_row {
            for pivot_negative in [false, true] {
                if (pivot_negative && k == 0) || (!pivot_negative && k == w_row) {
                    continue;
                }
                let k_others = k - pivot_negative as usize; // negatives among the others
                let on_check = k_others as u8; // pivot's count on this check
                for o in &others {
                    let pivot_orbit =
                        orbit_for_type(&table, &(pivot_negative, o.clone()), on_check);
                    let mut row = vec![(pivot_orbit, 1.0)];
                    if k_others > 0 {
                        row.push((aux(true, k - 1), -(k_others as f64)));
                    }
                    let positives = w_row - 1 - k_others;
                    if positives > 0 {
                        row.push((aux(false, k), -(positives as f64)));
                    }
                    sys.push(row, Relation::Le, 0.0);
                }
            }
        }
        Ok(Bound2Setup {
            table,
            system: sys,
            n_aux,
        })
    }

    pub fn n_orbits(&self) -> usize {
        self.table.len()
    }
}

fn objective_coefficients(setup: &Bound2Setup, eps: f64) -> Vec<f64> {
    let g = ((1.0 - eps) / eps).ln();
    let mut obj = vec![0.0; setup.n_orbits() + setup.n_aux];
    for orbit in &setup.table.orbits {
        let sign = if orbit.center_negative { -1.0 } else { 1.0 };
        obj[orbit.orbit_index] = sign * g * orbit_probability(orbit, eps, setup.table.w_row);
    }
    obj
}

fn sign_only_equalities(setup: &Bound2Setup) -> Vec<(Vec<(usize, f64)>, f64)> {
    let mut eqs = Vec::new();
    let mut first: [Option<usize>; 2] = [None, None];
    for orbit in &setup.table.orbits {
        let slot = orbit.center_negative as usize;
        match first[slot] {
            None => first[slot] = Some(orbit.orbit_index),
            Some(anchor) => {
                eqs.push((vec![(anchor, 1.0), (orbit.orbit_index, -1.0)], 0.0));
            }
        }
    }
    eqs
}

fn objective_min_with(setup: &Bound2Setup, eps: f64, sign_only: bool) -> LpSolution {
    let mut p = LpProblem::new(
        setup.n_orbits() + setup.n_aux,
        objective_coefficients(setup, eps),
    );
    p.constraints = setup.system.clone();
    p.equalities
        .push((vec![(setup.table.all_negative, 1.0)], 1.0));
    if sign_only {
        p.equalities.extend(sign_only_equalities(setup));
    }
    solve_lp(&p)
}

/// Minimizes the expected per-symbol cost sum over orbits of
/// p(orbit) gamma_center alpha(orbit), subject to the cone constraint system
/// and the normalization alpha(all-negative) = 1. An unbounded outcome also
/// certifies negativity (the normalization survives along the ray).
pub fn bound2_objective_min(
    w_col: usize,
    w_row: usize,
    eps: f64,
) -> Result<LpSolution, Bounds2Error> {
    let setup = Bound2Setup::new(w_col, w_row)?;
    let sol = objective_min_with(&setup, eps, false);
    match sol.status {
        LpStatus::Optimal | LpStatus::Unbounded => Ok(sol),
        status => Err(Bounds2Error::Lp(status)),
    }
}

/// Exact-rational twin of `bound2_objective_min`, with the objective scaled
/// by 1/G (G > 0 for eps < 1/2, so the optimum's sign is unchanged).
pub fn bound2_objective_min_rational(
    w_col: usize,
    w_row: usize,
    eps: &BigRational,
    sign_only: bool,
) -> Result<RationalLpSolution, Bounds2Error> {
    let setup = Bound2Setup::new(w_col, w_row)?;
    let n = setup.n_orbits() + setup.n_aux;
    let mut objective = vec![BigRational::zero(); n];
    for orbit in &setup.table.orbits {
        let p = orbit_probability_rational(orbit, eps, w_row);
        objective[orbit.orbit_index] = if orbit.center_negative { -p } else { p };
    }
    let mut p = RationalLpProblem::new(n, objective);
    for row in &setup.system.rows {
        let coeffs = row
            .coeffs
            .iter()
            .map(|&(i, c)| (i, ratio_from_f64(c)))
            .collect();
        p.constraints
            .push((coeffs, row.rel, ratio_from_f64(row.rhs)));
    }
    p.equalities.push((
        vec![(setup.table.all_negative, BigRational::one())],
        BigRational::one(),
    ));
    if sign_only {
        for (coeffs, rhs) in sign_only_equalities(&setup) {
            let coeffs = coeffs
                .into_iter()
                .map(|(i, c)| (i, ratio_from_f64(c)))
                .collect();
            p.equalities.push((coeffs, ratio_from_f64(rhs)));
        }
    }
    let sol = solve_lp_rational(&p);
    match sol.status {
        LpStatus::Optimal | LpStatus::Unbounded => Ok(sol),
        status => Err(Bounds2Error::Lp(status)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bound2Report {
    pub w_col: usize,
    pub w_row: usize,
    /// Smallest epsilon (within tol) at which the optimized expected cost
    /// turns negative; an upper bound on the LP decoding threshold.
    pub eps_ub2: f64,
    pub lp_orbit_vars: usize,
    pub lp_aux_vars: usize,
    pub lp_constraints: usize,
    /// Zero crossing of the sign-only-restricted LP; equals 1/w_row up to
    /// bisection tolerance and serves as a sanity anchor.
    pub restricted_eps: f64,
}

fn optimum_is_negative(sol: &LpSolution) -> bool {
    match sol.status {
        LpStatus::Optimal => sol.value < NEGATIVITY_THRESHOLD,
        LpStatus::Unbounded => true,
        _ => false,
    }
}

fn bisect_negativity<F>(mut holds: F, mut lo: f64, mut hi: f64, tol: f64) -> f64
where
    F: FnMut(f64) -> bool, // true when the optimum is still nonnegative
{
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Bisects for the smallest epsilon at which the 2-neighborhood LP certifies
/// a negative expected cost. Monotonicity of the optimum in epsilon is
/// verified on a 32-point grid first; if it ever failed, a linear scan at
/// step `tol` would replace the bisection.
pub fn bsc_threshold_ub2(
    w_col: usize,
    w_row: usize,
    tol: f64,
) -> Result<Bound2Report, Bounds2Error> {
    assert!(tol > 0.0);
    let setup = Bound2Setup::new(w_col, w_row)?;
    let value_at = |eps: f64| -> Result<LpSolution, Bounds2Error> {
        let sol = objective_min_with(&setup, eps, false);
        match sol.status {
            LpStatus::Optimal | LpStatus::Unbounded => Ok(sol),
            status => Err(Bounds2Error::Lp(status)),
        }
    };

    // monotonicity grid over (0, 1/2)
    let grid: Vec<(f64, f64, bool)> = {
        let mut pts = Vec::with_capacity(MONOTONICITY_GRID);
        for k in 1..=MONOTONICITY_GRID {
            let eps = 0.5 * k as f64 / (MONOTONICITY_GRID + 1) as f64;
            let sol = value_at(eps)?;
            let value = if sol.status == LpStatus::Unbounded {
                f64::NEG_INFINITY
            } else {
                sol.value
            };
            pts.push((eps, value, optimum_is_negative(&sol)));
        }
        pts
    };
    let monotone = grid.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-9);

    let eps_ub2 = if monotone {
        let first_fail = grid.iter().position(|&(_, _, neg)| neg);
        let (lo, hi) = match first_fail {
            Some(0) => (tol.min(grid[0].0 / 2.0), grid[0].0),
            Some(k) => (grid[k - 1].0, grid[k].0),
            None => (grid.last().unwrap().0, 0.5),
        };
        bisect_negativity(
            |eps| {
                let sol = objective_min_with(&setup, eps, false);
                !optimum_is_negative(&sol)
            },
            lo,
            hi,
            tol,
        )
    } else {
        // fallback: first failing epsilon on a step-tol scan
        let mut eps = tol;
        loop {
            if optimum_is_negative(&value_at(eps)?) || eps >= 0.5 {
                break eps;
            }
            eps += tol;
        }
    };

    // sign-only restriction crosses zero at 1/w_row
    let restricted_eps = bisect_negativity(
        |eps| {
            let sol = objective_min_with(&setup, eps, true);
            !optimum_is_negative(&sol)
        },
        tol.min(0.01),
        0.5,
        tol.min(1e-4),
    );

    Ok(Bound2Report {
        w_col,
        w_row,
        eps_ub2,
        lp_orbit_vars: setup.n_orbits(),
        lp_aux_vars: setup.n_aux,
        lp_constraints: setup.system.len(),
        restricted_eps,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig3Row {
    pub w_col: usize,
    pub w_row: usize,
    pub rate: f64,
    pub eps_ub0: f64,
    pub eps_ub2: f64,
}

/// Rate, 0-neighborhood bound, and 2-neighborhood bound per pair, sorted by
/// rate ascending.
pub fn fig3_data(pairs: &[(usize, usize)], tol: f64) -> Result<Vec<Fig3Row>, Bounds2Error> {
    let mut rows = Vec::with_capacity(pairs.len());
    for &(w_col, w_row) in pairs {
        assert!(w_col < w_row);
        let report = bsc_threshold_ub2(w_col, w_row, tol)?;
        rows.push(Fig3Row {
            w_col,
            w_row,
            rate: 1.0 - w_col as f64 / w_row as f64,
            eps_ub0: 1.0 / w_row as f64,
            eps_ub2: report.eps_ub2,
        });
    }
    rows.sort_by(|a, b| {
        a.rate
            .partial_cmp(&b.rate)
            .unwrap()
            .then(a.w_col.cmp(&b.w_col))
    });
    Ok(rows)
}

/// Expands an orbit assignment into a concrete cone vector on a girth-six
/// regular code: omega_i = alpha(orbit realized by i's 2-neighborhood signs).
/// `alpha` may carry trailing auxiliary entries; only orbit positions are
/// read.
pub fn expand_completion(
    code: &Code,
    gamma: &LlrVector,
    table: &OrbitTable,
    alpha: &[f64],
) -> Result<FractionalVector, Bounds2Error> {
    if code.w_col() != Some(table.w_col) || code.w_row() != Some(table.w_row) {
        return Err(Bounds2Error::CodeMismatch {
            reason: format!(
                "code degrees {:?}/{:?} do not match the ({}, {}) orbit table",
                code.w_col(),
                code.w_row(),
                table.w_col,
                table.w_row
            ),
        });
    }
    if gamma.len() != code.n() {
        return Err(Bounds2Error::CodeMismatch {
            reason: format!("LLR length {} != n = {}", gamma.len(), code.n()),
        });
    }
    assert!(alpha.len() >= table.len());
    let values = (0..code.n())
        .map(|i| {
            let mut counts: Vec<u8> = code
                .col_support(i)
                .iter()
                .map(|&j| {
                    code.row_support(j)
                        .iter()
                        .filter(|&&i2| i2 != i && gamma.values[i2] < 0.0)
                        .count() as u8
                })
                .collect();
            counts.sort_unstable();
            alpha[table.orbit_of(gamma.values[i] < 0.0, &counts)]
        })
        .collect();
    Ok(FractionalVector { values })
}
