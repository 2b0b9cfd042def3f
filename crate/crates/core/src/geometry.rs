//! Inequality descriptions of the fundamental polytope and cone, membership
//! tests, and the completion vectors used as decoding-failure certificates.

use crate::channels::LlrVector;
use crate::codes::Code;
use std::fmt;

/// Per-row cap on the check weight accepted by `polytope_inequalities`;
/// each row of weight w expands into 2^(w-1) odd-subset constraints.
pub const POLYTOPE_ROW_WEIGHT_CAP: usize = 16;
/// Default additive slack for membership tests.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    RowWeightExceedsCap {
        weight: usize,
        cap: usize,
    },
    /// n*theta - delta - 1 must exceed 1 for the Bernoulli completion.
    BadCompletionDenominator {
        value: f64,
    },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "vector length {got} does not match block length {expected}"
                )
            }
            GeometryError::RowWeightExceedsCap { weight, cap } => {
                write!(f, "row weight {weight} exceeds the odd-subset cap {cap}")
            }
            GeometryError::BadCompletionDenominator { value } => {
                write!(f, "completion denominator {value} must exceed 1")
            }
        }
    }
}

impl std::error::Error for GeometryError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

/// One sparse inequality: sum of coeff * x_index REL rhs.
#[derive(Debug, Clone, PartialEq)]
pub struct Inequality {
    pub coeffs: Vec<(usize, f64)>,
    pub rel: Relation,
    pub rhs: f64,
}

impl Inequality {
    pub fn lhs(&self, point: &[f64]) -> f64 {
        self.coeffs.iter().map(|&(i, c)| c * point[i]).sum()
    }

    /// Signed violation: positive when the inequality is broken.
    pub fn violation(&self, point: &[f64]) -> f64 {
        match self.rel {
            Relation::Le => self.lhs(point) - self.rhs,
            Relation::Ge => self.rhs - self.lhs(point),
        }
    }
}

/// A list of sparse linear inequalities over n_vars variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    pub n_vars: usize,
    pub rows: Vec<Inequality>,
}

impl LinearSystem {
    pub fn new(n_vars: usize) -> Self {
        LinearSystem {
            n_vars,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<(usize, f64)>, rel: Relation, rhs: f64) {
        debug_assert!(!coeffs.is_empty());
        debug_assert!(coeffs.iter().all(|&(i, _)| i < self.n_vars));
        self.rows.push(Inequality { coeffs, rel, rhs });
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest signed violation over all rows (negative means strictly
    /// feasible everywhere).
    pub fn max_violation(&self, point: &[f64]) -> f64 {
        self.rows
            .iter()
            .map(|r| r.violation(point))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn is_satisfied(&self, point: &[f64], tol: f64) -> bool {
        self.rows.iter().all(|r| r.violation(point) <= tol)
    }

    /// Objective-free plain-text constraint listing for external inspection.
    pub fn to_lp_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (k, &(i, c)) in row.coeffs.iter().enumerate() {
                if k == 0 {
                    if c < 0.0 {
                        line.push_str("- ");
                    }
                } else if c < 0.0 {
                    line.push_str(" - ");
                } else {
                    line.push_str(" + ");
                }
                let mag = c.abs();
                if mag == 1.0 {
                    line.push_str(&format!("x{i}"));
                } else {
                    line.push_str(&format!("{mag} x{i}"));
                }
            }
            let rel = match row.rel {
                Relation::Le => "<=",
                Relation::Ge => ">=",
            };
            out.push_str(&format!("{line} {rel} {}\n", row.rhs));
        }
        out
    }
}

/// A point of R^n, used for polytope/cone membership and LP solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalVector {
    pub values: Vec<f64>,
}

impl FractionalVector {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(values.iter().all(|v| v.is_finite()));
        FractionalVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The full inequality description of the fundamental polytope: box
/// constraints 0 <= w_i <= 1 and, for every check j and every odd-cardinality
/// subset I' of its support, sum_{I'} w_i - sum_{I_j \ I'} w_i <= |I'| - 1.
pub fn polytope_inequalities(code: &Code) -> Result<LinearSystem, GeometryError> {
    let w_max = code.max_row_weight();
    if w_max > POLYTOPE_ROW_WEIGHT_CAP {
        return Err(GeometryError::RowWeightExceedsCap {
            weight: w_max,
            cap: POLYTOPE_ROW_WEIGHT_CAP,
        });
    }
    let mut sys = LinearSystem::new(code.n());
    for i in 0..code.n() {
        sys.push(vec![(i, 1.0)], Relation::Ge, 0.0);
        sys.push(vec![(i, 1.0)], Relation::Le, 1.0);
    }
    for j in 0..code.m() {
        let sup = code.row_support(j);
        let w = sup.len();
        for mask in 0u32..(1 << w) {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let coeffs: Vec<(usize, f64)> = sup
                .iter()
                .enumerate()
                .map(|(k, &i)| (i, if (mask >> k) & 1 == 1 { 1.0 } else { -1.0 }))
                .collect();
            sys.push(coeffs, Relation::Le, mask.count_ones() as f64 - 1.0);
        }
    }
    Ok(sys)
}

/// The inequality description of the fundamental cone: w_i >= 0 and, for
/// every check j and every pivot i' in its support,
/// w_{i'} - sum_{I_j \ {i'}} w_i <= 0.
pub fn cone_inequalities(code: &Code) -> LinearSystem {
    let mut sys = LinearSystem::new(code.n());
    for i in 0..code.n() {
        sys.push(vec![(i, 1.0)], Relation::Ge, 0.0);
    }
    for j in 0..code.m() {
        let sup = code.row_support(j);
        for &pivot in sup {
            let coeffs: Vec<(usize, f64)> = sup
                .iter()
                .map(|&i| (i, if i == pivot { 1.0 } else { -1.0 }))
                .collect();
            sys.push(coeffs, Relation::Le, 0.0);
        }
    }
    sys
}

/// Membership in the fundamental cone within additive slack tol.
///
/// Per check only the largest-valued pivot is evaluated (the expression
/// w_pivot - sum of the others is monotone in the pivot value), with the
/// remaining entries summed in ascending index order.
pub fn in_cone(omega: &FractionalVector, code: &Code, tol: f64) -> Result<bool, GeometryError> {
    assert!(tol >= 0.0);
    if omega.len() != code.n() {
        return Err(GeometryError::DimensionMismatch {
            expected: code.n(),
            got: omega.len(),
        });
    }
    let x = &omega.values;
    if x.iter().any(|&v| v < -tol) {
        return Ok(false);
    }
    for j in 0..code.m() {
        let sup = code.row_support(j);
        let pivot = *sup
            .iter()
            .max_by(|&&a, &&b| x[a].partial_cmp(&x[b]).unwrap())
            .expect("rows are nonempty");
        let others: f64 = sup.iter().filter(|&&i| i != pivot).map(|&i| x[i]).sum();
        if x[pivot] - others > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the fundamental polytope within additive slack tol.
///
/// Instead of enumerating the 2^(w-1) odd subsets of each check, the single
/// most violated subset is located directly: take every position with
/// w_i >= 1/2 and, if that set has even cardinality, flip the entry closest
/// to 1/2. This evaluates the same maximum the full enumeration would.
pub fn in_polytope(omega: &FractionalVector, code: &Code, tol: f64) -> Result<bool, GeometryError> {
    assert!(tol >= 0.0);
    if omega.len() != code.n() {
        return Err(GeometryError::DimensionMismatch {
            expected: code.n(),
            got: omega.len(),
        });
    }
    let x = &omega.values;
    if x.iter().any(|&v| v < -tol || v > 1.0 + tol) {
        return Ok(false);
    }
    for j in 0..code.m() {
        let sup = code.row_support(j);
        let mut total = 0.0;
        let mut chosen = 0usize;
        let mut min_flip = f64::INFINITY;
        for &i in sup {
            if x[i] >= 0.5 {
                chosen += 1;
                total += x[i];
            } else {
                total += 1.0 - x[i];
            }
            min_flip = min_flip.min((2.0 * x[i] - 1.0).abs());
        }
        if chosen % 2 == 0 {
            total -= min_flip;
        }
        if total - (sup.len() as f64 - 1.0) > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The sign-based completion: w_i = 1/(w_row - 1) where gamma_i >= 0
/// (infinite LLRs count as nonnegative) and w_i = 1 where gamma_i < 0.
/// The result lies in the fundamental cone of every (w_col, w_row)-regular
/// code.
pub fn zero_neighborhood_completion(gamma: &LlrVector, w_row: usize) -> FractionalVector {
    assert!(w_row >= 2);
    let small = 1.0 / (w_row as f64 - 1.0);
    FractionalVector {
        values: gamma
            .values
            .iter()
            .map(|&g| if g >= 0.0 { small } else { 1.0 })
            .collect(),
    }
}

/// The completion for Bernoulli(theta) random matrices: w_i = 1/(n theta -
/// delta - 1) where gamma_i >= 0 and w_i = 1 elsewhere.
pub fn bernoulli_completion(
    gamma: &LlrVector,
    theta: f64,
    delta: f64,
) -> Result<FractionalVector, GeometryError> {
    let denom = gamma.len() as f64 * theta - delta - 1.0;
    if !(denom > 1.0) {
        return Err(GeometryError::BadCompletionDenominator { value: denom });
    }
    let small = 1.0 / denom;
    Ok(FractionalVector {
        values: gamma
            .values
            .iter()
            .map(|&g| if g >= 0.0 { small } else { 1.0 })
            .collect(),
    })
}
