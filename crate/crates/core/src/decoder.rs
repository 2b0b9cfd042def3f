//! LP decoding over the fundamental polytope, the block-error event, and a
//! brute-force ML oracle.

use crate::channels::LlrVector;
use crate::codes::{Code, CodeError, CODEWORD_ENUM_CAP};
use crate::geometry::{polytope_inequalities, FractionalVector, GeometryError, Relation};
use crate::lp::{solve_lp, LpProblem, LpStatus};
use std::fmt;

/// Objective below this is a certified non-zero optimum (stage 1).
pub const NEGATIVITY_TOL: f64 = 1e-7;
/// Stage-2 mass above this certifies a non-unique zero solution.
pub const UNIQUENESS_MASS_TOL: f64 = 1e-6;
/// Slack allowed on the stage-2 objective-level constraint.
pub const LEVEL_SET_TOL: f64 = 1e-9;
/// Entries within this of {0,1} count as integral.
pub const INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum DecodeError {
    DimensionMismatch { expected: usize, got: usize },
    Solver(LpStatus),
    Geometry(GeometryError),
    Code(CodeError),
}

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeError::DimensionMismatch { expected, got } => {
                write!(f, "LLR length {got} does not match block length {expected}")
            }
            DecodeError::Solver(status) => write!(f, "LP solver failed with status {status:?}"),
            DecodeError::Geometry(e) => write!(f, "{e}"),
            DecodeError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DecodeError {}

impl From<GeometryError> for DecodeError {
    fn from(e: GeometryError) -> Self {
        DecodeError::Geometry(e)
    }
}

impl From<CodeError> for DecodeError {
    fn from(e: CodeError) -> Self {
        DecodeError::Code(e)
    }
}

/// Outcome of one LP decode under the all-zeros transmission convention.
#[derive(Debug, Clone)]
pub struct DecodeResult {
    pub omega_hat: FractionalVector,
    /// Minimum of gamma . omega over the polytope; -inf when some LLR was
    /// -inf (the pinned coordinate already rules the zero word out).
    pub objective: f64,
    /// All entries within 1e-6 of {0, 1}.
    pub integral: bool,
    pub all_zeros_unique: bool,
    /// The block-error event: the complement of "all-zeros is the unique
    /// optimum".
    pub error_event: bool,
}

/// LP decoding: minimize gamma . omega over the fundamental polytope.
///
/// Infinite LLRs are eliminated before solving: gamma_i = +inf pins
/// omega_i = 0 and gamma_i = -inf pins omega_i = 1, the limits of the
/// objective. Uniqueness of the zero optimum is certified in two stages:
/// if the stage-1 minimum is not clearly negative, a second LP maximizes
/// the coordinate sum over the optimal level set; positive attainable mass
/// there means the zero solution is not unique.
pub fn lp_decode(code: &Code, gamma: &LlrVector) -> Result<DecodeResult, DecodeError> {
    let n = code.n();
    if gamma.len() != n {
        return Err(DecodeError::DimensionMismatch {
            expected: n,
            got: gamma.len(),
        });
    }
    let polytope = polytope_inequalities(code)?;
    let mut objective = vec![0.0; n];
    let mut equalities: Vec<(Vec<(usize, f64)>, f64)> = Vec::new();
    let mut any_neg_inf = false;
    for (i, &g) in gamma.values.iter().enumerate() {
        if g == f64::INFINITY {
            equalities.push((vec![(i, 1.0)], 0.0));
        } else if g == f64::NEG_INFINITY {
            equalities.push((vec![(i, 1.0)], 1.0));
            any_neg_inf = true;
        } else {
            objective[i] = g;
        }
    }

    let mut stage1 = LpProblem::new(n, objective.clone());
    stage1.constraints = polytope.clone();
    stage1.equalities = equalities.clone();
    let sol = solve_lp(&stage1);
    if sol.status != LpStatus::Optimal {
        return Err(DecodeError::Solver(sol.status));
    }

    let all_zeros_unique = if any_neg_inf || sol.value < -NEGATIVITY_TOL {
        false
    } else {
        // stage 2: maximize total mass on the optimal level set
        let mut stage2 = LpProblem::new(n, vec![-1.0; n]);
        stage2.constraints = polytope;
        let gamma_row: Vec<(usize, f64)> = objective
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0.0)
            .map(|(i, &c)| (i, c))
            .collect();
        if !gamma_row.is_empty() {
            stage2
                .constraints
                .push(gamma_row, Relation::Le, LEVEL_SET_TOL);
        }
        stage2.equalities = equalities;
        let mass = solve_lp(&stage2);
        if mass.status != LpStatus::Optimal {
            return Err(DecodeError::Solver(mass.status));
        }
        -mass.value <= UNIQUENESS_MASS_TOL
    };

    let integral = sol
        .point
        .iter()
        .all(|&x| x.abs() <= INTEGRALITY_TOL || (x - 1.0).abs() <= INTEGRALITY_TOL);
    Ok(DecodeResult {
        omega_hat: FractionalVector { values: sol.point },
        objective: if any_neg_inf {
            f64::NEG_INFINITY
        } else {
            sol.value
        },
        integral,
        all_zeros_unique,
        error_event: !all_zeros_unique,
    })
}

/// Brute-force ML decoding by enumerating the nullspace of H; ties are
/// broken toward the lexicographically smallest codeword. The code dimension
/// must stay within the enumeration cap.
pub fn ml_decode_bruteforce(code: &Code, gamma: &LlrVector) -> Result<(Vec<u8>, f64), DecodeError> {
    let n = code.n();
    if gamma.len() != n {
        return Err(DecodeError::DimensionMismatch {
            expected: n,
            got: gamma.len(),
        });
    }
    let words = code.codewords_packed(CODEWORD_ENUM_CAP)?;
    let bit = |w: &[u64], i: usize| (w[i / 64] >> (i % 64)) & 1 == 1;
    let lex_less = |a: &[u64], b: &[u64]| {
        for i in 0..n {
            match (bit(a, i), bit(b, i)) {
                (false, true) => return true,
                (true, false) => return false,
                _ => {}
            }
        }
        false
    };
    let mut best: Option<(&Vec<u64>, f64)> = None;
    for w in &words {
        // sum over the support only, so +inf entries on zero coordinates do
        // not poison the cost
        let cost: f64 = (0..n).filter(|&i| bit(w, i)).map(|i| gamma.values[i]).sum();
        let take = match &best {
            None => true,
            Some((bw, bc)) => cost < *bc || (cost == *bc && lex_less(w, bw)),
        };
        if take {
            best = Some((w, cost));
        }
    }
    let (w, cost) = best.expect("the zero codeword always exists");
    Ok(((0..n).map(|i| bit(w, i) as u8).collect(), cost))
}
