//! Binary parity-check matrices and their Tanner graphs: construction of the
//! code families used in the threshold experiments, girth computation, and
//! GF(2) rank/nullspace utilities.

pub mod alist;
pub mod gf2;
mod pg;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::fmt;

pub use gf2::BitMatrix;

/// Default cap on the number of rows `build_all_rows_code` will emit.
pub const ALL_ROWS_CAP: u64 = 1_000_000;
/// Default cap on the PG(2,q) order exponent (q = 2^s, so q <= 32).
pub const PG_MAX_S: u32 = 5;
/// Default cap on the nullspace dimension for codeword enumeration.
pub const CODEWORD_ENUM_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub enum CodeError {
    /// n * w_col must be divisible by w_row.
    Divisibility {
        n: usize,
        w_col: usize,
        w_row: usize,
    },
    RowWeightExceedsLength {
        w_row: usize,
        n: usize,
    },
    /// The configuration-model repair loop gave up.
    EdgeResolutionFailed {
        attempts: usize,
    },
    AllRowsCapExceeded {
        count: u128,
        cap: u64,
    },
    PgOrderOutOfRange {
        s: u32,
        max_s: u32,
    },
    ThetaOutOfRange {
        theta: f64,
    },
    ZeroRow {
        row: usize,
    },
    IndexOutOfRange {
        row: usize,
        index: usize,
        n: usize,
    },
    EmptyMatrix,
    NullspaceTooLarge {
        dim: usize,
        cap: usize,
    },
    InvalidArrayCode {
        reason: String,
    },
    Parse(String),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::Divisibility { n, w_col, w_row } => {
                write!(
                    f,
                    "n*w_col = {} not divisible by w_row = {}",
                    n * w_col,
                    w_row
                )
            }
            CodeError::RowWeightExceedsLength { w_row, n } => {
                write!(f, "row weight {w_row} exceeds block length {n}")
            }
            CodeError::EdgeResolutionFailed { attempts } => {
                write!(f, "could not remove repeated edges after {attempts} swaps")
            }
            CodeError::AllRowsCapExceeded { count, cap } => {
                write!(f, "binomial(n, w_row) = {count} exceeds cap {cap}")
            }
            CodeError::PgOrderOutOfRange { s, max_s } => {
                write!(f, "PG order exponent s = {s} outside 1..={max_s}")
            }
            CodeError::ThetaOutOfRange { theta } => {
                write!(f, "theta = {theta} outside the open interval (0,1)")
            }
            CodeError::ZeroRow { row } => write!(f, "row {row} has no support"),
            CodeError::IndexOutOfRange { row, index, n } => {
                write!(f, "row {row} references column {index} >= n = {n}")
            }
            CodeError::EmptyMatrix => write!(f, "matrix must have at least one row and column"),
            CodeError::NullspaceTooLarge { dim, cap } => {
                write!(f, "nullspace dimension {dim} exceeds enumeration cap {cap}")
            }
            CodeError::InvalidArrayCode { reason } => write!(f, "invalid array code: {reason}"),
            CodeError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for CodeError {}

/// A binary linear code given by a parity-check matrix together with the
/// index sets of its Tanner graph.
///
/// `row_support(j)` is the set I_j of variable nodes on check j and
/// `col_support(i)` the set J_i of checks on variable i; both are kept
/// alongside the packed matrix so neighborhood scans never touch bit words.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    m: usize,
    row_supports: Vec<Vec<usize>>,
    col_supports: Vec<Vec<usize>>,
    w_col: Option<usize>,
    w_row: Option<usize>,
}

impl Code {
    /// Builds a code from per-row column-index lists, validating that no row
    /// is empty and detecting row/column regularity.
    pub fn from_row_supports(n: usize, rows: Vec<Vec<usize>>) -> Result<Self, CodeError> {
        if n == 0 || rows.is_empty() {
            return Err(CodeError::EmptyMatrix);
        }
        let m = rows.len();
        let mut row_supports = Vec::with_capacity(m);
        let mut col_supports: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, mut sup) in rows.into_iter().enumerate() {
            sup.sort_unstable();
            sup.dedup();
            if sup.is_empty() {
                return Err(CodeError::ZeroRow { row: j });
            }
            if let Some(&bad) = sup.iter().find(|&&i| i >= n) {
                return Err(CodeError::IndexOutOfRange {
                    row: j,
                    index: bad,
                    n,
                });
            }
            for &i in &sup {
                col_supports[i].push(j);
            }
            row_supports.push(sup);
        }
        let w_row = uniform_weight(row_supports.iter().map(Vec::len));
        let w_col = uniform_weight(col_supports.iter().map(Vec::len));
        Ok(Code {
            n,
            m,
            row_supports,
            col_supports,
            w_col,
            w_row,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Bit-packed parity-check matrix, materialized on demand; keep codes
    /// of large block length out of the dense paths.
    pub fn matrix(&self) -> BitMatrix {
        BitMatrix::from_supports(self.n, &self.row_supports)
    }

    /// I_j: variable nodes on check j.
    pub fn row_support(&self, j: usize) -> &[usize] {
        &self.row_supports[j]
    }

    /// J_i: check nodes on variable i.
    pub fn col_support(&self, i: usize) -> &[usize] {
        &self.col_supports[i]
    }

    pub fn row_supports(&self) -> &[Vec<usize>] {
        &self.row_supports
    }

    /// Uniform column weight, when every column has the same weight.
    pub fn w_col(&self) -> Option<usize> {
        self.w_col
    }

    /// Uniform row weight, when every row has the same weight.
    pub fn w_row(&self) -> Option<usize> {
        self.w_row
    }

    pub fn is_regular(&self) -> bool {
        self.w_col.is_some() && self.w_row.is_some()
    }

    pub fn max_row_weight(&self) -> usize {
        self.row_supports.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Rank of the parity-check matrix over GF(2).
    pub fn gf2_rank(&self) -> usize {
        gf2::rank(&self.matrix())
    }

    /// Code dimension n - rank(H).
    pub fn dimension(&self) -> usize {
        self.n - self.gf2_rank()
    }

    /// Enumerates all codewords as packed bit rows, provided the dimension
    /// stays below `cap`.
    pub fn codewords_packed(&self, cap: usize) -> Result<Vec<Vec<u64>>, CodeError> {
        let basis = gf2::nullspace_basis(&self.matrix());
        if basis.len() > cap {
            return Err(CodeError::NullspaceTooLarge {
                dim: basis.len(),
                cap,
            });
        }
        Ok(gf2::enumerate_span(&basis, self.n.div_ceil(64)))
    }

    /// Codewords as 0/1 f64 vectors (for polytope membership tests).
    pub fn codewords_embedded(&self, cap: usize) -> Result<Vec<Vec<f64>>, CodeError> {
        let packed = self.codewords_packed(cap)?;
        Ok(packed
            .iter()
            .map(|w| {
                (0..self.n)
                    .map(|i| ((w[i / 64] >> (i % 64)) & 1) as f64)
                    .collect()
            })
            .collect())
    }

    /// The Fano-plane code PG(2,2), the smallest code used throughout the
    /// experiments.
    pub fn fano() -> Code {
        build_pg2q_code(1).expect("s = 1 is always in range")
    }
}

fn uniform_weight(mut weights: impl Iterator<Item = usize>) -> Option<usize> {
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}

/// Random (w_col, w_row)-regular code via the configuration model: variable
/// and check sockets are matched by a seeded shuffle and repeated edges are
/// removed by random socket swaps (up to 100*n attempts).
pub fn build_regular_code(
    n: usize,
    w_col: usize,
    w_row: usize,
    seed: u64,
) -> Result<Code, CodeError> {
    assert!(n >= 1 && w_col >= 1 && w_row >= 1);
    if w_row > n {
        return Err(CodeError::RowWeightExceedsLength { w_row, n });
    }
    if (n * w_col) % w_row != 0 {
        return Err(CodeError::Divisibility { n, w_col, w_row });
    }
    let m = n * w_col / w_row;
    let n_edges = n * w_col;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut var_of_socket: Vec<usize> = (0..n)
        .flat_map(|i| std::iter::repeat(i).take(w_col))
        .collect();
    var_of_socket.shuffle(&mut rng);
    // socket k belongs to check k / w_row
    let max_attempts = 100 * n;
    let mut attempts = 0;
    loop {
        let mut seen = std::collections::HashSet::with_capacity(n_edges);
        let mut offenders = Vec::new();
        for (k, &v) in var_of_socket.iter().enumerate() {
            if !seen.insert((v, k / w_row)) {
                offenders.push(k);
            }
        }
        if offenders.is_empty() {
            break;
        }
        for k in offenders {
            if attempts >= max_attempts {
                return Err(CodeError::EdgeResolutionFailed { attempts });
            }
            let other = rng.random_range(0..n_edges);
            var_of_socket.swap(k, other);
            attempts += 1;
        }
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::with_capacity(w_row); m];
    for (k, &v) in var_of_socket.iter().enumerate() {
        rows[k / w_row].push(v);
    }
    let code = Code::from_row_supports(n, rows)?;
    debug_assert_eq!(code.w_col(), Some(w_col));
    debug_assert_eq!(code.w_row(), Some(w_row));
    Ok(code)
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Parity-check matrix containing every weight-w_row row of length n, in
/// lexicographic support order.
pub fn build_all_rows_code(n: usize, w_row: usize) -> Result<Code, CodeError> {
    build_all_rows_code_capped(n, w_row, ALL_ROWS_CAP)
}

pub fn build_all_rows_code_capped(n: usize, w_row: usize, cap: u64) -> Result<Code, CodeError> {
    assert!(n >= 1 && w_row >= 1);
    if w_row > n {
        return Err(CodeError::RowWeightExceedsLength { w_row, n });
    }
    let count = binomial_u128(n, w_row);
    if count > cap as u128 {
        return Err(CodeError::AllRowsCapExceeded { count, cap });
    }
    let mut rows = Vec::with_capacity(count as usize);
    let mut comb: Vec<usize> = (0..w_row).collect();
    loop {
        rows.push(comb.clone());
        // next combination in lexicographic order
        let mut i = w_row;
        loop {
            if i == 0 {
                return Code::from_row_supports(n, rows);
            }
            i -= 1;
            if comb[i] != i + n - w_row {
                break;
            }
        }
        comb[i] += 1;
        for j in i + 1..w_row {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Point-line incidence matrix of PG(2, 2^s); n = m = q^2+q+1 with uniform
/// row and column weight q+1.
pub fn build_pg2q_code(s: u32) -> Result<Code, CodeError> {
    pg::build_pg2q_code(s, PG_MAX_S)
}

/// Random matrix with i.i.d. Bernoulli(theta) entries; all-zero rows are
/// resampled.
pub fn build_bernoulli_code(n: usize, m: usize, theta: f64, seed: u64) -> Result<Code, CodeError> {
    assert!(n >= 1 && m >= 1);
    if !(theta > 0.0 && theta < 1.0) {
        return Err(CodeError::ThetaOutOfRange { theta });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        loop {
            let sup: Vec<usize> = (0..n).filter(|_| rng.random::<f64>() < theta).collect();
            if !sup.is_empty() {
                rows.push(sup);
                break;
            }
        }
    }
    Code::from_row_supports(n, rows)
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Deterministic (w_col, w_row)-regular code of length w_row * p with girth
/// at least six, built from p x p circulant permutation blocks shifted by
/// a * x_j * y_i mod p. Randomizing the labels x, y and the multiplier a by
/// seed varies the graph while preserving girth; any prime p >= max(w_col,
/// w_row) works.
pub fn build_array_code(
    w_col: usize,
    w_row: usize,
    p: usize,
    seed: u64,
) -> Result<Code, CodeError> {
    if !is_prime(p) {
        return Err(CodeError::InvalidArrayCode {
            reason: format!("p = {p} is not prime"),
        });
    }
    if p < w_col.max(w_row) {
        return Err(CodeError::InvalidArrayCode {
            reason: format!(
                "p = {p} smaller than max(w_col, w_row) = {}",
                w_col.max(w_row)
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..p).collect();
    labels.shuffle(&mut rng);
    let row_labels = labels[..w_col].to_vec();
    labels.shuffle(&mut rng);
    let col_labels = labels[..w_row].to_vec();
    let a = rng.random_range(1..p);
    let n = w_row * p;
    let mut rows: Vec<Vec<usize>> = vec![Vec::with_capacity(w_row); w_col * p];
    for (bj, &x) in row_labels.iter().enumerate() {
        for (bi, &y) in col_labels.iter().enumerate() {
            let shift = a * x % p * y % p;
            for r in 0..p {
                rows[bj * p + r].push(bi * p + (r + shift) % p);
            }
        }
    }
    let code = Code::from_row_supports(n, rows)?;
    debug_assert_eq!(code.w_col(), Some(w_col));
    debug_assert_eq!(code.w_row(), Some(w_row));
    Ok(code)
}

/// Length of the shortest cycle in the Tanner graph, or `None` for a forest.
/// Cycles alternate between variable and check nodes, so the result is even
/// and at least 4.
pub fn girth(code: &Code) -> Option<usize> {
    // vertices: 0..n variables, n..n+m checks
    let n = code.n();
    let m = code.m();
    let neighbors = |v: usize| -> &[usize] {
        if v < n {
            code.col_support(v)
        } else {
            code.row_support(v - n)
        }
    };
    let offset = |v: usize| if v < n { n } else { 0 };
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n + m];
    let mut parent = vec![usize::MAX; n + m];
    let mut queue = std::collections::VecDeque::new();
    // every cycle passes through a variable node, so variable roots suffice
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        let mut local_best = usize::MAX;
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= local_best {
                break;
            }
            for &w0 in neighbors(u) {
                let w = w0 + offset(u);
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && parent[w] != u {
                    // non-tree edge closes a cycle through the root
                    local_best = local_best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        if local_best != usize::MAX {
            best = Some(best.map_or(local_best, |b| b.min(local_best)));
        }
    }
    best
}
