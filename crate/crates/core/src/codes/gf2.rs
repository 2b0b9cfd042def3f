//! Bit-packed GF(2) matrices: rank and nullspace via Gaussian elimination.

/// Dense binary matrix with rows packed into `u64` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<Vec<u64>>,
    n_cols: usize,
}

impl BitMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        let words = n_cols.div_ceil(64);
        BitMatrix {
            rows: vec![vec![0u64; words]; n_rows],
            n_cols,
        }
    }

    /// Builds a matrix from per-row support index lists.
    pub fn from_supports(n_cols: usize, supports: &[Vec<usize>]) -> Self {
        let mut m = BitMatrix::zero(supports.len(), n_cols);
        for (j, sup) in supports.iter().enumerate() {
            for &i in sup {
                m.set(j, i, true);
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.rows[row][col / 64] >> (col % 64)) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let word = &mut self.rows[row][col / 64];
        if value {
            *word |= 1 << (col % 64);
        } else {
            *word &= !(1 << (col % 64));
        }
    }

    pub fn row_weight(&self, row: usize) -> usize {
        self.rows[row].iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Support indices of a row, ascending.
    pub fn row_support(&self, row: usize) -> Vec<usize> {
        let mut sup = Vec::new();
        for (k, &word) in self.rows[row].iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                sup.push(64 * k + b);
                w &= w - 1;
            }
        }
        sup
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = if src < dst {
            let (lo, hi) = self.rows.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.rows.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        for (d, s) in b.iter_mut().zip(a.iter()) {
            *d ^= s;
        }
    }
}

/// Rank over GF(2) by row reduction on a working copy.
pub fn rank(matrix: &BitMatrix) -> usize {
    let mut m = matrix.clone();
    let mut rank = 0;
    for col in 0..m.n_cols() {
        let pivot = (rank..m.n_rows()).find(|&r| m.get(r, col));
        if let Some(p) = pivot {
            m.rows.swap(rank, p);
            for r in 0..m.n_rows() {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Basis of the (right) nullspace {x : H x^T = 0 over GF(2)}, one packed
/// length-n row per basis vector.
pub fn nullspace_basis(matrix: &BitMatrix) -> Vec<Vec<u64>> {
    let n = matrix.n_cols();
    let mut m = matrix.clone();
    let mut pivot_col_of_row = Vec::new();
    let mut is_pivot_col = vec![false; n];
    let mut r = 0;
    for col in 0..n {
        if let Some(p) = (r..m.n_rows()).find(|&row| m.get(row, col)) {
            m.rows.swap(r, p);
            for row in 0..m.n_rows() {
                if row != r && m.get(row, col) {
                    m.xor_row_into(r, row);
                }
            }
            pivot_col_of_row.push(col);
            is_pivot_col[col] = true;
            r += 1;
        }
    }
    let words = n.div_ceil(64);
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot_col[free] {
            continue;
        }
        let mut v = vec![0u64; words];
        v[free / 64] |= 1 << (free % 64);
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            if m.get(row, free) {
                v[pc / 64] |= 1 << (pc % 64);
            }
        }
        basis.push(v);
    }
    basis
}

/// All vectors of the span of `basis` (packed rows of `words` words each).
/// Enumerated by Gray code so each step XORs a single basis vector; the
/// caller is responsible for keeping `basis.len()` small.
pub fn enumerate_span(basis: &[Vec<u64>], words: usize) -> Vec<Vec<u64>> {
    let dim = basis.len();
    assert!(dim < 48, "span too large to enumerate");
    let mut out = Vec::with_capacity(1usize << dim);
    let mut current = vec![0u64; words];
    out.push(current.clone());
    for k in 1..(1usize << dim) {
        let bit = k.trailing_zeros() as usize;
        for (c, b) in current.iter_mut().zip(basis[bit].iter()) {
            *c ^= b;
        }
        out.push(current.clone());
    }
    out
}
