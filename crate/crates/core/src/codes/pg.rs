//! Point-line incidence matrices of the projective planes PG(2,q), q = 2^s.
//!
//! Points are the multiplicative classes of GF(q^3) modulo GF(q)* scalars,
//! indexed by powers of a primitive element alpha: point i <-> [alpha^i],
//! i in 0..n with n = (q^3-1)/(q-1) = q^2+q+1. Lines are the kernels of the
//! GF(q)-linear forms x -> Tr(alpha^j x), where Tr is the trace from GF(q^3)
//! down to GF(q). This makes the incidence matrix circulant: point i lies on
//! line j exactly when Tr(alpha^(i+j)) = 0.

use super::{Code, CodeError};

/// GF(2^m) with elements as bit-packed polynomials modulo `poly`.
#[derive(Debug, Clone, Copy)]
struct BinaryField {
    m: u32,
    poly: u64, // modulus polynomial including the x^m term
}

impl BinaryField {
    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let top = 1u64 << self.m;
        let mut r = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.poly;
            }
        }
        r
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut r = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        r
    }
}

/// Primitive polynomials over GF(2) of degree 3s for s = 1..=5, so that
/// x generates the multiplicative group of GF(2^(3s)).
fn primitive_poly(m: u32) -> u64 {
    match m {
        3 => 0b1011,                 // x^3 + x + 1
        6 => 0b1000011,              // x^6 + x + 1
        9 => 0b10_0001_0001,         // x^9 + x^4 + 1
        12 => 0b1_0000_0101_0011,    // x^12 + x^6 + x^4 + x + 1
        15 => 0b1000_0000_0000_0011, // x^15 + x + 1
        _ => unreachable!("unsupported field degree {m}"),
    }
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Builds the n x n incidence matrix of PG(2, 2^s), n = q^2+q+1.
pub fn pg2q_incidence_supports(s: u32) -> Vec<Vec<usize>> {
    let q: u64 = 1 << s;
    let m = 3 * s;
    let field = BinaryField {
        m,
        poly: primitive_poly(m),
    };
    let group_order = (1u64 << m) - 1;
    // sanity: x must be primitive for the power indexing to cover all classes
    debug_assert!(prime_factors(group_order)
        .iter()
        .all(|&p| field.pow(0b10, group_order / p) != 1));

    let n = (q * q + q + 1) as usize;
    // difference set D = { d : Tr(alpha^d) = 0 }, Tr down to GF(q)
    let mut in_d = vec![false; n];
    let mut alpha_pow = 1u64; // alpha^0
    for d in 0..n {
        let aq = field.pow(alpha_pow, q);
        let aq2 = field.pow(aq, q);
        if alpha_pow ^ aq ^ aq2 == 0 {
            in_d[d] = true;
        }
        alpha_pow = field.mul(alpha_pow, 0b10);
    }
    debug_assert_eq!(in_d.iter().filter(|&&b| b).count(), (q + 1) as usize);

    (0..n)
        .map(|j| (0..n).filter(|&i| in_d[(i + j) % n]).collect())
        .collect()
}

pub fn build_pg2q_code(s: u32, max_s: u32) -> Result<Code, CodeError> {
    if s == 0 || s > max_s {
        return Err(CodeError::PgOrderOutOfRange { s, max_s });
    }
    let q = 1usize << s;
    let n = q * q + q + 1;
    Code::from_row_supports(n, pg2q_incidence_supports(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_difference_set() {
        // PG(2,2): the classical {1,2,4} difference set mod 7
        let sups = pg2q_incidence_supports(1);
        assert_eq!(sups.len(), 7);
        assert_eq!(sups[0], vec![1, 2, 4]);
        assert_eq!(sups[1], vec![0, 1, 3]);
    }

    #[test]
    fn difference_set_property_small_orders() {
        // every nonzero residue is a difference of two row-0 supports in
        // exactly one way (lambda = 1 for a projective plane)
        for s in 1..=3u32 {
            let q = 1usize << s;
            let n = q * q + q + 1;
            let d0 = &pg2q_incidence_supports(s)[0];
            let mut counts = vec![0usize; n];
            for &a in d0 {
                for &b in d0 {
                    if a != b {
                        counts[(a + n - b) % n] += 1;
                    }
                }
            }
            assert!(counts[1..].iter().all(|&c| c == 1), "s={s}");
        }
    }

    #[test]
    fn field_multiplication_basics() {
        let f = BinaryField { m: 3, poly: 0b1011 };
        // x * x^2 = x^3 = x + 1
        assert_eq!(f.mul(0b10, 0b100), 0b011);
        // x^7 = 1
        assert_eq!(f.pow(0b10, 7), 1);
    }
}
