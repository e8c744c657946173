//! Smith normal form over the integers with unimodular transform tracking.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntegerMatrix;

/// U * A * V = D with det U, det V = +-1 and d_1 | d_2 | ... followed by zeros.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of D, including zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Check U*A*V = D against the source matrix.
    pub fn verify(&self, a: &IntegerMatrix) -> bool {
        self.u.mul(a).mul(&self.v) == self.d
    }
}

fn swap_rows(m: &mut IntegerMatrix, i: usize, j: usize) {
    for c in 0..m.cols {
        let t = m[(i, c)].clone();
        m[(i, c)] = m[(j, c)].clone();
        m[(j, c)] = t;
    }
}

fn swap_cols(m: &mut IntegerMatrix, i: usize, j: usize) {
    for r in 0..m.rows {
        let t = m[(r, i)].clone();
        m[(r, i)] = m[(r, j)].clone();
        m[(r, j)] = t;
    }
}

fn add_row_multiple(m: &mut IntegerMatrix, dst: usize, src: usize, f: &BigInt) {
    for c in 0..m.cols {
        let t = &m[(src, c)] * f;
        m[(dst, c)] += t;
    }
}

fn add_col_multiple(m: &mut IntegerMatrix, dst: usize, src: usize, f: &BigInt) {
    for r in 0..m.rows {
        let t = &m[(r, src)] * f;
        m[(r, dst)] += t;
    }
}

fn negate_row(m: &mut IntegerMatrix, i: usize) {
    for c in 0..m.cols {
        let t = -m[(i, c)].clone();
        m[(i, c)] = t;
    }
}

/// Position of the entry of minimal nonzero absolute value in the trailing
/// block starting at (k, k); None when the block vanishes.
fn min_abs_entry(b: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..b.rows {
        for j in k..b.cols {
            let a = b[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            match &best {
                Some((_, m)) if *m <= a => {}
                _ => best = Some(((i, j), a)),
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Compute the Smith normal form U*A*V = D. Deterministic for fixed input:
/// pivots are chosen as the first entry of minimal absolute value in
/// row-major order.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let mut b = a.clone();
    let mut u = IntegerMatrix::identity(a.rows);
    let mut v = IntegerMatrix::identity(a.cols);
    let steps = a.rows.min(a.cols);

    for k in 0..steps {
        'pivot: loop {
            let (pi, pj) = match min_abs_entry(&b, k) {
                Some(p) => p,
                None => return SmithDecomposition { u, d: b, v },
            };
            if pi != k {
                swap_rows(&mut b, k, pi);
                swap_rows(&mut u, k, pi);
            }
            if pj != k {
                swap_cols(&mut b, k, pj);
                swap_cols(&mut v, k, pj);
            }
            if b[(k, k)].is_negative() {
                negate_row(&mut b, k);
                negate_row(&mut u, k);
            }
            let pivot = b[(k, k)].clone();

            let mut dirty = false;
            for i in k + 1..b.rows {
                if b[(i, k)].is_zero() {
                    continue;
                }
                let q = b[(i, k)].div_floor(&pivot);
                add_row_multiple(&mut b, i, k, &-q.clone());
                add_row_multiple(&mut u, i, k, &-q);
                if !b[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..b.cols {
                if b[(k, j)].is_zero() {
                    continue;
                }
                let q = b[(k, j)].div_floor(&pivot);
                add_col_multiple(&mut b, j, k, &-q.clone());
                add_col_multiple(&mut v, j, k, &-q);
                if !b[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // enforce pivot | trailing block, required for the divisor chain
            for i in k + 1..b.rows {
                for j in k + 1..b.cols {
                    if !b[(i, j)].mod_floor(&pivot).is_zero() {
                        add_row_multiple(&mut b, k, i, &BigInt::from(1));
                        add_row_multiple(&mut u, k, i, &BigInt::from(1));
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    SmithDecomposition { u, d: b, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn diag_i64(s: &SmithDecomposition) -> Vec<i64> {
        s.diagonal().iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntegerMatrix::identity(2);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.u, IntegerMatrix::identity(2));
        assert_eq!(s.v, IntegerMatrix::identity(2));
        assert_eq!(diag_i64(&s), vec![1, 1]);
    }

    #[test]
    fn already_diagonal() {
        let a = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(diag_i64(&s), vec![2, 2]);
    }

    #[test]
    fn hyperbolic_gram_is_unimodular() {
        // hand row/column reduction gives diag(1, 1)
        let a = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(diag_i64(&s), vec![1, 1]);
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
    }

    #[test]
    fn divisor_chain_and_zeros() {
        let a = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        let d = diag_i64(&s);
        for w in d.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisor chain violated: {d:?}");
            }
        }
        let singular = IntegerMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        let s = smith_normal_form(&singular);
        assert!(s.verify(&singular));
        assert_eq!(diag_i64(&s), vec![1, 0]);
    }
}
