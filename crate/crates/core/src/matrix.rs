//! Dense exact matrices over the integers and the rationals.
//!
//! Everything here is plain row-major storage with arbitrary-precision
//! entries. The only nontrivial algorithms are the fraction-free Bareiss
//! determinant, Gauss-Jordan inversion over the rationals, and symmetric
//! congruence (Jacobi) diagonalization used for exact signatures.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntegerMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntegerMatrix::new(r, c, entries)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> Self {
        let mut m = IntegerMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut m = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += prod;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(p, j));
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = &t / &prev;
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let d = a[idx(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rat>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        QMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_columns(cols: &[Vec<Rat>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        let mut m = QMatrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut m = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += prod;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let t = &a[(col, j)] * &f;
                    a[(i, j)] -= t;
                    let t = &inv[(col, j)] * &f;
                    inv[(i, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    /// Signature of a symmetric matrix by exact congruence diagonalization:
    /// (positive, negative, zero) inertia. Pivots are taken in row order;
    /// a zero diagonal with a nonzero off-diagonal entry is repaired by a
    /// symmetric row/column addition first.
    pub fn signature(&self) -> (usize, usize, usize) {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut zero = 0usize;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                // first nonzero diagonal below k, else first nonzero off-diagonal
                if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                    a.swap_sym(k, i);
                } else if let Some((i, j)) = first_offdiag(&a, k) {
                    // row/col addition makes the diagonal entry 2*a[i][j] != 0
                    a.add_row_col_sym(i, j);
                    if i != k {
                        a.swap_sym(k, i);
                    }
                } else {
                    zero += 1;
                    continue;
                }
            }
            let pivot = a[(k, k)].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            // congruence elimination: the row operation is mirrored by the
            // same column operation, so the trailing block stays symmetric
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &pivot;
                for j in 0..n {
                    let t = &a[(k, j)] * &f;
                    a[(i, j)] -= t;
                }
                for r in 0..n {
                    let t = &a[(r, k)] * &f;
                    a[(r, i)] -= t;
                }
            }
        }
        (pos, neg, zero)
    }

    fn swap_sym(&mut self, i: usize, j: usize) {
        let n = self.cols;
        for c in 0..n {
            let t = self[(i, c)].clone();
            self[(i, c)] = self[(j, c)].clone();
            self[(j, c)] = t;
        }
        for r in 0..n {
            let t = self[(r, i)].clone();
            self[(r, i)] = self[(r, j)].clone();
            self[(r, j)] = t;
        }
    }

    fn add_row_col_sym(&mut self, i: usize, j: usize) {
        let n = self.cols;
        for c in 0..n {
            let t = self[(j, c)].clone();
            self[(i, c)] += t;
        }
        for r in 0..n {
            let t = self[(r, j)].clone();
            self[(r, i)] += t;
        }
    }
}

fn first_offdiag(a: &QMatrix, k: usize) -> Option<(usize, usize)> {
    for i in k..a.rows {
        for j in i + 1..a.cols {
            if !a[(i, j)].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

/// Value of the quadratic form q(x) = x^T A x / 2 for a bilinear Gram matrix A.
pub fn quad_value(gram: &QMatrix, x: &[Rat]) -> Rat {
    let gx = gram.mul_vec(x);
    let two = Rat::from_integer(2.into());
    x.iter().zip(gx.iter()).map(|(a, b)| a * b).sum::<Rat>() / two
}

/// Bilinear value b(x, y) = x^T A y.
pub fn bilin_value(gram: &QMatrix, x: &[Rat], y: &[Rat]) -> Rat {
    let gy = gram.mul_vec(y);
    x.iter().zip(gy.iter()).map(|(a, b)| a * b).sum()
}

pub fn is_integral_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| crate::rat::is_integer(x))
}

/// Validate the dimension of a slice against an expected length.
pub fn check_dim<T>(v: &[T], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch { expected, got: v.len() });
    }
    Ok(())
}
