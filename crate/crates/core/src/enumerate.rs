//! Exact lattice-point enumeration for positive-definite rational forms.
//!
//! The enumerator performs the Fincke-Pohst walk on an exact rational
//! Cholesky decomposition: q(x) = sum_k c_k (x_k + sum_{j>k} u_{kj} x_j)^2
//! with all c_k > 0 in Q. Interval ends are located by scanning outward from
//! the rational box centre, so no square roots (and no floating point) are
//! involved and the output is provably complete.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::EvenLattice;
use crate::matrix::QMatrix;
use crate::rat::{rat_ceil, Rat};

/// Rational Cholesky data for q(x) = x^T A x / 2 with A symmetric positive
/// definite: coefficients c_k and the upper unitriangular mixing u_{kj}.
pub struct RationalCholesky {
    dim: usize,
    c: Vec<Rat>,
    u: Vec<Vec<Rat>>, // u[k][j] defined for j > k
}

impl RationalCholesky {
    /// Decompose the bilinear Gram matrix A (so q = x^T A x / 2).
    /// Fails with NotPositiveDefinite when some pivot is <= 0.
    pub fn new(gram: &QMatrix) -> Result<Self> {
        assert!(gram.rows == gram.cols);
        let n = gram.rows;
        let two = Rat::from_integer(2.into());
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &gram[(i, j)] / &two;
            }
        }
        let mut c = Vec::with_capacity(n);
        let mut u = vec![vec![Rat::zero(); n]; n];
        for k in 0..n {
            let pivot = m[(k, k)].clone();
            if !pivot.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
            for j in k + 1..n {
                u[k][j] = &m[(k, j)] / &pivot;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(k, i)] * &m[(k, j)] / &pivot;
                    m[(i, j)] -= t;
                }
            }
            c.push(pivot);
        }
        Ok(RationalCholesky { dim: n, c, u })
    }

    /// q(x) evaluated through the decomposition (used in tests as a
    /// consistency check).
    #[cfg(test)]
    fn eval(&self, x: &[Rat]) -> Rat {
        let mut total = Rat::zero();
        for k in 0..self.dim {
            let mut t = x[k].clone();
            for j in k + 1..self.dim {
                t += &self.u[k][j] * &x[j];
            }
            total += &self.c[k] * &t * &t;
        }
        total
    }
}

/// All vectors y in Z^n + shift with q(y) <= bound, in lexicographic order.
/// The recursion fixes the last coordinate outermost.
pub fn enumerate_ellipsoid(gram: &QMatrix, shift: &[Rat], bound: &Rat) -> Result<Vec<Vec<Rat>>> {
    if bound.is_negative() {
        return Err(Error::BoundNegative);
    }
    let chol = RationalCholesky::new(gram)?;
    let n = chol.dim;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut coords = vec![Rat::zero(); n];
    descend(&chol, shift, bound.clone(), n - 1, &mut coords, &mut out);
    out.sort();
    Ok(out)
}

/// Fix coordinate k (counting down), with `budget` the remaining quadratic
/// allowance for squares 0..=k.
fn descend(
    chol: &RationalCholesky,
    shift: &[Rat],
    budget: Rat,
    k: usize,
    coords: &mut [Rat],
    out: &mut Vec<Vec<Rat>>,
) {
    // centre of the admissible interval for y_k: -t_k with
    // t_k = sum_{j>k} u_{kj} y_j
    let mut t = Rat::zero();
    for j in k + 1..chol.dim {
        t += &chol.u[k][j] * &coords[j];
    }
    let centre = -t;
    let ck = &chol.c[k];
    // admissible y_k: c_k (y_k - centre)^2 <= budget, y_k in Z + shift_k
    let allowance = &budget / ck;
    // first integer step m with y = shift_k + m >= centre
    let start = rat_ceil(&(&centre - &shift[k]));

    let mut scan = |mut m: BigInt, step: i64| loop {
        let y = &shift[k] + Rat::from_integer(m.clone());
        let dev = &y - &centre;
        let sq = &dev * &dev;
        if sq > allowance {
            break;
        }
        coords[k] = y;
        let used = ck * &sq;
        let rest = &budget - &used;
        if k == 0 {
            out.push(coords.to_vec());
        } else {
            descend(chol, shift, rest, k - 1, coords, out);
        }
        m += step;
    };
    scan(start.clone(), 1);
    scan(start - 1, -1);
}

/// Vectors of the coset L + shift with q <= bound for a positive-definite
/// even lattice, in lexicographic order. The shift must be a coordinate
/// vector of a dual-lattice element.
pub fn enumerate_vectors(l: &EvenLattice, bound: &Rat, shift: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    if !l.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if bound.is_negative() {
        return Err(Error::BoundNegative);
    }
    if !l.is_in_dual(shift) {
        return Err(Error::NotInDual);
    }
    enumerate_ellipsoid(&l.gram().to_rational(), shift, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_lattice;
    use crate::matrix::IntegerMatrix;
    use crate::rat::{rat, rat_int};

    fn lat(rows: &[Vec<i64>]) -> EvenLattice {
        validate_lattice(IntegerMatrix::from_rows(rows)).unwrap()
    }

    /// Brute-force box scan used as the independent oracle.
    fn brute_force(l: &EvenLattice, bound: &Rat, shift: &[Rat], box_radius: i64) -> Vec<Vec<Rat>> {
        let n = l.rank();
        let mut out = Vec::new();
        let mut idx = vec![-box_radius; n];
        loop {
            let v: Vec<Rat> = idx
                .iter()
                .zip(shift.iter())
                .map(|(&m, s)| s + rat_int(m))
                .collect();
            if n == 0 || l.quad(&v) <= *bound {
                out.push(v);
            }
            let mut pos = 0;
            loop {
                if n == 0 || pos == n {
                    out.sort();
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] <= box_radius {
                    break;
                }
                idx[pos] = -box_radius;
                pos += 1;
            }
        }
    }

    #[test]
    fn cholesky_reproduces_form() {
        let g = IntegerMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).to_rational();
        let chol = RationalCholesky::new(&g).unwrap();
        let x = [rat(1, 2), rat(-3, 4)];
        assert_eq!(chol.eval(&x), crate::matrix::quad_value(&g, &x));
    }

    #[test]
    fn rejects_indefinite() {
        let h = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).to_rational();
        assert!(matches!(
            RationalCholesky::new(&h),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn a1_short_vectors() {
        let l = lat(&[vec![2]]);
        let got = enumerate_vectors(&l, &rat_int(1), &[rat_int(0)]).unwrap();
        assert_eq!(got, vec![vec![rat_int(-1)], vec![rat_int(0)], vec![rat_int(1)]]);
    }

    #[test]
    fn a2_roots() {
        let l = lat(&[vec![2, -1], vec![-1, 2]]);
        let got = enumerate_vectors(&l, &rat_int(1), &[rat_int(0), rat_int(0)]).unwrap();
        assert_eq!(got.len(), 7, "zero plus the six roots");
        assert_eq!(got, brute_force(&l, &rat_int(1), &[rat_int(0), rat_int(0)], 2));
    }

    #[test]
    fn shifted_coset() {
        let l = lat(&[vec![2]]);
        let got = enumerate_vectors(&l, &rat(1, 4), &[rat(1, 2)]).unwrap();
        assert_eq!(got, vec![vec![rat(-1, 2)], vec![rat(1, 2)]]);
    }

    #[test]
    fn shift_must_be_dual() {
        let l = lat(&[vec![2]]);
        assert!(matches!(
            enumerate_vectors(&l, &rat_int(1), &[rat(1, 3)]),
            Err(Error::NotInDual)
        ));
    }

    #[test]
    fn negative_bound_rejected() {
        let l = lat(&[vec![2]]);
        assert!(matches!(
            enumerate_vectors(&l, &rat_int(-1), &[rat_int(0)]),
            Err(Error::BoundNegative)
        ));
    }

    #[test]
    fn rank_zero_contains_only_origin() {
        let l = crate::lattice::zero_lattice();
        let got = enumerate_vectors(&l, &rat_int(0), &[]).unwrap();
        assert_eq!(got, vec![Vec::<Rat>::new()]);
    }

    #[test]
    fn matches_brute_force_on_rank3() {
        let l = lat(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let zero = vec![rat_int(0); 3];
        for bound in [rat_int(2), rat_int(4), rat(7, 2)] {
            let got = enumerate_vectors(&l, &bound, &zero).unwrap();
            assert_eq!(got, brute_force(&l, &bound, &zero, 6));
        }
    }
}
