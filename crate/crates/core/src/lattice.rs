//! Even quadratic lattices: validation, rescaling, direct sums, sublattices,
//! and exact dual-lattice arithmetic.
//!
//! A lattice is stored through the integer Gram matrix of its bilinear form
//! beta; the quadratic form is q(x) = beta(x, x)/2. All coordinates are taken
//! with respect to the implicit basis underlying the Gram matrix, so the dual
//! lattice is spanned by the columns of the inverse Gram matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{bilin_value, is_integral_vec, quad_value, IntegerMatrix, QMatrix};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenLattice {
    gram: IntegerMatrix,
    rank: usize,
    signature: (usize, usize),
    determinant: BigInt,
}

impl EvenLattice {
    pub fn gram(&self) -> &IntegerMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// (b+, b-) inertia of the Gram matrix.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    /// b+ - b- reduced mod 8 into 0..8.
    pub fn signature_mod8(&self) -> u8 {
        let (p, n) = self.signature;
        ((p as i64 - n as i64).rem_euclid(8)) as u8
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature.1 == 0
    }

    /// Gram matrix of the dual basis, i.e. the inverse Gram matrix.
    pub fn dual_gram(&self) -> QMatrix {
        self.gram
            .to_rational()
            .inverse()
            .expect("nondegenerate by construction")
    }

    /// q(x) = x^T G x / 2 for a rational coordinate vector.
    pub fn quad(&self, x: &[Rat]) -> Rat {
        quad_value(&self.gram.to_rational(), x)
    }

    /// beta(x, y) = x^T G y.
    pub fn bilin(&self, x: &[Rat], y: &[Rat]) -> Rat {
        bilin_value(&self.gram.to_rational(), x, y)
    }

    /// Whether x (coordinates in the lattice basis) lies in the dual lattice,
    /// i.e. pairs integrally with every lattice vector.
    pub fn is_in_dual(&self, x: &[Rat]) -> bool {
        x.len() == self.rank && is_integral_vec(&self.gram.to_rational().mul_vec(x))
    }

    /// Level: the smallest N >= 1 with N*q(x) integral for every dual vector x.
    /// Read off the dual Gram matrix: N must clear all denominators and make
    /// the diagonal even.
    pub fn level(&self) -> BigInt {
        let dual = self.dual_gram();
        let mut n = BigInt::one();
        for i in 0..self.rank {
            for j in 0..self.rank {
                n = n.lcm(dual[(i, j)].denom());
            }
        }
        loop {
            let ok = (0..self.rank).all(|i| {
                let scaled = &dual[(i, i)] * Rat::from_integer(n.clone());
                scaled.numer().is_even()
            });
            if ok {
                return n;
            }
            n *= 2;
        }
    }
}

/// Validate an integer Gram matrix as an even nondegenerate lattice. The
/// signature comes from exact rational congruence diagonalization and the
/// determinant from fraction-free elimination.
pub fn validate_lattice(gram: IntegerMatrix) -> Result<EvenLattice> {
    if !gram.is_square() {
        return Err(Error::SchemaError(format!(
            "gram matrix must be square, got {}x{}",
            gram.rows, gram.cols
        )));
    }
    if let Some((i, j)) = gram.is_symmetric() {
        return Err(Error::NotSymmetric(i, j));
    }
    for i in 0..gram.rows {
        if gram[(i, i)].is_odd() {
            return Err(Error::NotEven(i));
        }
    }
    let determinant = gram.det();
    let rank = gram.rows;
    if rank > 0 && determinant.is_zero() {
        return Err(Error::Degenerate);
    }
    let (pos, neg, zero) = gram.to_rational().signature();
    debug_assert_eq!(zero, 0);
    debug_assert_eq!(
        determinant.is_negative(),
        neg % 2 == 1,
        "sign of det must be (-1)^(b-)"
    );
    Ok(EvenLattice {
        gram,
        rank,
        signature: (pos, neg),
        determinant,
    })
}

/// The rank-0 lattice, the identity for direct sums.
pub fn zero_lattice() -> EvenLattice {
    EvenLattice {
        gram: IntegerMatrix::zero(0, 0),
        rank: 0,
        signature: (0, 0),
        determinant: BigInt::one(),
    }
}

/// L(n): same module, form scaled by n >= 1.
pub fn rescale(l: &EvenLattice, n: u64) -> EvenLattice {
    assert!(n >= 1, "rescaling factor must be positive");
    let f = BigInt::from(n);
    let mut gram = IntegerMatrix::zero(l.rank, l.rank);
    for i in 0..l.rank {
        for j in 0..l.rank {
            gram[(i, j)] = &l.gram[(i, j)] * &f;
        }
    }
    let determinant = l.determinant.clone() * f.pow(l.rank as u32);
    EvenLattice {
        gram,
        rank: l.rank,
        signature: l.signature,
        determinant,
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum(l1: &EvenLattice, l2: &EvenLattice) -> EvenLattice {
    let n1 = l1.rank;
    let n = n1 + l2.rank;
    let mut gram = IntegerMatrix::zero(n, n);
    for i in 0..n1 {
        for j in 0..n1 {
            gram[(i, j)] = l1.gram[(i, j)].clone();
        }
    }
    for i in 0..l2.rank {
        for j in 0..l2.rank {
            gram[(n1 + i, n1 + j)] = l2.gram[(i, j)].clone();
        }
    }
    EvenLattice {
        gram,
        rank: n,
        signature: (l1.signature.0 + l2.signature.0, l1.signature.1 + l2.signature.1),
        determinant: &l1.determinant * &l2.determinant,
    }
}

/// A finite-index sublattice given by the coordinates of its basis vectors
/// (columns) in the basis of the parent.
#[derive(Debug, Clone)]
pub struct Sublattice {
    parent: EvenLattice,
    basis: IntegerMatrix,
    induced: EvenLattice,
    index: BigInt,
}

impl Sublattice {
    pub fn parent(&self) -> &EvenLattice {
        &self.parent
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    /// The sublattice as a lattice in its own right (basis^T G basis).
    pub fn lattice(&self) -> &EvenLattice {
        &self.induced
    }

    pub fn index(&self) -> &BigInt {
        &self.index
    }
}

pub fn sublattice(parent: &EvenLattice, basis: IntegerMatrix) -> Result<Sublattice> {
    if basis.rows != parent.rank || basis.cols != parent.rank {
        return Err(Error::DimensionMismatch {
            expected: parent.rank,
            got: basis.rows.max(basis.cols),
        });
    }
    let index = basis.det().abs();
    if index.is_zero() {
        return Err(Error::SingularBasis);
    }
    let induced_gram = basis.transpose().mul(&parent.gram).mul(&basis);
    for i in 0..induced_gram.rows {
        // cannot happen for an integral basis in an even lattice
        if induced_gram[(i, i)].is_odd() {
            return Err(Error::OddInducedGram);
        }
    }
    let induced = validate_lattice(induced_gram)?;
    Ok(Sublattice {
        parent: parent.clone(),
        basis,
        induced,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn a1() -> EvenLattice {
        validate_lattice(IntegerMatrix::from_rows(&[vec![2]])).unwrap()
    }

    fn hyperbolic() -> EvenLattice {
        validate_lattice(IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap()
    }

    #[test]
    fn validates_basic_lattices() {
        let l = a1();
        assert_eq!(l.rank(), 1);
        assert_eq!(l.signature(), (1, 0));
        assert_eq!(l.determinant(), &BigInt::from(2));

        let h = hyperbolic();
        assert_eq!(h.signature(), (1, 1));
        assert_eq!(h.determinant(), &BigInt::from(-1));
    }

    #[test]
    fn rejects_bad_grams() {
        assert!(matches!(
            validate_lattice(IntegerMatrix::from_rows(&[vec![1]])),
            Err(Error::NotEven(0))
        ));
        assert!(matches!(
            validate_lattice(IntegerMatrix::from_rows(&[vec![2, 1], vec![0, 2]])),
            Err(Error::NotSymmetric(0, 1))
        ));
        assert!(matches!(
            validate_lattice(IntegerMatrix::from_rows(&[vec![2, 2], vec![2, 2]])),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn rescale_scales_det_by_nth_power() {
        let l = a1();
        assert_eq!(rescale(&l, 1).gram(), l.gram());
        assert_eq!(rescale(&l, 2).gram()[(0, 0)], BigInt::from(4));
        let h3 = rescale(&hyperbolic(), 3);
        assert_eq!(h3.gram()[(0, 1)], BigInt::from(3));
        assert_eq!(h3.determinant(), &BigInt::from(-9));
        assert_eq!(h3.signature(), (1, 1));
    }

    #[test]
    fn rescale_composes_multiplicatively() {
        let l = hyperbolic();
        assert_eq!(rescale(&rescale(&l, 2), 3), rescale(&l, 6));
    }

    #[test]
    fn direct_sums() {
        let s = direct_sum(&a1(), &a1());
        assert_eq!(s.signature(), (2, 0));
        assert_eq!(s.gram(), &IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 2]]));

        let m = direct_sum(&a1(), &hyperbolic());
        assert_eq!(m.rank(), 3);
        assert_eq!(m.signature(), (2, 1));
        assert_eq!(m.determinant(), &BigInt::from(-2));

        assert_eq!(direct_sum(&a1(), &zero_lattice()), a1());
    }

    #[test]
    fn sublattice_indices() {
        let s = sublattice(&a1(), IntegerMatrix::from_rows(&[vec![2]])).unwrap();
        assert_eq!(s.index(), &BigInt::from(2));
        assert_eq!(s.lattice().gram()[(0, 0)], BigInt::from(8));

        let id = sublattice(&hyperbolic(), IntegerMatrix::identity(2)).unwrap();
        assert_eq!(id.index(), &BigInt::one());

        let h2 = sublattice(&hyperbolic(), IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 2]])).unwrap();
        assert_eq!(h2.index(), &BigInt::from(2));

        assert!(matches!(
            sublattice(&hyperbolic(), IntegerMatrix::from_rows(&[vec![1, 1], vec![1, 1]])),
            Err(Error::SingularBasis)
        ));
    }

    #[test]
    fn dual_membership_and_level() {
        let l = a1();
        assert!(l.is_in_dual(&[rat(1, 2)]));
        assert!(!l.is_in_dual(&[rat(1, 3)]));
        assert_eq!(l.level(), BigInt::from(4));
        assert_eq!(hyperbolic().level(), BigInt::one());
        let a2 = validate_lattice(IntegerMatrix::from_rows(&[vec![2, -1], vec![-1, 2]])).unwrap();
        assert_eq!(a2.level(), BigInt::from(3));
        assert_eq!(a2.quad(&[rat(2, 3), rat(1, 3)]), rat(1, 3));
        assert_eq!(l.bilin(&[rat(1, 2)], &[rat_int(1)]), rat_int(1));
    }
}
