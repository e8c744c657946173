//! Discriminant groups D = L'/L with their Q/Z-valued quadratic and bilinear
//! forms, level, Gauss-sum signature, torsion and multiple subgroups.
//!
//! Elements are residue vectors against the elementary divisors produced by
//! the Smith normal form of the Gram matrix; the canonical ordering is
//! lexicographic in the residues, which fixes the indexing used by Weil
//! matrices and coefficient tables.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lattice::EvenLattice;
use crate::matrix::IntegerMatrix;
use crate::rat::{frac_part, Rat};
use crate::snf::smith_normal_form;

/// Default cap on |D| for operations that enumerate the whole group.
pub const ORDER_CAP: u64 = 100_000;

/// Tolerance for the Gauss-sum consistency check.
const GAUSS_TOL: f64 = 1e-9;

/// A value in Q/Z, stored as the reduced representative in [0, 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QmodZ(Rat);

impl QmodZ {
    pub fn new(x: &Rat) -> Self {
        QmodZ(frac_part(x))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// e(x) = exp(2 pi i x).
    pub fn exponential(&self) -> Complex64 {
        let t = 2.0 * PI * crate::rat::to_f64(&self.0);
        Complex64::new(t.cos(), t.sin())
    }
}

/// Element of a discriminant group: residues r_i in [0, d_i).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscElement {
    residues: Vec<u64>,
}

impl DiscElement {
    pub fn new(residues: Vec<u64>) -> Self {
        DiscElement { residues }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl std::fmt::Display for DiscElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    source: EvenLattice,
    elementary_divisors: Vec<u64>,
    generator_lifts: Vec<Vec<Rat>>,
    order: u64,
    level: u64,
    signature_mod8: u8,
    /// U from the Smith decomposition U*G*V = D and the slots with d_i > 1,
    /// used to reduce dual vectors to residue coordinates.
    umat: IntegerMatrix,
    kept_slots: Vec<usize>,
    kept_divisors_big: Vec<BigInt>,
}

impl DiscriminantGroup {
    pub fn source(&self) -> &EvenLattice {
        &self.source
    }

    /// Nontrivial elementary divisors d_1 | d_2 | ... of L'/L.
    pub fn elementary_divisors(&self) -> &[u64] {
        &self.elementary_divisors
    }

    /// Dual-lattice coordinate vectors lifting each cyclic generator.
    pub fn generator_lifts(&self) -> &[Vec<Rat>] {
        &self.generator_lifts
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn signature_mod8(&self) -> u8 {
        self.signature_mod8
    }

    pub fn zero(&self) -> DiscElement {
        DiscElement::new(vec![0; self.elementary_divisors.len()])
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> Vec<DiscElement> {
        let mut out = Vec::with_capacity(self.order as usize);
        let k = self.elementary_divisors.len();
        let mut cur = vec![0u64; k];
        loop {
            out.push(DiscElement::new(cur.clone()));
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] < self.elementary_divisors[pos] {
                    break;
                }
                cur[pos] = 0;
            }
        }
    }

    /// Position of an element in the canonical ordering.
    pub fn index_of(&self, x: &DiscElement) -> usize {
        let mut idx = 0usize;
        for (r, d) in x.residues.iter().zip(self.elementary_divisors.iter()) {
            debug_assert!(r < d);
            idx = idx * (*d as usize) + *r as usize;
        }
        idx
    }

    pub fn add(&self, x: &DiscElement, y: &DiscElement) -> DiscElement {
        let residues = x
            .residues
            .iter()
            .zip(y.residues.iter())
            .zip(self.elementary_divisors.iter())
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        DiscElement::new(residues)
    }

    pub fn neg(&self, x: &DiscElement) -> DiscElement {
        let residues = x
            .residues
            .iter()
            .zip(self.elementary_divisors.iter())
            .map(|(r, d)| if *r == 0 { 0 } else { d - r })
            .collect();
        DiscElement::new(residues)
    }

    pub fn scale(&self, n: u64, x: &DiscElement) -> DiscElement {
        let residues = x
            .residues
            .iter()
            .zip(self.elementary_divisors.iter())
            .map(|(r, d)| ((*r as u128 * n as u128) % *d as u128) as u64)
            .collect();
        DiscElement::new(residues)
    }

    /// Lift to a dual-lattice coordinate vector (the canonical lift through
    /// the stored generators).
    pub fn lift(&self, x: &DiscElement) -> Vec<Rat> {
        let rank = self.source.rank();
        let mut v = vec![Rat::zero(); rank];
        for (r, g) in x.residues.iter().zip(self.generator_lifts.iter()) {
            if *r == 0 {
                continue;
            }
            let f = Rat::from_integer(BigInt::from(*r));
            for (vi, gi) in v.iter_mut().zip(g.iter()) {
                *vi += gi * &f;
            }
        }
        v
    }

    /// Class of a dual vector given by rational coordinates in the lattice
    /// basis. Fails with NotInDual when the vector pairs non-integrally.
    pub fn class_of(&self, v: &[Rat]) -> Result<DiscElement> {
        let gv = self.source.gram().to_rational().mul_vec(v);
        let mut y = Vec::with_capacity(gv.len());
        for x in &gv {
            if !crate::rat::is_integer(x) {
                return Err(Error::NotInDual);
            }
            y.push(x.numer().clone());
        }
        let uy = self.umat.mul_vec(&y);
        let residues = self
            .kept_slots
            .iter()
            .zip(self.kept_divisors_big.iter())
            .map(|(&slot, d)| uy[slot].mod_floor(d).to_u64().expect("residue below cap"))
            .collect();
        Ok(DiscElement::new(residues))
    }

    /// Class of a dual vector given in dual-basis integer coordinates
    /// (c = G * v), avoiding rational arithmetic.
    pub fn class_of_dual_coords(&self, c: &[BigInt]) -> DiscElement {
        let uc = self.umat.mul_vec(c);
        let residues = self
            .kept_slots
            .iter()
            .zip(self.kept_divisors_big.iter())
            .map(|(&slot, d)| uc[slot].mod_floor(d).to_u64().expect("residue below cap"))
            .collect();
        DiscElement::new(residues)
    }

    fn check_element(&self, x: &DiscElement) -> Result<()> {
        if x.residues.len() != self.elementary_divisors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.elementary_divisors.len(),
                got: x.residues.len(),
            });
        }
        for (r, d) in x.residues.iter().zip(self.elementary_divisors.iter()) {
            if r >= d {
                return Err(Error::SchemaError(format!(
                    "residue {r} out of range for divisor {d}"
                )));
            }
        }
        Ok(())
    }

    /// q(x) in Q/Z, independent of the generator lift.
    pub fn q_disc(&self, x: &DiscElement) -> QmodZ {
        QmodZ::new(&self.source.quad(&self.lift(x)))
    }

    /// b(x, y) in Q/Z.
    pub fn b_disc(&self, x: &DiscElement, y: &DiscElement) -> QmodZ {
        QmodZ::new(&self.source.bilin(&self.lift(x), &self.lift(y)))
    }

    /// Milgram signature from the Gauss sum G = sum e(q(lambda)):
    /// G / sqrt(|D|) must be an eighth root of unity e(s/8).
    pub fn milgram_signature(&self) -> Result<u8> {
        let mut g = Complex64::new(0.0, 0.0);
        for x in self.elements() {
            g += self.q_disc(&x).exponential();
        }
        let expected = (self.order as f64).sqrt();
        if (g.norm() - expected).abs() > GAUSS_TOL * expected.max(1.0) {
            return Err(Error::GaussSumInconsistent(g.norm(), expected));
        }
        let s = (g.arg() * 4.0 / PI).round();
        let s8 = (s as i64).rem_euclid(8) as u8;
        let target = Complex64::from_polar(1.0, PI * (s8 as f64) / 4.0);
        let unit = g / expected;
        if (unit - target).norm() > 1e-6 {
            return Err(Error::GaussSumInconsistent(g.norm(), expected));
        }
        Ok(s8)
    }

    /// (n-torsion D_n, n-multiples nD); |D_n| * |nD| = |D|.
    pub fn torsion_and_multiples(&self, n: u64) -> (Vec<DiscElement>, Vec<DiscElement>) {
        assert!(n >= 1);
        let mut torsion = Vec::new();
        let mut multiples = Vec::new();
        for x in self.elements() {
            if self.scale(n, &x).is_zero() {
                torsion.push(x.clone());
            }
        }
        for x in self.elements() {
            multiples.push(self.scale(n, &x));
        }
        multiples.sort();
        multiples.dedup();
        assert_eq!(
            torsion.len() * multiples.len(),
            self.order as usize,
            "|D_n| * |nD| = |D|"
        );
        (torsion, multiples)
    }

    /// All isotropic elements (q = 0), always containing 0.
    pub fn isotropic_elements(&self) -> Vec<DiscElement> {
        self.elements()
            .into_iter()
            .filter(|x| self.q_disc(x).is_zero())
            .collect()
    }

    /// Public validation entry used by parsers.
    pub fn element_from_residues(&self, residues: Vec<u64>) -> Result<DiscElement> {
        let x = DiscElement::new(residues);
        self.check_element(&x)?;
        Ok(x)
    }
}

/// Build the discriminant group of an even lattice with the default order cap.
pub fn discriminant_group(l: &EvenLattice) -> Result<DiscriminantGroup> {
    discriminant_group_with_cap(l, ORDER_CAP)
}

pub fn discriminant_group_with_cap(l: &EvenLattice, cap: u64) -> Result<DiscriminantGroup> {
    let det_abs = l.determinant().abs();
    let order = det_abs
        .to_u64()
        .filter(|&o| o <= cap)
        .ok_or_else(|| Error::OrderCapExceeded(det_abs.to_u64().unwrap_or(u64::MAX), cap))?;

    let snf = smith_normal_form(l.gram());
    debug_assert!(snf.verify(l.gram()));
    let diag = snf.diagonal();

    let mut kept_slots = Vec::new();
    let mut elementary_divisors = Vec::new();
    let mut kept_divisors_big = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        let d = d.to_u64().expect("divisor bounded by |det|");
        if d > 1 {
            kept_slots.push(i);
            elementary_divisors.push(d);
            kept_divisors_big.push(BigInt::from(d));
        }
    }

    // generator lift for slot i: column i of V divided by d_i, because
    // G^{-1} U^{-1} = V D^{-1}
    let mut generator_lifts = Vec::new();
    for (&slot, d) in kept_slots.iter().zip(elementary_divisors.iter()) {
        let denom = BigInt::from(*d);
        let col: Vec<Rat> = (0..l.rank())
            .map(|r| Rat::new(snf.v[(r, slot)].clone(), denom.clone()))
            .collect();
        generator_lifts.push(col);
    }

    let level_big = l.level();
    let level = level_big.to_u64().ok_or_else(|| {
        Error::OrderCapExceeded(u64::MAX, cap) // level bounded by 2|det|, unreachable under the cap
    })?;

    Ok(DiscriminantGroup {
        source: l.clone(),
        elementary_divisors,
        generator_lifts,
        order,
        level,
        signature_mod8: l.signature_mod8(),
        umat: snf.u,
        kept_slots,
        kept_divisors_big,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rescale, validate_lattice};
    use crate::rat::{rat, rat_int};

    fn group(rows: &[Vec<i64>]) -> DiscriminantGroup {
        discriminant_group(&validate_lattice(IntegerMatrix::from_rows(rows)).unwrap()).unwrap()
    }

    fn a1() -> DiscriminantGroup {
        group(&[vec![2]])
    }

    fn a2() -> DiscriminantGroup {
        group(&[vec![2, -1], vec![-1, 2]])
    }

    #[test]
    fn a1_structure() {
        let d = a1();
        assert_eq!(d.elementary_divisors(), &[2]);
        assert_eq!(d.order(), 2);
        assert_eq!(d.level(), 4);
        assert_eq!(d.q_disc(&DiscElement::new(vec![1])).value(), &rat(1, 4));
        assert_eq!(d.b_disc(&DiscElement::new(vec![1]), &DiscElement::new(vec![1])).value(), &rat(1, 2));
    }

    #[test]
    fn unimodular_is_trivial() {
        let d = group(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(d.elementary_divisors(), &[] as &[u64]);
        assert_eq!(d.order(), 1);
        assert_eq!(d.level(), 1);
        assert_eq!(d.elements().len(), 1);
        assert!(d.q_disc(&d.zero()).is_zero());
    }

    #[test]
    fn a2_structure() {
        let d = a2();
        assert_eq!(d.elementary_divisors(), &[3]);
        assert_eq!(d.order(), 3);
        assert_eq!(d.level(), 3);
        let gen = DiscElement::new(vec![1]);
        assert_eq!(d.q_disc(&gen).value(), &rat(1, 3));
    }

    #[test]
    fn zero_element_values() {
        let d = a2();
        assert!(d.q_disc(&d.zero()).is_zero());
        let gen = DiscElement::new(vec![1]);
        assert!(d.b_disc(&gen, &d.zero()).is_zero());
    }

    #[test]
    fn z4_from_rescaled_a1() {
        let l = rescale(&validate_lattice(IntegerMatrix::from_rows(&[vec![2]])).unwrap(), 2);
        let d = discriminant_group(&l).unwrap();
        assert_eq!(d.elementary_divisors(), &[4]);
        // b(1/4, 2/4) = 4 * 2 / 16 = 1/2
        let b = d.b_disc(&DiscElement::new(vec![1]), &DiscElement::new(vec![2]));
        assert_eq!(b.value(), &rat(1, 2));
    }

    #[test]
    fn milgram_small_cases() {
        assert_eq!(a1().milgram_signature().unwrap(), 1);
        assert_eq!(a2().milgram_signature().unwrap(), 2);
        let trivial = group(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(trivial.milgram_signature().unwrap(), 0);
    }

    #[test]
    fn torsion_and_multiples_cases() {
        let l = rescale(&validate_lattice(IntegerMatrix::from_rows(&[vec![2]])).unwrap(), 2);
        let d = discriminant_group(&l).unwrap();
        let (t2, m2) = d.torsion_and_multiples(2);
        assert_eq!(t2, vec![DiscElement::new(vec![0]), DiscElement::new(vec![2])]);
        assert_eq!(m2, vec![DiscElement::new(vec![0]), DiscElement::new(vec![2])]);

        let (t1, m1) = d.torsion_and_multiples(1);
        assert_eq!(t1, vec![d.zero()]);
        assert_eq!(m1.len(), 4);

        let d = a1();
        let (t, m) = d.torsion_and_multiples(2);
        assert_eq!(t.len(), 2);
        assert_eq!(m, vec![d.zero()]);
    }

    #[test]
    fn isotropic_sets() {
        assert_eq!(a1().isotropic_elements(), vec![a1().zero()]);
        // brute force over H(2): q(x/2, y/2) = xy/2, so exactly the three
        // classes with xy even are isotropic
        let h2 = group(&[vec![0, 2], vec![2, 0]]);
        assert_eq!(h2.order(), 4);
        let iso = h2.isotropic_elements();
        assert_eq!(iso.len(), 3);
        assert!(iso.contains(&h2.zero()));
        for x in h2.elements() {
            assert_eq!(iso.contains(&x), h2.q_disc(&x).is_zero());
        }
    }

    #[test]
    fn class_of_inverts_lift() {
        for d in [a1(), a2(), group(&[vec![0, 2], vec![2, 0]])] {
            for x in d.elements() {
                assert_eq!(d.class_of(&d.lift(&x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn lift_independence_of_q() {
        let d = a2();
        let gen = DiscElement::new(vec![1]);
        let mut lift = d.lift(&gen);
        let q0 = d.q_disc(&gen);
        // perturb the lift by a lattice vector: q mod 1 must not change
        lift[0] += rat_int(1);
        lift[1] -= rat_int(2);
        let q1 = QmodZ::new(&d.source().quad(&lift));
        assert_eq!(q0, q1);
    }

    #[test]
    fn order_cap() {
        let l = validate_lattice(IntegerMatrix::from_rows(&[vec![200]])).unwrap();
        assert!(matches!(
            discriminant_group_with_cap(&l, 100),
            Err(Error::OrderCapExceeded(200, 100))
        ));
    }
}
