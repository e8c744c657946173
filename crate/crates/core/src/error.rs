//! Typed errors shared across the crate.
//!
//! Every failure mode carries a stable machine-readable name (see
//! [`Error::name`]) so that front ends can echo it verbatim.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gram matrix is not symmetric: entry ({0},{1}) differs from ({1},{0})")]
    NotSymmetric(usize, usize),
    #[error("gram matrix has odd diagonal entry at position {0}")]
    NotEven(usize),
    #[error("gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("sublattice basis is singular")]
    SingularBasis,
    #[error("induced gram matrix has an odd diagonal entry; basis does not span a sublattice of an even lattice")]
    OddInducedGram,
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("enumeration bound is negative")]
    BoundNegative,
    #[error("discriminant group order {0} exceeds the configured cap {1}")]
    OrderCapExceeded(u64, u64),
    #[error("Gauss sum magnitude {0} deviates from sqrt(|D|) = {1} beyond tolerance; discriminant form data is corrupt")]
    GaussSumInconsistent(f64, f64),
    #[error("tracked automorphy phase {0} matches neither square-root branch of {1}")]
    PhaseAmbiguous(String, String),
    #[error("representation is not trivial on the congruence subgroup: offending matrix {0}, deviation {1}")]
    TrivialityViolated(String, f64),
    #[error("component vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("output Fourier index ({0}, {1}) violates n = q(coset) mod 1")]
    IndexIncompatible(String, String),
    #[error("coefficient tables have incompatible completeness bounds {0} and {1}")]
    IncompatibleBounds(String, String),
    #[error("truncation radius exceeded cap {0} before the tail bound dropped below tolerance")]
    TailBoundFailure(f64),
    #[error("coset {0} is not isotropic: q = {1}")]
    NotIsotropic(String, String),
    #[error("Re(s) = {0} is outside the convergence region Re(s) > {1}")]
    ConvergenceWarning(f64, f64),
    #[error("coefficient table incomplete: index ({0}, {1}) not covered by bound {2}")]
    TableIncomplete(String, String, String),
    #[error("sublattice span is not definite")]
    NotDefinite,
    #[error("truncation ranges of the two series are misaligned: {0}")]
    MisalignedTruncation(String),
    #[error("index n = {0} is incongruent to q(coset) = {1} mod 1")]
    IndexIncongruent(String, String),
    #[error("vector does not lie in the dual lattice")]
    NotInDual,
    #[error("coefficient a(coset, t) vanishes; no modulus can isolate it")]
    CoefficientZero,
    #[error("available table range cannot certify the isolating inequality: {0}")]
    RangeInsufficient(String),
    #[error("projection onto the negative subspace is degenerate")]
    DegenerateProjection,
    #[error("io error: {0}")]
    IoError(String),
    #[error("schema error: {0}")]
    SchemaError(String),
}

impl Error {
    /// Stable name of the error kind, used by the CLI JSON output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSymmetric(..) => "NotSymmetric",
            Error::NotEven(..) => "NotEven",
            Error::Degenerate => "Degenerate",
            Error::SingularBasis => "SingularBasis",
            Error::OddInducedGram => "OddInducedGram",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::BoundNegative => "BoundNegative",
            Error::OrderCapExceeded(..) => "OrderCapExceeded",
            Error::GaussSumInconsistent(..) => "GaussSumInconsistent",
            Error::PhaseAmbiguous(..) => "PhaseAmbiguous",
            Error::TrivialityViolated(..) => "TrivialityViolated",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::IndexIncompatible(..) => "IndexIncompatible",
            Error::IncompatibleBounds(..) => "IncompatibleBounds",
            Error::TailBoundFailure(..) => "TailBoundFailure",
            Error::NotIsotropic(..) => "NotIsotropic",
            Error::ConvergenceWarning(..) => "ConvergenceWarning",
            Error::TableIncomplete(..) => "TableIncomplete",
            Error::NotDefinite => "NotDefinite",
            Error::MisalignedTruncation(..) => "MisalignedTruncation",
            Error::IndexIncongruent(..) => "IndexIncongruent",
            Error::NotInDual => "NotInDual",
            Error::CoefficientZero => "CoefficientZero",
            Error::RangeInsufficient(..) => "RangeInsufficient",
            Error::DegenerateProjection => "DegenerateProjection",
            Error::IoError(..) => "IoError",
            Error::SchemaError(..) => "SchemaError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
