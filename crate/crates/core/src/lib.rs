//! Computational toolkit for even quadratic lattices and vector-valued
//! modular forms: discriminant forms, the Weil representation of the
//! metaplectic group, theta and Eisenstein series, induction operators
//! between a lattice and its sublattices, and symmetric-square L-series
//! over coefficient tables.

pub mod arrows;
pub mod discform;
pub mod eisenstein;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod lattice;
pub mod lseries;
pub mod matrix;
pub mod rat;
pub mod snf;
pub mod theta;
pub mod weil;

pub use error::{Error, Result};
