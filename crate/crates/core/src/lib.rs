//! Exact polyhedral and lattice machinery for varieties with torus action
//! given by matrix data (A, P, Σ): construction of the anticanonical
//! complex, singularity classification via lattice points, a dual
//! cross-validation construction, and a classifier for three-dimensional
//! canonical Fano intrinsic quadrics of complexity two.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals).
//! Floating point is never used; singularity verdicts depend on exact
//! lattice-point membership.

pub mod anticanonical;
pub mod dual;
pub mod error;
pub mod lattice;
pub mod num;
pub mod polyhedral;
pub mod quadrics;
pub mod variety;

pub use error::Error;
pub use num::{Int, Rat};
