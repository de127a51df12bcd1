//! Exact computer algebra for affine modifications of affine domains,
//! weight degree functions and locally nilpotent derivations.

pub mod derivation;
pub mod error;
pub mod grading;
pub mod ideal;
pub mod ml_certificate;
pub mod modification;
pub mod poly;

pub use error::{Error, Result};
pub use ideal::{Budget, Ideal, MonomialOrder, PresentedAlgebra};
pub use poly::{Monomial, Polynomial, Rational, Ring, WeightFunction, WeightVector};
