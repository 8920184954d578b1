//! Exact elimination, real-root isolation and interval certification for
//! symmetric equilateral pentagonal central configurations of the planar
//! five-body problem.
//!
//! The numeric layers are generic over [`scalar::Scalar`], so the same model
//! formulas run on `f64`, on exact rationals, on rational intervals and on
//! symbolic polynomials. The aliases below fix the concrete types used on the
//! certified path.

pub mod bpoly;
pub mod cert;
pub mod classify;
pub mod model;
pub mod numeric;
pub mod scalar;
pub mod upoly;

/// Exact rational of unbounded size, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Closed interval with exact rational endpoints.
pub type RationalInterval = numeric::Interval<Rational>;

pub use bpoly::{BiPoly, RatFun2};
pub use numeric::{Interval, NumericError};
pub use scalar::{RealSqrt, Scalar};
pub use upoly::{UniPoly, Var};
