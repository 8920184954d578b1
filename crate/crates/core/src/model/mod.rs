//! The symmetric pentagon model: geometry, masses, the reduced equations and
//! the polynomials they eliminate to.

pub mod formulas;
pub mod geometry;
pub mod mechanics;
pub mod polynomials;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::bpoly::BpolyError;
use crate::numeric::NumericError;
use crate::upoly::UpolyError;

pub use formulas::ModelVars;
pub use geometry::{
    branch_domain_status, enclose_geometry, geometry_from_y5, geometry_from_y5_within,
    point_geometry, y5_of_t, Branch, DomainStatus, PentagonGeometry, PointGeometry, Shape,
};
pub use mechanics::{
    cc_residuals, cc_residuals_with, h1_eval, h2_eval, solve_masses, MassSolution,
};
pub use polynomials::{build_model_polynomials, model_polynomials, ModelPolynomials};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("y5 is not inside the open domain of the branch")]
    OutOfBranchDomain,
    #[error("the configuration is not a pentagon")]
    DegeneratePentagon,
    #[error("mass denominator or L2 enclosure contains zero")]
    SingularDenominator,
    #[error("derived polynomial {0} disagrees with its embedded form")]
    ReferenceMismatch(&'static str),
    #[error("embedded data file {0} fails its digest check")]
    DigestMismatch(&'static str),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Upoly(#[from] UpolyError),
    #[error(transparent)]
    Bpoly(#[from] BpolyError),
}
