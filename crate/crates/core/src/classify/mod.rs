//! The certified pipeline: elimination, root isolation, candidate
//! enumeration and adjudication.

pub mod adjudicate;
pub mod candidates;
pub mod cross_check;
pub mod elimination;
pub mod pipeline;

use thiserror::Error;

use crate::bpoly::BpolyError;
use crate::model::ModelError;
use crate::upoly::UpolyError;

pub use adjudicate::{
    adjudicate, cell_geometry, h1_at_point, sign_witness, witness_widths, Adjudication,
    GeometryReason, MassIndex, Precision, SignWitness, Verdict,
};
pub use candidates::{
    enumerate_candidates, factor_counts, root_table, search_window, wide_window, Candidate,
    FactorCounts, Isolators, RootEntry,
};
pub use cross_check::{count_in_s, cross_check_q, q_factors, s_range, QFactor, QFactors, QReport};
pub use elimination::{
    eliminate, extract_p120, peel, resultant_p, Elimination, ExtractionRoute, Factor, FactorSet,
    PeelRecord,
};
pub use pipeline::{
    classify, classify_with, solution_values, special_root, t_star_enclosure, Classification,
    ClassifyOptions, Solution, SolutionValues, SpecialRoot,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("claimed factor {0} does not divide exactly")]
    PeelFailure(&'static str),
    #[error("cannot split the degree-252 cofactor (reciprocal gcd has degree {0})")]
    ExtractionAmbiguous(usize),
    #[error("expected 18 roots in the window, found {0}")]
    WrongRootCount(usize),
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Upoly(#[from] UpolyError),
    #[error(transparent)]
    Bpoly(#[from] BpolyError),
}
