//! Certificates: a deterministic text serialisation of a classification, its
//! independent re-verification, figure and root tables, and the on-disk
//! resultant cache.

mod cache;
mod document;
mod figure;
mod roots;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::classify::ClassifyError;
use crate::model::ModelError;
use crate::numeric::NumericError;
use crate::upoly::UpolyError;

pub use cache::{classify_cached, eliminate_cached, resultant_cache_path};
pub use document::{
    CandidateRecord, CertificateDocument, CountRecord, DataRecord, FileDigest, IntervalRecord,
    MassRecord, PeelDoc, PeeledFactor, PrecisionRecord, QFactorRecord, QRecord, QSolutionRecord,
    RootRecord, RuntimeRecord, SolutionRecord, SpecialRecord, WitnessRecord, RECORD_BITS,
    SCHEMA_VERSION,
};
pub use figure::{figure, gallery_samples, FigureKind, FigureRow, FigureTable, GallerySample};
pub use roots::{roots_table, RootRange, RootRow, RootTarget, RootsTable};
pub use verify::{verify, Failure, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed certificate: {0}")]
    Parse(String),
    #[error("no certified {0} configuration in the certificate")]
    MissingCertificate(&'static str),
    #[error("unknown target {0:?} (expected P, p120, p132, R60 or Q)")]
    UnknownTarget(String),
    #[error("unknown range {0:?} (expected all, window, tprime, S or lo,hi)")]
    UnknownRange(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Upoly(#[from] UpolyError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

impl CertError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            CertError::Io { .. } => "io",
            CertError::Parse(_) => "parse",
            CertError::MissingCertificate(_) => "missing-certificate",
            CertError::UnknownTarget(_) => "unknown-target",
            CertError::UnknownRange(_) => "unknown-range",
            CertError::Classify(e) => match e {
                ClassifyError::PeelFailure(_) => "peel-failure",
                ClassifyError::ExtractionAmbiguous(_) => "extraction-ambiguous",
                ClassifyError::WrongRootCount(_) => "wrong-root-count",
                ClassifyError::CrossCheckMismatch(_) => "cross-check-mismatch",
                ClassifyError::Model(_) => "model",
                ClassifyError::Upoly(_) => "polynomial",
                ClassifyError::Bpoly(_) => "bivariate",
            },
            CertError::Model(_) => "model",
            CertError::Upoly(_) => "polynomial",
            CertError::Numeric(_) => "numeric",
        }
    }

    /// Caused by the request rather than by a failed check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CertError::UnknownTarget(_) | CertError::UnknownRange(_)
        )
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> CertError {
    CertError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

#[derive(Serialize)]
struct FailureDoc<'a> {
    integrity_failure: FailureBody<'a>,
}

#[derive(Serialize)]
struct FailureBody<'a> {
    kind: &'a str,
    message: &'a str,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    records: &'a [Failure],
}

/// TOML record describing a failed command, for machine consumption.
pub fn integrity_record(kind: &str, message: &str, records: &[Failure]) -> String {
    let doc = FailureDoc {
        integrity_failure: FailureBody {
            kind,
            message,
            records,
        },
    };
    toml::to_string(&doc).unwrap_or_else(|_| format!("[integrity_failure]\nkind = {kind:?}\n"))
}
