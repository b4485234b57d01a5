//! Error type shared by every module of the crate.

use alloc::string::String;

/// Broad classification of an [`Error`], used by front ends to choose an
/// exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The request itself was malformed (bad order, index, shape, ...).
    Validation,
    /// A verification step produced a mismatch.
    Verification,
    /// Externally supplied data (tables, labels, points) is inconsistent.
    InputData,
    /// An internal invariant was violated.
    Internal,
}

/// Errors produced by the exact arithmetic, combinatorics and algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A root of unity of order below 2 was requested.
    #[error("invalid root-of-unity order {0}: the order must be at least 2")]
    InvalidOrder(i64),
    /// Division by zero in an exact field.
    #[error("division by zero")]
    ZeroDivisor,
    /// A denominator vanished when evaluating at a specialization point.
    #[error("specialization pole: {0}")]
    SpecializationPole(String),
    /// Two contents collided, so the seminormal form is undefined.
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),
    /// Shapes, sizes or component counts do not match.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// An index (generator, node, position) is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// A malformed value was supplied.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A label is missing from a decomposition table.
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    /// The pair of multipartitions is not splittable.
    #[error("not splittable: {0}")]
    NotSplittable(String),
    /// The ratio of root scalars is not a root of unity times a rational.
    #[error("non-constant ratio: {0}")]
    NonConstantRatio(String),
    /// The eigenvalue oracle could not match eigenvalues to labels.
    #[error("ambiguous eigenvalue match: {0}")]
    AmbiguousMatch(String),
    /// A verification produced a mismatch.
    #[error("verification failure: {0}")]
    Verification(String),
    /// Input data (tables, labels) is inconsistent.
    #[error("input data error: {0}")]
    InputData(String),
    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Classify the error.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidOrder(_)
            | Error::ZeroDivisor
            | Error::SpecializationPole(_)
            | Error::DegenerateSpecialization(_)
            | Error::ShapeMismatch(_)
            | Error::IndexOutOfRange(_)
            | Error::Invalid(_)
            | Error::NotSplittable(_) => ErrorKind::Validation,
            Error::Verification(_) | Error::AmbiguousMatch(_) => ErrorKind::Verification,
            Error::UnknownLabel(_) | Error::NonConstantRatio(_) | Error::InputData(_) => {
                ErrorKind::InputData
            }
            Error::Internal(_) => ErrorKind::Internal,
        }
    }

    /// Short machine-readable tag for the error variant.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::InvalidOrder(_) => "invalid-order",
            Error::ZeroDivisor => "zero-divisor",
            Error::SpecializationPole(_) => "specialization-pole",
            Error::DegenerateSpecialization(_) => "degenerate-specialization",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::IndexOutOfRange(_) => "index-out-of-range",
            Error::Invalid(_) => "invalid",
            Error::UnknownLabel(_) => "unknown-label",
            Error::NotSplittable(_) => "not-splittable",
            Error::NonConstantRatio(_) => "non-constant-ratio",
            Error::AmbiguousMatch(_) => "ambiguous-match",
            Error::Verification(_) => "verification-failure",
            Error::InputData(_) => "input-data",
            Error::Internal(_) => "internal",
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
