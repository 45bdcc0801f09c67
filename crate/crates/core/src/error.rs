use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no points provided")]
    EmptySpectrum,

    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },

    #[error("delta must be positive and finite, got {0}")]
    InvalidDelta(f64),

    #[error("point {index} is not real (imaginary part {im})")]
    NonRealPoint { index: usize, im: f64 },

    #[error("points {first} and {second} coincide; deduplicate or perturb first")]
    DuplicatePoint { first: usize, second: usize },

    #[error("index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("labels cover {got} elements, expected {expected}")]
    LabelMismatch { expected: usize, got: usize },

    #[error("in-circle test called with collinear first three points")]
    Collinear,

    #[error("point {index} is not a vertex of the triangulation")]
    NotAVertex { index: usize },

    #[error("inconsistent predicate outcomes ({0}); use filtered or exact arithmetic")]
    InconsistentPredicates(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("deadline exceeded")]
    TimedOut,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
