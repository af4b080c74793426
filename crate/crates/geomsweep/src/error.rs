use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two circles coincide (same center and radius within tolerance), so
    /// their boundary intersection is not a finite point set.
    #[error("circles are identical within tolerance")]
    IdenticalCircles,

    /// A polygon failed the simplicity check (self-intersection or a
    /// degenerate spur).
    #[error("polygon is not simple: {0}")]
    NotSimple(String),

    /// A segment tree was asked to cover zero coordinates.
    #[error("segment tree domain is empty")]
    EmptyDomain,

    /// A point update referenced a coordinate that is not a leaf key.
    #[error("coordinate {0} is not a leaf key of the segment tree")]
    UnknownCoordinate(f64),

    /// A point update referenced an id unknown to the structure.
    #[error("point id {0} is not present in the tree")]
    UnknownPoint(usize),

    /// An object's dimensionality does not match the expected one.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The probe hyper-rectangle cannot fit inside the container at all,
    /// regardless of point coverage.
    #[error("probe box with l1 = {l1} exceeds the container extent in dimension {dim}")]
    DoesNotFit { l1: f64, dim: usize },

    /// The automaton failed validation; the diagnostics list every problem.
    #[error("invalid automaton: {}", .0.join("; "))]
    InvalidAutomaton(Vec<String>),

    /// An oracle was given an instance beyond its documented size cap.
    #[error("instance too large for the brute-force oracle: {0}")]
    TooLarge(String),

    /// Construction-time validation failure (non-finite field, inverted
    /// bounds, bad aspect ratio, malformed input document, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// I/O failure while reading or writing a document.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A document could not be parsed.
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
