use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Variants split into input problems (bad literals, violated preconditions)
/// and internal consistency failures that signal a bug; see [`Error::is_internal`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operators do not commute (pair {0}, {1})")]
    NonCommuting(usize, usize),
    #[error("characteristic polynomial does not split over the rationals: {poly}")]
    IrrationalSpectrum { poly: String },
    #[error("weight is not dominant: lambda+rho = {0}")]
    NotDominant(String),
    #[error("weight is not integral-spaced: {0}")]
    NotIntegralSpaced(String),
    #[error("lambda - mu is not a weight of V^(tensor {l})")]
    NoTensorDatum { l: usize },
    #[error("multisegment support {tau} does not match grading values {sigma}")]
    SupportMismatch { tau: String, sigma: String },
    #[error("no double coset matches corner-rank table {0}")]
    NoMatchingCoset(String),
    #[error("matrix has entries outside the degree-one piece at ({0}, {1})")]
    NotGradedOne(usize, usize),
    #[error("segment lengths sum to {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("module is not generated by its canonical vector")]
    NotCyclic,
    #[error("two irreducibles share the factor signature {0}")]
    AmbiguousFactorSignature(String),
    #[error("image weight block was not allocated: {0}")]
    BlockRangeExceeded(String),
    #[error("central invariants up to degree {0} fail to separate the block")]
    UnresolvedCollision(usize),
    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that can only come from an implementation bug.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NoMatchingCoset(_)
                | Error::BlockRangeExceeded(_)
                | Error::UnresolvedCollision(_)
                | Error::RelationCheckFailed(_)
                | Error::NonCommuting(..)
                | Error::IrrationalSpectrum { .. }
                | Error::AmbiguousFactorSignature(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
