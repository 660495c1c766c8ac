use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("result is not a scalar Laurent polynomial in p, q: {0}")]
    NonScalarResult(String),
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("transcription error: {0} fails")]
    TranscriptionError(String),
    #[error("no cubic relation between id, c, c^2, c^3")]
    NoCubicRelation,
    #[error("ill-formed tangle at slice {slice}: {reason}")]
    IllFormedTangle { slice: usize, reason: String },
    #[error("orientation mismatch: {0}")]
    OrientationMismatch(String),
    #[error("morphism is not in the span of clasp, capcup, id")]
    NotInSpan,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("twist index must be nonzero")]
    ZeroIndex,
    #[error("annular expression has no plumbed annuli")]
    EmptyExpression,
    #[error("invalid annular expression: {0}")]
    InvalidExpression(String),
    #[error("top coefficient is not a single monomial")]
    NotMonic,
    #[error("degree and exponent have different parity")]
    ParityError,
    #[error("polynomial has a non-positive coefficient")]
    NonPositiveCoefficients,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
