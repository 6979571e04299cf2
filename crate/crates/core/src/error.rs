use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Arithmetic is exact on `i64` values; any intermediate result that does not
/// fit is reported as [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus must be positive, got {0}")]
    InvalidModulus(i64),
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: i64 },

    #[error("a non-orientable surface needs at least one crosscap")]
    InvalidGenus,
    #[error("genus {0} is out of range")]
    GenusOutOfRange(i64),
    #[error("cone order must be positive, got {0}")]
    InvalidConeOrder(i64),
    #[error("not defined when the boundary is non-empty")]
    BoundaryNotSupported,
    #[error("only defined when the boundary is non-empty")]
    BoundaryRequired,

    #[error("pair {index}: alpha must be at least 1, got {alpha}")]
    InvalidAlpha { index: usize, alpha: i64 },
    #[error("pair {index}: alpha = {alpha} and beta = {beta} are not coprime")]
    PairNotCoprime { index: usize, alpha: i64, beta: i64 },
    #[error("cannot compare a closed invariant with one that has boundary")]
    MixedBoundary,
    #[error("covering degree must be non-zero")]
    ZeroDegree,
    #[error("degree {degree} shares a factor with the cone order {alpha} of pair {index}")]
    DegreeNotCoprime { index: usize, alpha: i64, degree: i64 },

    #[error("not a two-fiber invariant over the sphere: {0}")]
    NotALensForm(String),
    #[error("p = {p} and q = {q} are not coprime")]
    LensNotCoprime { p: i64, q: i64 },
    #[error("invalid gluing matrix: alpha * beta' - alpha' * beta must be 1")]
    InvalidGluing,
    #[error("L({p}, {q}) has no cover representative with the same q (gcd {gcd})")]
    IncompatibleCover { p: i64, q: i64, gcd: i64 },
    #[error("p must be non-negative, got {0}")]
    NegativeP(i64),
    #[error("alpha must be at least 1, got {0}")]
    InvalidExceptionalAlpha(i64),

    #[error("homotopy classes are only catalogued over an oriented base")]
    NonOrientedBase,
    #[error("the fibering has no horizontal vector field")]
    NoHvf,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
