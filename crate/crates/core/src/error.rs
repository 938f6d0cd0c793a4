use thiserror::Error;

/// Errors raised by the invariant pipelines.
///
/// Several variants signal a broken formula or a violated integrality
/// structure rather than bad input; callers treat them as hard failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("leading term of series is not invertible")]
    NonInvertibleLeadingTerm,
    #[error("unsupported knot kind: {0}")]
    UnsupportedKnotKind(String),
    #[error("twist parameter p = {0} is not supported (need p <= -1 or p >= 2)")]
    UnsupportedP(i64),
    #[error("curve is not of the supported trinomial shape: {0}")]
    NotNormalizable(String),
    #[error("singular branch: {0}")]
    SingularBranch(String),
    #[error("non-integer Ooguri-Vafa invariant at (2i, 2j) = ({i2}, {j2}): {value}")]
    NonIntegerInvariant { i2: i64, j2: i64, value: String },
    #[error("non-integer BPS invariant b({r}, {m}) = {value}")]
    NonIntegerBps { r: u32, m: i64, value: String },
    #[error("unknot recursion violated at n = {0}")]
    RecursionViolated(u32),
    #[error("invalid link specification: {0}")]
    InvalidSpec(String),
    #[error("color vector is zero")]
    ZeroColorVector,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
