use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no Laurent-polynomial quotient with integer coefficients exists")]
    NotDivisible,

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("m = {0} indexes the initial cluster {{x1, x2}}")]
    InitialClusterIndex(i64),

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("b = {0} is not supported here (requires b >= 2)")]
    UnsupportedB(u32),

    #[error("representation has no distinguished basis; coordinate counting does not apply")]
    UnsupportedRep,

    #[error("input exceeds size limit: {0}")]
    SizeLimit(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("non-integral value where an integer was required: {0}")]
    NotIntegral(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
