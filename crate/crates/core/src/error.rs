use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor must be monic")]
    NonMonicDivisor,
    #[error("divisor must have degree at least 1")]
    ConstantDivisor,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed order: {0}")]
    Shape(String),
    #[error("structure constants are not associative on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unity fails to act as identity on basis element {0}")]
    UnityFailure(usize),
    #[error("natural representation is not a unital homomorphism: {0}")]
    NaturalRep(String),
    #[error("unknown order `{0}`")]
    UnknownOrder(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("elements belong to different orders")]
    OrderMismatch,
    #[error("{0} must be nonempty")]
    EmptyInput(&'static str),
    #[error("element is not integral: {0}")]
    NotIntegral(String),
    #[error("element is a rational scalar")]
    ScalarElement,
    #[error("matrix is not upper triangular")]
    NotTriangular,
    #[error("pair {0} has unequal spectra")]
    SpectrumMismatch(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate degree {0} exceeds the limit of {1}")]
    CertificateTooLarge(u64, u64),
    #[error("parse error: {0}")]
    Parse(String),
}
