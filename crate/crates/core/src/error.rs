use thiserror::Error;

/// Errors shared across the workspace.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be >= 1")]
    ZeroModulus,
    #[error("group order does not fit in 64 bits")]
    OrderOverflow,
    #[error("element/character dimension does not match group")]
    DimensionMismatch,
    #[error("homomorphism is not well-defined modulo source moduli")]
    IllFormedHom,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("set must be nonempty")]
    EmptySet,
    #[error("operands live on different groups")]
    GroupMismatch,
    #[error("conditioning event has zero probability")]
    ZeroProbabilityFiber,
    #[error("distribution support escapes the ambient set A")]
    SupportEscape,
    #[error("iterated logarithm of 16K is nonpositive")]
    DegenerateK,
    #[error("Bohr radius must lie in (0, 2]")]
    BadRadius,
    #[error("no regular radius found on the candidate grid")]
    NoRegularRadiusFound,
    #[error("post-verification failed: {0}")]
    VerificationFailed(String),
    #[error("containment verification failed: {0}")]
    ContainmentFailed(String),
    #[error("Bohr set is not regular")]
    NotRegular,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("P(X in S) < 1/2")]
    InsufficientMass,
    #[error("parameter system infeasible: {0}")]
    Infeasible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
