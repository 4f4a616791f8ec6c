use thiserror::Error;

/// Errors raised by the shape, ideal, complex, Hilbert and reduction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("lambda has {lambda} parts but mu has {mu} entries")]
    LengthMismatch { lambda: usize, mu: usize },
    #[error("chain 0 <= mu_1 <= ... <= mu_n < lambda_n <= ... <= lambda_1 violated: {0}")]
    ChainViolation(String),
    #[error("shape is not symmetric-capable (needs mu_i >= i - 1 for all rows)")]
    NotSymmetricCapable,
    #[error("augmentation needs mu_1 <= n (mu_1 = {mu1}, n = {n}); drop unused variables first")]
    Mu1TooLarge { mu1: usize, n: usize },
    #[error("operation needs at least two rows")]
    TooFewRows,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous of degree {0}")]
    InhomogeneousInput(u32),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("(1-t)^{power} does not divide the Hilbert numerator")]
    DivisionFailure { power: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
