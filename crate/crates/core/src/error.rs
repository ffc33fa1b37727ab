use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have order at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
    #[error("Rayleigh quotient of the zero vector")]
    ZeroVector,
    #[error("exact characteristic polynomial overflowed at coefficient c_{index}")]
    CharPolyOverflow { index: usize },
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("principal-minor oracle refuses order {n} > 20")]
    OracleTooLarge { n: usize },
    #[error("exact nullity {exact} disagrees with zero-eigenvalue count {float} at tolerance {tol:e}")]
    NullityMismatch { exact: usize, float: usize, tol: f64 },
    #[error("bound undefined for the zero matrix")]
    ZeroMatrix,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("walk count d_{k} overflowed u128")]
    WalkOverflow { k: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bound inapplicable: {0}")]
    Inapplicable(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn inapplicable(reason: impl Into<String>) -> Self {
        Error::Inapplicable(reason.into())
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self, Error::Inapplicable(_))
    }
}
