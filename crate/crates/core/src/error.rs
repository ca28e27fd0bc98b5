use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("unknown patch `{0}`")]
    UnknownPatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("CFL violation at t={t}: CFL={cfl:.3} > {limit} (max |u|={umax:.3e})")]
    CflViolation { t: f64, cfl: f64, limit: f64, umax: f64 },

    #[error("linear solver did not converge: {context} (residual {residual:.3e} after {iters} iterations)")]
    SolverNonConvergence { context: String, residual: f64, iters: usize },

    #[error("eigensolver did not converge within {0} sweeps")]
    EigenNonConvergence(usize),

    #[error("Newton iteration failed: {context} (residual {residual:.3e} after {iters} iterations)")]
    NewtonFailure { context: String, residual: f64, iters: usize },

    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    #[error("requested rank {requested} for {what} exceeds stored rank {available}")]
    RankExceeded { what: String, requested: usize, available: usize },

    #[error("numerical rank deficiency: {0}")]
    RankDeficient(String),

    #[error("zero reference norm in relative error")]
    ZeroReferenceNorm,

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("io error on `{path}`: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("file format error in `{path}`: {reason}")]
    Format { path: String, reason: String },

    #[error("checksum mismatch for `{0}`")]
    ChecksumMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Format { path: path.into(), reason: reason.into() }
    }
}
