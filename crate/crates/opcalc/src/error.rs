use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("insufficient grid: {0}")]
    InsufficientGrid(String),

    #[error("quadrature did not converge: {0}")]
    Convergence(String),

    #[error("non-integrable singularity: {0}")]
    Singularity(String),

    #[error("not enough smoothness: {0}")]
    Smoothness(String),

    #[error("outside domain: {0}")]
    Domain(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("no tabulated Mellin multiplier for family {0}")]
    NoMultiplier(String),

    #[error("weight vanishes on the dual grid: {0}")]
    WeightZero(String),

    #[error("special-function pole: {0}")]
    Pole(String),

    #[error("argument off the supported branch: {0}")]
    Branch(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal conditions attached to otherwise valid computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// The operator is computed pointwise but is unbounded on L2 at this
    /// parameter (the zero-order Buschman-Erdelyi norm diverges where
    /// sin(pi nu) = 1).
    UnboundedOperator { family: String, nu: f64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::UnboundedOperator { family, nu } => write!(
                f,
                "operator {family} is unbounded on L2 at nu = {nu} (sin pi nu = 1)"
            ),
        }
    }
}

impl Error {
    /// CLI process exit code: 2 for usage problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Parse(_) => 2,
            _ => 3,
        }
    }
}
