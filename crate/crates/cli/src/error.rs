use hlab_core::algebra::AlgebraError;
use hlab_core::hochschild::HochschildError;
use hlab_core::linalg::LinalgError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INSUFFICIENT_PRECISION: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    InsufficientPrecision(String),
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::InsufficientPrecision(_) => "insufficient-precision",
            CliError::Failure(_) => "failure",
            CliError::Io(_) => "io",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
            CliError::InsufficientPrecision(_) => exit::INSUFFICIENT_PRECISION,
            CliError::Failure(_) => exit::FAIL,
        }
    }

    /// Single line for stderr: `error kind=<kind> message=<json string>`.
    pub fn line(&self) -> String {
        let msg = serde_json::to_string(&self.to_string()).unwrap_or_else(|_| "\"?\"".into());
        format!("error kind={} message={msg}", self.kind())
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let msg = e.to_string();
        match e {
            AlgebraError::Resource(_) | AlgebraError::BeyondTruncation { .. } => CliError::InsufficientPrecision(msg),
            AlgebraError::Invariant(_) => CliError::Failure(msg),
            AlgebraError::Linalg(l) => l.into(),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::NotPrime(_) | LinalgError::BadField(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<HochschildError> for CliError {
    fn from(e: HochschildError) -> Self {
        let msg = e.to_string();
        match e {
            HochschildError::InsufficientPrecision { .. } | HochschildError::Resource(_) => {
                CliError::InsufficientPrecision(msg)
            }
            HochschildError::InfiniteDimensional(_) | HochschildError::Params(_) => CliError::Usage(msg),
            HochschildError::Invariant(_) => CliError::Failure(msg),
            HochschildError::Algebra(a) => a.into(),
            HochschildError::Linalg(l) => l.into(),
        }
    }
}
