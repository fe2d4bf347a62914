use exactalg::ExactError;
use jordan::JordanError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DetPowerError {
    /// An exact division predicted by a theorem did not go through.
    #[error("identity violated: {0}")]
    TheoremViolation(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
