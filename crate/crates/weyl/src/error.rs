use detpower::DetPowerError;
use exactalg::ExactError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeylError {
    /// Residual τ dependence or another convention clash.
    #[error("convention inconsistency: {0}")]
    Convention(String),
    #[error(transparent)]
    DetPower(#[from] DetPowerError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
