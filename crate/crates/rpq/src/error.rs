use conformal::ConformalError;
use detpower::DetPowerError;
use exactalg::ExactError;
use jordan::JordanError;
use thiserror::Error;
use weyl::WeylError;

#[derive(Debug, Error)]
pub enum RpqError {
    /// Outside `p ≥ 2, q ≥ 1`.
    #[error("signature ({p},{q}) outside p ≥ 2, q ≥ 1")]
    Signature { p: usize, q: usize },
    #[error("bracket order must be at least 1")]
    ZeroOrder,
    #[error(transparent)]
    Conformal(#[from] ConformalError),
    #[error(transparent)]
    DetPower(#[from] DetPowerError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
