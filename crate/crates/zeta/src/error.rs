use exactalg::ExactError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("quadrature for {what} did not converge (error estimate {estimate:e})")]
    Quadrature { what: String, estimate: f64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}
