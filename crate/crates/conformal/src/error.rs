use exactalg::ExactError;
use jordan::JordanError;
use thiserror::Error;
use weyl::WeylError;

#[derive(Debug, Error)]
pub enum ConformalError {
    /// `α(gκ(x)) = 0`: `g` is not defined at `x`.
    #[error("g maps the point to infinity")]
    PointAtInfinity,
    #[error("matrix does not preserve the quadratic form: {0}")]
    NotInGroup(String),
    #[error("singular input: {0}")]
    Singular(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The two sides of a covariance identity differ.
    #[error("covariance violated for basis element {index}: residual term {term}")]
    CovarianceViolation { index: usize, term: String },
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
