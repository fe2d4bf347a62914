use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VarMismatch { left: Vec<String>, right: Vec<String> },
    #[error("derivative space of the zero polynomial is empty")]
    EmptySpace,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("division by a polynomial whose leading coefficient is not a nonzero rational")]
    BadDivisor,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("parameter-free input required")]
    ParametricInput,
    #[error("singular linear system")]
    Singular,
    #[error("odd power of the Fourier constant cannot be evaluated to a real value")]
    OddTauPower,
}
