use exactalg::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("coordinate vector has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("element is not regular: rank {rank} < {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("element is singular (det = 0)")]
    Singular,
    #[error("unsupported algebra kind: {0}")]
    UnsupportedKind(String),
    #[error("could not parse algebra spec {0:?}")]
    Parse(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("point lies on the boundary det = 0")]
    Boundary,
    #[error("division not exact: input is not in W(det) or the computation is inconsistent")]
    Inconsistent,
    #[error(transparent)]
    Exact(#[from] ExactError),
}
