//! Conformal group of `V = ℝ^{p,q}` acting on the projective quadric
//! `{Q = 0}` in `ℝ × V × ℝ`, with `Q(α, v, β) = P(v) − αβ`.
//!
//! Group elements act on `V` by rational maps with cocycle
//! `a(g, x) = α(gκ(x))`. The Lie algebra acts on polynomials through the
//! first-order operators `dπ_λ(X)`, and [`covariance_check`] certifies
//! intertwining identities as exact operator equalities over `ℚ[λ, μ]`.
//! [`moebius`] covers the matrix algebras through linear fractional maps.

mod covariance;
mod error;
mod kernel;
mod lie;
pub mod moebius;
mod quadric;

pub use covariance::{
    covariance_apply_check, covariance_check, covariance_residual, restricted_covariance_residual,
    tensor_dpi, CovarianceCertificate, Slot, Target,
};
pub use error::ConformalError;
pub use kernel::{eval_f64, knapp_stein_kernel, signed_pow, Eps};
pub use lie::{InducedOp, LieElem};
pub use quadric::{ConfMatrix, GenKind, QuadricModel};
