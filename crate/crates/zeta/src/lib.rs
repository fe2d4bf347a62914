//! Gamma factors and functional-equation data for local Zeta integrals on
//! simple Jordan algebras.
//!
//! * [`GammaFactor`] is an exact product of powers of `√−1`, `2`, `π`,
//!   linear factors and Gamma values with affine arguments in `(s, t)`,
//!   with a canonical form that telescopes `Γ(x+k)/Γ(x)`.
//! * [`constants`] tabulates `c(s, ε)` and `κ(s, t)`.
//! * [`matrices`] holds the `ℝ^{p,q}` matrix `𝐀(s)` and the euclidean
//!   case-by-case functional equations; [`orbits`] recomputes the latter
//!   from the orbit generating function.
//! * [`numeric`] checks the `ℝ^{p,q}` functional equation by quadrature
//!   against Gaussian test functions.

pub mod affine;
pub mod constants;
pub mod error;
pub mod gamma;
pub mod matrices;
pub mod numeric;
pub mod orbits;
pub mod trig;
pub mod zmaps;

pub use affine::Affine;
pub use constants::{
    c_factor, kappa_const, kappa_from_c, kappa_rpq_full, kappa_rpq_gamma_quotient, ZetaClass,
};
pub use error::ZetaError;
pub use gamma::{b_factor, gamma_euclidean, gamma_omega, gamma_pq, gamma_v, GammaFactor};
pub use matrices::{
    a_matrix_pq, a_matrix_pq_at, euclidean_matrices, flip_residual_pq, periodicity_residual_pq,
    EuclideanCase, EuclideanFE,
};
pub use numeric::{numeric_zeta_check, GaussianTest, QuadratureOptions, ZetaCheckReport};
pub use trig::{TrigExpr, TrigMatrix};
pub use zmaps::ZetaBasis;
