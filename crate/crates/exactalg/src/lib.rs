//! Exact arithmetic for the rest of the workspace.
//!
//! Scalars are arbitrary-precision rationals. [`ParamPoly`] adds formal
//! parameters `s, t, λ, μ` and a formal constant `τ` with inverse. [`MPoly`]
//! is a multivariate polynomial in point coordinates with `ParamPoly`
//! coefficients, stored in graded-lex order.

mod error;
mod fischer;
pub mod linalg;
mod mono;
mod mpoly;
mod param;
mod rational;
pub mod sample;

pub use error::ExactError;
pub use fischer::{
    apply_diffop, derivative_space, fischer_inner, flat, gram_schmidt, leibnitz_expand, leibnitz_flat_form,
    leibnitz_triple, mono_factorial, DerivativeSpace, LeibnitzData,
};
pub use mono::{Mono, MAX_EXPONENT, MAX_VARS};
pub use mpoly::{MPoly, Vars};
pub use param::{PMono, Param, ParamPoly};
pub use rational::{binomial, factorial, q, q_to_f64, qi, Q};
