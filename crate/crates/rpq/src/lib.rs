//! Closed-form operators for `V = ℝ^{p,q}` (`p ≥ 2`, `q ≥ 1`): `D_{s,t}`,
//! `E_{s,t}`, `F_{λ,μ}` and `B^{(1)}_{λ,μ}`, their agreement with the
//! generic construction, and the brackets
//! `B^{(N)}_{λ,μ} = res ∘ F_{λ+N−1,μ+N−1} ∘ ⋯ ∘ F_{λ,μ}`.

mod error;
mod operators;

pub use error::RpqError;
pub use operators::{proportionality, swap_slots, Consistency, Proportionality, RpqOperators};
