//! Simple real Jordan algebras in explicit coordinates.
//!
//! Four families carry arithmetic: `Sym(m,ℝ)`, `Mat(m,ℝ)`, `Herm(m,ℂ)` and
//! `ℝ^{p,q}`. Every algebra is reduced to structure constants in a fixed
//! coordinate chart, so the same code handles rational points and symbolic
//! (polynomial) coordinates.

mod algebra;
mod element;
mod error;
mod kind;
mod registry;
mod scalar;

pub use algebra::Algebra;
pub use element::JordanElement;
pub use error::JordanError;
pub use kind::Kind;
pub use registry::{registry, registry_json, JordanType, RegistryRow};
pub use scalar::Scalar;
