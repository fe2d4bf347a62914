//! Weyl algebra of polynomial-coefficient differential operators.
//!
//! Operators are kept in normal order (coefficients left of derivatives).
//! On top of composition this crate provides the formal Fourier
//! conjugation and the operator families `E_{s,t}` and `F_{λ,μ}`.

mod diffop;
mod error;
mod families;
mod fourier;

pub use diffop::DiffOp;
pub use error::WeylError;
pub use families::{
    build_dst, build_est, build_f, est_from_dst, restrict_diagonal, EstFamily, FourierConvention,
};
pub use fourier::{fourier_conjugate, fourier_conjugate_inv, parity_conjugate, weyl_substitute};
