//! Calculus of determinant powers on a Jordan algebra.
//!
//! Expressions `det(x)^{s+a} det(y)^{t+b} q(x,y)` are closed under
//! differentiation, which turns the Bernstein identity
//! `det(∂) det^s = b(s) det^{s−1}` and the two-variable identity
//! `det(∂x − ∂y)[det(x)^s det(y)^t f] = det(x)^{s−1} det(y)^{t−1} D_{s,t} f`
//! into exact polynomial divisions.

mod bernstein;
mod error;
mod expr;
mod graded;
mod mainid;

pub use bernstein::{b_kl, bernstein_poly, branch_sign_check, signed_power, BernsteinReport};
pub use error::DetPowerError;
pub use expr::{DetCalculus, DetPowerExpr};
pub use graded::{deltafgh_check, GradedDelta};
pub use mainid::{det_wave_apply, dst_operator_terms, extract_dst};
