use exactalg::{qi, ExactError, MPoly, ParamPoly};

use crate::diffop::DiffOp;

/// The Weyl-algebra automorphism `x_j ↦ cx·∂_j`, `∂_j ↦ cd·x_j`.
///
/// It respects `[∂_j, x_j] = 1` only when `cx·cd = −1`; that is asserted.
pub fn weyl_substitute(a: &DiffOp, cx: &ParamPoly, cd: &ParamPoly) -> Result<DiffOp, ExactError> {
    assert_eq!(
        &(cx * cd),
        &ParamPoly::from_int(-1),
        "substitution is not a Weyl automorphism"
    );
    let vars = a.vars();
    let mut out = DiffOp::zero(vars);
    for (alpha, c) in a.terms() {
        let right = DiffOp::mult(&MPoly::monomial(vars, *alpha, cd.pow(alpha.degree())));
        for (m, k) in c.terms() {
            let left = DiffOp::deriv_mono(vars, *m).scale(&(k * &cx.pow(m.degree())));
            for (b, t) in left.compose(&right)?.terms() {
                out.add_term(*b, t.clone());
            }
        }
    }
    Ok(out)
}

/// Conjugation by the Fourier transform with kernel `e^{τ(x,ξ)}`:
/// `x_j ↦ τ⁻¹ ∂_j`, `∂_j ↦ −τ x_j`.
pub fn fourier_conjugate(a: &DiffOp) -> Result<DiffOp, ExactError> {
    weyl_substitute(a, &ParamPoly::tau_pow(-1), &-ParamPoly::tau_pow(1))
}

/// Inverse of [`fourier_conjugate`]: `x_j ↦ −τ⁻¹ ∂_j`, `∂_j ↦ τ x_j`.
pub fn fourier_conjugate_inv(a: &DiffOp) -> Result<DiffOp, ExactError> {
    weyl_substitute(a, &-ParamPoly::tau_pow(-1), &ParamPoly::tau_pow(1))
}

/// `A(−x, −∂)`.
pub fn parity_conjugate(a: &DiffOp) -> DiffOp {
    let vars = a.vars();
    let mut out = DiffOp::zero(vars);
    for (alpha, c) in a.terms() {
        let flipped = MPoly::from_terms(
            vars,
            c.terms().map(|(m, k)| {
                let odd = (m.degree() + alpha.degree()) % 2 == 1;
                (*m, if odd { k.scale(&qi(-1)) } else { k.clone() })
            }),
        );
        out.add_term(*alpha, flipped);
    }
    out
}
