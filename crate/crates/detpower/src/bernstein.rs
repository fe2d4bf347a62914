use std::sync::Arc;

use exactalg::{q, qi, MPoly, Param, ParamPoly, Q};
use jordan::{Algebra, Kind};
use num_traits::{Signed, Zero};

use crate::error::DetPowerError;
use crate::expr::DetCalculus;
use crate::mainid::det_wave_apply;

#[derive(Clone, Debug)]
pub struct BernsteinReport {
    /// `b(s)` with `det(∂) det(x)^s = b(s) det(x)^{s−1}`.
    pub b: ParamPoly,
    /// Closed form the computation is compared with.
    pub expected: ParamPoly,
    pub matches: bool,
    pub convention: String,
}

/// `b_{k,l}(s) = s (s + l/2) ⋯ (s + (k−1) l/2)`.
pub fn b_kl(k: usize, l: usize) -> ParamPoly {
    let s = ParamPoly::param(Param::S);
    let mut acc = ParamPoly::one();
    for j in 0..k {
        acc = &acc * &(&s + &ParamPoly::from_q(q((j * l) as i64, 2)));
    }
    acc
}

/// Compute `b(s)` symbolically and compare with the closed form.
pub fn bernstein_poly(alg: &Arc<Algebra>) -> Result<BernsteinReport, DetPowerError> {
    let calc = DetCalculus::single(alg);
    let one = MPoly::one(alg.vars());
    let w = det_wave_apply(&calc, &calc.lift(&one)?)?;
    let r = alg.rank() as u32;
    let quot = if r == 1 {
        w.body
    } else {
        w.body
            .div_exact(&alg.det_poly().pow(r - 1))
            .map_err(|_| DetPowerError::TheoremViolation("det^{s−1} does not divide det(∂)det^s".into()))?
    };
    if quot.degree().unwrap_or(0) > 0 {
        return Err(DetPowerError::TheoremViolation(format!(
            "b-function depends on x: {}",
            quot
        )));
    }
    let b = quot.coeff(exactalg::Mono::ONE);
    let (expected, convention) = match alg.kind() {
        Kind::Rpq(p, qq) => {
            let n = (p + qq) as i64;
            let s = ParamPoly::param(Param::S);
            let e = &(&s * &(&s + &ParamPoly::from_q(q(n - 2, 2)))) * &ParamPoly::from_int(4);
            (
                e,
                "standard coordinates, P(∂) = ∂₁² + … + ∂_p² − ∂_{p+1}² − …; equals 4·b_{2,n−2}(s)"
                    .to_string(),
            )
        }
        _ => {
            let row = alg.registry_row();
            (
                b_kl(row.r, row.d),
                format!("derivatives dual to the trace form; b_{{{},{}}}(s)", row.r, row.d),
            )
        }
    };
    let matches = b == expected;
    Ok(BernsteinReport {
        b,
        expected,
        matches,
        convention,
    })
}

/// `v^{k,+} = |v|^k`, `v^{k,−} = sign(v)|v|^k` for `v ≠ 0`.
pub fn signed_power(v: &Q, k: i64, plus: bool) -> Q {
    let a = v.abs();
    let p = if k >= 0 {
        num_traits::pow(a, k as usize)
    } else {
        num_traits::pow(a.recip(), (-k) as usize)
    };
    if plus || v.is_positive() {
        p
    } else {
        -p
    }
}

/// Check `det(∂) det^{k,ε} = b(k) det^{k−1,−ε}` at a point with `det(x) ≠ 0`.
///
/// Near `x` the left side is `c · det^k` with `c = det^{k,ε}(x)/det(x)^k`, so
/// both sides are exact rationals.
pub fn branch_sign_check(
    alg: &Arc<Algebra>,
    b: &ParamPoly,
    k: i64,
    plus: bool,
    x: &[Q],
) -> Result<bool, DetPowerError> {
    assert!(k >= 1);
    let d = alg.det_q(x);
    if d.is_zero() {
        return Err(DetPowerError::Jordan(jordan::JordanError::Boundary));
    }
    let c = signed_power(&d, k, plus) / num_traits::pow(d.clone(), k as usize);
    let lhs_poly = exactalg::apply_diffop(&alg.det_dual_poly(), &alg.det_poly().pow(k as u32))?;
    let lhs = c * lhs_poly.eval_q(x);
    let bk = b
        .eval_param(Param::S, &qi(k))
        .constant()
        .expect("b depends on s only");
    let rhs = bk * signed_power(&d, k - 1, !plus);
    Ok(lhs == rhs)
}
