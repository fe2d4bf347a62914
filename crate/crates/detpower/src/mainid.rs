use std::collections::BTreeMap;

use exactalg::{mono_factorial, MPoly, Mono, ParamPoly};

use crate::error::DetPowerError;
use crate::expr::{DetCalculus, DetPowerExpr};

/// `det(∂/∂x − ∂/∂y)` (or `det(∂/∂x)` in the single calculus) applied to `e`.
pub fn det_wave_apply(calc: &DetCalculus, e: &DetPowerExpr) -> Result<DetPowerExpr, DetPowerError> {
    calc.apply_symbol(e, &calc.wave_symbol())
}

/// `D_{s,t} f`, defined by
/// `det(∂x − ∂y)[det(x)^s det(y)^t f] = det(x)^{s−1} det(y)^{t−1} D_{s,t} f`.
pub fn extract_dst(calc: &DetCalculus, f: &MPoly) -> Result<MPoly, DetPowerError> {
    if !calc.is_pair() {
        return Err(DetPowerError::Unsupported(
            "D_{s,t} lives on V × V; use DetCalculus::pair".into(),
        ));
    }
    let r = calc.algebra().rank() as u32;
    let w = det_wave_apply(calc, &calc.lift(f)?)?;
    debug_assert_eq!((w.shift_x, w.shift_y), (-(r as i64), -(r as i64)));
    if r == 1 {
        return Ok(w.body);
    }
    let dx = calc.det_x().pow(r - 1);
    let dy = calc.det_y().unwrap().pow(r - 1);
    w.body.div_exact(&(&dx * &dy)).map_err(|_| {
        DetPowerError::TheoremViolation(format!(
            "det(x)^{0} det(y)^{0} does not divide the body for f = {1}",
            r - 1,
            f
        ))
    })
}

fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Mono> {
    let mut out = vec![Mono::ONE];
    let mut frontier = vec![Mono::ONE];
    for _ in 0..deg {
        let mut next = Vec::new();
        for m in &frontier {
            // extend only at or after the last used variable to avoid repeats
            let start = (0..nvars).rev().find(|&i| m.exp(i) > 0).unwrap_or(0);
            for i in start..nvars {
                next.push(m.with_inc(i, 1));
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out.sort();
    out
}

/// Normal-ordered coefficients of `D_{s,t} = Σ_α c_α(x, y; s, t) ∂^α`.
///
/// Recovered from the action on monomials of degree ≤ r by a triangular
/// solve, then certified against `probe` (if given) by direct application.
pub fn dst_operator_terms(
    calc: &DetCalculus,
    probe: Option<&MPoly>,
) -> Result<BTreeMap<Mono, MPoly>, DetPowerError> {
    let r = calc.algebra().rank() as u32;
    let vars = calc.vars().clone();
    let nv = vars.len();
    let mut coeffs: BTreeMap<Mono, MPoly> = BTreeMap::new();
    for beta in monomials_up_to(nv, r) {
        let xb = MPoly::monomial(&vars, beta, ParamPoly::one());
        let mut res = extract_dst(calc, &xb)?;
        for (alpha, c) in &coeffs {
            if alpha.divides(beta) {
                res -= &(c * &xb.deriv_mono(*alpha));
            }
        }
        if !res.is_zero() {
            coeffs.insert(beta, res.scale_q(&mono_factorial(beta, nv).recip()));
        }
    }
    if let Some(f) = probe {
        let direct = extract_dst(calc, f)?;
        let mut via = MPoly::zero(&vars);
        for (alpha, c) in &coeffs {
            via += &(c * &f.deriv_mono(*alpha));
        }
        if via != direct {
            return Err(DetPowerError::TheoremViolation(
                "operator of order ≤ r does not reproduce D_{s,t}".into(),
            ));
        }
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration() {
        // C(n + d, d) monomials of degree ≤ d in n variables
        assert_eq!(monomials_up_to(4, 2).len(), 15);
        assert_eq!(monomials_up_to(6, 3).len(), 84);
        let ms = monomials_up_to(3, 3);
        let mut dedup = ms.clone();
        dedup.dedup();
        assert_eq!(ms, dedup);
    }
}
