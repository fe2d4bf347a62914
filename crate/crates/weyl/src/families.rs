use std::sync::Arc;

use detpower::{dst_operator_terms, DetCalculus};
use exactalg::{q, MPoly, Param, ParamPoly, Vars};
use jordan::Algebra;

use crate::diffop::DiffOp;
use crate::error::WeylError;
use crate::fourier::fourier_conjugate_inv;

/// Which Fourier kernel fixes the formal constant `τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourierConvention {
    /// `e^{2π√−1 (x,ξ)}`; `τ` stays formal.
    TwoPiI,
    /// `e^{√−1 (x,ξ)}`, i.e. `τ = √−1`.
    UnitI,
}

/// `D_{s,t}` as a normal-ordered operator on `V × V`.
pub fn build_dst(alg: &Arc<Algebra>) -> Result<DiffOp, WeylError> {
    let calc = DetCalculus::pair(alg)?;
    let terms = dst_operator_terms(&calc, None)?;
    Ok(DiffOp::from_terms(calc.vars(), terms))
}

/// `E_{s,t} = 𝓕⁻¹ ∘ D_{s,t} ∘ 𝓕`, stored as `τ^{−tau_power}·E` so that the
/// stored operator is free of `τ`.
#[derive(Clone, Debug)]
pub struct EstFamily {
    pub dst: DiffOp,
    pub scaled: DiffOp,
    pub tau_power: i32,
    pub n: usize,
    pub r: usize,
}

impl EstFamily {
    pub fn vars(&self) -> &Arc<Vars> {
        self.dst.vars()
    }

    /// `E_{s,t}` with `τ` reinstated (formally) or set to `√−1`.
    pub fn in_convention(&self, conv: FourierConvention) -> Result<DiffOp, WeylError> {
        let with_tau = self.scaled.scale(&ParamPoly::tau_pow(self.tau_power));
        match conv {
            FourierConvention::TwoPiI => Ok(with_tau),
            FourierConvention::UnitI => Ok(with_tau.eval_tau_unit_i()?),
        }
    }
}

pub fn build_est(alg: &Arc<Algebra>) -> Result<EstFamily, WeylError> {
    let dst = build_dst(alg)?;
    est_from_dst(dst, alg.n(), alg.rank())
}

/// Solve `FC(E) = D` by the inverse automorphism and factor out the τ power.
pub fn est_from_dst(dst: DiffOp, n: usize, r: usize) -> Result<EstFamily, WeylError> {
    let e = fourier_conjugate_inv(&dst)?;
    let powers = e.tau_powers();
    let tau_power = match powers.as_slice() {
        [k] => *k,
        [] => 0,
        _ => {
            return Err(WeylError::Convention(format!(
                "E_{{s,t}} mixes τ powers {:?}",
                powers
            )))
        }
    };
    let scaled = e.scale(&ParamPoly::tau_pow(-tau_power));
    Ok(EstFamily {
        dst,
        scaled,
        tau_power,
        n,
        r,
    })
}

/// `F_{λ,μ} = E_{n/r−λ, n/r−μ}`.
pub fn build_f(est: &DiffOp, n: usize, r: usize) -> DiffOp {
    let nr = ParamPoly::from_q(q(n as i64, r as i64));
    let s = &nr - &ParamPoly::param(Param::Lambda);
    let t = &nr - &ParamPoly::param(Param::Mu);
    est.subst_param(Param::S, &s).subst_param(Param::T, &t)
}

/// Restriction to the diagonal: substitutes `y_j ↦ x_j` in the
/// coefficients of an operator on `V × V` while keeping `∂x` and `∂y`
/// distinct. Applying the result to `F(x, y)` and setting `y = x` gives
/// `res(Op F)`.
pub fn restrict_diagonal(op: &DiffOp) -> DiffOp {
    let v = op.vars();
    let n = v.len() / 2;
    let subs: Vec<MPoly> = (0..2 * n).map(|j| MPoly::var(v, j % n)).collect();
    op.subst_coeff_vars(&subs)
}
