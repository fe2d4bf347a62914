use std::sync::Arc;

use exactalg::{MPoly, Mono, ParamPoly, Vars};
use weyl::{restrict_diagonal, DiffOp};

use crate::error::ConformalError;
use crate::lie::LieElem;
use crate::quadric::QuadricModel;

/// A copy of `V` inside the operator's coordinates, carrying a weight.
#[derive(Clone, Debug)]
pub struct Slot {
    pub offset: usize,
    pub weight: ParamPoly,
}

impl Slot {
    pub fn new(offset: usize, weight: ParamPoly) -> Slot {
        Slot { offset, weight }
    }
}

/// `Σ_slots dπ_{weight}(X)` on the slot's coordinates.
pub fn tensor_dpi(model: &QuadricModel, vars: &Arc<Vars>, slots: &[Slot], x: &LieElem) -> DiffOp {
    let ind = model.induced(x);
    slots.iter().fold(DiffOp::zero(vars), |acc, s| {
        &acc + &ind.on(vars, s.offset, &s.weight)
    })
}

/// `Op ∘ dπ_src(X) − dπ_tgt(X) ∘ Op`.
pub fn covariance_residual(
    model: &QuadricModel,
    op: &DiffOp,
    src: &[Slot],
    tgt: &[Slot],
    x: &LieElem,
) -> Result<DiffOp, ConformalError> {
    let vars = op.vars();
    let a = op.compose(&tensor_dpi(model, vars, src, x))?;
    let b = tensor_dpi(model, vars, tgt, x).compose(op)?;
    Ok(&a - &b)
}

/// Residual for an operator `V × V → V` given in restricted form (all
/// coefficients depend on `x` only): `res(Op ∘ dπ_src(X)) − dπ_ν(X) ∘ Op`.
pub fn restricted_covariance_residual(
    model: &QuadricModel,
    op: &DiffOp,
    src: &[Slot],
    target_weight: &ParamPoly,
    x: &LieElem,
) -> Result<DiffOp, ConformalError> {
    let vars = op.vars();
    let a = restrict_diagonal(&op.compose(&tensor_dpi(model, vars, src, x))?);
    let lift = model.induced(x).diagonal_lift(vars, target_weight);
    let b = lift.compose(op)?;
    Ok(&a - &b)
}

/// Which covariance identity to certify.
#[derive(Clone, Debug)]
pub enum Target {
    /// `V × V → V × V` (or `V → V`) with the given target slots.
    Slots(Vec<Slot>),
    /// `V × V → V` after restriction to the diagonal, target weight `ν`.
    Diagonal(ParamPoly),
}

/// Outcome of a check over a list of Lie algebra elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovarianceCertificate {
    pub checked: usize,
    /// Number of surviving terms per element, all zero on success.
    pub residual_terms: Vec<usize>,
}

impl CovarianceCertificate {
    pub fn ok(&self) -> bool {
        self.residual_terms.iter().all(|&k| k == 0)
    }
}

fn residual(
    model: &QuadricModel,
    op: &DiffOp,
    src: &[Slot],
    tgt: &Target,
    x: &LieElem,
) -> Result<DiffOp, ConformalError> {
    match tgt {
        Target::Slots(t) => covariance_residual(model, op, src, t, x),
        Target::Diagonal(nu) => restricted_covariance_residual(model, op, src, nu, x),
    }
}

/// Exact Weyl-algebra certificate. Fails with the first offending term.
pub fn covariance_check(
    model: &QuadricModel,
    op: &DiffOp,
    src: &[Slot],
    tgt: &Target,
    elems: &[LieElem],
) -> Result<CovarianceCertificate, ConformalError> {
    let mut terms = Vec::with_capacity(elems.len());
    for (k, x) in elems.iter().enumerate() {
        let r = residual(model, op, src, tgt, x)?;
        if let Some((m, c)) = r.terms().next() {
            let names = op.vars().names();
            let d: String = (0..names.len())
                .filter(|&i| m.exp(i) > 0)
                .map(|i| format!("∂{}^{}", names[i], m.exp(i)))
                .collect();
            return Err(ConformalError::CovarianceViolation {
                index: x.index.unwrap_or(k),
                term: format!("({})·{}", c, d),
            });
        }
        terms.push(r.nterms());
    }
    Ok(CovarianceCertificate {
        checked: elems.len(),
        residual_terms: terms,
    })
}

/// Same identity in application form: both sides applied to every
/// monomial of degree ≤ `max_deg`. Returns the number of monomials on
/// which the sides differ.
pub fn covariance_apply_check(
    model: &QuadricModel,
    op: &DiffOp,
    src: &[Slot],
    tgt: &Target,
    x: &LieElem,
    max_deg: u32,
) -> Result<usize, ConformalError> {
    let vars = op.vars();
    let n = vars.len();
    let dsrc = tensor_dpi(model, vars, src, x);
    let diag: Vec<MPoly> = (0..n).map(|j| MPoly::var(vars, j % (n / 2).max(1))).collect();
    let mut bad = 0;
    for f in monomials_up_to(vars, max_deg) {
        let lhs = op.apply(&dsrc.apply(&f)?)?;
        let same = match tgt {
            Target::Slots(t) => lhs == tensor_dpi(model, vars, t, x).apply(&op.apply(&f)?)?,
            Target::Diagonal(nu) => {
                let g = op.apply(&f)?.compose(&diag);
                let lift = model.induced(x).diagonal_lift(vars, nu);
                lhs.compose(&diag) == lift.apply(&g)?
            }
        };
        if !same {
            bad += 1;
        }
    }
    Ok(bad)
}

fn monomials_up_to(vars: &Arc<Vars>, max_deg: u32) -> Vec<MPoly> {
    let n = vars.len();
    let mut out = vec![Mono::ONE];
    let mut layer = vec![Mono::ONE];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for m in &layer {
            let start = (0..n).rev().find(|&i| m.exp(i) > 0).unwrap_or(0);
            for i in start..n {
                next.push(m.mul(Mono::var(i)));
            }
        }
        out.extend(next.iter().copied());
        layer = next;
    }
    out.into_iter()
        .map(|m| MPoly::monomial(vars, m, ParamPoly::one()))
        .collect()
}
