use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::ExactError;
use crate::linalg::SparseEchelon;
use crate::mono::Mono;
use crate::mpoly::MPoly;
use crate::param::ParamPoly;
use crate::rational::{factorial, Q};

/// `p(∂/∂x) q`, reading the variables of `p` as partial derivatives.
pub fn apply_diffop(p: &MPoly, q: &MPoly) -> Result<MPoly, ExactError> {
    p.check_vars(q)?;
    let mut out = MPoly::zero(q.vars());
    for (m, c) in p.terms() {
        let d = q.deriv_mono(*m);
        if !d.is_zero() {
            out += &d.scale(c);
        }
    }
    Ok(out)
}

/// `α! = α₁! ⋯ α_n!`.
pub fn mono_factorial(m: Mono, n: usize) -> Q {
    let mut f = num_bigint::BigInt::from(1);
    for i in 0..n {
        f *= factorial(m.exp(i));
    }
    Q::from_integer(f)
}

/// `(p, q)_F = (p(∂/∂x) q)(0)`.
pub fn fischer_inner(p: &MPoly, q: &MPoly) -> Result<ParamPoly, ExactError> {
    p.check_vars(q)?;
    let n = p.nvars();
    let mut acc = ParamPoly::zero();
    for (m, c) in p.terms() {
        let d = q.coeff(*m);
        if !d.is_zero() {
            acc += &(c * &d).scale(&mono_factorial(*m, n));
        }
    }
    Ok(acc)
}

fn fischer_q(p: &MPoly, q: &MPoly) -> Q {
    fischer_inner(p, q)
        .expect("same variables")
        .constant()
        .expect("parameter-free")
}

/// `p^♭ = p(∂/∂x) 𝐩`.
pub fn flat(p: &MPoly, bold_p: &MPoly) -> Result<MPoly, ExactError> {
    apply_diffop(p, bold_p)
}

/// Basis of `W(p)`, the span of `p` and all its partial derivatives.
#[derive(Clone, Debug)]
pub struct DerivativeSpace {
    pub basis: Vec<MPoly>,
}

impl DerivativeSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis elements of a given homogeneous degree.
    pub fn of_degree(&self, k: u32) -> Vec<MPoly> {
        self.basis
            .iter()
            .filter(|b| b.is_homogeneous() && b.degree() == Some(k))
            .cloned()
            .collect()
    }

    /// Whether `q` lies in the span.
    pub fn contains(&self, q: &MPoly) -> bool {
        let mut e = SparseEchelon::new();
        for b in &self.basis {
            e.insert(&as_vector(b));
        }
        e.contains(&as_vector(q))
    }
}

fn as_vector(p: &MPoly) -> BTreeMap<Mono, Q> {
    p.q_terms()
        .expect("parameter-free polynomial expected")
        .into_iter()
        .collect()
}

/// Smallest derivative-closed subspace containing `p` (including `p`).
///
/// The basis is produced level by level: `p`, then first derivatives, and so
/// on, so for homogeneous `p` it is grouped by degree, highest first.
pub fn derivative_space(p: &MPoly) -> Result<DerivativeSpace, ExactError> {
    if p.is_zero() {
        return Err(ExactError::EmptySpace);
    }
    if !p.is_parameter_free() {
        return Err(ExactError::ParametricInput);
    }
    let n = p.nvars();
    let mut ech = SparseEchelon::new();
    let mut basis = Vec::new();
    let mut frontier = vec![p.clone()];
    ech.insert(&as_vector(p));
    basis.push(p.clone());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for i in 0..n {
                let d = f.deriv(i);
                if !d.is_zero() && ech.insert(&as_vector(&d)) {
                    basis.push(d.clone());
                    next.push(d);
                }
            }
        }
        frontier = next;
    }
    Ok(DerivativeSpace { basis })
}

/// Orthogonalise with respect to the Fischer product, without normalising.
///
/// Returns the orthogonal basis and the squared norms.
pub fn gram_schmidt(basis: &[MPoly]) -> (Vec<MPoly>, Vec<Q>) {
    let mut out: Vec<MPoly> = Vec::new();
    let mut norms: Vec<Q> = Vec::new();
    for b in basis {
        let mut v = b.clone();
        for (u, nu) in out.iter().zip(&norms) {
            let c = fischer_q(b, u) / nu;
            if !c.is_zero() {
                v -= &u.scale_q(&c);
            }
        }
        let nv = fischer_q(&v, &v);
        if !nv.is_zero() {
            out.push(v);
            norms.push(nv);
        }
    }
    (out, norms)
}

/// Precomputed data for the generalized Leibnitz rule of `𝐩`.
#[derive(Clone, Debug)]
pub struct LeibnitzData {
    pub bold_p: MPoly,
    /// Fischer-orthogonal basis of `W(𝐩)`.
    pub basis: Vec<MPoly>,
    pub norms: Vec<Q>,
    /// `p_j^♭ = p_j(∂) 𝐩`.
    pub flats: Vec<MPoly>,
}

impl LeibnitzData {
    pub fn new(bold_p: &MPoly) -> Result<Self, ExactError> {
        let w = derivative_space(bold_p)?;
        let (basis, norms) = gram_schmidt(&w.basis);
        let flats = basis
            .iter()
            .map(|b| flat(b, bold_p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LeibnitzData {
            bold_p: bold_p.clone(),
            basis,
            norms,
            flats,
        })
    }

    /// `(𝐩, p_i p_j)_F`.
    pub fn pair_coeff(&self, i: usize, j: usize) -> Q {
        fischer_q(&self.bold_p, &(&self.basis[i] * &self.basis[j]))
    }

    /// `(𝐩, p_i p_j p_k)_F / (N_i N_j N_k)`.
    pub fn triple_coeff(&self, i: usize, j: usize, k: usize) -> Q {
        let prod = &(&self.basis[i] * &self.basis[j]) * &self.basis[k];
        fischer_q(&self.bold_p, &prod) / (&self.norms[i] * &self.norms[j] * &self.norms[k])
    }
}

/// `𝐩(∂)(fg) = Σ_j (p_j^♭(∂) f)(p_j(∂) g) / N_j`.
pub fn leibnitz_flat_form(data: &LeibnitzData, f: &MPoly, g: &MPoly) -> Result<MPoly, ExactError> {
    f.check_vars(g)?;
    data.bold_p.check_vars(f)?;
    let mut out = MPoly::zero(f.vars());
    for ((b, fl), nb) in data.basis.iter().zip(&data.flats).zip(&data.norms) {
        let a = apply_diffop(fl, f)?;
        if a.is_zero() {
            continue;
        }
        let c = apply_diffop(b, g)?;
        if c.is_zero() {
            continue;
        }
        out += &(&a * &c).scale_q(&nb.recip());
    }
    Ok(out)
}

/// `𝐩(∂)(fg) = Σ_{ij} (𝐩, p_i p_j)_F / (N_i N_j) (p_i(∂) f)(p_j(∂) g)`.
pub fn leibnitz_expand(data: &LeibnitzData, f: &MPoly, g: &MPoly) -> Result<MPoly, ExactError> {
    f.check_vars(g)?;
    data.bold_p.check_vars(f)?;
    let m = data.basis.len();
    let df: Vec<MPoly> = data
        .basis
        .iter()
        .map(|b| apply_diffop(b, f))
        .collect::<Result<_, _>>()?;
    let dg: Vec<MPoly> = data
        .basis
        .iter()
        .map(|b| apply_diffop(b, g))
        .collect::<Result<_, _>>()?;
    let mut out = MPoly::zero(f.vars());
    for i in 0..m {
        if df[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if dg[j].is_zero() {
                continue;
            }
            let c = data.pair_coeff(i, j);
            if c.is_zero() {
                continue;
            }
            let c = c / (&data.norms[i] * &data.norms[j]);
            out += &(&df[i] * &dg[j]).scale_q(&c);
        }
    }
    Ok(out)
}

/// Three-factor version: `𝐩(∂)(fgh) = Σ a_{ijk} (p_i f)(p_j g)(p_k h)`.
pub fn leibnitz_triple(data: &LeibnitzData, f: &MPoly, g: &MPoly, h: &MPoly) -> Result<MPoly, ExactError> {
    f.check_vars(g)?;
    f.check_vars(h)?;
    data.bold_p.check_vars(f)?;
    let m = data.basis.len();
    let d = |u: &MPoly| -> Result<Vec<MPoly>, ExactError> {
        data.basis.iter().map(|b| apply_diffop(b, u)).collect()
    };
    let (df, dg, dh) = (d(f)?, d(g)?, d(h)?);
    let mut out = MPoly::zero(f.vars());
    for i in 0..m {
        if df[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if dg[j].is_zero() {
                continue;
            }
            let fg = &df[i] * &dg[j];
            for k in 0..m {
                if dh[k].is_zero() {
                    continue;
                }
                let a = data.triple_coeff(i, j, k);
                if !a.is_zero() {
                    out += &(&fg * &dh[k]).scale_q(&a);
                }
            }
        }
    }
    Ok(out)
}
