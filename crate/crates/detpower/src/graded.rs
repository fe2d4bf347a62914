use std::sync::Arc;

use exactalg::{apply_diffop, derivative_space, fischer_inner, gram_schmidt, MPoly, Q};
use jordan::{Algebra, Kind};
use num_traits::Zero;

use crate::error::DetPowerError;

/// `W(Δ)` split by degree, each level with a Fischer-orthogonal basis.
///
/// Level `k` spans the derivatives of order `r − k` of `Δ`, i.e. the span of
/// the `k × k` minors.
pub struct GradedDelta {
    pub delta: MPoly,
    /// `(degree, orthogonal basis, squared norms)` for degrees `0..=r`.
    pub levels: Vec<(u32, Vec<MPoly>, Vec<Q>)>,
}

impl GradedDelta {
    pub fn new(alg: &Arc<Algebra>) -> Result<GradedDelta, DetPowerError> {
        match alg.kind() {
            Kind::SymR(m) if m <= 3 => {}
            k => {
                return Err(DetPowerError::Unsupported(format!(
                    "graded W(Δ) route implemented for sym:1..3, got {}",
                    k
                )))
            }
        }
        let delta = alg.det_poly().clone();
        let w = derivative_space(&delta)?;
        let r = alg.rank() as u32;
        let levels = (0..=r)
            .map(|k| {
                let (b, nrm) = gram_schmidt(&w.of_degree(k));
                (k, b, nrm)
            })
            .collect();
        Ok(GradedDelta { delta, levels })
    }

    /// `a^{(lmn)}_{ijk} = (Δ, p^l_i p^m_j p^n_k)_F / (N^l_i N^m_j N^n_k)`.
    pub fn coefficient(&self, (l, i): (usize, usize), (m, j): (usize, usize), (n, k): (usize, usize)) -> Q {
        let (pl, pm, pn) = (&self.levels[l], &self.levels[m], &self.levels[n]);
        let prod = &(&pl.1[i] * &pm.1[j]) * &pn.1[k];
        let f = fischer_inner(&self.delta, &prod)
            .expect("same variables")
            .constant()
            .expect("parameter-free");
        f / (&pl.2[i] * &pm.2[j] * &pn.2[k])
    }

    /// `Δ(∂)(fgh)` through the graded triple expansion (degrees `l+m+n = r`).
    pub fn expand(&self, f: &MPoly, g: &MPoly, h: &MPoly) -> Result<MPoly, DetPowerError> {
        let r = self.levels.len() - 1;
        let apply_all = |u: &MPoly| -> Result<Vec<Vec<MPoly>>, DetPowerError> {
            self.levels
                .iter()
                .map(|(_, b, _)| b.iter().map(|p| apply_diffop(p, u).map_err(Into::into)).collect())
                .collect()
        };
        let (df, dg, dh) = (apply_all(f)?, apply_all(g)?, apply_all(h)?);
        let mut out = MPoly::zero(f.vars());
        for l in 0..=r {
            for m in 0..=r - l {
                let n = r - l - m;
                for (i, fi) in df[l].iter().enumerate() {
                    if fi.is_zero() {
                        continue;
                    }
                    for (j, gj) in dg[m].iter().enumerate() {
                        if gj.is_zero() {
                            continue;
                        }
                        let fg = fi * gj;
                        for (k, hk) in dh[n].iter().enumerate() {
                            if hk.is_zero() {
                                continue;
                            }
                            let a = self.coefficient((l, i), (m, j), (n, k));
                            if !a.is_zero() {
                                out += &(&fg * hk).scale_q(&a);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Compare the graded expansion with `Δ(∂)(fgh)` computed directly.
pub fn deltafgh_check(alg: &Arc<Algebra>, f: &MPoly, g: &MPoly, h: &MPoly) -> Result<bool, DetPowerError> {
    let gd = GradedDelta::new(alg)?;
    let direct = apply_diffop(&gd.delta, &(&(f * g) * h))?;
    Ok(gd.expand(f, g, h)? == direct)
}
