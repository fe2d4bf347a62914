use std::sync::Arc;

use exactalg::linalg::{mat_add, mat_scale, mat_sub, matmul, transpose, zeros, Mat};
use exactalg::{qi, MPoly, ParamPoly, Vars, Q};
use num_traits::Zero;
use weyl::DiffOp;

use crate::quadric::QuadricModel;

/// Element of `𝔰𝔬(Q)`, i.e. `XᵀJ + JX = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElem {
    pub x: Mat,
    /// Position in [`QuadricModel::lie_basis`], if taken from it.
    pub index: Option<usize>,
}

impl LieElem {
    pub fn bracket(&self, o: &LieElem) -> LieElem {
        LieElem {
            x: mat_sub(&matmul(&self.x, &o.x), &matmul(&o.x, &self.x)),
            index: None,
        }
    }

    pub fn add(&self, o: &LieElem) -> LieElem {
        LieElem {
            x: mat_add(&self.x, &o.x),
            index: None,
        }
    }

    pub fn scale(&self, c: &Q) -> LieElem {
        LieElem {
            x: mat_scale(&self.x, c),
            index: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }
}

/// `dπ_λ(X)` split as `−Σ v_j ∂_j + λ σ`: the vector field `v` has
/// coefficients of degree ≤ 2 and `σ` has degree ≤ 1.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedOp {
    pub field: Vec<MPoly>,
    pub sigma: MPoly,
}

impl InducedOp {
    /// The operator with weight `λ` acting on coordinates
    /// `offset..offset + n` of `vars`.
    pub fn on(&self, vars: &Arc<Vars>, offset: usize, weight: &ParamPoly) -> DiffOp {
        let n = self.field.len();
        let map: Vec<usize> = (offset..offset + n).collect();
        let mut d = DiffOp::mult(&self.sigma.embed(vars, &map).scale(weight));
        for (j, v) in self.field.iter().enumerate() {
            d.add_term(exactalg::Mono::var(offset + j), -&v.embed(vars, &map));
        }
        d
    }

    /// `dπ_λ(X)` on `V` itself.
    pub fn operator(&self, weight: &ParamPoly) -> DiffOp {
        let vars = self.sigma.vars().clone();
        self.on(&vars, 0, weight)
    }

    /// Lift to `V × V` acting on functions of the diagonal: each `∂x_j`
    /// becomes `∂x_j + ∂y_j`, coefficients stay in `x`.
    pub fn diagonal_lift(&self, pair: &Arc<Vars>, weight: &ParamPoly) -> DiffOp {
        let n = self.field.len();
        let map: Vec<usize> = (0..n).collect();
        let mut d = DiffOp::mult(&self.sigma.embed(pair, &map).scale(weight));
        for (j, v) in self.field.iter().enumerate() {
            let c = -&v.embed(pair, &map);
            d.add_term(exactalg::Mono::var(j), c.clone());
            d.add_term(exactalg::Mono::var(n + j), c);
        }
        d
    }
}

impl QuadricModel {
    pub fn is_in_lie_algebra(&self, x: &Mat) -> bool {
        let j = self.gram();
        mat_add(&matmul(&transpose(x), j), &matmul(j, x))
            .iter()
            .all(|r| r.iter().all(|c| c.is_zero()))
    }

    /// Basis `J⁻¹(E_ab − E_ba)`, `a < b`, of dimension `(n+1)(n+2)/2`.
    pub fn lie_basis(&self) -> Vec<LieElem> {
        let m = self.n() + 2;
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let mut e = zeros(m, m);
                e[a][b] = qi(1);
                e[b][a] = qi(-1);
                out.push(LieElem {
                    x: matmul(self.gram_inv(), &e),
                    index: Some(out.len()),
                });
            }
        }
        out
    }

    /// Generator of `t ↦ n_{ta}`.
    pub fn translation_generator(&self, a: &[Q]) -> LieElem {
        let n = self.n();
        let mut x = zeros(n + 2, n + 2);
        for k in 0..n {
            x[k + 1][0] = a[k].clone();
            x[n + 1][k + 1] = qi(2) * &self.beta()[k] * &a[k];
        }
        LieElem { x, index: None }
    }

    /// Generator of the dilations `diag(e^{−t}, 1, e^t)`.
    pub fn dilation_generator(&self) -> LieElem {
        let n = self.n();
        let mut x = zeros(n + 2, n + 2);
        x[0][0] = qi(-1);
        x[n + 1][n + 1] = qi(1);
        LieElem { x, index: None }
    }

    /// `diag(0, h, 0)` for `h ∈ 𝔰𝔬(p, q)`.
    pub fn rotation_generator(&self, h: &Mat) -> LieElem {
        let n = self.n();
        let mut x = zeros(n + 2, n + 2);
        for i in 0..n {
            for k in 0..n {
                x[i + 1][k + 1] = h[i][k].clone();
            }
        }
        LieElem { x, index: None }
    }

    /// First-order data of `X` at `κ(x)`: `σ = α(Xκ(x))` and
    /// `v = (Xκ(x))_V − σ x`.
    pub fn induced(&self, x: &LieElem) -> InducedOp {
        let vars = self.vars();
        let n = self.n();
        let kappa = self.kappa_poly();
        let xk: Vec<MPoly> =
            x.x.iter()
                .map(|row| {
                    let mut acc = MPoly::zero(vars);
                    for (c, k) in row.iter().zip(&kappa) {
                        if !c.is_zero() {
                            acc += &k.scale_q(c);
                        }
                    }
                    acc
                })
                .collect();
        let sigma = xk[0].clone();
        let field = (0..n)
            .map(|j| &xk[j + 1] - &(&sigma * &MPoly::var(vars, j)))
            .collect();
        InducedOp { field, sigma }
    }

    /// `dπ_λ(X)` as an operator on `V`.
    pub fn dpi(&self, weight: &ParamPoly, x: &LieElem) -> DiffOp {
        self.induced(x).operator(weight)
    }
}
