use std::sync::Arc;

use exactalg::linalg::{identity, inverse, matmul, matvec, transpose, zeros, Mat};
use exactalg::{q, qi, MPoly, Mono, Vars, Q};
use jordan::{Algebra, Kind};
use num_traits::{One, Zero};

use crate::error::ConformalError;

/// How a group element was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Identity,
    Translation,
    Dilation,
    Rotation,
    Inversion,
    Product,
}

/// Element of `O(Q)` acting on `W = ℝ × V × ℝ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfMatrix {
    pub g: Mat,
    pub kind: GenKind,
}

impl ConfMatrix {
    pub fn mul(&self, o: &ConfMatrix) -> ConfMatrix {
        ConfMatrix {
            g: matmul(&self.g, &o.g),
            kind: GenKind::Product,
        }
    }
}

/// Projective quadric model of the conformal compactification of
/// `V = ℝ^{p,q}`, with `Q(α, v, β) = P(v) − αβ`.
#[derive(Clone, Debug)]
pub struct QuadricModel {
    alg: Arc<Algebra>,
    beta: Vec<Q>,
    j: Mat,
    j_inv: Mat,
}

impl QuadricModel {
    pub fn new(alg: &Arc<Algebra>) -> Result<QuadricModel, ConformalError> {
        if !matches!(alg.kind(), Kind::Rpq(..)) {
            return Err(ConformalError::Unsupported(format!(
                "quadric model needs R^{{p,q}}, got {}",
                alg.kind()
            )));
        }
        let n = alg.n();
        let beta: Vec<Q> = (0..n)
            .map(|j| {
                alg.det_poly()
                    .coeff(Mono::var(j).mul(Mono::var(j)))
                    .constant()
                    .expect("rational quadratic form")
            })
            .collect();
        let mut j = zeros(n + 2, n + 2);
        j[0][n + 1] = q(-1, 2);
        j[n + 1][0] = q(-1, 2);
        for (k, b) in beta.iter().enumerate() {
            j[k + 1][k + 1] = b.clone();
        }
        let j_inv = inverse(&j)?;
        Ok(QuadricModel {
            alg: alg.clone(),
            beta,
            j,
            j_inv,
        })
    }

    pub fn from_signature(p: usize, qq: usize) -> Result<QuadricModel, ConformalError> {
        QuadricModel::new(&Algebra::new(Kind::Rpq(p, qq))?)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    pub fn vars(&self) -> &Arc<Vars> {
        self.alg.vars()
    }

    /// Diagonal of `P`.
    pub fn beta(&self) -> &[Q] {
        &self.beta
    }

    /// Gram matrix of `Q` on `W`.
    pub fn gram(&self) -> &Mat {
        &self.j
    }

    pub fn gram_inv(&self) -> &Mat {
        &self.j_inv
    }

    pub fn p_form(&self, v: &[Q]) -> Q {
        self.polar(v, v)
    }

    /// Polar form with `P(v, v) = P(v)`.
    pub fn polar(&self, a: &[Q], b: &[Q]) -> Q {
        self.beta
            .iter()
            .zip(a.iter().zip(b))
            .fold(Q::zero(), |s, (c, (x, y))| s + c * x * y)
    }

    pub fn q_form(&self, w: &[Q]) -> Q {
        let n = self.n();
        self.p_form(&w[1..=n]) - &w[0] * &w[n + 1]
    }

    /// `κ(v) = (1, v, P(v))`.
    pub fn kappa(&self, v: &[Q]) -> Vec<Q> {
        let mut w = Vec::with_capacity(v.len() + 2);
        w.push(Q::one());
        w.extend(v.iter().cloned());
        w.push(self.p_form(v));
        w
    }

    /// `κ(x)` with polynomial entries over the coordinate ring of `V`.
    pub fn kappa_poly(&self) -> Vec<MPoly> {
        self.kappa_poly_in(self.vars(), 0)
    }

    pub fn kappa_poly_in(&self, vars: &Arc<Vars>, offset: usize) -> Vec<MPoly> {
        let n = self.n();
        let mut out = vec![MPoly::one(vars)];
        let mut p = MPoly::zero(vars);
        for j in 0..n {
            let x = MPoly::var(vars, offset + j);
            p += &(&x * &x).scale_q(&self.beta[j]);
            out.push(x);
        }
        out.push(p);
        out
    }

    pub fn is_in_group(&self, g: &Mat) -> bool {
        matmul(&matmul(&transpose(g), &self.j), g) == self.j
    }

    fn checked(&self, g: Mat, kind: GenKind) -> Result<ConfMatrix, ConformalError> {
        if !self.is_in_group(&g) {
            return Err(ConformalError::NotInGroup(format!("{:?}", kind)));
        }
        Ok(ConfMatrix { g, kind })
    }

    pub fn identity(&self) -> ConfMatrix {
        ConfMatrix {
            g: identity(self.n() + 2),
            kind: GenKind::Identity,
        }
    }

    /// `n_a(α, v, β) = (α, αa + v, αP(a) + 2P(a, v) + β)`.
    pub fn translation(&self, a: &[Q]) -> Result<ConfMatrix, ConformalError> {
        let n = self.n();
        self.alg.check_len(a.len())?;
        let mut g = identity(n + 2);
        for k in 0..n {
            g[k + 1][0] = a[k].clone();
            g[n + 1][k + 1] = qi(2) * &self.beta[k] * &a[k];
        }
        g[n + 1][0] = self.p_form(a);
        self.checked(g, GenKind::Translation)
    }

    /// `diag(t⁻¹, h, t)` with `h ∈ O(p, q)`.
    pub fn levi(&self, t: &Q, h: &Mat) -> Result<ConfMatrix, ConformalError> {
        let n = self.n();
        if t.is_zero() {
            return Err(ConformalError::Singular("t = 0".into()));
        }
        let mut g = zeros(n + 2, n + 2);
        g[0][0] = t.recip();
        g[n + 1][n + 1] = t.clone();
        for i in 0..n {
            for k in 0..n {
                g[i + 1][k + 1] = h[i][k].clone();
            }
        }
        let kind = if *h == identity(n) {
            GenKind::Dilation
        } else {
            GenKind::Rotation
        };
        self.checked(g, kind)
    }

    pub fn dilation(&self, t: &Q) -> Result<ConfMatrix, ConformalError> {
        self.levi(t, &identity(self.n()))
    }

    /// Inversion with `ι(x) = −x̌/P(x)`: `(α, v, β) ↦ (β, I_{1,n−1}v, α)`.
    pub fn inversion(&self) -> ConfMatrix {
        let n = self.n();
        let mut g = zeros(n + 2, n + 2);
        g[0][n + 1] = Q::one();
        g[n + 1][0] = Q::one();
        g[1][1] = -Q::one();
        for k in 2..=n {
            g[k][k] = Q::one();
        }
        self.checked(g, GenKind::Inversion)
            .expect("inversion preserves Q")
    }

    /// `g⁻¹ = J⁻¹ gᵀ J`.
    pub fn inverse(&self, g: &ConfMatrix) -> ConfMatrix {
        ConfMatrix {
            g: matmul(&matmul(&self.j_inv, &transpose(&g.g)), &self.j),
            kind: g.kind,
        }
    }

    /// `a(g, x) = α(gκ(x))`.
    pub fn cocycle(&self, g: &ConfMatrix, x: &[Q]) -> Q {
        matvec(&g.g, &self.kappa(x))[0].clone()
    }

    /// `g(x) = α(gκ(x))⁻¹ (gκ(x))_V`.
    pub fn act(&self, g: &ConfMatrix, x: &[Q]) -> Result<Vec<Q>, ConformalError> {
        self.alg.check_len(x.len())?;
        let w = matvec(&g.g, &self.kappa(x));
        if w[0].is_zero() {
            return Err(ConformalError::PointAtInfinity);
        }
        let a = w[0].recip();
        Ok(w[1..=self.n()].iter().map(|c| c * &a).collect())
    }

    /// Random element of `O(p, q)` as a product of rational hyperbolic and
    /// Euclidean rotations obtained from Pythagorean-type parametrisations.
    pub fn random_rotation<R: rand::Rng + ?Sized>(&self, rng: &mut R, factors: usize) -> Mat {
        let n = self.n();
        let mut h = identity(n);
        for _ in 0..factors {
            let i = rng.gen_range(0..n);
            let mut k = rng.gen_range(0..n);
            if n > 1 {
                while k == i {
                    k = rng.gen_range(0..n);
                }
            } else {
                continue;
            }
            let u = qi(rng.gen_range(1..=4));
            let w = qi(rng.gen_range(1..=4));
            let mut r = identity(n);
            if self.beta[i] == self.beta[k] {
                // (u² − w²)/(u² + w²), 2uw/(u² + w²)
                let d = &u * &u + &w * &w;
                let c = (&u * &u - &w * &w) / &d;
                let s = qi(2) * &u * &w / &d;
                r[i][i] = c.clone();
                r[k][k] = c;
                r[i][k] = -s.clone();
                r[k][i] = s;
            } else {
                if u == w {
                    continue;
                }
                // (u² + w²)/(u² − w²), 2uw/(u² − w²)
                let d = &u * &u - &w * &w;
                let c = (&u * &u + &w * &w) / &d;
                let s = qi(2) * &u * &w / &d;
                r[i][i] = c.clone();
                r[k][k] = c;
                r[i][k] = s.clone();
                r[k][i] = s;
            }
            h = matmul(&r, &h);
        }
        h
    }

    /// Whether `h` preserves `P`.
    pub fn is_orthogonal(&self, h: &Mat) -> bool {
        let n = self.n();
        let mut b = zeros(n, n);
        for k in 0..n {
            b[k][k] = self.beta[k].clone();
        }
        matmul(&matmul(&transpose(h), &b), h) == b
    }
}
