//! Linear fractional maps `x ↦ (Ax + B)(Cx + D)⁻¹` on `Sym(m, ℝ)` and
//! `Mat(m, ℝ)`, with cocycle `a(g, x) = det(Cx + D)`, plus the inversion
//! `ι(x) = −x⁻¹` on any implemented Jordan algebra.

use std::sync::Arc;

use exactalg::linalg::{det, identity, inverse, matmul, transpose, zeros, Mat};
use exactalg::Q;
use jordan::{Algebra, Kind};
use num_traits::Zero;

use crate::error::ConformalError;
use crate::quadric::{ConfMatrix, QuadricModel};

/// `2m × 2m` block matrix acting on an `m × m` matrix algebra.
#[derive(Clone, Debug)]
pub struct Moebius {
    alg: Arc<Algebra>,
    g: Mat,
}

fn blocks(g: &Mat, m: usize) -> [Mat; 4] {
    let sub = |r0: usize, c0: usize| -> Mat {
        (0..m)
            .map(|i| (0..m).map(|k| g[r0 + i][c0 + k].clone()).collect())
            .collect()
    };
    [sub(0, 0), sub(0, m), sub(m, 0), sub(m, m)]
}

fn assemble(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
    let m = a.len();
    let mut g = zeros(2 * m, 2 * m);
    for i in 0..m {
        for k in 0..m {
            g[i][k] = a[i][k].clone();
            g[i][m + k] = b[i][k].clone();
            g[m + i][k] = c[i][k].clone();
            g[m + i][m + k] = d[i][k].clone();
        }
    }
    g
}

fn madd(a: &Mat, b: &Mat) -> Mat {
    exactalg::linalg::mat_add(a, b)
}

impl Moebius {
    fn size(alg: &Algebra) -> Result<usize, ConformalError> {
        match alg.kind() {
            Kind::SymR(m) | Kind::MatR(m) => Ok(m),
            k => Err(ConformalError::Unsupported(format!(
                "linear fractional maps on {}",
                k
            ))),
        }
    }

    fn to_matrix(&self, x: &[Q]) -> Result<Mat, ConformalError> {
        self.alg.check_len(x.len())?;
        Ok(self.alg.as_real_matrix(x).expect("real matrix algebra"))
    }

    pub fn matrix(&self) -> &Mat {
        &self.g
    }

    pub fn identity(alg: &Arc<Algebra>) -> Result<Moebius, ConformalError> {
        let m = Self::size(alg)?;
        Ok(Moebius {
            alg: alg.clone(),
            g: identity(2 * m),
        })
    }

    /// `x ↦ x + a`.
    pub fn translation(alg: &Arc<Algebra>, a: &[Q]) -> Result<Moebius, ConformalError> {
        let m = Self::size(alg)?;
        alg.check_len(a.len())?;
        let am = alg.as_real_matrix(a).expect("real matrix algebra");
        Ok(Moebius {
            alg: alg.clone(),
            g: assemble(&identity(m), &am, &zeros(m, m), &identity(m)),
        })
    }

    /// `x ↦ −x⁻¹`.
    pub fn inversion(alg: &Arc<Algebra>) -> Result<Moebius, ConformalError> {
        let m = Self::size(alg)?;
        let minus: Mat = identity(m)
            .into_iter()
            .map(|r| r.into_iter().map(|c| -c).collect())
            .collect();
        Ok(Moebius {
            alg: alg.clone(),
            g: assemble(&zeros(m, m), &minus, &identity(m), &zeros(m, m)),
        })
    }

    /// Quadratic representation `x ↦ zxz` for invertible `z` in the algebra.
    pub fn quadratic(alg: &Arc<Algebra>, z: &[Q]) -> Result<Moebius, ConformalError> {
        let m = Self::size(alg)?;
        alg.check_len(z.len())?;
        let zm = alg.as_real_matrix(z).expect("real matrix algebra");
        let zi = inverse(&zm).map_err(|_| ConformalError::Singular("z not invertible".into()))?;
        Ok(Moebius {
            alg: alg.clone(),
            g: assemble(&zm, &zeros(m, m), &zeros(m, m), &zi),
        })
    }

    /// `x ↦ A x D⁻¹` on `Mat(m, ℝ)`, or `x ↦ A x Aᵀ` on `Sym(m, ℝ)`
    /// (where `d` must equal `A⁻ᵀ`).
    pub fn linear(alg: &Arc<Algebra>, a: &Mat, d: &Mat) -> Result<Moebius, ConformalError> {
        let m = Self::size(alg)?;
        if det(a).is_zero() || det(d).is_zero() {
            return Err(ConformalError::Singular("linear part not invertible".into()));
        }
        if matches!(alg.kind(), Kind::SymR(_)) && matmul(&transpose(a), d) != identity(m) {
            return Err(ConformalError::NotInGroup(
                "x ↦ AxD⁻¹ must preserve symmetry".into(),
            ));
        }
        Ok(Moebius {
            alg: alg.clone(),
            g: assemble(a, &zeros(m, m), &zeros(m, m), d),
        })
    }

    pub fn mul(&self, o: &Moebius) -> Moebius {
        Moebius {
            alg: self.alg.clone(),
            g: matmul(&self.g, &o.g),
        }
    }

    /// `a(g, x) = det(Cx + D)`.
    pub fn cocycle(&self, x: &[Q]) -> Result<Q, ConformalError> {
        let m = Self::size(&self.alg)?;
        let [_, _, c, d] = blocks(&self.g, m);
        Ok(det(&madd(&matmul(&c, &self.to_matrix(x)?), &d)))
    }

    pub fn act(&self, x: &[Q]) -> Result<Vec<Q>, ConformalError> {
        let m = Self::size(&self.alg)?;
        let [a, b, c, d] = blocks(&self.g, m);
        let xm = self.to_matrix(x)?;
        let den = madd(&matmul(&c, &xm), &d);
        let inv = inverse(&den).map_err(|_| ConformalError::PointAtInfinity)?;
        let num = madd(&matmul(&a, &xm), &b);
        let out = matmul(&num, &inv);
        self.alg
            .from_real_matrix(&out)
            .ok_or_else(|| ConformalError::NotInGroup("image left the algebra".into()))
    }

    /// `det(g(x) − g(y)) · a(g, x) · a(g, y) = det(x − y)`.
    pub fn hua_check(&self, x: &[Q], y: &[Q]) -> Result<bool, ConformalError> {
        let gx = self.act(x)?;
        let gy = self.act(y)?;
        let lhs = self.alg.det_q(&sub(&gx, &gy)) * self.cocycle(x)? * self.cocycle(y)?;
        Ok(lhs == self.alg.det_q(&sub(x, y)))
    }
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `ι(x) = −x⁻¹` through the Jordan inverse.
pub fn jordan_inversion(alg: &Algebra, x: &[Q]) -> Result<Vec<Q>, ConformalError> {
    let inv = alg
        .inverse(x)
        .map_err(|_| ConformalError::Singular("x is not invertible".into()))?;
    Ok(inv.into_iter().map(|c| -c).collect())
}

/// `det(ι(x) − ι(y)) · det(x) · det(y) = det(x − y)` for invertible `x, y`.
pub fn hua_inversion(alg: &Algebra, x: &[Q], y: &[Q]) -> Result<bool, ConformalError> {
    let ix = jordan_inversion(alg, x)?;
    let iy = jordan_inversion(alg, y)?;
    let lhs = alg.det_q(&sub(&ix, &iy)) * alg.det_q(x) * alg.det_q(y);
    Ok(lhs == alg.det_q(&sub(x, y)))
}

impl QuadricModel {
    /// `P(g(x) − g(y)) · a(g, x) · a(g, y) = P(x − y)`.
    pub fn hua_check(&self, g: &ConfMatrix, x: &[Q], y: &[Q]) -> Result<bool, ConformalError> {
        let gx = self.act(g, x)?;
        let gy = self.act(g, y)?;
        let lhs = self.p_form(&sub(&gx, &gy)) * self.cocycle(g, x) * self.cocycle(g, y);
        Ok(lhs == self.p_form(&sub(x, y)))
    }
}
