use exactalg::{q_to_f64, MPoly};
use jordan::Algebra;

use crate::error::ConformalError;

/// Parity of a principal series character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub fn mul(self, o: Eps) -> Eps {
        if self == o {
            Eps::Plus
        } else {
            Eps::Minus
        }
    }

    pub fn flip(self) -> Eps {
        self.mul(Eps::Minus)
    }

    pub fn sign(self) -> f64 {
        match self {
            Eps::Plus => 1.0,
            Eps::Minus => -1.0,
        }
    }
}

/// `x^{s,ε}`: `|x|^s` for `ε = +`, `sign(x)|x|^s` for `ε = −`.
pub fn signed_pow(x: f64, s: f64, eps: Eps) -> f64 {
    let a = x.abs().powf(s);
    match eps {
        Eps::Plus => a,
        Eps::Minus => a * x.signum(),
    }
}

/// Evaluate a parameter-free polynomial in floating point.
pub fn eval_f64(p: &MPoly, x: &[f64]) -> Result<f64, ConformalError> {
    Ok(p.q_terms()?
        .into_iter()
        .map(|(m, c)| {
            let mut v = q_to_f64(&c);
            for (i, xi) in x.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v *= xi.powi(e as i32);
                }
            }
            v
        })
        .sum())
}

/// Knapp–Stein kernel `det(x − y)^{−2n/r + λ, ε}`.
pub fn knapp_stein_kernel(
    alg: &Algebra,
    lambda: f64,
    eps: Eps,
    x: &[f64],
    y: &[f64],
) -> Result<f64, ConformalError> {
    alg.check_len(x.len())?;
    alg.check_len(y.len())?;
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let det = eval_f64(alg.det_poly(), &d)?;
    if det == 0.0 {
        return Err(ConformalError::Singular("x − y lies on the cone det = 0".into()));
    }
    let expo = -2.0 * alg.n() as f64 / alg.rank() as f64 + lambda;
    Ok(signed_pow(det, expo, eps))
}
