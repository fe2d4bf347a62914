use conformal::Eps;
use exactalg::{q, qi, Q};
use jordan::{JordanType, RegistryRow};
use num_traits::One;
use serde::Serialize;

use crate::affine::Affine;
use crate::error::ZetaError;
use crate::gamma::{b_factor, gamma_euclidean, gamma_pq, gamma_v, GammaFactor};

/// What the constants depend on: the type of the algebra and its
/// structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ZetaClass {
    /// Type II other than `ℝ^{p,q}`.
    Split { n: usize, r: usize, d: usize },
    /// Types III and IV; `r = 2 r₊`.
    NonSplit {
        n: usize,
        r: usize,
        d: usize,
        r_plus: usize,
    },
    /// `ℝ^{p,q}` with `p ≥ 2`, `q ≥ 1`.
    Rpq { p: usize, q: usize },
    /// Type I.
    Euclidean { n: usize, r: usize, d: usize },
}

impl ZetaClass {
    pub fn from_row(row: &RegistryRow) -> ZetaClass {
        if row.family == "R^{p,q}" {
            return ZetaClass::Rpq {
                p: row.params[0],
                q: row.params[1],
            };
        }
        match row.jtype {
            JordanType::I => ZetaClass::Euclidean {
                n: row.n,
                r: row.r,
                d: row.d,
            },
            JordanType::II => ZetaClass::Split {
                n: row.n,
                r: row.r,
                d: row.d,
            },
            JordanType::III | JordanType::IV => ZetaClass::NonSplit {
                n: row.n,
                r: row.r,
                d: row.d,
                r_plus: row.r_plus,
            },
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            ZetaClass::Split { n, .. } | ZetaClass::NonSplit { n, .. } | ZetaClass::Euclidean { n, .. } => n,
            ZetaClass::Rpq { p, q } => p + q,
        }
    }

    pub fn r(&self) -> usize {
        match *self {
            ZetaClass::Split { r, .. } | ZetaClass::NonSplit { r, .. } | ZetaClass::Euclidean { r, .. } => r,
            ZetaClass::Rpq { .. } => 2,
        }
    }
}

/// `2π√−1` to the power `r`.
fn two_pi_i_pow(r: i64) -> GammaFactor {
    let a = Affine::constant(qi(r));
    GammaFactor::two_power(a.clone())
        .mul(&GammaFactor::pi_power(a.clone()))
        .mul(&GammaFactor::i_power(a))
}

/// `c(x, ε)` with `𝓕(Z_{x,ε}) = c(x, ε) Z_{−x−n/r, ε}` for the split and
/// non-split classes; `x` is any affine form in `(s, t)`.
pub fn c_factor(class: &ZetaClass, eps: Eps, x: &Affine) -> Result<GammaFactor, ZetaError> {
    let (n, r) = (class.n() as i64, class.r() as i64);
    let nr = q(n, r);
    let pi_part = GammaFactor::pi_power(x.scale(&qi(-r)).add_const(&q(-n, 2)));
    match *class {
        ZetaClass::Split { r, d, .. } => Ok(match eps {
            Eps::Plus => pi_part
                .mul(&gamma_v(r, d, &x.add_const(&nr)))
                .div(&gamma_v(r, d, &x.neg())),
            Eps::Minus => pi_part
                .mul(&GammaFactor::i_power(Affine::constant(qi(r as i64))))
                .mul(&gamma_v(r, d, &x.add_const(&(&nr + qi(1)))))
                .div(&gamma_v(r, d, &x.neg().add_const(&qi(1)))),
        }),
        ZetaClass::NonSplit { d, r_plus, .. } => {
            let two_x = x.scale(&qi(2));
            Ok(pi_part
                .mul(&gamma_v(r_plus, d, &two_x.add_const(&(&nr * qi(2)))))
                .div(&gamma_v(r_plus, d, &two_x.neg())))
        }
        _ => Err(ZetaError::Unsupported(format!(
            "c(s, ε) is tabulated for split and non-split non-euclidean classes, not {:?}",
            class
        ))),
    }
}

/// `κ(s, t) = c(s,ε) c(t,η) / ((2π√−1)^r c(s+1,−ε) c(t+1,−η))`, canonical.
pub fn kappa_from_c(class: &ZetaClass, eps: Eps, eta: Eps) -> Result<GammaFactor, ZetaError> {
    let s = Affine::in_s(qi(1), Q::from(qi(0)));
    let t = Affine::in_t(qi(1), qi(0));
    let (e1, h1) = match class {
        ZetaClass::NonSplit { .. } => (eps, eta),
        _ => (eps.flip(), eta.flip()),
    };
    let num = c_factor(class, eps, &s)?.mul(&c_factor(class, eta, &t)?);
    let den = two_pi_i_pow(class.r() as i64)
        .mul(&c_factor(class, e1, &s.add_const(&qi(1)))?)
        .mul(&c_factor(class, h1, &t.add_const(&qi(1)))?);
    Ok(num.div(&den).canonical())
}

/// `κ(s, t)` as displayed for each class.
///
/// * split: `(2π√−1)^r / (b_{r,d}(s+1) b_{r,d}(t+1))`;
/// * non-split: `(−8π√−1)^r / (b_{2r,d}(−2s−2n/r) b_{2r,d}(2s+2) b_{2r,d}(−2t−2n/r) b_{2r,d}(2t+2))`;
/// * `ℝ^{p,q}`: `1/(16(s+1)(s+n/2)(t+1)(t+n/2))`;
/// * euclidean with `r = 2`, `d ≡ 1 (mod 4)`: `(2π√−1)^2 / (b_{2,d}(s+1) b_{2,d}(t+1))`.
pub fn kappa_const(class: &ZetaClass) -> Result<GammaFactor, ZetaError> {
    let s1 = Affine::in_s(qi(1), qi(1));
    let t1 = Affine::in_t(qi(1), qi(1));
    let out = match *class {
        ZetaClass::Split { r, d, .. } => {
            two_pi_i_pow(r as i64).div(&b_factor(r, d, &s1).mul(&b_factor(r, d, &t1)))
        }
        ZetaClass::NonSplit { n, r, d, .. } => {
            let nr2 = q(2 * n as i64, r as i64);
            let a = Affine::constant(qi(r as i64));
            let num = GammaFactor::constant(qi(-8).pow(r as i32))
                .mul(&GammaFactor::pi_power(a.clone()))
                .mul(&GammaFactor::i_power(a));
            let mut den = GammaFactor::one();
            for x in [
                Affine::in_s(qi(-2), -nr2.clone()),
                Affine::in_s(qi(2), qi(2)),
                Affine::in_t(qi(-2), -nr2),
                Affine::in_t(qi(2), qi(2)),
            ] {
                den = den.mul(&b_factor(2 * r, d, &x));
            }
            num.div(&den)
        }
        ZetaClass::Rpq { p, q: qq } => {
            let half_n = q((p + qq) as i64, 2);
            GammaFactor::constant(q(1, 16)).div(
                &GammaFactor::linear(s1)
                    .mul(&GammaFactor::linear(Affine::in_s(qi(1), half_n.clone())))
                    .mul(&GammaFactor::linear(t1))
                    .mul(&GammaFactor::linear(Affine::in_t(qi(1), half_n))),
            )
        }
        ZetaClass::Euclidean { r: 2, d, .. } if d % 4 == 1 => {
            two_pi_i_pow(2).div(&b_factor(2, d, &s1).mul(&b_factor(2, d, &t1)))
        }
        ZetaClass::Euclidean { r, d, .. } => {
            return Err(ZetaError::Unsupported(format!(
                "κ(s, t) is only tabulated for the euclidean case r = 2, d ≡ 1 mod 4 (got r = {}, d = {})",
                r, d
            )))
        }
    };
    Ok(out)
}

/// `γ(s)γ(t) / (γ(s+1)γ(t+1))` for `ℝ^{p,q}`, canonical.
pub fn kappa_rpq_gamma_quotient(n: usize) -> GammaFactor {
    let s = Affine::in_s(qi(1), qi(0));
    let t = Affine::in_t(qi(1), qi(0));
    let g = |x: &Affine| gamma_pq(n, x);
    g(&s)
        .mul(&g(&t))
        .div(&g(&s.add_const(&qi(1))).mul(&g(&t.add_const(&qi(1)))))
        .canonical()
}

/// Constant of the `ℝ^{p,q}` main theorem with every factor of the
/// Fourier argument kept: the flip `a_{ε,η}(s) = −a_{−ε,−η}(s+1)` in both
/// slots and `𝓕(P(x−y)h) = (√−1)^{−2} P(∂_ξ − ∂_ζ) 𝓕h` for the kernel
/// `e^{√−1(ξ,x)}`.
pub fn kappa_rpq_full(n: usize) -> GammaFactor {
    kappa_rpq_gamma_quotient(n)
        .mul(&GammaFactor::i_power(Affine::constant(qi(-2))))
        .canonical()
}

/// Case (b‑1): `c(s,t) = 32 γ(s+n/2) γ(t+n/2)` and
/// `κ = c(s,t) / ((2π√−1)^2 c(s+1,t+1))`, the flip signs cancelling in pairs.
pub fn kappa_euclidean_b1_from_gamma(d: usize) -> GammaFactor {
    let n = 2 + d;
    let half_n = q(n as i64, 2);
    let c = |sh: i64| {
        gamma_euclidean(n, 2, d, &Affine::in_s(qi(1), &half_n + qi(sh)))
            .mul(&gamma_euclidean(n, 2, d, &Affine::in_t(qi(1), &half_n + qi(sh))))
            .scale(&qi(32))
    };
    c(0).div(&two_pi_i_pow(2).mul(&c(1))).canonical()
}

/// `b_{r,d}(s+1)` as a descriptor in `s`, for reporting.
pub fn b_shifted(r: usize, d: usize) -> GammaFactor {
    b_factor(r, d, &Affine::in_s(Q::one(), qi(1)))
}
