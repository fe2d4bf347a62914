//! Quadrature check of the `ℝ^{p,q}` functional equation
//! `𝓕(P^{s,+}, P^{s,−})ᵀ = γ(s) 𝐀(s) (P^{σ,+}, P^{σ,−})ᵀ`, `σ = −s − n/2`,
//! paired against polynomial-times-Gaussian test functions.
//!
//! `P(x) = |x'|² − |x''|²` with `x = (x', x'') ∈ ℝ^p × ℝ^q`,
//! `P^{s,+} = |P|^s`, `P^{s,−} = sgn(P)|P|^s`, and `𝓕g(ξ) = ∫ g(x) e^{√−1(x,ξ)} dx`.
//!
//! Coordinates are bipolar: `x' = ρ cos θ ω₁`, `x'' = ρ sin θ ω₂`, so that
//! `P = ρ² cos 2θ` and the cone `P = 0` is `θ = π/4`. Each one-sided pairing
//! `⟨P_±^s, h⟩` is computed twice:
//!
//! * **direct**: nested double-exponential quadrature in `ρ`, `θ` and
//!   hyperspherical angles, evaluating `h` pointwise;
//! * **semi-analytic**: `h` is expanded in monomials, the radial and sphere
//!   integrals are closed-form Gamma values and only the `θ` integral is
//!   numeric.
//!
//! The singular endpoints are removed before quadrature: `δ^a dδ` becomes
//! `k dw` under `δ = w^k`, `k = 1/(1+a)`.

use std::cell::Cell;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, PI};
use std::time::Instant;

use num_complex::Complex64;
use num_traits::Zero;
use quadrature::integrate;
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::affine::Affine;
use crate::error::ZetaError;
use crate::gamma::gamma_pq;
use crate::matrices::{a_matrix_pq_at, one_sided_matrix_pq};
use crate::trig::eval_matrix;

/// Largest `n` for which the pointwise evaluation buffers are sized.
const MAX_DIM: usize = 16;

/// `Σ_α c_α x^α · e^{−c|x|²}` on `ℝ^n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussianTest {
    pub n: usize,
    pub c: f64,
    pub terms: Vec<(Vec<u32>, Complex64)>,
}

impl GaussianTest {
    pub fn new(n: usize, c: f64, terms: Vec<(Vec<u32>, Complex64)>) -> Result<GaussianTest, ZetaError> {
        if n == 0 || n > MAX_DIM {
            return Err(ZetaError::Config(format!(
                "dimension {} outside 1..={}",
                n, MAX_DIM
            )));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(ZetaError::Config(format!(
                "Gaussian width {} must be positive",
                c
            )));
        }
        if let Some((a, _)) = terms.iter().find(|(a, _)| a.len() != n) {
            return Err(ZetaError::Config(format!(
                "exponent {:?} has the wrong length for n = {}",
                a, n
            )));
        }
        Ok(GaussianTest { n, c, terms })
    }

    /// `e^{−c|x|²}`.
    pub fn gaussian(n: usize, c: f64) -> Result<GaussianTest, ZetaError> {
        GaussianTest::new(n, c, vec![(vec![0; n], Complex64::new(1.0, 0.0))])
    }

    /// `x^α e^{−c|x|²}`.
    pub fn monomial(c: f64, alpha: &[u32]) -> Result<GaussianTest, ZetaError> {
        GaussianTest::new(alpha.len(), c, vec![(alpha.to_vec(), Complex64::new(1.0, 0.0))])
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(a, _)| a.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        let poly: Complex64 = self
            .terms
            .iter()
            .map(|(a, co)| co * a.iter().zip(x).map(|(&e, &v)| v.powi(e as i32)).product::<f64>())
            .sum();
        poly * (-self.c * r2).exp()
    }

    fn map_coeffs(&self, f: impl Fn(Complex64) -> f64) -> GaussianTest {
        GaussianTest {
            n: self.n,
            c: self.c,
            terms: self
                .terms
                .iter()
                .map(|(a, co)| (a.clone(), Complex64::new(f(*co), 0.0)))
                .filter(|(_, co)| !co.is_zero())
                .collect(),
        }
    }

    pub fn real_part(&self) -> GaussianTest {
        self.map_coeffs(|z| z.re)
    }

    pub fn imag_part(&self) -> GaussianTest {
        self.map_coeffs(|z| z.im)
    }

    /// `𝓕h(ξ) = ∫ h(x) e^{√−1(x,ξ)} dx`, again of this shape with width
    /// `1/(4c)`. In one variable `∫ x^k e^{−cx²+√−1ξx} dx = √(π/c) p_k(ξ) e^{−ξ²/4c}`
    /// with `p_0 = 1`, `p_{k+1} = −√−1 (p_k′ − ξ p_k / 2c)`.
    pub fn fourier(&self) -> GaussianTest {
        let c = self.c;
        let i = Complex64::i();
        let mut polys: Vec<Vec<Complex64>> = vec![vec![Complex64::new(1.0, 0.0)]];
        for k in 0..self.degree() as usize {
            let p = &polys[k];
            let mut next = vec![Complex64::zero(); p.len() + 1];
            for (j, a) in p.iter().enumerate() {
                if j > 0 {
                    next[j - 1] += a * j as f64;
                }
                next[j + 1] -= a / (2.0 * c);
            }
            polys.push(next.into_iter().map(|z| -i * z).collect());
        }
        let pref = (PI / c).powf(self.n as f64 / 2.0);
        let mut acc: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
        for (alpha, co) in &self.terms {
            let mut partial: Vec<(Vec<u32>, Complex64)> = vec![(vec![0; self.n], co * pref)];
            for (coord, &e) in alpha.iter().enumerate() {
                let mut grown = Vec::new();
                for (beta, a) in &partial {
                    for (j, b) in polys[e as usize].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let mut beta = beta.clone();
                        beta[coord] = j as u32;
                        grown.push((beta, a * b));
                    }
                }
                partial = grown;
            }
            for (beta, a) in partial {
                *acc.entry(beta).or_insert_with(Complex64::zero) += a;
            }
        }
        GaussianTest {
            n: self.n,
            c: 1.0 / (4.0 * c),
            terms: acc.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadratureOptions {
    /// Absolute tolerance requested from every one-dimensional sub-integral.
    pub abs_tol: f64,
    /// Pass threshold for the relative discrepancies.
    pub tolerance: f64,
    /// A pairing whose largest sub-integral error estimate exceeds this is
    /// reported as a quadrature failure.
    pub fail_above: f64,
    /// The direct pipeline nests `n` one-dimensional rules; above this `n`
    /// only the semi-analytic pipeline runs.
    pub max_direct_dim: usize,
    pub parallel: bool,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            abs_tol: 1e-8,
            tolerance: 1e-4,
            fail_above: 1e-5,
            max_direct_dim: 3,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `P > 0`.
    Plus,
    /// `P < 0`.
    Minus,
}

/// A numeric value with the largest error estimate of the 1D rules behind it.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Estimated {
    pub value: Complex64,
    pub max_subintegral_error: f64,
}

/// Tracks the worst error estimate seen by nested rules.
struct Worst(Cell<f64>);

impl Worst {
    fn new() -> Worst {
        Worst(Cell::new(0.0))
    }

    fn run(&self, f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
        let out = integrate(f, a, b, tol);
        let e = if out.error_estimate.is_finite() {
            out.error_estimate
        } else {
            f64::INFINITY
        };
        self.0.set(self.0.get().max(e));
        out.integral
    }

    fn get(&self) -> f64 {
        self.0.get()
    }
}

/// `∫_0^L x^a H(x) dx` for `a > −1` and `H` bounded near 0.
fn power_weighted(w: &Worst, a: f64, l: f64, tol: f64, h: impl Fn(f64) -> f64) -> f64 {
    let k = 1.0 / (1.0 + a);
    w.run(|u| k * h(u.powf(k)), 0.0, l.powf(1.0 + a), tol)
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `∫ |cos 2θ|^s g(θ) dθ` over `(0, π/4)` or `(π/4, π/2)`, written in the
/// distance `δ` to the cone so that `|cos 2θ| = sin 2δ = (2δ)^s sinc(2δ)^s`.
fn cone_integral(w: &Worst, s: f64, side: Side, tol: f64, g: impl Fn(f64) -> f64) -> f64 {
    let two_s = 2f64.powf(s);
    power_weighted(w, s, FRAC_PI_4, tol, |delta| {
        let theta = match side {
            Side::Plus => FRAC_PI_4 - delta,
            Side::Minus => FRAC_PI_4 + delta,
        };
        two_s * sinc(2.0 * delta).powf(s) * g(theta)
    })
}

/// `∫_{S^{k−1}} f(ω) dω` in hyperspherical angles,
/// `ω = (cos ψ, sin ψ ω′)`, `dω = sin^{k−2}ψ dψ dω′`.
fn sphere_integral(w: &Worst, k: usize, tol: f64, f: &dyn Fn(&[f64]) -> f64) -> f64 {
    if k == 1 {
        return f(&[1.0]) + f(&[-1.0]);
    }
    w.run(
        |psi| {
            let (sp, cp) = psi.sin_cos();
            let inner = |rest: &[f64]| {
                let mut buf = [0.0; MAX_DIM];
                buf[0] = cp;
                for (b, r) in buf[1..k].iter_mut().zip(rest) {
                    *b = sp * r;
                }
                f(&buf[..k])
            };
            sp.powi(k as i32 - 2) * sphere_integral(w, k - 1, tol, &inner)
        },
        0.0,
        PI,
        tol,
    )
}

fn check_domain(p: usize, q: usize, s: f64) -> Result<(), ZetaError> {
    let n = (p + q) as f64;
    if p == 0 || q == 0 {
        return Err(ZetaError::Config(format!(
            "need p, q ≥ 1 (got p = {}, q = {})",
            p, q
        )));
    }
    if p + q > MAX_DIM {
        return Err(ZetaError::Config(format!("n = {} exceeds {}", p + q, MAX_DIM)));
    }
    if !(s > -1.0 && 2.0 * s + n > 0.0) {
        return Err(ZetaError::Config(format!(
            "⟨P_±^s, h⟩ diverges at the cone or the origin for s = {}, n = {}",
            s, n
        )));
    }
    Ok(())
}

/// Radius beyond which `ρ^m e^{−cρ²}` is below `e^{−60}` for `m ≤ deg + n`.
fn cutoff(c: f64, deg: u32, n: usize) -> f64 {
    ((60.0 + (deg as f64 + n as f64) * 4.0) / c).sqrt()
}

/// `∫_{±P>0} |P(x)|^s h(x) dx` by nested quadrature, `h` real.
fn direct_real(p: usize, q: usize, s: f64, side: Side, h: &GaussianTest, tol: f64) -> (f64, f64) {
    let n = p + q;
    let w = Worst::new();
    let r_max = cutoff(h.c, h.degree(), n);
    let val = power_weighted(&w, 2.0 * s + n as f64 - 1.0, r_max, tol, |rho| {
        cone_integral(&w, s, side, tol, |theta| {
            let (st, ct) = theta.sin_cos();
            let weight = ct.powi(p as i32 - 1) * st.powi(q as i32 - 1);
            let outer = |w1: &[f64]| {
                let inner = |w2: &[f64]| {
                    let mut x = [0.0; MAX_DIM];
                    for (xi, a) in x[..p].iter_mut().zip(w1) {
                        *xi = rho * ct * a;
                    }
                    for (xi, b) in x[p..n].iter_mut().zip(w2) {
                        *xi = rho * st * b;
                    }
                    h.eval(&x[..n]).re
                };
                sphere_integral(&w, q, tol, &inner)
            };
            weight * sphere_integral(&w, p, tol, &outer)
        })
    });
    (val, w.get())
}

/// Direct pipeline for a complex test function.
pub fn pairing_direct(
    p: usize,
    q: usize,
    s: f64,
    side: Side,
    h: &GaussianTest,
    tol: f64,
) -> Result<Estimated, ZetaError> {
    check_domain(p, q, s)?;
    let mut value = Complex64::zero();
    let mut err: f64 = 0.0;
    for (part, unit) in [
        (h.real_part(), Complex64::new(1.0, 0.0)),
        (h.imag_part(), Complex64::i()),
    ] {
        if part.terms.is_empty() {
            continue;
        }
        let (v, e) = direct_real(p, q, s, side, &part, tol);
        value += unit * v;
        err = err.max(e);
    }
    Ok(Estimated {
        value,
        max_subintegral_error: err,
    })
}

/// `∫_{S^{k−1}} ω^β dω = 2 ∏Γ((β_i+1)/2) / Γ((|β|+k)/2)`, zero if any `β_i` is odd.
pub fn sphere_moment(beta: &[u32]) -> f64 {
    if beta.iter().any(|b| b % 2 == 1) {
        return 0.0;
    }
    let total: u32 = beta.iter().sum();
    2.0 * beta
        .iter()
        .map(|&b| gamma((b as f64 + 1.0) / 2.0))
        .product::<f64>()
        / gamma((total as f64 + beta.len() as f64) / 2.0)
}

/// Semi-analytic pipeline.
pub fn pairing_semi_analytic(
    p: usize,
    q: usize,
    s: f64,
    side: Side,
    h: &GaussianTest,
    tol: f64,
) -> Result<Estimated, ZetaError> {
    check_domain(p, q, s)?;
    let n = (p + q) as f64;
    let w = Worst::new();
    let mut thetas: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    let mut value = Complex64::zero();
    for (alpha, co) in &h.terms {
        let m = sphere_moment(&alpha[..p]) * sphere_moment(&alpha[p..]);
        if m == 0.0 {
            continue;
        }
        let a1: u32 = alpha[..p].iter().sum();
        let a2: u32 = alpha[p..].iter().sum();
        let half = (2.0 * s + (a1 + a2) as f64 + n) / 2.0;
        let radial = gamma(half) / (2.0 * h.c.powf(half));
        let theta = *thetas.entry((a1, a2)).or_insert_with(|| {
            cone_integral(&w, s, side, tol, |t| {
                let (st, ct) = t.sin_cos();
                ct.powi((a1 as usize + p) as i32 - 1) * st.powi((a2 as usize + q) as i32 - 1)
            })
        });
        value += co * (radial * m * theta);
    }
    Ok(Estimated {
        value,
        max_subintegral_error: w.get(),
    })
}

/// `max |a − b| / max(|a|, |b|)`; when every entry is below `floor` the
/// absolute deviation is returned instead.
pub fn relative_discrepancy(a: &[Complex64], b: &[Complex64], floor: f64) -> f64 {
    let dev = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let scale = a.iter().chain(b).map(|z| z.norm()).fold(0.0, f64::max);
    if scale < floor {
        dev
    } else {
        dev / scale
    }
}

/// Pairings `⟨P_+^·, ·⟩`, `⟨P_−^·, ·⟩` at `s` against `𝓕h` and at `σ` against `h`.
#[derive(Clone, Debug, Serialize)]
pub struct OneSided {
    pub at_s: [Estimated; 2],
    pub at_sigma: [Estimated; 2],
}

impl OneSided {
    fn max_error(&self) -> f64 {
        self.at_s
            .iter()
            .chain(&self.at_sigma)
            .map(|e| e.max_subintegral_error)
            .fold(0.0, f64::max)
    }

    fn values(&self) -> ([Complex64; 2], [Complex64; 2]) {
        (
            [self.at_s[0].value, self.at_s[1].value],
            [self.at_sigma[0].value, self.at_sigma[1].value],
        )
    }
}

type Pairing = fn(usize, usize, f64, Side, &GaussianTest, f64) -> Result<Estimated, ZetaError>;

fn one_sided(
    pairing: Pairing,
    p: usize,
    q: usize,
    s: f64,
    h: &GaussianTest,
    hat: &GaussianTest,
    opts: &QuadratureOptions,
) -> Result<OneSided, ZetaError> {
    let sigma = -s - (p + q) as f64 / 2.0;
    let jobs: [(f64, Side, &GaussianTest); 4] = [
        (s, Side::Plus, hat),
        (s, Side::Minus, hat),
        (sigma, Side::Plus, h),
        (sigma, Side::Minus, h),
    ];
    let results: Vec<Result<Estimated, ZetaError>> = if opts.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = jobs
                .iter()
                .map(|&(x, side, f)| scope.spawn(move || pairing(p, q, x, side, f, opts.abs_tol)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("quadrature worker panicked"))
                .collect()
        })
    } else {
        jobs.iter()
            .map(|&(x, side, f)| pairing(p, q, x, side, f, opts.abs_tol))
            .collect()
    };
    let mut it = results.into_iter();
    let mut next = || it.next().expect("four jobs");
    let out = OneSided {
        at_s: [next()?, next()?],
        at_sigma: [next()?, next()?],
    };
    let worst = out.max_error();
    if worst > opts.fail_above {
        return Err(ZetaError::Quadrature {
            what: format!("one-sided pairings for (p, q) = ({}, {}), s = {}", p, q, s),
            estimate: worst,
        });
    }
    Ok(out)
}

/// Both sides of the functional equation from one-sided pairings:
/// `P^{·,±} = P_+ ± P_−`.
fn sides(p: usize, q: usize, s: f64, os: &OneSided) -> ([Complex64; 2], [Complex64; 2]) {
    let (l, r) = os.values();
    let g = gamma_value(p + q, s);
    let a = a_matrix_pq_at(p, q, s);
    let even = [r[0] + r[1], r[0] - r[1]];
    let lhs = [l[0] + l[1], l[0] - l[1]];
    let rhs = [
        g * (a[0][0] * even[0] + a[0][1] * even[1]),
        g * (a[1][0] * even[0] + a[1][1] * even[1]),
    ];
    (lhs, rhs)
}

/// The one-sided transforms
/// `𝓕P_+^s = γ(s){−sin((s+q/2)π) P_+^σ + sin(pπ/2) P_−^σ}` and its mirror.
fn gelfand_shilov_sides(p: usize, q: usize, s: f64, os: &OneSided) -> ([Complex64; 2], [Complex64; 2]) {
    let (l, r) = os.values();
    let g = gamma_value(p + q, s);
    let m = eval_matrix(&one_sided_matrix_pq(p, q), s);
    let rhs = [
        g * (m[0][0] * r[0] + m[0][1] * r[1]),
        g * (m[1][0] * r[0] + m[1][1] * r[1]),
    ];
    (l, rhs)
}

/// `γ(s) = 2^{2s+n} π^{n/2−1} Γ(s+1) Γ(s+n/2)` through the exact descriptor.
pub fn gamma_value(n: usize, s: f64) -> f64 {
    gamma_pq(n, &Affine::in_s(exactalg::qi(1), exactalg::qi(0)))
        .eval(s, 0.0)
        .re
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaCheckReport {
    pub p: usize,
    pub q: usize,
    pub s: f64,
    pub sigma: f64,
    pub test_function: GaussianTest,
    pub gamma: f64,
    pub a_matrix: [[f64; 2]; 2],
    /// `"direct"` or `"semi-analytic"`: the pipeline behind `lhs`, `rhs`.
    pub pipeline: &'static str,
    /// `⟨P^{s,ε}, 𝓕h⟩` for `ε = +, −`.
    pub lhs: [Complex64; 2],
    /// `γ(s) Σ_η a_{εη}(s) ⟨P^{σ,η}, h⟩`.
    pub rhs: [Complex64; 2],
    pub relative_error: f64,
    pub absolute_error: f64,
    pub semi_analytic_lhs: [Complex64; 2],
    pub semi_analytic_rhs: [Complex64; 2],
    pub semi_analytic_relative_error: f64,
    /// Relative disagreement of the one-sided pairings between pipelines.
    pub pipeline_discrepancy: Option<f64>,
    /// Relative residual of the one-sided transforms.
    pub gelfand_shilov_residual: f64,
    pub max_subintegral_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub millis: u128,
}

/// Absolute scale below which both sides count as vanishing.
const VANISH: f64 = 1e-12;

pub fn numeric_zeta_check(
    p: usize,
    q: usize,
    s: f64,
    test: &GaussianTest,
    opts: &QuadratureOptions,
) -> Result<ZetaCheckReport, ZetaError> {
    let start = Instant::now();
    let n = p + q;
    if test.n != n {
        return Err(ZetaError::Config(format!(
            "test function lives on ℝ^{}, not ℝ^{}",
            test.n, n
        )));
    }
    let sigma = -s - n as f64 / 2.0;
    check_domain(p, q, s)?;
    check_domain(p, q, sigma)?;
    let hat = test.fourier();

    let semi = one_sided(pairing_semi_analytic, p, q, s, test, &hat, opts)?;
    let direct = if n <= opts.max_direct_dim {
        Some(one_sided(pairing_direct, p, q, s, test, &hat, opts)?)
    } else {
        None
    };

    let (semi_lhs, semi_rhs) = sides(p, q, s, &semi);
    let semi_rel = relative_discrepancy(&semi_lhs, &semi_rhs, VANISH);
    let primary = direct.as_ref().unwrap_or(&semi);
    let (lhs, rhs) = sides(p, q, s, primary);
    let relative_error = relative_discrepancy(&lhs, &rhs, VANISH);
    let absolute_error = lhs
        .iter()
        .zip(&rhs)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let pipeline_discrepancy = direct.as_ref().map(|d| {
        let (a1, a2) = d.values();
        let (b1, b2) = semi.values();
        relative_discrepancy(
            &[a1[0], a1[1], a2[0], a2[1]],
            &[b1[0], b1[1], b2[0], b2[1]],
            VANISH,
        )
    });
    let (gs_l, gs_r) = gelfand_shilov_sides(p, q, s, primary);
    let gelfand_shilov_residual = relative_discrepancy(&gs_l, &gs_r, VANISH);
    let max_subintegral_error = primary.max_error().max(semi.max_error());
    let tol = opts.tolerance;
    let passed = relative_error < tol
        && semi_rel < tol
        && gelfand_shilov_residual < tol
        && pipeline_discrepancy.map_or(true, |d| d < tol);

    Ok(ZetaCheckReport {
        p,
        q,
        s,
        sigma,
        test_function: test.clone(),
        gamma: gamma_value(n, s),
        a_matrix: a_matrix_pq_at(p, q, s),
        pipeline: if direct.is_some() {
            "direct"
        } else {
            "semi-analytic"
        },
        lhs,
        rhs,
        relative_error,
        absolute_error,
        semi_analytic_lhs: semi_lhs,
        semi_analytic_rhs: semi_rhs,
        semi_analytic_relative_error: semi_rel,
        pipeline_discrepancy,
        gelfand_shilov_residual,
        max_subintegral_error,
        tolerance: tol,
        passed,
        millis: start.elapsed().as_millis(),
    })
}
