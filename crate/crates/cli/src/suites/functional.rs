//! Zeta functional-equation suites: exact identities between the tabulated
//! matrices and constants, and the quadrature check on `ℝ^{p,q}`.

use conformal::Eps;
use exactalg::{q, qi, Q};
use rand::Rng;
use zeta::constants::kappa_euclidean_b1_from_gamma;
use zeta::matrices::{a_matrix_from_one_sided, one_sided_matrix_pq};
use zeta::orbits::display_residual;
use zeta::trig::eval_matrix;
use zeta::zmaps::{change_basis, from_orbit, to_orbit};
use zeta::{
    a_matrix_pq, a_matrix_pq_at, c_factor, euclidean_matrices, flip_residual_pq, kappa_const, kappa_from_c,
    kappa_rpq_gamma_quotient, numeric_zeta_check, periodicity_residual_pq, Affine, EuclideanCase,
    GammaFactor, GaussianTest, QuadratureOptions, ZetaBasis, ZetaClass,
};

use crate::check::{Check, Outcome, Tally};

/// Floating-point tolerance of the trigonometric identities.
pub const FLIP_TOLERANCE: f64 = 1e-12;

/// What a zeta-matrices check is about.
#[derive(Clone, Copy, Debug)]
pub enum ZetaTarget {
    Rpq(usize, usize),
    Split { n: usize, r: usize, d: usize },
    Euclidean { case: EuclideanCase, r: usize, d: usize },
}

pub fn default_targets() -> Vec<ZetaTarget> {
    use EuclideanCase::*;
    let mut v: Vec<ZetaTarget> = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 3)]
        .into_iter()
        .map(|(p, q)| ZetaTarget::Rpq(p, q))
        .collect();
    for m in 2..=4usize {
        v.push(ZetaTarget::Split { n: m * m, r: m, d: 2 });
        v.push(ZetaTarget::Split {
            n: m * (2 * m - 1),
            r: m,
            d: 4,
        });
    }
    v.push(ZetaTarget::Split { n: 27, r: 3, d: 8 });
    for (case, r, d) in [
        (B1, 2, 1),
        (B1, 2, 5),
        (B2, 2, 3),
        (B2, 2, 7),
        (C1, 3, 1),
        (C1, 7, 1),
        (C2, 1, 1),
        (C2, 5, 1),
        (A, 1, 4),
        (A, 2, 4),
        (A, 3, 4),
        (A, 3, 2),
        (A, 2, 8),
    ] {
        v.push(ZetaTarget::Euclidean { case, r, d });
    }
    v
}

/// Targets derived from a registry class; empty if nothing is tabulated.
pub fn targets_for(class: &ZetaClass) -> Vec<ZetaTarget> {
    match *class {
        ZetaClass::Rpq { p, q } => vec![ZetaTarget::Rpq(p, q)],
        ZetaClass::Split { n, r, d } => vec![ZetaTarget::Split { n, r, d }],
        ZetaClass::Euclidean { r, d, .. } => EuclideanCase::classify(r, d)
            .into_iter()
            .filter(|c| has_euclidean_check(*c))
            .map(|case| ZetaTarget::Euclidean { case, r, d })
            .collect(),
        ZetaClass::NonSplit { .. } => Vec::new(),
    }
}

/// Cases (a′), (c‑3), (c‑4) have no identity to test: their displayed
/// matrices disagree with the orbit computation.
fn has_euclidean_check(c: EuclideanCase) -> bool {
    use EuclideanCase::*;
    matches!(c, A | B1 | B2 | C1 | C2)
}

const EPS: [Eps; 2] = [Eps::Plus, Eps::Minus];

pub fn matrices(t: ZetaTarget) -> Vec<Check> {
    match t {
        ZetaTarget::Rpq(p, qq) => rpq_checks(p, qq),
        ZetaTarget::Split { n, r, d } => vec![split_kappa(n, r, d)],
        ZetaTarget::Euclidean { case, r, d } => euclidean_checks(case, r, d),
    }
}

fn rpq_checks(p: usize, qq: usize) -> Vec<Check> {
    let tag = format!("zeta-matrices/rpq:{},{}", p, qq);
    let mut out = vec![
        Check::new(
            format!("{}/flip-and-periodicity", tag),
            "A(s) flip identity a_{ε,η}(s) = -a_{-ε,-η}(s+1) and 4-periodicity",
            move |rng| {
                let mut worst: f64 = 0.0;
                for _ in 0..100 {
                    let s = rng.gen_range(-5.0..5.0);
                    worst = worst
                        .max(flip_residual_pq(p, qq, s))
                        .max(periodicity_residual_pq(p, qq, s));
                }
                if p == qq {
                    for _ in 0..20 {
                        let a = a_matrix_pq_at(p, qq, rng.gen_range(-5.0..5.0));
                        worst = worst.max(a[0][1].abs()).max(a[1][0].abs());
                    }
                }
                Ok(Outcome::numeric(
                    worst,
                    FLIP_TOLERANCE,
                    "max residual over 100 random s".into(),
                ))
            },
        ),
        Check::new(
            format!("{}/one-sided-rebuild", tag),
            "A(s) rebuilt from the one-sided Gelfand-Shilov transforms",
            move |rng| {
                let rebuilt = a_matrix_from_one_sided(&one_sided_matrix_pq(p, qq));
                let direct = a_matrix_pq(p, qq);
                let mut worst: f64 = 0.0;
                for _ in 0..50 {
                    let s = rng.gen_range(-3.0..3.0);
                    let (a, b) = (eval_matrix(&rebuilt, s), eval_matrix(&direct, s));
                    for i in 0..2 {
                        for j in 0..2 {
                            worst = worst.max((a[i][j] - b[i][j]).norm());
                        }
                    }
                }
                Ok(Outcome::numeric(
                    worst,
                    FLIP_TOLERANCE,
                    "max entry deviation over 50 random s".into(),
                ))
            },
        ),
    ];
    out.push(Check::new(
        format!("{}/kappa", tag),
        "κ(s,t) = γ(s)γ(t)/(γ(s+1)γ(t+1)) = 1/(16(s+1)(s+n/2)(t+1)(t+n/2))",
        move |_| {
            let k = kappa_const(&ZetaClass::Rpq { p, q: qq })?.canonical();
            let mut t = Tally::default();
            t.record(k == kappa_rpq_gamma_quotient(p + qq), || format!("κ = {}", k));
            t.record(k.is_rational_in_st(), || "κ is not rational".into());
            Ok(t.outcome())
        },
    ));
    out
}

fn split_kappa(n: usize, r: usize, d: usize) -> Check {
    Check::new(
        format!("zeta-matrices/split:n={},r={},d={}/kappa", n, r, d),
        "κ(s,t) = c(s,ε)c(t,η) / ((2π√-1)^r c(s+1,-ε) c(t+1,-η)) = (2π√-1)^r / (b(s+1) b(t+1))",
        move |rng| {
            let cl = ZetaClass::Split { n, r, d };
            let shown = kappa_const(&cl)?;
            let canon = shown.canonical();
            let mut structural = 0;
            for e in EPS {
                for h in EPS {
                    if kappa_from_c(&cl, e, h)? != canon {
                        structural += 1;
                    }
                }
            }
            let x = Affine::in_s(qi(1), qi(0));
            let y = Affine::in_t(qi(1), qi(0));
            let rr = Affine::constant(qi(r as i64));
            let tau = GammaFactor::two_power(rr.clone())
                .mul(&GammaFactor::pi_power(rr.clone()))
                .mul(&GammaFactor::i_power(rr));
            let mut worst: f64 = 0.0;
            for _ in 0..20 {
                let (s, t) = (rng.gen_range(-0.45..1.5), rng.gen_range(-0.45..1.5));
                let want = shown.eval(s, t);
                for e in EPS {
                    for h in EPS {
                        let num = c_factor(&cl, e, &x)?.mul(&c_factor(&cl, h, &y)?);
                        let den = tau
                            .mul(&c_factor(&cl, e.flip(), &x.add_const(&qi(1)))?)
                            .mul(&c_factor(&cl, h.flip(), &y.add_const(&qi(1)))?);
                        let got = num.eval(s, t) / den.eval(s, t);
                        worst = worst.max((got - want).norm() / want.norm());
                    }
                }
            }
            let mut out = Outcome::numeric(worst, 1e-10, "max relative error at 20 random (s,t)".into());
            if structural > 0 {
                out.passed = false;
                out = out.with_detail(format!("{} sign pairs differ structurally", structural));
            }
            Ok(out)
        },
    )
}

fn euclidean_checks(case: EuclideanCase, r: usize, d: usize) -> Vec<Check> {
    use EuclideanCase::*;
    let tag = format!("zeta-matrices/euclidean:r={},d={}/{}", r, d, case);
    let mut out = Vec::new();
    match case {
        B1 | B2 | C1 | C2 => out.push(Check::new(
            format!("{}/shift-identity", tag),
            "shift identity of the euclidean functional-equation matrix under s ↦ s+1",
            move |rng| {
                let f = euclidean_matrices(case, r, d)?;
                let mut worst: f64 = 0.0;
                for _ in 0..100 {
                    worst = worst.max(f.flip_residual(rng.gen_range(-4.0..4.0))?);
                }
                Ok(Outcome::numeric(
                    worst,
                    FLIP_TOLERANCE,
                    "max residual over 100 random s".into(),
                ))
            },
        )),
        A => out.push(Check::new(
            format!("{}/orbit-coefficients", tag),
            "euclidean matrix A(s) against the orbit decomposition of the Fourier transform",
            move |_| {
                let f = euclidean_matrices(case, r, d)?;
                let worst = [-0.3, 0.13, 0.41, 1.9]
                    .into_iter()
                    .map(|s| display_residual(&f, s))
                    .fold(0.0, f64::max);
                Ok(Outcome::numeric(
                    worst,
                    FLIP_TOLERANCE,
                    "max relative residual at 4 values of s".into(),
                ))
            },
        )),
        _ => {}
    }
    if case == B1 {
        out.push(Check::new(
            format!("{}/kappa", tag),
            "κ(s,t) = (2π√-1)² / (b(s+1) b(t+1)) from the euclidean Gamma factors",
            move |_| {
                let cl = ZetaClass::Euclidean { n: 2 + d, r: 2, d };
                let shown = kappa_const(&cl)?.canonical();
                let got = kappa_euclidean_b1_from_gamma(d);
                let mut t = Tally::default();
                t.record(got == shown, || format!("{} vs {}", got, shown));
                Ok(t.outcome())
            },
        ));
    }
    out
}

fn rat<R: Rng>(rng: &mut R) -> Q {
    q(rng.gen_range(-20..=20), rng.gen_range(1..=7))
}

pub fn basis_round_trip() -> Check {
    Check::new(
        "zeta-matrices/zeta-basis-round-trip",
        "Z_{s,±} and the even/odd zeta functions as combinations of the orbit zeta functions",
        |rng| {
            let mut t = Tally::default();
            for _ in 0..200 {
                let r = rng.gen_range(1..9usize);
                let c = [rat(rng), rat(rng)];
                let basis = if rng.gen_bool(0.5) {
                    ZetaBasis::PlusMinus
                } else {
                    ZetaBasis::EvenOdd
                };
                let back = from_orbit(basis, r, &to_orbit(basis, r, &c));
                t.record(back.as_ref() == Some(&c), || {
                    format!("{:?} r={} c={:?}", basis, r, c)
                });
            }
            // rank one: Z^e = Z_0, Z^o = Z_1, so Z_{s,±} = Z^e ± Z^o
            let one = change_basis(ZetaBasis::PlusMinus, ZetaBasis::EvenOdd, 1, &[qi(1), qi(0)]);
            t.record(one == Some([qi(1), qi(1)]), || format!("rank one: {:?}", one));
            Ok(t.outcome())
        },
    )
}

/// Points of the strip where both `s` and `σ = -s - n/2` give locally
/// integrable `|P|^s`; only `n ≤ 3` has one.
pub fn strip_points(n: usize) -> Option<Vec<f64>> {
    match n {
        2 => Some(vec![-0.3, -0.5, -0.7]),
        3 => Some(vec![-0.6, -0.7, -0.8]),
        _ => None,
    }
}

pub fn numeric(p: usize, qq: usize, tolerance: Option<f64>) -> Vec<Check> {
    let n = p + qq;
    let opts = QuadratureOptions {
        tolerance: tolerance.unwrap_or(QuadratureOptions::default().tolerance),
        ..QuadratureOptions::default()
    };
    let mut out = Vec::new();
    for s in strip_points(n).unwrap_or_default() {
        let opts = opts.clone();
        out.push(Check::new(
            format!("zeta-numeric/rpq:{},{}/s={}", p, qq, s),
            "⟨|P|^(s,ε), Fh⟩ = γ(s) Σ_η a_{ε,η}(s) ⟨|P|^(-s-n/2,η), h⟩ for a Gaussian h",
            move |_| {
                let g = GaussianTest::gaussian(n, 1.0)?;
                let r = numeric_zeta_check(p, qq, s, &g, &opts)?;
                Ok(Outcome {
                    passed: r.passed,
                    residual: r.relative_error,
                    detail: Some(format!(
                        "{} pipeline, lhs = [{:.6e}, {:.6e}], pipeline discrepancy {:.2e}, tolerance {:e}",
                        r.pipeline,
                        r.lhs[0],
                        r.lhs[1],
                        r.pipeline_discrepancy.unwrap_or(f64::NAN),
                        r.tolerance
                    )),
                })
            },
        ));
    }
    let opts2 = opts.clone();
    let s0 = strip_points(n).map(|v| v[1]).unwrap_or(f64::NAN);
    out.push(Check::new(
        format!("zeta-numeric/rpq:{},{}/odd-test-function", p, qq),
        "both sides vanish for an odd test function",
        move |_| {
            let mut alpha = vec![0u32; n];
            alpha[0] = 1;
            let h = GaussianTest::monomial(1.0, &alpha)?;
            let r = numeric_zeta_check(p, qq, s0, &h, &opts2)?;
            let worst = r.lhs.iter().chain(&r.rhs).map(|z| z.norm()).fold(0.0, f64::max);
            Ok(Outcome::numeric(
                worst,
                1e-12,
                format!("max |side| at s = {}", s0),
            ))
        },
    ));
    out
}
