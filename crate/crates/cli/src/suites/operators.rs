//! Suites on operator families: the Fourier transfer between `D_{s,t}` and
//! `E_{s,t}`, conformal covariance and the bracket family `B^{(N)}`.

use std::sync::Arc;

use conformal::moebius::{hua_inversion, Moebius};
use conformal::{ConfMatrix, ConformalError, CovarianceCertificate, QuadricModel};
use exactalg::sample::{rand_point, rand_q_nonzero};
use exactalg::{qi, MPoly, Param, ParamPoly};
use jordan::{Algebra, Kind};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rpq::{proportionality, swap_slots, RpqError, RpqOperators};
use weyl::{build_est, fourier_conjugate, restrict_diagonal, FourierConvention};

use crate::check::{Check, CheckFailure, Outcome, Tally};

/// Whether the explicit `ℝ^{p,q}` operators exist for `k`.
pub fn has_explicit_operators(k: Kind) -> bool {
    matches!(k, Kind::Rpq(p, q) if p >= 2 && q >= 1)
}

fn signature(k: Kind) -> (usize, usize) {
    match k {
        Kind::Rpq(p, q) => (p, q),
        _ => unreachable!("caller checked the algebra is R^(p,q)"),
    }
}

pub fn fourier_weyl(a: &Arc<Algebra>) -> Vec<Check> {
    let k = a.kind();
    let alg = a.clone();
    let mut out = vec![Check::new(
        format!("fourier-weyl/{}/fourier-conjugate", k),
        "Fourier conjugate of E_{s,t} equals D_{s,t}; E carries the constant τ^(-r)",
        move |_| {
            let fam = build_est(&alg)?;
            let full = fam.in_convention(FourierConvention::TwoPiI)?;
            let mut t = Tally::default();
            t.record(fourier_conjugate(&full)? == fam.dst, || "FC(E) ≠ D".into());
            t.record(fam.tau_power == -(fam.r as i32), || {
                format!("τ power {}", fam.tau_power)
            });
            t.record(fam.scaled.tau_powers().iter().all(|&p| p == 0), || {
                "scaled E still has τ".into()
            });
            Ok(t.outcome())
        },
    )];
    if has_explicit_operators(k) {
        let (p, q) = signature(k);
        out.push(Check::new(
            format!("fourier-weyl/{}/explicit-operators", k),
            "explicit D_{s,t}, E_{s,t}, F_{λ,μ} and B^(1) on R^{p,q} agree with the generic construction",
            move |_| {
                let r = RpqOperators::new(p, q)?;
                let c = r.consistency()?;
                let b1_one = c.b1_ratio.as_ref().and_then(|x| x.constant()) == Some(qi(1));
                let flags = [
                    ("D", c.dst_equal),
                    ("E", c.est_equal),
                    ("F", c.f_equal),
                    ("F = E(n/r-λ, n/r-μ)", c.f_is_substituted_e),
                    ("Fourier round trip", c.fourier_round_trip),
                    ("res∘F = B^(1)", b1_one),
                ];
                let bad: Vec<&str> = flags.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
                Ok(Outcome::exact(flags.len(), bad.len(), Some(bad.join(", "))))
            },
        ));
    }
    out
}

fn random_generator(m: &QuadricModel, rng: &mut ChaCha8Rng) -> Result<ConfMatrix, ConformalError> {
    Ok(match rng.gen_range(0..4) {
        0 => m.translation(&rand_point(rng, m.n(), 3, 2))?,
        1 => m.dilation(&rand_q_nonzero(rng, 3, 2))?,
        2 => {
            let h = m.random_rotation(rng, 3);
            m.levi(&rand_q_nonzero(rng, 2, 2), &h)?
        }
        _ => m.inversion(),
    })
}

fn random_word(m: &QuadricModel, rng: &mut ChaCha8Rng, len: usize) -> Result<ConfMatrix, ConformalError> {
    let mut g = m.identity();
    for _ in 0..len {
        g = g.mul(&random_generator(m, rng)?);
    }
    Ok(g)
}

fn rand_moebius(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Result<Moebius, ConformalError> {
    match rng.gen_range(0..3) {
        0 => Moebius::translation(alg, &alg.random_element(rng)),
        1 => Moebius::quadratic(alg, &alg.random_invertible(rng)),
        _ => Moebius::inversion(alg),
    }
}

/// Samples drawn per cocycle or Hua check; points sent to infinity are
/// redrawn, at most this many times over.
const GROUP_SAMPLES: usize = 100;
const REDRAW_FACTOR: usize = 20;

fn too_many_redraws() -> CheckFailure {
    CheckFailure::Other("too many random points were sent to infinity".into())
}

/// A covariance violation is a failed check, not a broken run.
fn certificate_outcome(res: Result<CovarianceCertificate, RpqError>) -> Result<Outcome, CheckFailure> {
    match res {
        Ok(cert) => {
            let bad = cert.residual_terms.iter().filter(|&&k| k > 0).count();
            Ok(Outcome {
                passed: bad == 0 && cert.checked > 0,
                residual: bad as f64,
                detail: Some(format!(
                    "{} basis elements, surviving terms {:?}",
                    cert.checked, cert.residual_terms
                )),
            })
        }
        Err(RpqError::Conformal(e @ ConformalError::CovarianceViolation { .. })) => Ok(Outcome {
            passed: false,
            residual: 1.0,
            detail: Some(e.to_string()),
        }),
        Err(e) => Err(e.into()),
    }
}

fn quadric_checks(a: &Arc<Algebra>) -> Vec<Check> {
    let k = a.kind();
    let (p, q) = signature(k);
    let mut out = Vec::new();
    out.push(Check::new(
        format!("covariance/{}/lie-homomorphism", k),
        "dπ_λ([X,Y]) = [dπ_λ(X), dπ_λ(Y)] on a basis of the conformal Lie algebra",
        move |_| {
            let m = QuadricModel::from_signature(p, q)?;
            let lam = ParamPoly::param(Param::Lambda);
            let basis = m.lie_basis();
            let mut t = Tally::default();
            for x in &basis {
                for y in &basis {
                    let lhs = m.dpi(&lam, &x.bracket(y));
                    let rhs = m.dpi(&lam, x).commutator(&m.dpi(&lam, y))?;
                    t.record(lhs == rhs, || format!("pair {:?}, {:?}", x.index, y.index));
                }
            }
            Ok(t.outcome())
        },
    ));
    out.push(Check::new(
        format!("covariance/{}/cocycle-chain-rule", k),
        "cocycle identity a(g₁g₂, x) = a(g₁, g₂x) a(g₂, x) with (g₁g₂)x = g₁(g₂x)",
        move |rng| {
            let m = QuadricModel::from_signature(p, q)?;
            let mut t = Tally::default();
            let mut tries = 0;
            while t.total < GROUP_SAMPLES {
                tries += 1;
                if tries > REDRAW_FACTOR * GROUP_SAMPLES {
                    return Err(too_many_redraws());
                }
                let g1 = random_word(&m, rng, 3)?;
                let g2 = random_word(&m, rng, 3)?;
                let x = rand_point(rng, m.n(), 5, 3);
                let Ok(g2x) = m.act(&g2, &x) else { continue };
                if m.cocycle(&g1, &g2x).is_zero() {
                    continue;
                }
                let g12 = g1.mul(&g2);
                let ok = m.cocycle(&g12, &x) == m.cocycle(&g1, &g2x) * m.cocycle(&g2, &x)
                    && m.act(&g12, &x)? == m.act(&g1, &g2x)?;
                t.record(ok, || format!("x={:?}", x));
            }
            Ok(t.outcome())
        },
    ));
    out.push(Check::new(
        format!("covariance/{}/hua-formula", k),
        "Hua formula P(gx - gy) = a(g,x)^(-1) a(g,y)^(-1) P(x - y) on the conformal compactification",
        move |rng| {
            let m = QuadricModel::from_signature(p, q)?;
            let mut t = Tally::default();
            let mut tries = 0;
            while t.total < GROUP_SAMPLES {
                tries += 1;
                if tries > REDRAW_FACTOR * GROUP_SAMPLES {
                    return Err(too_many_redraws());
                }
                let g = random_word(&m, rng, 4)?;
                let x = rand_point(rng, m.n(), 5, 3);
                let y = rand_point(rng, m.n(), 5, 3);
                match m.hua_check(&g, &x, &y) {
                    Ok(ok) => t.record(ok, || format!("x={:?} y={:?}", x, y)),
                    Err(ConformalError::PointAtInfinity) => continue,
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(t.outcome())
        },
    ));
    if has_explicit_operators(k) {
        out.push(Check::new(
            format!("covariance/{}/f-covariance", k),
            "F_{λ,μ} intertwines π_(λ,μ) with π_(λ+1,μ+1) on every Lie algebra basis element",
            move |_| {
                let r = RpqOperators::new(p, q)?;
                certificate_outcome(r.certify_f())
            },
        ));
        out.push(bracket_certificate(p, q, 1, "covariance"));
    }
    out
}

fn moebius_checks(a: &Arc<Algebra>) -> Vec<Check> {
    let k = a.kind();
    let mut out = Vec::new();
    if matches!(k, Kind::SymR(_) | Kind::MatR(_)) {
        let alg = a.clone();
        out.push(Check::new(
            format!("covariance/{}/cocycle-chain-rule", k),
            "cocycle identity a(g₁g₂, x) = a(g₁, g₂x) a(g₂, x) for linear fractional maps",
            move |rng| {
                let mut t = Tally::default();
                let mut tries = 0;
                while t.total < GROUP_SAMPLES {
                    tries += 1;
                    if tries > REDRAW_FACTOR * GROUP_SAMPLES {
                        return Err(too_many_redraws());
                    }
                    let g1 = rand_moebius(&alg, rng)?.mul(&rand_moebius(&alg, rng)?);
                    let g2 = rand_moebius(&alg, rng)?.mul(&rand_moebius(&alg, rng)?);
                    let x = alg.random_element(rng);
                    let Ok(g2x) = g2.act(&x) else { continue };
                    if g1.act(&g2x).is_err() {
                        continue;
                    }
                    let g12 = g1.mul(&g2);
                    let ok = g12.cocycle(&x)? == g1.cocycle(&g2x)? * g2.cocycle(&x)?
                        && g12.act(&x)? == g1.act(&g2x)?;
                    t.record(ok, || format!("x={:?}", x));
                }
                Ok(t.outcome())
            },
        ));
        let alg = a.clone();
        out.push(Check::new(
            format!("covariance/{}/hua-formula", k),
            "Hua formula det(gx - gy) = a(g,x)^(-1) a(g,y)^(-1) det(x - y) for linear fractional maps",
            move |rng| {
                let mut t = Tally::default();
                let mut tries = 0;
                while t.total < GROUP_SAMPLES {
                    tries += 1;
                    if tries > REDRAW_FACTOR * GROUP_SAMPLES {
                        return Err(too_many_redraws());
                    }
                    let mut g = Moebius::identity(&alg)?;
                    for _ in 0..4 {
                        g = g.mul(&rand_moebius(&alg, rng)?);
                    }
                    let x = alg.random_element(rng);
                    let y = alg.random_element(rng);
                    match g.hua_check(&x, &y) {
                        Ok(ok) => t.record(ok, || format!("x={:?} y={:?}", x, y)),
                        Err(ConformalError::PointAtInfinity) => continue,
                        Err(e) => return Err(e.into()),
                    }
                }
                Ok(t.outcome())
            },
        ));
    } else {
        let alg = a.clone();
        out.push(Check::new(
            format!("covariance/{}/hua-inversion", k),
            "det(x⁻¹ - y⁻¹) = det(x)^(-1) det(y)^(-1) det(y - x)",
            move |rng| {
                let mut t = Tally::default();
                for _ in 0..GROUP_SAMPLES {
                    let x = alg.random_invertible(rng);
                    let y = alg.random_invertible(rng);
                    t.record(hua_inversion(&alg, &x, &y)?, || format!("x={:?} y={:?}", x, y));
                }
                Ok(t.outcome())
            },
        ));
    }
    out
}

pub fn covariance(a: &Arc<Algebra>) -> Vec<Check> {
    match a.kind() {
        Kind::Rpq(..) => quadric_checks(a),
        _ => moebius_checks(a),
    }
}

fn bracket_certificate(p: usize, q: usize, order: usize, suite: &str) -> Check {
    Check::new(
        format!("{}/rpq:{},{}/b{}-covariance", suite, p, q, order),
        "B^(N) intertwines π_λ ⊗ π_μ with π_(λ+μ+2N)",
        move |_| {
            let r = RpqOperators::new(p, q)?;
            certificate_outcome(r.certify_bn(order))
        },
    )
}

pub fn brackets(k: Kind) -> Vec<Check> {
    let (p, q) = signature(k);
    let mut out = vec![Check::new(
        format!("brackets/{}/b1-is-restricted-f", k),
        "B^(1) = res ∘ F_{λ,μ} equals the explicit first bracket with constant 1",
        move |_| {
            let r = RpqOperators::new(p, q)?;
            let b1 = r.build_bn(1)?;
            let mut t = Tally::default();
            t.record(b1 == restrict_diagonal(r.explicit_f()), || "B^(1) ≠ res∘F".into());
            let ratio = proportionality(&b1, r.explicit_b1()).and_then(|x| x.constant());
            t.record(ratio == Some(qi(1)), || format!("ratio {:?}", ratio));
            Ok(t.outcome())
        },
    )];
    for order in [1usize, 2] {
        out.push(bracket_certificate(p, q, order, "brackets"));
    }
    out.push(Check::new(
        format!("brackets/{}/symmetry-and-order", k),
        "B^(N) is symmetric under (x,λ) ↔ (y,μ), has order 2N and kills constants",
        move |_| {
            let r = RpqOperators::new(p, q)?;
            let one = MPoly::one(r.vars());
            let b1 = r.build_bn(1)?;
            let b2 = r.build_bn(2)?;
            let mut t = Tally::default();
            t.record(swap_slots(&b1) == b1, || "B^(1) not symmetric".into());
            t.record(swap_slots(&b2) == b2, || "B^(2) not symmetric".into());
            t.record(b1.order() == Some(2), || {
                format!("order B^(1) = {:?}", b1.order())
            });
            t.record(b2.order() == Some(4), || {
                format!("order B^(2) = {:?}", b2.order())
            });
            t.record(b1.apply(&one)?.is_zero(), || "B^(1) 1 ≠ 0".into());
            t.record(b2.apply(&one)?.is_zero(), || "B^(2) 1 ≠ 0".into());
            Ok(t.outcome())
        },
    ));
    out
}
