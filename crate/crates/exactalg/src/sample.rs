//! Random sampling of rationals and polynomials for property checks.

use std::sync::Arc;

use rand::Rng;

use crate::mono::Mono;
use crate::mpoly::{MPoly, Vars};
use crate::param::ParamPoly;
use crate::rational::{q, Q};

/// Rational with numerator in `[-bound, bound]` and denominator in `1..=den`.
pub fn rand_q<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> Q {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

/// Nonzero rational, same ranges as [`rand_q`].
pub fn rand_q_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> Q {
    loop {
        let x = rand_q(rng, bound, den);
        if x != q(0, 1) {
            return x;
        }
    }
}

pub fn rand_point<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64, den: i64) -> Vec<Q> {
    (0..n).map(|_| rand_q(rng, bound, den)).collect()
}

pub fn rand_mono<R: Rng + ?Sized>(rng: &mut R, n: usize, max_deg: u32) -> Mono {
    let d = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Mono::from_exps(&exps)
}

/// Polynomial with up to `nterms` random terms of degree at most `max_deg`.
pub fn rand_poly<R: Rng + ?Sized>(rng: &mut R, vars: &Arc<Vars>, max_deg: u32, nterms: usize) -> MPoly {
    let n = vars.len();
    let mut p = MPoly::zero(vars);
    for _ in 0..nterms {
        let m = rand_mono(rng, n, max_deg);
        p.add_term(m, ParamPoly::from_q(rand_q(rng, 5, 3)));
    }
    p
}

/// Homogeneous polynomial of degree exactly `deg` (possibly zero).
pub fn rand_homogeneous<R: Rng + ?Sized>(rng: &mut R, vars: &Arc<Vars>, deg: u32, nterms: usize) -> MPoly {
    let n = vars.len();
    let mut p = MPoly::zero(vars);
    for _ in 0..nterms {
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        p.add_term(Mono::from_exps(&exps), ParamPoly::from_q(rand_q(rng, 5, 3)));
    }
    p
}
