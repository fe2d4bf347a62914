use std::sync::Arc;
use std::time::Instant;

use detpower::{
    bernstein_poly, branch_sign_check, deltafgh_check, det_wave_apply, dst_operator_terms, extract_dst,
    DetCalculus,
};
use exactalg::sample::rand_poly;
use exactalg::{apply_diffop, q, qi, MPoly, Param, ParamPoly};
use jordan::{Algebra, Kind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alg(k: Kind) -> Arc<Algebra> {
    Algebra::new(k).unwrap()
}

fn s() -> ParamPoly {
    ParamPoly::param(Param::S)
}

fn t() -> ParamPoly {
    ParamPoly::param(Param::T)
}

#[test]
fn bernstein_matches_closed_forms() {
    let start = Instant::now();
    let half = ParamPoly::from_q(q(1, 2));
    let cases = [
        (Kind::SymR(1), s()),
        (Kind::SymR(2), &s() * &(&s() + &half)),
        (
            Kind::SymR(3),
            &(&s() * &(&s() + &half)) * &(&s() + &ParamPoly::one()),
        ),
        (Kind::MatR(2), &s() * &(&s() + &ParamPoly::one())),
        (Kind::HermC(2), &s() * &(&s() + &ParamPoly::one())),
    ];
    for (k, expect) in cases {
        let rep = bernstein_poly(&alg(k)).unwrap();
        assert!(rep.matches, "{}: {} vs {}", k, rep.b, rep.expected);
        assert_eq!(rep.b, expect, "{}", k);
    }
    for (p, qq) in [(2, 1), (3, 2), (2, 2), (1, 3)] {
        let n = (p + qq) as i64;
        let rep = bernstein_poly(&alg(Kind::Rpq(p, qq))).unwrap();
        // 2s(2s + n − 2)
        let expect = &(&s() * &ParamPoly::from_int(2)) * &(&s().scale(&qi(2)) + &ParamPoly::from_int(n - 2));
        assert_eq!(rep.b, expect);
        assert!(rep.matches);
    }
    assert!(start.elapsed().as_secs() < 10);
}

#[test]
fn single_variable_chain_rule() {
    let a = alg(Kind::SymR(1));
    let calc = DetCalculus::single(&a);
    let e = calc.lift(&MPoly::one(a.vars())).unwrap();
    let d = calc.diff(&e, 0);
    assert_eq!(d.shift_x, -1);
    assert_eq!(d.body, MPoly::constant(a.vars(), s()));
}

/// `P(x)`, `P(y)` and `P(x,y)` on the pair space of `ℝ^{p,q}`.
fn quadratic_forms(calc: &DetCalculus, p: usize, n: usize) -> (MPoly, MPoly, MPoly) {
    let v = calc.vars();
    let mut px = MPoly::zero(v);
    let mut py = MPoly::zero(v);
    let mut pxy = MPoly::zero(v);
    for j in 0..n {
        let sign = if j < p { qi(1) } else { qi(-1) };
        let (x, y) = (MPoly::var(v, j), MPoly::var(v, n + j));
        px += &(&x * &x).scale_q(&sign);
        py += &(&y * &y).scale_q(&sign);
        pxy += &(&x * &y).scale_q(&sign);
    }
    (px, py, pxy)
}

#[test]
fn rpq_constant_term() {
    for (p, qq) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let n = p + qq;
        let a = alg(Kind::Rpq(p, qq));
        let calc = DetCalculus::pair(&a).unwrap();
        let d1 = extract_dst(&calc, &MPoly::one(calc.vars())).unwrap();
        let (px, py, pxy) = quadratic_forms(&calc, p, n);
        let nn = ParamPoly::from_int(n as i64 - 2);
        let ct = &(&t() * &ParamPoly::from_int(2)) * &(&t().scale(&qi(2)) + &nn);
        let cs = &(&s() * &ParamPoly::from_int(2)) * &(&s().scale(&qi(2)) + &nn);
        let cst = (&s() * &t()).scale(&qi(-8));
        let expect = &(&px.scale(&ct) + &pxy.scale(&cst)) + &py.scale(&cs);
        assert_eq!(d1, expect, "rpq:{},{}", p, qq);
        let zero = d1.eval_param(Param::S, &qi(0)).eval_param(Param::T, &qi(0));
        assert!(zero.is_zero());
    }
}

#[test]
fn wave_agrees_with_polynomial_differentiation_sym2() {
    let a = alg(Kind::SymR(2));
    let calc = DetCalculus::pair(&a).unwrap();
    let w = det_wave_apply(&calc, &calc.lift(&MPoly::one(calc.vars())).unwrap()).unwrap();
    let poly = calc.to_polynomial(&w, 2, 2).unwrap();
    let dx = calc.det_x().pow(2);
    let dy = calc.det_y().unwrap().pow(2);
    let direct = apply_diffop(&calc.wave_symbol(), &(&dx * &dy)).unwrap();
    assert_eq!(poly, direct);
}

/// `det_x det_y · det(∂x−∂y)[det_x^k det_y^l f] = det_x^k det_y^l · D_{k,l} f`.
fn brute_force(calc: &DetCalculus, f: &MPoly, d: &MPoly, k: u32, l: u32) -> bool {
    let dx = calc.det_x();
    let dy = calc.det_y().unwrap();
    let g = &(&dx.pow(k) * &dy.pow(l)) * f;
    let lhs = &(dx * dy) * &apply_diffop(&calc.wave_symbol(), &g).unwrap();
    let dkl = d
        .eval_param(Param::S, &qi(k as i64))
        .eval_param(Param::T, &qi(l as i64));
    let rhs = &(&dx.pow(k) * &dy.pow(l)) * &dkl;
    lhs == rhs
}

#[test]
fn main_identity_with_integer_grid() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for k in [Kind::SymR(2), Kind::MatR(2), Kind::Rpq(2, 1), Kind::Rpq(2, 2)] {
        let a = alg(k);
        let r = a.rank() as u32;
        let calc = DetCalculus::pair(&a).unwrap();
        for i in 0..50 {
            let f = rand_poly(&mut rng, calc.vars(), 3, 3);
            let d = extract_dst(&calc, &f).unwrap();
            assert!(d.param_degree() <= r);
            // the 5×5 grid on a fifth of the samples keeps the run short
            if i % 10 == 0 {
                for kk in 0..5 {
                    for ll in 0..5 {
                        assert!(
                            brute_force(&calc, &f, &d, kk, ll),
                            "{} f={} (s,t)=({},{})",
                            k,
                            f,
                            kk,
                            ll
                        );
                    }
                }
            } else {
                assert!(brute_force(&calc, &f, &d, 3, 2));
            }
        }
    }
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn main_identity_sym3() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let a = alg(Kind::SymR(3));
    let calc = DetCalculus::pair(&a).unwrap();
    for _ in 0..50 {
        let f = rand_poly(&mut rng, calc.vars(), 3, 3);
        let d = extract_dst(&calc, &f).unwrap();
        assert!(d.param_degree() <= 3);
    }
}

#[test]
fn d00_is_plain_differentiation() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for k in [Kind::SymR(2), Kind::Rpq(2, 1), Kind::HermC(2)] {
        let a = alg(k);
        let calc = DetCalculus::pair(&a).unwrap();
        assert!(extract_dst(&calc, &MPoly::one(calc.vars()))
            .unwrap()
            .eval_param(Param::S, &qi(0))
            .eval_param(Param::T, &qi(0))
            .is_zero());
        for _ in 0..5 {
            let f = rand_poly(&mut rng, calc.vars(), 3, 3);
            let d00 = extract_dst(&calc, &f)
                .unwrap()
                .eval_param(Param::S, &qi(0))
                .eval_param(Param::T, &qi(0));
            let dd = calc.det_x() * calc.det_y().unwrap();
            assert_eq!(d00, &dd * &apply_diffop(&calc.wave_symbol(), &f).unwrap());
        }
    }
}

#[test]
fn operator_form_reproduces_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for k in [Kind::SymR(2), Kind::Rpq(2, 1), Kind::MatR(2)] {
        let a = alg(k);
        let calc = DetCalculus::pair(&a).unwrap();
        let probe = rand_poly(&mut rng, calc.vars(), 4, 5);
        let terms = dst_operator_terms(&calc, Some(&probe)).unwrap();
        for (alpha, c) in &terms {
            assert!(alpha.degree() <= a.rank() as u32);
            assert!(c.param_degree() <= a.rank() as u32);
        }
    }
}

#[test]
fn graded_triple_expansion() {
    let a = alg(Kind::SymR(2));
    let v = a.vars();
    let one = MPoly::one(v);
    assert!(deltafgh_check(&a, &one, &one, &one).unwrap());
    let (x11, x22) = (MPoly::var(v, 0), MPoly::var(v, 2));
    let gd = detpower::GradedDelta::new(&a).unwrap();
    assert_eq!(gd.expand(&x11, &x22, &one).unwrap(), one);
    assert!(gd.expand(&one, &one, &one).unwrap().is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for m in 1..=3 {
        let a = alg(Kind::SymR(m));
        for _ in 0..10 {
            let f = rand_poly(&mut rng, a.vars(), 3, 3);
            let g = rand_poly(&mut rng, a.vars(), 3, 3);
            let h = rand_poly(&mut rng, a.vars(), 3, 3);
            assert!(deltafgh_check(&a, &f, &g, &h).unwrap());
        }
    }
    assert!(detpower::GradedDelta::new(&alg(Kind::MatR(2))).is_err());
}

#[test]
fn branch_signs_on_split_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for k in [Kind::MatR(2), Kind::Rpq(2, 1), Kind::Rpq(2, 2)] {
        let a = alg(k);
        let b = bernstein_poly(&a).unwrap().b;
        let mut tested = 0;
        while tested < 10 {
            let x = a.random_element(&mut rng);
            if a.det_q(&x) >= qi(0) {
                continue;
            }
            for kk in 1..=4 {
                for plus in [true, false] {
                    assert!(branch_sign_check(&a, &b, kk, plus, &x).unwrap(), "{} k={}", k, kk);
                }
            }
            tested += 1;
        }
    }
}
