use std::sync::Arc;

use exactalg::sample::{rand_mono, rand_poly, rand_q};
use exactalg::{MPoly, Mono, ParamPoly, Vars};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl::{fourier_conjugate, fourier_conjugate_inv, parity_conjugate, DiffOp};

fn rand_op(rng: &mut ChaCha8Rng, v: &Arc<Vars>, order: u32, deg: u32, nterms: usize) -> DiffOp {
    let mut d = DiffOp::zero(v);
    for _ in 0..nterms {
        let m = rand_mono(rng, v.len(), order);
        let k = rng.gen_range(1..=3);
        d.add_term(m, rand_poly(rng, v, deg, k));
    }
    d
}

fn vars(n: usize) -> Arc<Vars> {
    Vars::indexed("x", n).unwrap()
}

#[test]
fn canonical_commutator() {
    let v = vars(2);
    let d1 = DiffOp::deriv(&v, 0);
    let x1 = DiffOp::mult(&MPoly::var(&v, 0));
    let lhs = d1.compose(&x1).unwrap();
    let rhs = &x1.compose(&d1).unwrap() + &DiffOp::identity(&v);
    assert_eq!(lhs, rhs);
    assert_eq!(d1.commutator(&x1).unwrap(), DiffOp::identity(&v));
    // different coordinates commute
    let x2 = DiffOp::mult(&MPoly::var(&v, 1));
    assert!(d1.commutator(&x2).unwrap().is_zero());
}

#[test]
fn identity_is_neutral() {
    let v = vars(3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let id = DiffOp::identity(&v);
    for _ in 0..20 {
        let a = rand_op(&mut rng, &v, 3, 2, 4);
        assert_eq!(id.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&id).unwrap(), a);
    }
}

#[test]
fn wave_operator_on_quadratic_form() {
    // P(∂)∘P(x) applied to 1 on R^{2,1}: Σ 2β_j² = 6.
    let v = vars(3);
    let beta = [1, 1, -1];
    let mut p = MPoly::zero(&v);
    for (j, b) in beta.iter().enumerate() {
        p.add_term(Mono::var(j).mul(Mono::var(j)), ParamPoly::from_int(*b));
    }
    let op = DiffOp::from_symbol(&p).compose(&DiffOp::mult(&p)).unwrap();
    let one = MPoly::one(&v);
    assert_eq!(
        op.apply(&one).unwrap(),
        MPoly::constant(&v, ParamPoly::from_int(6))
    );
    assert_eq!(
        op.apply(&one).unwrap(),
        DiffOp::from_symbol(&p).apply(&p).unwrap()
    );
}

#[test]
fn compose_matches_successive_application() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=3 {
        let v = vars(n);
        for _ in 0..30 {
            let a = rand_op(&mut rng, &v, 3, 3, 4);
            let b = rand_op(&mut rng, &v, 3, 3, 4);
            let ab = a.compose(&b).unwrap();
            for _ in 0..3 {
                let f = rand_poly(&mut rng, &v, 6, 5);
                assert_eq!(ab.apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn compose_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let v = vars(3);
    for _ in 0..50 {
        let a = rand_op(&mut rng, &v, 2, 2, 3);
        let b = rand_op(&mut rng, &v, 2, 2, 3);
        let c = rand_op(&mut rng, &v, 2, 2, 3);
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn apply_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let v = vars(2);
    for _ in 0..30 {
        let a = rand_op(&mut rng, &v, 3, 2, 4);
        let f = rand_poly(&mut rng, &v, 5, 4);
        let g = rand_poly(&mut rng, &v, 5, 4);
        let c = ParamPoly::from_q(rand_q(&mut rng, 7, 5));
        let lhs = a.apply(&(&f + &g.scale(&c))).unwrap();
        let rhs = &a.apply(&f).unwrap() + &a.apply(&g).unwrap().scale(&c);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn variable_mismatch_is_an_error() {
    let a = DiffOp::deriv(&vars(2), 0);
    let b = DiffOp::deriv(&vars(3), 0);
    assert!(a.compose(&b).is_err());
}

#[test]
fn fourier_generators() {
    let v = vars(2);
    let tau = ParamPoly::tau_pow(1);
    let fd = fourier_conjugate(&DiffOp::deriv(&v, 0)).unwrap();
    let expect = DiffOp::mult(&MPoly::var(&v, 0).scale(&(-&tau)));
    assert_eq!(fd, expect);
    let fx = fourier_conjugate(&DiffOp::mult(&MPoly::var(&v, 0))).unwrap();
    assert_eq!(fx, DiffOp::deriv(&v, 0).scale(&ParamPoly::tau_pow(-1)));
}

#[test]
fn fourier_is_an_automorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = vars(2);
    for _ in 0..50 {
        let a = rand_op(&mut rng, &v, 2, 2, 3);
        let b = rand_op(&mut rng, &v, 2, 2, 3);
        let lhs = fourier_conjugate(&a.compose(&b).unwrap()).unwrap();
        let rhs = fourier_conjugate(&a)
            .unwrap()
            .compose(&fourier_conjugate(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // preserves the canonical commutator structure: additive too
        assert_eq!(
            fourier_conjugate(&(&a + &b)).unwrap(),
            &fourier_conjugate(&a).unwrap() + &fourier_conjugate(&b).unwrap()
        );
    }
}

#[test]
fn double_fourier_is_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let v = vars(3);
    for _ in 0..20 {
        let a = rand_op(&mut rng, &v, 3, 3, 5);
        let ff = fourier_conjugate(&fourier_conjugate(&a).unwrap()).unwrap();
        assert_eq!(ff, parity_conjugate(&a));
        assert_eq!(fourier_conjugate_inv(&fourier_conjugate(&a).unwrap()).unwrap(), a);
        assert_eq!(fourier_conjugate(&fourier_conjugate_inv(&a).unwrap()).unwrap(), a);
    }
}

#[test]
fn parity_of_generators() {
    let v = vars(1);
    let x = DiffOp::mult(&MPoly::var(&v, 0));
    let d = DiffOp::deriv(&v, 0);
    assert_eq!(parity_conjugate(&x), -&x);
    assert_eq!(parity_conjugate(&d), -&d);
    let xd = x.compose(&d).unwrap();
    assert_eq!(parity_conjugate(&xd), xd);
    assert_eq!(xd.order(), Some(1));
    assert_eq!(xd.coeff_degree(), Some(1));
    assert_eq!(xd.coeff(Mono::var(0)), MPoly::var(&v, 0));
}
