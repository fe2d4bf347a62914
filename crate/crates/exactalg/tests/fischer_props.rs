use exactalg::sample::{rand_homogeneous, rand_poly};
use exactalg::{
    apply_diffop, derivative_space, fischer_inner, leibnitz_expand, leibnitz_flat_form, leibnitz_triple, qi,
    LeibnitzData, MPoly, Mono, ParamPoly, Vars,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DIMS: [usize; 4] = [1, 2, 3, 6];

#[test]
fn fischer_symmetry_and_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for &n in &DIMS {
        let v = Vars::indexed("x", n).unwrap();
        for _ in 0..200 {
            let p = rand_poly(&mut rng, &v, 4, 5);
            let q = rand_poly(&mut rng, &v, 3, 4);
            let r = rand_poly(&mut rng, &v, 2, 3);
            assert_eq!(fischer_inner(&p, &q).unwrap(), fischer_inner(&q, &p).unwrap());
            // (p, qr)_F = (r(∂)p, q)_F
            let lhs = fischer_inner(&p, &(&q * &r)).unwrap();
            let rhs = fischer_inner(&apply_diffop(&r, &p).unwrap(), &q).unwrap();
            assert_eq!(lhs, rhs, "n={} p={} q={} r={}", n, p, q, r);
        }
    }
}

#[test]
fn leibnitz_matches_direct_differentiation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for &n in &DIMS {
        let v = Vars::indexed("x", n).unwrap();
        for k in 0..100 {
            let deg = 1 + (k % 4) as u32;
            let mut bold = rand_homogeneous(&mut rng, &v, deg, 3);
            if bold.is_zero() {
                bold = MPoly::var(&v, 0).pow(deg);
            }
            let f = rand_poly(&mut rng, &v, 4, 4);
            let g = rand_poly(&mut rng, &v, 4, 4);
            let data = LeibnitzData::new(&bold).unwrap();
            let direct = apply_diffop(&bold, &(&f * &g)).unwrap();
            assert_eq!(leibnitz_expand(&data, &f, &g).unwrap(), direct);
            assert_eq!(leibnitz_flat_form(&data, &f, &g).unwrap(), direct);
        }
    }
}

#[test]
fn classical_leibnitz_in_one_variable() {
    let v = Vars::indexed("x", 1).unwrap();
    let x = MPoly::var(&v, 0);
    let bold = x.pow(2);
    let data = LeibnitzData::new(&bold).unwrap();
    let f = &x.pow(3) + &x;
    let g = &x.pow(2).scale_q(&qi(5)) - &MPoly::one(&v);
    let expect = &(&(&f.deriv(0).deriv(0) * &g) + &(&f.deriv(0) * &g.deriv(0)).scale_q(&qi(2)))
        + &(&f * &g.deriv(0).deriv(0));
    assert_eq!(leibnitz_expand(&data, &f, &g).unwrap(), expect);
    // f = 1 reduces to plain application
    let one = MPoly::one(&v);
    assert_eq!(
        leibnitz_expand(&data, &one, &g).unwrap(),
        apply_diffop(&bold, &g).unwrap()
    );
}

fn sym2() -> (std::sync::Arc<Vars>, MPoly) {
    let v = Vars::new(["a", "b", "c"]).unwrap();
    let a = MPoly::var(&v, 0);
    let b = MPoly::var(&v, 1);
    let c = MPoly::var(&v, 2);
    let delta = &(&a * &c) - &(&b * &b);
    (v, delta)
}

#[test]
fn sym2_determinant_space() {
    let (v, delta) = sym2();
    let w = derivative_space(&delta).unwrap();
    assert_eq!(w.dim(), 5);
    assert_eq!(w.of_degree(2).len(), 1);
    assert_eq!(w.of_degree(1).len(), 3);
    assert_eq!(w.of_degree(0).len(), 1);
    let data = LeibnitzData::new(&delta).unwrap();
    let a = MPoly::var(&v, 0);
    let c = MPoly::var(&v, 2);
    assert_eq!(leibnitz_expand(&data, &a, &c).unwrap(), MPoly::one(&v));
    assert_eq!(apply_diffop(&delta, &(&a * &c)).unwrap(), MPoly::one(&v));
}

#[test]
fn triple_leibnitz_sym2() {
    let (v, delta) = sym2();
    let data = LeibnitzData::new(&delta).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let f = rand_poly(&mut rng, &v, 3, 3);
        let g = rand_poly(&mut rng, &v, 3, 3);
        let h = rand_poly(&mut rng, &v, 3, 3);
        let direct = apply_diffop(&delta, &(&(&f * &g) * &h)).unwrap();
        assert_eq!(leibnitz_triple(&data, &f, &g, &h).unwrap(), direct);
    }
}

#[test]
fn monomial_duality() {
    let v = Vars::indexed("x", 3).unwrap();
    let m = MPoly::monomial(&v, Mono::from_exps(&[2, 0, 3]), ParamPoly::one());
    let r = apply_diffop(&m, &m).unwrap();
    assert_eq!(r.eval(&[qi(0), qi(0), qi(0)]), ParamPoly::from_int(12));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_space_is_closed(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = Vars::indexed("x", n).unwrap();
        let p = rand_poly(&mut rng, &v, 3, 4);
        prop_assume!(!p.is_zero());
        let w = derivative_space(&p).unwrap();
        prop_assert!(w.contains(&p));
        prop_assert!(w.contains(&MPoly::one(&v)));
        for b in &w.basis {
            for i in 0..n {
                prop_assert!(w.contains(&b.deriv(i)));
            }
        }
    }

    #[test]
    fn fischer_is_positive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = Vars::indexed("x", 3).unwrap();
        let p = rand_poly(&mut rng, &v, 3, 4);
        let n = fischer_inner(&p, &p).unwrap().constant().unwrap();
        prop_assert_eq!(n > qi(0), !p.is_zero());
    }

    #[test]
    fn exact_division_roundtrip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = Vars::indexed("x", 3).unwrap();
        let a = rand_poly(&mut rng, &v, 3, 4);
        let b = rand_poly(&mut rng, &v, 2, 3);
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }
}
