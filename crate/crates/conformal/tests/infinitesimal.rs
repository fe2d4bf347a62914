use conformal::{LieElem, QuadricModel};
use exactalg::linalg::zeros;
use exactalg::sample::rand_point;
use exactalg::{qi, MPoly, Mono, Param, ParamPoly, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weyl::DiffOp;

const SIGS: [(usize, usize); 3] = [(2, 1), (2, 2), (3, 1)];

fn lam() -> ParamPoly {
    ParamPoly::param(Param::Lambda)
}

#[test]
fn basis_dimension_and_antisymmetry() {
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let n = m.n();
        let basis = m.lie_basis();
        assert_eq!(basis.len(), (n + 1) * (n + 2) / 2);
        for x in &basis {
            assert!(m.is_in_lie_algebra(&x.x));
            for y in &basis {
                assert!(m.is_in_lie_algebra(&x.bracket(y).x));
            }
        }
        assert!(m.is_in_lie_algebra(&m.dilation_generator().x));
        assert!(m.is_in_lie_algebra(&m.translation_generator(&vec![qi(1); n]).x));
    }
    assert_eq!(QuadricModel::from_signature(2, 1).unwrap().lie_basis().len(), 10);
    assert_eq!(QuadricModel::from_signature(2, 2).unwrap().lie_basis().len(), 15);
}

#[test]
fn translation_generator_is_minus_directional_derivative() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let a = rand_point(&mut rng, m.n(), 5, 3);
        let ind = m.induced(&m.translation_generator(&a));
        assert!(ind.sigma.is_zero());
        let mut want = DiffOp::zero(m.vars());
        for (j, c) in a.iter().enumerate() {
            want.add_term(Mono::var(j), MPoly::constant(m.vars(), ParamPoly::from_q(-c)));
        }
        assert_eq!(m.dpi(&lam(), &m.translation_generator(&a)), want);
    }
}

#[test]
fn rotation_generator_is_linear_without_multiplier() {
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let n = m.n();
        // h = E_01 β_1 − E_10 β_0 lies in 𝔰𝔬(p, q)
        let mut h = zeros(n, n);
        h[0][1] = m.beta()[1].clone();
        h[1][0] = -m.beta()[0].clone();
        let x = m.rotation_generator(&h);
        assert!(m.is_in_lie_algebra(&x.x));
        let ind = m.induced(&x);
        assert!(ind.sigma.is_zero());
        for v in &ind.field {
            assert!(v.is_homogeneous() && v.degree().unwrap_or(1) == 1);
        }
    }
}

#[test]
fn degree_bounds() {
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        for x in m.lie_basis() {
            let ind = m.induced(&x);
            assert!(ind.sigma.degree().unwrap_or(0) <= 1);
            assert!(ind.field.iter().all(|v| v.degree().unwrap_or(0) <= 2));
            let op = m.dpi(&lam(), &x);
            assert!(op.order().unwrap_or(0) <= 1);
        }
    }
}

/// First-order expansion of `π_λ(g_t) f(x) = a(g_t⁻¹, x)^{−λ} f(g_t⁻¹ x)`
/// with `g_t⁻¹ = 1 − tX + O(t²)`, computed through the homogenisation
/// `H(t) = (1 − tσ)^d f((x − tw)/(1 − tσ))` where `w = (Xκ(x))_V`:
/// the derivative at 0 is `H'(0) + (λ + d)σ f`.
fn oracle(m: &QuadricModel, x: &LieElem, f: &MPoly, d: u32) -> MPoly {
    let vars = m.vars();
    let n = m.n();
    let kappa = m.kappa_poly();
    let row = |i: usize| -> MPoly {
        x.x[i]
            .iter()
            .zip(&kappa)
            .fold(MPoly::zero(vars), |acc, (c, k)| &acc + &k.scale_q(c))
    };
    let sigma = row(0);
    // d/dt of Σ c_m (x − tw)^m (1 − tσ)^{d − |m|} at t = 0
    let mut hprime = MPoly::zero(vars);
    for (mono, c) in f.terms() {
        let term = MPoly::monomial(vars, *mono, c.clone());
        for j in 0..n {
            hprime -= &(&term.deriv(j) * &row(j + 1));
        }
        let k = d - mono.degree();
        hprime -= &(&term * &sigma).scale_q(&qi(k as i64));
    }
    let weight = &lam() + &ParamPoly::from_int(d as i64);
    &hprime + &(&sigma * f).scale(&weight)
}

#[test]
fn induced_operator_matches_first_order_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let mut elems = m.lie_basis();
        elems.push(m.dilation_generator());
        for x in &elems {
            let op = m.dpi(&lam(), x);
            for _ in 0..5 {
                let f = exactalg::sample::rand_poly(&mut rng, m.vars(), 3, 4);
                let d = f.degree().unwrap_or(0);
                assert_eq!(op.apply(&f).unwrap(), oracle(&m, x, &f, d));
            }
        }
        // dilation diag(e^{−t}, 1, e^t): dπ_λ = −Σ x_j ∂_j − λ
        let op = m.dpi(&lam(), &m.dilation_generator());
        let mut want = DiffOp::mult(&MPoly::constant(m.vars(), -&lam()));
        for j in 0..m.n() {
            want.add_term(Mono::var(j), -&MPoly::var(m.vars(), j));
        }
        assert_eq!(op, want);
    }
}

#[test]
fn dpi_is_a_lie_homomorphism() {
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let basis = m.lie_basis();
        for x in &basis {
            for y in &basis {
                let lhs = m.dpi(&lam(), &x.bracket(y));
                let rhs = m.dpi(&lam(), x).commutator(&m.dpi(&lam(), y)).unwrap();
                assert_eq!(lhs, rhs, "R^{{{},{}}} pair {:?},{:?}", p, q, x.index, y.index);
            }
        }
    }
}

#[test]
fn commuting_translations() {
    let m = QuadricModel::from_signature(2, 2).unwrap();
    let a: Vec<Q> = vec![qi(1), qi(2), qi(0), qi(-1)];
    let b: Vec<Q> = vec![qi(0), qi(1), qi(3), qi(1)];
    let x = m.translation_generator(&a);
    let y = m.translation_generator(&b);
    assert!(x.bracket(&y).is_zero());
    assert!(m
        .dpi(&lam(), &x)
        .commutator(&m.dpi(&lam(), &y))
        .unwrap()
        .is_zero());
}
