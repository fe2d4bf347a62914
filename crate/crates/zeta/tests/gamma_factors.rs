use exactalg::{q, qi, Q};
use proptest::prelude::*;
use statrs::function::gamma::gamma;
use zeta::{gamma_omega, gamma_pq, gamma_v, Affine, GammaFactor};

fn s() -> Affine {
    Affine::in_s(qi(1), qi(0))
}

#[test]
fn gamma_ratio_telescopes_to_linear_factors() {
    // Γ(s+3)/Γ(s) = s(s+1)(s+2)
    let g = GammaFactor::gamma(s().add_const(&qi(3))).div(&GammaFactor::gamma(s()));
    let lin = GammaFactor::linear(s())
        .mul(&GammaFactor::linear(s().add_const(&qi(1))))
        .mul(&GammaFactor::linear(s().add_const(&qi(2))));
    assert!(g.same_function(&lin));
    assert!(g.is_rational_in_st());

    // Γ(s−1/2)/Γ(s+3/2) = 1/((s−1/2)(s+1/2))
    let h = GammaFactor::gamma(s().add_const(&q(-1, 2))).div(&GammaFactor::gamma(s().add_const(&q(3, 2))));
    let c = h.canonical();
    assert!(c.gamma_num.is_empty() && c.gamma_den.is_empty());
    assert_eq!(c.lin_den.len(), 2);
    assert!(c.lin_num.is_empty());
}

#[test]
fn non_integer_gaps_stay_as_gamma_values() {
    let g = GammaFactor::gamma(s().add_const(&q(1, 3))).div(&GammaFactor::gamma(s()));
    assert!(!g.is_rational_in_st());
}

#[test]
fn gamma_pq_has_the_expected_poles() {
    for n in 2..=7usize {
        let poles = gamma_pq(n, &s()).poles_in_s(4);
        let mut want: std::collections::BTreeMap<Q, usize> = Default::default();
        for k in 1..=4 {
            *want.entry(qi(-k)).or_insert(0) += 1;
        }
        for k in 0..4 {
            *want.entry(q(-(n as i64), 2) - qi(k)).or_insert(0) += 1;
        }
        assert_eq!(poles, want, "n = {}", n);
    }
}

#[test]
fn gamma_pq_matches_its_closed_form() {
    for n in [3usize, 4, 5] {
        for x in [-0.7, -0.3, 0.25, 1.6] {
            let want = 2f64.powf(2.0 * x + n as f64)
                * std::f64::consts::PI.powf(n as f64 / 2.0 - 1.0)
                * gamma(x + 1.0)
                * gamma(x + n as f64 / 2.0);
            let got = gamma_pq(n, &s()).eval(x, 0.0);
            assert!((got.re - want).abs() <= 1e-12 * want.abs() && got.im.abs() < 1e-12 * want.abs());
        }
    }
}

#[test]
fn gamma_v_and_omega_match_products() {
    let (r, d, n) = (3usize, 2usize, 9usize);
    let x = 2.3;
    let gv: f64 = (1..=r)
        .map(|k| gamma(x / 2.0 - (k as f64 - 1.0) * d as f64 / 4.0))
        .product();
    assert!((gamma_v(r, d, &s()).eval(x, 0.0).re - gv).abs() < 1e-12 * gv.abs());
    let go = (2.0 * std::f64::consts::PI).powf((n - r) as f64 / 2.0)
        * (1..=r)
            .map(|j| gamma(x - (j as f64 - 1.0) * d as f64 / 2.0))
            .product::<f64>();
    assert!((gamma_omega(n, r, d, &s()).eval(x, 0.0).re - go).abs() < 1e-12 * go.abs());
}

#[test]
fn canonical_form_is_idempotent_and_mul_inv_is_one() {
    let g = gamma_pq(5, &s()).mul(&gamma_v(2, 3, &s().scale(&qi(2))));
    let c = g.canonical();
    assert_eq!(c.canonical(), c);
    assert!(g.mul(&g.inv()).same_function(&GammaFactor::one()));
}

proptest! {
    #[test]
    fn shifted_descriptor_evaluates_like_shifted_argument(
        shift in -3i64..=3,
        num in 1i64..=6,
        x in 0.1f64..2.0,
    ) {
        let h = q(num, 3);
        let base = gamma_pq(4, &s()).mul(&GammaFactor::linear(s().add_const(&q(1, 2))));
        let moved = base.shift(&(&h + qi(shift)), &qi(0));
        let xs = x + num as f64 / 3.0 + shift as f64;
        prop_assume!(xs > 0.05);
        let a = moved.eval(x, 0.0);
        let b = base.eval(xs, 0.0);
        prop_assert!((a - b).norm() <= 1e-10 * b.norm().max(1.0));
    }

    #[test]
    fn canonical_preserves_values(k in 0i64..=4, x in 0.2f64..3.0) {
        let g = GammaFactor::gamma(s().add_const(&qi(k)))
            .div(&GammaFactor::gamma(s()))
            .mul(&GammaFactor::two_power(Affine::constant(q(7, 2))))
            .mul(&GammaFactor::i_power(Affine::constant(qi(3))));
        let a = g.eval(x, 0.0);
        let b = g.canonical().eval(x, 0.0);
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0));
    }
}
