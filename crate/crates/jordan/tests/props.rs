use std::sync::Arc;

use exactalg::linalg::{self, Mat};
use exactalg::{qi, MPoly, Q};
use jordan::{Algebra, Kind};
use num_complex::Complex;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const KINDS: [Kind; 10] = [
    Kind::SymR(1),
    Kind::SymR(2),
    Kind::SymR(3),
    Kind::MatR(2),
    Kind::MatR(3),
    Kind::HermC(2),
    Kind::HermC(3),
    Kind::Rpq(2, 1),
    Kind::Rpq(2, 2),
    Kind::Rpq(3, 1),
];

fn algebras() -> Vec<Arc<Algebra>> {
    KINDS.iter().map(|k| Algebra::new(*k).unwrap()).collect()
}

#[test]
fn jordan_identity_commutativity_unit() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for a in algebras() {
        let e = a.unit();
        for _ in 0..100 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let x2 = a.mul(&x, &x);
            let lhs = a.mul(&a.mul(&x, &y), &x2);
            let rhs = a.mul(&x, &a.mul(&y, &x2));
            assert_eq!(lhs, rhs, "{}", a.kind());
            assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
            assert_eq!(a.mul(&e, &x), x);
        }
    }
}

#[test]
fn det_is_homogeneous_of_degree_rank() {
    for a in algebras() {
        let d = a.det_poly();
        assert!(d.is_homogeneous());
        assert_eq!(d.degree(), Some(a.rank() as u32), "{}", a.kind());
        for (j, c) in a.generic_coeffs().iter().enumerate() {
            assert!(c.is_homogeneous() && c.degree() == Some(j as u32 + 1));
        }
    }
}

#[test]
fn det_of_quadratic_representation() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for a in algebras() {
        for _ in 0..100 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let py = a.quad_apply(&x, &y);
            let dx = a.det_q(&x);
            assert_eq!(a.det_q(&py), &dx * &dx * a.det_q(&y), "{}", a.kind());
            assert_eq!(linalg::matvec(&a.quad_rep(&x), &y), py);
        }
    }
}

#[test]
fn minimal_polynomial_annihilates() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for a in algebras() {
        let r = a.rank();
        for _ in 0..40 {
            let x = a.random_regular(&mut rng);
            let c = a.generic_min_poly(&x).unwrap();
            assert_eq!(c, a.coeffs_at(&x), "{}", a.kind());
            // x^r − a₁x^{r−1} + … + (−1)^r a_r 𝟏 = 0
            let mut acc = a.power(&x, r);
            for (j, cj) in c.iter().enumerate() {
                let k = j + 1;
                let sign = if k % 2 == 1 { -qi(1) } else { qi(1) };
                let pw = a.power(&x, r - k);
                for (s, p) in acc.iter_mut().zip(&pw) {
                    *s += &sign * cj * p;
                }
            }
            assert!(acc.iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn inverse_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for a in algebras() {
        for _ in 0..40 {
            let x = a.random_invertible(&mut rng);
            let xi = a.inverse(&x).unwrap();
            assert_eq!(a.mul(&x, &xi), a.unit(), "{}", a.kind());
            assert_eq!(a.quad_apply(&x, &xi), x);
        }
    }
}

type C = Complex<Q>;

fn cdet(m: &[Vec<C>]) -> C {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Complex::new(Q::zero(), Q::zero());
    for j in 0..m.len() {
        let minor: Vec<Vec<C>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * cdet(&minor);
        acc = if j % 2 == 0 { acc + t } else { acc - t };
    }
    acc
}

fn to_c(re: &Mat, im: &Mat) -> Vec<Vec<C>> {
    re.iter()
        .zip(im)
        .map(|(a, b)| {
            a.iter()
                .zip(b)
                .map(|(x, y)| Complex::new(x.clone(), y.clone()))
                .collect()
        })
        .collect()
}

fn cmul(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).fold(Complex::new(Q::zero(), Q::zero()), |s, k| s + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

#[test]
fn matrix_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for a in algebras() {
        for _ in 0..50 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let tr = a.coeffs_at(&x)[0].clone();
            let det = a.det_q(&x);
            let py = a.quad_apply(&x, &y);
            if let Some(mx) = a.as_real_matrix(&x) {
                assert_eq!(det, linalg::det(&mx));
                assert_eq!(tr, (0..mx.len()).fold(Q::zero(), |s, i| s + &mx[i][i]));
                let my = a.as_real_matrix(&y).unwrap();
                let xyx = linalg::matmul(&linalg::matmul(&mx, &my), &mx);
                assert_eq!(a.from_real_matrix(&xyx).unwrap(), py);
                assert_eq!(a.from_real_matrix(&mx).unwrap(), x);
            } else if let Some((re, im)) = a.as_complex_matrix(&x) {
                let cx = to_c(&re, &im);
                let d = cdet(&cx);
                assert!(d.im.is_zero());
                assert_eq!(det, d.re);
                let (yr, yi) = a.as_complex_matrix(&y).unwrap();
                let xyx = cmul(&cmul(&cx, &to_c(&yr, &yi)), &cx);
                let (pr, pi) = a.as_complex_matrix(&py).unwrap();
                assert_eq!(xyx, to_c(&pr, &pi));
            }
        }
    }
}

#[test]
fn sharp_of_minors_is_polynomial() {
    let a = Algebra::new(Kind::SymR(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for k in 0..=3usize {
        let m = a.principal_minor(k).unwrap();
        let s = a.sharp(&m, k as u32).unwrap();
        for _ in 0..10 {
            let x = a.random_invertible(&mut rng);
            let xi = a.inverse(&x).unwrap();
            assert_eq!(s.eval_q(&x), m.eval_q(&xi) * a.det_q(&x));
        }
    }
    let v = a.vars();
    let not_homogeneous = &MPoly::var(v, 0) + &MPoly::one(v);
    assert!(a.sharp(&not_homogeneous, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_counts_negative_diagonal(d in proptest::collection::vec(-5i64..=5, 3)) {
        prop_assume!(d.iter().all(|&x| x != 0));
        let a = Algebra::new(Kind::SymR(3)).unwrap();
        let x = vec![qi(d[0]), qi(0), qi(0), qi(d[1]), qi(0), qi(d[2])];
        let neg = d.iter().filter(|&&x| x < 0).count();
        prop_assert_eq!(a.signature_class(&x).unwrap(), neg);
    }

    #[test]
    fn signature_is_invariant_under_congruence(seed in any::<u64>()) {
        let a = Algebra::new(Kind::SymR(3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = a.random_invertible(&mut rng);
        let g = exactalg::sample::rand_point(&mut rng, 9, 3, 1);
        let g: Mat = (0..3).map(|i| g[3 * i..3 * i + 3].to_vec()).collect();
        prop_assume!(!linalg::det(&g).is_zero());
        let mx = a.as_real_matrix(&x).unwrap();
        let y = linalg::matmul(&linalg::matmul(&g, &mx), &linalg::transpose(&g));
        let y = a.from_real_matrix(&y).unwrap();
        prop_assert_eq!(a.signature_class(&x).unwrap(), a.signature_class(&y).unwrap());
    }

    #[test]
    fn det_scales_with_rank(seed in any::<u64>(), t in -4i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in algebras() {
            let x = a.random_element(&mut rng);
            let tx: Vec<Q> = x.iter().map(|c| c * qi(t)).collect();
            prop_assert_eq!(a.det_q(&tx), a.det_q(&x) * qi(t.pow(a.rank() as u32)));
        }
    }
}
