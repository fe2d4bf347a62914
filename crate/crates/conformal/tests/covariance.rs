use conformal::{
    covariance_apply_check, covariance_check, covariance_residual, ConformalError, LieElem, QuadricModel,
    Slot, Target,
};
use exactalg::linalg::zeros;
use exactalg::{Param, ParamPoly};
use weyl::{build_est, build_f, restrict_diagonal, DiffOp, FourierConvention};

const SIGS: [(usize, usize); 3] = [(2, 1), (2, 2), (3, 1)];

fn lam() -> ParamPoly {
    ParamPoly::param(Param::Lambda)
}

fn mu() -> ParamPoly {
    ParamPoly::param(Param::Mu)
}

fn shifted(p: &ParamPoly, k: i64) -> ParamPoly {
    p + &ParamPoly::from_int(k)
}

fn setup(p: usize, q: usize) -> (QuadricModel, DiffOp) {
    let m = QuadricModel::from_signature(p, q).unwrap();
    let fam = build_est(m.algebra()).unwrap();
    let e = fam.in_convention(FourierConvention::UnitI).unwrap();
    (m, build_f(&e, fam.n, fam.r))
}

fn pair_slots(n: usize, k: i64) -> Vec<Slot> {
    vec![Slot::new(0, shifted(&lam(), k)), Slot::new(n, shifted(&mu(), k))]
}

#[test]
fn f_is_covariant_for_every_basis_element() {
    for (p, q) in SIGS {
        let (m, f) = setup(p, q);
        let n = m.n();
        let cert = covariance_check(
            &m,
            &f,
            &pair_slots(n, 0),
            &Target::Slots(pair_slots(n, 1)),
            &m.lie_basis(),
        )
        .unwrap();
        assert!(cert.ok());
        assert_eq!(cert.checked, (n + 1) * (n + 2) / 2);
    }
}

#[test]
fn wrong_shift_is_reported() {
    let (m, f) = setup(2, 1);
    let n = m.n();
    let r = covariance_check(
        &m,
        &f,
        &pair_slots(n, 0),
        &Target::Slots(pair_slots(n, 2)),
        &m.lie_basis(),
    );
    assert!(matches!(r, Err(ConformalError::CovarianceViolation { .. })));
}

#[test]
fn zero_element_gives_zero_residual() {
    let (m, f) = setup(2, 1);
    let n = m.n();
    let zero = LieElem {
        x: zeros(n + 2, n + 2),
        index: None,
    };
    let r = covariance_residual(&m, &f, &pair_slots(n, 0), &pair_slots(n, 1), &zero).unwrap();
    assert!(r.is_zero());
}

#[test]
fn translations_commute_with_f() {
    let (m, f) = setup(2, 1);
    let n = m.n();
    for j in 0..n {
        let mut a = vec![exactalg::qi(0); n];
        a[j] = exactalg::qi(1);
        let x = m.translation_generator(&a);
        let r = covariance_residual(&m, &f, &pair_slots(n, 0), &pair_slots(n, 1), &x).unwrap();
        assert!(r.is_zero());
    }
}

#[test]
fn application_form_agrees() {
    let (m, f) = setup(2, 1);
    let n = m.n();
    let basis = m.lie_basis();
    for x in basis.iter().step_by(3) {
        let bad = covariance_apply_check(&m, &f, &pair_slots(n, 0), &Target::Slots(pair_slots(n, 1)), x, 4)
            .unwrap();
        assert_eq!(bad, 0);
    }
    // and detects a wrong target
    let x = &basis[basis.len() - 1];
    let bad =
        covariance_apply_check(&m, &f, &pair_slots(n, 0), &Target::Slots(pair_slots(n, 2)), x, 4).unwrap();
    assert!(bad > 0);
}

#[test]
fn opposite_multiplier_sign_breaks_covariance() {
    // With dπ_λ = −v·∇ − λσ the same F is not covariant for any shift
    // pattern (λ+1, μ+1).
    let (m, f) = setup(2, 1);
    let n = m.n();
    let neg = |k: i64| {
        vec![
            Slot::new(0, -&shifted(&lam(), k)),
            Slot::new(n, -&shifted(&mu(), k)),
        ]
    };
    let r = covariance_check(&m, &f, &neg(0), &Target::Slots(neg(1)), &m.lie_basis());
    assert!(r.is_err());
}

#[test]
fn restriction_is_covariant() {
    for (p, q) in SIGS {
        let m = QuadricModel::from_signature(p, q).unwrap();
        let n = m.n();
        let pair = weyl::build_dst(m.algebra()).unwrap().vars().clone();
        let id = DiffOp::identity(&pair);
        let cert = covariance_check(
            &m,
            &id,
            &pair_slots(n, 0),
            &Target::Diagonal(&lam() + &mu()),
            &m.lie_basis(),
        )
        .unwrap();
        assert!(cert.ok());
        assert!(covariance_check(
            &m,
            &id,
            &pair_slots(n, 0),
            &Target::Diagonal(&(&lam() + &mu()) + &ParamPoly::from_int(1)),
            &m.lie_basis(),
        )
        .is_err());
    }
}

#[test]
fn first_bracket_is_covariant() {
    for (p, q) in SIGS {
        let (m, f) = setup(p, q);
        let n = m.n();
        let b1 = restrict_diagonal(&f);
        let nu = &(&lam() + &mu()) + &ParamPoly::from_int(2);
        let cert = covariance_check(
            &m,
            &b1,
            &pair_slots(n, 0),
            &Target::Diagonal(nu.clone()),
            &m.lie_basis(),
        )
        .unwrap();
        assert!(cert.ok(), "R^{{{},{}}}", p, q);
        let x = &m.lie_basis()[0];
        let bad = covariance_apply_check(&m, &b1, &pair_slots(n, 0), &Target::Diagonal(nu), x, 3).unwrap();
        assert_eq!(bad, 0);
    }
}
