use std::sync::Arc;

use exactalg::{q, qi, MPoly, Mono, Param, ParamPoly, Vars};
use jordan::{Algebra, Kind};
use weyl::{build_est, build_f, fourier_conjugate, DiffOp, EstFamily, FourierConvention};

fn alg(k: Kind) -> Arc<Algebra> {
    Algebra::new(k).unwrap()
}

/// Diagonal entries of the quadratic form `P` read off `det`.
fn betas(a: &Algebra) -> Vec<i64> {
    let n = a.n();
    (0..n)
        .map(|j| {
            let c = a.det_poly().coeff(Mono::var(j).mul(Mono::var(j)));
            c.constant().unwrap().to_integer().try_into().unwrap()
        })
        .collect()
}

fn pp(c: i64) -> ParamPoly {
    ParamPoly::from_int(c)
}

fn s() -> ParamPoly {
    ParamPoly::param(Param::S)
}

fn t() -> ParamPoly {
    ParamPoly::param(Param::T)
}

/// Second-order wave operator `Σ β_j ∂_{off+j}²` on the pair space.
fn wave(v: &Arc<Vars>, beta: &[i64], off: usize) -> DiffOp {
    let mut d = DiffOp::zero(v);
    for (j, b) in beta.iter().enumerate() {
        let m = Mono::var(off + j);
        d.add_term(m.mul(m), MPoly::constant(v, pp(*b)));
    }
    d
}

/// Hand transcription of `E_{s,t}` for `ℝ^{p,q}` with the kernel
/// `e^{√−1(ξ,x)}`.
fn rpq_e_display(beta: &[i64], v: &Arc<Vars>) -> DiffOp {
    let n = beta.len();
    let x = |j| MPoly::var(v, j);
    let y = |j| MPoly::var(v, n + j);
    let mut pxy = MPoly::zero(v);
    for (j, b) in beta.iter().enumerate() {
        let d = &x(j) - &y(j);
        pxy += &(&d * &d).scale(&pp(*b));
    }
    let px = wave(v, beta, 0);
    let py = wave(v, beta, n);
    let mut e = px.compose(&py).unwrap().premul(&pxy).scale(&pp(-1));
    let s1 = &s() - &pp(1);
    let t1 = &t() - &pp(1);
    let nn = pp(n as i64);
    for j in 0..n {
        let dxj = DiffOp::deriv(v, j);
        let dyj = DiffOp::deriv(v, n + j);
        let a = dxj.compose(&py).unwrap().premul(&(&x(j) - &y(j)));
        let b = dyj.compose(&px).unwrap().premul(&(&y(j) - &x(j)));
        e = &e + &a.scale(&(&pp(4) * &s1));
        e = &e + &b.scale(&(&pp(4) * &t1));
    }
    e = &e - &py.scale(&(&(&pp(2) * &s1) * &(&(&pp(2) * &s()) - &nn)));
    e = &e - &px.scale(&(&(&pp(2) * &t1) * &(&(&pp(2) * &t()) - &nn)));
    let mut mixed = DiffOp::zero(v);
    for (j, b) in beta.iter().enumerate() {
        mixed.add_term(Mono::var(j).mul(Mono::var(n + j)), MPoly::constant(v, pp(*b)));
    }
    &e + &mixed.scale(&(&(&pp(8) * &s1) * &t1))
}

const RPQ: [(usize, usize); 3] = [(2, 1), (2, 2), (3, 1)];

#[test]
fn rpq_e_matches_display_and_kills_constants() {
    for &(p, qq) in &RPQ {
        let a = alg(Kind::Rpq(p, qq));
        let fam = build_est(&a).unwrap();
        assert_eq!(fam.tau_power, -2);
        let e = fam.in_convention(FourierConvention::UnitI).unwrap();
        let want = rpq_e_display(&betas(&a), fam.vars());
        assert_eq!(e, want, "R^{{{},{}}}", p, qq);
        assert!(e.apply(&MPoly::one(fam.vars())).unwrap().is_zero());
        // E_paper = −E′ since τ^{-2} = −1 at τ = √−1
        assert_eq!(e, -&fam.scaled);
    }
}

#[test]
fn fourier_of_e_is_d() {
    let kinds = [
        Kind::SymR(2),
        Kind::SymR(3),
        Kind::MatR(2),
        Kind::HermC(2),
        Kind::Rpq(2, 1),
        Kind::Rpq(2, 2),
        Kind::Rpq(3, 1),
        Kind::Rpq(3, 0),
        Kind::Rpq(1, 3),
    ];
    for k in kinds {
        let a = alg(k);
        let fam = build_est(&a).unwrap();
        let full = fam.in_convention(FourierConvention::TwoPiI).unwrap();
        assert_eq!(fourier_conjugate(&full).unwrap(), fam.dst, "{}", k);
        assert_eq!(fam.tau_power, -(fam.r as i32), "{}", k);
        assert!(fam.scaled.tau_powers().iter().all(|&p| p == 0));
    }
}

#[test]
fn sym2_symbol_round_trip() {
    // In the Weyl algebra, conjugating E back reproduces D and D's symbol
    // at ∂ = 0 is the polynomial D_{s,t} multiplies by.
    let a = alg(Kind::SymR(2));
    let fam = build_est(&a).unwrap();
    let full = fam.in_convention(FourierConvention::TwoPiI).unwrap();
    let back = fourier_conjugate(&full).unwrap();
    assert_eq!(back.coeff(Mono::ONE), fam.dst.coeff(Mono::ONE));
    assert_eq!(back, fam.dst);
}

fn f_of(fam: &EstFamily) -> DiffOp {
    let e = fam.in_convention(FourierConvention::UnitI).unwrap();
    build_f(&e, fam.n, fam.r)
}

#[test]
fn rpq_f_coefficients() {
    for &(p, qq) in &RPQ {
        let a = alg(Kind::Rpq(p, qq));
        let n = p + qq;
        let fam = build_est(&a).unwrap();
        let f = f_of(&fam);
        let v = fam.vars().clone();
        let lam = ParamPoly::param(Param::Lambda);
        let mu = ParamPoly::param(Param::Mu);
        let h = ParamPoly::from_q(q(n as i64, 2) - qi(1));
        let cl = &h - &lam;
        let cm = &h - &mu;
        let beta = betas(&a);
        // ∂y_0² carries 4λ(−λ+n/2−1)·β_0
        let dy0 = Mono::var(n).mul(Mono::var(n));
        let want = (&(&pp(4) * &lam) * &cl).scale(&qi(beta[0]));
        assert_eq!(f.coeff(dy0), MPoly::constant(&v, want));
        let dx0 = Mono::var(0).mul(Mono::var(0));
        let want = (&(&pp(4) * &mu) * &cm).scale(&qi(beta[0]));
        assert_eq!(f.coeff(dx0), MPoly::constant(&v, want));
        let mixed = Mono::var(0).mul(Mono::var(n));
        let want = (&(&pp(8) * &cl) * &cm).scale(&qi(beta[0]));
        assert_eq!(f.coeff(mixed), MPoly::constant(&v, want));
        // first-order factor of (x_0 − y_0) ∂x_0 ∂y_j²
        let m = Mono::var(0).mul(dy0);
        let c = f.coeff(m);
        let x0 = MPoly::var(&v, 0);
        let y0 = MPoly::var(&v, n);
        assert_eq!(c, (&x0 - &y0).scale(&(&pp(4) * &cl).scale(&qi(beta[0]))));
        assert!(f.apply(&MPoly::one(&v)).unwrap().is_zero());
        assert!(f.tau_powers().iter().all(|&p| p == 0));
    }
}

#[test]
fn rpq_f_at_critical_weights_is_pure_fourth_order() {
    for &(p, qq) in &RPQ {
        let a = alg(Kind::Rpq(p, qq));
        let n = p + qq;
        let fam = build_est(&a).unwrap();
        let f = f_of(&fam);
        let c = q(n as i64, 2) - qi(1);
        let g = f.map_coeffs(|m| m.eval_param(Param::Lambda, &c).eval_param(Param::Mu, &c));
        for (m, _) in g.terms() {
            assert_eq!(m.degree(), 4, "R^{{{},{}}} term of order {}", p, qq, m.degree());
        }
    }
}

#[test]
fn f_annihilates_constants_generically() {
    for k in [Kind::SymR(2), Kind::MatR(2), Kind::HermC(2)] {
        let a = alg(k);
        let fam = build_est(&a).unwrap();
        let f = build_f(&fam.scaled, fam.n, fam.r);
        assert!(f.apply(&MPoly::one(fam.vars())).unwrap().is_zero(), "{}", k);
        assert_eq!(f.param_degree() > 0, true);
    }
}
