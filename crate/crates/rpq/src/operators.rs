use std::sync::{Arc, OnceLock};

use conformal::{covariance_check, CovarianceCertificate, QuadricModel, Slot, Target};
use detpower::DetCalculus;
use exactalg::{q, qi, MPoly, Mono, Param, ParamPoly, Vars, Q};
use jordan::{Algebra, Kind};
use weyl::{build_est, build_f, fourier_conjugate, restrict_diagonal, DiffOp, FourierConvention};

use crate::error::RpqError;

fn pp(c: i64) -> ParamPoly {
    ParamPoly::from_int(c)
}

fn par(p: Param) -> ParamPoly {
    ParamPoly::param(p)
}

/// Explicit operators on `ℝ^{p,q} × ℝ^{p,q}` with coordinates
/// `(x, y)` (written `(ξ, ζ)` on the Fourier side).
pub struct RpqOperators {
    p: usize,
    q: usize,
    alg: Arc<Algebra>,
    vars: Arc<Vars>,
    beta: Vec<Q>,
    dst: OnceLock<DiffOp>,
    est: OnceLock<DiffOp>,
    f: OnceLock<DiffOp>,
    b1: OnceLock<DiffOp>,
}

/// Outcome of comparing the explicit operators with the generic ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Consistency {
    pub dst_equal: bool,
    pub est_equal: bool,
    pub f_equal: bool,
    pub f_is_substituted_e: bool,
    pub fourier_round_trip: bool,
    /// `res ∘ F_{λ,μ} = c · B^{(1)}_{λ,μ}`.
    pub b1_ratio: Option<Proportionality>,
}

impl Consistency {
    pub fn all_equal(&self) -> bool {
        self.dst_equal
            && self.est_equal
            && self.f_equal
            && self.f_is_substituted_e
            && self.fourier_round_trip
            && self.b1_ratio.is_some()
    }
}

/// `a = (num/den) · b`, with `num`, `den` coefficient polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Proportionality {
    pub num: MPoly,
    pub den: MPoly,
}

impl Proportionality {
    /// The ratio as a rational number, when `num = c · den` for some `c ∈ ℚ`.
    pub fn constant(&self) -> Option<Q> {
        let (xm, pd) = self.den.terms().next()?;
        let (pm, cd) = pd.terms().next()?;
        let pn = self.num.coeff(*xm);
        let cn = pn.terms().find(|(m, _)| *m == pm).map(|(_, c)| c.clone())?;
        let c = cn / cd;
        (self.den.scale_q(&c) == self.num).then_some(c)
    }
}

/// Find `c` with `a = c · b`, comparing `a_m · b_{m₀} = b_m · a_{m₀}` for
/// every derivative multi-index `m`.
pub fn proportionality(a: &DiffOp, b: &DiffOp) -> Option<Proportionality> {
    let (m0, b0) = b.terms().next()?;
    let a0 = a.coeff(*m0);
    let keys: std::collections::BTreeSet<Mono> = a.terms().chain(b.terms()).map(|(m, _)| *m).collect();
    for m in keys {
        if &a.coeff(m) * b0 != &b.coeff(m) * &a0 {
            return None;
        }
    }
    Some(Proportionality {
        num: a0,
        den: b0.clone(),
    })
}

/// Exchange the two copies of `V` (coordinates and derivatives) and the
/// parameters `s ↔ t`, `λ ↔ μ`.
pub fn swap_slots(op: &DiffOp) -> DiffOp {
    let v = op.vars();
    let n = v.len() / 2;
    let perm = |m: Mono| -> Mono {
        let e: Vec<u32> = (0..2 * n).map(|i| m.exp((i + n) % (2 * n))).collect();
        Mono::from_exps(&e)
    };
    let subs: Vec<MPoly> = (0..2 * n).map(|i| MPoly::var(v, (i + n) % (2 * n))).collect();
    let mut out = DiffOp::zero(v);
    for (m, c) in op.terms() {
        out.add_term(perm(*m), c.compose(&subs));
    }
    out.map_coeffs(|c| {
        c.map_coeffs(|k| {
            k.swap_params(Param::S, Param::T)
                .swap_params(Param::Lambda, Param::Mu)
        })
    })
}

impl RpqOperators {
    pub fn new(p: usize, q: usize) -> Result<RpqOperators, RpqError> {
        if p < 2 || q < 1 {
            return Err(RpqError::Signature { p, q });
        }
        let alg = Algebra::new(Kind::Rpq(p, q))?;
        let calc = DetCalculus::pair(&alg)?;
        let vars = calc.vars().clone();
        let beta = QuadricModel::new(&alg)?.beta().to_vec();
        Ok(RpqOperators {
            p,
            q,
            alg,
            vars,
            beta,
            dst: OnceLock::new(),
            est: OnceLock::new(),
            f: OnceLock::new(),
            b1: OnceLock::new(),
        })
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// Coordinates `x_1..x_n, y_1..y_n`.
    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    fn x(&self, j: usize) -> MPoly {
        MPoly::var(&self.vars, j)
    }

    fn y(&self, j: usize) -> MPoly {
        MPoly::var(&self.vars, self.n() + j)
    }

    fn quad(&self, a: &[MPoly], b: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (j, c) in self.beta.iter().enumerate() {
            out += &(&a[j] * &b[j]).scale_q(c);
        }
        out
    }

    fn xs(&self) -> Vec<MPoly> {
        (0..self.n()).map(|j| self.x(j)).collect()
    }

    fn ys(&self) -> Vec<MPoly> {
        (0..self.n()).map(|j| self.y(j)).collect()
    }

    /// `P(∂x)` (slot 0) or `P(∂y)` (slot 1).
    fn wave(&self, slot: usize) -> DiffOp {
        let off = slot * self.n();
        let mut d = DiffOp::zero(&self.vars);
        for (j, c) in self.beta.iter().enumerate() {
            let m = Mono::var(off + j);
            d.add_term(
                m.mul(m),
                MPoly::constant(&self.vars, ParamPoly::from_q(c.clone())),
            );
        }
        d
    }

    /// `P(∂x, ∂y)`.
    fn mixed_wave(&self) -> DiffOp {
        let n = self.n();
        let mut d = DiffOp::zero(&self.vars);
        for (j, c) in self.beta.iter().enumerate() {
            d.add_term(
                Mono::var(j).mul(Mono::var(n + j)),
                MPoly::constant(&self.vars, ParamPoly::from_q(c.clone())),
            );
        }
        d
    }

    fn d(&self, i: usize) -> DiffOp {
        DiffOp::deriv(&self.vars, i)
    }

    /// `D_{s,t}` in the coordinates `(ξ, ζ) = (x, y)`.
    pub fn explicit_dst(&self) -> &DiffOp {
        self.dst.get_or_init(|| {
            let n = self.n();
            let (s, t) = (par(Param::S), par(Param::T));
            let px = self.quad(&self.xs(), &self.xs());
            let py = self.quad(&self.ys(), &self.ys());
            let pxy = self.quad(&self.xs(), &self.ys());
            let diff_wave = &(&self.wave(0) + &self.wave(1)) - &self.mixed_wave().scale(&pp(2));
            let mut out = diff_wave.premul(&(&px * &py));
            let mut ex = DiffOp::zero(&self.vars);
            let mut ey = DiffOp::zero(&self.vars);
            for j in 0..n {
                let dd = &self.d(j) - &self.d(n + j);
                ex = &ex + &dd.premul(&self.x(j));
                ey = &ey - &dd.premul(&self.y(j));
            }
            out = &out + &ex.premul(&py).scale(&(&pp(4) * &s));
            out = &out + &ey.premul(&px).scale(&(&pp(4) * &t));
            let nn = pp(n as i64);
            let ct = &(&pp(2) * &t) * &(&(&(&pp(2) * &t) - &pp(2)) + &nn);
            let cs = &(&pp(2) * &s) * &(&(&(&pp(2) * &s) - &pp(2)) + &nn);
            let cst = &(&pp(-8) * &s) * &t;
            let mult = &(&px.scale(&ct) + &pxy.scale(&cst)) + &py.scale(&cs);
            &out + &DiffOp::mult(&mult)
        })
    }

    /// `E_{s,t}` for the kernel `e^{√−1(ξ,x)}`.
    pub fn explicit_est(&self) -> &DiffOp {
        self.est.get_or_init(|| {
            let n = self.n();
            let (s, t) = (par(Param::S), par(Param::T));
            let s1 = &s - &pp(1);
            let t1 = &t - &pp(1);
            let xy: Vec<MPoly> = (0..n).map(|j| &self.x(j) - &self.y(j)).collect();
            let (wx, wy) = (self.wave(0), self.wave(1));
            let mut out = wx.compose(&wy).expect("same vars").premul(&self.quad(&xy, &xy));
            out = -&out;
            for j in 0..n {
                let a = self.d(j).compose(&wy).expect("same vars").premul(&xy[j]);
                let b = self.d(n + j).compose(&wx).expect("same vars").premul(&(-&xy[j]));
                out = &out + &a.scale(&(&pp(4) * &s1));
                out = &out + &b.scale(&(&pp(4) * &t1));
            }
            let nn = pp(n as i64);
            let cy = &(&pp(-2) * &s1) * &(&(&pp(2) * &s) - &nn);
            let cx = &(&pp(-2) * &t1) * &(&(&pp(2) * &t) - &nn);
            out = &out + &wy.scale(&cy);
            out = &out + &self.mixed_wave().scale(&(&(&pp(8) * &s1) * &t1));
            &out + &wx.scale(&cx)
        })
    }

    /// `F_{λ,μ}`, with the second first-order sum differentiating in `y`.
    pub fn explicit_f(&self) -> &DiffOp {
        self.f.get_or_init(|| {
            let n = self.n();
            let h = ParamPoly::from_q(q(n as i64, 2) - qi(1));
            let (l, m) = (par(Param::Lambda), par(Param::Mu));
            let cl = &h - &l;
            let cm = &h - &m;
            let xy: Vec<MPoly> = (0..n).map(|j| &self.x(j) - &self.y(j)).collect();
            let (wx, wy) = (self.wave(0), self.wave(1));
            let mut out = -&wx.compose(&wy).expect("same vars").premul(&self.quad(&xy, &xy));
            for j in 0..n {
                let a = self.d(j).compose(&wy).expect("same vars").premul(&xy[j]);
                let b = self.d(n + j).compose(&wx).expect("same vars").premul(&(-&xy[j]));
                out = &out + &a.scale(&(&pp(4) * &cl));
                out = &out + &b.scale(&(&pp(4) * &cm));
            }
            out = &out + &wy.scale(&(&(&pp(4) * &l) * &cl));
            out = &out + &wx.scale(&(&(&pp(4) * &m) * &cm));
            &out + &self.mixed_wave().scale(&(&(&pp(8) * &cl) * &cm))
        })
    }

    /// `B^{(1)}_{λ,μ}` as a restricted operator (coefficients in `x`).
    pub fn explicit_b1(&self) -> &DiffOp {
        self.b1.get_or_init(|| {
            let n = self.n();
            let h = ParamPoly::from_q(q(n as i64, 2) - qi(1));
            let (l, m) = (par(Param::Lambda), par(Param::Mu));
            let cl = &h - &l;
            let cm = &h - &m;
            let inner = &(&self.wave(0).scale(&(&m * &cm)) + &self.wave(1).scale(&(&l * &cl)))
                + &self.mixed_wave().scale(&(&(&pp(2) * &cl) * &cm));
            restrict_diagonal(&inner.scale(&pp(4)))
        })
    }

    /// `D_{s,t}` from the generic determinant calculus.
    pub fn generic_dst(&self) -> Result<DiffOp, RpqError> {
        Ok(weyl::build_dst(&self.alg)?)
    }

    /// `FC⁻¹(D_{s,t})` at `τ = √−1`.
    pub fn generic_est(&self) -> Result<DiffOp, RpqError> {
        Ok(build_est(&self.alg)?.in_convention(FourierConvention::UnitI)?)
    }

    pub fn generic_f(&self) -> Result<DiffOp, RpqError> {
        Ok(build_f(&self.generic_est()?, self.n(), 2))
    }

    /// `F_{λ,μ}` with `λ ↦ λ + k`, `μ ↦ μ + k`.
    pub fn shifted_f(&self, k: i64) -> DiffOp {
        self.explicit_f()
            .subst_param(Param::Lambda, &(&par(Param::Lambda) + &pp(k)))
            .subst_param(Param::Mu, &(&par(Param::Mu) + &pp(k)))
    }

    /// `F^{(N)} = F_{λ+N−1,μ+N−1} ∘ ⋯ ∘ F_{λ,μ}`.
    pub fn build_fn(&self, order: usize) -> Result<DiffOp, RpqError> {
        if order == 0 {
            return Err(RpqError::ZeroOrder);
        }
        let mut out = self.explicit_f().clone();
        for k in 1..order {
            out = self.shifted_f(k as i64).compose(&out)?;
        }
        Ok(out)
    }

    /// `B^{(N)}_{λ,μ} = res ∘ F^{(N)}`.
    pub fn build_bn(&self, order: usize) -> Result<DiffOp, RpqError> {
        Ok(restrict_diagonal(&self.build_fn(order)?))
    }

    /// Compare every explicit operator with its generic counterpart.
    pub fn consistency(&self) -> Result<Consistency, RpqError> {
        let n = self.n();
        let dst = self.generic_dst()?;
        let est = self.generic_est()?;
        let f = self.generic_f()?;
        let half = ParamPoly::from_q(q(n as i64, 2));
        let substituted = self
            .explicit_est()
            .subst_param(Param::S, &(&half - &par(Param::Lambda)))
            .subst_param(Param::T, &(&half - &par(Param::Mu)));
        let round = fourier_conjugate(self.explicit_est())?.eval_tau_unit_i()?;
        Ok(Consistency {
            dst_equal: &dst == self.explicit_dst(),
            est_equal: &est == self.explicit_est(),
            f_equal: &f == self.explicit_f(),
            f_is_substituted_e: &substituted == self.explicit_f(),
            fourier_round_trip: &round == self.explicit_dst(),
            b1_ratio: proportionality(&restrict_diagonal(self.explicit_f()), self.explicit_b1()),
        })
    }

    /// Exact covariance certificate of `B^{(N)}` with target weight
    /// `λ + μ + 2N` over the full Lie algebra basis.
    pub fn certify_bn(&self, order: usize) -> Result<CovarianceCertificate, RpqError> {
        let model = QuadricModel::new(&self.alg)?;
        let b = self.build_bn(order)?;
        let n = self.n();
        let src = [Slot::new(0, par(Param::Lambda)), Slot::new(n, par(Param::Mu))];
        let nu = &(&par(Param::Lambda) + &par(Param::Mu)) + &pp(2 * order as i64);
        Ok(covariance_check(
            &model,
            &b,
            &src,
            &Target::Diagonal(nu),
            &model.lie_basis(),
        )?)
    }

    /// Exact covariance certificate of `F_{λ,μ}` with target `(λ+1, μ+1)`.
    pub fn certify_f(&self) -> Result<CovarianceCertificate, RpqError> {
        let model = QuadricModel::new(&self.alg)?;
        let n = self.n();
        let slots = |k: i64| {
            vec![
                Slot::new(0, &par(Param::Lambda) + &pp(k)),
                Slot::new(n, &par(Param::Mu) + &pp(k)),
            ]
        };
        Ok(covariance_check(
            &model,
            self.explicit_f(),
            &slots(0),
            &Target::Slots(slots(1)),
            &model.lie_basis(),
        )?)
    }
}
