use std::fmt;

use exactalg::{q, qi, Q};
use num_complex::Complex64;
use serde::Serialize;

use crate::affine::Affine;
use crate::error::ZetaError;
use crate::gamma::{gamma_euclidean, GammaFactor};
use crate::trig::{eval_matrix, shift_matrix, TrigExpr, TrigMatrix};
use crate::zmaps::ZetaBasis;

fn max_dev(
    a: &[[Complex64; 2]; 2],
    b: &[[Complex64; 2]; 2],
    f: impl Fn(usize, usize) -> (usize, usize, Complex64),
) -> f64 {
    let mut worst = 0.0f64;
    for e in 0..2 {
        for h in 0..2 {
            let (i, j, c) = f(e, h);
            worst = worst.max((a[e][h] - c * b[i][j]).norm());
        }
    }
    worst
}

/// `𝐀(s)` of the `ℝ^{p,q}` functional equation
/// `𝓕(P^{s,+}, P^{s,−})ᵀ = γ(s) 𝐀(s) (P^{−s−n/2,+}, P^{−s−n/2,−})ᵀ`.
pub fn a_matrix_pq(p: usize, q_: usize) -> TrigMatrix {
    let n = (p + q_) as i64;
    let th = Affine::constant(q(p as i64 - q_ as i64, 4));
    let ct = TrigExpr::cos(th.clone());
    let st = TrigExpr::sin(th);
    let moving = Affine::in_s(qi(1), q(n, 4));
    let fixed = Affine::constant(q(n, 4));
    let (sm, cm) = (TrigExpr::sin(moving.clone()), TrigExpr::cos(moving));
    let (sf, cf) = (TrigExpr::sin(fixed.clone()), TrigExpr::cos(fixed));
    [
        [ct.mul(&sf.sub(&sm)), st.mul(&cm.sub(&cf))],
        [st.mul(&cm.add(&cf)), ct.mul(&sm.add(&sf)).neg()],
    ]
}

/// `𝐀(s)` at a numeric `s`.
pub fn a_matrix_pq_at(p: usize, q_: usize, s: f64) -> [[f64; 2]; 2] {
    let m = eval_matrix(&a_matrix_pq(p, q_), s);
    [[m[0][0].re, m[0][1].re], [m[1][0].re, m[1][1].re]]
}

/// One-sided transforms `𝓕(P_±^s) = γ(s) Σ G_{±,·}(s) P_·^{−s−n/2}`, rows and
/// columns ordered `(P_+, P_−)`.
pub fn one_sided_matrix_pq(p: usize, q_: usize) -> TrigMatrix {
    let half = |k: usize| Affine::constant(q(k as i64, 2));
    [
        [
            TrigExpr::sin(Affine::in_s(qi(1), q(q_ as i64, 2))).neg(),
            TrigExpr::sin(half(p)),
        ],
        [
            TrigExpr::sin(half(q_)),
            TrigExpr::sin(Affine::in_s(qi(1), q(p as i64, 2))).neg(),
        ],
    ]
}

/// `𝐀(s)` rebuilt from the one-sided pair through
/// `P^{s,±} = P_+^s ± P_−^s` and `P_± = (P^{·,+} ± P^{·,−})/2`.
pub fn a_matrix_from_one_sided(g: &TrigMatrix) -> TrigMatrix {
    let half = q(1, 2);
    let plus = [g[0][0].add(&g[1][0]), g[0][1].add(&g[1][1])];
    let minus = [g[0][0].sub(&g[1][0]), g[0][1].sub(&g[1][1])];
    let row = |r: &[TrigExpr; 2]| [r[0].add(&r[1]).scale(&half), r[0].sub(&r[1]).scale(&half)];
    [row(&plus), row(&minus)]
}

/// `max |a_{ε,η}(s+1) + a_{−ε,−η}(s)|`.
pub fn flip_residual_pq(p: usize, q_: usize, s: f64) -> f64 {
    let a = a_matrix_pq(p, q_);
    let shifted = eval_matrix(&shift_matrix(&a, &qi(1)), s);
    let base = eval_matrix(&a, s);
    max_dev(&shifted, &base, |e, h| (1 - e, 1 - h, Complex64::new(-1.0, 0.0)))
}

/// `max |a_{ε,η}(s+2) − a_{ε,η}(s)|`.
pub fn periodicity_residual_pq(p: usize, q_: usize, s: f64) -> f64 {
    let a = a_matrix_pq(p, q_);
    let shifted = eval_matrix(&shift_matrix(&a, &qi(2)), s);
    let base = eval_matrix(&a, s);
    max_dev(&shifted, &base, |e, h| (e, h, Complex64::new(1.0, 0.0)))
}

/// The eight cases of the euclidean functional equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EuclideanCase {
    A,
    APrime,
    B1,
    B2,
    C1,
    C2,
    C3,
    C4,
}

impl EuclideanCase {
    pub const ALL: [EuclideanCase; 8] = [
        EuclideanCase::A,
        EuclideanCase::APrime,
        EuclideanCase::B1,
        EuclideanCase::B2,
        EuclideanCase::C1,
        EuclideanCase::C2,
        EuclideanCase::C3,
        EuclideanCase::C4,
    ];

    /// Whether the case applies to rank `r` and Peirce constant `d`.
    pub fn admits(self, r: usize, d: usize) -> bool {
        use EuclideanCase::*;
        match self {
            A => d % 4 == 0 || (d % 4 == 2 && r % 2 == 1),
            APrime => d % 4 == 2 && r % 2 == 0,
            B1 => r == 2 && d % 4 == 1,
            B2 => r == 2 && d % 4 == 3,
            C1 => d == 1 && r % 4 == 3,
            C2 => d == 1 && r % 4 == 1,
            C3 => d == 1 && r % 4 == 0,
            C4 => d == 1 && r % 4 == 2,
        }
    }

    /// All cases that apply; `(r, d) = (2, 1)` lies in both (b‑1) and (c‑4).
    pub fn classify(r: usize, d: usize) -> Vec<EuclideanCase> {
        EuclideanCase::ALL
            .into_iter()
            .filter(|c| c.admits(r, d))
            .collect()
    }
}

impl fmt::Display for EuclideanCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EuclideanCase::A => "a",
            EuclideanCase::APrime => "a'",
            EuclideanCase::B1 => "b-1",
            EuclideanCase::B2 => "b-2",
            EuclideanCase::C1 => "c-1",
            EuclideanCase::C2 => "c-2",
            EuclideanCase::C3 => "c-3",
            EuclideanCase::C4 => "c-4",
        };
        write!(f, "{}", s)
    }
}

/// Functional equation
/// `𝓕(Z_{s,+}, Z_{s,−})ᵀ = K · γ(s+n/r) · T(s) · 𝐌(s) · (target basis at −s−n/r)ᵀ`
/// for a euclidean algebra with constants `(r, d)`; `K` is `constant`,
/// `T(s)` the trigonometric prefactor and `𝐌` the matrix `𝐀` or `𝐁`.
#[derive(Clone, Debug)]
pub struct EuclideanFE {
    pub case: EuclideanCase,
    pub r: usize,
    pub d: usize,
    pub n: usize,
    pub constant: GammaFactor,
    pub trig_prefactor: TrigExpr,
    pub matrix: TrigMatrix,
    pub target: ZetaBasis,
}

impl EuclideanFE {
    /// `n/r`.
    pub fn n_over_r(&self) -> Q {
        q(self.n as i64, self.r as i64)
    }

    /// `γ(s + n/r)`.
    pub fn gamma(&self) -> GammaFactor {
        gamma_euclidean(self.n, self.r, self.d, &Affine::in_s(qi(1), self.n_over_r()))
    }

    /// Full scalar prefactor apart from the trigonometric part.
    pub fn prefactor(&self) -> GammaFactor {
        self.constant.mul(&self.gamma())
    }

    pub fn eval_matrix(&self, s: f64) -> [[Complex64; 2]; 2] {
        eval_matrix(&self.matrix, s)
    }

    /// `K · T(s)` without `γ`.
    pub fn eval_scalar_without_gamma(&self, s: f64) -> Complex64 {
        self.constant.eval(s, 0.0) * self.trig_prefactor.eval(s)
    }

    /// Residual of the case's shift identity at `s`: for (b‑1)/(b‑2)
    /// `a_{ε,η}(s) = −a_{−ε,−η}(s+1)`, for (c‑1)/(c‑2)
    /// `a^e_ε(s) = −√−1 a^e_{−ε}(s+1)` and `a^o_ε(s) = √−1 a^o_{−ε}(s+1)`.
    pub fn flip_residual(&self, s: f64) -> Result<f64, ZetaError> {
        let base = self.eval_matrix(s);
        let next = eval_matrix(&shift_matrix(&self.matrix, &qi(1)), s);
        let i = Complex64::new(0.0, 1.0);
        match self.case {
            EuclideanCase::B1 | EuclideanCase::B2 => Ok(max_dev(&base, &next, |e, h| {
                (1 - e, 1 - h, Complex64::new(-1.0, 0.0))
            })),
            EuclideanCase::C1 | EuclideanCase::C2 => Ok(max_dev(&base, &next, |e, h| {
                (1 - e, h, if h == 0 { -i } else { i })
            })),
            c => Err(ZetaError::Unsupported(format!(
                "case {} has no shift identity",
                c
            ))),
        }
    }
}

/// Matrix, prefactor and target basis of the euclidean functional equation
/// in the requested case.
pub fn euclidean_matrices(case: EuclideanCase, r: usize, d: usize) -> Result<EuclideanFE, ZetaError> {
    if r == 0 || d == 0 {
        return Err(ZetaError::Config(format!(
            "rank {} and d = {} must be positive",
            r, d
        )));
    }
    if !case.admits(r, d) {
        return Err(ZetaError::Config(format!(
            "case ({}) does not apply to r = {}, d = {}",
            case, r, d
        )));
    }
    let n = r + r * (r - 1) * d / 2;
    let nr = q(n as i64, r as i64);
    let half_arg = Affine::in_s(q(1, 2), &nr / qi(2));
    let full_arg = Affine::in_s(qi(1), nr.clone());
    let (cx, sx) = (TrigExpr::cos(half_arg.clone()), TrigExpr::sin(half_arg));
    let one = TrigExpr::one();
    let zero = TrigExpr::zero();
    let two_r = GammaFactor::constant(qi(2).pow(r as i32));
    let four_sqrt2 = GammaFactor::two_power(Affine::constant(q(5, 2)));
    let h = r / 2;
    let mut fe = EuclideanFE {
        case,
        r,
        d,
        n,
        constant: GammaFactor::one(),
        trig_prefactor: one.clone(),
        matrix: [[zero.clone(), zero.clone()], [zero.clone(), zero.clone()]],
        target: ZetaBasis::PlusMinus,
    };
    let ir = |e: &TrigExpr| e.times_i((r % 4) as u8);
    match case {
        EuclideanCase::A => {
            fe.constant = two_r;
            fe.matrix = [[cx.pow(r), zero.clone()], [zero, ir(&sx.pow(r))]];
        }
        EuclideanCase::APrime => {
            fe.constant = two_r;
            fe.matrix = [[ir(&sx.pow(r)), zero.clone()], [zero, cx.pow(r)]];
        }
        EuclideanCase::B1 | EuclideanCase::B2 => {
            let a = Affine::in_s(q(1, 2), q(n as i64 + 1, 4));
            let b = Affine::in_s(q(1, 2), q(n as i64, 4));
            let (sa, ca) = (TrigExpr::sin(a.clone()), TrigExpr::cos(a));
            let (sb, cb) = (TrigExpr::sin(b.clone()), TrigExpr::cos(b));
            fe.constant = four_sqrt2;
            let row_s = [sa.mul(&cb), sa.mul(&sb).neg()];
            let row_c = [ca.mul(&cb), ca.mul(&sb)];
            fe.matrix = if case == EuclideanCase::B1 {
                [row_s, row_c]
            } else {
                [row_c, row_s]
            };
        }
        EuclideanCase::C1 | EuclideanCase::C2 => {
            let sign = if case == EuclideanCase::C1 { -1 } else { 1 };
            fe.constant = GammaFactor::constant(qi(sign) * qi(-2).pow(h as i32))
                .mul(&GammaFactor::i_power(Affine::constant(qi(h as i64))));
            fe.trig_prefactor = TrigExpr::sin(full_arg).pow(h);
            let row_sin = [sx.times_i(1), sx.times_i(1).neg()];
            let row_cos = [cx.clone(), cx];
            fe.matrix = if case == EuclideanCase::C1 {
                [row_sin, row_cos]
            } else {
                [row_cos, row_sin]
            };
            fe.target = ZetaBasis::EvenOdd;
        }
        EuclideanCase::C3 | EuclideanCase::C4 => {
            fe.constant = GammaFactor::two_power(Affine::constant(q(r as i64 - 1, 2)))
                .mul(&GammaFactor::i_power(Affine::constant(q(1, 2))));
            fe.trig_prefactor = TrigExpr::cos(full_arg).pow(r / 2);
            let mi = one.times_i(3);
            fe.matrix = if case == EuclideanCase::C3 {
                [[mi.clone(), one.clone()], [one, mi]]
            } else {
                [[one.clone(), mi.clone()], [mi, one]]
            };
        }
    }
    Ok(fe)
}
