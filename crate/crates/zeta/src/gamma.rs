use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use exactalg::{q, q_to_f64, qi, Q};
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::affine::Affine;

/// Closed-form factor
/// `c · (√−1)^{A₀} · 2^{A₁} · π^{A₂} · ∏ ℓ_i / ∏ ℓ'_j · ∏ Γ(g_k) / ∏ Γ(g'_l)`
/// with a rational `c` and affine forms in `(s, t)` everywhere else.
///
/// Values stay exact: products, quotients and shifts only move affine
/// forms around. [`GammaFactor::canonical`] telescopes `Γ(x+m)/Γ(x)` into
/// linear factors and normalises the rest, so two descriptors of the same
/// function usually compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaFactor {
    #[serde(serialize_with = "ser_q")]
    pub coeff: Q,
    pub i_pow: Affine,
    pub two_pow: Affine,
    pub pi_pow: Affine,
    pub lin_num: Vec<Affine>,
    pub lin_den: Vec<Affine>,
    pub gamma_num: Vec<Affine>,
    pub gamma_den: Vec<Affine>,
}

fn ser_q<S: serde::Serializer>(x: &Q, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(x)
}

fn floor_q(x: &Q) -> i64 {
    use num_traits::ToPrimitive;
    x.floor().to_integer().to_i64().expect("exponent fits in i64")
}

fn pow2(k: i64) -> Q {
    qi(2).pow(k as i32)
}

impl GammaFactor {
    pub fn one() -> GammaFactor {
        GammaFactor::constant(Q::one())
    }

    pub fn constant(c: Q) -> GammaFactor {
        GammaFactor {
            coeff: c,
            i_pow: Affine::zero(),
            two_pow: Affine::zero(),
            pi_pow: Affine::zero(),
            lin_num: Vec::new(),
            lin_den: Vec::new(),
            gamma_num: Vec::new(),
            gamma_den: Vec::new(),
        }
    }

    /// `(√−1)^a`.
    pub fn i_power(a: Affine) -> GammaFactor {
        GammaFactor {
            i_pow: a,
            ..GammaFactor::one()
        }
    }

    /// `2^a`.
    pub fn two_power(a: Affine) -> GammaFactor {
        GammaFactor {
            two_pow: a,
            ..GammaFactor::one()
        }
    }

    /// `π^a`.
    pub fn pi_power(a: Affine) -> GammaFactor {
        GammaFactor {
            pi_pow: a,
            ..GammaFactor::one()
        }
    }

    /// `Γ(a)`.
    pub fn gamma(a: Affine) -> GammaFactor {
        GammaFactor {
            gamma_num: vec![a],
            ..GammaFactor::one()
        }
    }

    /// The linear factor `a`.
    pub fn linear(a: Affine) -> GammaFactor {
        GammaFactor {
            lin_num: vec![a],
            ..GammaFactor::one()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.lin_num.iter().any(|l| l.is_zero())
    }

    pub fn mul(&self, o: &GammaFactor) -> GammaFactor {
        let cat = |a: &[Affine], b: &[Affine]| a.iter().chain(b).cloned().collect::<Vec<_>>();
        GammaFactor {
            coeff: &self.coeff * &o.coeff,
            i_pow: self.i_pow.add(&o.i_pow),
            two_pow: self.two_pow.add(&o.two_pow),
            pi_pow: self.pi_pow.add(&o.pi_pow),
            lin_num: cat(&self.lin_num, &o.lin_num),
            lin_den: cat(&self.lin_den, &o.lin_den),
            gamma_num: cat(&self.gamma_num, &o.gamma_num),
            gamma_den: cat(&self.gamma_den, &o.gamma_den),
        }
    }

    /// Reciprocal. Panics on a zero coefficient.
    pub fn inv(&self) -> GammaFactor {
        assert!(!self.coeff.is_zero(), "reciprocal of zero");
        GammaFactor {
            coeff: Q::one() / &self.coeff,
            i_pow: self.i_pow.neg(),
            two_pow: self.two_pow.neg(),
            pi_pow: self.pi_pow.neg(),
            lin_num: self.lin_den.clone(),
            lin_den: self.lin_num.clone(),
            gamma_num: self.gamma_den.clone(),
            gamma_den: self.gamma_num.clone(),
        }
    }

    pub fn div(&self, o: &GammaFactor) -> GammaFactor {
        self.mul(&o.inv())
    }

    pub fn scale(&self, c: &Q) -> GammaFactor {
        GammaFactor {
            coeff: &self.coeff * c,
            ..self.clone()
        }
    }

    fn map_forms(&self, f: impl Fn(&Affine) -> Affine) -> GammaFactor {
        let m = |v: &[Affine]| v.iter().map(&f).collect::<Vec<_>>();
        GammaFactor {
            coeff: self.coeff.clone(),
            i_pow: f(&self.i_pow),
            two_pow: f(&self.two_pow),
            pi_pow: f(&self.pi_pow),
            lin_num: m(&self.lin_num),
            lin_den: m(&self.lin_den),
            gamma_num: m(&self.gamma_num),
            gamma_den: m(&self.gamma_den),
        }
    }

    /// Substitute `s ↦ s + ds`, `t ↦ t + dt`.
    pub fn shift(&self, ds: &Q, dt: &Q) -> GammaFactor {
        self.map_forms(|a| a.shift(ds, dt))
    }

    /// Substitute `s ↦ k·s + c`.
    pub fn subst_s(&self, k: &Q, c: &Q) -> GammaFactor {
        self.map_forms(|a| a.subst_s(k, c))
    }

    /// Exchange `s` and `t`.
    pub fn swap_st(&self) -> GammaFactor {
        self.map_forms(Affine::swap_st)
    }

    /// Normal form: telescoped Γ quotients, monic linear factors, cancelled
    /// common factors, reduced constant powers of `√−1` and `2`, sorted lists.
    pub fn canonical(&self) -> GammaFactor {
        if self.is_zero() {
            return GammaFactor::constant(Q::zero());
        }
        let mut g = self.clone();

        // Γ(x + m) / Γ(x) = x (x+1) ⋯ (x+m−1).
        'outer: loop {
            for i in 0..g.gamma_num.len() {
                for j in 0..g.gamma_den.len() {
                    if let Some(m) = g.gamma_num[i].integer_gap(&g.gamma_den[j]) {
                        let a = g.gamma_num.remove(i);
                        let b = g.gamma_den.remove(j);
                        if m >= 0 {
                            g.lin_num.extend((0..m).map(|k| b.add_const(&qi(k))));
                        } else {
                            g.lin_den.extend((0..-m).map(|k| a.add_const(&qi(k))));
                        }
                        continue 'outer;
                    }
                }
            }
            break;
        }

        let mut coeff = g.coeff.clone();
        let mut normalise = |v: Vec<Affine>, num: bool| -> Vec<Affine> {
            let mut out = Vec::new();
            for l in v {
                match l.leading().cloned() {
                    Some(a) => {
                        if num {
                            coeff *= &a;
                        } else {
                            coeff /= &a;
                        }
                        out.push(l.scale(&(Q::one() / a)));
                    }
                    None if num => coeff *= &l.c,
                    None if !l.c.is_zero() => coeff /= &l.c,
                    None => out.push(l),
                }
            }
            out
        };
        let mut lin_num = normalise(std::mem::take(&mut g.lin_num), true);
        let mut lin_den = normalise(std::mem::take(&mut g.lin_den), false);
        if coeff.is_zero() {
            return GammaFactor::constant(Q::zero());
        }
        cancel(&mut lin_num, &mut lin_den);
        let mut gamma_num = g.gamma_num;
        let mut gamma_den = g.gamma_den;
        cancel(&mut gamma_num, &mut gamma_den);

        // (√−1)^{2k+ρ} = (−1)^k (√−1)^ρ with 0 ≤ ρ < 2.
        let mut i_pow = g.i_pow;
        let k = floor_q(&(&i_pow.c / qi(2)));
        i_pow.c -= qi(2 * k);
        if k.rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        let mut two_pow = g.two_pow;
        let k = floor_q(&two_pow.c);
        two_pow.c -= qi(k);
        coeff *= pow2(k);

        for v in [&mut lin_num, &mut lin_den, &mut gamma_num, &mut gamma_den] {
            v.sort();
        }
        GammaFactor {
            coeff,
            i_pow,
            two_pow,
            pi_pow: g.pi_pow,
            lin_num,
            lin_den,
            gamma_num,
            gamma_den,
        }
    }

    /// Structural equality after [`canonical`](Self::canonical).
    pub fn same_function(&self, o: &GammaFactor) -> bool {
        self.canonical() == o.canonical()
    }

    /// Only rational functions and constant powers are left.
    pub fn is_rational_in_st(&self) -> bool {
        let c = self.canonical();
        c.gamma_num.is_empty()
            && c.gamma_den.is_empty()
            && c.i_pow.is_constant()
            && c.two_pow.is_constant()
            && c.pi_pow.is_constant()
    }

    /// Numerical value at real `(s, t)`.
    pub fn eval(&self, s: f64, t: f64) -> Complex64 {
        let mut v = q_to_f64(&self.coeff);
        v *= 2f64.powf(self.two_pow.eval(s, t));
        v *= PI.powf(self.pi_pow.eval(s, t));
        for l in &self.lin_num {
            v *= l.eval(s, t);
        }
        for l in &self.lin_den {
            v /= l.eval(s, t);
        }
        for l in &self.gamma_num {
            v *= gamma(l.eval(s, t));
        }
        for l in &self.gamma_den {
            v /= gamma(l.eval(s, t));
        }
        Complex64::from_polar(v, 0.5 * PI * self.i_pow.eval(s, t))
    }

    /// Candidate poles in `s` for descriptors that do not involve `t`:
    /// points where a numerator `Γ` argument is a non-positive integer
    /// (first `depth` per factor) or a denominator linear factor vanishes,
    /// with multiplicities. Cancellations against denominator `Γ` zeros are
    /// not taken into account.
    pub fn poles_in_s(&self, depth: usize) -> BTreeMap<Q, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gamma_num {
            if !g.t.is_zero() || g.s.is_zero() {
                continue;
            }
            for k in 0..depth as i64 {
                *out.entry((-qi(k) - &g.c) / &g.s).or_insert(0) += 1;
            }
        }
        for l in &self.lin_den {
            if l.t.is_zero() && !l.s.is_zero() {
                *out.entry(-&l.c / &l.s).or_insert(0) += 1;
            }
        }
        out
    }
}

fn cancel(num: &mut Vec<Affine>, den: &mut Vec<Affine>) {
    let mut i = 0;
    while i < num.len() {
        if let Some(j) = den.iter().position(|d| *d == num[i]) {
            num.remove(i);
            den.remove(j);
        } else {
            i += 1;
        }
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for (a, name) in [(&self.i_pow, "i"), (&self.two_pow, "2"), (&self.pi_pow, "π")] {
            if !a.is_zero() {
                write!(f, "·{}^({})", name, a)?;
            }
        }
        for l in &self.lin_num {
            write!(f, "·({})", l)?;
        }
        for g in &self.gamma_num {
            write!(f, "·Γ({})", g)?;
        }
        if !self.lin_den.is_empty() || !self.gamma_den.is_empty() {
            write!(f, " / [")?;
            let mut first = true;
            for l in &self.lin_den {
                write!(f, "{}({})", if first { "" } else { "·" }, l)?;
                first = false;
            }
            for g in &self.gamma_den {
                write!(f, "{}Γ({})", if first { "" } else { "·" }, g)?;
                first = false;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// `b_{k,l}(x) = x (x + l/2) ⋯ (x + (k−1)l/2)`.
pub fn b_factor(k: usize, l: usize, x: &Affine) -> GammaFactor {
    GammaFactor {
        lin_num: (0..k).map(|j| x.add_const(&q((j * l) as i64, 2))).collect(),
        ..GammaFactor::one()
    }
}

/// `Γ_V(x) = ∏_{k=1}^{r₊} Γ(x/2 − (k−1)d/4)`.
pub fn gamma_v(r_plus: usize, d: usize, x: &Affine) -> GammaFactor {
    GammaFactor {
        gamma_num: (0..r_plus)
            .map(|k| x.scale(&q(1, 2)).add_const(&-q((k * d) as i64, 4)))
            .collect(),
        ..GammaFactor::one()
    }
}

/// Gindikin gamma function `Γ_Ω(x) = (2π)^{(n−r)/2} ∏_{j=1}^{r} Γ(x − (j−1)d/2)`.
pub fn gamma_omega(n: usize, r: usize, d: usize, x: &Affine) -> GammaFactor {
    let e = Affine::constant(q(n as i64 - r as i64, 2));
    GammaFactor {
        two_pow: e.clone(),
        pi_pow: e,
        gamma_num: (0..r).map(|j| x.add_const(&-q((j * d) as i64, 2))).collect(),
        ..GammaFactor::one()
    }
}

/// Euclidean prefactor `γ(x) = (2π)^{−rx} e(rx/4) Γ_Ω(x)`, `e(z) = e^{2π√−1 z}`.
pub fn gamma_euclidean(n: usize, r: usize, d: usize, x: &Affine) -> GammaFactor {
    let rx = x.scale(&qi(r as i64));
    GammaFactor::two_power(rx.neg())
        .mul(&GammaFactor::pi_power(rx.neg()))
        .mul(&GammaFactor::i_power(rx))
        .mul(&gamma_omega(n, r, d, x))
}

/// `γ(x) = 2^{2x+n} π^{n/2−1} Γ(x+1) Γ(x+n/2)` for `ℝ^{p,q}`, `n = p + q`.
pub fn gamma_pq(n: usize, x: &Affine) -> GammaFactor {
    GammaFactor {
        coeff: Q::one(),
        i_pow: Affine::zero(),
        two_pow: x.scale(&qi(2)).add_const(&qi(n as i64)),
        pi_pow: Affine::constant(q(n as i64 - 2, 2)),
        lin_num: Vec::new(),
        lin_den: Vec::new(),
        gamma_num: vec![x.add_const(&qi(1)), x.add_const(&q(n as i64, 2))],
        gamma_den: Vec::new(),
    }
}
