use std::f64::consts::PI;
use std::fmt;

use exactalg::{q_to_f64, qi, Q};
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::affine::Affine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Trig {
    Sin,
    Cos,
}

/// `sin(π·a(s))` or `cos(π·a(s))` for an exact affine `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TrigFactor {
    pub f: Trig,
    pub arg: Affine,
}

impl TrigFactor {
    fn eval(&self, s: f64) -> f64 {
        let x = PI * self.arg.eval(s, 0.0);
        match self.f {
            Trig::Sin => x.sin(),
            Trig::Cos => x.cos(),
        }
    }
}

/// `c · (√−1)^k · ∏ trig factors`, `k ∈ {0,1,2,3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigTerm {
    pub coeff: Q,
    pub i_pow: u8,
    pub factors: Vec<TrigFactor>,
}

/// Finite sum of products of `sin`/`cos` with π-rational affine arguments
/// in one variable `s` and Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrigExpr {
    pub terms: Vec<TrigTerm>,
}

impl TrigExpr {
    pub fn zero() -> TrigExpr {
        TrigExpr { terms: Vec::new() }
    }

    pub fn constant(c: Q) -> TrigExpr {
        if c.is_zero() {
            return TrigExpr::zero();
        }
        TrigExpr {
            terms: vec![TrigTerm {
                coeff: c,
                i_pow: 0,
                factors: Vec::new(),
            }],
        }
    }

    pub fn one() -> TrigExpr {
        TrigExpr::constant(Q::one())
    }

    /// `√−1`.
    pub fn i() -> TrigExpr {
        TrigExpr::one().times_i(1)
    }

    fn factor(f: Trig, arg: Affine) -> TrigExpr {
        assert!(arg.t.is_zero(), "trigonometric arguments are affine in s only");
        TrigExpr {
            terms: vec![TrigTerm {
                coeff: Q::one(),
                i_pow: 0,
                factors: vec![TrigFactor { f, arg }],
            }],
        }
    }

    /// `sin(π·arg)`.
    pub fn sin(arg: Affine) -> TrigExpr {
        TrigExpr::factor(Trig::Sin, arg)
    }

    /// `cos(π·arg)`.
    pub fn cos(arg: Affine) -> TrigExpr {
        TrigExpr::factor(Trig::Cos, arg)
    }

    pub fn add(&self, o: &TrigExpr) -> TrigExpr {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        TrigExpr { terms }
    }

    pub fn sub(&self, o: &TrigExpr) -> TrigExpr {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TrigExpr {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> TrigExpr {
        if c.is_zero() {
            return TrigExpr::zero();
        }
        TrigExpr {
            terms: self
                .terms
                .iter()
                .map(|t| TrigTerm {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Multiply by `(√−1)^k`.
    pub fn times_i(&self, k: u8) -> TrigExpr {
        TrigExpr {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let e = (t.i_pow + k % 4) % 4;
                    let coeff = if e >= 2 { -&t.coeff } else { t.coeff.clone() };
                    TrigTerm {
                        coeff,
                        i_pow: e % 2,
                        factors: t.factors.clone(),
                    }
                })
                .collect(),
        }
    }

    pub fn mul(&self, o: &TrigExpr) -> TrigExpr {
        let mut out = TrigExpr::zero();
        for a in &self.terms {
            for b in &o.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                factors.sort();
                let t = TrigExpr {
                    terms: vec![TrigTerm {
                        coeff: &a.coeff * &b.coeff,
                        i_pow: 0,
                        factors,
                    }],
                };
                out = out.add(&t.times_i(a.i_pow + b.i_pow));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> TrigExpr {
        (0..k).fold(TrigExpr::one(), |acc, _| acc.mul(self))
    }

    /// Substitute `s ↦ s + h` exactly.
    pub fn shift(&self, h: &Q) -> TrigExpr {
        TrigExpr {
            terms: self
                .terms
                .iter()
                .map(|t| TrigTerm {
                    coeff: t.coeff.clone(),
                    i_pow: t.i_pow,
                    factors: t
                        .factors
                        .iter()
                        .map(|f| TrigFactor {
                            f: f.f,
                            arg: f.arg.shift(h, &Q::zero()),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn eval(&self, s: f64) -> Complex64 {
        let mut acc = Complex64::zero();
        for t in &self.terms {
            let v = t.factors.iter().fold(q_to_f64(&t.coeff), |v, f| v * f.eval(s));
            acc += match t.i_pow {
                0 => Complex64::new(v, 0.0),
                1 => Complex64::new(0.0, v),
                _ => unreachable!("i_pow is kept in {{0, 1}}"),
            };
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<i64> for TrigExpr {
    fn from(c: i64) -> TrigExpr {
        TrigExpr::constant(qi(c))
    }
}

impl fmt::Display for TrigExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", t.coeff)?;
            if t.i_pow == 1 {
                write!(f, "·i")?;
            }
            for fac in &t.factors {
                let name = match fac.f {
                    Trig::Sin => "sin",
                    Trig::Cos => "cos",
                };
                write!(f, "·{}(π({}))", name, fac.arg)?;
            }
        }
        Ok(())
    }
}

/// 2×2 matrix of trigonometric expressions, indexed `[ε][η]` with `+ ↦ 0`.
pub type TrigMatrix = [[TrigExpr; 2]; 2];

pub fn eval_matrix(m: &TrigMatrix, s: f64) -> [[Complex64; 2]; 2] {
    [
        [m[0][0].eval(s), m[0][1].eval(s)],
        [m[1][0].eval(s), m[1][1].eval(s)],
    ]
}

pub fn shift_matrix(m: &TrigMatrix, h: &Q) -> TrigMatrix {
    [
        [m[0][0].shift(h), m[0][1].shift(h)],
        [m[1][0].shift(h), m[1][1].shift(h)],
    ]
}
