use std::fmt;

use exactalg::{q_to_f64, qi, Q};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// Exact affine form `a·s + b·t + c` in the two spectral parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine {
    pub s: Q,
    pub t: Q,
    pub c: Q,
}

impl Affine {
    pub fn new(s: Q, t: Q, c: Q) -> Affine {
        Affine { s, t, c }
    }

    pub fn constant(c: Q) -> Affine {
        Affine::new(Q::zero(), Q::zero(), c)
    }

    pub fn zero() -> Affine {
        Affine::constant(Q::zero())
    }

    /// `a·s + c`.
    pub fn in_s(a: Q, c: Q) -> Affine {
        Affine::new(a, Q::zero(), c)
    }

    /// `a·t + c`.
    pub fn in_t(a: Q, c: Q) -> Affine {
        Affine::new(Q::zero(), a, c)
    }

    pub fn is_constant(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.c.is_zero()
    }

    pub fn add(&self, o: &Affine) -> Affine {
        Affine::new(&self.s + &o.s, &self.t + &o.t, &self.c + &o.c)
    }

    pub fn sub(&self, o: &Affine) -> Affine {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Affine {
        Affine::new(-&self.s, -&self.t, -&self.c)
    }

    pub fn scale(&self, k: &Q) -> Affine {
        Affine::new(&self.s * k, &self.t * k, &self.c * k)
    }

    pub fn add_const(&self, k: &Q) -> Affine {
        Affine::new(self.s.clone(), self.t.clone(), &self.c + k)
    }

    /// Substitute `s ↦ s + ds`, `t ↦ t + dt`.
    pub fn shift(&self, ds: &Q, dt: &Q) -> Affine {
        self.add_const(&(&self.s * ds + &self.t * dt))
    }

    /// Substitute `s ↦ k·s + c` (the `t` slot is untouched).
    pub fn subst_s(&self, k: &Q, c: &Q) -> Affine {
        Affine::new(&self.s * k, self.t.clone(), &self.c + &self.s * c)
    }

    /// Exchange the roles of `s` and `t`.
    pub fn swap_st(&self) -> Affine {
        Affine::new(self.t.clone(), self.s.clone(), self.c.clone())
    }

    /// Same linear part and an integer difference of constants.
    pub fn integer_gap(&self, o: &Affine) -> Option<i64> {
        if self.s != o.s || self.t != o.t {
            return None;
        }
        let d = &self.c - &o.c;
        if d.is_integer() {
            use num_traits::ToPrimitive;
            d.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Leading coefficient (first non-zero of `s`, `t`), if any.
    pub fn leading(&self) -> Option<&Q> {
        if !self.s.is_zero() {
            Some(&self.s)
        } else if !self.t.is_zero() {
            Some(&self.t)
        } else {
            None
        }
    }

    pub fn eval(&self, s: f64, t: f64) -> f64 {
        q_to_f64(&self.s) * s + q_to_f64(&self.t) * t + q_to_f64(&self.c)
    }
}

impl From<i64> for Affine {
    fn from(c: i64) -> Affine {
        Affine::constant(qi(c))
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, name) in [(&self.s, "s"), (&self.t, "t")] {
            if k.is_zero() {
                continue;
            }
            let sign = if k.is_negative() { "-" } else { "+" };
            let a = k.abs();
            let body = if a == qi(1) {
                name.to_string()
            } else {
                format!("{}{}", a, name)
            };
            parts.push(format!("{}{}", sign, body));
        }
        if !self.c.is_zero() || parts.is_empty() {
            let sign = if self.c.is_negative() { "-" } else { "+" };
            parts.push(format!("{}{}", sign, self.c.abs()));
        }
        let mut out = parts.concat();
        if out.starts_with('+') {
            out.remove(0);
        }
        write!(f, "{}", out)
    }
}

impl Serialize for Affine {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}
