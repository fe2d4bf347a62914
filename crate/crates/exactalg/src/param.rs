use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::ExactError;
use crate::rational::{qi, Q};

/// Formal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    S,
    T,
    Lambda,
    Mu,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::S, Param::T, Param::Lambda, Param::Mu];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::S => "s",
            Param::T => "t",
            Param::Lambda => "λ",
            Param::Mu => "μ",
        }
    }
}

/// Monomial in the parameters times a signed power of `τ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PMono {
    exps: [u8; 4],
    tau: i8,
}

impl PMono {
    pub fn exp(&self, p: Param) -> u32 {
        self.exps[p.index()] as u32
    }

    pub fn tau(&self) -> i32 {
        self.tau as i32
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn mul(self, o: PMono) -> PMono {
        let mut exps = [0u8; 4];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_add(o.exps[i])
                .expect("parameter exponent overflow");
        }
        PMono {
            exps,
            tau: self.tau.checked_add(o.tau).expect("τ exponent overflow"),
        }
    }
}

/// Polynomial in `s, t, λ, μ, τ, τ⁻¹` with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<PMono, Q>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn from_q(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(PMono::default(), c);
        }
        ParamPoly { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_q(qi(c))
    }

    pub fn param(p: Param) -> Self {
        let mut m = PMono::default();
        m.exps[p.index()] = 1;
        Self::term(m, Q::one())
    }

    /// `τ^k`, where `k` may be negative.
    pub fn tau_pow(k: i32) -> Self {
        let m = PMono {
            exps: [0; 4],
            tau: i8::try_from(k).expect("τ exponent out of range"),
        };
        Self::term(m, Q::one())
    }

    pub fn term(m: PMono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this is a plain rational (no parameters, no τ).
    pub fn constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (*m == PMono::default()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant().is_some()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Highest power of `p` occurring.
    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.keys().map(|m| m.exp(p)).max().unwrap_or(0)
    }

    /// Total degree in the four parameters.
    pub fn param_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Sorted list of τ exponents that occur.
    pub fn tau_powers(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.keys().map(|m| m.tau()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.terms.keys().any(|m| m.exp(p) > 0)
    }

    /// Substitute `p ↦ value`.
    pub fn subst(&self, p: Param, value: &ParamPoly) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<ParamPoly> = vec![Self::one()];
        for (m, c) in &self.terms {
            let e = m.exp(p) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *m;
            rest.exps[p.index()] = 0;
            out += &(&Self::term(rest, c.clone()) * &powers[e]);
        }
        out
    }

    pub fn eval_param(&self, p: Param, v: &Q) -> Self {
        self.subst(p, &Self::from_q(v.clone()))
    }

    /// Exchange two parameters.
    pub fn swap_params(&self, a: Param, b: Param) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m.exps.swap(a.index(), b.index());
                (m, c.clone())
            })
            .collect();
        ParamPoly { terms }
    }

    /// Multiply by `τ^k`.
    pub fn shift_tau(&self, k: i32) -> Self {
        self * &Self::tau_pow(k)
    }

    /// Evaluate with `τ = √−1`; fails if an odd τ power survives.
    pub fn eval_tau_unit_i(&self) -> Result<Self, ExactError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.tau();
            if k.rem_euclid(2) != 0 {
                return Err(ExactError::OddTauPower);
            }
            let sign = if (k / 2).rem_euclid(2) == 0 { 1 } else { -1 };
            let mut rest = *m;
            rest.tau = 0;
            out += &Self::term(rest, c * qi(sign));
        }
        Ok(out)
    }

    /// Evaluate all parameters (τ must be absent).
    pub fn eval_all(&self, vals: &[(Param, Q)]) -> Option<Q> {
        let mut acc = self.clone();
        for (p, v) in vals {
            acc = acc.eval_param(*p, v);
        }
        acc.constant()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Q) -> Q) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                terms.insert(*m, v);
            }
        }
        ParamPoly { terms }
    }

    fn add_term(&mut self, m: PMono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl From<Q> for ParamPoly {
    fn from(c: Q) -> Self {
        ParamPoly::from_q(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(c: i64) -> Self {
        ParamPoly::from_int(c)
    }
}

impl From<Param> for ParamPoly {
    fn from(p: Param) -> Self {
        ParamPoly::param(p)
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, o: &ParamPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, o: &ParamPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, o: ParamPoly) -> ParamPoly {
        self += &o;
        self
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, o: ParamPoly) -> ParamPoly {
        self -= &o;
        self
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: &ParamPoly) -> ParamPoly {
        if self.is_zero() || o.is_zero() {
            return ParamPoly::zero();
        }
        // Fast path: one side is a plain rational.
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if *m == PMono::default() {
                return o.scale(c);
            }
        }
        if o.terms.len() == 1 {
            let (m, c) = o.terms.iter().next().unwrap();
            if *m == PMono::default() {
                return self.scale(c);
            }
        }
        let mut r = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(*mb), ca * cb);
            }
        }
        r
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: ParamPoly) -> ParamPoly {
        &self * &o
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for p in Param::ALL {
                match m.exp(p) {
                    0 => {}
                    1 => factors.push(p.symbol().to_string()),
                    e => factors.push(format!("{}^{}", p.symbol(), e)),
                }
            }
            match m.tau() {
                0 => {}
                1 => factors.push("τ".into()),
                k => factors.push(format!("τ^{}", k)),
            }
            if factors.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({})", self)
    }
}
