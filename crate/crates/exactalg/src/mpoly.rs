use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::ExactError;
use crate::mono::{Mono, MAX_VARS};
use crate::param::{Param, ParamPoly};
use crate::rational::{qi, Q};

/// Ordered list of coordinate names.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vars {
    names: Vec<String>,
}

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Vars>, ExactError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(ExactError::ResourceLimit(format!(
                "{} variables requested, at most {} supported",
                names.len(),
                MAX_VARS
            )));
        }
        Ok(Arc::new(Vars { names }))
    }

    /// `prefix1 .. prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Arc<Vars>, ExactError> {
        Vars::new((1..=n).map(|i| format!("{}{}", prefix, i)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_vars(a: &Arc<Vars>, b: &Arc<Vars>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Multivariate polynomial with [`ParamPoly`] coefficients.
#[derive(Clone)]
pub struct MPoly {
    vars: Arc<Vars>,
    terms: BTreeMap<Mono, ParamPoly>,
}

impl PartialEq for MPoly {
    fn eq(&self, o: &MPoly) -> bool {
        same_vars(&self.vars, &o.vars) && self.terms == o.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(vars: &Arc<Vars>) -> MPoly {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<Vars>) -> MPoly {
        MPoly::constant(vars, ParamPoly::one())
    }

    pub fn constant(vars: &Arc<Vars>, c: impl Into<ParamPoly>) -> MPoly {
        MPoly::monomial(vars, Mono::ONE, c)
    }

    pub fn var(vars: &Arc<Vars>, i: usize) -> MPoly {
        assert!(i < vars.len(), "variable index out of range");
        MPoly::monomial(vars, Mono::var(i), ParamPoly::one())
    }

    pub fn monomial(vars: &Arc<Vars>, m: Mono, c: impl Into<ParamPoly>) -> MPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            debug_assert!(m.support_len() <= vars.len());
            terms.insert(m, c);
        }
        MPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn from_terms(vars: &Arc<Vars>, it: impl IntoIterator<Item = (Mono, ParamPoly)>) -> MPoly {
        let mut p = MPoly::zero(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &ParamPoly)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Mono, ParamPoly> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Mono) -> ParamPoly {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn leading(&self) -> Option<(Mono, &ParamPoly)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn check_vars(&self, o: &MPoly) -> Result<(), ExactError> {
        if same_vars(&self.vars, &o.vars) {
            Ok(())
        } else {
            Err(ExactError::VarMismatch {
                left: self.vars.names.clone(),
                right: o.vars.names.clone(),
            })
        }
    }

    fn assert_vars(&self, o: &MPoly) {
        if let Err(e) = self.check_vars(o) {
            panic!("{}", e);
        }
    }

    pub fn add_term(&mut self, m: Mono, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: Mono, c: &ParamPoly, negate: bool) {
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(if negate { -c } else { c.clone() });
            }
            Entry::Occupied(mut e) => {
                if negate {
                    *e.get_mut() -= c;
                } else {
                    *e.get_mut() += c;
                }
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly::from_terms(&self.vars, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn scale_q(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v.scale(c))).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono, c: &ParamPoly) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn deriv(&self, i: usize) -> MPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                terms.insert(m.dec(i).unwrap(), c.scale(&qi(e as i64)));
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// `∂^α`.
    pub fn deriv_mono(&self, alpha: Mono) -> MPoly {
        let n = self.nvars();
        let ae = alpha.exps(n);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some(rest) = m.checked_div(alpha) {
                let mut f = Q::one();
                for (i, &a) in ae.iter().enumerate() {
                    let e = m.exp(i);
                    for k in 0..a {
                        f *= qi((e - k) as i64);
                    }
                }
                terms.insert(rest, c.scale(&f));
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Q]) -> ParamPoly {
        assert_eq!(point.len(), self.nvars(), "point has wrong length");
        let n = self.nvars();
        let mut out = ParamPoly::zero();
        let mut powcache: Vec<Vec<Q>> = point.iter().map(|p| vec![Q::one(), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut v = Q::one();
            for (i, pc) in powcache.iter_mut().enumerate().take(n) {
                let e = m.exp(i) as usize;
                while pc.len() <= e {
                    let nx = pc.last().unwrap() * &point[i];
                    pc.push(nx);
                }
                v *= &pc[e];
            }
            out += &c.scale(&v);
        }
        out
    }

    /// Evaluate at a rational point, requiring parameter-free coefficients.
    pub fn eval_q(&self, point: &[Q]) -> Q {
        self.eval(point)
            .constant()
            .expect("eval_q on a polynomial with parametric coefficients")
    }

    /// Substitute `x_i ↦ subs[i]`; all images share one variable list.
    pub fn compose(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.nvars(), "substitution has wrong length");
        let target = subs
            .first()
            .map(|s| s.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut cache: Vec<Vec<MPoly>> = subs
            .iter()
            .map(|s| vec![MPoly::one(&target), s.clone()])
            .collect();
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, pc) in cache.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pc.len() <= e {
                    let nx = pc.last().unwrap() * &subs[i];
                    pc.push(nx);
                }
                t = &t * &pc[e];
            }
            out += &t;
        }
        out
    }

    /// Move to another variable list; variable `i` becomes `target[map[i]]`.
    pub fn embed(&self, target: &Arc<Vars>, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.nvars());
        let n = self.nvars();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for i in 0..n {
                exps[map[i]] += m.exp(i);
            }
            out.add_term(Mono::from_exps(&exps), c.clone());
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> MPoly {
        MPoly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn subst_param(&self, p: Param, value: &ParamPoly) -> MPoly {
        self.map_coeffs(|c| c.subst(p, value))
    }

    pub fn eval_param(&self, p: Param, v: &Q) -> MPoly {
        self.subst_param(p, &ParamPoly::from_q(v.clone()))
    }

    pub fn is_parameter_free(&self) -> bool {
        self.terms.values().all(|c| c.is_constant())
    }

    /// Highest total parameter degree among the coefficients.
    pub fn param_degree(&self) -> u32 {
        self.terms.values().map(|c| c.param_degree()).max().unwrap_or(0)
    }

    /// Rational coefficients, if parameter-free.
    pub fn q_terms(&self) -> Result<Vec<(Mono, Q)>, ExactError> {
        self.terms
            .iter()
            .map(|(m, c)| c.constant().map(|v| (*m, v)).ok_or(ExactError::ParametricInput))
            .collect()
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    ///
    /// The leading coefficient of `d` must be a nonzero rational.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly, ExactError> {
        self.check_vars(d)?;
        let (lm, lc) = d.leading().ok_or(ExactError::BadDivisor)?;
        let lc = lc.constant().ok_or(ExactError::BadDivisor)?;
        let inv = lc.recip();
        let mut rem = self.clone();
        let mut quo = MPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            let qm = m.checked_div(lm).ok_or(ExactError::NotDivisible)?;
            let qc = c.scale(&inv);
            for (dm, dc) in &d.terms {
                let prod = dc * &qc;
                rem.add_term_ref(dm.mul(qm), &prod, true);
            }
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    /// Coefficient extraction with respect to a subset of the variables:
    /// returns `{ x_S^β ↦ coefficient polynomial in the other variables }`.
    pub fn split_by(&self, subset: &[usize]) -> BTreeMap<Mono, MPoly> {
        let mut out: BTreeMap<Mono, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = Mono::ONE;
            for &i in subset {
                key = key.with_inc(i, m.exp(i));
            }
            let rest = m.checked_div(key).unwrap();
            out.entry(key)
                .or_insert_with(|| MPoly::zero(&self.vars))
                .add_term(rest, c.clone());
        }
        out
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &[String]) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = mono_string(*m, names);
            let single_neg = c.len() == 1 && c.terms().next().unwrap().1.is_negative();
            let cs = if single_neg {
                (-c).to_string()
            } else {
                c.to_string()
            };
            let sign = if single_neg { "-" } else { "+" };
            if first {
                if single_neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let wrap = c.len() > 1;
            match (mono.is_empty(), cs.as_str()) {
                (true, _) => {
                    if wrap {
                        write!(f, "({})", cs)?
                    } else {
                        write!(f, "{}", cs)?
                    }
                }
                (false, "1") => write!(f, "{}", mono)?,
                (false, _) => {
                    if wrap {
                        write!(f, "({})*{}", cs, mono)?
                    } else {
                        write!(f, "{}*{}", cs, mono)?
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn mono_string(m: Mono, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{}^{}", name, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.vars.names.clone();
        self.fmt_with(f, &names)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, o: &MPoly) {
        self.assert_vars(o);
        for (m, c) in &o.terms {
            self.add_term_ref(*m, c, false);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, o: &MPoly) {
        self.assert_vars(o);
        for (m, c) in &o.terms {
            self.add_term_ref(*m, c, true);
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, o: MPoly) -> MPoly {
        self += &o;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, o: MPoly) -> MPoly {
        self -= &o;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.assert_vars(o);
        let (small, big) = if self.terms.len() <= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut r = MPoly::zero(&self.vars);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let prod = ca * cb;
                if !prod.is_zero() {
                    r.add_term_ref(ma.mul(*mb), &prod, false);
                }
            }
        }
        r
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn xy() -> Arc<Vars> {
        Vars::new(["x", "y"]).unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        let v = xy();
        let x = MPoly::var(&v, 0);
        let y = MPoly::var(&v, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.deriv(0).to_string(), "2*x");
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let x = MPoly::var(&v, 0);
        let y = MPoly::var(&v, 1);
        let a = &x + &y.scale_q(&q(1, 2));
        let b = &(&x * &x) - &y;
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!((&prod + &x).div_exact(&a), Err(ExactError::NotDivisible));
    }

    #[test]
    fn compose_and_eval() {
        let v = xy();
        let x = MPoly::var(&v, 0);
        let y = MPoly::var(&v, 1);
        let p = &(&x * &x) + &y;
        let c = p.compose(&[&x + &y, &x - &y]);
        assert_eq!(c.eval_q(&[qi(1), qi(2)]), qi(8));
    }

    #[test]
    fn mismatch_is_reported() {
        let a = MPoly::var(&xy(), 0);
        let b = MPoly::var(&Vars::new(["u", "v"]).unwrap(), 0);
        assert!(a.check_vars(&b).is_err());
    }
}
