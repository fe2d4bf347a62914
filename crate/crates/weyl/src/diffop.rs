use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use exactalg::{binomial, ExactError, MPoly, Mono, Param, ParamPoly, Vars, Q};

/// Differential operator `Σ_α c_α(x) ∂^α` in normal order (multiplication
/// on the left, differentiation on the right).
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    vars: Arc<Vars>,
    terms: BTreeMap<Mono, MPoly>,
}

fn binom_mono(a: Mono, g: Mono, n: usize) -> Q {
    (0..n).fold(exactalg::qi(1), |c, i| {
        c * Q::from_integer(binomial(a.exp(i), g.exp(i)))
    })
}

impl DiffOp {
    pub fn zero(vars: &Arc<Vars>) -> DiffOp {
        DiffOp {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(vars: &Arc<Vars>) -> DiffOp {
        DiffOp::mult(&MPoly::one(vars))
    }

    /// Multiplication by `c`.
    pub fn mult(c: &MPoly) -> DiffOp {
        let mut d = DiffOp::zero(c.vars());
        d.add_term(Mono::ONE, c.clone());
        d
    }

    /// `∂/∂x_i`.
    pub fn deriv(vars: &Arc<Vars>, i: usize) -> DiffOp {
        DiffOp::deriv_mono(vars, Mono::var(i))
    }

    /// `∂^α`.
    pub fn deriv_mono(vars: &Arc<Vars>, alpha: Mono) -> DiffOp {
        let mut d = DiffOp::zero(vars);
        d.add_term(alpha, MPoly::one(vars));
        d
    }

    /// Constant-coefficient operator `σ(∂)` of a symbol polynomial.
    pub fn from_symbol(symbol: &MPoly) -> DiffOp {
        let vars = symbol.vars();
        let mut d = DiffOp::zero(vars);
        for (m, c) in symbol.terms() {
            d.add_term(*m, MPoly::constant(vars, c.clone()));
        }
        d
    }

    pub fn from_terms(vars: &Arc<Vars>, it: impl IntoIterator<Item = (Mono, MPoly)>) -> DiffOp {
        let mut d = DiffOp::zero(vars);
        for (m, c) in it {
            d.add_term(m, c);
        }
        d
    }

    pub fn add_term(&mut self, alpha: Mono, c: MPoly) {
        if c.is_zero() {
            return;
        }
        assert!(
            Arc::ptr_eq(&self.vars, c.vars()) || self.vars.names() == c.vars().names(),
            "coefficient over a different variable list"
        );
        match self.terms.get_mut(&alpha) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&alpha);
                }
            }
            None => {
                self.terms.insert(alpha, c);
            }
        }
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &MPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: Mono) -> MPoly {
        self.terms
            .get(&alpha)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(&self.vars))
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order, `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Highest coefficient degree.
    pub fn coeff_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    pub fn check_vars(&self, o: &DiffOp) -> Result<(), ExactError> {
        MPoly::zero(&self.vars).check_vars(&MPoly::zero(&o.vars))
    }

    pub fn apply(&self, f: &MPoly) -> Result<MPoly, ExactError> {
        MPoly::zero(&self.vars).check_vars(f)?;
        let mut out = MPoly::zero(&self.vars);
        for (alpha, c) in &self.terms {
            let d = f.deriv_mono(*alpha);
            if !d.is_zero() {
                out += &(c * &d);
            }
        }
        Ok(out)
    }

    /// `self ∘ other`, normal ordered with `∂^α c = Σ_γ C(α,γ) (∂^γ c) ∂^{α−γ}`.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp, ExactError> {
        self.check_vars(other)?;
        let n = self.vars.len();
        let mut out = DiffOp::zero(&self.vars);
        for (alpha, a) in &self.terms {
            let gammas = alpha.divisors(n);
            for (beta, b) in &other.terms {
                for g in &gammas {
                    let db = b.deriv_mono(*g);
                    if db.is_zero() {
                        continue;
                    }
                    let rest = alpha.checked_div(*g).unwrap().mul(*beta);
                    let c = binom_mono(*alpha, *g, n);
                    out.add_term(rest, (a * &db).scale_q(&c));
                }
            }
        }
        Ok(out)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp, ExactError> {
        Ok(&self.compose(other)? - &other.compose(self)?)
    }

    pub fn scale(&self, c: &ParamPoly) -> DiffOp {
        DiffOp::from_terms(&self.vars, self.terms.iter().map(|(m, p)| (*m, p.scale(c))))
    }

    pub fn scale_q(&self, c: &Q) -> DiffOp {
        self.scale(&ParamPoly::from_q(c.clone()))
    }

    /// Left multiplication by a polynomial.
    pub fn premul(&self, p: &MPoly) -> DiffOp {
        DiffOp::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (*m, p * c)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> DiffOp {
        DiffOp::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn subst_param(&self, p: Param, v: &ParamPoly) -> DiffOp {
        self.map_coeffs(|c| c.subst_param(p, v))
    }

    /// Substitute polynomials for the coordinates inside the coefficients,
    /// keeping the derivative slots.
    pub fn subst_coeff_vars(&self, subs: &[MPoly]) -> DiffOp {
        self.map_coeffs(|c| c.compose(subs))
    }

    pub fn param_degree(&self) -> u32 {
        self.terms.values().map(|c| c.param_degree()).max().unwrap_or(0)
    }

    /// Set `τ = √−1`; fails if an odd power of `τ` remains.
    pub fn eval_tau_unit_i(&self) -> Result<DiffOp, ExactError> {
        let mut out = DiffOp::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coeff = MPoly::zero(&self.vars);
            for (xm, k) in c.terms() {
                coeff.add_term(*xm, k.eval_tau_unit_i()?);
            }
            out.add_term(*m, coeff);
        }
        Ok(out)
    }

    /// All τ powers occurring in the coefficients.
    pub fn tau_powers(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self
            .terms
            .values()
            .flat_map(|c| c.terms().flat_map(|(_, p)| p.tau_powers()).collect::<Vec<_>>())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, o: &DiffOp) -> DiffOp {
        self.check_vars(o).expect("variable mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, o: &DiffOp) -> DiffOp {
        self + &(-o)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.map_coeffs(|c| -c)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (i, name) in names.iter().enumerate() {
                match alpha.exp(i) {
                    0 => {}
                    1 => write!(f, "·∂{}", name)?,
                    e => write!(f, "·∂{}^{}", name, e)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[{}]", self)
    }
}
