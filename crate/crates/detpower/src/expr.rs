use std::collections::HashMap;
use std::sync::Arc;

use exactalg::{MPoly, Mono, Param, ParamPoly, Vars};
use jordan::Algebra;

use crate::error::DetPowerError;

/// `det(x)^{s+a} · det(y)^{t+b} · q(x, y)`.
///
/// In the single-variable calculus `shift_y` stays 0 and `q` depends on `x`
/// only. Common determinant factors are never cancelled automatically.
#[derive(Clone, Debug, PartialEq)]
pub struct DetPowerExpr {
    pub shift_x: i64,
    pub shift_y: i64,
    pub body: MPoly,
}

struct Slot {
    param: Param,
    offset: usize,
    det: MPoly,
    grad: Vec<MPoly>,
}

/// Differentiation rules for determinant powers on `V` or on `V × V`.
pub struct DetCalculus {
    alg: Arc<Algebra>,
    vars: Arc<Vars>,
    slots: Vec<Slot>,
}

/// Name of the `y`-copy of an algebra coordinate.
fn y_name(name: &str) -> String {
    match name.strip_prefix('x') {
        Some(rest) => format!("y{}", rest),
        None => format!("{}'", name),
    }
}

impl DetCalculus {
    /// Calculus on `V` with exponent parameter `s`.
    pub fn single(alg: &Arc<Algebra>) -> DetCalculus {
        let det = alg.det_poly().clone();
        let grad = (0..alg.n()).map(|i| det.deriv(i)).collect();
        DetCalculus {
            alg: alg.clone(),
            vars: alg.vars().clone(),
            slots: vec![Slot {
                param: Param::S,
                offset: 0,
                det,
                grad,
            }],
        }
    }

    /// Calculus on `V × V` with exponents `s` (for `x`) and `t` (for `y`).
    pub fn pair(alg: &Arc<Algebra>) -> Result<DetCalculus, DetPowerError> {
        let n = alg.n();
        let mut names: Vec<String> = alg.vars().names().to_vec();
        names.extend(alg.vars().names().iter().map(|s| y_name(s)));
        let vars = Vars::new(names)?;
        let mut slots = Vec::new();
        for (k, param) in [Param::S, Param::T].into_iter().enumerate() {
            let offset = k * n;
            let map: Vec<usize> = (offset..offset + n).collect();
            let det = alg.det_poly().embed(&vars, &map);
            let grad = (0..2 * n).map(|i| det.deriv(i)).collect();
            slots.push(Slot {
                param,
                offset,
                det,
                grad,
            });
        }
        Ok(DetCalculus {
            alg: alg.clone(),
            vars,
            slots,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn is_pair(&self) -> bool {
        self.slots.len() == 2
    }

    pub fn det_x(&self) -> &MPoly {
        &self.slots[0].det
    }

    pub fn det_y(&self) -> Option<&MPoly> {
        self.slots.get(1).map(|s| &s.det)
    }

    /// Embed a polynomial on `V` into the `x` (slot 0) or `y` (slot 1) copy.
    pub fn embed(&self, p: &MPoly, slot: usize) -> MPoly {
        let n = self.alg.n();
        let off = self.slots[slot].offset;
        let map: Vec<usize> = (off..off + n).collect();
        p.embed(&self.vars, &map)
    }

    fn slot_of(&self, var: usize) -> usize {
        if var < self.alg.n() {
            0
        } else {
            1
        }
    }

    /// `det(x)^s det(y)^t · q` with zero shifts.
    pub fn lift(&self, q: &MPoly) -> Result<DetPowerExpr, DetPowerError> {
        q.check_vars(&MPoly::zero(&self.vars))?;
        Ok(DetPowerExpr {
            shift_x: 0,
            shift_y: 0,
            body: q.clone(),
        })
    }

    fn shift(e: &DetPowerExpr, slot: usize) -> i64 {
        if slot == 0 {
            e.shift_x
        } else {
            e.shift_y
        }
    }

    /// `∂/∂v` of an expression; `v` indexes the calculus variables.
    pub fn diff(&self, e: &DetPowerExpr, var: usize) -> DetPowerExpr {
        let k = self.slot_of(var);
        let slot = &self.slots[k];
        let a = Self::shift(e, k);
        let exponent = &ParamPoly::param(slot.param) + &ParamPoly::from_int(a);
        let mut body = &slot.det * &e.body.deriv(var);
        let g = &slot.grad[var];
        if !g.is_zero() && !e.body.is_zero() {
            body += &(g * &e.body).scale(&exponent);
        }
        let (sx, sy) = if k == 0 {
            (a - 1, e.shift_y)
        } else {
            (e.shift_x, a - 1)
        };
        DetPowerExpr {
            shift_x: sx,
            shift_y: sy,
            body,
        }
    }

    /// `det(x)^k` (slot 0) or `det(y)^k` (slot 1).
    fn det_pow(&self, slot: usize, k: u32, cache: &mut HashMap<(usize, u32), MPoly>) -> MPoly {
        cache
            .entry((slot, k))
            .or_insert_with(|| self.slots[slot].det.pow(k))
            .clone()
    }

    /// Apply the constant-coefficient operator `σ(∂)` for a symbol `σ` over
    /// the calculus variables. The result is brought to the common shift
    /// given by the highest order reached in each slot.
    pub fn apply_symbol(&self, e: &DetPowerExpr, symbol: &MPoly) -> Result<DetPowerExpr, DetPowerError> {
        symbol.check_vars(&e.body)?;
        let n = self.alg.n();
        let order = |m: Mono, slot: usize| -> u32 {
            let off = self.slots[slot].offset;
            (off..off + n).map(|i| m.exp(i)).sum()
        };
        let nslots = self.slots.len();
        let mut top = vec![0u32; nslots];
        for (m, _) in symbol.terms() {
            for (k, t) in top.iter_mut().enumerate() {
                *t = (*t).max(order(*m, k));
            }
        }
        let mut memo: HashMap<Mono, DetPowerExpr> = HashMap::new();
        memo.insert(Mono::ONE, e.clone());
        let mut pow_cache = HashMap::new();
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in symbol.terms() {
            let d = self.derive_memo(*m, &mut memo);
            let mut body = d.body.scale(c);
            for (k, t) in top.iter().enumerate() {
                let gap = t - order(*m, k);
                if gap > 0 {
                    body = &body * &self.det_pow(k, gap, &mut pow_cache);
                }
            }
            out += &body;
        }
        Ok(DetPowerExpr {
            shift_x: e.shift_x - top[0] as i64,
            shift_y: e.shift_y - top.get(1).copied().unwrap_or(0) as i64,
            body: out,
        })
    }

    fn derive_memo(&self, m: Mono, memo: &mut HashMap<Mono, DetPowerExpr>) -> DetPowerExpr {
        if let Some(d) = memo.get(&m) {
            return d.clone();
        }
        let i = (0..self.vars.len())
            .find(|&i| m.exp(i) > 0)
            .expect("non-unit monomial");
        let prev = self.derive_memo(m.dec(i).unwrap(), memo);
        let d = self.diff(&prev, i);
        memo.insert(m, d.clone());
        d
    }

    /// Symbol of `det(∂/∂x)` on `V`, or of `det(∂/∂x − ∂/∂y)` on `V × V`.
    ///
    /// Derivatives are taken with respect to the trace form, i.e. the
    /// algebra's `det_metric` is applied to the coordinate gradient.
    pub fn wave_symbol(&self) -> MPoly {
        let dual = self.alg.det_dual_poly();
        if !self.is_pair() {
            return dual;
        }
        let n = self.alg.n();
        let subs: Vec<MPoly> = (0..n)
            .map(|i| &MPoly::var(&self.vars, i) - &MPoly::var(&self.vars, n + i))
            .collect();
        dual.compose(&subs)
    }

    /// Evaluate a parameter-free expression with integer exponents `s = k`,
    /// `t = l` as an honest polynomial, when all total exponents are ≥ 0.
    pub fn to_polynomial(&self, e: &DetPowerExpr, k: i64, l: i64) -> Option<MPoly> {
        let ex = k + e.shift_x;
        let ey = l + e.shift_y;
        if ex < 0 || (self.is_pair() && ey < 0) {
            return None;
        }
        let body = e
            .body
            .eval_param(Param::S, &exactalg::qi(k))
            .eval_param(Param::T, &exactalg::qi(l));
        let mut p = &body * &self.slots[0].det.pow(ex as u32);
        if let Some(s) = self.slots.get(1) {
            p = &p * &s.det.pow(ey as u32);
        }
        Some(p)
    }
}
