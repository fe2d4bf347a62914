use std::sync::Arc;

use exactalg::linalg::{self, Mat};
use exactalg::{qi, MPoly, ParamPoly, Vars, Q};
use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::JordanError;
use crate::kind::Kind;
use crate::registry::{JordanType, RegistryRow};
use crate::scalar::Scalar;

type C = Complex<Q>;
type CMat = Vec<Vec<C>>;

/// Sparse structure constants: `e_i ∘ e_j = Σ_k c_k e_k`.
type Structure = Vec<Vec<Vec<(usize, Q)>>>;

/// A concrete simple real Jordan algebra in a fixed coordinate chart.
#[derive(Debug)]
pub struct Algebra {
    kind: Kind,
    row: RegistryRow,
    vars: Arc<Vars>,
    structure: Structure,
    unit: Vec<Q>,
    trace_form: Vec<Q>,
    gram: Mat,
    det_metric: Mat,
    coeffs: Vec<MPoly>,
    adjugate: Vec<MPoly>,
}

fn c_zero() -> C {
    Complex::new(Q::zero(), Q::zero())
}

fn cm_zero(m: usize) -> CMat {
    vec![vec![c_zero(); m]; m]
}

fn cm_mul(a: &CMat, b: &CMat) -> CMat {
    let m = a.len();
    let mut c = cm_zero(m);
    for i in 0..m {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    c[i][j] = &c[i][j] + &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

/// Coordinate slot of a matrix chart.
#[derive(Clone, Copy)]
enum Slot {
    Re(usize, usize),
    Im(usize, usize),
}

struct MatrixChart {
    size: usize,
    names: Vec<String>,
    slots: Vec<Slot>,
    basis: Vec<CMat>,
}

impl MatrixChart {
    fn new(kind: Kind) -> MatrixChart {
        let (m, symmetric, complex) = match kind {
            Kind::SymR(m) => (m, true, false),
            Kind::MatR(m) => (m, false, false),
            Kind::HermC(m) => (m, true, true),
            Kind::Rpq(..) => unreachable!(),
        };
        let one = || Complex::new(Q::one(), Q::zero());
        let iu = || Complex::new(Q::zero(), Q::one());
        let mut names = Vec::new();
        let mut slots = Vec::new();
        let mut basis = Vec::new();
        for i in 0..m {
            let start = if symmetric { i } else { 0 };
            for j in start..m {
                let mut b = cm_zero(m);
                if i == j || !symmetric {
                    b[i][j] = one();
                } else {
                    b[i][j] = one();
                    b[j][i] = one();
                }
                let prefix = if complex && i != j { "u" } else { "x" };
                names.push(format!("{}{}{}", prefix, i + 1, j + 1));
                slots.push(Slot::Re(i, j));
                basis.push(b);
                if complex && i != j {
                    let mut b = cm_zero(m);
                    b[i][j] = iu();
                    b[j][i] = -iu();
                    names.push(format!("v{}{}", i + 1, j + 1));
                    slots.push(Slot::Im(i, j));
                    basis.push(b);
                }
            }
        }
        MatrixChart {
            size: m,
            names,
            slots,
            basis,
        }
    }

    fn coords(&self, a: &CMat) -> Vec<Q> {
        self.slots
            .iter()
            .map(|s| match *s {
                Slot::Re(i, j) => a[i][j].re.clone(),
                Slot::Im(i, j) => a[i][j].im.clone(),
            })
            .collect()
    }

    fn identity(&self) -> CMat {
        let mut e = cm_zero(self.size);
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = Complex::new(Q::one(), Q::zero());
        }
        e
    }
}

fn sparse(v: &[Q]) -> Vec<(usize, Q)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

impl Algebra {
    pub fn new(kind: Kind) -> Result<Arc<Algebra>, JordanError> {
        let n = kind.dim();
        match kind {
            Kind::SymR(m) | Kind::MatR(m) | Kind::HermC(m) if m == 0 => {
                return Err(JordanError::Parse(kind.to_string()))
            }
            Kind::Rpq(p, q) if p + q < 2 => return Err(JordanError::Parse(kind.to_string())),
            _ => {}
        }
        if n > exactalg::MAX_VARS {
            return Err(JordanError::Exact(exactalg::ExactError::ResourceLimit(format!(
                "{} has dimension {} > {}",
                kind,
                n,
                exactalg::MAX_VARS
            ))));
        }
        let (names, structure, unit, trace_form) = match kind {
            Kind::Rpq(p, _) => {
                let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
                let mut st: Structure = vec![vec![Vec::new(); n]; n];
                st[0][0] = vec![(0, Q::one())];
                for j in 1..n {
                    st[0][j] = vec![(j, Q::one())];
                    st[j][0] = vec![(j, Q::one())];
                    // β(e_j, e_j) = +1 for 1 ≤ j < p, −1 otherwise
                    let beta = if j < p { qi(1) } else { qi(-1) };
                    st[j][j] = vec![(0, -beta)];
                }
                let mut unit = vec![Q::zero(); n];
                unit[0] = Q::one();
                let mut tr = vec![Q::zero(); n];
                tr[0] = qi(2);
                (names, st, unit, tr)
            }
            _ => {
                let chart = MatrixChart::new(kind);
                let half = Complex::new(exactalg::q(1, 2), Q::zero());
                let mut st: Structure = vec![vec![Vec::new(); n]; n];
                for i in 0..n {
                    for j in 0..n {
                        let ab = cm_mul(&chart.basis[i], &chart.basis[j]);
                        let ba = cm_mul(&chart.basis[j], &chart.basis[i]);
                        let sym: CMat = ab
                            .iter()
                            .zip(&ba)
                            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + y) * &half).collect())
                            .collect();
                        st[i][j] = sparse(&chart.coords(&sym));
                    }
                }
                let unit = chart.coords(&chart.identity());
                let tr = chart
                    .basis
                    .iter()
                    .map(|b| (0..chart.size).fold(Q::zero(), |acc, i| acc + &b[i][i].re))
                    .collect();
                (chart.names, st, unit, tr)
            }
        };
        let vars = Vars::new(names)?;
        let row = RegistryRow::for_kind(kind);
        let mut alg = Algebra {
            kind,
            row,
            vars,
            structure,
            unit,
            trace_form,
            gram: Vec::new(),
            det_metric: Vec::new(),
            coeffs: Vec::new(),
            adjugate: Vec::new(),
        };
        alg.gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = alg.mul(&alg.basis_vector(i), &alg.basis_vector(j));
                        alg.trace(&e)
                    })
                    .collect()
            })
            .collect();
        alg.det_metric = match kind {
            Kind::Rpq(..) => linalg::identity(n),
            _ => linalg::inverse(&alg.gram)?,
        };
        alg.coeffs = alg.newton_coeffs();
        alg.adjugate = alg.build_adjugate();
        Ok(Arc::new(alg))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn registry_row(&self) -> &RegistryRow {
        &self.row
    }

    pub fn jordan_type(&self) -> JordanType {
        self.row.jtype
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn rank(&self) -> usize {
        self.row.r
    }

    pub fn d(&self) -> usize {
        self.row.d
    }

    pub fn e(&self) -> usize {
        self.row.e
    }

    pub fn r_plus(&self) -> usize {
        self.row.r_plus
    }

    pub fn d_plus(&self) -> usize {
        self.row.d_plus
    }

    pub fn is_euclidean(&self) -> bool {
        self.row.jtype == JordanType::I
    }

    pub fn is_split(&self) -> bool {
        self.row.e == 0
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn unit(&self) -> Vec<Q> {
        self.unit.clone()
    }

    pub fn trace_form(&self) -> &[Q] {
        &self.trace_form
    }

    /// Gram matrix of the trace form `tr(x ∘ y)`.
    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    /// Matrix `M` used to read `det(M ∂)` as a differential operator.
    ///
    /// Matrix kinds use the inverse trace-form Gram matrix; `ℝ^{p,q}` uses
    /// plain coordinates so that `det(∂) = P(∂)`.
    pub fn det_metric(&self) -> &Mat {
        &self.det_metric
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n()];
        v[i] = Q::one();
        v
    }

    /// Coordinates of a symbolic generic element (the chart variables).
    pub fn generic_element(&self) -> Vec<MPoly> {
        (0..self.n()).map(|i| MPoly::var(&self.vars, i)).collect()
    }

    /// Generic element over another variable list, using `vars[offset..]`.
    pub fn generic_element_in(&self, vars: &Arc<Vars>, offset: usize) -> Vec<MPoly> {
        (0..self.n()).map(|i| MPoly::var(vars, offset + i)).collect()
    }

    pub fn mul<T: Scalar>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.n();
        let z = x[0].zero_like();
        let mut out = vec![z; n];
        for i in 0..n {
            if x[i].is_zero_s() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero_s() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for (k, c) in &self.structure[i][j] {
                    out[*k] = out[*k].add(&xy.scale(c));
                }
            }
        }
        out
    }

    pub fn unit_like<T: Scalar>(&self, x: &[T]) -> Vec<T> {
        self.unit.iter().map(|c| x[0].from_q_like(c)).collect()
    }

    pub fn power<T: Scalar>(&self, x: &[T], k: usize) -> Vec<T> {
        let mut acc = self.unit_like(x);
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn trace<T: Scalar>(&self, x: &[T]) -> T {
        let mut acc = x[0].zero_like();
        for (xi, t) in x.iter().zip(&self.trace_form) {
            if !t.is_zero() {
                acc = acc.add(&xi.scale(t));
            }
        }
        acc
    }

    /// `P(x) y = 2 x∘(x∘y) − x²∘y`.
    pub fn quad_apply<T: Scalar>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let xy = self.mul(x, y);
        let a = self.mul(x, &xy);
        let b = self.mul(&self.mul(x, x), y);
        a.iter().zip(&b).map(|(u, v)| u.scale(&qi(2)).sub(v)).collect()
    }

    /// Matrix of `L(x)`.
    pub fn left_mult(&self, x: &[Q]) -> Mat {
        let n = self.n();
        let cols: Vec<Vec<Q>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        linalg::transpose(&cols)
    }

    /// Matrix of the quadratic representation `P(x) = 2L(x)² − L(x²)`.
    pub fn quad_rep(&self, x: &[Q]) -> Mat {
        let l = self.left_mult(x);
        let l2 = self.left_mult(&self.mul(x, x));
        linalg::mat_sub(&linalg::mat_scale(&linalg::matmul(&l, &l), &qi(2)), &l2)
    }

    fn newton_coeffs(&self) -> Vec<MPoly> {
        let r = self.row.r;
        let x = self.generic_element();
        let mut pk = Vec::with_capacity(r);
        let mut pw = x.clone();
        for k in 1..=r {
            if k > 1 {
                pw = self.mul(&pw, &x);
            }
            pk.push(self.trace(&pw));
        }
        let mut e: Vec<MPoly> = vec![MPoly::one(&self.vars)];
        for k in 1..=r {
            let mut acc = MPoly::zero(&self.vars);
            for i in 1..=k {
                let term = &e[k - i] * &pk[i - 1];
                if i % 2 == 1 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            e.push(acc.scale_q(&exactalg::q(1, k as i64)));
        }
        e.remove(0);
        e
    }

    fn build_adjugate(&self) -> Vec<MPoly> {
        let r = self.row.r;
        let x = self.generic_element();
        let n = self.n();
        let mut acc = vec![MPoly::zero(&self.vars); n];
        for j in 0..r {
            let coef = if j == 0 {
                MPoly::one(&self.vars)
            } else {
                self.coeffs[j - 1].clone()
            };
            let pw = self.power(&x, r - 1 - j);
            let sign = if (j + r - 1) % 2 == 0 { 1 } else { -1 };
            for k in 0..n {
                let t = (&coef * &pw[k]).scale_q(&qi(sign));
                acc[k] += &t;
            }
        }
        acc
    }

    /// `a_1, …, a_r` of the generic minimal polynomial as polynomials.
    ///
    /// `m(T) = T^r − a_1 T^{r−1} + … + (−1)^r a_r`.
    pub fn generic_coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn det_poly(&self) -> &MPoly {
        &self.coeffs[self.row.r - 1]
    }

    pub fn trace_poly(&self) -> &MPoly {
        &self.coeffs[0]
    }

    /// Polynomial vector with `x ∘ adj(x) = det(x) 𝟏`.
    pub fn adjugate_poly(&self) -> &[MPoly] {
        &self.adjugate
    }

    /// `det(M ξ)` read as a polynomial in the chart variables.
    pub fn det_dual_poly(&self) -> MPoly {
        let xi = self.generic_element();
        let subs: Vec<MPoly> = self
            .det_metric
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&xi)
                    .fold(MPoly::zero(&self.vars), |acc, (c, v)| &acc + &v.scale_q(c))
            })
            .collect();
        self.det_poly().compose(&subs)
    }

    pub fn det_q(&self, x: &[Q]) -> Q {
        self.det_poly().eval_q(x)
    }

    pub fn coeffs_at(&self, x: &[Q]) -> Vec<Q> {
        self.coeffs.iter().map(|a| a.eval_q(x)).collect()
    }

    /// `rk(x)`: dimension of the span of `𝟏, x, x², …`.
    pub fn element_rank(&self, x: &[Q]) -> usize {
        let r = self.row.r;
        let cols: Vec<Vec<Q>> = (0..=r).map(|k| self.power(x, k)).collect();
        linalg::rank(&cols)
    }

    /// Minimal polynomial coefficients of a regular element by linear algebra.
    pub fn generic_min_poly(&self, x: &[Q]) -> Result<Vec<Q>, JordanError> {
        self.check_len(x.len())?;
        let r = self.row.r;
        let rk = self.element_rank(x);
        if rk < r {
            return Err(JordanError::RankDeficient {
                rank: rk,
                expected: r,
            });
        }
        let n = self.n();
        let pw: Vec<Vec<Q>> = (0..=r).map(|k| self.power(x, k)).collect();
        let a: Mat = (0..n)
            .map(|i| (0..=r).map(|k| pw[k][i].clone()).collect())
            .collect();
        let ns = linalg::nullspace(&a);
        debug_assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let lead = v[r].clone();
        // m(T) = T^r + Σ k_j T^j, a_j = (−1)^j k_{r−j}
        Ok((1..=r)
            .map(|j| {
                let k = &v[r - j] / &lead;
                if j % 2 == 0 {
                    k
                } else {
                    -k
                }
            })
            .collect())
    }

    pub fn inverse(&self, x: &[Q]) -> Result<Vec<Q>, JordanError> {
        self.check_len(x.len())?;
        let det = self.det_q(x);
        if det.is_zero() {
            return Err(JordanError::Singular);
        }
        Ok(self.adjugate.iter().map(|a| a.eval_q(x) / &det).collect())
    }

    /// `p^♯(x) = p(x^{-1}) det(x)` for `p` homogeneous of degree `k`.
    pub fn sharp(&self, p: &MPoly, k: u32) -> Result<MPoly, JordanError> {
        p.check_vars(self.det_poly())?;
        if !p.is_zero() && !(p.is_homogeneous() && p.degree() == Some(k)) {
            return Err(JordanError::Inconsistent);
        }
        if k as usize > self.row.r {
            return Err(JordanError::OutOfRange(format!("degree {} > rank", k)));
        }
        let det = self.det_poly();
        if k == 0 {
            return Ok(p * det);
        }
        let num = p.compose(&self.adjugate);
        num.div_exact(&det.pow(k - 1))
            .map_err(|_| JordanError::Inconsistent)
    }

    /// Number of negative eigenvalues of an invertible element of `Sym(m,ℝ)`.
    pub fn signature_class(&self, x: &[Q]) -> Result<usize, JordanError> {
        if !matches!(self.kind, Kind::SymR(_)) {
            return Err(JordanError::UnsupportedKind(format!(
                "signature classes need a euclidean matrix algebra, got {}",
                self.kind
            )));
        }
        self.check_len(x.len())?;
        let a = self.coeffs_at(x);
        if a.last().is_none_or(|d| d.is_zero()) {
            return Err(JordanError::Boundary);
        }
        // m(−T) has coefficient signs (1, a_1, …, a_r) up to a global sign.
        let mut seq = vec![Q::one()];
        seq.extend(a);
        let signs: Vec<bool> = seq
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .collect();
        Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
    }

    /// Leading `k × k` principal minor on `Sym(m,ℝ)`; `Δ_0 = 1`.
    pub fn principal_minor(&self, k: usize) -> Result<MPoly, JordanError> {
        let Kind::SymR(m) = self.kind else {
            return Err(JordanError::UnsupportedKind(format!(
                "principal minors are defined here for sym:m only, got {}",
                self.kind
            )));
        };
        if k > m {
            return Err(JordanError::OutOfRange(format!(
                "minor {} of a {}×{} matrix",
                k, m, m
            )));
        }
        let entry = |i: usize, j: usize| -> MPoly {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            let name = format!("x{}{}", a + 1, b + 1);
            MPoly::var(&self.vars, self.vars.position(&name).unwrap())
        };
        let mat: Vec<Vec<MPoly>> = (0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect();
        Ok(poly_det(&mat, &self.vars))
    }

    /// Real matrix of an element of `Sym(m,ℝ)` or `Mat(m,ℝ)`.
    pub fn as_real_matrix(&self, x: &[Q]) -> Option<Mat> {
        match self.kind {
            Kind::SymR(m) => {
                let mut a = linalg::zeros(m, m);
                let mut idx = 0;
                for i in 0..m {
                    for j in i..m {
                        a[i][j] = x[idx].clone();
                        a[j][i] = x[idx].clone();
                        idx += 1;
                    }
                }
                Some(a)
            }
            Kind::MatR(m) => Some(
                (0..m)
                    .map(|i| (0..m).map(|j| x[i * m + j].clone()).collect())
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn from_real_matrix(&self, a: &Mat) -> Option<Vec<Q>> {
        match self.kind {
            Kind::SymR(m) => Some(
                (0..m)
                    .flat_map(|i| (i..m).map(move |j| (i, j)))
                    .map(|(i, j)| a[i][j].clone())
                    .collect(),
            ),
            Kind::MatR(m) => Some((0..m * m).map(|k| a[k / m][k % m].clone()).collect()),
            _ => None,
        }
    }

    /// Complex matrix `(re, im)` of an element of `Herm(m,ℂ)`.
    pub fn as_complex_matrix(&self, x: &[Q]) -> Option<(Mat, Mat)> {
        let Kind::HermC(m) = self.kind else {
            return None;
        };
        let chart = MatrixChart::new(self.kind);
        let mut re = linalg::zeros(m, m);
        let mut im = linalg::zeros(m, m);
        for (b, c) in chart.basis.iter().zip(x) {
            for i in 0..m {
                for j in 0..m {
                    re[i][j] += &b[i][j].re * c;
                    im[i][j] += &b[i][j].im * c;
                }
            }
        }
        Some((re, im))
    }

    pub fn check_len(&self, got: usize) -> Result<(), JordanError> {
        if got == self.n() {
            Ok(())
        } else {
            Err(JordanError::BadLength {
                got,
                expected: self.n(),
            })
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Q> {
        exactalg::sample::rand_point(rng, self.n(), 4, 3)
    }

    /// Random element with full rank and nonzero determinant.
    pub fn random_regular<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Q> {
        for _ in 0..1000 {
            let x = self.random_element(rng);
            if !self.det_q(&x).is_zero() && self.element_rank(&x) == self.row.r {
                return x;
            }
        }
        panic!("no regular element found after 1000 attempts");
    }

    /// Random invertible element.
    pub fn random_invertible<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Q> {
        for _ in 0..1000 {
            let x = self.random_element(rng);
            if !self.det_q(&x).is_zero() {
                return x;
            }
        }
        panic!("no invertible element found after 1000 attempts");
    }

    /// Symbolic polynomial `det(x)` evaluated on polynomial coordinates.
    pub fn det_of(&self, x: &[MPoly]) -> MPoly {
        self.det_poly().compose(x)
    }

    /// Convenience: `det` as a `ParamPoly` constant at a point.
    pub fn det_param(&self, x: &[Q]) -> ParamPoly {
        self.det_poly().eval(x)
    }
}

/// Determinant of a square matrix of polynomials (Laplace expansion).
pub(crate) fn poly_det(a: &[Vec<MPoly>], vars: &Arc<Vars>) -> MPoly {
    let k = a.len();
    if k == 0 {
        return MPoly::one(vars);
    }
    if k == 1 {
        return a[0][0].clone();
    }
    let mut acc = MPoly::zero(vars);
    for j in 0..k {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let t = &a[0][j] * &poly_det(&minor, vars);
        if j % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}
