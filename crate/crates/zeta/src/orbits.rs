//! Coefficients `u_ij(x)` of the functional equation for the orbit
//! integrals `Z_i(f, s)` of a euclidean algebra, defined by
//! `Σ_i y^i u_ij(x) = ξ^{−(r−j)} P_j(ξx, y) P_{r−j}(1, ξxy)`,
//! `ξ = (√−1)^{d(r+1)}`, with `P_j(x, y) = (x+y)^j` for even `d` and
//! `(x+y)^{⌊j/2⌋}(y−x)^{j−⌊j/2⌋}` for odd `d`.
//!
//! Summing the columns with signs gives the functional equation of
//! `Z_{s,±}` independently of the case-by-case matrices, which makes it an
//! oracle for [`crate::euclidean_matrices`].

use std::f64::consts::PI;

use exactalg::{q_to_f64, qi, Q};
use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};

use crate::matrices::EuclideanFE;
use crate::zmaps::{orbit_matrix, ZetaBasis};

/// Gaussian rational.
pub type GQ = Complex<Q>;

fn gq(re: i64, im: i64) -> GQ {
    Complex::new(qi(re), qi(im))
}

fn to_c64(z: &GQ) -> Complex64 {
    Complex64::new(q_to_f64(&z.re), q_to_f64(&z.im))
}

/// Bivariate polynomial, `c[i][k]` multiplies `y^i x^k`.
#[derive(Clone, Debug, PartialEq)]
struct Poly2 {
    c: Vec<Vec<GQ>>,
}

impl Poly2 {
    fn zero(deg: usize) -> Poly2 {
        Poly2 {
            c: vec![vec![GQ::zero(); deg + 1]; deg + 1],
        }
    }

    fn monomial(deg: usize, yi: usize, xk: usize, a: GQ) -> Poly2 {
        let mut p = Poly2::zero(deg);
        p.c[yi][xk] = a;
        p
    }

    fn add(&self, o: &Poly2) -> Poly2 {
        let mut p = self.clone();
        for (i, row) in o.c.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                p.c[i][k] = &p.c[i][k] + a;
            }
        }
        p
    }

    fn scale(&self, a: &GQ) -> Poly2 {
        Poly2 {
            c: self
                .c
                .iter()
                .map(|row| row.iter().map(|b| b * a).collect())
                .collect(),
        }
    }

    /// Product, truncated to the common degree bound (never hit here).
    fn mul(&self, o: &Poly2) -> Poly2 {
        let deg = self.c.len() - 1;
        let mut p = Poly2::zero(deg);
        for (i, row) in self.c.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, orow) in o.c.iter().enumerate() {
                    for (l, b) in orow.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        assert!(i + j <= deg && k + l <= deg, "degree bound exceeded");
                        p.c[i + j][k + l] = &p.c[i + j][k + l] + a * b;
                    }
                }
            }
        }
        p
    }

    fn pow(&self, e: usize) -> Poly2 {
        let deg = self.c.len() - 1;
        (0..e).fold(Poly2::monomial(deg, 0, 0, gq(1, 0)), |acc, _| acc.mul(self))
    }
}

/// `P_j(a, b)` for bivariate `a`, `b`.
fn p_j(j: usize, d: usize, a: &Poly2, b: &Poly2) -> Poly2 {
    let sum = a.add(b);
    if d % 2 == 0 {
        return sum.pow(j);
    }
    let h = j / 2;
    let diff = b.add(&a.scale(&gq(-1, 0)));
    sum.pow(h).mul(&diff.pow(j - h))
}

fn i_pow(k: usize) -> GQ {
    match k % 4 {
        0 => gq(1, 0),
        1 => gq(0, 1),
        2 => gq(-1, 0),
        _ => gq(0, -1),
    }
}

/// The matrix `u_ij(x)` for constants `(r, d)`, exactly.
#[derive(Clone, Debug)]
pub struct OrbitCoefficients {
    pub r: usize,
    pub d: usize,
    pub n: usize,
    /// `ξ = (√−1)^{d(r+1)}`.
    pub xi: GQ,
    /// `u[i][j][k]` is the coefficient of `x^k` in `u_ij(x)`.
    pub u: Vec<Vec<Vec<GQ>>>,
}

impl OrbitCoefficients {
    pub fn new(r: usize, d: usize) -> OrbitCoefficients {
        let n = r + r * (r - 1) * d / 2;
        let xi_k = (d * (r + 1)) % 4;
        let xi = i_pow(xi_k);
        let one = Poly2::monomial(r, 0, 0, gq(1, 0));
        let y = Poly2::monomial(r, 1, 0, gq(1, 0));
        let xi_x = Poly2::monomial(r, 0, 1, xi.clone());
        let xi_xy = Poly2::monomial(r, 1, 1, xi.clone());
        let mut u = vec![vec![vec![GQ::zero(); r + 1]; r + 1]; r + 1];
        for j in 0..=r {
            // ξ^{−(r−j)} for a fourth root of unity.
            let pre = i_pow((4 - xi_k) * (r - j));
            let col = p_j(j, d, &xi_x, &y).mul(&p_j(r - j, d, &one, &xi_xy)).scale(&pre);
            for (i, row) in col.c.iter().enumerate() {
                u[i][j] = row.clone();
            }
        }
        OrbitCoefficients { r, d, n, xi, u }
    }

    /// `Σ_i y^i u_ij(x)` from the stored coefficients.
    pub fn generating_sum(&self, j: usize, x: &GQ, y: &GQ) -> GQ {
        let mut acc = GQ::zero();
        let mut yp = GQ::one();
        for i in 0..=self.r {
            let mut xp = GQ::one();
            for k in 0..=self.r {
                acc = acc + &yp * &xp * &self.u[i][j][k];
                xp = &xp * x;
            }
            yp = &yp * y;
        }
        acc
    }

    /// `ξ^{−(r−j)} P_j(ξx, y) P_{r−j}(1, ξxy)` evaluated directly.
    pub fn generating_closed_form(&self, j: usize, x: &GQ, y: &GQ) -> GQ {
        let d = self.d;
        let pj = |k: usize, a: GQ, b: GQ| -> GQ {
            let sum = &a + &b;
            let powc = |z: &GQ, e: usize| (0..e).fold(GQ::one(), |acc, _| acc * z);
            if d % 2 == 0 {
                powc(&sum, k)
            } else {
                let h = k / 2;
                powc(&sum, h) * powc(&(b - a), k - h)
            }
        };
        let xi_inv = Complex::new(self.xi.re.clone(), -self.xi.im.clone());
        let pre = (0..self.r - j).fold(GQ::one(), |acc, _| acc * &xi_inv);
        pre * pj(j, &self.xi * x, y.clone()) * pj(self.r - j, GQ::one(), &self.xi * x * y)
    }

    /// `u_ij(x)` at a complex point.
    pub fn eval_u(&self, x: Complex64) -> Vec<Vec<Complex64>> {
        self.u
            .iter()
            .map(|row| {
                row.iter()
                    .map(|poly| {
                        poly.iter()
                            .rev()
                            .fold(Complex64::zero(), |acc, c| acc * x + to_c64(c))
                    })
                    .collect()
            })
            .collect()
    }

    /// Coefficients of `𝓕(Z_{s,±})` over `Z_0(·, −s−n/r), …, Z_r(·, −s−n/r)`
    /// divided by the common factor `(2π)^{−rs'} Γ_Ω(s')`, `s' = s + n/r`:
    /// `e(rs'/2) Σ_i (±1)^i u_ij(e(−s'/2))`.
    pub fn derived_rows(&self, s: f64) -> [Vec<Complex64>; 2] {
        let sp = s + self.n as f64 / self.r as f64;
        let x = Complex64::from_polar(1.0, -PI * sp);
        let phase = Complex64::from_polar(1.0, PI * self.r as f64 * sp);
        let u = self.eval_u(x);
        let row = |sign: bool| -> Vec<Complex64> {
            (0..=self.r)
                .map(|j| {
                    let sum: Complex64 = (0..=self.r)
                        .map(|i| if sign && i % 2 == 1 { -u[i][j] } else { u[i][j] })
                        .sum();
                    phase * sum
                })
                .collect()
        };
        [row(false), row(true)]
    }
}

/// The same rows as [`OrbitCoefficients::derived_rows`] read off a displayed
/// functional equation: `K · T(s) · e(rs'/4) · 𝐌(s) · (basis rows)`.
pub fn displayed_rows(fe: &EuclideanFE, s: f64) -> [Vec<Complex64>; 2] {
    let sp = s + fe.n as f64 / fe.r as f64;
    let scalar = fe.eval_scalar_without_gamma(s) * Complex64::from_polar(1.0, 0.5 * PI * fe.r as f64 * sp);
    let m = fe.eval_matrix(s);
    let basis = orbit_matrix(fe.target, fe.r);
    let row = |e: usize| -> Vec<Complex64> {
        (0..=fe.r)
            .map(|j| scalar * (m[e][0] * q_to_f64(&basis[0][j]) + m[e][1] * q_to_f64(&basis[1][j])))
            .collect()
    };
    [row(0), row(1)]
}

/// Largest entrywise deviation between derived and displayed rows, relative
/// to the size of the derived rows.
pub fn display_residual(fe: &EuclideanFE, s: f64) -> f64 {
    let oc = OrbitCoefficients::new(fe.r, fe.d);
    let a = oc.derived_rows(s);
    let b = displayed_rows(fe, s);
    let scale = a.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max);
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

/// The 2×2 matrix `𝐌` that the orbit coefficients force in `basis`, after
/// dividing by the scalar `c` (typically `K · T(s) · e(rs'/4)`), together
/// with the residual of fitting the rows into that basis.
pub fn implied_matrix(
    oc: &OrbitCoefficients,
    basis: ZetaBasis,
    s: f64,
    c: Complex64,
) -> ([[Complex64; 2]; 2], f64) {
    let rows = oc.derived_rows(s);
    let b = orbit_matrix(basis, oc.r);
    let b = [
        b[0].iter().map(q_to_f64).collect::<Vec<_>>(),
        b[1].iter().map(q_to_f64).collect::<Vec<_>>(),
    ];
    let det = b[0][0] * b[1][1] - b[1][0] * b[0][1];
    let mut m = [[Complex64::zero(); 2]; 2];
    let mut res = 0.0f64;
    for e in 0..2 {
        let v = &rows[e];
        let alpha = (v[0] * b[1][1] - v[1] * b[1][0]) / det;
        let beta = (v[1] * b[0][0] - v[0] * b[0][1]) / det;
        for j in 0..=oc.r {
            res = res.max((alpha * b[0][j] + beta * b[1][j] - v[j]).norm());
        }
        m[e] = [alpha / c, beta / c];
    }
    (m, res)
}
