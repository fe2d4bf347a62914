//! Bookkeeping between the orbit integrals `Z_0, …, Z_r` of a euclidean
//! algebra and the combinations `Z_{s,±}` and `Z^e`, `Z^o`.
//!
//! A combination `α B_0 + β B_1` of basis distributions is stored as its
//! coefficient pair; [`to_orbit`] expands it over the `Z_i`.

use exactalg::{qi, Q};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ZetaBasis {
    /// `(Z_{s,+}, Z_{s,−})`, `Z_{s,±} = Σ (±1)^i Z_i`.
    PlusMinus,
    /// `(Z^e, Z^o)`, `Z^e = Σ_k (−1)^k Z_{2k}`, `Z^o = Σ_k (−1)^k Z_{2k+1}`.
    EvenOdd,
}

/// Rows of the basis distributions expressed over `Z_0, …, Z_r`.
pub fn orbit_matrix(basis: ZetaBasis, r: usize) -> [Vec<Q>; 2] {
    let sign = |k: usize| if k % 2 == 0 { qi(1) } else { qi(-1) };
    match basis {
        ZetaBasis::PlusMinus => [(0..=r).map(|_| qi(1)).collect(), (0..=r).map(sign).collect()],
        ZetaBasis::EvenOdd => {
            let mut e = vec![Q::zero(); r + 1];
            let mut o = vec![Q::zero(); r + 1];
            for i in 0..=r {
                if i % 2 == 0 {
                    e[i] = sign(i / 2);
                } else {
                    o[i] = sign(i / 2);
                }
            }
            [e, o]
        }
    }
}

/// `α B_0 + β B_1` as coefficients of `Z_0, …, Z_r`.
pub fn to_orbit(basis: ZetaBasis, r: usize, coeffs: &[Q; 2]) -> Vec<Q> {
    let m = orbit_matrix(basis, r);
    (0..=r)
        .map(|i| &coeffs[0] * &m[0][i] + &coeffs[1] * &m[1][i])
        .collect()
}

/// Inverse of [`to_orbit`]: the unique pair with the given expansion, or
/// `None` when `v` is not in the span.
pub fn from_orbit(basis: ZetaBasis, r: usize, v: &[Q]) -> Option<[Q; 2]> {
    if r == 0 || v.len() != r + 1 {
        return None;
    }
    let m = orbit_matrix(basis, r);
    // The columns of Z_0 and Z_1 are independent in both bases.
    let det = &m[0][0] * &m[1][1] - &m[1][0] * &m[0][1];
    let alpha = (&v[0] * &m[1][1] - &v[1] * &m[1][0]) / &det;
    let beta = (&m[0][0] * &v[1] - &m[0][1] * &v[0]) / &det;
    let c = [alpha, beta];
    (to_orbit(basis, r, &c) == v).then_some(c)
}

/// Re-express a combination in the other basis, when possible.
pub fn change_basis(from: ZetaBasis, to: ZetaBasis, r: usize, coeffs: &[Q; 2]) -> Option<[Q; 2]> {
    from_orbit(to, r, &to_orbit(from, r, coeffs))
}
