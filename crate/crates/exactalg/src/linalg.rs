//! Small dense and sparse linear algebra over ℚ.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::ExactError;
use crate::rational::Q;

pub type Mat = Vec<Vec<Q>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn transpose(a: &Mat) -> Mat {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    let mut c = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    let t = &a[i][l] * &b[l][j];
                    c[i][j] += t;
                }
            }
        }
    }
    c
}

pub fn matvec(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, c: &Q) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// Row echelon form in place; returns pivot columns.
fn echelon(a: &mut Mat) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Mat) -> usize {
    let mut b = a.clone();
    echelon(&mut b).len()
}

pub fn det(a: &Mat) -> Q {
    let n = a.len();
    let mut b = a.clone();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !b[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            b.swap(p, c);
            d = -d;
        }
        d *= &b[c][c];
        let inv = b[c][c].recip();
        for i in c + 1..n {
            if !b[i][c].is_zero() {
                let f = &b[i][c] * &inv;
                for j in c..n {
                    let t = &f * &b[c][j];
                    b[i][j] -= t;
                }
            }
        }
    }
    d
}

pub fn inverse(a: &Mat) -> Result<Mat, ExactError> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = echelon(&mut aug);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(ExactError::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `a x = b` for square nonsingular `a`.
pub fn solve(a: &Mat, b: &[Q]) -> Result<Vec<Q>, ExactError> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = echelon(&mut aug);
    if piv.len() < n || piv.iter().any(|&p| p >= n) {
        return Err(ExactError::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of the right null space.
pub fn nullspace(a: &Mat) -> Vec<Vec<Q>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut b = a.clone();
    let piv = echelon(&mut b);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -b[r][f].clone();
            }
            v
        })
        .collect()
}

/// Incrementally built reduced basis of sparse vectors indexed by `K`.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Copy> {
    // pivot key -> row normalised to 1 at the pivot, reduced at other pivots
    rows: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Copy> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Copy> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &BTreeMap<K, Q>) -> BTreeMap<K, Q> {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                for (k, x) in row {
                    let e = v.entry(*k).or_insert_with(Q::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &BTreeMap<K, Q>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns whether it was independent.
    pub fn insert(&mut self, v: &BTreeMap<K, Q>) -> bool {
        let r = self.reduce(v);
        let Some((&p, c)) = r.iter().next_back() else {
            return false;
        };
        let inv = c.recip();
        let r: BTreeMap<K, Q> = r.iter().map(|(k, x)| (*k, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                for (k, x) in &r {
                    let e = row.entry(*k).or_insert_with(Q::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        self.rows.insert(p, r);
        true
    }
}
