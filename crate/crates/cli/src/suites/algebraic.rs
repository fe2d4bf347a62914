//! Suites on a single algebra or polynomial ring: Leibniz expansion,
//! Jordan axioms, Bernstein polynomials and the main `D_{s,t}` identity.

use std::sync::Arc;

use detpower::{bernstein_poly, extract_dst, DetCalculus};
use exactalg::sample::{rand_homogeneous, rand_poly};
use exactalg::{
    apply_diffop, leibnitz_expand, leibnitz_flat_form, q, qi, LeibnitzData, MPoly, Param, ParamPoly, Vars,
};
use jordan::{Algebra, JordanType, Kind};
use num_traits::Zero;

use crate::check::{Check, Outcome, Tally};

pub fn leibnitz(n: usize, max_degree: u32) -> Check {
    Check::new(
        format!("leibnitz/n={}", n),
        "Leibniz rule for P(∂)(fg) through a Fischer-dual basis of the derivative space of P",
        move |rng| {
            let v = Vars::indexed("x", n)?;
            let mut t = Tally::default();
            for k in 0..100u32 {
                let deg = 1 + k % max_degree.max(1);
                let mut bold = rand_homogeneous(rng, &v, deg, 3);
                if bold.is_zero() {
                    bold = MPoly::var(&v, 0).pow(deg);
                }
                let f = rand_poly(rng, &v, max_degree, 4);
                let g = rand_poly(rng, &v, max_degree, 4);
                let data = LeibnitzData::new(&bold)?;
                let direct = apply_diffop(&bold, &(&f * &g))?;
                let expanded = leibnitz_expand(&data, &f, &g)?;
                let flat = leibnitz_flat_form(&data, &f, &g)?;
                t.record(expanded == direct && flat == direct, || {
                    format!("P={} f={} g={}", bold, f, g)
                });
            }
            Ok(t.outcome())
        },
    )
}

/// Every registry row satisfies its dimension identity.
pub fn registry_dimension() -> Check {
    Check::new(
        "jordan-axioms/registry-dimension",
        "dimension identity 2n = 2r₊(e+1) + r₊(r₊-1)d, and n = r + r(r-1)d/2 in the euclidean case",
        |_| {
            let mut t = Tally::default();
            for row in jordan::registry(6) {
                // the euclidean closed form has no off-diagonal Peirce part
                let euclid = row.jtype != JordanType::I || row.n == row.r + row.r * (row.r - 1) * row.d / 2;
                let ok = row.dimension_identity_holds() && euclid;
                t.record(ok, || format!("{:?}", row));
            }
            Ok(t.outcome())
        },
    )
}

pub fn jordan_axioms(a: &Arc<Algebra>) -> Vec<Check> {
    let k = a.kind();
    let mut out = Vec::new();
    let alg = a.clone();
    out.push(Check::new(
        format!("jordan-axioms/{}/jordan-identity", k),
        "Jordan identity (xy)x² = x(yx²), commutativity and unit",
        move |rng| {
            let e = alg.unit();
            let mut t = Tally::default();
            for _ in 0..100 {
                let x = alg.random_element(rng);
                let y = alg.random_element(rng);
                let x2 = alg.mul(&x, &x);
                let ok = alg.mul(&alg.mul(&x, &y), &x2) == alg.mul(&x, &alg.mul(&y, &x2))
                    && alg.mul(&x, &y) == alg.mul(&y, &x)
                    && alg.mul(&e, &x) == x;
                t.record(ok, || format!("x={:?} y={:?}", x, y));
            }
            Ok(t.outcome())
        },
    ));
    let alg = a.clone();
    out.push(Check::new(
        format!("jordan-axioms/{}/det-homogeneous", k),
        "det is homogeneous of degree r; generic coefficients a_j of degree j",
        move |_| {
            let mut t = Tally::default();
            let d = alg.det_poly();
            t.record(
                d.is_homogeneous() && d.degree() == Some(alg.rank() as u32),
                || format!("det = {}", d),
            );
            for (j, c) in alg.generic_coeffs().iter().enumerate() {
                t.record(c.is_homogeneous() && c.degree() == Some(j as u32 + 1), || {
                    format!("a_{} = {}", j + 1, c)
                });
            }
            Ok(t.outcome())
        },
    ));
    let alg = a.clone();
    out.push(Check::new(
        format!("jordan-axioms/{}/det-quadratic-representation", k),
        "det(P(x)y) = det(x)² det(y)",
        move |rng| {
            let mut t = Tally::default();
            for _ in 0..100 {
                let x = alg.random_element(rng);
                let y = alg.random_element(rng);
                let dx = alg.det_q(&x);
                let ok = alg.det_q(&alg.quad_apply(&x, &y)) == &dx * &dx * alg.det_q(&y);
                t.record(ok, || format!("x={:?} y={:?}", x, y));
            }
            Ok(t.outcome())
        },
    ));
    let alg = a.clone();
    out.push(Check::new(
        format!("jordan-axioms/{}/minimal-polynomial", k),
        "generic minimal polynomial annihilates regular elements",
        move |rng| {
            let r = alg.rank();
            let mut t = Tally::default();
            for _ in 0..40 {
                let x = alg.random_regular(rng);
                let c = alg.generic_min_poly(&x)?;
                let mut acc = alg.power(&x, r);
                for (j, cj) in c.iter().enumerate() {
                    let k = j + 1;
                    let sign = if k % 2 == 1 { -qi(1) } else { qi(1) };
                    for (s, p) in acc.iter_mut().zip(alg.power(&x, r - k)) {
                        *s += &sign * cj * p;
                    }
                }
                let ok = c == alg.coeffs_at(&x) && acc.iter().all(Zero::is_zero);
                t.record(ok, || format!("x={:?}", x));
            }
            Ok(t.outcome())
        },
    ));
    let alg = a.clone();
    out.push(Check::new(
        format!("jordan-axioms/{}/inverse", k),
        "x·x⁻¹ = e and P(x)x⁻¹ = x",
        move |rng| {
            let mut t = Tally::default();
            for _ in 0..40 {
                let x = alg.random_invertible(rng);
                let xi = alg.inverse(&x)?;
                let ok = alg.mul(&x, &xi) == alg.unit() && alg.quad_apply(&x, &xi) == x;
                t.record(ok, || format!("x={:?}", x));
            }
            Ok(t.outcome())
        },
    ));
    out
}

/// `b(s)` recomputed from its closed product, independent of the library's
/// own comparison value.
fn closed_form_b(k: Kind, row_r: usize, row_d: usize) -> ParamPoly {
    let s = ParamPoly::param(Param::S);
    match k {
        Kind::Rpq(p, qq) => {
            // 2s(2s + n − 2)
            let n = (p + qq) as i64;
            &(&s * &ParamPoly::from_int(2)) * &(&s.scale(&qi(2)) + &ParamPoly::from_int(n - 2))
        }
        _ => {
            let mut acc = ParamPoly::one();
            for j in 0..row_r {
                acc = &acc * &(&s + &ParamPoly::from_q(q((j * row_d) as i64, 2)));
            }
            acc
        }
    }
}

pub fn bernstein(a: &Arc<Algebra>) -> Check {
    let alg = a.clone();
    Check::new(
        format!("bernstein/{}", a.kind()),
        "Bernstein identity det(∂) det(x)^s = b(s) det(x)^(s-1)",
        move |_| {
            let rep = bernstein_poly(&alg)?;
            let row = alg.registry_row();
            let want = closed_form_b(alg.kind(), row.r, row.d);
            let ok = rep.matches && rep.b == want;
            Ok(Outcome {
                passed: ok,
                residual: if ok { 0.0 } else { 1.0 },
                detail: Some(format!("b(s) = {} ({})", rep.b, rep.convention)),
            })
        },
    )
}

/// `det_x det_y · det(∂x−∂y)[det_x^k det_y^l f] = det_x^k det_y^l · D_{k,l} f`.
fn brute_force(
    calc: &DetCalculus,
    f: &MPoly,
    d: &MPoly,
    k: u32,
    l: u32,
) -> Result<bool, exactalg::ExactError> {
    let dx = calc.det_x();
    let dy = calc.det_y().expect("pair calculus");
    let g = &(&dx.pow(k) * &dy.pow(l)) * f;
    let lhs = &(dx * dy) * &apply_diffop(&calc.wave_symbol(), &g)?;
    let dkl = d
        .eval_param(Param::S, &qi(k as i64))
        .eval_param(Param::T, &qi(l as i64));
    Ok(lhs == &(&dx.pow(k) * &dy.pow(l)) * &dkl)
}

pub fn main_identity(a: &Arc<Algebra>, max_degree: u32) -> Check {
    let alg = a.clone();
    Check::new(
        format!("main-identity/{}", a.kind()),
        "det(∂x-∂y)(det(x)^(s+1) det(y)^(t+1) f) = det(x)^s det(y)^t D_{s,t} f",
        move |rng| {
            let r = alg.rank() as u32;
            let calc = DetCalculus::pair(&alg)?;
            let mut t = Tally::default();
            for _ in 0..50 {
                let f = rand_poly(rng, calc.vars(), max_degree, 3);
                let d = extract_dst(&calc, &f)?;
                t.record(d.param_degree() <= r, || format!("deg_(s,t) D f > r for f={}", f));
                for (k, l) in (0..5).flat_map(|k| (0..5).map(move |l| (k, l))) {
                    let ok = brute_force(&calc, &f, &d, k, l)?;
                    t.record(ok, || format!("f={} (s,t)=({},{})", f, k, l));
                }
            }
            Ok(t.outcome())
        },
    )
}
