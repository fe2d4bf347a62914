use exactalg::{q, qi, MPoly, Q};
use jordan::{Algebra, JordanElement, JordanError, Kind};
use num_traits::One;

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&k| qi(k)).collect()
}

fn alg(spec: &str) -> std::sync::Arc<Algebra> {
    Algebra::new(Kind::parse(spec).unwrap()).unwrap()
}

#[test]
fn rpq_product() {
    let a = alg("rpq:2,1");
    let x = JordanElement::new(&a, qs(&[1, 1, 0])).unwrap();
    let y = JordanElement::new(&a, qs(&[2, 0, 3])).unwrap();
    assert_eq!(x.jordan_mul(&y).unwrap().coords(), qs(&[2, 2, 3]).as_slice());
    let e = JordanElement::unit(&a);
    assert_eq!(e.jordan_mul(&y).unwrap(), y);
}

#[test]
fn rpq_det_is_the_quadratic_form() {
    let a = alg("rpq:2,1");
    let v = a.vars();
    let x: Vec<MPoly> = (0..3).map(|i| MPoly::var(v, i)).collect();
    let expect = &(&(&x[0] * &x[0]) + &(&x[1] * &x[1])) - &(&x[2] * &x[2]);
    assert_eq!(a.det_poly(), &expect);
}

#[test]
fn rpq_inverse() {
    let a = alg("rpq:2,1");
    let x = JordanElement::new(&a, qs(&[2, 1, 0])).unwrap();
    let inv = x.inverse().unwrap();
    assert_eq!(inv.coords(), &[q(2, 5), q(-1, 5), qi(0)]);
    let sing = JordanElement::new(&a, qs(&[1, 0, 1])).unwrap();
    assert!(matches!(sing.inverse(), Err(JordanError::Singular)));
}

#[test]
fn sym2_product_and_quad_rep() {
    let a = alg("sym:2");
    // coordinates (x11, x12, x22)
    let x = JordanElement::new(&a, qs(&[1, 2, 0])).unwrap();
    let y = JordanElement::new(&a, qs(&[0, 1, 1])).unwrap();
    // xy + yx over 2 for [[1,2],[2,0]] and [[0,1],[1,1]]
    // xy = [[2,3],[0,2]], yx = [[2,0],[3,2]]
    assert_eq!(x.jordan_mul(&y).unwrap().coords(), &[qi(2), q(3, 2), qi(2)]);
    let d = JordanElement::new(&a, qs(&[1, 0, 2])).unwrap();
    let off = qs(&[0, 1, 0]);
    let p = d.quad_rep();
    let got = exactalg::linalg::matvec(&p, &off);
    assert_eq!(got, qs(&[0, 2, 0]));
    let one = JordanElement::unit(&a).quad_rep();
    assert_eq!(one, exactalg::linalg::identity(3));
}

#[test]
fn sym2_min_poly() {
    let a = alg("sym:2");
    let x = JordanElement::new(&a, qs(&[2, 0, 3])).unwrap();
    let m = x.generic_min_poly().unwrap();
    assert_eq!(m, qs(&[5, 6]));
    assert_eq!(x.trace(), qi(5));
    assert_eq!(x.det(), qi(6));
    let e = JordanElement::unit(&a);
    assert!(matches!(
        e.generic_min_poly(),
        Err(JordanError::RankDeficient { rank: 1, expected: 2 })
    ));
}

#[test]
fn unit_has_trace_rank_and_det_one() {
    for spec in [
        "sym:1", "sym:3", "mat:2", "mat:3", "herm:2", "herm:3", "rpq:2,1", "rpq:3,2",
    ] {
        let a = alg(spec);
        let e = a.unit();
        let c = a.coeffs_at(&e);
        assert_eq!(c[0], qi(a.rank() as i64), "{}", spec);
        assert_eq!(a.det_q(&e), Q::one(), "{}", spec);
        assert_eq!(a.inverse(&e).unwrap(), e);
    }
}

#[test]
fn sharp_examples() {
    let a = alg("sym:2");
    let v = a.vars();
    let (x11, x22) = (MPoly::var(v, 0), MPoly::var(v, 2));
    let delta = a.det_poly().clone();
    assert_eq!(a.sharp(&MPoly::one(v), 0).unwrap(), delta);
    assert_eq!(a.sharp(&delta, 2).unwrap(), MPoly::one(v));
    assert_eq!(a.sharp(&x11, 1).unwrap(), x22);
    let b = alg("sym:3");
    for k in 0..=3 {
        let m = b.principal_minor(k).unwrap();
        assert!(b.sharp(&m, k as u32).is_ok());
    }
}

#[test]
fn signature_examples() {
    let a = alg("sym:2");
    let e = JordanElement::unit(&a);
    assert_eq!(e.signature_class().unwrap(), 0);
    let x = JordanElement::new(&a, qs(&[1, 0, -1])).unwrap();
    assert_eq!(x.signature_class().unwrap(), 1);
    let b = alg("sym:3");
    let y = JordanElement::new(&b, qs(&[-1, 0, 0, -2, 0, -3])).unwrap();
    assert_eq!(y.signature_class().unwrap(), 3);
    let z = JordanElement::new(&a, qs(&[1, 0, 0])).unwrap();
    assert!(matches!(z.signature_class(), Err(JordanError::Boundary)));
    let r = alg("rpq:2,1");
    assert!(matches!(
        r.signature_class(&r.unit()),
        Err(JordanError::UnsupportedKind(_))
    ));
}

#[test]
fn principal_minors() {
    let a = alg("sym:2");
    let v = a.vars();
    let (x11, x12, x22) = (MPoly::var(v, 0), MPoly::var(v, 1), MPoly::var(v, 2));
    assert_eq!(a.principal_minor(0).unwrap(), MPoly::one(v));
    assert_eq!(a.principal_minor(1).unwrap(), x11);
    assert_eq!(a.principal_minor(2).unwrap(), &(&x11 * &x22) - &(&x12 * &x12));
    assert!(a.principal_minor(3).is_err());
    let b = alg("sym:3");
    assert_eq!(&b.principal_minor(3).unwrap(), b.det_poly());
    let w = b.vars();
    let m2 = &(&MPoly::var(w, 0) * &MPoly::var(w, 3)) - &MPoly::var(w, 1).pow(2);
    assert_eq!(b.principal_minor(2).unwrap(), m2);
}

#[test]
fn kind_parsing() {
    assert_eq!(Kind::parse("sym:3").unwrap(), Kind::SymR(3));
    assert_eq!(Kind::parse("rpq:2,1").unwrap(), Kind::Rpq(2, 1));
    assert!(matches!(
        Kind::parse("hermh:2"),
        Err(JordanError::UnsupportedKind(_))
    ));
    assert!(matches!(Kind::parse("banana:2"), Err(JordanError::Parse(_))));
    assert!(matches!(Kind::parse("sym:0"), Err(JordanError::Parse(_))));
    let big = Algebra::new(Kind::Rpq(9, 9));
    assert!(matches!(
        big,
        Err(JordanError::Exact(exactalg::ExactError::ResourceLimit(_)))
    ));
}

#[test]
fn mismatched_algebras_are_rejected() {
    let a = alg("sym:2");
    let b = alg("rpq:2,1");
    let x = JordanElement::unit(&a);
    let y = JordanElement::unit(&b);
    assert!(matches!(x.jordan_mul(&y), Err(JordanError::AlgebraMismatch)));
    assert!(JordanElement::new(&a, qs(&[1, 2])).is_err());
}

#[test]
fn registry_rows() {
    let rows = jordan::registry(4);
    for r in &rows {
        assert!(r.dimension_identity_holds(), "{:?}", r);
        if r.jtype == jordan::JordanType::II {
            assert_eq!(r.e, 0, "{}", r.family);
        }
    }
    for spec in ["sym:3", "mat:2", "herm:2", "rpq:2,1", "rpq:1,3", "rpq:3,0"] {
        let a = alg(spec);
        assert_eq!(a.n(), a.registry_row().n);
        assert!(a.registry_row().supported);
    }
    assert!(rows.iter().any(|r| !r.supported));
    let json = jordan::registry_json(3);
    let back: Vec<jordan::RegistryRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(back.len(), jordan::registry(3).len());
}
