use serde::{Deserialize, Serialize};

use crate::kind::Kind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JordanType {
    I,
    II,
    III,
    IV,
}

/// One instantiated row of the classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryRow {
    pub family: String,
    pub jtype: JordanType,
    pub params: Vec<usize>,
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub e: usize,
    pub v_plus: String,
    pub r_plus: usize,
    pub d_plus: usize,
    /// Executable arithmetic is available (otherwise metadata only).
    pub supported: bool,
    /// Concrete kind, when supported.
    pub kind: Option<Kind>,
}

impl RegistryRow {
    #[allow(clippy::too_many_arguments)]
    fn new(
        family: &str,
        jtype: JordanType,
        params: Vec<usize>,
        (n, r, d, e): (usize, usize, usize, usize),
        v_plus: String,
        (r_plus, d_plus): (usize, usize),
        kind: Option<Kind>,
    ) -> RegistryRow {
        RegistryRow {
            family: family.to_string(),
            jtype,
            params,
            n,
            r,
            d,
            e,
            v_plus,
            r_plus,
            d_plus,
            supported: kind.is_some(),
            kind,
        }
    }

    /// `r₊(e+1) + r₊(r₊−1)d/2`, doubled to stay integral.
    pub fn twice_dimension_formula(&self) -> usize {
        2 * self.r_plus * (self.e + 1) + self.r_plus * (self.r_plus - 1) * self.d
    }

    pub fn dimension_identity_holds(&self) -> bool {
        self.twice_dimension_formula() == 2 * self.n
    }

    pub(crate) fn for_kind(kind: Kind) -> RegistryRow {
        use JordanType::*;
        match kind {
            Kind::SymR(m) => RegistryRow::new(
                "Sym(m,R)",
                I,
                vec![m],
                (m * (m + 1) / 2, m, 1, 0),
                format!("Sym({},R)", m),
                (m, 1),
                Some(kind),
            ),
            Kind::HermC(m) => RegistryRow::new(
                "Herm(m,C)",
                I,
                vec![m],
                (m * m, m, 2, 0),
                format!("Herm({},C)", m),
                (m, 2),
                Some(kind),
            ),
            Kind::MatR(m) => RegistryRow::new(
                "Mat(m,R)",
                II,
                vec![m],
                (m * m, m, 2, 0),
                format!("Sym({},R)", m),
                (m, 1),
                Some(kind),
            ),
            Kind::Rpq(p, q) => {
                let n = p + q;
                if q == 0 {
                    RegistryRow::new(
                        "R^{k,0}",
                        III,
                        vec![n],
                        (n, 2, 0, n - 1),
                        "R^{1,0}".into(),
                        (1, 0),
                        Some(kind),
                    )
                } else if p == 1 {
                    RegistryRow::new(
                        "R^{1,k-1}",
                        I,
                        vec![n],
                        (n, 2, n - 2, 0),
                        format!("R^{{1,{}}}", n - 1),
                        (2, n - 2),
                        Some(kind),
                    )
                } else {
                    RegistryRow::new(
                        "R^{p,q}",
                        II,
                        vec![p, q],
                        (n, 2, n - 2, 0),
                        format!("R^{{1,{}}}", q),
                        (2, q - 1),
                        Some(kind),
                    )
                }
            }
        }
    }
}

/// Instantiate every family of the classification table for parameters up
/// to `max_param`.
pub fn registry(max_param: usize) -> Vec<RegistryRow> {
    use JordanType::*;
    let mut rows = Vec::new();
    let max = max_param.max(3);
    for m in 1..=max {
        rows.push(RegistryRow::for_kind(Kind::SymR(m)));
        rows.push(RegistryRow::for_kind(Kind::HermC(m)));
        rows.push(RegistryRow::new(
            "Herm(m,H)",
            I,
            vec![m],
            (m * (2 * m - 1), m, 4, 0),
            format!("Herm({},H)", m),
            (m, 4),
            None,
        ));
        rows.push(RegistryRow::for_kind(Kind::MatR(m)));
        rows.push(RegistryRow::new(
            "Skew(2m,R)",
            II,
            vec![m],
            (m * (2 * m - 1), m, 4, 0),
            format!("Herm({},C)", m),
            (m, 2),
            None,
        ));
        rows.push(RegistryRow::new(
            "Sym(2l,R)∩Mat(l,H)",
            III,
            vec![m],
            (m * (2 * m + 1), 2 * m, 4, 2),
            format!("Herm({},C)", m),
            (m, 2),
            None,
        ));
        rows.push(RegistryRow::new(
            "Mat(l,H)",
            III,
            vec![m],
            (4 * m * m, 2 * m, 8, 3),
            format!("Herm({},H)", m),
            (m, 4),
            None,
        ));
        rows.push(RegistryRow::new(
            "Sym(m,C)",
            IV,
            vec![m],
            (m * (m + 1), 2 * m, 2, 1),
            format!("Sym({},R)", m),
            (m, 1),
            None,
        ));
        rows.push(RegistryRow::new(
            "Mat(m,C)",
            IV,
            vec![m],
            (2 * m * m, 2 * m, 4, 1),
            format!("Herm({},C)", m),
            (m, 2),
            None,
        ));
        rows.push(RegistryRow::new(
            "Skw(2m,C)",
            IV,
            vec![m],
            (2 * m * (2 * m - 1), 2 * m, 8, 1),
            format!("Herm({},H)", m),
            (m, 4),
            None,
        ));
    }
    for k in 3..=max + 2 {
        rows.push(RegistryRow::for_kind(Kind::Rpq(1, k - 1)));
        rows.push(RegistryRow::new(
            "C^k",
            IV,
            vec![k],
            (2 * k, 4, 2 * (k - 2), 1),
            format!("R^{{1,{}}}", k - 1),
            (2, k - 2),
            None,
        ));
    }
    for k in 2..=max + 2 {
        rows.push(RegistryRow::for_kind(Kind::Rpq(k, 0)));
    }
    for p in 2..=max {
        for q in 1..=max {
            rows.push(RegistryRow::for_kind(Kind::Rpq(p, q)));
        }
    }
    rows.push(RegistryRow::new(
        "Herm(3,O)",
        I,
        vec![],
        (27, 3, 8, 0),
        "Herm(3,O)".into(),
        (3, 8),
        None,
    ));
    rows.push(RegistryRow::new(
        "Herm(3,O_s)",
        II,
        vec![],
        (27, 3, 8, 0),
        "Herm(3,O)".into(),
        (3, 4),
        None,
    ));
    // Rank and d as implied by r = 2r₊ and the dimension count.
    rows.push(RegistryRow::new(
        "Herm(3,O)_C",
        IV,
        vec![],
        (54, 6, 16, 1),
        "Herm(3,O)".into(),
        (3, 8),
        None,
    ));
    rows
}

pub fn registry_json(max_param: usize) -> String {
    serde_json::to_string_pretty(&registry(max_param)).expect("registry serialises")
}
