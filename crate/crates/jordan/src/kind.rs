use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::JordanError;

/// Algebra families with executable arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    SymR(usize),
    MatR(usize),
    HermC(usize),
    Rpq(usize, usize),
}

impl Kind {
    /// Parse `sym:3`, `mat:2`, `herm:2` or `rpq:2,1`.
    ///
    /// Names of metadata-only families parse to `UnsupportedKind`.
    pub fn parse(spec: &str) -> Result<Kind, JordanError> {
        let bad = || JordanError::Parse(spec.to_string());
        let (name, args) = spec.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = |k: fn(usize) -> Kind| -> Result<Kind, JordanError> {
            match nums.as_slice() {
                [m] if *m >= 1 => Ok(k(*m)),
                _ => Err(bad()),
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "sym" | "symr" => one(Kind::SymR),
            "mat" | "matr" => one(Kind::MatR),
            "herm" | "hermc" => one(Kind::HermC),
            "rpq" => match nums.as_slice() {
                [p, q] if p + q >= 2 => Ok(Kind::Rpq(*p, *q)),
                _ => Err(bad()),
            },
            "hermh" | "skew" | "symc" | "matc" | "skwc" | "cplx" | "math" | "symh" | "herm3o" | "herm3os"
            | "herm3oc" => Err(JordanError::UnsupportedKind(spec.to_string())),
            _ => Err(bad()),
        }
    }

    /// Dimension of the underlying real vector space.
    pub fn dim(&self) -> usize {
        match *self {
            Kind::SymR(m) => m * (m + 1) / 2,
            Kind::MatR(m) | Kind::HermC(m) => m * m,
            Kind::Rpq(p, q) => p + q,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::SymR(m) => write!(f, "sym:{}", m),
            Kind::MatR(m) => write!(f, "mat:{}", m),
            Kind::HermC(m) => write!(f, "herm:{}", m),
            Kind::Rpq(p, q) => write!(f, "rpq:{},{}", p, q),
        }
    }
}
