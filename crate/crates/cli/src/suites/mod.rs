pub mod algebraic;
pub mod functional;
pub mod operators;

use std::sync::Arc;

use exactalg::Vars;
use jordan::{Algebra, Kind};

use crate::check::Check;
use crate::config::{Suite, SuiteConfig};
use crate::error::CliError;
use operators::has_explicit_operators;

/// Algebras used when no `--algebra` is given.
pub fn default_algebras(s: Suite) -> Vec<Kind> {
    use Kind::*;
    match s {
        Suite::Leibnitz | Suite::ZetaMatrices | Suite::All => Vec::new(),
        Suite::JordanAxioms => vec![
            SymR(1),
            SymR(2),
            SymR(3),
            MatR(2),
            MatR(3),
            HermC(2),
            HermC(3),
            Rpq(2, 1),
            Rpq(2, 2),
            Rpq(3, 1),
        ],
        Suite::Bernstein => vec![
            SymR(1),
            SymR(2),
            SymR(3),
            MatR(2),
            HermC(2),
            Rpq(2, 1),
            Rpq(2, 2),
            Rpq(3, 2),
        ],
        Suite::MainIdentity => vec![SymR(2), MatR(2), Rpq(2, 1), Rpq(2, 2)],
        Suite::FourierWeyl => vec![
            SymR(2),
            SymR(3),
            MatR(2),
            HermC(2),
            Rpq(2, 1),
            Rpq(2, 2),
            Rpq(3, 1),
        ],
        Suite::Covariance => vec![
            SymR(2),
            SymR(3),
            MatR(2),
            HermC(2),
            Rpq(2, 1),
            Rpq(2, 2),
            Rpq(3, 1),
        ],
        Suite::Brackets => vec![Rpq(2, 1), Rpq(2, 2), Rpq(3, 1)],
        Suite::ZetaNumeric => vec![Rpq(2, 1)],
    }
}

/// Dimensions of the Leibniz suite when no algebra is given.
pub const LEIBNITZ_DIMS: [usize; 4] = [1, 2, 3, 6];

fn algebra(k: Kind) -> Result<Arc<Algebra>, CliError> {
    Algebra::new(k).map_err(|e| CliError::classify(&e))
}

/// Why `suite` cannot run on `k`, if it cannot.
fn unsupported(suite: Suite, k: Kind) -> Option<String> {
    match suite {
        Suite::Brackets if !has_explicit_operators(k) => {
            Some(format!("brackets needs rpq:p,q with p ≥ 2, q ≥ 1, got {}", k))
        }
        Suite::ZetaNumeric => match k {
            Kind::Rpq(p, q) if q >= 1 && functional::strip_points(p + q).is_some() => None,
            Kind::Rpq(p, q) if q >= 1 => Some(format!(
                "zeta-numeric needs n = p + q ≤ 3 for a common convergence strip of s and -s-n/2, got n = {}",
                p + q
            )),
            _ => Some(format!("zeta-numeric needs rpq:p,q with q ≥ 1, got {}", k)),
        },
        Suite::Covariance => match k {
            Kind::Rpq(p, q) if p >= 1 && q >= 1 => None,
            Kind::Rpq(..) => Some(format!("covariance needs an indefinite rpq:p,q, got {}", k)),
            _ => None,
        },
        _ => None,
    }
}

fn suite_checks(cfg: &SuiteConfig, suite: Suite, kinds: &[Kind]) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    match suite {
        Suite::Leibnitz => {
            let dims: Vec<usize> = if kinds.is_empty() {
                LEIBNITZ_DIMS.to_vec()
            } else {
                kinds.iter().map(|k| k.dim()).collect()
            };
            for n in dims {
                Vars::indexed("x", n).map_err(|e| CliError::classify(&e))?;
                out.push(algebraic::leibnitz(n, cfg.max_degree));
            }
        }
        Suite::JordanAxioms => {
            for &k in kinds {
                out.extend(algebraic::jordan_axioms(&algebra(k)?));
            }
            out.push(algebraic::registry_dimension());
        }
        Suite::Bernstein => {
            for &k in kinds {
                out.push(algebraic::bernstein(&algebra(k)?));
            }
        }
        Suite::MainIdentity => {
            for &k in kinds {
                let a = algebra(k)?;
                Vars::indexed("x", 2 * a.n()).map_err(|e| CliError::classify(&e))?;
                out.push(algebraic::main_identity(&a, cfg.max_degree));
            }
        }
        Suite::FourierWeyl => {
            for &k in kinds {
                let a = algebra(k)?;
                Vars::indexed("x", 2 * a.n()).map_err(|e| CliError::classify(&e))?;
                out.extend(operators::fourier_weyl(&a));
            }
        }
        Suite::Covariance => {
            for &k in kinds {
                out.extend(operators::covariance(&algebra(k)?));
            }
        }
        Suite::Brackets => {
            for &k in kinds {
                let a = algebra(k)?;
                Vars::indexed("x", 2 * a.n()).map_err(|e| CliError::classify(&e))?;
                out.extend(operators::brackets(k));
            }
        }
        Suite::ZetaMatrices => {
            let targets = if kinds.is_empty() {
                functional::default_targets()
            } else {
                let mut v = Vec::new();
                for &k in kinds {
                    let a = algebra(k)?;
                    let t = functional::targets_for(&zeta::ZetaClass::from_row(&a.registry_row()));
                    if t.is_empty() {
                        return Err(CliError::Config(format!(
                            "no tabulated zeta identity applies to {}",
                            k
                        )));
                    }
                    v.extend(t);
                }
                v
            };
            for t in targets {
                out.extend(functional::matrices(t));
            }
            if kinds.is_empty() {
                out.push(functional::basis_round_trip());
            }
        }
        Suite::ZetaNumeric => {
            for &k in kinds {
                algebra(k)?;
                if let Kind::Rpq(p, q) = k {
                    out.extend(functional::numeric(p, q, cfg.tolerance));
                }
            }
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
    Ok(out)
}

/// Turn a configuration into its list of checks.
///
/// With an explicit `--algebra` list, a single suite rejects algebras it
/// cannot handle; `all` skips those suites for that algebra instead.
pub fn plan(cfg: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for suite in cfg.suite.expand() {
        let kinds: Vec<Kind> = if cfg.algebras.is_empty() {
            default_algebras(suite)
        } else {
            let mut ks = Vec::new();
            for &k in &cfg.algebras {
                match unsupported(suite, k) {
                    None => ks.push(k),
                    Some(msg) if cfg.suite != Suite::All => return Err(CliError::Config(msg)),
                    Some(_) => {}
                }
            }
            if ks.is_empty() {
                continue;
            }
            ks
        };
        if cfg.suite == Suite::All && !cfg.algebras.is_empty() && suite == Suite::ZetaMatrices {
            // skip algebras with nothing tabulated rather than failing the run
            let ks: Vec<Kind> = kinds
                .into_iter()
                .filter(|&k| {
                    Algebra::new(k)
                        .map(|a| {
                            !functional::targets_for(&zeta::ZetaClass::from_row(&a.registry_row())).is_empty()
                        })
                        .unwrap_or(true)
                })
                .collect();
            if !ks.is_empty() {
                out.extend(suite_checks(cfg, suite, &ks)?);
            }
            continue;
        }
        out.extend(suite_checks(cfg, suite, &kinds)?);
    }
    if out.is_empty() {
        return Err(CliError::Config(
            "no check applies to the requested algebras".into(),
        ));
    }
    Ok(out)
}
