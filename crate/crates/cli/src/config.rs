use clap::ValueEnum;
use jordan::Kind;
use serde::Serialize;

use crate::error::CliError;

/// Degree of the random polynomials used by the exact suites.
pub const DEFAULT_MAX_DEGREE: u32 = 3;

/// Beyond this the exact suites run out of time and memory long before
/// they finish, so larger requests are refused as a resource limit.
pub const MAX_DEGREE: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Leibnitz,
    JordanAxioms,
    Bernstein,
    MainIdentity,
    FourierWeyl,
    Covariance,
    Brackets,
    ZetaMatrices,
    ZetaNumeric,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 9] = [
        Suite::Leibnitz,
        Suite::JordanAxioms,
        Suite::Bernstein,
        Suite::MainIdentity,
        Suite::FourierWeyl,
        Suite::Covariance,
        Suite::Brackets,
        Suite::ZetaMatrices,
        Suite::ZetaNumeric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Leibnitz => "leibnitz",
            Suite::JordanAxioms => "jordan-axioms",
            Suite::Bernstein => "bernstein",
            Suite::MainIdentity => "main-identity",
            Suite::FourierWeyl => "fourier-weyl",
            Suite::Covariance => "covariance",
            Suite::Brackets => "brackets",
            Suite::ZetaMatrices => "zeta-matrices",
            Suite::ZetaNumeric => "zeta-numeric",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::SINGLE.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Empty means each suite's default list.
    pub algebras: Vec<Kind>,
    pub max_degree: u32,
    pub seed: u64,
    /// Relative tolerance of the quadrature checks; `None` keeps the default.
    pub tolerance: Option<f64>,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> SuiteConfig {
        SuiteConfig {
            suite,
            algebras: Vec::new(),
            max_degree: DEFAULT_MAX_DEGREE,
            seed: 0,
            tolerance: None,
            jobs: 1,
        }
    }

    /// Parse algebra specs such as `sym:3`, `mat:2`, `herm:2`, `rpq:2,1`.
    pub fn with_algebras<S: AsRef<str>>(mut self, specs: &[S]) -> Result<SuiteConfig, CliError> {
        self.algebras = specs
            .iter()
            .map(|s| Kind::parse(s.as_ref()).map_err(|e| CliError::Config(e.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> SuiteConfig {
        self.seed = seed;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> SuiteConfig {
        self.jobs = jobs;
        self
    }

    pub fn with_max_degree(mut self, d: u32) -> SuiteConfig {
        self.max_degree = d;
        self
    }

    pub fn with_tolerance(mut self, t: f64) -> SuiteConfig {
        self.tolerance = Some(t);
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.jobs == 0 {
            return Err(CliError::Config("--jobs must be at least 1".into()));
        }
        if self.max_degree == 0 {
            return Err(CliError::Config("--max-degree must be at least 1".into()));
        }
        if self.max_degree > MAX_DEGREE {
            return Err(CliError::Resource(format!(
                "max degree {} exceeds the supported limit {}",
                self.max_degree, MAX_DEGREE
            )));
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Config(format!(
                    "tolerance must be positive and finite, got {}",
                    t
                )));
            }
        }
        Ok(())
    }
}
