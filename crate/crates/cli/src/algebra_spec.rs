//! Built-in algebra specifications (`beilinson-sym:3`, `twisted:2:2:1,1`, ...)
//! and algebra files.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use hlab_core::algebra::format::{self, AlgebraDescription};
use hlab_core::algebra::{build_algebra, GradedAlgebra};
use hlab_core::constructions::{
    beilinson, dual_numbers, kronecker, rolled_up, twisted_group_algebra, BeilinsonSpec, CyclicActionSpec, Variant,
};
use hlab_core::linalg::field::smallest_prime_congruent_one;
use hlab_core::linalg::DEFAULT_PRIME;
use hlab_core::Field;

use crate::config::RunConfig;
use crate::error::{usage, CliError};

/// Truncation used for files and infinite constructions when none is given.
pub const DEFAULT_TRUNCATION: usize = 4;

/// Degree through which an algebra file is expanded when `--D` is absent;
/// finite-dimensional files are detected and reported as exhausted.
pub const DEFAULT_FILE_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    BeilinsonSym(usize),
    BeilinsonExt(usize),
    RolledUp(usize),
    Twisted { action: CyclicActionSpec, prime: Option<u64> },
    DualNumbers,
    Kronecker,
    File(PathBuf),
}

fn parse_count(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| usage(format!("expected {what}, found `{s}`")))
}

pub fn parse_weights(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',').map(|w| parse_count(w.trim(), "a weight")).collect()
}

impl FromStr for AlgebraSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["beilinson-sym", n] => Ok(AlgebraSpec::BeilinsonSym(parse_count(n, "n")?)),
            ["beilinson-ext", n] => Ok(AlgebraSpec::BeilinsonExt(parse_count(n, "n")?)),
            ["rolled-up", n] => Ok(AlgebraSpec::RolledUp(parse_count(n, "n")?)),
            ["twisted", vars, order, weights] | ["twisted", vars, order, weights, _] => {
                let vars = parse_count(vars, "a variable count")?;
                let weights = parse_weights(weights)?;
                if weights.len() != vars {
                    return Err(usage(format!("{vars} variables but {} weights", weights.len())));
                }
                let action = CyclicActionSpec::new(parse_count(order, "a group order")?, weights)?;
                let prime = match parts.get(4) {
                    Some(p) => Some(p.parse().map_err(|_| usage(format!("bad prime `{p}`")))?),
                    None => None,
                };
                Ok(AlgebraSpec::Twisted { action, prime })
            }
            ["dual-numbers"] => Ok(AlgebraSpec::DualNumbers),
            ["kronecker"] => Ok(AlgebraSpec::Kronecker),
            _ => Err(usage(format!(
                "unknown algebra spec `{s}` (expected beilinson-sym:N, beilinson-ext:N, rolled-up:N, \
                 twisted:VARS:ORDER:W1,..[:P], dual-numbers or kronecker)"
            ))),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::BeilinsonSym(n) => write!(f, "beilinson-sym:{n}"),
            AlgebraSpec::BeilinsonExt(n) => write!(f, "beilinson-ext:{n}"),
            AlgebraSpec::RolledUp(n) => write!(f, "rolled-up:{n}"),
            AlgebraSpec::Twisted { action, prime } => {
                let w: Vec<String> = action.weights.iter().map(|w| w.to_string()).collect();
                write!(f, "twisted:{}:{}:{}", action.n_vars(), action.order, w.join(","))?;
                if let Some(p) = prime {
                    write!(f, ":{p}")?;
                }
                Ok(())
            }
            AlgebraSpec::DualNumbers => write!(f, "dual-numbers"),
            AlgebraSpec::Kronecker => write!(f, "kronecker"),
            AlgebraSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl AlgebraSpec {
    /// `n` of a Beilinson algebra, used for default homological ranges.
    pub fn beilinson_n(&self) -> Option<usize> {
        match self {
            AlgebraSpec::BeilinsonSym(n) | AlgebraSpec::BeilinsonExt(n) => Some(*n),
            _ => None,
        }
    }

    /// Default `max_i`: `2·gldim + 1` for Beilinson algebras, 3 otherwise.
    pub fn default_max_i(&self) -> usize {
        self.beilinson_n().map_or(3, |n| 2 * (n - 1) + 1)
    }

    /// Field for a twisted group algebra: an explicit prime in the spec string, else
    /// the configured prime field, else the smallest suitable prime above
    /// the default modulus.
    fn twisted_prime(&self, action: &CyclicActionSpec, prime: Option<u64>, field: Field) -> Result<u64, CliError> {
        match (prime, field) {
            (Some(p), Field::Prime(q)) if p != q => {
                Err(usage(format!("twisted algebra prime {p} conflicts with --field fp:{q}")))
            }
            (Some(p), _) | (None, Field::Prime(p)) => Ok(p),
            (None, Field::Rational) => Ok(smallest_prime_congruent_one(DEFAULT_PRIME, action.order as u64)),
        }
    }

    /// Builds the algebra; infinite constructions are truncated at
    /// `truncation` (falling back to [`DEFAULT_TRUNCATION`]).
    pub fn build(&self, cfg: &RunConfig, truncation: Option<usize>) -> Result<GradedAlgebra, CliError> {
        let d = truncation.or(cfg.truncation).unwrap_or(DEFAULT_TRUNCATION);
        Ok(match self {
            AlgebraSpec::BeilinsonSym(n) => beilinson(&BeilinsonSpec { n: *n, variant: Variant::Symmetric }, cfg.field)?,
            AlgebraSpec::BeilinsonExt(n) => beilinson(&BeilinsonSpec { n: *n, variant: Variant::Exterior }, cfg.field)?,
            AlgebraSpec::RolledUp(n) => rolled_up(*n, d, cfg.field, &cfg.limits)?,
            AlgebraSpec::Twisted { action, prime } => {
                let p = self.twisted_prime(action, *prime, cfg.field)?;
                twisted_group_algebra(action, d, p, &cfg.limits)?
            }
            AlgebraSpec::DualNumbers => dual_numbers(cfg.field)?,
            AlgebraSpec::Kronecker => kronecker(cfg.field)?,
            AlgebraSpec::File(path) => {
                let desc = read_description(path)?;
                let degree = truncation.or(cfg.truncation).unwrap_or(DEFAULT_FILE_DEGREE);
                let name = path.file_stem().map_or("custom".to_string(), |s| s.to_string_lossy().into_owned());
                build_algebra(&desc.quiver, &desc.relations, degree, cfg.field, &cfg.limits)?.renamed(name)
            }
        })
    }
}

pub fn read_description(path: &std::path::Path) -> Result<AlgebraDescription, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Either `--spec` or `--file`, exactly one.
pub fn resolve(spec: Option<&str>, file: Option<&PathBuf>) -> Result<AlgebraSpec, CliError> {
    match (spec, file) {
        (Some(s), None) => s.parse(),
        (None, Some(f)) => Ok(AlgebraSpec::File(f.clone())),
        (Some(_), Some(_)) => Err(usage("give either --spec or --file, not both")),
        (None, None) => Err(usage("an algebra is required: --spec <SPEC> or --file <PATH>")),
    }
}
