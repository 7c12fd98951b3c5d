use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hlab_core::hochschild::Direction;
use hlab_core::limits::Limits;
use hlab_core::Field;

use crate::config::{OutputFormat, RunConfig};
use crate::error::{usage, CliError};

#[derive(Debug, Parser)]
#[command(name = "hlab", version, about = "Exact Hochschild (co)homology of graded quiver algebras")]
pub struct Cli {
    /// Coefficient field: `rat` or `fp:<p>`.
    #[arg(long, global = true, default_value = "rat")]
    pub field: String,
    /// Largest homological degree.
    #[arg(long = "max-i", global = true)]
    pub max_i: Option<usize>,
    /// Truncation degree for infinite-dimensional algebras.
    #[arg(long = "D", global = true)]
    pub truncation: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output path: the algebra file for `build`, the report otherwise.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        let field: Field = self.field.parse().map_err(|e| usage(format!("--field: {e}")))?;
        if self.jobs == Some(0) {
            return Err(usage("--jobs must be positive"));
        }
        Ok(RunConfig {
            field,
            max_i: self.max_i,
            truncation: self.truncation,
            format: self.format,
            jobs: self.jobs,
            out: self.out.clone(),
            limits: Limits::from_env(),
        })
    }
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Built-in algebra: beilinson-sym:N, beilinson-ext:N, rolled-up:N,
    /// twisted:VARS:ORDER:W1,..[:P], dual-numbers, kronecker.
    #[arg(long)]
    pub spec: Option<String>,
    /// Algebra description file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    BeilinsonSym,
    BeilinsonExt,
    RolledUp,
    Twisted,
    #[value(alias = "file")]
    CustomFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Homology,
    Cohomology,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Homology => Direction::Homology,
            DirectionArg::Cohomology => Direction::Cohomology,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an algebra, write its description and print its Hilbert function.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        weights: Option<String>,
        /// Prime for the twisted group algebra.
        #[arg(long)]
        p: Option<u64>,
        /// Input description for `custom-file`.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Hochschild homology or cohomology dimensions.
    Hh {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = DirectionArg::Cohomology)]
        direction: DirectionArg,
        /// Internal degree `d` or range `a..b`; required for infinite algebras.
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<String>,
    },
    /// Projective dimensions of the simples and the global dimension.
    Gldim {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Longest resolution computed.
        #[arg(long = "max-len")]
        max_len: Option<usize>,
    },
    /// Dimensions of Ext^i(A/J, A/J).
    Ext {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// dim H^q(P^{n-1}, Omega^p(m)) by Bott's formula.
    #[command(allow_negative_numbers = true)]
    Bott {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        m: i64,
    },
    /// Fixed-point prediction for the twisted group ring of a diagonal cyclic action.
    FixedPoint {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = DirectionArg::Homology)]
        direction: DirectionArg,
    },
    /// Hilbert function, total and per vertex pair.
    Hilbert {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Run a verification suite: a check id, a family prefix or `all`.
    Check {
        id: Option<String>,
        /// List the known check ids instead of running.
        #[arg(long)]
        list: bool,
    },
}
