use std::path::PathBuf;

use clap::ValueEnum;
use hlab_core::limits::Limits;
use hlab_core::Field;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: Field,
    pub max_i: Option<usize>,
    /// Truncation degree `D` for infinite-dimensional constructions.
    pub truncation: Option<usize>,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub limits: Limits,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: Field::Rational,
            max_i: None,
            truncation: None,
            format: OutputFormat::Table,
            jobs: None,
            out: None,
            limits: Limits::from_env(),
        }
    }
}
