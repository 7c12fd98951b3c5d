//! Resource ceilings shared by the algebra builder and the complex builders.

/// Environment variable holding a memory cap in megabytes.
pub const RESOURCE_ENV: &str = "HLAB_RESOURCE_MB";

/// Rough bytes per stored sparse entry (index + exact scalar + bookkeeping).
const BYTES_PER_ENTRY: usize = 96;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible dimension of a single vector space (path block,
    /// complex term, module window).
    pub max_dim: usize,
    /// Largest admissible number of stored matrix entries.
    pub max_entries: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_dim: 400_000, max_entries: 40_000_000 }
    }
}

impl Limits {
    pub fn from_megabytes(mb: usize) -> Self {
        let max_entries = mb.saturating_mul(1 << 20) / BYTES_PER_ENTRY;
        Limits { max_dim: max_entries.min(Limits::default().max_dim), max_entries }
    }

    /// Defaults, overridden by `HLAB_RESOURCE_MB` when set to a number.
    pub fn from_env() -> Self {
        std::env::var(RESOURCE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(Limits::from_megabytes)
            .unwrap_or_default()
    }

    pub fn check_dim(&self, what: &str, dim: usize) -> Result<(), String> {
        if dim > self.max_dim {
            return Err(format!("{what} has dimension {dim}, above the ceiling {}", self.max_dim));
        }
        Ok(())
    }

    pub fn check_entries(&self, what: &str, entries: usize) -> Result<(), String> {
        if entries > self.max_entries {
            return Err(format!("{what} needs {entries} entries, above the ceiling {}", self.max_entries));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn megabyte_budget_scales() {
        let small = Limits::from_megabytes(1);
        assert!(small.max_entries < Limits::default().max_entries);
        assert!(small.check_dim("block", small.max_dim + 1).is_err());
        assert!(small.check_entries("matrix", 10).is_ok());
    }
}
