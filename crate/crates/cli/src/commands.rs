use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use hlab_core::algebra::format;
use hlab_core::algebra::GradedAlgebra;
use hlab_core::constructions::CyclicActionSpec;
use hlab_core::hochschild::{
    ext_algebra_dims, hh_cohomology, hh_graded_range, hh_homology, projective_dimension_graded,
    simple_projective_dimensions, Direction,
};
use hlab_core::oracle::{bott, fixed_point_hh_cohomology, fixed_point_hh_homology, BottQuery, FixedPointQuery};
use rayon::prelude::*;

use crate::algebra_spec::{parse_weights, resolve, AlgebraSpec};
use crate::cli::{AlgebraArgs, BuildKind, Cli, Command};
use crate::config::RunConfig;
use crate::error::{exit, usage, CliError};
use crate::report::{BottReport, CheckSummary, GldimReport, HilbertReport, Report, TableReport};
use crate::suites::{registry, run_checks, select, SuiteContext};

/// Default longest resolution for `gldim` on finite-dimensional algebras.
pub const DEFAULT_MAX_LEN: usize = 8;

/// Default top internal degree for `fixed-point`.
pub const DEFAULT_FIXED_POINT_DEGREE: usize = 4;

/// `d` or `a..b` (inclusive, `a..=b` also accepted).
pub fn parse_degrees(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || usage(format!("bad degree `{s}`: expected d or a..b"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let d = s.trim().parse().map_err(|_| bad())?;
            (d, d)
        }
    };
    if lo > hi {
        return Err(usage(format!("empty degree range `{s}`")));
    }
    Ok(lo..=hi)
}

fn algebra(args: &AlgebraArgs) -> Result<AlgebraSpec, CliError> {
    resolve(args.spec.as_deref(), args.file.as_ref())
}

fn base_params(cfg: &RunConfig) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("field".to_string(), cfg.field.to_string());
    p
}

fn hilbert_report(a: &GradedAlgebra, written_to: Option<String>) -> HilbertReport {
    let h = a.hilbert_function();
    HilbertReport {
        algebra: a.name().to_string(),
        field: a.field().to_string(),
        total: h.total(),
        dims: h.dims,
        exhausted: h.exhausted,
        by_vertex_pair: a.hilbert_by_vertex_pair().into_iter().map(|((s, t), v)| (format!("{s}->{t}"), v)).collect(),
        written_to,
    }
}

fn require<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("build {kind} requires {flag}")))
}

#[allow(clippy::too_many_arguments)]
fn build(
    cfg: &RunConfig,
    kind: BuildKind,
    n: Option<usize>,
    vars: Option<usize>,
    order: Option<usize>,
    weights: Option<&str>,
    p: Option<u64>,
    file: Option<&PathBuf>,
) -> Result<Report, CliError> {
    let spec = match kind {
        BuildKind::BeilinsonSym => AlgebraSpec::BeilinsonSym(require(n, "--n", "beilinson-sym")?),
        BuildKind::BeilinsonExt => AlgebraSpec::BeilinsonExt(require(n, "--n", "beilinson-ext")?),
        BuildKind::RolledUp => AlgebraSpec::RolledUp(require(n, "--n", "rolled-up")?),
        BuildKind::Twisted => {
            let vars = require(vars, "--vars", "twisted")?;
            let weights = parse_weights(require(weights, "--weights", "twisted")?)?;
            if weights.len() != vars {
                return Err(usage(format!("{vars} variables but {} weights", weights.len())));
            }
            let action = CyclicActionSpec::new(require(order, "--order", "twisted")?, weights)?;
            AlgebraSpec::Twisted { action, prime: p }
        }
        BuildKind::CustomFile => AlgebraSpec::File(require(file.cloned(), "--file", "custom-file")?),
    };
    let a = spec.build(cfg, None)?;
    let written_to = match &cfg.out {
        Some(path) => {
            std::fs::write(path, format::serialize(a.quiver(), a.relations()))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    Ok(Report::Hilbert(hilbert_report(&a, written_to)))
}

fn hh(cfg: &RunConfig, args: &AlgebraArgs, direction: Direction, degree: Option<&str>) -> Result<Report, CliError> {
    let spec = algebra(args)?;
    let max_i = cfg.max_i.unwrap_or_else(|| spec.default_max_i());
    let mut params = base_params(cfg);
    params.insert("direction".into(), direction.to_string());
    params.insert("max_i".into(), max_i.to_string());
    let (a, table) = match degree {
        None => {
            let a = spec.build(cfg, None)?;
            let t = match direction {
                Direction::Homology => hh_homology(&a, max_i, &cfg.limits)?,
                Direction::Cohomology => hh_cohomology(&a, max_i, &cfg.limits)?,
            };
            (a, t)
        }
        Some(text) => {
            let range = parse_degrees(text)?;
            let top = (*range.end()).max(0) as usize;
            params.insert("degree".into(), format!("{}..{}", range.start(), range.end()));
            let a = spec.build(cfg, Some(cfg.truncation.unwrap_or(top)))?;
            let t = hh_graded_range(&a, direction, range, max_i, &cfg.limits)?;
            (a, t)
        }
    };
    if let Some(d) = a.truncation().bound() {
        params.insert("D".into(), d.to_string());
    }
    let command = match direction {
        Direction::Homology => "HH_i",
        Direction::Cohomology => "HH^i",
    };
    Ok(Report::Table(TableReport {
        command: command.into(),
        algebra: a.name().to_string(),
        field: a.field().to_string(),
        parameters: params,
        table,
    }))
}

fn gldim(cfg: &RunConfig, args: &AlgebraArgs, max_len: Option<usize>) -> Result<Report, CliError> {
    let spec = algebra(args)?;
    let a = spec.build(cfg, None)?;
    let (pds, max_len, window) = match a.truncation().bound() {
        None => {
            let max_len = max_len.unwrap_or(DEFAULT_MAX_LEN);
            (simple_projective_dimensions(&a, max_len, &cfg.limits)?, max_len, None)
        }
        Some(window) => {
            let max_len = max_len.unwrap_or(window);
            let pds = (0..a.vertex_count())
                .into_par_iter()
                .map(|v| projective_dimension_graded(&a, v, window, max_len, &cfg.limits))
                .collect::<Result<Vec<_>, _>>()?;
            (pds, max_len, Some(window))
        }
    };
    let global = pds.iter().copied().collect::<Option<Vec<_>>>().map(|v| v.into_iter().max().unwrap_or(0));
    Ok(Report::Gldim(GldimReport {
        algebra: a.name().to_string(),
        field: a.field().to_string(),
        max_len,
        window,
        projective_dimensions: pds,
        global_dimension: global,
        smooth: global.is_some(),
    }))
}

fn ext(cfg: &RunConfig, args: &AlgebraArgs) -> Result<Report, CliError> {
    let spec = algebra(args)?;
    let a = spec.build(cfg, None)?;
    let max_i = cfg.max_i.unwrap_or_else(|| spec.default_max_i());
    let mut params = base_params(cfg);
    params.insert("max_i".into(), max_i.to_string());
    Ok(Report::Table(TableReport {
        command: "Ext^i(A/J, A/J)".into(),
        algebra: a.name().to_string(),
        field: a.field().to_string(),
        parameters: params,
        table: ext_algebra_dims(&a, max_i, &cfg.limits)?,
    }))
}

fn fixed_point(
    cfg: &RunConfig,
    vars: usize,
    order: usize,
    weights: &str,
    i: usize,
    direction: Direction,
) -> Result<Report, CliError> {
    let weights = parse_weights(weights)?;
    if weights.len() != vars {
        return Err(usage(format!("{vars} variables but {} weights", weights.len())));
    }
    let action = CyclicActionSpec::new(order, weights)?;
    let max_degree = cfg.truncation.unwrap_or(DEFAULT_FIXED_POINT_DEGREE);
    let q = FixedPointQuery { action: action.clone(), i, max_degree };
    let table = match direction {
        Direction::Homology => fixed_point_hh_homology(&q),
        Direction::Cohomology => fixed_point_hh_cohomology(&q),
    };
    let mut params = BTreeMap::new();
    params.insert("direction".into(), direction.to_string());
    params.insert("i".into(), i.to_string());
    params.insert("D".into(), max_degree.to_string());
    let w: Vec<String> = action.weights.iter().map(usize::to_string).collect();
    Ok(Report::Table(TableReport {
        command: "fixed-point prediction".into(),
        algebra: format!("k[x_1..x_{vars}] * C{order} (weights {})", w.join(",")),
        field: "char 0".into(),
        parameters: params,
        table,
    }))
}

fn check(cfg: &RunConfig, id: &str) -> Result<Report, CliError> {
    let defs = select(id)?;
    let ctx = SuiteContext { field: cfg.field, limits: cfg.limits };
    Ok(Report::Check(CheckSummary::new(run_checks(&defs, &ctx))))
}

/// Builds the report for a parsed command line.
pub fn report(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    match &cli.command {
        Command::Build { kind, n, vars, order, weights, p, file } => {
            build(cfg, *kind, *n, *vars, *order, weights.as_deref(), *p, file.as_ref())
        }
        Command::Hh { algebra, direction, degree } => hh(cfg, algebra, (*direction).into(), degree.as_deref()),
        Command::Gldim { algebra, max_len } => gldim(cfg, algebra, *max_len),
        Command::Ext { algebra } => ext(cfg, algebra),
        Command::Bott { n, p, q, m } => {
            if *n < 2 {
                return Err(usage(format!("bott needs n >= 2, got {n}")));
            }
            let query = BottQuery { n: *n, p: *p, q: *q, m: *m };
            Ok(Report::Bott(BottReport {
                n: *n,
                p: *p,
                q: *q,
                m: *m,
                in_range: query.in_range(),
                value: bott(*n, *p, *q, *m),
            }))
        }
        Command::FixedPoint { vars, order, weights, i, direction } => {
            fixed_point(cfg, *vars, *order, weights, *i, (*direction).into())
        }
        Command::Hilbert { algebra: args } => {
            let a = algebra(args)?.build(cfg, None)?;
            Ok(Report::Hilbert(hilbert_report(&a, None)))
        }
        Command::Check { id, list } => match (id, list) {
            (Some(id), false) => check(cfg, id),
            (_, true) => Err(usage("--list does not run checks")),
            (None, false) => Err(usage("check needs an id, a family prefix or `all` (see --list)")),
        },
    }
}

/// Runs the command line and returns the exit code; output goes to stdout or `--out`.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    if let Command::Check { list: true, .. } = cli.command {
        for def in registry() {
            println!("{:<26} {}", def.id, def.claim);
        }
        return Ok(exit::PASS);
    }
    let cfg = cli.config()?;
    if let Some(jobs) = cfg.jobs {
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let report = report(cli, &cfg)?;
    let text = report.render(cfg.format)?;
    let code = match &report {
        Report::Check(s) => s.exit_code(),
        _ => exit::PASS,
    };
    match (&cli.command, &cfg.out) {
        (Command::Build { .. }, _) | (_, None) => print!("{text}"),
        (_, Some(path)) => std::fs::write(path, text)?,
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_ranges() {
        assert_eq!(parse_degrees("3").unwrap(), 3..=3);
        assert_eq!(parse_degrees("0..4").unwrap(), 0..=4);
        assert_eq!(parse_degrees("-2..=1").unwrap(), -2..=1);
        assert!(parse_degrees("4..1").is_err());
        assert!(parse_degrees("x").is_err());
    }
}
