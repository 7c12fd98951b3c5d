//! Report types and their table / JSON / CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hlab_core::table::DimTable;
use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;
use crate::error::{exit, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Algebraic,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub provenance: Provenance,
    pub label: String,
    pub table: DimTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    InsufficientPrecision,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::InsufficientPrecision => "insufficient-precision",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub claim: String,
    pub left: Option<Side>,
    pub right: Option<Side>,
    pub verdict: Verdict,
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub runtime_ms: u64,
}

impl CheckReport {
    /// Pass iff both tables agree on a nonempty common window.
    pub fn compare(left: &Side, right: &Side) -> Verdict {
        match left.table.agrees_with(&right.table) {
            Some(true) => Verdict::Pass,
            _ => Verdict::Fail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub reports: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub insufficient_precision: usize,
}

impl CheckSummary {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        CheckSummary {
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            insufficient_precision: count(Verdict::InsufficientPrecision),
            reports,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            exit::FAIL
        } else if self.insufficient_precision > 0 {
            exit::INSUFFICIENT_PRECISION
        } else {
            exit::PASS
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub command: String,
    pub algebra: String,
    pub field: String,
    pub parameters: BTreeMap<String, String>,
    pub table: DimTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub algebra: String,
    pub field: String,
    pub dims: Vec<usize>,
    pub exhausted: bool,
    pub total: usize,
    /// `"i->j"` to the dimensions of paths from `i` to `j` per degree.
    pub by_vertex_pair: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub written_to: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GldimReport {
    pub algebra: String,
    pub field: String,
    pub max_len: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    /// `pd S_v` per vertex; `null` when the resolution did not finish.
    pub projective_dimensions: Vec<Option<usize>>,
    pub global_dimension: Option<usize>,
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottReport {
    pub n: usize,
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub in_range: bool,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum Report {
    Hilbert(HilbertReport),
    Table(TableReport),
    Gldim(GldimReport),
    Bott(BottReport),
    Check(CheckSummary),
}

/// One-line form of a table: `(1, 3, 0)` or `{d=0: (2, 0); d=2: (3, 4)}`.
pub fn compact(t: &DimTable) -> String {
    let w = t.window();
    match (w.d_min, w.d_max) {
        (Some(lo), Some(hi)) => {
            let rows: Vec<String> = (lo..=hi)
                .map(|d| {
                    let v: Vec<String> = t.values_at_degree(d).iter().map(u64::to_string).collect();
                    format!("d={d}: ({})", v.join(", "))
                })
                .collect();
            format!("{{{}}}", rows.join("; "))
        }
        _ => t.to_string(),
    }
}

fn params_line(p: &BTreeMap<String, String>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::Failure(e.to_string()))?;
    for r in rows {
        w.write_record(&r).map_err(|e| CliError::Failure(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Failure(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Failure(e.to_string()))
}

fn table_rows(t: &DimTable) -> Vec<Vec<String>> {
    t.window()
        .points()
        .into_iter()
        .map(|(i, d)| {
            let dim = t.get(i, d).unwrap_or(0);
            vec![i.to_string(), d.map_or(String::new(), |d| d.to_string()), dim.to_string()]
        })
        .collect()
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| CliError::Failure(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => self.csv(),
            OutputFormat::Table => Ok(self.text()),
        }
    }

    fn csv(&self) -> Result<String, CliError> {
        match self {
            Report::Hilbert(h) => csv_string(
                &["degree", "dim"],
                h.dims.iter().enumerate().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect(),
            ),
            Report::Table(t) => csv_string(&["i", "d", "dim"], table_rows(&t.table)),
            Report::Gldim(g) => csv_string(
                &["vertex", "pd"],
                g.projective_dimensions
                    .iter()
                    .enumerate()
                    .map(|(v, pd)| vec![v.to_string(), pd.map_or("unfinished".into(), |p| p.to_string())])
                    .collect(),
            ),
            Report::Bott(b) => csv_string(
                &["n", "p", "q", "m", "value"],
                vec![vec![b.n.to_string(), b.p.to_string(), b.q.to_string(), b.m.to_string(), b.value.to_string()]],
            ),
            Report::Check(s) => csv_string(
                &["check_id", "verdict", "left", "right", "runtime_ms"],
                s.reports
                    .iter()
                    .map(|r| {
                        vec![
                            r.check_id.clone(),
                            r.verdict.as_str().to_string(),
                            r.left.as_ref().map_or(String::new(), |s| compact(&s.table)),
                            r.right.as_ref().map_or(String::new(), |s| compact(&s.table)),
                            r.runtime_ms.to_string(),
                        ]
                    })
                    .collect(),
            ),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Hilbert(h) => {
                let dims: Vec<String> = h.dims.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "algebra   {} over {}", h.algebra, h.field);
                let tail = if h.exhausted { "" } else { ", ..." };
                let _ = writeln!(out, "hilbert   ({}{tail})", dims.join(", "));
                let _ = writeln!(out, "total     {}{}", h.total, if h.exhausted { "" } else { " (through truncation)" });
                for (pair, dims) in &h.by_vertex_pair {
                    let d: Vec<String> = dims.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "  {pair:<8} ({})", d.join(", "));
                }
                if let Some(path) = &h.written_to {
                    let _ = writeln!(out, "written   {path}");
                }
            }
            Report::Table(t) => {
                let _ = writeln!(out, "{} of {} over {}", t.command, t.algebra, t.field);
                if !t.parameters.is_empty() {
                    let _ = writeln!(out, "{}", params_line(&t.parameters));
                }
                let _ = writeln!(out, "window {}", t.table.window());
                let _ = writeln!(out, "{}", t.table);
            }
            Report::Gldim(g) => {
                let _ = writeln!(out, "algebra   {} over {}", g.algebra, g.field);
                for (v, pd) in g.projective_dimensions.iter().enumerate() {
                    let pd = pd.map_or(format!("> {}", g.max_len), |p| p.to_string());
                    let _ = writeln!(out, "  pd S{v} = {pd}");
                }
                match g.global_dimension {
                    Some(d) => {
                        let _ = writeln!(out, "gldim     {d}");
                    }
                    None => {
                        let _ = writeln!(out, "gldim     not finished within length {}", g.max_len);
                    }
                }
                let verdict = if g.smooth { "smooth" } else { "not smooth up to bound" };
                let _ = writeln!(out, "smooth    {verdict}");
            }
            Report::Bott(b) => {
                let flag = if b.in_range { "" } else { "  (p or q out of range)" };
                let _ = writeln!(out, "h^{}(P^{}, Omega^{}({})) = {}{flag}", b.q, b.n - 1, b.p, b.m, b.value);
            }
            Report::Check(s) => {
                for r in &s.reports {
                    let _ = writeln!(out, "{:<22} {:<22} [{} ms]", r.check_id, r.verdict.as_str().to_uppercase(), r.runtime_ms);
                    for side in [&r.left, &r.right].into_iter().flatten() {
                        let prov = match side.provenance {
                            Provenance::Algebraic => "algebraic",
                            Provenance::Oracle => "oracle",
                        };
                        let _ = writeln!(out, "    {prov:<9} {}: {}", side.label, compact(&side.table));
                    }
                    if let Some(note) = &r.note {
                        let _ = writeln!(out, "    note: {note}");
                    }
                }
                let _ = writeln!(
                    out,
                    "{} passed, {} failed, {} insufficient precision",
                    s.passed, s.failed, s.insufficient_precision
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hlab_core::table::Window;

    fn side(values: &[u64]) -> Side {
        Side { provenance: Provenance::Algebraic, label: "x".into(), table: DimTable::from_ungraded(values) }
    }

    #[test]
    fn verdict_needs_a_common_window() {
        assert_eq!(CheckReport::compare(&side(&[1, 3]), &side(&[1, 3, 0])), Verdict::Pass);
        assert_eq!(CheckReport::compare(&side(&[1, 2]), &side(&[1, 3])), Verdict::Fail);
        let graded = Side { provenance: Provenance::Oracle, label: "y".into(), table: DimTable::new(Window::graded(0, 1, 0, 0)) };
        assert_eq!(CheckReport::compare(&side(&[1]), &graded), Verdict::Fail);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), "2".to_string());
        let mut graded = DimTable::new(Window::graded(0, 2, 0, 1));
        graded.set(1, Some(1), 4).unwrap();
        let report = Report::Check(CheckSummary::new(vec![CheckReport {
            check_id: "demo".into(),
            claim: "demo".into(),
            left: Some(side(&[1, 3, 0])),
            right: Some(Side { provenance: Provenance::Oracle, label: "g".into(), table: graded }),
            verdict: Verdict::Fail,
            parameters: params,
            note: None,
            runtime_ms: 5,
        }]));
        let text = report.render(OutputFormat::Json).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.render(OutputFormat::Json).unwrap(), text);
    }
}
