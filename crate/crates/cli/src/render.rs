//! Text formats for tables, series and verification reports.
//!
//! Every listing is sorted, and nothing time- or thread-dependent is
//! written, so equal inputs always render to equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use permstat_core::distributions::{Counts, DistRow, DistTable, Method};
use permstat_core::verify::{Counterexample, VerifyReport};
use permstat_core::{BivariateSeries, PatternSet, StatKind};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
    Bfile,
}

/// One distribution row as written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub basis: Vec<String>,
    pub stat: String,
    pub n: usize,
    pub counts: BTreeMap<usize, u64>,
    pub method: String,
}

impl RowJson {
    pub fn from_row(
        basis: &PatternSet,
        stat: StatKind,
        n: usize,
        counts: &Counts,
        method: Method,
    ) -> Self {
        RowJson {
            basis: basis.names(),
            stat: stat.name().to_string(),
            n,
            counts: counts.clone(),
            method: method.name().to_string(),
        }
    }

    pub fn to_row(&self) -> Result<DistRow, String> {
        let basis: PatternSet = self.basis.join(",").parse().map_err(|e| format!("{e}"))?;
        let stat = StatKind::from_str(&self.stat).map_err(|e| format!("{e}"))?;
        let method = Method::from_str(&self.method).map_err(|e| format!("{e}"))?;
        Ok(DistRow {
            basis,
            stat,
            n: self.n,
            counts: self.counts.clone(),
            method,
        })
    }
}

fn rows(table: &DistTable) -> impl Iterator<Item = (usize, &Counts)> {
    table.rows.iter().map(|(n, c)| (*n, c))
}

fn max_k(table: &DistTable) -> usize {
    table
        .rows
        .values()
        .filter_map(|c| c.keys().next_back().copied())
        .max()
        .unwrap_or(0)
}

/// A single row renders as an object, several as an array.
pub fn dist_json(table: &DistTable) -> String {
    let objs: Vec<RowJson> = rows(table)
        .map(|(n, c)| RowJson::from_row(&table.basis, table.stat, n, c, table.method))
        .collect();
    let text = if objs.len() == 1 {
        serde_json::to_string(&objs[0])
    } else {
        serde_json::to_string(&objs)
    };
    text.expect("rows always serialize") + "\n"
}

/// Parses what [`dist_json`] writes back into a table.
pub fn parse_dist_json(text: &str) -> Result<DistTable, String> {
    let objs: Vec<RowJson> = match serde_json::from_str::<RowJson>(text) {
        Ok(one) => vec![one],
        Err(_) => serde_json::from_str(text).map_err(|e| e.to_string())?,
    };
    let first = objs.first().ok_or("no rows")?.to_row()?;
    let mut table = DistTable::new(first.basis.clone(), first.stat, first.method);
    for obj in &objs {
        let row = obj.to_row()?;
        if row.basis != table.basis || row.stat != table.stat || row.method != table.method {
            return Err(format!("row n={} does not belong to the same table", row.n));
        }
        table.insert(row);
    }
    Ok(table)
}

/// Header `n,k,count`; only nonzero counts are listed.
pub fn dist_csv(table: &DistTable) -> String {
    let mut out = String::from("n,k,count\n");
    for (n, counts) in rows(table) {
        for (k, c) in counts {
            let _ = writeln!(out, "{n},{k},{c}");
        }
    }
    out
}

pub fn dist_markdown(table: &DistTable) -> String {
    let width = max_k(table) + 1;
    let mut out = format!("{} over S_n({})\n\n| n |", table.stat, table.basis);
    for k in 0..width {
        let _ = write!(out, " k={k} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(width));
    out.push('\n');
    for (n, counts) in rows(table) {
        let _ = write!(out, "| {n} |");
        for k in 0..width {
            let _ = write!(out, " {} |", counts.get(&k).copied().unwrap_or(0));
        }
        out.push('\n');
    }
    out
}

/// Rows read in order, `k` from 0 to the row's largest nonzero `k`,
/// numbered from 1.
pub fn dist_bfile(table: &DistTable) -> String {
    let mut out = String::new();
    let mut index = 1;
    for (_, counts) in rows(table) {
        let top = counts.keys().next_back().copied().unwrap_or(0);
        for k in 0..=top {
            let _ = writeln!(out, "{index} {}", counts.get(&k).copied().unwrap_or(0));
            index += 1;
        }
    }
    out
}

pub fn render_dist(table: &DistTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => dist_json(table),
        OutputFormat::Csv => dist_csv(table),
        OutputFormat::Markdown => dist_markdown(table),
        OutputFormat::Bfile => dist_bfile(table),
    }
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    name: &'a str,
    max_n: usize,
    rows: Vec<Vec<i64>>,
}

// Row `n` without trailing zeros, but at least one entry.
fn trimmed(row: &[i64]) -> &[i64] {
    let len = row.iter().rposition(|c| *c != 0).map_or(1, |i| i + 1);
    &row[..len.min(row.len())]
}

pub fn render_series(name: &str, series: &BivariateSeries, format: OutputFormat) -> String {
    let rows: Vec<Vec<i64>> = series.rows().iter().map(|r| trimmed(r).to_vec()).collect();
    match format {
        OutputFormat::Json => {
            let obj = SeriesJson {
                name,
                max_n: series.max_n(),
                rows,
            };
            serde_json::to_string(&obj).expect("series always serialize") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,k,coeff\n");
            for (n, row) in rows.iter().enumerate() {
                for (k, c) in row.iter().enumerate().filter(|(_, c)| **c != 0) {
                    let _ = writeln!(out, "{n},{k},{c}");
                }
            }
            out
        }
        OutputFormat::Markdown => {
            let width = rows.iter().map(Vec::len).max().unwrap_or(1);
            let mut out = format!("[z^n q^k] {name}\n\n| n |");
            for k in 0..width {
                let _ = write!(out, " k={k} |");
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(width));
            out.push('\n');
            for (n, row) in rows.iter().enumerate() {
                let _ = write!(out, "| {n} |");
                for k in 0..width {
                    let _ = write!(out, " {} |", row.get(k).copied().unwrap_or(0));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Bfile => {
            let mut out = String::new();
            let mut index = 0;
            for row in &rows {
                for c in row {
                    let _ = writeln!(out, "{index} {c}");
                    index += 1;
                }
            }
            out
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct NStatusJson {
    pub n: usize,
    pub cells: usize,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct CounterexampleJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    /// Decimal strings, since values may exceed what JSON readers keep exact.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ReportJson {
    pub name: String,
    pub min_n: usize,
    pub max_n: usize,
    pub passed: bool,
    pub per_n: Vec<NStatusJson>,
    pub counterexample: Option<CounterexampleJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct VerifyJson {
    pub max_n: usize,
    pub passed: bool,
    pub reports: Vec<ReportJson>,
}

fn counterexample_json(c: &Counterexample) -> CounterexampleJson {
    CounterexampleJson {
        n: c.n,
        k: c.k,
        expected: c.expected.map(|v| v.to_string()),
        actual: c.actual.map(|v| v.to_string()),
        witness: c.witness.clone(),
    }
}

pub fn verify_json(max_n: usize, reports: &[VerifyReport]) -> String {
    let doc = VerifyJson {
        max_n,
        passed: reports.iter().all(|r| r.passed),
        reports: reports
            .iter()
            .map(|r| ReportJson {
                name: r.name.clone(),
                min_n: r.min_n,
                max_n: r.max_n,
                passed: r.passed,
                per_n: r
                    .per_n
                    .iter()
                    .map(|s| NStatusJson {
                        n: s.n,
                        cells: s.cells,
                        passed: s.passed,
                    })
                    .collect(),
                counterexample: r.counterexample.as_ref().map(counterexample_json),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("reports always serialize") + "\n"
}

fn describe(c: &Counterexample) -> String {
    let mut s = format!("n={}", c.n);
    if let Some(k) = c.k {
        let _ = write!(s, " k={k}");
    }
    if let (Some(e), Some(a)) = (c.expected, c.actual) {
        let _ = write!(s, " expected {e} got {a}");
    }
    if let Some(w) = &c.witness {
        let _ = write!(s, " witness {w}");
    }
    s
}

/// One line per check, then a summary line.
pub fn verify_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let cells: usize = r.per_n.iter().map(|s| s.cells).sum();
        if r.passed {
            let _ = writeln!(
                out,
                "PASS {} (n={}..={}, {cells} cells)",
                r.name, r.min_n, r.max_n
            );
        } else {
            let detail = r.counterexample.as_ref().map(describe).unwrap_or_default();
            let _ = writeln!(
                out,
                "FAIL {} (n={}..={}): {detail}",
                r.name, r.min_n, r.max_n
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(
        out,
        "{} checks, {} passed, {failed} failed",
        reports.len(),
        reports.len() - failed
    );
    out
}
