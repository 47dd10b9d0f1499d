//! Argument parsing and the subcommand drivers behind the `permstat` binary.
//!
//! Exit codes: 0 success, 1 a verification or OEIS comparison failed,
//! 2 usage error, 3 environment or network error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permstat_core::bijections::{
    dec_123_132, dec_132_213, dec_213_231, enc_123_132, enc_132_213, enc_213_231, iota, phi231,
    phi231_inv, predicted_stat_123_132, predicted_stat_132_213, predicted_stat_213_231, psi321,
    psi321_inv, psi_hat, zeta, zeta_inv, Bits,
};
use permstat_core::distributions::{distribution_table, Method};
use permstat_core::dyck::Alphabet;
use permstat_core::formulas::{FormulaId, SeriesName};
use permstat_core::stats::stat;
use permstat_core::verify::{check_names, verify_all, Fault};
use permstat_core::{Caps, DyckWord, IndecomposableWord, PatternSet, Perm, StatKind};

use crate::config::Config;
use crate::oeis::{self, Cache, Client, HttpTransport, OeisError, OeisId};
use crate::parallel::Threaded;
use crate::render::{self, OutputFormat};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn env(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<permstat_core::Error> for CliError {
    fn from(e: permstat_core::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        // a closed stdout (e.g. piped into `head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError {
                code: 0,
                message: String::new(),
            };
        }
        CliError::env(e.to_string())
    }
}

type CliResult<T = u8> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "permstat",
    version,
    about = "Statistic distributions over pattern-avoiding permutations"
)]
pub struct Cli {
    /// key=value file with caps, workers and cache_dir.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Distribution of a statistic over S_n(B).
    Dist(DistArgs),
    /// Apply a bijection and show the statistics it transports.
    Map(MapArgs),
    /// Check formulas, series and bijections against the brute-force oracle.
    Verify(VerifyArgs),
    /// Coefficient triangle of a generating function.
    Series(SeriesArgs),
    /// Emit a sequence as a b-file, optionally comparing it with OEIS.
    Oeis(OeisArgs),
}

#[derive(Args, Debug)]
pub struct DistArgs {
    #[arg(long)]
    pub stat: String,
    /// Comma-separated patterns, e.g. 213,312.
    #[arg(long)]
    pub avoid: String,
    /// N, A-B or A..B.
    #[arg(long)]
    pub n: String,
    /// oracle, closed_form or series.
    #[arg(long, default_value = "oracle")]
    pub method: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Bijection {
    Phi,
    Psi,
    PsiHat,
    Zeta,
    Iota,
    #[value(name = "enc132213")]
    Enc132213,
    #[value(name = "enc213231")]
    Enc213231,
    #[value(name = "enc123132")]
    Enc123132,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphabetArg {
    Ud,
    Binary,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    #[arg(long, value_enum)]
    pub bijection: Bijection,
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub inverse: bool,
    /// Letters used for Dyck words on input and output.
    #[arg(long, value_enum, default_value = "ud")]
    pub alphabet: AlphabetArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "only")]
    pub all: bool,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Print the check names and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Also write the report as JSON to this path ("-" for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Test hook: adds one to the k = 0 value of the named formula.
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// des321, pk321, B, D or ddes132213.
    #[arg(long)]
    pub name: String,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct OeisArgs {
    #[arg(
        long,
        conflicts_with = "sequence",
        required_unless_present = "sequence"
    )]
    pub formula: Option<String>,
    #[arg(long)]
    pub sequence: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "bfile")]
    pub format: OutputFormat,
    /// Fetch the OEIS b-file and compare.
    #[arg(long)]
    pub check: bool,
    /// Use only the local cache.
    #[arg(long)]
    pub offline: bool,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Refetch cache entries older than this many days.
    #[arg(long)]
    pub max_age_days: Option<u64>,
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(|e| CliError::usage(e.to_string()))?,
        None => Config::default(),
    };
    match cli.command {
        Command::Dist(a) => cmd_dist(a, &config, out),
        Command::Map(a) => cmd_map(a, out),
        Command::Verify(a) => cmd_verify(a, &config, out),
        Command::Series(a) => cmd_series(a, &config.caps, out),
        Command::Oeis(a) => cmd_oeis(a, &config, out),
    }
}

/// `N`, `A-B`, `A..B` or `A..=B`.
pub fn parse_n_range(s: &str) -> CliResult<(usize, usize)> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("bad n {s:?}")))
    };
    let s = s.trim();
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if lo > hi {
        return Err(CliError::usage(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

fn parse_basis(s: &str) -> CliResult<PatternSet> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad basis {s:?}: {e}")))
}

fn cmd_dist(a: DistArgs, config: &Config, out: &mut dyn Write) -> CliResult {
    let stat: StatKind = a.stat.parse()?;
    let basis = parse_basis(&a.avoid)?;
    let method: Method = a.method.parse()?;
    let (lo, hi) = parse_n_range(&a.n)?;
    let source = Threaded::new(config.caps, a.workers.unwrap_or(config.workers));
    let table = distribution_table(stat, &basis, lo..=hi, method, &source)?;
    out.write_all(render::render_dist(&table, a.format).as_bytes())?;
    Ok(0)
}

fn alphabet(a: AlphabetArg) -> Alphabet {
    match a {
        AlphabetArg::Ud => Alphabet::UD,
        AlphabetArg::Binary => Alphabet::BINARY,
    }
}

fn parse_perm(s: &str) -> CliResult<Perm> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad permutation {s:?}: {e}")))
}

fn stat_lines(p: &Perm) -> String {
    StatKind::ALL
        .iter()
        .map(|k| format!("{}={}", k.name(), stat(*k, p)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_map(a: MapArgs, out: &mut dyn Write) -> CliResult {
    let abc = alphabet(a.alphabet);
    let dyck = |s: &str| DyckWord::parse_with(s, abc);
    let mut lines: Vec<String> = Vec::new();
    match (a.bijection, a.inverse) {
        (Bijection::Phi, false) => {
            let p = parse_perm(&a.input)?;
            let d = phi231(&p)?;
            lines.push(d.render(abc));
            lines.push(format!("pk(pi) = {}", stat(StatKind::Pk, &p)));
            lines.push(format!("DUU(phi(pi)) = {}", d.factor_count_str("DUU")?));
        }
        (Bijection::Phi, true) => {
            let d = dyck(&a.input)?;
            let p = phi231_inv(&d);
            lines.push(p.to_string());
            lines.push(format!("DUU(d) = {}", d.factor_count_str("DUU")?));
            lines.push(format!("pk(pi) = {}", stat(StatKind::Pk, &p)));
        }
        (Bijection::Psi, false) => {
            let p = parse_perm(&a.input)?;
            let d = psi321(&p)?;
            lines.push(d.render(abc));
            lines.push(format!("pk(pi) = {}", stat(StatKind::Pk, &p)));
            lines.push(format!("st*(psi(pi)) = {}", d.st_star()));
            lines.push(format!("des(pi) = {}", stat(StatKind::Des, &p)));
            lines.push(format!("st(psi(pi)) = {}", d.st()));
        }
        (Bijection::Psi, true) => {
            let d = dyck(&a.input)?;
            let p = psi321_inv(&d);
            lines.push(p.to_string());
            lines.push(format!("st*(d) = {}", d.st_star()));
            lines.push(format!("pk(pi) = {}", stat(StatKind::Pk, &p)));
        }
        (Bijection::PsiHat, false) => {
            let p = parse_perm(&a.input)?;
            let d = psi_hat(&p)?;
            lines.push(d.word().render(abc));
            lines.push(format!("des(pi) = {}", stat(StatKind::Des, &p)));
            lines.push(format!("st*(psi_hat(pi)) = {}", d.word().st_star()));
        }
        (Bijection::PsiHat, true) => {
            let lifted = IndecomposableWord::new(dyck(&a.input)?)?;
            let steps = lifted.word().steps();
            let inner = DyckWord::new(steps[1..steps.len() - 1].to_vec())?;
            let p = psi321_inv(&inner);
            lines.push(p.to_string());
            lines.push(format!("st*(d) = {}", lifted.word().st_star()));
            lines.push(format!("des(pi) = {}", stat(StatKind::Des, &p)));
        }
        (Bijection::Zeta, inverse) => {
            let p = parse_perm(&a.input)?;
            let q = if inverse { zeta_inv(&p)? } else { zeta(&p)? };
            lines.push(q.to_string());
            lines.push(format!(
                "pk: {} -> {}",
                stat(StatKind::Pk, &p),
                stat(StatKind::Pk, &q)
            ));
            let maxima = |p: &Perm| {
                p.ltr_maxima()
                    .iter()
                    .map(|(i, v)| format!("({i},{v})"))
                    .collect::<Vec<_>>()
                    .join("")
            };
            lines.push(format!(
                "left-to-right maxima: {} -> {}",
                maxima(&p),
                maxima(&q)
            ));
        }
        (Bijection::Iota, _) => {
            let d = dyck(&a.input)?;
            let e = iota(&d)?;
            lines.push(e.render(abc));
            let des = |w: &DyckWord| stat(StatKind::Des, &psi321_inv(w));
            lines.push(format!("st: {} -> {}", d.st(), e.st()));
            lines.push(format!("des(psi^-1): {} -> {}", des(&d), des(&e)));
        }
        (Bijection::Enc132213 | Bijection::Enc213231 | Bijection::Enc123132, false) => {
            let p = parse_perm(&a.input)?;
            let (bits, predict): (Bits, fn(StatKind, &Bits) -> usize) = match a.bijection {
                Bijection::Enc132213 => (enc_132_213(&p)?, predicted_stat_132_213),
                Bijection::Enc213231 => (enc_213_231(&p)?, predicted_stat_213_231),
                _ => (enc_123_132(&p)?, predicted_stat_123_132),
            };
            lines.push(bits.to_string());
            lines.push(format!("pi:   {}", stat_lines(&p)));
            let predicted: Vec<String> = StatKind::ALL
                .iter()
                .map(|k| format!("{}={}", k.name(), predict(*k, &bits)))
                .collect();
            lines.push(format!("word: {}", predicted.join(" ")));
        }
        (_, true) => {
            let bits: Bits = a.input.parse()?;
            let p = match a.bijection {
                Bijection::Enc132213 => dec_132_213(&bits),
                Bijection::Enc213231 => dec_213_231(&bits),
                _ => dec_123_132(&bits),
            };
            lines.push(p.to_string());
            lines.push(format!("pi:   {}", stat_lines(&p)));
        }
    }
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, config: &Config, out: &mut dyn Write) -> CliResult {
    if a.list {
        for name in check_names() {
            writeln!(out, "{name}")?;
        }
        return Ok(0);
    }
    if !a.all && a.only.is_empty() {
        return Err(CliError::usage(
            "verify needs --all, --only NAMES or --list",
        ));
    }
    let fault = match &a.inject_fault {
        Some(name) => Some(Fault::OffByOne(name.parse::<FormulaId>()?)),
        None => None,
    };
    let source = Threaded::new(config.caps, a.workers.unwrap_or(config.workers));
    let selection = (!a.only.is_empty()).then_some(a.only.as_slice());
    let reports = verify_all(a.max_n, selection, &source, fault)?;
    out.write_all(render::verify_text(&reports).as_bytes())?;
    if let Some(path) = &a.json {
        let json = render::verify_json(a.max_n, &reports);
        if path.as_os_str() == "-" {
            out.write_all(json.as_bytes())?;
        } else {
            std::fs::write(path, json)?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    })
}

fn cmd_series(a: SeriesArgs, caps: &Caps, out: &mut dyn Write) -> CliResult {
    let name: SeriesName = a.name.parse()?;
    if a.max_n > caps.series {
        return Err(CliError::usage(format!(
            "series degree {} exceeds cap {}",
            a.max_n, caps.series
        )));
    }
    let series = name.build(a.max_n)?;
    out.write_all(render::render_series(name.name(), &series, a.format).as_bytes())?;
    Ok(0)
}

fn oeis_error(e: OeisError) -> CliError {
    match e {
        OeisError::InvalidId(_) => CliError::usage(e.to_string()),
        _ => CliError::env(e.to_string()),
    }
}

fn cmd_oeis(a: OeisArgs, config: &Config, out: &mut dyn Write) -> CliResult {
    if a.format != OutputFormat::Bfile {
        return Err(CliError::usage("oeis writes b-files only (--format bfile)"));
    }
    let flat = match (&a.formula, &a.sequence) {
        (Some(f), _) => {
            let id: FormulaId = f.parse()?;
            oeis::lookup_formula(id).ok_or_else(|| {
                CliError::usage(format!("no OEIS sequence is registered for {id}"))
            })?
        }
        (None, Some(s)) => {
            let id: OeisId = s.parse().map_err(oeis_error)?;
            oeis::lookup(id.as_str())
                .ok_or_else(|| CliError::usage(format!("{id} has no registered flattening")))?
        }
        (None, None) => return Err(CliError::usage("oeis needs --formula or --sequence")),
    };
    let source = Threaded::new(config.caps, config.workers);
    let terms = oeis::local_terms(flat, a.max_n, &source)?;
    out.write_all(oeis::render_bfile(&terms).as_bytes())?;
    if !a.check {
        return Ok(0);
    }
    let id: OeisId = flat.id.parse().map_err(oeis_error)?;
    let cache = Cache::new(config.resolve_cache_dir(a.cache_dir.as_deref()));
    let client = Client::new(cache, Box::new(HttpTransport::default()))
        .offline(a.offline)
        .max_age(
            a.max_age_days
                .map(|d| std::time::Duration::from_secs(d * 86_400)),
        );
    let reference = client.fetch(&id).map_err(oeis_error)?;
    let local: Vec<_> = terms.iter().map(|(_, v)| v.clone()).collect();
    let report = oeis::compare(&local, &reference, flat.offset);
    let origin = match reference.source {
        oeis::Source::Network => "network",
        oeis::Source::Cache => "cache",
    };
    writeln!(
        out,
        "# {id} ({origin}): {} local terms, {} compared",
        local.len(),
        report.compared
    )?;
    match &report.first_mismatch {
        Some(m) => {
            writeln!(
                out,
                "# MISMATCH at term {} (index {}): local {}, reference {}",
                m.term, m.index, m.local, m.reference
            )?;
            Ok(1)
        }
        None if report.compared == 0 => {
            writeln!(
                out,
                "# MISMATCH: no reference terms at the registered indices"
            )?;
            Ok(1)
        }
        None => {
            writeln!(out, "# MATCH: first {} terms agree", report.matched)?;
            Ok(0)
        }
    }
}
