//! Command-line front end. `main` only parses arguments and calls [`run`].

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::avoid1234::{load_cache, save_cache, Avoid1234Engine, Config1234};
use crate::avoid123_revk::{Avoid123RevKEngine, Config123};
use crate::error::Error;
use crate::genfunc::{conjecture_gf_1234, derive_gf_123, GfStatus, RationalGF};
use crate::oracle::{brute_count, OracleConfig, Pattern};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "patword",
    version,
    about = "Count words on [n]^r avoiding {123 or 1234, 1k(k-1)...2}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the words for one alphabet size.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// Counts for every alphabet size 0..=terms.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        terms: usize,
    },
    /// Generating function, rigorous (123 family) or fitted (1234 family).
    Gf {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Mode::Rigorous)]
        mode: Mode,
        /// Highest alphabet size fed to the fit in conjecture mode.
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Comma-separated patterns for the brute family, e.g. `123,132`.
    #[arg(long)]
    pub patterns: Option<String>,
    /// Memo cache file for the 1234 family.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub debug_invariants: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Family {
    #[value(name = "123")]
    #[serde(rename = "123")]
    F123,
    #[value(name = "1234")]
    #[serde(rename = "1234")]
    F1234,
    #[value(name = "brute")]
    #[serde(rename = "brute")]
    Brute,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::F123 => "123",
            Family::F1234 => "1234",
            Family::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rigorous,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

/// One count, as printed by `count` and `series`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: Family,
    pub n: usize,
    pub r: u32,
    pub k: usize,
    pub count: String,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl OutputRecord {
    fn plain(&self) -> String {
        let mut line = format!(
            "family={} n={} r={} k={} count={} elapsed_ms={}",
            self.family.name(),
            self.n,
            self.r,
            self.k,
            self.count,
            self.elapsed_ms
        );
        if let Some(note) = &self.note {
            line.push_str(&format!(" note=\"{note}\""));
        }
        line
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Engine(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Count { common, n } => counts(&common, n..=n, true, out, err),
        Command::Series { common, terms } => counts(&common, 0..=terms, false, out, err),
        Command::Gf { common, mode, terms } => gf(&common, mode, terms, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Engine(e @ Error::Input(_)) => (EXIT_USAGE, e.to_string()),
                Failure::Engine(e @ (Error::Resource(_) | Error::OracleLimit { .. })) => (EXIT_RESOURCE, e.to_string()),
                Failure::Engine(e) => (EXIT_INTERNAL, e.to_string()),
                Failure::Io(e) => (EXIT_INTERNAL, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn check_common(c: &Common) -> Result<(), Failure> {
    if c.r == 0 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    if c.k < 3 {
        return Err(Failure::Usage("--k must be at least 3".into()));
    }
    if c.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    if c.patterns.is_some() && c.family != Family::Brute {
        return Err(Failure::Usage("--patterns only applies to --family brute".into()));
    }
    if c.cache.is_some() && c.family != Family::F1234 {
        return Err(Failure::Usage("--cache only applies to --family 1234".into()));
    }
    Ok(())
}

fn parse_patterns(list: Option<&str>) -> Result<Vec<Pattern>, Failure> {
    let list = list.ok_or_else(|| Failure::Usage("--family brute needs --patterns".into()))?;
    list.split(',')
        .map(|p| Pattern::parse(p.trim()).map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

fn family_note(c: &Common) -> Option<String> {
    (c.family == Family::F1234 && c.k < 4)
        .then(|| format!("k={} is below 4; the second pattern is shorter than 1234", c.k))
}

fn counts(
    c: &Common,
    range: std::ops::RangeInclusive<usize>,
    single: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    check_common(c)?;
    let note = family_note(c);
    if let Some(n) = &note {
        writeln!(err, "warning: {n}")?;
    }
    let ns: Vec<usize> = range.collect();
    let results: Vec<(usize, BigUint, u64)> = match c.family {
        Family::Brute => {
            let patterns = parse_patterns(c.patterns.as_deref())?;
            let r = c.r as usize;
            ns.iter()
                .map(|&n| {
                    let start = Instant::now();
                    let v: BigUint = brute_count(&vec![r; n], &patterns, OracleConfig::default())?;
                    Ok((n, v, start.elapsed().as_millis() as u64))
                })
                .collect::<Result<_, Error>>()?
        }
        Family::F123 => {
            let cfg = Config123::new(c.r, c.k)?.with_debug_invariants(c.debug_invariants);
            let mut engines: Vec<Avoid123RevKEngine<BigUint>> =
                (0..workers(c, &ns)).map(|_| Avoid123RevKEngine::new(cfg)).collect();
            let rows = run_on(&mut engines, &ns, |e, n| e.count_words(n))?;
            report_checks(c, engines.iter().map(|e| e.invariant_checks()).sum(), err)?;
            rows
        }
        Family::F1234 => {
            let cfg = Config1234::new(c.r, c.k)?.with_debug_invariants(c.debug_invariants);
            let make = || -> Result<Avoid1234Engine<BigUint>, Error> {
                let mut e = Avoid1234Engine::new(cfg);
                if let Some(path) = &c.cache {
                    load_cache(&mut e, path)?;
                }
                Ok(e)
            };
            let mut engines: Vec<Avoid1234Engine<BigUint>> =
                (0..workers(c, &ns)).map(|_| make()).collect::<Result<_, _>>()?;
            let rows = run_on(&mut engines, &ns, |e, n| e.count_words(n))?;
            let mut merged = engines.remove(0);
            for e in engines {
                merged.absorb(e)?;
            }
            report_checks(c, merged.invariant_checks(), err)?;
            if let Some(path) = &c.cache {
                save_cache(&merged, path)?;
            }
            rows
        }
    };
    let records: Vec<OutputRecord> = results
        .into_iter()
        .map(|(n, v, ms)| OutputRecord {
            family: c.family,
            n,
            r: c.r,
            k: c.k,
            count: v.to_string(),
            elapsed_ms: ms,
            note: note.clone(),
        })
        .collect();
    match (c.format, single) {
        (Format::Plain, _) => {
            for rec in &records {
                writeln!(out, "{}", rec.plain())?;
            }
        }
        (Format::Json, true) => writeln!(out, "{}", serde_json::to_string(&records[0])?)?,
        (Format::Json, false) => writeln!(out, "{}", serde_json::to_string(&records)?)?,
    }
    Ok(())
}

fn report_checks(c: &Common, checks: u64, err: &mut dyn Write) -> Result<(), Failure> {
    if c.debug_invariants {
        writeln!(err, "invariant checks: {checks}, violations: 0")?;
    }
    Ok(())
}

type Rows = Vec<(usize, BigUint, u64)>;

fn workers(c: &Common, ns: &[usize]) -> usize {
    c.jobs.min(ns.len()).max(1)
}

/// Splits `ns` round-robin over the engines; output stays ordered by `n`.
fn run_on<E: Send>(
    engines: &mut [E],
    ns: &[usize],
    count: impl Fn(&mut E, usize) -> Result<BigUint, Error> + Sync,
) -> Result<Rows, Error> {
    let jobs = engines.len();
    let run_slice = |(j, e): (usize, &mut E)| -> Result<Rows, Error> {
        ns.iter()
            .skip(j)
            .step_by(jobs)
            .map(|&n| {
                let start = Instant::now();
                let v = count(e, n)?;
                Ok((n, v, start.elapsed().as_millis() as u64))
            })
            .collect()
    };
    let parts: Vec<Result<Rows, Error>> = if jobs == 1 {
        engines.iter_mut().enumerate().map(run_slice).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
        pool.install(|| engines.par_iter_mut().enumerate().map(run_slice).collect())
    };
    let mut rows: Rows = Vec::with_capacity(ns.len());
    for part in parts {
        rows.extend(part?);
    }
    rows.sort_by_key(|row| row.0);
    Ok(rows)
}

fn gf(c: &Common, mode: Mode, terms: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    check_common(c)?;
    let (gf, status): (Option<RationalGF>, GfStatus) = match (mode, c.family) {
        (Mode::Rigorous, Family::F123) => (Some(derive_gf_123(c.r, c.k)?), GfStatus::Rigorous),
        (Mode::Rigorous, _) => {
            return Err(Failure::Usage(
                "rigorous mode is only available for --family 123".into(),
            ));
        }
        (Mode::Conjecture, Family::F1234) => {
            if let Some(n) = family_note(c) {
                writeln!(err, "warning: {n}")?;
            }
            (conjecture_gf_1234(c.r, c.k, terms)?, GfStatus::Conjectural)
        }
        (Mode::Conjecture, Family::F123) => {
            let cfg = Config123::new(c.r, c.k)?;
            let series: Vec<BigUint> = Avoid123RevKEngine::new(cfg).series(terms)?;
            let seq: Vec<_> = series.into_iter().map(num_bigint::BigInt::from).collect();
            (crate::genfunc::conjecture_from_series(&seq)?, GfStatus::Conjectural)
        }
        (Mode::Conjecture, Family::Brute) => {
            return Err(Failure::Usage("generating functions need --family 123 or 1234".into()));
        }
    };
    writeln!(err, "note: coefficient of x^n is the count for alphabet size n")?;
    match (gf, c.format) {
        (None, Format::Plain) => writeln!(out, "none")?,
        (None, Format::Json) => writeln!(out, "null")?,
        (Some(g), Format::Plain) => {
            let label = match status {
                GfStatus::Rigorous => "rigorous",
                GfStatus::Conjectural => "conjectural",
            };
            writeln!(out, "{g} [{label}]")?
        }
        (Some(g), Format::Json) => writeln!(out, "{}", serde_json::to_string(&g.record(status))?)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["patword"];
        argv.extend_from_slice(args);
        let cli = match Cli::try_parse_from(argv) {
            Ok(cli) => cli,
            Err(e) => return (e.exit_code(), String::new(), e.to_string()),
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_counts(out: &str) -> Vec<String> {
        let recs: Vec<OutputRecord> = serde_json::from_str(out).unwrap();
        recs.into_iter().map(|r| r.count).collect()
    }

    #[test]
    fn count_examples() {
        let (code, out, _) = exec(&["count", "--family", "123", "--n", "3", "--r", "1", "--k", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("count=4 "));
        let (_, out, _) = exec(&["count", "--family", "1234", "--n", "4", "--k", "5", "--format", "json"]);
        let rec: OutputRecord = serde_json::from_str(&out).unwrap();
        assert_eq!((rec.family, rec.count.as_str(), rec.note), (Family::F1234, "23", None));
        let (_, out, _) = exec(&["count", "--family", "brute", "--n", "3", "--patterns", "123,132"]);
        assert!(out.contains("count=4 "));
    }

    #[test]
    fn series_examples() {
        let (_, out, _) = exec(&[
            "series", "--family", "1234", "--k", "5", "--terms", "5", "--format", "json",
        ]);
        assert_eq!(json_counts(&out), ["1", "1", "2", "6", "23", "102"]);
        let (_, out, _) = exec(&["series", "--family", "123", "--terms", "0", "--format", "json"]);
        assert_eq!(json_counts(&out), ["1"]);
        let (_, a, _) = exec(&[
            "series", "--family", "123", "--r", "2", "--k", "3", "--terms", "3", "--format", "json",
        ]);
        let (_, b, _) = exec(&[
            "series",
            "--family",
            "brute",
            "--r",
            "2",
            "--terms",
            "3",
            "--patterns",
            "123,132",
            "--format",
            "json",
        ]);
        assert_eq!(json_counts(&a), json_counts(&b));
    }

    #[test]
    fn jobs_keep_order() {
        let base = [
            "series", "--family", "1234", "--k", "4", "--r", "2", "--terms", "5", "--format", "json",
        ];
        let (_, one, _) = exec(&base);
        let mut args = base.to_vec();
        args.extend(["--jobs", "3"]);
        let (_, three, _) = exec(&args);
        assert_eq!(json_counts(&one), json_counts(&three));
        let (_, three123, _) = exec(&[
            "series", "--family", "123", "--k", "4", "--terms", "6", "--jobs", "3", "--format", "json",
        ]);
        assert_eq!(json_counts(&three123), ["1", "1", "2", "5", "13", "34", "89"]);
    }

    #[test]
    fn small_k_is_flagged_for_1234() {
        let (code, out, err) = exec(&["count", "--family", "1234", "--n", "4", "--k", "3", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"));
        let rec: OutputRecord = serde_json::from_str(&out).unwrap();
        assert!(rec.note.is_some());
    }

    #[test]
    fn gf_examples() {
        let (code, out, _) = exec(&["gf", "--family", "123", "--mode", "rigorous"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "(1 - x) / (1 - 2*x) [rigorous]");
        let (_, out, _) = exec(&[
            "gf",
            "--family",
            "1234",
            "--k",
            "5",
            "--mode",
            "conjecture",
            "--terms",
            "12",
            "--format",
            "json",
        ]);
        let rec: crate::genfunc::GfRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.status, GfStatus::Conjectural);
        assert_eq!(rec.denominator, ["1", "-8", "17", "-11", "2"]);
        let (_, out, _) = exec(&[
            "gf",
            "--family",
            "1234",
            "--k",
            "5",
            "--mode",
            "conjecture",
            "--terms",
            "6",
        ]);
        assert_eq!(out.trim(), "none");
    }

    #[test]
    fn usage_and_resource_errors() {
        assert_eq!(exec(&["gf", "--family", "1234", "--mode", "rigorous"]).0, EXIT_USAGE);
        assert_eq!(
            exec(&["count", "--family", "123", "--n", "3", "--k", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(exec(&["count", "--family", "brute", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(
            exec(&["count", "--family", "123", "--n", "3", "--patterns", "12"]).0,
            EXIT_USAGE
        );
        assert_eq!(exec(&["count", "--family", "nope", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(
            exec(&["count", "--family", "brute", "--n", "20", "--patterns", "123"]).0,
            EXIT_RESOURCE
        );
    }

    #[test]
    fn debug_invariants_report() {
        let (code, _, err) = exec(&[
            "series",
            "--family",
            "1234",
            "--k",
            "4",
            "--r",
            "2",
            "--terms",
            "4",
            "--debug-invariants",
        ]);
        assert_eq!(code, 0);
        assert!(err.contains("violations: 0"));
    }
}
