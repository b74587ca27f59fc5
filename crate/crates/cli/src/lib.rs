//! The `qons` command line.

pub mod expr;

use clap::{Parser, Subcommand, ValueEnum};
use expr::{eval, parse, Target, Value};
use qonsager::freealg::CMode;
use qonsager::pbw::{pbw_count, structure_constants};
use qonsager::rewrite::{complete_fresh, install_shared, load_system, save_system, shared_system, RewriteError};
use qonsager::suite::{run_suites, Status, SuiteError, SuiteReport};
use qonsager::System;
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

pub const DEFAULT_BOUND: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "qons", version, about = "Exact computations in the q-Onsager algebra")]
struct Cli {
    /// Omit timings from reports (for reproducible output).
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    Free,
    Pbw,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the free-algebra form of an expression.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Canonical form: reduced word form or ordered root monomials.
    Normalize {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite names, comma separated or repeated; `all` runs every suite.
        #[arg(long, required = true, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a single identity `lhs = rhs` modulo the ideal.
    Check {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Normal-word counts next to ordered-monomial counts by degree.
    Dims {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build the rewrite system and write it to a cache file.
    Complete {
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        cache: PathBuf,
    },
    /// Straightening table for root pairs up to a height sum.
    Structure {
        #[arg(long)]
        bound: usize,
    },
}

enum CliError {
    Usage(String),
    Capacity(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<RewriteError> for CliError {
    fn from(e: RewriteError) -> Self {
        match e {
            RewriteError::BoundExceeded { .. } | RewriteError::Capacity { .. } => CliError::Capacity(e.to_string()),
            RewriteError::Io(e) => CliError::Io(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Rewrite(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Run with explicit arguments and streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Capacity(m)) => {
            let _ = writeln!(err, "capacity: {m}");
            EXIT_CAPACITY
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// A system completed to at least `bound`, read from or written to `cache`
/// when one is given.
fn system(bound: usize, cache: Option<&Path>) -> Result<Arc<System>, CliError> {
    let Some(path) = cache else {
        return Ok(shared_system(CMode::Generic, bound)?);
    };
    if path.exists() {
        let sys = load_system(path, CMode::Generic)?;
        if sys.completed_degree() >= bound {
            return Ok(install_shared(sys));
        }
    }
    let sys = complete_fresh(CMode::Generic, bound)?;
    save_system(&sys, path)?;
    Ok(install_shared(sys))
}

fn evaluate(text: &str, target: Target) -> Result<Value, CliError> {
    let e = parse(text).map_err(|e| CliError::Usage(e.to_string()))?;
    eval(&e, target).map_err(|e| CliError::Usage(e.to_string()))
}

fn print_value(out: &mut dyn Write, v: &Value, json: bool) -> Result<(), CliError> {
    if !json {
        writeln!(out, "{v}")?;
        return Ok(());
    }
    let terms: Vec<_> = match v {
        Value::Free(p) => p
            .terms()
            .iter()
            .rev()
            .map(|(w, k)| json!({"word": w.to_string(), "coefficient": k.to_string()}))
            .collect(),
        Value::Pbw(p) => p
            .terms()
            .map(|(m, k)| json!({"monomial": m.to_string(), "coefficient": k.to_string()}))
            .collect(),
    };
    writeln!(out, "{}", json!({"text": v.to_string(), "terms": terms}))?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Expand { expr, json } => {
            let v = evaluate(&expr, Target::Free)?;
            print_value(out, &v, json)?;
        }
        Cmd::Normalize {
            mode,
            expr,
            bound,
            cache,
            json,
        } => {
            let v = match mode {
                Mode::Pbw => evaluate(&expr, Target::Pbw)?,
                Mode::Free => {
                    let Value::Free(x) = evaluate(&expr, Target::Free)? else {
                        unreachable!("free target")
                    };
                    let degree = x.degree().unwrap_or(0);
                    if degree > bound {
                        return Err(RewriteError::BoundExceeded { degree, bound }.into());
                    }
                    Value::Free(system(bound, cache.as_deref())?.reduce(&x)?)
                }
            };
            print_value(out, &v, json)?;
        }
        Cmd::Verify {
            suite,
            bound,
            jobs,
            cache,
            json,
        } => {
            system(bound, cache.as_deref())?;
            let mut rep = run_suites(&suite, bound, jobs)?;
            if cli.no_timing {
                rep.strip_timing();
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rep).expect("serializable"))?;
            } else {
                write_report(out, &rep)?;
            }
            return Ok(if rep.failed() > 0 {
                EXIT_FAILURE
            } else if rep.skipped() > 0 {
                EXIT_CAPACITY
            } else {
                EXIT_OK
            });
        }
        Cmd::Check { lhs, rhs, bound, cache } => {
            let (Value::Free(l), Value::Free(r)) = (evaluate(&lhs, Target::Free)?, evaluate(&rhs, Target::Free)?) else {
                unreachable!("free target")
            };
            let diff = l.sub(&r);
            let degree = diff.degree().unwrap_or(0);
            if degree > bound {
                return Err(RewriteError::BoundExceeded { degree, bound }.into());
            }
            let residue = system(bound, cache.as_deref())?.reduce(&diff)?;
            if residue.is_zero() {
                writeln!(out, "pass (degree {degree})")?;
            } else {
                writeln!(out, "FAIL (degree {degree})\n    residue: {residue}")?;
                return Ok(EXIT_FAILURE);
            }
        }
        Cmd::Dims { max, cache, json } => {
            let sys = system(max, cache.as_deref())?;
            let mut rows = Vec::new();
            for d in 0..=max {
                rows.push((d, sys.normal_count(d)?, pbw_count(d)));
            }
            if json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(d, n, p)| json!({"degree": d, "normal_words": n, "pbw_monomials": p}))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(v))?;
            } else {
                writeln!(out, "degree\tnormal_words\tpbw_monomials")?;
                for (d, n, p) in &rows {
                    writeln!(out, "{d}\t{n}\t{p}")?;
                }
            }
            if rows.iter().any(|(_, n, p)| n != p) {
                return Ok(EXIT_FAILURE);
            }
        }
        Cmd::Complete { bound, cache } => {
            let sys = system(bound, Some(&cache))?;
            writeln!(
                out,
                "{}: {} rules, completed to degree {}",
                cache.display(),
                sys.rule_count(),
                sys.completed_degree()
            )?;
        }
        Cmd::Structure { bound } => {
            let table = structure_constants(bound);
            writeln!(out, "{}", serde_json::to_string_pretty(&table).expect("serializable"))?;
        }
    }
    Ok(EXIT_OK)
}

fn write_report(out: &mut dyn Write, rep: &SuiteReport) -> std::io::Result<()> {
    for i in &rep.items {
        let status = match i.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Skipped { needs } => format!("skip (needs bound {needs})"),
        };
        let params = if i.params.is_empty() { String::new() } else { format!(" [{}]", i.params) };
        let time = i.millis.map(|m| format!(" {m} ms")).unwrap_or_default();
        writeln!(out, "{status}  {}: {}{params} deg {}{time}", i.suite, i.identity, i.degree)?;
        if let Some(w) = &i.witness {
            writeln!(out, "    residue: {w}")?;
        }
    }
    let passed = rep.items.iter().filter(|i| i.status == Status::Pass).count();
    writeln!(
        out,
        "{passed} passed, {} failed, {} skipped at bound {}",
        rep.failed(),
        rep.skipped(),
        rep.bound
    )
}
