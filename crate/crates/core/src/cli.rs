//! Command-line front end.
//!
//! [`run_with`] parses arguments, runs one subcommand and returns the exit
//! code: 0 on success, 1 when a verification fails, 2 for usage and input
//! errors, 3 for internal errors. Results go to `out`, diagnostics and wall
//! times to `err`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::characters::{character_table, store, MAX_TABLE_N};
use crate::classify::{self, VerificationReport};
use crate::error::{Error, Result};
use crate::extreme::almost_extreme_report;
use crate::kronecker::{kron_coefficient, kron_decompose, Method};
use crate::lr::{classify_skew_shape, outer_product_expand, skew_decompose};
use crate::par::{set_default_threads, Execution};
use crate::partition::{Partition, SkewShape};
use crate::vchar::VirtualCharacter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Dvir,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "34c")]
    ThreeFourComponents,
    Extcomp,
    Special,
    Skew2,
    DvirOracle,
    DvirRandom,
    AlmostWidth,
    Lemmas,
    SkewLemmas,
    SkewProducts,
    HookBound,
}

#[derive(Debug, Parser)]
#[command(name = "kronlab", version, about = "Kronecker products of symmetric-group characters")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,

    /// Worker threads for sweeps and verification (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Directory for cached character tables. Overrides KRONLAB_CACHE.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Refuse any n above this bound.
    #[arg(long, global = true, default_value_t = 12)]
    pub n_limit: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of S_n, classes and rows in decreasing lexicographic order.
    Chartable { n: usize },
    /// Decompose [μ]·[ν].
    Kron {
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value = "brute")]
        method: MethodArg,
    },
    /// The Kronecker coefficient d(μ,ν;λ).
    Kroncoeff {
        mu: Partition,
        nu: Partition,
        lambda: Partition,
    },
    /// Outer product [β]⊗[γ] by the Littlewood-Richardson rule.
    Lr { beta: Partition, gamma: Partition },
    /// Decompose the skew character [outer/inner].
    Skew { shape: SkewShape },
    /// Partition, rotated partition or proper skew shape.
    ClassifySkew { shape: SkewShape },
    /// (Almost) extreme constituents of [μ]·[ν].
    Extreme { mu: Partition, nu: Partition },
    /// Component counts for all unordered pairs of partitions of n, as JSON lines.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Write the catalog here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check a classification statement.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n_max: usize,
        /// Samples for dvir-random.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Seed for dvir-random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure of a subcommand, already mapped to an exit code.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::SizeMismatch { .. }
            | Error::OutOfRange { .. }
            | Error::NotContained { .. }
            | Error::TrivialCharacter(_)
            | Error::NotAdjustable { .. }
            | Error::NodeOutsideDiagram { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            3
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("KRONLAB_CACHE") {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("kronlab"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("kronlab"))
}

fn writable(dir: &Path) -> bool {
    fs::create_dir_all(dir).is_ok() && tempfile::NamedTempFile::new_in(dir).is_ok()
}

fn configure_cache(cli: &Cli, err: &mut dyn Write) {
    let dir = cli.cache_dir.clone().or_else(default_cache_dir);
    let dir = match dir {
        Some(d) if writable(&d) => Some(d),
        Some(d) => {
            let _ = writeln!(
                err,
                "warning: cache directory {} is not writable; tables are kept in memory",
                d.display()
            );
            None
        }
        None => None,
    };
    store().set_cache_dir(dir);
}

fn guard(cli: &Cli, what: &'static str, n: usize) -> std::result::Result<(), Failure> {
    let max = cli.n_limit.min(MAX_TABLE_N);
    if n > max {
        return Err(Error::OutOfRange {
            what,
            value: n,
            min: 0,
            max,
        }
        .into());
    }
    Ok(())
}

fn same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::result::Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn emit_character(
    cli: &Cli,
    out: &mut dyn Write,
    v: &VirtualCharacter,
) -> std::result::Result<(), Failure> {
    match cli.output {
        OutputFormat::Json => emit_json(out, v),
        OutputFormat::Text => {
            writeln!(out, "{}", v.render())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, Failure> {
    configure_cache(cli, err);
    if let Some(t) = cli.threads {
        set_default_threads(t as usize);
    }
    match &cli.command {
        Command::Chartable { n } => {
            guard(cli, "n", *n)?;
            let table = character_table(*n)?;
            match cli.output {
                OutputFormat::Json => {
                    let rows: Vec<_> = table
                        .labels()
                        .iter()
                        .enumerate()
                        .map(|(i, l)| json!({"label": l, "values": table.row_values(i)}))
                        .collect();
                    emit_json(out, &json!({"n": n, "classes": table.classes(), "rows": rows}))?;
                }
                OutputFormat::Text => {
                    let classes: Vec<String> = table.classes().iter().map(|c| c.to_string()).collect();
                    writeln!(out, "classes: {}", classes.join(" "))?;
                    for (i, l) in table.labels().iter().enumerate() {
                        let vals: Vec<String> = table.row_values(i).iter().map(|v| v.to_string()).collect();
                        writeln!(out, "{l}: {}", vals.join(" "))?;
                    }
                }
            }
        }
        Command::Kron { mu, nu, method } => {
            same_size(mu, nu)?;
            guard(cli, "n", mu.size())?;
            let product = match method {
                MethodArg::Brute => kron_decompose(mu, nu, Method::Brute)?,
                MethodArg::Dvir => kron_decompose(mu, nu, Method::Dvir)?,
                MethodArg::Both => {
                    let a = kron_decompose(mu, nu, Method::Brute)?;
                    let b = kron_decompose(mu, nu, Method::Dvir)?;
                    if a != b {
                        return Err(Failure::Internal(format!(
                            "methods disagree on {mu}*{nu}: brute {a}, dvir {b}"
                        )));
                    }
                    a
                }
            };
            emit_character(cli, out, &product)?;
        }
        Command::Kroncoeff { mu, nu, lambda } => {
            same_size(mu, nu)?;
            same_size(mu, lambda)?;
            guard(cli, "n", mu.size())?;
            let c = kron_coefficient(mu, nu, lambda)?;
            match cli.output {
                OutputFormat::Json => emit_json(
                    out,
                    &json!({"mu": mu, "nu": nu, "lambda": lambda, "coefficient": c}),
                )?,
                OutputFormat::Text => writeln!(out, "{c}")?,
            }
        }
        Command::Lr { beta, gamma } => {
            guard(cli, "n", beta.size() + gamma.size())?;
            emit_character(cli, out, &outer_product_expand(beta, gamma))?;
        }
        Command::Skew { shape } => {
            guard(cli, "n", shape.size())?;
            emit_character(cli, out, &skew_decompose(shape))?;
        }
        Command::ClassifySkew { shape } => {
            let class = classify_skew_shape(shape);
            match cli.output {
                OutputFormat::Json => {
                    emit_json(out, &json!({"class": class.tag(), "partition": class.partition()}))?
                }
                OutputFormat::Text => match class.partition() {
                    Some(p) => writeln!(out, "{} {p}", class.tag())?,
                    None => writeln!(out, "{}", class.tag())?,
                },
            }
        }
        Command::Extreme { mu, nu } => {
            same_size(mu, nu)?;
            guard(cli, "n", mu.size())?;
            let report = almost_extreme_report(mu, nu)?;
            match cli.output {
                OutputFormat::Json => emit_json(out, &report)?,
                OutputFormat::Text => {
                    writeln!(out, "m = {}, m~ = {}", report.m, report.m_tilde)?;
                    writeln!(out, "width max: {}", report.width_max.render())?;
                    writeln!(out, "width almost: {}", report.width_almost.render())?;
                    writeln!(out, "length max: {}", report.length_max.render())?;
                    writeln!(out, "length almost: {}", report.length_almost.render())?;
                    writeln!(out, "(almost) extreme components: {}", report.count)?;
                }
            }
        }
        Command::Sweep { n, out: path } => {
            guard(cli, "n", *n)?;
            let started = Instant::now();
            let exec = Execution::from_threads(cli.threads.map(|t| t as usize));
            let entries = classify::sweep_with(*n, exec)?;
            match path {
                Some(p) => {
                    let file = fs::File::create(p)?;
                    classify::write_catalog(&entries, std::io::BufWriter::new(file))?;
                }
                None => classify::write_catalog(&entries, &mut *out)?,
            }
            let _ = writeln!(err, "sweep n={n}: {} pairs in {:.2?}", entries.len(), started.elapsed());
        }
        Command::Verify {
            theorem,
            n_max,
            samples,
            seed,
        } => {
            guard(cli, "n_max", *n_max)?;
            let report = verify(*theorem, *n_max, *samples, *seed)?;
            match cli.output {
                OutputFormat::Json => emit_json(out, &report)?,
                OutputFormat::Text => write_report(out, &report)?,
            }
            let _ = writeln!(err, "{}: {:.2?}", report.theorem, report.wall_time);
            return Ok(if report.pass { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn verify(theorem: Theorem, n_max: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
    match theorem {
        Theorem::ThreeFourComponents => classify::verify_34c(n_max),
        Theorem::Extcomp => classify::verify_extcomp(n_max),
        Theorem::Special => classify::verify_special(n_max),
        Theorem::Skew2 => classify::skew_two_component_census(n_max),
        Theorem::DvirOracle => classify::verify_dvir_oracle(n_max),
        Theorem::DvirRandom => classify::verify_dvir_random(n_max, samples, seed),
        Theorem::AlmostWidth => classify::verify_almost_width(n_max),
        Theorem::Lemmas => classify::verify_section_lemmas(n_max),
        Theorem::SkewLemmas => classify::verify_skew_lemmas(n_max),
        Theorem::SkewProducts => classify::verify_skew_products(n_max),
        Theorem::HookBound => classify::verify_hook_bound(n_max),
    }
}

fn write_report(out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<()> {
    writeln!(
        out,
        "{} n<={}: {} ({} checks, {} counterexamples)",
        r.theorem,
        r.n_max,
        if r.pass { "PASS" } else { "FAIL" },
        r.checked,
        r.counterexample_count
    )?;
    for cx in &r.counterexamples {
        write!(out, "  {}: {}", cx.case, cx.message)?;
        if let (Some(e), Some(a)) = (&cx.expected, &cx.actual) {
            write!(out, " (expected {e}, got {a})")?;
        }
        writeln!(out)?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}
