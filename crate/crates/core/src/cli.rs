//! Command-line front end: `graytable`, `search` and `verify`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::chainring::ChainRing;
use crate::codes::{CodeFamily, CodeReport, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixtures;
use crate::graymap::GrayContext;
use crate::matrix::Matrix;
use crate::verify::{self, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

/// Largest ring enumerated by `graytable`.
pub const TABLE_LIMIT: u128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "chainring-gray",
    version,
    about = "Gray maps and constacyclic codes over F_q[u]/<u^k>"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gray image and Lee weight of every ring element.
    Graytable(RunArgs),
    /// Every code of each length, with its Gray image parameters.
    Search(RunArgs),
    /// Run the self-check suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Nilpotency index of u.
    #[arg(long)]
    pub k: usize,
    /// Shift unit as a0,a1,...,a_{k-1} with a1 = 1.
    #[arg(long)]
    pub lambda: String,
    /// Code length; repeat or comma-separate for several.
    #[arg(long = "N", value_delimiter = ',')]
    pub lens: Vec<usize>,
    /// Field modulus coefficients c0,c1,...,cm (low degree first).
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Codeword evaluations allowed per distance computation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Random samples per homomorphism check.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Add 1 to entry (row, col) of P before checking.
    #[arg(long, hide = true, value_name = "ROW,COL")]
    pub corrupt_p: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub gray: GrayContext,
    pub lens: Vec<usize>,
    pub format: Format,
    pub budget: u64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<RunConfig> {
        let modulus = args
            .modulus
            .as_deref()
            .map(|s| {
                s.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient {t:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .transpose()?;
        let field = Field::new(args.p, args.m, modulus)?;
        let ring = ChainRing::parse(field, args.k, &args.lambda)?;
        let gray = GrayContext::new(ring)?;
        if args.lens.contains(&0) {
            return Err(Error::BadLength);
        }
        Ok(RunConfig {
            gray,
            lens: args.lens.clone(),
            format: args.format,
            budget: args.budget,
            out: args.out.clone(),
        })
    }

    fn sink<'a>(&self, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
            )),
            None => Box::new(stdout),
        })
    }
}

/// Parses the process arguments and runs; returns the exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Graytable(args) => {
            RunConfig::from_args(&args).and_then(|cfg| cmd_graytable(&cfg, stdout, stderr))
        }
        Command::Search(args) => {
            RunConfig::from_args(&args).and_then(|cfg| cmd_search(&cfg, stdout, stderr))
        }
        Command::Verify(args) => cmd_verify(&args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INVALID,
            }
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    element: String,
    gray_image: String,
    lee_weight: usize,
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

pub fn cmd_graytable(
    cfg: &RunConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let ring = cfg.gray.ring();
    if ring.order() > TABLE_LIMIT {
        return Err(Error::TableTooLarge(ring.order()));
    }
    let annotate = is_example_ring(ring);
    let rows: Vec<TableRow> = (0..ring.order())
        .map(|idx| {
            let a = ring.elem_from_index(idx);
            let v = cfg.gray.phi(&a);
            if annotate {
                if let Some(flag) = fixtures::gray_row(&a.to_string()).and_then(|r| r.flag) {
                    let _ = writeln!(stderr, "note: {a}: {flag}");
                }
            }
            TableRow {
                element: a.to_text(),
                gray_image: v.to_text(),
                lee_weight: v.weight(),
            }
        })
        .collect();
    let mut out = cfg.sink(stdout)?;
    write_rows(&mut out, cfg.format, &rows)?;
    out.flush().map_err(io_err)?;
    Ok(EXIT_OK)
}

fn is_example_ring(ring: &ChainRing) -> bool {
    let f = ring.field();
    let ex = fixtures::R3;
    f.characteristic() == ex.p
        && f.degree() == 1
        && ring.k() == ex.k
        && ring.lambda().to_text() == ex.lambda
}

fn write_rows<T: Serialize>(out: &mut dyn Write, format: Format, rows: &[T]) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r).map_err(io_err)?;
                writeln!(out).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

/// CodeReport with list fields joined by ';' for CSV.
#[derive(Serialize)]
struct FlatReport<'a> {
    p: u32,
    m: usize,
    k: usize,
    lambda: &'a str,
    #[serde(rename = "N")]
    len: usize,
    r: u32,
    theta: u32,
    factors: String,
    exponents: String,
    length: usize,
    dimension: usize,
    cardinality_exponent: usize,
    min_distance: Option<usize>,
    distance_exact: bool,
    ring_generator: &'a str,
    gray_generator: &'a str,
}

impl<'a> From<&'a CodeReport> for FlatReport<'a> {
    fn from(r: &'a CodeReport) -> FlatReport<'a> {
        let exps: Vec<String> = r.exponents.iter().map(u32::to_string).collect();
        FlatReport {
            p: r.p,
            m: r.m,
            k: r.k,
            lambda: &r.lambda,
            len: r.len,
            r: r.r,
            theta: r.theta,
            factors: r.factors.join(";"),
            exponents: exps.join(";"),
            length: r.length,
            dimension: r.dimension,
            cardinality_exponent: r.cardinality_exponent,
            min_distance: r.min_distance,
            distance_exact: r.distance_exact,
            ring_generator: &r.ring_generator,
            gray_generator: &r.gray_generator,
        }
    }
}

/// Reports for every code of one length, in spec order.
pub fn search_length(gray: &GrayContext, len: usize, budget: u64) -> Result<Vec<CodeReport>> {
    let fam = CodeFamily::new(gray.clone(), len)?;
    let specs: Vec<_> = fam.specs().collect();
    specs.par_iter().map(|s| fam.report(s, budget)).collect()
}

pub fn cmd_search(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    if cfg.lens.is_empty() {
        return Err(Error::Parse("search needs at least one --N".into()));
    }
    let mut out = cfg.sink(stdout)?;
    let mut header_written = false;
    let mut all_exact = true;
    for &len in &cfg.lens {
        let fam = CodeFamily::new(cfg.gray.clone(), len)?;
        let specs: Vec<_> = fam.specs().collect();
        let chunk = rayon::current_num_threads().max(1) * 4;
        let mut best: std::collections::BTreeMap<usize, Option<usize>> = Default::default();
        let (mut total, mut exact) = (0usize, 0usize);
        for part in specs.chunks(chunk) {
            let reports: Vec<CodeReport> = part
                .par_iter()
                .map(|s| fam.report(s, cfg.budget))
                .collect::<Result<_>>()?;
            let mut csv_out = (cfg.format == Format::Csv).then(|| {
                csv::WriterBuilder::new()
                    .has_headers(!header_written)
                    .from_writer(Vec::new())
            });
            for r in &reports {
                total += 1;
                if r.distance_exact {
                    exact += 1;
                }
                let slot = best.entry(r.dimension).or_insert(None);
                if let Some(d) = r.min_distance {
                    *slot = Some(slot.map_or(d, |b: usize| b.max(d)));
                }
                match &mut csv_out {
                    Some(w) => w.serialize(FlatReport::from(r)).map_err(io_err)?,
                    None => {
                        serde_json::to_writer(&mut out, r).map_err(io_err)?;
                        writeln!(out).map_err(io_err)?;
                    }
                }
            }
            if let Some(w) = csv_out {
                header_written = true;
                out.write_all(&w.into_inner().map_err(io_err)?)
                    .map_err(io_err)?;
            }
            out.flush().map_err(io_err)?;
        }
        all_exact &= exact == total;
        let n = fam.gray_len();
        let bests: Vec<String> = best
            .iter()
            .rev()
            .map(|(dim, d)| match d {
                Some(d) => format!("[{n},{dim},{d}]"),
                None if *dim == 0 => format!("[{n},0]"),
                None => format!("[{n},{dim},?]"),
            })
            .collect();
        writeln!(
            stderr,
            "summary N={len}: {total} codes, {exact} exact distances; best per dimension: {}",
            bests.join(" ")
        )
        .map_err(io_err)?;
    }
    Ok(if all_exact { EXIT_OK } else { EXIT_BUDGET })
}

fn corrupt(gray: &GrayContext, at: &str) -> Result<GrayContext> {
    let bad = || Error::Parse(format!("--corrupt-p expects ROW,COL, got {at:?}"));
    let (i, j) = at.split_once(',').ok_or_else(bad)?;
    let (i, j): (usize, usize) = (
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    );
    let k = gray.k();
    if i >= k || j >= k {
        return Err(bad());
    }
    let f = gray.field();
    let mut delta = Matrix::zero(k, k);
    delta.row_mut(i)[j] = crate::field::Elem::ONE;
    let p = gray.p_matrix().add(&delta, f);
    GrayContext::with_p_matrix(gray.ring().clone(), p)
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = RunConfig::from_args(&args.run)?;
    let gray = match &args.corrupt_p {
        Some(at) => corrupt(&cfg.gray, at)?,
        None => cfg.gray.clone(),
    };
    let limits = Limits {
        samples: args.samples,
        preimages: args.samples.div_ceil(10),
        ..Limits::default()
    };
    let checks = verify::run(&gray, &cfg.lens, &limits)?;
    let mut out = cfg.sink(stdout)?;
    match cfg.format {
        Format::Csv => {
            for c in &checks {
                writeln!(out, "{c}").map_err(io_err)?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len()).map_err(io_err)?;
        }
        Format::Json => write_rows(&mut out, Format::Json, &checks)?,
    }
    out.flush().map_err(io_err)?;
    Ok(if verify::all_passed(&checks) {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}
