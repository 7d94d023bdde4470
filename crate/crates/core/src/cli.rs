//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! ```text
//! qwilson verify wilson --n 2..6
//! qwilson verify chapman-pan --p 5 --format json
//! qwilson compute fpoly --n 3
//! qwilson compute orbits --n 4 --format csv
//! ```
//!
//! Exit codes: 0 when every check passes, 1 when any check fails or a
//! computation errors, 2 on usage or parameter errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bigpoly::{cyclotomic, Polynomial};
use crate::cache::{resolve_cache_dir, FCache};
use crate::error::Error;
use crate::numth::{gcd, is_prime};
use crate::orbit::{self, orbit_census};
use crate::permstat::{check_mahonian, f_poly};
use crate::qcalc::{self, check_q_fermat, q_binomial, q_factorial, QBinomialTable};
use crate::report::CongruenceReport;
use crate::wilson;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Inclusive integer range written `lo..hi`, or a single value `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: u64,
    pub hi: u64,
}

impl IntRange {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "qwilson", version)]
#[command(about = "Exact checks of a q-analogue of Wilson's congruence and related q-congruences")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Directory for cached f_n(q) documents (else $QWILSON_CACHE_DIR, else the user data dir)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the f_n(q) cache
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verifier over a parameter range, one report per instance
    Verify(VerifyArgs),
    /// Print a single object
    Compute(ComputeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Wilson,
    Lucas,
    Fermat,
    ChapmanPan,
    Mahonian,
    Lemmas,
    Ramanujan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Enumerate every cycle and reduce f_{n-1}(q)
    Brute,
    /// Sum rotation-orbit contributions
    Orbits,
    /// Run both
    Both,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,

    /// Range of n, `lo..hi` inclusive or a single value
    #[arg(long)]
    pub n: Option<IntRange>,

    /// Primes for chapman-pan, `lo..hi` inclusive or a single prime
    #[arg(long)]
    pub p: Option<IntRange>,

    /// Largest a (fermat) or largest a and c (lucas)
    #[arg(long)]
    pub a_max: Option<u64>,

    /// How wilson computes its residue
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,

    /// Random cycles per n for lemma checks at n >= 10
    #[arg(long, default_value_t = orbit::DEFAULT_SAMPLES)]
    pub samples: usize,

    /// Seed for sampled lemma checks
    #[arg(long, default_value_t = orbit::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComputeTarget {
    Cyclotomic,
    Qfactorial,
    Qbinomial,
    Fpoly,
    Orbits,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub target: ComputeTarget,

    #[arg(long)]
    pub n: u64,

    /// Lower index for qbinomial
    #[arg(long)]
    pub k: Option<u64>,
}

/// A failure that decides the exit code.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_bounds(name: &str, r: IntRange, lo: u64, hi: u64) -> Result<(), CliError> {
    if r.lo < lo || r.hi > hi {
        return Err(usage(format!("--{name} {r} is outside the supported range {lo}..{hi}")));
    }
    Ok(())
}

/// Streams reports in the chosen format. CSV gets a fresh header whenever
/// the parameter columns change.
struct Emitter<'a> {
    format: Format,
    out: &'a mut (dyn Write + Send),
    csv_header: Option<String>,
    total: usize,
    failed: usize,
}

impl<'a> Emitter<'a> {
    fn new(format: Format, out: &'a mut (dyn Write + Send)) -> Self {
        Self {
            format,
            out,
            csv_header: None,
            total: 0,
            failed: 0,
        }
    }

    fn emit(&mut self, r: &CongruenceReport) -> std::io::Result<()> {
        self.total += 1;
        if !r.passed() {
            self.failed += 1;
        }
        match self.format {
            Format::Text => writeln!(self.out, "{}", r.to_text()),
            Format::Json => writeln!(self.out, "{}", r.to_json()),
            Format::Csv => {
                let header = r.csv_header();
                if self.csv_header.as_deref() != Some(header.as_str()) {
                    writeln!(self.out, "{header}")?;
                    self.csv_header = Some(header);
                }
                writeln!(self.out, "{}", r.to_csv_row())
            }
        }
    }

    fn finish(&mut self) -> std::io::Result<i32> {
        if self.format == Format::Text {
            writeln!(
                self.out,
                "{} checks, {} passed, {} failed",
                self.total,
                self.total - self.failed,
                self.failed
            )?;
        }
        Ok(if self.failed == 0 { EXIT_OK } else { EXIT_FAIL })
    }
}

struct Context {
    format: Format,
    cache: Option<FCache>,
}

impl Context {
    /// `f_n(q)`, through the cache when one is configured.
    fn f_poly(&mut self, n: u64, err: &mut (dyn Write + Send)) -> Result<Polynomial, CliError> {
        let Some(cache) = self.cache.as_mut() else {
            return Ok(f_poly(n as usize));
        };
        if let Some(f) = cache.load(n)? {
            return Ok(f);
        }
        let f = f_poly(n as usize);
        if let Err(e) = cache.store(n, &f) {
            writeln!(err, "warning: {e}")?;
        }
        Ok(f)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(&cli, out, err)),
            Err(e) => Err(usage(format!("cannot start {jobs} worker threads: {e}"))),
        },
        None => execute(&cli, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let cache = if cli.no_cache {
        None
    } else {
        resolve_cache_dir(cli.cache_dir.as_deref()).map(FCache::new)
    };
    let mut ctx = Context {
        format: cli.format,
        cache,
    };
    match &cli.command {
        Command::Verify(args) => verify(&mut ctx, args, out, err),
        Command::Compute(args) => compute(&mut ctx, args, out, err),
    }
}

fn verify(
    ctx: &mut Context,
    args: &VerifyArgs,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, CliError> {
    use VerifyTarget::*;
    if args.p.is_some() && args.target != ChapmanPan {
        return Err(usage("--p only applies to chapman-pan"));
    }
    if args.n.is_some() && args.target == ChapmanPan {
        return Err(usage("chapman-pan takes --p, not --n"));
    }
    if args.a_max.is_some() && !matches!(args.target, Lucas | Fermat) {
        return Err(usage("--a-max only applies to lucas and fermat"));
    }
    if args.method != Method::Brute && args.target != Wilson {
        return Err(usage("--method only applies to wilson"));
    }
    let n_or = |lo, hi| args.n.unwrap_or(IntRange::new(lo, hi));
    let mut em = Emitter::new(ctx.format, out);

    match args.target {
        Wilson => {
            let range = n_or(2, 10);
            let max = if args.method == Method::Brute { 12 } else { 11 };
            check_bounds("n", range, 2, max)?;
            for n in range.iter() {
                if matches!(args.method, Method::Brute | Method::Both) {
                    let started = std::time::Instant::now();
                    let f = ctx.f_poly(n - 1, err)?;
                    em.emit(&wilson::check_wilson_from(n, &f).timed(started))?;
                }
                if matches!(args.method, Method::Orbits | Method::Both) {
                    em.emit(&wilson::check_wilson_orbits(n)?)?;
                }
            }
        }
        Lucas => {
            let range = n_or(2, 12);
            check_bounds("n", range, 2, 20)?;
            let ac_max = args.a_max.unwrap_or(3);
            if ac_max > 5 {
                return Err(usage("--a-max for lucas is at most 5"));
            }
            let table = QBinomialTable::new((ac_max * range.hi + range.hi - 1) as usize);
            for n in range.iter() {
                for inst in qcalc::q_lucas_instances(n, ac_max) {
                    em.emit(&qcalc::check_q_lucas_with(&table, &inst))?;
                }
            }
        }
        Fermat => {
            let range = n_or(2, 12);
            check_bounds("n", range, 2, 40)?;
            let a_max = args.a_max.unwrap_or(12);
            if !(1..=40).contains(&a_max) {
                return Err(usage("--a-max for fermat must be in 1..40"));
            }
            for n in range.iter() {
                for a in (1..=a_max).filter(|&a| gcd(a, n) == 1) {
                    em.emit(&check_q_fermat(a, n)?)?;
                }
            }
        }
        ChapmanPan => {
            let primes: Vec<u64> = match args.p {
                None => vec![5, 7, 11, 13],
                Some(r) if r.lo == r.hi => {
                    if !is_prime(r.lo) || r.lo <= 3 {
                        return Err(usage(format!("--p {} must be a prime above 3", r.lo)));
                    }
                    vec![r.lo]
                }
                Some(r) => {
                    check_bounds("p", r, 5, 101)?;
                    r.iter().filter(|&p| is_prime(p)).collect()
                }
            };
            if primes.iter().any(|&p| p > 101) {
                return Err(usage("--p is supported up to 101"));
            }
            for p in primes {
                em.emit(&qcalc::check_chapman_pan(p)?)?;
            }
        }
        Mahonian => {
            let range = n_or(1, 8);
            check_bounds("n", range, 1, 10)?;
            for n in range.iter() {
                em.emit(&check_mahonian(n as usize))?;
            }
        }
        Lemmas => {
            let range = n_or(2, 8);
            check_bounds("n", range, 2, 30)?;
            for n in range.iter() {
                let n = n as usize;
                let transfer = if n < orbit::EXHAUSTIVE_LIMIT {
                    orbit::verify_lemma_transfer(n)
                } else {
                    orbit::verify_lemma_transfer_sampled(n, args.samples, args.seed)
                };
                em.emit(&transfer)?;
                if n < orbit::EXHAUSTIVE_LIMIT {
                    em.emit(&orbit::verify_lemma_fixed_and_des1(n))?;
                }
            }
        }
        Ramanujan => {
            let range = n_or(1, 100);
            check_bounds("n", range, 1, 1000)?;
            for n in range.iter() {
                em.emit(&wilson::check_ramanujan_sum(n))?;
                if n >= 2 {
                    em.emit(&wilson::check_totative_sum(n))?;
                }
            }
        }
    }
    Ok(em.finish()?)
}

fn compute(
    ctx: &mut Context,
    args: &ComputeArgs,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, CliError> {
    use ComputeTarget::*;
    let n = args.n;
    let bounded = |lo: u64, hi: u64| check_bounds("n", IntRange::new(n, n), lo, hi);
    if args.k.is_some() && args.target != Qbinomial {
        return Err(usage("--k only applies to qbinomial"));
    }
    let (name, mut params, value) = match args.target {
        Cyclotomic => {
            bounded(1, 10_000)?;
            ("cyclotomic", vec![("n", n)], cyclotomic(n))
        }
        Qfactorial => {
            bounded(0, 200)?;
            ("qfactorial", vec![("n", n)], q_factorial(n as usize))
        }
        Qbinomial => {
            bounded(0, 200)?;
            let k = args.k.ok_or_else(|| usage("qbinomial needs --k"))?;
            ("qbinomial", vec![("n", n), ("k", k)], q_binomial(n as usize, k as usize))
        }
        Fpoly => {
            bounded(1, 11)?;
            ("fpoly", vec![("n", n)], ctx.f_poly(n, err)?)
        }
        Orbits => {
            bounded(2, 10)?;
            return print_orbits(ctx.format, n as usize, out);
        }
    };
    params.sort_by_key(|&(k, _)| k);
    match ctx.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => {
            let p: serde_json::Map<_, _> = params.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect();
            writeln!(out, "{}", json!({"object": name, "params": p, "value": value.to_string()}))?;
        }
        Format::Csv => {
            let keys: Vec<&str> = params.iter().map(|&(k, _)| k).collect();
            let vals: Vec<String> = params.iter().map(|&(_, v)| v.to_string()).collect();
            writeln!(out, "object,{},value", keys.join(","))?;
            writeln!(out, "{name},{},{value}", vals.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn print_orbits(format: Format, n: usize, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let census = orbit_census(n);
    match format {
        Format::Text => {
            for rec in &census {
                writeln!(out, "{} {} {} {}", rec.rep, rec.size, rec.rep_maj_bar, rec.rep_des_bar)?;
            }
        }
        Format::Json => {
            let orbits: Vec<_> = census
                .iter()
                .map(|rec| {
                    json!({
                        "rep": rec.rep.images(),
                        "h": rec.size,
                        "maj_bar": rec.rep_maj_bar,
                        "des_bar": rec.rep_des_bar,
                    })
                })
                .collect();
            writeln!(out, "{}", json!({"object": "orbits", "params": {"n": n}, "orbits": orbits}))?;
        }
        Format::Csv => {
            writeln!(out, "rep,h,maj_bar,des_bar")?;
            for rec in &census {
                writeln!(out, "\"{}\",{},{},{}", rec.rep, rec.size, rec.rep_maj_bar, rec.rep_des_bar)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_syntax() {
        assert_eq!("2..6".parse::<IntRange>().unwrap(), IntRange::new(2, 6));
        assert_eq!("7".parse::<IntRange>().unwrap(), IntRange::new(7, 7));
        assert!("6..2".parse::<IntRange>().is_err());
        assert!("a..2".parse::<IntRange>().is_err());
        assert!("-1".parse::<IntRange>().is_err());
        assert_eq!(IntRange::new(2, 6).iter().count(), 5);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
