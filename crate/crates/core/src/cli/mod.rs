//! Command-line driver: `verify`, `series` and `list`.

mod glob;
mod report;

pub use glob::{any_match, glob_match};
pub use report::{Emitter, Format, Record};

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::congruences::{self, RangeEntry, ResidueClass};
use crate::identities::{self, IdentityCase};
use crate::series::{self, SeriesCase};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "supercong", version, about = "Exact checks of binomial-harmonic identities, supercongruences and series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check congruences over a prime range and/or identities over an n range.
    Verify(VerifyArgs),
    /// Sum infinite series and compare with their closed forms.
    Series(SeriesArgs),
    /// Print the registries.
    List(ListArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Stop after the first failing check.
    #[arg(long)]
    pub fail_fast: bool,
    /// Report micros = 0 so runs can be compared byte for byte.
    #[arg(long)]
    pub omit_timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Comma-separated id globs.
    #[arg(long, default_value = "*")]
    pub cases: String,
    /// Inclusive prime range `lo..hi` for congruences.
    #[arg(long, value_parser = parse_range)]
    pub primes: Option<RangeInclusive<u64>>,
    /// Inclusive parameter range `lo..hi` for identities.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<u64>>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long, default_value = "*")]
    pub cases: String,
    /// Number of summed terms N.
    #[arg(long, default_value_t = 100_000)]
    pub terms: u64,
    /// Working precision in bits.
    #[arg(long, default_value_t = 256)]
    pub bits: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    All,
    Congruence,
    Identity,
    Series,
}

#[derive(Debug, Clone, Args)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub kind: Kind,
}

pub const DEFAULT_PRIMES: RangeInclusive<u64> = 5..=199;
pub const DEFAULT_N: RangeInclusive<u64> = 0..=100;

pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("bad lower bound `{lo}`: {e}"))?;
    let hi: u64 = hi.trim().parse().map_err(|e| format!("bad upper bound `{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Validated configuration of a `verify` run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub congruences: Vec<&'static congruences::CongruenceCase>,
    pub identities: Vec<&'static IdentityCase>,
    pub primes: RangeInclusive<u64>,
    pub n: RangeInclusive<u64>,
    pub output: Output,
}

impl RunConfig {
    /// Without range flags both registries run; `--primes` alone selects
    /// congruences and `--n` alone selects identities.
    pub fn from_args(a: &VerifyArgs) -> Result<Self, String> {
        let (want_cong, want_ident) = match (&a.primes, &a.n) {
            (Some(_), None) => (true, false),
            (None, Some(_)) => (false, true),
            _ => (true, true),
        };
        let mut congruences: Vec<_> = if want_cong {
            congruences::registry().iter().filter(|c| any_match(&a.cases, c.id)).collect()
        } else {
            Vec::new()
        };
        let mut identities: Vec<_> = if want_ident {
            identities::registry().iter().filter(|c| any_match(&a.cases, c.id)).collect()
        } else {
            Vec::new()
        };
        if congruences.is_empty() && identities.is_empty() {
            return Err(format!("no case matches `{}`", a.cases));
        }
        congruences.sort_by_key(|c| c.id);
        identities.sort_by_key(|c| c.id);
        Ok(RunConfig {
            congruences,
            identities,
            primes: a.primes.clone().unwrap_or(DEFAULT_PRIMES),
            n: a.n.clone().unwrap_or(DEFAULT_N),
            output: a.output.clone(),
        })
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    skipped: u64,
}

impl Tally {
    fn record<W: Write>(&mut self, em: &mut Emitter<W>, r: &Record) -> std::io::Result<bool> {
        self.checked += 1;
        if !r.pass {
            self.failed += 1;
        }
        em.emit(r)?;
        Ok(r.pass)
    }

    fn finish<W: Write>(&self, em: &mut Emitter<W>) -> std::io::Result<i32> {
        em.note(&format!("{} checks, {} failed, {} skipped", self.checked, self.failed, self.skipped))?;
        em.flush()?;
        Ok(if self.failed == 0 { EXIT_PASS } else { EXIT_FAIL })
    }
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "worker panicked".into())
}

fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match workers {
        None => Ok(f()),
        Some(0) => Err("--workers must be positive".into()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| e.to_string()),
    }
}

fn identity_records(case: &IdentityCase, ns: &RangeInclusive<u64>) -> Vec<Record> {
    let ns: Vec<u64> = ns.clone().filter(|&n| case.domain.contains(n)).collect();
    ns.par_iter()
        .map(|&n| {
            let start = std::time::Instant::now();
            let param = format!("{}={n}", case.param);
            match case.sides(n) {
                Ok((lhs, rhs)) => Record {
                    kind: "identity".into(),
                    case: case.id.into(),
                    param,
                    pass: lhs == rhs,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    modulus_or_tolerance: "exact".into(),
                    micros: start.elapsed().as_micros() as u64,
                },
                Err(e) => Record::failure("identity", case.id, &param, &e.to_string()),
            }
        })
        .collect()
}

pub fn cmd_verify<W: Write + Send>(cfg: &RunConfig, out: W) -> std::io::Result<i32> {
    let mut em = Emitter::new(cfg.output.format, cfg.output.omit_timing, out);
    let mut tally = Tally::default();
    let fail_fast = cfg.output.fail_fast;
    let (lo, hi) = (*cfg.primes.start(), *cfg.primes.end());
    let result = with_pool(cfg.output.workers, || -> std::io::Result<()> {
        for &case in &cfg.congruences {
            let run = catch_unwind(AssertUnwindSafe(|| congruences::verify_range(&[case], lo, hi, None)));
            let records: Vec<Record> = match run {
                Ok(Ok(entries)) => entries
                    .iter()
                    .filter_map(|e| match e {
                        RangeEntry::Checked(r) => Some(Record::congruence(r)),
                        RangeEntry::Skipped { .. } => {
                            tally.skipped += 1;
                            None
                        }
                    })
                    .collect(),
                Ok(Err(e)) => vec![Record::failure("congruence", case.id, &format!("p={lo}..{hi}"), &e.to_string())],
                Err(p) => vec![Record::failure("congruence", case.id, &format!("p={lo}..{hi}"), &panic_message(p))],
            };
            for r in &records {
                if !tally.record(&mut em, r)? && fail_fast {
                    return Ok(());
                }
            }
        }
        for &case in &cfg.identities {
            let records = catch_unwind(AssertUnwindSafe(|| identity_records(case, &cfg.n)))
                .unwrap_or_else(|p| vec![Record::failure("identity", case.id, "", &panic_message(p))]);
            for r in &records {
                if !tally.record(&mut em, r)? && fail_fast {
                    return Ok(());
                }
            }
        }
        Ok(())
    });
    match result {
        Ok(r) => r?,
        Err(msg) => return Err(std::io::Error::other(msg)),
    }
    tally.finish(&mut em)
}

pub fn select_series(glob: &str) -> Result<Vec<&'static SeriesCase>, String> {
    let mut v: Vec<_> = series::series_registry().iter().filter(|c| any_match(glob, c.id)).collect();
    if v.is_empty() {
        return Err(format!("no series matches `{glob}`"));
    }
    v.sort_by_key(|c| c.id);
    Ok(v)
}

pub fn cmd_series<W: Write + Send>(a: &SeriesArgs, out: W) -> Result<i32, String> {
    let cases = select_series(&a.cases)?;
    let mut em = Emitter::new(a.output.format, a.output.omit_timing, out);
    let reports = with_pool(a.output.workers, || series::evaluate_many(&cases, a.terms, a.bits))?
        .map_err(|e| e.to_string())?;
    let mut tally = Tally::default();
    for r in &reports {
        let rec = Record::series(r);
        let ok = tally.record(&mut em, &rec).map_err(|e| e.to_string())?;
        em.note(&format!(
            "     rel gap {:.2e}, tail {:.4e}, tail bound {:.4e}, bracket {}",
            r.rel_gap(),
            r.tail.to_f64(),
            r.tail_upper.to_f64(),
            if r.bracket { "holds" } else { "fails" }
        ))
        .map_err(|e| e.to_string())?;
        if !ok && a.output.fail_fast {
            break;
        }
    }
    tally.finish(&mut em).map_err(|e| e.to_string())
}

fn class_text(c: ResidueClass) -> &'static str {
    match c {
        ResidueClass::Any => "all p",
        ResidueClass::OneMod4 => "p = 1 mod 4",
        ResidueClass::ThreeMod4 => "p = 3 mod 4",
    }
}

pub fn cmd_list<W: Write>(a: &ListArgs, mut out: W) -> std::io::Result<i32> {
    let show = |k: Kind| a.kind == Kind::All || a.kind == k;
    if show(Kind::Congruence) {
        writeln!(out, "# congruences ({})", congruences::registry().len())?;
        for c in congruences::registry() {
            let family = matches!(c.shape, congruences::Shape::Family(_));
            let scope = if family { ", each k <= (p-1)/2" } else { "" };
            writeln!(out, "{:<14} mod p^{} [{}{scope}]  {}", c.id, c.power, class_text(c.class), c.statement)?;
        }
    }
    if show(Kind::Identity) {
        writeln!(out, "# identities ({})", identities::registry().len())?;
        for c in identities::registry() {
            writeln!(out, "{:<18} {} {}  {}", c.id, c.param, c.domain.describe(), c.statement)?;
        }
    }
    if show(Kind::Series) {
        writeln!(out, "# series ({})", series::series_registry().len())?;
        for c in series::series_registry() {
            writeln!(out, "{:<8} rel tol {:e}  {}", c.id, c.tolerance, c.statement)?;
        }
    }
    Ok(EXIT_PASS)
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T, W, E>(args: I, mut out: W, mut err: E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write + Send,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version are not errors.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_PASS;
        }
    };
    let outcome = match &cli.command {
        Command::Verify(a) => match RunConfig::from_args(a) {
            Ok(cfg) => cmd_verify(&cfg, out).map_err(|e| (EXIT_FAIL, e.to_string())),
            Err(msg) => Err((EXIT_USAGE, msg)),
        },
        Command::Series(a) => {
            if a.terms < series::MIN_TERMS || a.bits < series::MIN_BITS {
                Err((EXIT_USAGE, format!("need --terms >= {} and --bits >= {}", series::MIN_TERMS, series::MIN_BITS)))
            } else {
                cmd_series(a, out).map_err(|m| (EXIT_USAGE, m))
            }
        }
        Command::List(a) => cmd_list(a, out).map_err(|e| (EXIT_FAIL, e.to_string())),
    };
    match outcome {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..50").unwrap(), 5..=50);
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("5-9").is_err());
        assert!(parse_range("a..9").is_err());
    }

    #[test]
    fn flag_selection() {
        let args = |cases: &str, primes: Option<&str>, n: Option<&str>| VerifyArgs {
            cases: cases.into(),
            primes: primes.map(|s| parse_range(s).unwrap()),
            n: n.map(|s| parse_range(s).unwrap()),
            output: Output { format: Format::Human, workers: None, fail_fast: false, omit_timing: false },
        };
        let c = RunConfig::from_args(&args("*", Some("5..7"), None)).unwrap();
        assert!(c.identities.is_empty() && !c.congruences.is_empty());
        let c = RunConfig::from_args(&args("CD*", None, Some("0..4"))).unwrap();
        assert!(c.congruences.is_empty() && c.identities.iter().all(|i| i.id.starts_with("CD")));
        assert!(RunConfig::from_args(&args("CD*", Some("5..7"), None)).is_err());
        assert!(RunConfig::from_args(&args("zzz", None, None)).is_err());
    }
}
