use std::time::Instant;

use rayon::prelude::*;

use super::env::{working_digits, PrimeEnv};
use super::registry::{CongruenceCase, Lhs, Shape};
use super::CongruenceError;
use crate::modular::{PadicError, PadicValue};
use crate::sequences::primes_in;

/// Outcome of checking one case at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub case: &'static str,
    pub p: u64,
    /// The comparison is modulo `p^m`.
    pub m: u32,
    /// For families: the first failing `k`, or the last `k` checked.
    pub k: Option<u64>,
    pub lhs: PadicValue,
    pub rhs: PadicValue,
    pub pass: bool,
    pub micros: u64,
}

impl VerificationReport {
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.m)
    }

    pub fn lhs_residue(&self) -> u64 {
        self.lhs.residue(self.m).expect("checked at construction")
    }

    pub fn rhs_residue(&self) -> u64 {
        self.rhs.residue(self.m).expect("checked at construction")
    }

    /// `p=…` or `p=…,k=…`.
    pub fn param(&self) -> String {
        match self.k {
            Some(k) => format!("p={},k={}", self.p, k),
            None => format!("p={}", self.p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RangeEntry {
    Checked(VerificationReport),
    /// The prime fails the case's residue-class restriction.
    Skipped { case: &'static str, p: u64 },
}

impl RangeEntry {
    pub fn case(&self) -> &'static str {
        match self {
            RangeEntry::Checked(r) => r.case,
            RangeEntry::Skipped { case, .. } => case,
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            RangeEntry::Checked(r) => r.p,
            RangeEntry::Skipped { p, .. } => *p,
        }
    }
}

fn admissible(case: &CongruenceCase, p: u64) -> Result<(), CongruenceError> {
    if case.class.admits(p) {
        Ok(())
    } else {
        Err(CongruenceError::WrongClass { case: case.id.to_string(), p })
    }
}

/// The left-hand side of a single congruence at `p`.
pub fn eval_truncated_sum(case: &CongruenceCase, env: &PrimeEnv) -> Result<PadicValue, CongruenceError> {
    admissible(case, env.p())?;
    match &case.shape {
        Shape::Single { lhs: Lhs::Sum(r), .. } => {
            let digits = working_digits(env.p(), case.power)?;
            Ok(r.padic_sum(env.p(), env.p() - 1, digits))
        }
        Shape::Single { lhs: Lhs::Custom(f), .. } => Ok(f(env)),
        Shape::Family(_) => Err(CongruenceError::NotSingle(case.id.to_string())),
    }
}

/// The right-hand side of a single congruence at `p`.
pub fn eval_rhs(case: &CongruenceCase, env: &PrimeEnv) -> Result<PadicValue, CongruenceError> {
    admissible(case, env.p())?;
    match &case.shape {
        Shape::Single { rhs, .. } => Ok(rhs(env)),
        Shape::Family(_) => Err(CongruenceError::NotSingle(case.id.to_string())),
    }
}

fn compare(lhs: &PadicValue, rhs: &PadicValue, m: u32) -> Result<bool, PadicError> {
    let pass = lhs.congruent(rhs, m)?;
    // Both residues must exist for the report to be printable.
    lhs.residue(m)?;
    rhs.residue(m)?;
    Ok(pass)
}

/// Check `case` at the prime of `env`.
pub fn verify_with(case: &CongruenceCase, env: &PrimeEnv) -> Result<VerificationReport, CongruenceError> {
    admissible(case, env.p())?;
    let start = Instant::now();
    let m = case.power;
    let (k, lhs, rhs, pass) = match &case.shape {
        Shape::Single { .. } => {
            let lhs = eval_truncated_sum(case, env)?;
            let rhs = eval_rhs(case, env)?;
            let pass = compare(&lhs, &rhs, m)?;
            (None, lhs, rhs, pass)
        }
        Shape::Family(f) => {
            let mut last = None;
            for k in 0..=env.n() {
                let (lhs, rhs) = f(env, k);
                let pass = compare(&lhs, &rhs, m)?;
                last = Some((k, lhs, rhs, pass));
                if !pass {
                    break;
                }
            }
            let (k, lhs, rhs, pass) = last.expect("n ≥ 2");
            (Some(k), lhs, rhs, pass)
        }
    };
    Ok(VerificationReport {
        case: case.id,
        p: env.p(),
        m,
        k,
        lhs,
        rhs,
        pass,
        micros: start.elapsed().as_micros() as u64,
    })
}

pub fn verify(case: &CongruenceCase, p: u64) -> Result<VerificationReport, CongruenceError> {
    admissible(case, p)?;
    verify_with(case, &PrimeEnv::new(p)?)
}

/// Check every case at every prime `p` with `max(lo,5) ≤ p ≤ hi`.
///
/// Work is spread over `(case, prime)` pairs; `workers = None` uses the
/// global pool. Output is sorted by case id then prime, so it does not depend
/// on scheduling.
pub fn verify_range(
    cases: &[&'static CongruenceCase],
    lo: u64,
    hi: u64,
    workers: Option<usize>,
) -> Result<Vec<RangeEntry>, CongruenceError> {
    let run = || -> Result<Vec<RangeEntry>, CongruenceError> {
        let primes = if hi < 5 { Vec::new() } else { primes_in(lo.max(5), hi) };
        let envs: Vec<PrimeEnv> = primes.par_iter().map(|&p| PrimeEnv::new(p)).collect::<Result<_, _>>()?;
        let pairs: Vec<(&CongruenceCase, &PrimeEnv)> =
            cases.iter().flat_map(|&c| envs.iter().map(move |e| (c, e))).collect();
        let mut out: Vec<RangeEntry> = pairs
            .par_iter()
            .map(|&(c, e)| {
                if c.class.admits(e.p()) {
                    verify_with(c, e).map(RangeEntry::Checked)
                } else {
                    Ok(RangeEntry::Skipped { case: c.id, p: e.p() })
                }
            })
            .collect::<Result<_, _>>()?;
        out.sort_by(|a, b| a.case().cmp(b.case()).then(a.p().cmp(&b.p())));
        Ok(out)
    };
    match workers {
        None => run(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CongruenceError::Pool(e.to_string()))?
            .install(run),
    }
}
