use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::jets::{term_jet_sides, JetSeries};
use super::wz::{wz_certificate_check, wz_telescope_check};
use super::IdentityError;
use crate::exact::{int, rat, BigRational};
use crate::sequences::{binomial, c_m, HarmonicTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Admissible parameters: `n ≥ min_n`, optionally restricted by parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub min_n: u64,
    pub parity: Option<Parity>,
}

impl Domain {
    const ALL: Domain = Domain { min_n: 0, parity: None };
    const POSITIVE: Domain = Domain { min_n: 1, parity: None };
    const EVEN: Domain = Domain { min_n: 0, parity: Some(Parity::Even) };
    const ODD: Domain = Domain { min_n: 1, parity: Some(Parity::Odd) };

    pub fn contains(&self, n: u64) -> bool {
        n >= self.min_n
            && match self.parity {
                None => true,
                Some(Parity::Even) => n.is_multiple_of(2),
                Some(Parity::Odd) => n % 2 == 1,
            }
    }

    pub fn describe(&self) -> String {
        let base = format!("n >= {}", self.min_n);
        match self.parity {
            None => base,
            Some(Parity::Even) => format!("{base}, n even"),
            Some(Parity::Odd) => format!("{base}, n odd"),
        }
    }
}

/// A finite identity `lhs(n) = rhs(n)` over exact rationals.
#[derive(Debug, Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub statement: &'static str,
    /// Name of the running parameter (`n`, `m` or `k`).
    pub param: &'static str,
    pub domain: Domain,
    eval: fn(u64) -> (BigRational, BigRational),
}

impl IdentityCase {
    pub fn sides(&self, n: u64) -> Result<(BigRational, BigRational), IdentityError> {
        if !self.domain.contains(n) {
            return Err(IdentityError::OutOfDomain { id: self.id.to_string(), n });
        }
        Ok((self.eval)(n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

pub fn find(id: &str) -> Option<&'static IdentityCase> {
    REGISTRY.iter().find(|c| c.id == id)
}

pub fn registry() -> &'static [IdentityCase] {
    REGISTRY
}

pub fn check_identity(id: &str, n: u64) -> Result<IdentityCheck, IdentityError> {
    let case = find(id).ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
    let (lhs, rhs) = case.sides(n)?;
    let pass = lhs == rhs;
    Ok(IdentityCheck { lhs, rhs, pass })
}

// ---- helpers ----

fn c(n: u64, k: u64) -> BigRational {
    int(binomial(n as i64, k as i64))
}

fn pw(base: i64, e: u64) -> BigRational {
    int(Pow::pow(BigInt::from(base), e))
}

fn sign(e: u64) -> BigRational {
    if e.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

struct Harm {
    h1: HarmonicTable,
    h2: HarmonicTable,
}

impl Harm {
    fn new(max: u64) -> Self {
        Harm { h1: HarmonicTable::new(1, max), h2: HarmonicTable::new(2, max) }
    }
    fn h(&self, k: u64) -> &BigRational {
        self.h1.h(k as usize)
    }
    fn h2(&self, k: u64) -> &BigRational {
        self.h2.h(k as usize)
    }
}

fn alt_inv_squares(n: u64) -> BigRational {
    (1..=n as i64).map(|k| rat(if k % 2 == 0 { 1 } else { -1 }, k * k)).sum()
}

// ---- identities ----

fn deg1_h(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = (1..n).map(|k| c(2 * k, k) * t.h(k) / pw(4, k)).sum();
    let rhs = c(2 * n, n) * int(2 * n as i64) * (t.h(n - 1) - int(2)) / pw(4, n) + int(2);
    (lhs, rhs)
}

fn deg1_h2(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = (1..n).map(|k| c(2 * k, k) * t.h2(k) / pw(4, k)).sum();
    let tail: BigRational = (1..n).map(|k| c(2 * k, k) / (pw(4, k) * int(k as i64))).sum();
    let rhs = c(2 * n, n) * int(2 * n as i64) * t.h2(n - 1) / pw(4, n) - int(2) * tail;
    (lhs, rhs)
}

fn prod_h(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = (1..=n).map(|k| c(n, k) * c(n + k, k) * sign(k) * t.h(k)).sum();
    (lhs, int(2) * sign(n) * t.h(n))
}

fn prod_h2(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = (1..=n).map(|k| c(n, k) * c(n + k, k) * sign(k) * t.h2(k)).sum();
    (lhs, int(2) * sign(n + 1) * alt_inv_squares(n))
}

fn cube_alt_sum(n: u64, w: impl Fn(u64) -> BigRational) -> BigRational {
    (0..=n).map(|k| sign(k) * c(n, k).pow(3) * w(k)).sum()
}

fn cd4a(n: u64) -> (BigRational, BigRational) {
    (cube_alt_sum(n, |_| int(1)), int(0))
}

fn cd4b(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    (cube_alt_sum(n, |k| t.h(k) * t.h(n - k)), int(0))
}

fn cd1(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let m = (n - 1) / 2;
    (cube_alt_sum(n, |k| t.h(k).clone()), -c_m(m) / int(6))
}

fn cd2(n: u64) -> (BigRational, BigRational) {
    let m = (n - 1) / 2;
    let t = Harm::new(6 * m + 4);
    let lhs = cube_alt_sum(n, |k| int(3) * t.h(k) * t.h(k) + t.h2(k));
    let bracket = t.h(m) - int(4) * t.h(2 * m + 1) - t.h(3 * m + 2) + int(2) * t.h(6 * m + 4);
    (lhs, c_m(m) / int(2) * bracket)
}

fn lemma2_sum(n: u64, w: impl Fn(u64) -> BigRational) -> BigRational {
    (0..=n).map(|k| c(n, k) * c(n + k, k) * c(2 * k, k) * w(k) / pw(-4, k)).sum()
}

fn cd7(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = lemma2_sum(n, |k| t.h2(k).clone());
    let rhs = if n.is_multiple_of(2) {
        c(n, n / 2).pow(2) * alt_inv_squares(n) / pw(4, n)
    } else {
        -pw(4, n - 1) / (c(n - 1, (n - 1) / 2).pow(2) * int((n * n) as i64))
    };
    (lhs, rhs)
}

fn cd5(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    (lemma2_sum(n, |k| t.h(k).clone()), c(n, n / 2).pow(2) * t.h(n) / pw(4, n))
}

fn cd6(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(2 * n);
    let lhs = lemma2_sum(n, |k| t.h(2 * k).clone());
    (lhs, c(n, n / 2).pow(2) * t.h(n) / (int(2) * pw(4, n)))
}

fn e70_lhs(n: u64, t: &Harm) -> BigRational {
    (0..=n).map(|k| c(n, k) * c(n + k, k) * t.h(k) / pw(-2, k)).sum()
}

fn e70(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let rhs = if n.is_multiple_of(2) {
        c(n, n / 2) * sign(n / 2) * t.h(n) / pw(2, n)
    } else {
        sign(n.div_ceil(2)) * pw(2, n - 1) / (c(n - 1, (n - 1) / 2) * int(n as i64))
    };
    (e70_lhs(n, &t), rhs)
}

fn ps03(n: u64, d: u32) -> BigRational {
    let t = Harm::new(n);
    (0..=n)
        .map(|k| {
            let w = int(1) + int(d as i64 * (n as i64 - 2 * k as i64)) * t.h(k);
            c(n, k).pow(d as i32) * w
        })
        .sum()
}

fn ps03_3(n: u64) -> (BigRational, BigRational) {
    (ps03(n, 3), sign(n))
}

fn ps03_4(n: u64) -> (BigRational, BigRational) {
    (ps03(n, 4), sign(n) * c(2 * n, n))
}

fn ps03_5(n: u64) -> (BigRational, BigRational) {
    let apery: BigRational = (0..=n).map(|k| c(n, k).pow(2) * c(n + k, k)).sum();
    (ps03(n, 5), sign(n) * apery)
}

fn aux_asym(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    let lhs = (0..=n)
        .map(|k| c(n, k).pow(3) * int(n as i64 - 2 * k as i64) * t.h(k) * t.h(n - k))
        .sum();
    (lhs, int(0))
}

fn e03(n: u64) -> (BigRational, BigRational) {
    let t = Harm::new(n);
    (alt_inv_squares(n), t.h2(n / 2) / int(2) - t.h2(n))
}

/// Grid span for the certificate at a given m: full support of F and G plus
/// at least the first 51 values of k.
fn wz_span(m: u64) -> u64 {
    (2 * m + 3).max(50)
}

fn wz_cert(m: u64) -> (BigRational, BigRational) {
    let residual = (0..=wz_span(m))
        .map(|k| wz_certificate_check(m, k))
        .find(|r| !r.is_zero())
        .unwrap_or_else(BigRational::zero);
    (residual, int(0))
}

macro_rules! case {
    ($id:literal, $param:literal, $dom:expr, $f:expr, $stmt:literal) => {
        IdentityCase { id: $id, statement: $stmt, param: $param, domain: $dom, eval: $f }
    };
}

static REGISTRY: &[IdentityCase] = &[
    case!("I_deg1_H", "n", Domain::POSITIVE, deg1_h,
        "sum_{k=1}^{n-1} C(2k,k) H_k/4^k = C(2n,n) 2n (H_{n-1} - 2)/4^n + 2"),
    case!("I_deg1_H2", "n", Domain::POSITIVE, deg1_h2,
        "sum_{k=1}^{n-1} C(2k,k) H2_k/4^k = C(2n,n) 2n H2_{n-1}/4^n - 2 sum_{k=1}^{n-1} C(2k,k)/(k 4^k)"),
    case!("I_prod_H", "n", Domain::ALL, prod_h,
        "sum_{k=1}^n C(n,k) C(n+k,k) (-1)^k H_k = 2 (-1)^n H_n"),
    case!("I_prod_H2", "n", Domain::ALL, prod_h2,
        "sum_{k=1}^n C(n,k) C(n+k,k) (-1)^k H2_k = 2 (-1)^{n+1} sum_{k=1}^n (-1)^k/k^2"),
    case!("I_E03", "n", Domain::ALL, e03,
        "sum_{k=1}^n (-1)^k/k^2 = H2_{floor(n/2)}/2 - H2_n"),
    case!("CD4a", "n", Domain::ODD, cd4a,
        "sum_{k=0}^n (-1)^k C(n,k)^3 = 0"),
    case!("CD4b", "n", Domain::ODD, cd4b,
        "sum_{k=0}^n (-1)^k C(n,k)^3 H_k H_{n-k} = 0"),
    case!("CD1", "n", Domain::ODD, cd1,
        "n = 2m+1: sum_{k=0}^n (-1)^k C(n,k)^3 H_k = -c_m/6"),
    case!("CD2", "n", Domain::ODD, cd2,
        "n = 2m+1: sum (-1)^k C(n,k)^3 (3 H_k^2 + H2_k) = c_m/2 (H_m - 4 H_{2m+1} - H_{3m+2} + 2 H_{6m+4})"),
    case!("CD5", "n", Domain::EVEN, cd5,
        "sum_{k=0}^n C(n,k) C(n+k,k) C(2k,k) H_k/(-4)^k = C(n,n/2)^2 H_n/4^n"),
    case!("CD6", "n", Domain::EVEN, cd6,
        "sum_{k=0}^n C(n,k) C(n+k,k) C(2k,k) H_{2k}/(-4)^k = C(n,n/2)^2 H_n/(2 4^n)"),
    case!("CD7", "n", Domain::ALL, cd7,
        "sum_{k=0}^n C(n,k) C(n+k,k) C(2k,k) H2_k/(-4)^k = C(n,n/2)^2 sum_{k<=n} (-1)^k/k^2 / 4^n (n even); -4^{n-1}/(n^2 C(n-1,(n-1)/2)^2) (n odd)"),
    case!("I_E70", "n", Domain::ALL, e70,
        "sum_{k=0}^n C(n,k) C(n+k,k) H_k/(-2)^k = C(n,n/2) (-1)^{n/2} H_n/2^n (n even); (-1)^{(n+1)/2} 2^{n-1}/(n C(n-1,(n-1)/2)) (n odd)"),
    case!("I_PS03_3", "n", Domain::ALL, ps03_3,
        "sum_{k=0}^n C(n,k)^3 (1 + 3(n-2k) H_k) = (-1)^n"),
    case!("I_PS03_4", "n", Domain::ALL, ps03_4,
        "sum_{k=0}^n C(n,k)^4 (1 + 4(n-2k) H_k) = (-1)^n C(2n,n)"),
    case!("I_PS03_5", "n", Domain::ALL, ps03_5,
        "sum_{k=0}^n C(n,k)^5 (1 + 5(n-2k) H_k) = (-1)^n sum_{k=0}^n C(n,k)^2 C(n+k,k)"),
    case!("I_aux_asym", "n", Domain::ALL, aux_asym,
        "sum_{k=0}^n C(n,k)^3 (n-2k) H_k H_{n-k} = 0"),
    case!("WZ_cert", "m", Domain::ALL, wz_cert,
        "F(m+1,k) - F(m,k) = G(m,k+1) - G(m,k) for all k <= max(50, 2m+3)"),
    case!("WZ_telescope", "m", Domain::ALL, |m| wz_telescope_check(m),
        "S(m+1) - S(m) = -1/(2m+1)^2 + 1/(2m+2)^2, S(m) = sum_k F(m,k) H2_k"),
    case!("JET_dixon_dc", "k", Domain::ALL, |k| term_jet_sides(JetSeries::DixonDc, k),
        "d/dc 3F2(1/2,1/2,c;1,3/2-c;1) term at c=1/2 = C(2k,k)^3 (2 O_k + H_k)/64^k"),
    case!("JET_dixon_da", "k", Domain::ALL, |k| term_jet_sides(JetSeries::DixonDa, k),
        "d/da 3F2(a,1/2,1/2;1/2+a,1/2+a;1) term at a=1/2 = C(2k,k)^3 (2 O_k - 2 H_k)/64^k"),
    case!("JET_whipple_dee2", "k", Domain::ALL, |k| term_jet_sides(JetSeries::WhippleDee2, k),
        "d2/de2 3F2(1/2,1/2,1/2;e,2-e;1) term at e=1 = C(2k,k)^3 2 H2_k/64^k"),
    case!("JET_whipple_daa2", "k", Domain::ALL, |k| term_jet_sides(JetSeries::WhippleDaa2, k),
        "d2/da2 3F2(a,1-a,1/2;1,1;1) term at a=1/2 = -8 C(2k,k)^3 O2_k/64^k"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::wz::wz_s;

    #[test]
    fn hand_checked_examples() {
        let r = check_identity("CD1", 1).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (int(-1), true));
        let r = check_identity("CD5", 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.pass), (rat(3, 8), rat(3, 8), true));
        let r = check_identity("CD7", 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(-1), int(-1)));
        assert!(check_identity("CD4a", 3).unwrap().pass);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            check_identity("CD5", 3),
            Err(IdentityError::OutOfDomain { id: "CD5".into(), n: 3 })
        );
        assert_eq!(
            check_identity("I_deg1_H", 0),
            Err(IdentityError::OutOfDomain { id: "I_deg1_H".into(), n: 0 })
        );
        assert!(matches!(check_identity("nope", 1), Err(IdentityError::UnknownId(_))));
    }

    #[test]
    fn every_identity_small_n() {
        for case in registry() {
            for n in 0..=16 {
                if case.domain.contains(n) {
                    let (l, r) = case.sides(n).unwrap();
                    assert_eq!(l, r, "{} at {n}", case.id);
                }
            }
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn telescoped_sum_reproduces_cd7_even_branch() {
        // S(m) = Σ_{k=1}^{2m} (−1)^k/k², i.e. CD7 at n = 2m rescaled.
        for m in 0..=20u64 {
            let n = 2 * m;
            let (cd7_lhs, _) = cd7(n);
            let rescaled = cd7_lhs * pw(4, n) / c(n, m).pow(2);
            assert_eq!(wz_s(m), rescaled, "m = {m}");
            assert_eq!(wz_s(m), alt_inv_squares(n));
        }
    }

    #[test]
    fn squared_binomial_in_e70_even_branch_is_a_misprint() {
        for n in (2..=40u64).step_by(2) {
            let t = Harm::new(n);
            let squared = c(n, n / 2).pow(2) * sign(n / 2) * t.h(n) / pw(2, n);
            assert_ne!(e70_lhs(n, &t), squared, "n = {n}");
        }
    }

    #[test]
    fn statement_form_of_ps03_weight_fails_at_zero() {
        // (1 + 3(n−2k)) H_k: every term vanishes at n = 0, but the rhs is 1.
        let n = 0u64;
        let t = Harm::new(n);
        let typeset: BigRational =
            (0..=n).map(|k| c(n, k).pow(3) * int(1 + 3 * (n as i64 - 2 * k as i64)) * t.h(k)).sum();
        assert_ne!(typeset, sign(n));
    }
}
