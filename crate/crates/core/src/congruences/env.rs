use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::exact::{rat, BigRational};
use crate::modular::{PadicError, PadicValue, PrimePowerCtx, MAX_EXPONENT};
use crate::padic_gamma::gamma_p;
use crate::sequences::{binomial, fermat_quotient, SpecialNumbers};

/// Extra p-adic digits carried beyond the stated modulus.
pub const GUARD_DIGITS: u32 = 3;

/// The largest relative precision (≤ `power + GUARD_DIGITS`) whose modulus
/// fits in a machine word.
pub fn working_digits(p: u64, power: u32) -> Result<u32, PadicError> {
    (power..=power + GUARD_DIGITS)
        .rev()
        .find(|&d| p.checked_pow(d).is_some())
        .ok_or(PadicError::ModulusTooLarge { p, digits: power })
}

static SPECIAL: Mutex<Option<Arc<SpecialNumbers>>> = Mutex::new(None);

/// Shared Bernoulli/Euler table covering at least `max_index`; grown (by
/// rebuilding) on demand and read-only afterwards.
pub fn special_numbers(max_index: usize) -> Arc<SpecialNumbers> {
    let mut slot = SPECIAL.lock().unwrap_or_else(|e| e.into_inner());
    match slot.as_ref() {
        Some(t) if t.max_index() >= max_index => Arc::clone(t),
        _ => {
            let size = slot.as_ref().map_or(0, |t| t.max_index() * 2).max(max_index).max(64);
            let t = Arc::new(SpecialNumbers::new(size));
            *slot = Some(Arc::clone(&t));
            t
        }
    }
}

/// Γ_p arguments used by the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaArg {
    Quarter,
    Half,
    ThreeQuarters,
}

impl GammaArg {
    fn value(self) -> BigRational {
        match self {
            GammaArg::Quarter => rat(1, 4),
            GammaArg::Half => rat(1, 2),
            GammaArg::ThreeQuarters => rat(3, 4),
        }
    }
}

/// Everything a right-hand side may need at one prime: `q_p(2)`, `B_{p−3}`,
/// `E_{p−3}`, `E_{2p−4}` and lazily cached `Γ_p` values.
#[derive(Debug)]
pub struct PrimeEnv {
    p: u64,
    digits: u32,
    q: PadicValue,
    b: PadicValue,
    e1: PadicValue,
    e2: PadicValue,
    gamma: [[OnceLock<u64>; MAX_EXPONENT as usize]; 3],
}

impl PrimeEnv {
    pub fn new(p: u64) -> Result<Self, PadicError> {
        // Validates primality and p ≥ 5.
        PrimePowerCtx::new(p, 1)?;
        let digits = working_digits(p, MAX_EXPONENT)?;
        let table = special_numbers(2 * p as usize - 4);
        let q = fermat_quotient(2, p).expect("p is odd");
        let i1 = p as usize - 3;
        let i2 = 2 * p as usize - 4;
        Ok(PrimeEnv {
            p,
            digits,
            q: PadicValue::from_bigint(&q, p, digits),
            b: PadicValue::from_rational(table.bernoulli(i1), p, digits),
            e1: PadicValue::from_bigint(table.euler(i1), p, digits),
            e2: PadicValue::from_bigint(table.euler(i2), p, digits),
            gamma: Default::default(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// `(p−1)/2`
    pub fn n(&self) -> u64 {
        (self.p - 1) / 2
    }

    pub fn is_one_mod_4(&self) -> bool {
        self.p % 4 == 1
    }

    pub fn int(&self, a: i64) -> PadicValue {
        PadicValue::from_int(a, self.p, self.digits)
    }

    pub fn big(&self, a: &BigInt) -> PadicValue {
        PadicValue::from_bigint(a, self.p, self.digits)
    }

    pub fn rat(&self, n: i64, d: i64) -> PadicValue {
        self.rational(&rat(n, d))
    }

    pub fn rational(&self, q: &BigRational) -> PadicValue {
        PadicValue::from_rational(q, self.p, self.digits)
    }

    pub fn zero(&self) -> PadicValue {
        PadicValue::exact_zero(self.p)
    }

    /// `p` as a p-adic value.
    pub fn pv(&self) -> PadicValue {
        self.int(self.p as i64)
    }

    /// `(−1)^e`
    pub fn sign(&self, e: u64) -> PadicValue {
        self.int(if e.is_multiple_of(2) { 1 } else { -1 })
    }

    pub fn q(&self) -> PadicValue {
        self.q
    }

    /// `B_{p−3}`
    pub fn bern(&self) -> PadicValue {
        self.b
    }

    /// `E_{p−3}`
    pub fn e1(&self) -> PadicValue {
        self.e1
    }

    /// `E_{2p−4}`
    pub fn e2(&self) -> PadicValue {
        self.e2
    }

    /// `Γ_p(x)` known modulo `p^m`.
    pub fn gamma(&self, x: GammaArg, m: u32) -> PadicValue {
        assert!((1..=MAX_EXPONENT).contains(&m));
        let cell = &self.gamma[x as usize][m as usize - 1];
        let u = *cell.get_or_init(|| {
            let ctx = PrimePowerCtx::new(self.p, m).expect("validated prime");
            gamma_p(&x.value(), &ctx).expect("x is a p-adic integer")
        });
        PadicValue::from_parts(self.p, 0, u, m)
    }

    /// `Γ_p(1/4)^4` modulo `p^m`.
    pub fn g4(&self, m: u32) -> PadicValue {
        self.gamma(GammaArg::Quarter, m).pow(4)
    }

    /// `Γ_p(1/2)Γ_p(1/4)^2` modulo `p^m`.
    pub fn g_half_quarter2(&self, m: u32) -> PadicValue {
        self.gamma(GammaArg::Half, m) * self.gamma(GammaArg::Quarter, m).pow(2)
    }

    /// `H_n^{(r)}`, accumulated p-adically.
    pub fn harmonic(&self, n: u64, r: u32) -> PadicValue {
        (1..=n).fold(self.zero(), |acc, j| acc + self.int(j as i64).pow(r).inv().expect("j ≠ 0"))
    }

    pub fn binom(&self, n: u64, k: u64) -> PadicValue {
        self.big(&binomial(n as i64, k as i64))
    }
}
