use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::exact::{int, rat, BigRational};
use crate::modular::PadicValue;
use crate::sequences::{central_binomial, harmonic, odd_harmonic};

/// Weight multiplying `C(2k,k)^e / base^k` in a truncated sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    One,
    /// `H_k`
    H,
    /// `H_k^{(2)}`
    H2,
    /// `O_k`
    O,
    /// `O_k^{(2)}`
    O2,
    /// `H_{2k}`
    H2k,
    /// `H_{2k} − H_k`
    H2kMinusH,
    /// `4k + 1`
    FourKPlusOne,
    /// `2 − d(4k+1)H_k`
    Guillera(u32),
    /// `1/k` (k ≥ 1)
    InvK,
}

impl Weight {
    pub fn describe(&self) -> String {
        match self {
            Weight::One => "1".into(),
            Weight::H => "H_k".into(),
            Weight::H2 => "H2_k".into(),
            Weight::O => "O_k".into(),
            Weight::O2 => "O2_k".into(),
            Weight::H2k => "H_{2k}".into(),
            Weight::H2kMinusH => "(H_{2k} - H_k)".into(),
            Weight::FourKPlusOne => "(4k+1)".into(),
            Weight::Guillera(d) => format!("(2 - {d}(4k+1) H_k)"),
            Weight::InvK => "1/k".into(),
        }
    }
}

/// Summand `(±1)^k C(2k,k)^power · weight(k) / base^k`, summed for
/// `start ≤ k ≤ p−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumRecipe {
    pub power: u32,
    pub base: u32,
    pub weight: Weight,
    pub alternating: bool,
    pub start: u64,
}

impl SumRecipe {
    pub const fn new(power: u32, base: u32, weight: Weight) -> Self {
        SumRecipe { power, base, weight, alternating: false, start: 0 }
    }

    pub const fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    pub const fn from_one(mut self) -> Self {
        self.start = 1;
        self
    }

    pub fn describe(&self) -> String {
        let sign = if self.alternating { "(-1)^k " } else { "" };
        format!(
            "sum_{{k={}}}^{{p-1}} {sign}C(2k,k)^{} {}/{}^k",
            self.start,
            self.power,
            self.weight.describe(),
            self.base
        )
    }

    /// The `k`-th summand as an exact rational.
    pub fn exact_term(&self, k: u64) -> BigRational {
        if k < self.start {
            return BigRational::zero();
        }
        let cb = int(central_binomial(k).pow(self.power));
        let base = int(Pow::pow(BigInt::from(self.base), k));
        let h = || harmonic(k, 1);
        let w = match self.weight {
            Weight::One => BigRational::one(),
            Weight::H => h(),
            Weight::H2 => harmonic(k, 2),
            Weight::O => odd_harmonic(k, 1),
            Weight::O2 => odd_harmonic(k, 2),
            Weight::H2k => harmonic(2 * k, 1),
            Weight::H2kMinusH => harmonic(2 * k, 1) - h(),
            Weight::FourKPlusOne => int(4 * k as i64 + 1),
            Weight::Guillera(d) => int(2) - int(d as i64 * (4 * k as i64 + 1)) * h(),
            Weight::InvK => rat(1, k as i64),
        };
        let t = cb * w / base;
        if self.alternating && k % 2 == 1 {
            -t
        } else {
            t
        }
    }

    /// `Σ_{k=start}^{upper}` reduced p-adically with `digits` of relative
    /// precision, using incremental updates (O(upper) ring operations).
    pub fn padic_sum(&self, p: u64, upper: u64, digits: u32) -> PadicValue {
        let from = |a: i64| PadicValue::from_int(a, p, digits);
        let recip = |a: i64| from(a).inv().expect("nonzero");
        let mut cb = from(1);
        let inv_base = recip(self.base as i64);
        let mut base_pow = from(1);
        let zero = PadicValue::exact_zero(p);
        let (mut h, mut h2, mut o, mut o2, mut h2k) = (zero, zero, zero, zero, zero);
        let mut acc = zero;
        for k in 0..=upper {
            if k >= 1 {
                let ki = k as i64;
                cb = cb.mul(&from(2 * (2 * ki - 1))).mul(&recip(ki));
                base_pow = base_pow.mul(&inv_base);
                h = h.add(&recip(ki));
                h2 = h2.add(&recip(ki * ki));
                o = o.add(&recip(2 * ki - 1));
                o2 = o2.add(&recip((2 * ki - 1) * (2 * ki - 1)));
                h2k = h2k.add(&recip(2 * ki - 1)).add(&recip(2 * ki));
            }
            if k < self.start {
                continue;
            }
            let w = match self.weight {
                Weight::One => from(1),
                Weight::H => h,
                Weight::H2 => h2,
                Weight::O => o,
                Weight::O2 => o2,
                Weight::H2k => h2k,
                Weight::H2kMinusH => h2k.sub(&h),
                Weight::FourKPlusOne => from(4 * k as i64 + 1),
                Weight::Guillera(d) => from(2).sub(&from(d as i64 * (4 * k as i64 + 1)).mul(&h)),
                Weight::InvK => recip(k as i64),
            };
            let mut term = cb.pow(self.power).mul(&base_pow).mul(&w);
            if self.alternating && k % 2 == 1 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        acc
    }
}
