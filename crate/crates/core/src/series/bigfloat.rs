use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::BigRational;

/// Binary floating point `mant · 2^exp`, rounded to nearest at `prec` bits.
///
/// Results of binary operations take the smaller precision of the operands.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn round_to(mant: BigInt, exp: i64, prec: u32) -> (BigInt, i64) {
    let bits = mant.bits();
    if bits <= prec as u64 {
        return (mant, exp);
    }
    let sh = bits - prec as u64;
    let neg = mant.is_negative();
    let mag = mant.abs();
    let half = BigInt::one() << (sh - 1);
    let mut r: BigInt = (mag + half) >> sh;
    let mut exp = exp + sh as i64;
    // Rounding up may carry into a new bit.
    if r.bits() > prec as u64 {
        r >>= 1;
        exp += 1;
    }
    (if neg { -r } else { r }, exp)
}

impl BigFloat {
    pub fn new(mant: BigInt, exp: i64, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        let (mant, exp) = round_to(mant, exp, prec);
        BigFloat { mant, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(BigInt::zero(), 0, prec)
    }

    pub fn from_int(a: impl Into<BigInt>, prec: u32) -> Self {
        Self::new(a.into(), 0, prec)
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>, prec: u32) -> Self {
        Self::from_int(n, prec + 2).div(&Self::from_int(d, prec + 2)).with_prec(prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::from_ratio(q.numer().clone(), q.denom().clone(), prec)
    }

    /// Exact conversion (then rounded to `prec`).
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "non-finite f64");
        if x == 0.0 {
            return Self::zero(prec);
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), raw_exp - 1075) };
        Self::new(BigInt::from(m) * sign, e, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, ..self.clone() }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), ..self.clone() }
    }

    /// `floor(log2 |x|)`; `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        if self.is_zero() {
            return other.with_prec(prec);
        }
        if other.is_zero() {
            return self.with_prec(prec);
        }
        let (hi, lo) = if self.log2_floor() >= other.log2_floor() { (self, other) } else { (other, self) };
        // An operand entirely below the rounding position only matters as a
        // sticky bit; keep a few bits of it so rounding stays correct.
        let gap = hi.log2_floor().unwrap() - lo.log2_floor().unwrap();
        if gap > prec as i64 + 4 {
            let floor = hi.log2_floor().unwrap() - prec as i64 - 4;
            let tiny = BigFloat::new(lo.mant.signum(), floor, 2);
            return Self::add_aligned(hi, &tiny, prec);
        }
        Self::add_aligned(hi, lo, prec)
    }

    fn add_aligned(a: &Self, b: &Self, prec: u32) -> Self {
        let e = a.exp.min(b.exp);
        let ma = &a.mant << (a.exp - e) as usize;
        let mb = &b.mant << (b.exp - e) as usize;
        Self::new(ma + mb, e, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.mant * &other.mant, self.exp + other.exp, self.prec.min(other.prec))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.prec.min(other.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << shift as usize;
        let (q, r) = num.div_rem(&other.mant);
        // Sticky bit keeps round-to-nearest honest.
        let sticky = if r.is_zero() { BigInt::zero() } else { r.signum() * other.mant.signum() };
        let q = (q << 1) + sticky;
        Self::new(q, self.exp - other.exp - shift - 1, prec)
    }

    pub fn mul_small(&self, k: i64) -> Self {
        Self::new(&self.mant * k, self.exp, self.prec)
    }

    pub fn div_small(&self, k: u64) -> Self {
        self.div(&Self::from_int(k, 64.max(self.prec)))
    }

    /// Multiply by `2^k` (exact).
    pub fn ldexp(&self, k: i64) -> Self {
        BigFloat { exp: self.exp + k, ..self.clone() }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let mut shift = (2 * self.prec as i64 + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let n = &self.mant << shift as usize;
        let r = n.sqrt();
        let sticky = if &r * &r == n { 0 } else { 1 };
        Self::new((r << 1) + sticky, (self.exp - shift) / 2 - 1, self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let sh = (bits - 60).max(0);
        let m = (&self.mant >> sh as usize).to_i64().expect("60-bit mantissa") as f64;
        let e = self.exp + sh;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        // Split the scaling so intermediate powers stay finite.
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    /// `|x|` in scientific notation with `digits` significant digits
    /// (round to nearest).
    pub fn to_sci(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return format!("0.{}e0", "0".repeat(digits - 1));
        }
        let approx = self.abs().to_f64();
        let mut e10 = if approx.is_finite() && approx > 0.0 {
            approx.log10().floor() as i64
        } else {
            (self.log2_floor().unwrap() as f64 * std::f64::consts::LOG10_2).floor() as i64
        };
        let work = self.prec.max(64) + 16;
        loop {
            let k = digits as i64 - 1 - e10;
            let ten = BigFloat::from_int(10, work);
            let scale = pow_int(&ten, k.unsigned_abs());
            let x = self.abs().with_prec(work);
            let scaled = if k >= 0 { x.mul(&scale) } else { x.div(&scale) };
            let n = scaled.round_to_int();
            let s = n.to_string();
            if s.len() > digits {
                e10 += 1;
                continue;
            }
            if s.len() < digits {
                e10 -= 1;
                continue;
            }
            let sign = if self.is_negative() { "-" } else { "" };
            let (head, tail) = s.split_at(1);
            return if tail.is_empty() {
                format!("{sign}{head}e{e10}")
            } else {
                format!("{sign}{head}.{tail}e{e10}")
            };
        }
    }

    /// Digits limited so none exceeds what `abs_err` certifies.
    pub fn to_certified_string(&self, abs_err: f64) -> String {
        let max_digits = (self.prec as f64 * std::f64::consts::LOG10_2).floor() as usize;
        let mag = self.abs().to_f64();
        let digits = if abs_err <= 0.0 || mag == 0.0 {
            max_digits
        } else {
            ((mag / abs_err).log10().floor().max(1.0) as usize).min(max_digits)
        };
        self.to_sci(digits)
    }

    fn round_to_int(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.mant << self.exp as usize;
        }
        let sh = (-self.exp) as usize;
        let half = BigInt::one() << (sh - 1);
        let mag = (self.mant.abs() + half) >> sh;
        if self.is_negative() {
            -mag
        } else {
            mag
        }
    }
}

pub(crate) fn pow_int(x: &BigFloat, mut e: u64) -> BigFloat {
    let mut acc = BigFloat::from_int(1, x.prec);
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = BigFloat::add_aligned(self, &other.neg(), u32::MAX);
        match d.mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(17);
        f.write_str(&self.to_sci(digits))
    }
}
