use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ctx::{checked_pow, inv_unit, mul_mod};
use super::{PadicError, PrimePowerCtx};
use crate::exact::BigRational;

const ZERO_VAL: i64 = i64::MAX;
const EXACT: i64 = i64::MAX;

/// A rational reduced p-adically: `p^v · u` with `u` a unit known modulo
/// `p^prec` (relative precision).
///
/// Zero is canonical: `v` is the `+∞` sentinel, `u = 0`, and `prec` holds the
/// absolute precision instead (`i64::MAX` for an exact zero). Precision is
/// tracked through every operation so cancellation and negative valuations
/// can never masquerade as known digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicValue {
    p: u64,
    v: i64,
    u: u64,
    prec: i64,
}

fn pow_p(p: u64, e: i64) -> u64 {
    debug_assert!(e >= 0);
    checked_pow(p, e as u32).expect("residue modulus overflow")
}

impl PadicValue {
    pub fn exact_zero(p: u64) -> Self {
        PadicValue { p, v: ZERO_VAL, u: 0, prec: EXACT }
    }

    /// Zero known modulo `p^abs` only.
    pub fn zero_mod(p: u64, abs: i64) -> Self {
        PadicValue { p, v: ZERO_VAL, u: 0, prec: abs }
    }

    /// `p^v·u` with `u` taken modulo `p^prec`. `u` must be coprime to `p`.
    pub fn from_parts(p: u64, v: i64, u: u64, prec: u32) -> Self {
        debug_assert!(!u.is_multiple_of(p) && prec >= 1);
        let m = pow_p(p, prec as i64);
        PadicValue { p, v, u: u % m, prec: prec as i64 }
    }

    pub fn from_int(a: i64, p: u64, digits: u32) -> Self {
        Self::from_bigint(&BigInt::from(a), p, digits)
    }

    pub fn from_bigint(a: &BigInt, p: u64, digits: u32) -> Self {
        if a.is_zero() {
            return Self::exact_zero(p);
        }
        let (v, unit) = strip_p(a, p);
        let m = pow_p(p, digits as i64);
        let u = unit.mod_floor(&BigInt::from(m)).to_u64().unwrap();
        PadicValue { p, v, u, prec: digits as i64 }
    }

    /// Valuation-aware reduction with `digits` of relative precision.
    pub fn from_rational(q: &BigRational, p: u64, digits: u32) -> Self {
        if q.is_zero() {
            return Self::exact_zero(p);
        }
        let (vn, un) = strip_p(q.numer(), p);
        let (vd, ud) = strip_p(q.denom(), p);
        let m = pow_p(p, digits as i64);
        let bm = BigInt::from(m);
        let n = un.mod_floor(&bm).to_u64().unwrap();
        let d = ud.mod_floor(&bm).to_u64().unwrap();
        let dinv = inv_unit(d, m).expect("p-free denominator is a unit");
        PadicValue { p, v: vn - vd, u: mul_mod(n, dinv, m), prec: digits as i64 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.v == ZERO_VAL
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_zero() && self.prec == EXACT
    }

    /// Valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.v)
    }

    pub fn unit(&self) -> u64 {
        self.u
    }

    /// Relative precision of the unit part (`None` for zero).
    pub fn rel_prec(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.prec)
    }

    /// The value is known modulo `p^abs_prec()`.
    pub fn abs_prec(&self) -> i64 {
        if self.is_zero() {
            self.prec
        } else {
            self.v.saturating_add(self.prec)
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        let m = pow_p(self.p, self.prec);
        PadicValue { u: (m - self.u) % m, ..*self }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed primes");
        let p = self.p;
        let abs = self.abs_prec().min(other.abs_prec());
        let vmin = self.v.min(other.v);
        if vmin == ZERO_VAL || abs <= vmin {
            return Self::zero_mod(p, abs);
        }
        let r = abs - vmin;
        let m = pow_p(p, r);
        let mut s = 0u64;
        for x in [self, other] {
            if x.is_zero() {
                continue;
            }
            let shift = x.v - vmin;
            if shift < r {
                s = (s + mul_mod(x.u % m, pow_p(p, shift), m)) % m;
            }
        }
        if s == 0 {
            return Self::zero_mod(p, abs);
        }
        let mut t = 0;
        while s.is_multiple_of(p) {
            s /= p;
            t += 1;
        }
        PadicValue { p, v: vmin + t, u: s % pow_p(p, r - t), prec: r - t }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed primes");
        let p = self.p;
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::exact_zero(p);
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Self::zero_mod(p, self.prec.saturating_add(other.prec)),
            (true, false) => Self::zero_mod(p, self.prec.saturating_add(other.v)),
            (false, true) => Self::zero_mod(p, other.prec.saturating_add(self.v)),
            (false, false) => {
                let prec = self.prec.min(other.prec);
                let m = pow_p(p, prec);
                PadicValue { p, v: self.v + other.v, u: mul_mod(self.u % m, other.u % m, m), prec }
            }
        }
    }

    pub fn inv(&self) -> Result<Self, PadicError> {
        if self.is_zero() {
            return Err(PadicError::NotInvertible("0".into()));
        }
        let m = pow_p(self.p, self.prec);
        let u = inv_unit(self.u, m).expect("unit part is coprime to p");
        Ok(PadicValue { v: -self.v, u, ..*self })
    }

    pub fn div(&self, other: &Self) -> Result<Self, PadicError> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self^e` by repeated squaring; `x^0` is an exact one (at the widest
    /// precision a machine word holds).
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let digits = (1..64).take_while(|&d| self.p.checked_pow(d).is_some()).last().unwrap_or(1);
            return Self::from_int(1, self.p, digits);
        }
        let mut acc: Option<Self> = None;
        let mut base = *self;
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(acc.map_or(base, |a| a.mul(&base)));
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("e >= 1")
    }

    /// Scale by `p^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero_mod(self.p, self.prec.saturating_add(k));
        }
        PadicValue { v: self.v + k, ..*self }
    }

    /// The residue in `[0, p^m)` of a p-adic integer known at least modulo `p^m`.
    pub fn residue(&self, m: u32) -> Result<u64, PadicError> {
        if !self.is_zero() && self.v < 0 {
            return Err(PadicError::NegativeValuation(self.v));
        }
        let have = self.abs_prec();
        if have < m as i64 {
            return Err(PadicError::InsufficientPrecision { need: m as i64, have });
        }
        if self.is_zero() || self.v >= m as i64 {
            return Ok(0);
        }
        let modulus = pow_p(self.p, m as i64);
        Ok(mul_mod(self.u % modulus, pow_p(self.p, self.v), modulus))
    }

    /// Truth of `self ≡ other (mod p^m)`; both sides must be p-adic integers
    /// known to at least `p^m`.
    pub fn congruent(&self, other: &Self, m: u32) -> Result<bool, PadicError> {
        for x in [self, other] {
            if !x.is_zero() && x.v < 0 {
                return Err(PadicError::NegativeValuation(x.v));
            }
            if x.abs_prec() < m as i64 {
                return Err(PadicError::InsufficientPrecision { need: m as i64, have: x.abs_prec() });
            }
        }
        let d = self.sub(other);
        Ok(d.is_zero() || d.v >= m as i64)
    }
}

impl fmt::Display for PadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "(v=inf, u=0)")
        } else {
            write!(f, "(v={}, u={})", self.v, self.u)
        }
    }
}

macro_rules! padic_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for PadicValue {
            type Output = PadicValue;
            fn $m(self, rhs: PadicValue) -> PadicValue {
                PadicValue::$m(&self, &rhs)
            }
        }
    };
}
padic_binop!(Add, add);
padic_binop!(Sub, sub);
padic_binop!(Mul, mul);

impl std::ops::Neg for PadicValue {
    type Output = PadicValue;
    fn neg(self) -> PadicValue {
        PadicValue::neg(&self)
    }
}

fn strip_p(a: &BigInt, p: u64) -> (i64, BigInt) {
    let bp = BigInt::from(p);
    let mut x = a.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&bp);
        if !r.is_zero() {
            break;
        }
        x = q;
        v += 1;
    }
    if a.is_negative() {
        x = -x;
    }
    (v, x)
}

/// Reduce `q` at the context's precision.
pub fn padic_reduce(q: &BigRational, ctx: &PrimePowerCtx) -> PadicValue {
    PadicValue::from_rational(q, ctx.p(), ctx.m())
}

/// `a ≡ b (mod p^m)` at the context's exponent.
pub fn padic_compare(a: &PadicValue, b: &PadicValue, ctx: &PrimePowerCtx) -> Result<bool, PadicError> {
    a.congruent(b, ctx.m())
}
