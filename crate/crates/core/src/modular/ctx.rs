use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::PadicError;

/// Deepest congruence power handled by a comparison context.
pub const MAX_EXPONENT: u32 = 4;

/// The ambient modulus `p^m` of a congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePowerCtx {
    p: u64,
    m: u32,
    modulus: u64,
}

impl PrimePowerCtx {
    pub fn new(p: u64, m: u32) -> Result<Self, PadicError> {
        if !(1..=MAX_EXPONENT).contains(&m) {
            return Err(PadicError::ExponentOutOfRange(m));
        }
        if p < 5 {
            return Err(PadicError::PrimeTooSmall(p));
        }
        if !is_prime(p) {
            return Err(PadicError::NotPrime(p));
        }
        let modulus = checked_pow(p, m).ok_or(PadicError::ModulusTooLarge { p, digits: m })?;
        Ok(PrimePowerCtx { p, m, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduce an arbitrary integer into `[0, p^m)`.
    pub fn reduce_int(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.modulus)).to_u64().unwrap()
    }
}

pub(crate) fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of a unit residue modulo `m` (extended Euclid); `None` if not coprime.
pub(crate) fn inv_unit(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

pub fn inv_mod(a: &BigInt, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    let r = ctx.reduce_int(a);
    if r.is_multiple_of(ctx.p) {
        return Err(PadicError::NotInvertible(a.to_string()));
    }
    Ok(inv_unit(r, ctx.modulus).expect("unit modulo p is a unit modulo p^m"))
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let ctx = PrimePowerCtx::new(5, 2).unwrap();
        assert_eq!(inv_mod(&BigInt::from(3), &ctx).unwrap(), 17);
        assert_eq!(inv_mod(&BigInt::from(1), &ctx).unwrap(), 1);
        assert!(matches!(
            inv_mod(&BigInt::from(5), &ctx),
            Err(PadicError::NotInvertible(_))
        ));
        assert_eq!(inv_mod(&BigInt::from(-3), &ctx).unwrap(), 8);
    }

    #[test]
    fn context_validation() {
        assert_eq!(PrimePowerCtx::new(9, 2), Err(PadicError::NotPrime(9)));
        assert_eq!(PrimePowerCtx::new(3, 2), Err(PadicError::PrimeTooSmall(3)));
        assert_eq!(PrimePowerCtx::new(7, 5), Err(PadicError::ExponentOutOfRange(5)));
        assert_eq!(PrimePowerCtx::new(7, 3).unwrap().modulus(), 343);
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }
}
