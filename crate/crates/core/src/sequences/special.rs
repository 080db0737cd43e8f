use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::SeqError;
use crate::exact::{int, BigRational};

/// Bernoulli and Euler numbers up to a fixed index, computed exactly once.
///
/// Convention: `B_1 = −1/2` (from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`). Only even
/// indices are consumed downstream, so the convention is inert there.
#[derive(Debug, Clone)]
pub struct SpecialNumbers {
    bernoulli: Vec<BigRational>,
    euler: Vec<BigInt>,
}

impl SpecialNumbers {
    pub fn new(max_index: usize) -> Self {
        SpecialNumbers {
            bernoulli: bernoulli_table(max_index),
            euler: euler_table(max_index),
        }
    }

    pub fn max_index(&self) -> usize {
        self.bernoulli.len() - 1
    }

    pub fn bernoulli(&self, n: usize) -> &BigRational {
        &self.bernoulli[n]
    }

    pub fn euler(&self, n: usize) -> &BigInt {
        &self.euler[n]
    }
}

fn bernoulli_table(max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(max + 1);
    b.push(BigRational::one());
    for n in 1..=max {
        if n > 1 && n % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // B_n = −1/(n+1) Σ_{k<n} C(n+1,k) B_k
        let mut row = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * int(row.clone());
            }
            row = row * (n + 1 - k) / (k + 1);
        }
        b.push(-acc / int(n as i64 + 1));
    }
    b
}

fn euler_table(max: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); max + 1];
    e[0] = BigInt::one();
    for n in (2..=max).step_by(2) {
        // E_n = −Σ_{k<n, k even} C(n,k) E_k
        let mut row = BigInt::one();
        let mut acc = BigInt::zero();
        for (k, ek) in e.iter().enumerate().take(n) {
            if k % 2 == 0 {
                acc += &row * ek;
            }
            row = row * (n - k) / (k + 1);
        }
        e[n] = -acc;
    }
    e
}

pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_table(n).pop().unwrap()
}

pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    euler_table(n).pop().unwrap()
}

/// `q_p(a) = (a^{p−1} − 1)/p`, exact.
pub fn fermat_quotient(a: i64, p: u64) -> Result<BigInt, SeqError> {
    if a.rem_euclid(p as i64) == 0 {
        return Err(SeqError::NotCoprime { a, p });
    }
    let pw: BigInt = Pow::pow(BigInt::from(a), p - 1);
    let (q, r): (BigInt, BigInt) = (pw - BigInt::one()).div_rem(&BigInt::from(p));
    debug_assert!(r.is_zero(), "Fermat's little theorem");
    Ok(q)
}
