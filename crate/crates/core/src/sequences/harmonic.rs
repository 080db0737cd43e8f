use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::SeqError;
use crate::exact::BigRational;

fn inv_pow(j: i64, r: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(j).pow(r))
}

/// `H_n^{(r)} = Σ_{j=1}^n 1/j^r`.
pub fn harmonic(n: u64, r: u32) -> BigRational {
    (1..=n as i64).map(|j| inv_pow(j, r)).sum()
}

/// `O_n^{(r)} = Σ_{j=1}^n 1/(2j−1)^r`.
pub fn odd_harmonic(n: u64, r: u32) -> BigRational {
    (1..=n as i64).map(|j| inv_pow(2 * j - 1, r)).sum()
}

/// `H_k^{(r)}(x) = Σ_{j=0}^{k−1} 1/(x+j)^r`.
pub fn shifted_harmonic(k: u64, r: u32, x: &BigRational) -> Result<BigRational, SeqError> {
    let mut acc = BigRational::zero();
    let mut t = x.clone();
    for j in 0..k {
        if t.is_zero() {
            return Err(SeqError::Pole(j));
        }
        acc += Pow::pow(t.recip(), r);
        t += BigRational::one();
    }
    Ok(acc)
}

/// Cumulative `H_0^{(r)}..H_N^{(r)}` and `O_0^{(r)}..O_N^{(r)}`, built once.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    order: u32,
    h: Vec<BigRational>,
    o: Vec<BigRational>,
}

impl HarmonicTable {
    pub fn new(order: u32, max_n: u64) -> Self {
        assert!(order >= 1);
        let mut h = Vec::with_capacity(max_n as usize + 1);
        let mut o = Vec::with_capacity(max_n as usize + 1);
        h.push(BigRational::zero());
        o.push(BigRational::zero());
        for j in 1..=max_n as i64 {
            let next_h = &h[h.len() - 1] + inv_pow(j, order);
            let next_o = &o[o.len() - 1] + inv_pow(2 * j - 1, order);
            h.push(next_h);
            o.push(next_o);
        }
        HarmonicTable { order, h, o }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn max_n(&self) -> usize {
        self.h.len() - 1
    }

    pub fn h(&self, k: usize) -> &BigRational {
        &self.h[k]
    }

    pub fn o(&self, k: usize) -> &BigRational {
        &self.o[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn examples() {
        assert_eq!(harmonic(3, 1), rat(11, 6));
        assert_eq!(odd_harmonic(2, 1), rat(4, 3));
        assert_eq!(harmonic(0, 2), int(0));
        assert_eq!(shifted_harmonic(2, 1, &rat(1, 2)).unwrap(), rat(8, 3));
        assert_eq!(shifted_harmonic(0, 3, &rat(1, 2)).unwrap(), int(0));
        assert_eq!(shifted_harmonic(3, 1, &int(-1)), Err(SeqError::Pole(1)));
        for k in 0..15 {
            assert_eq!(shifted_harmonic(k, 2, &int(1)).unwrap(), harmonic(k, 2));
        }
    }

    #[test]
    fn shifted_at_half_is_twice_odd() {
        for k in 0..30 {
            assert_eq!(
                shifted_harmonic(k, 1, &rat(1, 2)).unwrap(),
                odd_harmonic(k, 1) * int(2)
            );
        }
    }

    #[test]
    fn odd_from_even_cross_check() {
        for r in [1u32, 2] {
            let t = HarmonicTable::new(r, 100);
            let scale = rat(1, 1 << r);
            for k in 0..=50usize {
                assert_eq!(t.o(k), &(t.h(2 * k) - t.h(k) * &scale), "r={r} k={k}");
                assert_eq!(t.h(k), &harmonic(k as u64, r));
            }
        }
    }

    #[test]
    fn table_recurrences() {
        let t = HarmonicTable::new(3, 20);
        assert_eq!(t.order(), 3);
        for k in 1..=20usize {
            assert_eq!(t.h(k) - t.h(k - 1), rat(1, (k as i64).pow(3)));
            assert_eq!(t.o(k) - t.o(k - 1), rat(1, (2 * k as i64 - 1).pow(3)));
        }
    }
}
