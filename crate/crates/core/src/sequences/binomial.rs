use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::BigRational;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

pub fn central_binomial(k: u64) -> BigInt {
    binomial(2 * k as i64, k as i64)
}

/// Rising factorial `(x)_k = x(x+1)…(x+k−1)`, `(x)_0 = 1`.
pub fn pochhammer(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += BigRational::one();
    }
    acc
}

/// `c_m = (−1)^m (6m+3)! (m!)³ / ((3m+1)! ((2m+1)!)³)`.
pub fn c_m(m: u64) -> BigRational {
    let num = factorial(6 * m + 3) * factorial(m).pow(3);
    let den = factorial(3 * m + 1) * factorial(2 * m + 1).pow(3);
    let q = BigRational::new(num, den);
    if m % 2 == 1 {
        -q
    } else {
        q
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use num_traits::Signed;

    #[test]
    fn examples() {
        assert_eq!(central_binomial(2), BigInt::from(6));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat(1, 2), 0), int(1));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }

    #[test]
    fn c_m_values() {
        assert_eq!(c_m(0), int(6));
        assert_eq!(c_m(1), int(-70));
        for m in 0..=20u64 {
            let c = c_m(m);
            assert_eq!(c.is_negative(), m % 2 == 1, "m = {m}");
        }
    }

    #[test]
    fn central_binomial_via_pochhammer() {
        // C(2k,k) = (1/2)_k 4^k / k!
        for k in 0..=200u64 {
            let lhs = int(central_binomial(k));
            let rhs = pochhammer(&rat(1, 2), k) * int(BigInt::from(4).pow(k as u32))
                / int(factorial(k));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40i64 {
            for k in -1..=n + 1 {
                assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
            }
        }
    }
}
