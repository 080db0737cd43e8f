use num_traits::Zero;

use crate::exact::{int, rat, BigRational};
use crate::sequences::binomial;

fn pow_neg4(e: i64) -> BigRational {
    let base = int(-4);
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

fn b(n: i64, k: i64) -> BigRational {
    int(binomial(n, k))
}

/// `F(m,k) = C(2m,k) C(2m+k,k) C(2k,k) C(2m,m)^{−2} (−4)^{2m−k}`.
pub fn wz_f(m: u64, k: u64) -> BigRational {
    let (m, k) = (m as i64, k as i64);
    let norm = b(2 * m, m);
    b(2 * m, k) * b(2 * m + k, k) * b(2 * k, k) / (&norm * &norm) * pow_neg4(2 * m - k)
}

/// `G(m,k) = −2(4m+3)k²/(2m+1)³ · C(2m+1,k−1) C(2m+k,k) C(2k,k) C(2m,m)^{−2} (−4)^{2m−k}`.
pub fn wz_g(m: u64, k: u64) -> BigRational {
    if k == 0 {
        return BigRational::zero();
    }
    let (m, k) = (m as i64, k as i64);
    let norm = b(2 * m, m);
    let lead = rat(-2 * (4 * m + 3) * k * k, (2 * m + 1).pow(3));
    lead * b(2 * m + 1, k - 1) * b(2 * m + k, k) * b(2 * k, k) / (&norm * &norm)
        * pow_neg4(2 * m - k)
}

/// `F(m+1,k) − F(m,k) − G(m,k+1) + G(m,k)`; zero for a valid WZ pair.
pub fn wz_certificate_check(m: u64, k: u64) -> BigRational {
    wz_f(m + 1, k) - wz_f(m, k) - wz_g(m, k + 1) + wz_g(m, k)
}

/// `S(m) = Σ_{k≥1} F(m,k) H_k^{(2)}` (F vanishes for k > 2m).
pub fn wz_s(m: u64) -> BigRational {
    // F(m,k+1)/F(m,k) = −(2m−k)(2m+k+1)(2k+1) / (2(k+1)³)
    let mi = m as i64;
    let mut f = wz_f(m, 1);
    let mut h2 = BigRational::zero();
    let mut acc = BigRational::zero();
    for k in 1..=2 * mi {
        h2 += rat(1, k * k);
        acc += &f * &h2;
        f *= rat(-(2 * mi - k) * (2 * mi + k + 1) * (2 * k + 1), 2 * (k + 1).pow(3));
    }
    acc
}

/// `S(m+1) − S(m) = −1/(2m+1)² + 1/(2m+2)²`, returning both sides.
pub fn wz_telescope_check(m: u64) -> (BigRational, BigRational) {
    let lhs = wz_s(m + 1) - wz_s(m);
    let (a, c) = (2 * m as i64 + 1, 2 * m as i64 + 2);
    (lhs, rat(1, c * c) - rat(1, a * a))
}
