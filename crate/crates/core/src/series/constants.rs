use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bigfloat::BigFloat;
use super::SeriesError;
use crate::sequences::SpecialNumbers;

/// Smallest precision accepted by [`constants`].
pub const MIN_BITS: u32 = 64;
const GUARD: u32 = 32;

/// The constants appearing in the closed forms, each rounded to `bits`.
#[derive(Debug, Clone)]
pub struct Constants {
    pub bits: u32,
    pub pi: BigFloat,
    pub ln2: BigFloat,
    pub catalan: BigFloat,
    pub gamma_quarter: BigFloat,
    pub gamma_three_quarters: BigFloat,
    /// Euler's constant γ.
    pub euler_gamma: BigFloat,
}

/// `Σ ±1/((2j+1) n^{2j+1})` in fixed point with `w` fractional bits:
/// `atan(1/n)` or, with `hyperbolic`, `atanh(1/n)`.
fn arctan_inv(n: u64, w: u32, hyperbolic: bool) -> BigInt {
    let n2 = BigInt::from(n) * n;
    let mut power = (BigInt::one() << w as usize) / n;
    let mut sum = power.clone();
    let mut j = 1u64;
    loop {
        power /= &n2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * j + 1);
        if hyperbolic || j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        j += 1;
    }
    sum
}

fn fixed(x: BigInt, w: u32, bits: u32) -> BigFloat {
    BigFloat::new(x, -(w as i64), bits)
}

pub fn pi(bits: u32) -> BigFloat {
    let w = bits + GUARD;
    // Machin: π = 16 atan(1/5) − 4 atan(1/239)
    fixed(arctan_inv(5, w, false) * 16 - arctan_inv(239, w, false) * 4, w, bits)
}

pub fn ln2(bits: u32) -> BigFloat {
    let w = bits + GUARD;
    fixed(arctan_inv(3, w, true) * 2, w, bits)
}

/// Natural logarithm of a positive value.
pub fn ln(x: &BigFloat) -> BigFloat {
    assert!(!x.is_negative() && !x.is_zero(), "ln of a non-positive value");
    let bits = x.prec();
    let w = bits + GUARD;
    let x = x.with_prec(w);
    // x = 2^k·y with y ∈ [1/√2, √2)
    let mut k = x.log2_floor().unwrap();
    let mut y = x.ldexp(-k);
    if y.to_f64() > std::f64::consts::SQRT_2 {
        y = y.ldexp(-1);
        k += 1;
    }
    // ln y = 2 atanh z, z = (y−1)/(y+1), |z| < 0.172
    let one = BigFloat::from_int(1, w);
    let z = y.sub(&one).div(&y.add(&one));
    let z2 = z.mul(&z);
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut j = 1u64;
    let floor = -(w as i64) - 4;
    loop {
        power = power.mul(&z2);
        if power.is_zero() || power.log2_floor().unwrap() < floor {
            break;
        }
        sum = sum.add(&power.div_small(2 * j + 1));
        j += 1;
    }
    sum.ldexp(1).add(&ln2(w).mul_small(k)).with_prec(bits)
}

fn agm(a: &BigFloat, b: &BigFloat) -> BigFloat {
    let (mut a, mut b) = (a.clone(), b.clone());
    let floor = -(a.prec() as i64) + 2;
    loop {
        let next_a = a.add(&b).ldexp(-1);
        let next_b = a.mul(&b).sqrt();
        let d = next_a.sub(&next_b);
        a = next_a;
        b = next_b;
        if d.is_zero() || d.abs().log2_floor().unwrap() < floor {
            return a;
        }
    }
}

/// `Γ(1/4) = sqrt((2π)^{3/2} / AGM(1, √2))`.
pub fn gamma_quarter(bits: u32) -> BigFloat {
    let w = bits + GUARD;
    let two_pi = pi(w).ldexp(1);
    let m = agm(&BigFloat::from_int(1, w), &BigFloat::from_int(2, w).sqrt());
    two_pi.mul(&two_pi.sqrt()).div(&m).sqrt().with_prec(bits)
}

/// `G = (π/8) ln(2+√3) + (3/8) Σ_{k≥0} 1/((2k+1)² C(2k,k))`.
pub fn catalan(bits: u32) -> BigFloat {
    let w = bits + GUARD;
    let three = BigFloat::from_int(3, w);
    let head = pi(w).mul(&ln(&BigFloat::from_int(2, w).add(&three.sqrt()))).ldexp(-3);
    // r_k = 1/C(2k,k), r_k = r_{k−1}·k/(2(2k−1))
    let mut r = BigFloat::from_int(1, w);
    let mut sum = BigFloat::from_int(1, w);
    let floor = -(w as i64) - 4;
    for k in 1u64.. {
        r = r.mul_small(k as i64).div_small(2 * (2 * k - 1));
        let term = r.div_small((2 * k + 1) * (2 * k + 1));
        if term.log2_floor().unwrap() < floor {
            break;
        }
        sum = sum.add(&term);
    }
    head.add(&sum.mul_small(3).ldexp(-3)).with_prec(bits)
}

/// Euler's γ by Euler–Maclaurin on `H_N − ln N` with exact Bernoulli numbers.
pub fn euler_gamma(bits: u32) -> BigFloat {
    let w = bits + GUARD;
    let n = (bits as u64).max(64);
    let mut h = BigFloat::zero(w);
    for j in 1..=n {
        h = h.add(&BigFloat::from_ratio(1, j, w));
    }
    let nf = BigFloat::from_int(n, w);
    // γ = H_N − ln N − 1/(2N) + Σ_j B_{2j}/(2j N^{2j}); each step gains
    // ≥ 8 bits while 2j ≪ 2πN, so w/4 + 40 terms always suffice.
    let mut g = h.sub(&ln(&nf)).sub(&BigFloat::from_ratio(1, 2 * n, w));
    let max_j = (w / 4 + 40) as usize;
    let table = SpecialNumbers::new(2 * max_j);
    let n2 = nf.mul(&nf);
    let mut npow = n2.clone();
    let floor = -(w as i64) - 4;
    for j in 1..=max_j {
        let term = BigFloat::from_rational(table.bernoulli(2 * j), w).div(&npow.mul_small(2 * j as i64));
        g = g.add(&term);
        if term.abs().log2_floor().unwrap() < floor {
            break;
        }
        npow = npow.mul(&n2);
    }
    g.with_prec(bits)
}

pub fn constants(bits: u32) -> Result<Constants, SeriesError> {
    if bits < MIN_BITS {
        return Err(SeriesError::PrecisionTooLow { bits, min: MIN_BITS });
    }
    let w = bits + GUARD;
    let pi_w = pi(w);
    let gq = gamma_quarter(w);
    let g34 = pi_w.mul(&BigFloat::from_int(2, w).sqrt()).div(&gq);
    Ok(Constants {
        bits,
        pi: pi_w.with_prec(bits),
        ln2: ln2(bits),
        catalan: catalan(bits),
        gamma_quarter: gq.with_prec(bits),
        gamma_three_quarters: g34.with_prec(bits),
        euler_gamma: euler_gamma(bits),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference digits (50 significant).
    const PI: &str = "3.1415926535897932384626433832795028841971693993751e0";
    const LN2: &str = "6.9314718055994530941723212145817656807550013436026e-1";
    const CATALAN: &str = "9.1596559417721901505460351493238411077414937428167e-1";
    const G14: &str = "3.6256099082219083119306851558676720029951676828801e0";
    const G34: &str = "1.2254167024651776451290983033628905268512392481081e0";
    const EULER: &str = "5.7721566490153286060651209008240243104215933593992e-1";

    #[test]
    fn fifty_digits() {
        let c = constants(200).unwrap();
        assert_eq!(c.pi.to_sci(50), PI);
        assert_eq!(c.ln2.to_sci(50), LN2);
        assert_eq!(c.catalan.to_sci(50), CATALAN);
        assert_eq!(c.gamma_quarter.to_sci(50), G14);
        assert_eq!(c.gamma_three_quarters.to_sci(50), G34);
        assert_eq!(c.euler_gamma.to_sci(50), EULER);
    }

    #[test]
    fn precision_floor_and_consistency() {
        assert!(matches!(constants(32), Err(SeriesError::PrecisionTooLow { .. })));
        let lo = constants(64).unwrap();
        let hi = constants(512).unwrap();
        for (a, b) in [(&lo.pi, &hi.pi), (&lo.catalan, &hi.catalan), (&lo.euler_gamma, &hi.euler_gamma)] {
            let d = a.sub(&b.with_prec(64)).abs();
            assert!(d.is_zero() || d.log2_floor().unwrap() < -60);
        }
        // reflection: Γ(1/4)Γ(3/4) = π√2
        let lhs = hi.gamma_quarter.mul(&hi.gamma_three_quarters);
        let rhs = hi.pi.mul(&BigFloat::from_int(2, 512).sqrt());
        let d = lhs.sub(&rhs);
        assert!(d.is_zero() || d.log2_floor().unwrap() < -500);
    }

    #[test]
    fn ln_values() {
        let x = BigFloat::from_int(10, 256);
        assert_eq!(ln(&x).to_sci(40), "2.302585092994045684017991454684364207601e0");
        let y = BigFloat::from_ratio(1, 3, 256);
        assert_eq!(ln(&y).to_sci(30), "-1.09861228866810969139524523692e0");
    }
}
