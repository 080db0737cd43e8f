use num_bigint::BigInt;
use num_traits::Pow;

use super::gamma_p;
use crate::exact::{int, rat, BigRational};
use crate::modular::{inv_mod, mul_mod, pow_mod, PadicError, PadicValue, PrimePowerCtx};
use crate::sequences::{c_m, central_binomial};

/// Both sides of a mod-`p^m` lemma instance, as residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaCheck {
    pub lhs: u64,
    pub rhs: u64,
    pub modulus: u64,
    pub pass: bool,
}

impl LemmaCheck {
    fn new(lhs: u64, rhs: u64, modulus: u64) -> Self {
        LemmaCheck { lhs, rhs, modulus, pass: lhs == rhs }
    }
}

fn residue(q: &BigRational, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    PadicValue::from_rational(q, ctx.p(), ctx.m()).residue(ctx.m())
}

fn sign(odd: bool, modulus: u64) -> u64 {
    if odd {
        modulus - 1
    } else {
        1
    }
}

/// `C(2m,m)²/16^m` with `m = ⌊p/4⌋`, against `−Γ_p⁴(1/4)` (p ≡ 1 mod 4) or
/// `16 Γ_p^{−4}(1/4)(1+2p)` (p ≡ 3 mod 4), mod `p²`.
pub fn check_cd9(p: u64) -> Result<LemmaCheck, PadicError> {
    let ctx = PrimePowerCtx::new(p, 2)?;
    let modulus = ctx.modulus();
    let m = p / 4;
    let q = int(central_binomial(m).pow(2u32)) / int(BigInt::from(16).pow(m as u32));
    let lhs = residue(&q, &ctx)?;
    let g4 = pow_mod(gamma_p(&rat(1, 4), &ctx)?, 4, modulus);
    let rhs = if p % 4 == 1 {
        (modulus - g4) % modulus
    } else {
        let g4_inv = inv_mod(&g4.into(), &ctx)?;
        mul_mod(16 * g4_inv % modulus, (1 + 2 * p) % modulus, modulus)
    };
    Ok(LemmaCheck::new(lhs, rhs, modulus))
}

/// `c_m ≡ (p/2) Γ_p⁴(1/4) (mod p²)` for `p ≡ 3 (mod 4)`, `m = ⌊p/4⌋`.
pub fn check_cd10(p: u64) -> Result<LemmaCheck, PadicError> {
    let ctx = PrimePowerCtx::new(p, 2)?;
    if p % 4 != 3 {
        return Err(PadicError::WrongResidueClass(p));
    }
    let modulus = ctx.modulus();
    let lhs = residue(&c_m(p / 4), &ctx)?;
    let g4 = pow_mod(gamma_p(&rat(1, 4), &ctx)?, 4, modulus);
    let half_p = residue(&rat(p as i64, 2), &ctx)?;
    Ok(LemmaCheck::new(lhs, mul_mod(half_p, g4, modulus), modulus))
}

/// `Γ_p(1/2)² = (−1)^{(p+1)/2}` at the context's precision.
pub fn check_e05_half(ctx: &PrimePowerCtx) -> Result<LemmaCheck, PadicError> {
    let modulus = ctx.modulus();
    let g = gamma_p(&rat(1, 2), ctx)?;
    let rhs = sign(ctx.p().div_ceil(2) % 2 == 1, modulus);
    Ok(LemmaCheck::new(mul_mod(g, g, modulus), rhs, modulus))
}

/// `Γ_p(1/4) Γ_p(3/4) = (−1)^{(p+1)/4}` for `p ≡ 3 (mod 4)`.
pub fn check_e05_quarter(ctx: &PrimePowerCtx) -> Result<LemmaCheck, PadicError> {
    let p = ctx.p();
    if p % 4 != 3 {
        return Err(PadicError::WrongResidueClass(p));
    }
    let modulus = ctx.modulus();
    let lhs = mul_mod(gamma_p(&rat(1, 4), ctx)?, gamma_p(&rat(3, 4), ctx)?, modulus);
    Ok(LemmaCheck::new(lhs, sign((p + 1) / 4 % 2 == 1, modulus), modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cd9_anchors() {
        let c = check_cd9(5).unwrap();
        assert_eq!((c.lhs, c.rhs, c.modulus), (19, 19, 25));
        assert!(check_cd9(7).unwrap().pass);
    }

    #[test]
    fn cd10_anchor_and_class_guard() {
        let c = check_cd10(7).unwrap();
        assert!(c.pass);
        // c_1 = −70 ≡ 28 mod 49
        assert_eq!(c.lhs, 28);
        assert_eq!(check_cd10(13), Err(PadicError::WrongResidueClass(13)));
    }

    #[test]
    fn e05_small_primes() {
        for p in crate::sequences::primes_in(5, 60) {
            let ctx = PrimePowerCtx::new(p, 2).unwrap();
            assert!(check_e05_half(&ctx).unwrap().pass, "p = {p}");
            if p % 4 == 3 {
                assert!(check_e05_quarter(&ctx).unwrap().pass, "p = {p}");
            }
        }
    }
}
