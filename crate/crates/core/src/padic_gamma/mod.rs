//! Morita's p-adic Gamma function at rational p-adic integers.
//!
//! `Γ_p(x)` mod `p^m` is evaluated at the integer representative
//! `a ≡ x (mod p^m)`, `0 ≤ a < p^m`, where
//! `Γ_p(a) = (−1)^a Π_{0<k<a, p∤k} k`. Continuity of `Γ_p` makes this exact to
//! precision `p^m`.

mod lemmas;

pub use lemmas::{check_cd10, check_cd9, check_e05_half, check_e05_quarter, LemmaCheck};

use num_integer::Integer;
use num_traits::One;

use crate::exact::BigRational;
use crate::modular::{inv_mod, mul_mod, PadicError, PrimePowerCtx};

/// A `Γ_p` argument validated against its context.
#[derive(Debug, Clone)]
pub struct GammaPQuery {
    x: BigRational,
    ctx: PrimePowerCtx,
    representative: u64,
}

impl GammaPQuery {
    pub fn new(x: &BigRational, ctx: &PrimePowerCtx) -> Result<Self, PadicError> {
        Ok(GammaPQuery { x: x.clone(), ctx: *ctx, representative: representative(x, ctx)? })
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    /// The integer `a ∈ [0, p^m)` with `a ≡ x`.
    pub fn representative(&self) -> u64 {
        self.representative
    }

    pub fn eval(&self) -> u64 {
        gamma_p_int(self.representative, &self.ctx)
    }
}

fn representative(x: &BigRational, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    if x.denom().is_multiple_of(&ctx.p().into()) {
        return Err(PadicError::NotPadicInteger);
    }
    let n = ctx.reduce_int(x.numer());
    let d = inv_mod(x.denom(), ctx)?;
    Ok(mul_mod(n, d, ctx.modulus()))
}

/// `Γ_p(a)` mod `p^m` for a non-negative integer `a`, by the defining product.
pub fn gamma_p_int(a: u64, ctx: &PrimePowerCtx) -> u64 {
    let (p, modulus) = (ctx.p(), ctx.modulus());
    let mut acc = 1 % modulus;
    for k in 1..a {
        if k % p != 0 {
            acc = mul_mod(acc, k % modulus, modulus);
        }
    }
    if a % 2 == 1 {
        (modulus - acc) % modulus
    } else {
        acc
    }
}

/// `Γ_p(x)` mod `p^m` as a residue in `[0, p^m)`.
pub fn gamma_p(x: &BigRational, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    Ok(GammaPQuery::new(x, ctx)?.eval())
}

/// `s_p(x)`: the integer in `{1, …, p}` congruent to `x` mod `p`.
pub fn s_p(x: &BigRational, p: u64) -> Result<u64, PadicError> {
    let ctx = PrimePowerCtx::new(p, 1)?;
    let r = representative(x, &ctx)?;
    Ok(if r == 0 { p } else { r })
}

fn residue_of(x: &BigRational, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    representative(x, ctx)
}

fn neg(a: u64, modulus: u64) -> u64 {
    (modulus - a % modulus) % modulus
}

/// `Γ_p(x+1) ≡ −x Γ_p(x)` if `x` is a unit, `−Γ_p(x)` otherwise.
pub fn check_functional_eq(x: &BigRational, ctx: &PrimePowerCtx) -> Result<bool, PadicError> {
    let modulus = ctx.modulus();
    let lhs = gamma_p(&(x + BigRational::one()), ctx)?;
    let gx = gamma_p(x, ctx)?;
    let xr = residue_of(x, ctx)?;
    let rhs = if xr % ctx.p() != 0 {
        neg(mul_mod(xr, gx, modulus), modulus)
    } else {
        neg(gx, modulus)
    };
    Ok(lhs == rhs)
}

/// `Γ_p(x) Γ_p(1−x) ≡ (−1)^{s_p(x)}`.
pub fn check_reflection(x: &BigRational, ctx: &PrimePowerCtx) -> Result<bool, PadicError> {
    let modulus = ctx.modulus();
    let prod = mul_mod(gamma_p(x, ctx)?, gamma_p(&(BigRational::one() - x), ctx)?, modulus);
    let sign = if s_p(x, ctx.p())? % 2 == 0 { 1 } else { modulus - 1 };
    Ok(prod == sign)
}

fn exponent_two(ctx: &PrimePowerCtx) -> Result<PrimePowerCtx, PadicError> {
    PrimePowerCtx::new(ctx.p(), 2)
}

/// Probe for the linear coefficient `G_1(a)` in
/// `Γ_p(a+bp) ≡ Γ_p(a)(1 + G_1(a) b p) (mod p²)`:
/// `ĝ = (Γ_p(a+p)/Γ_p(a) − 1)/p mod p`.
pub fn g1_probe(a: &BigRational, ctx: &PrimePowerCtx) -> Result<u64, PadicError> {
    let c2 = exponent_two(ctx)?;
    let p = c2.p();
    let ratio = gamma_ratio(a, 1, &c2)?;
    debug_assert_eq!(ratio % p, 1, "Γ_p is continuous");
    Ok(((ratio + c2.modulus() - 1) % c2.modulus()) / p)
}

fn gamma_ratio(a: &BigRational, b: i64, c2: &PrimePowerCtx) -> Result<u64, PadicError> {
    let shifted = a + BigRational::from_integer((b * c2.p() as i64).into());
    let num = gamma_p(&shifted, c2)?;
    let den = gamma_p(a, c2)?;
    let den_inv = inv_mod(&den.into(), c2)?;
    Ok(mul_mod(num, den_inv, c2.modulus()))
}

/// The b-linearity form of the mod-`p²` expansion: for the probe `ĝ`,
/// `Γ_p(a+bp)/Γ_p(a) ≡ 1 + ĝ·b·p (mod p²)`.
pub fn check_gmod(a: &BigRational, b: i64, ctx: &PrimePowerCtx) -> Result<bool, PadicError> {
    let c2 = exponent_two(ctx)?;
    let (p, modulus) = (c2.p(), c2.modulus());
    let g = g1_probe(a, &c2)?;
    let ratio = gamma_ratio(a, b, &c2)?;
    let bp = (b.rem_euclid(p as i64) as u64 * p) % modulus;
    Ok(ratio == (1 + mul_mod(g, bp, modulus)) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn ctx(p: u64, m: u32) -> PrimePowerCtx {
        PrimePowerCtx::new(p, m).unwrap()
    }

    #[test]
    fn anchor_values() {
        let c = ctx(5, 2);
        assert_eq!(gamma_p(&int(0), &c).unwrap(), 1);
        assert_eq!(gamma_p(&int(1), &c).unwrap(), 24);
        assert_eq!(gamma_p(&int(1), &ctx(7, 3)).unwrap(), 342);
        assert_eq!(gamma_p(&rat(1, 2), &c).unwrap(), 18);
        assert_eq!(gamma_p(&rat(1, 4), &c).unwrap(), 21);
        assert_eq!(crate::modular::pow_mod(21, 4, 25), 6);
        assert_eq!(GammaPQuery::new(&rat(1, 2), &c).unwrap().representative(), 13);
        assert_eq!(gamma_p(&rat(1, 5), &c), Err(PadicError::NotPadicInteger));
    }

    #[test]
    fn integer_arguments_match_defining_sequence() {
        for p in [5u64, 7, 11, 13] {
            let c = ctx(p, 2);
            let modulus = c.modulus() as i128;
            for n in 2..=p {
                let mut prod: i128 = 1;
                for k in 1..n {
                    if k % p != 0 {
                        prod = prod * k as i128 % modulus;
                    }
                }
                let expected = if n % 2 == 1 { -prod } else { prod }.rem_euclid(modulus) as u64;
                assert_eq!(gamma_p(&int(n as i64), &c).unwrap(), expected);
            }
        }
    }

    #[test]
    fn functional_equation_and_reflection_examples() {
        let c = ctx(5, 2);
        assert!(check_functional_eq(&rat(1, 2), &c).unwrap());
        assert!(check_functional_eq(&int(0), &c).unwrap());
        assert!(check_functional_eq(&int(5), &c).unwrap());
        assert!(check_reflection(&rat(1, 2), &c).unwrap());
        assert!(check_reflection(&rat(1, 4), &c).unwrap());
        assert!(check_reflection(&int(1), &c).unwrap());
        assert_eq!(s_p(&rat(1, 2), 5).unwrap(), 3);
        assert_eq!(s_p(&rat(1, 4), 5).unwrap(), 4);
        assert_eq!(s_p(&int(0), 5).unwrap(), 5);
    }

    #[test]
    fn functional_equation_and_reflection_on_small_rationals() {
        for p in [5u64, 7, 11, 13] {
            for m in 1..=3 {
                let c = ctx(p, m);
                for a in -8i64..=8 {
                    for b in 1i64..=8 {
                        if (b as u64).is_multiple_of(p) {
                            continue;
                        }
                        let x = rat(a, b);
                        assert!(check_functional_eq(&x, &c).unwrap(), "feq p={p} m={m} x={x}");
                        assert!(check_reflection(&x, &c).unwrap(), "refl p={p} m={m} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn gmod_probe_is_linear_in_b() {
        let c = ctx(7, 2);
        for b in 0..7 {
            assert!(check_gmod(&rat(1, 4), b, &c).unwrap(), "b = {b}");
        }
        let c = ctx(5, 2);
        assert!(check_gmod(&rat(1, 2), 0, &c).unwrap());
        // b = 2 predicted from the b = 1 probe
        assert!(check_gmod(&rat(1, 2), 2, &c).unwrap());
        assert!(check_gmod(&rat(1, 2), -3, &c).unwrap());
    }

    #[test]
    fn a_wrong_linear_coefficient_is_rejected() {
        // Perturbing the probe must break linearity for some b.
        let c2 = ctx(11, 2);
        let a = rat(1, 4);
        let g = g1_probe(&a, &c2).unwrap();
        let wrong = (g + 1) % 11;
        let ratio = gamma_ratio(&a, 1, &c2).unwrap();
        assert_ne!(ratio, (1 + wrong * 11) % 121);
    }
}
