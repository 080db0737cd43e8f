pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::Zero;

use super::ArithError;

/// `n / d` as a normalized rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int<T: Into<BigInt>>(n: T) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn recip(q: &BigRational) -> Result<BigRational, ArithError> {
    if q.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(q.recip())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &BigRational, b: &BigRational, op: RatOp) -> Result<BigRational, ArithError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            a / b
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rat_arith(&rat(3, 2), &rat(4, 3), RatOp::Mul).unwrap(), int(2));
        assert_eq!(
            rat_arith(&int(1), &int(0), RatOp::Div),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn normalized_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert!(rat(0, 7).denom().is_one());
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                let inv = rat_arith(&int(1), &a, RatOp::Div).unwrap();
                prop_assert!((&a * inv).is_one());
            }
            let d = rat_arith(&a, &b, RatOp::Sub).unwrap();
            prop_assert_eq!(d.denom().is_positive(), true);
        }
    }
}
