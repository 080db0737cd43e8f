use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ArithError, BigRational};

/// Truncated power series `c0 + c1·ε + c2·ε²` (terms of order ε³ dropped).
///
/// The ε¹ coefficient is the first parameter derivative, twice the ε²
/// coefficient is the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet2 {
    pub c0: BigRational,
    pub c1: BigRational,
    pub c2: BigRational,
}

impl Jet2 {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational) -> Self {
        Jet2 { c0, c1, c2 }
    }

    pub fn constant(c0: BigRational) -> Self {
        Jet2::new(c0, BigRational::zero(), BigRational::zero())
    }

    /// `x + ε`: the seed for differentiating with respect to a parameter at `x`.
    pub fn variable(x: BigRational) -> Self {
        Jet2::new(x, BigRational::one(), BigRational::zero())
    }

    pub fn one() -> Self {
        Jet2::constant(BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Jet2::new(&self.c0 * k, &self.c1 * k, &self.c2 * k)
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.c0.is_zero() {
            return Err(ArithError::NonInvertibleJet);
        }
        // 1/(a + bε + cε²) = 1/a − (b/a²)ε + (b²/a³ − c/a²)ε²
        let inv = self.c0.recip();
        let inv2 = &inv * &inv;
        let c1 = -(&self.c1 * &inv2);
        let c2 = &self.c1 * &self.c1 * &inv2 * &inv - &self.c2 * &inv2;
        Ok(Jet2::new(inv, c1, c2))
    }

    pub fn checked_div(&self, rhs: &Jet2) -> Result<Self, ArithError> {
        Ok(self * &rhs.recip()?)
    }
}

impl<'a> Add<&'a Jet2> for &'a Jet2 {
    type Output = Jet2;
    fn add(self, rhs: &Jet2) -> Jet2 {
        Jet2::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl<'a> Sub<&'a Jet2> for &'a Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        Jet2::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl<'a> Mul<&'a Jet2> for &'a Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        Jet2::new(
            &self.c0 * &rhs.c0,
            &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0,
            &self.c0 * &rhs.c2 + &self.c1 * &rhs.c1 + &self.c2 * &rhs.c0,
        )
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2::new(-&self.c0, -&self.c1, -&self.c2)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Jet2> for Jet2 {
            type Output = Jet2;
            fn $m(self, rhs: Jet2) -> Jet2 {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Jet2> for Jet2 {
            type Output = Jet2;
            fn $m(self, rhs: &Jet2) -> Jet2 {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn j(a: i64, b: i64, c: i64) -> Jet2 {
        Jet2::new(int(a), int(b), int(c))
    }

    #[test]
    fn product_and_geometric_inverse() {
        assert_eq!(&j(1, 1, 0) * &j(1, -1, 0), j(1, 0, -1));
        assert_eq!(j(1, 1, 0).recip().unwrap(), j(1, -1, 1));
        assert_eq!(
            j(0, 1, 0).checked_div(&j(0, 1, 0)),
            Err(ArithError::NonInvertibleJet)
        );
    }

    #[test]
    fn constant_jets_reduce_to_rationals() {
        let a = Jet2::constant(rat(3, 7));
        let b = Jet2::constant(rat(-2, 5));
        assert_eq!((&a * &b).c0, rat(-6, 35));
        assert_eq!(a.checked_div(&b).unwrap(), Jet2::constant(rat(-15, 14)));
        assert!((&a + &b).c1.is_zero() && (&a + &b).c2.is_zero());
    }

    fn arb_jet() -> impl Strategy<Value = Jet2> {
        prop::array::uniform3((-50i64..50, 1i64..20))
            .prop_map(|[a, b, c]| Jet2::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1)))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_jet(), b in arb_jet(), c in arb_jet()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.c0.is_zero() {
                let q = a.checked_div(&b).unwrap();
                prop_assert_eq!(&q * &b, a.clone());
            }
        }

        // Evaluating at a concrete ε: the full polynomial product minus the
        // jet product is exactly the dropped ε³ and ε⁴ terms.
        #[test]
        fn product_matches_polynomial_product(a in arb_jet(), b in arb_jet(), t in 1i64..9) {
            let t = rat(1, t);
            let eval = |x: &Jet2| &x.c0 + &x.c1 * &t + &x.c2 * &t * &t;
            let p = &a * &b;
            let t3 = &t * &t * &t;
            let dropped = (&a.c1 * &b.c2 + &a.c2 * &b.c1) * &t3 + &a.c2 * &b.c2 * &t3 * &t;
            prop_assert_eq!(eval(&a) * eval(&b) - eval(&p), dropped);
        }
    }
}
