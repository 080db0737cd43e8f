use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;

use super::IdentityError;
use crate::exact::{int, rat, BigRational, Jet2};
use crate::sequences::{central_binomial, harmonic, odd_harmonic};

/// The four perturbed `₃F₂(1)` families whose first or second parameter
/// derivative produces a harmonic-weighted cube series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetSeries {
    /// `₃F₂(1/2, 1/2, c; 1, 3/2−c; 1)`, `c = 1/2 + ε`.
    DixonDc,
    /// `₃F₂(a, 1/2, 1/2; 1/2+a, 1/2+a; 1)`, `a = 1/2 + ε`.
    DixonDa,
    /// `₃F₂(1/2, 1/2, 1/2; e, 2−e; 1)`, `e = 1 + ε`.
    WhippleDee2,
    /// `₃F₂(a, 1−a, 1/2; 1, 1; 1)`, `a = 1/2 + ε`.
    WhippleDaa2,
}

impl JetSeries {
    pub const ALL: [JetSeries; 4] =
        [JetSeries::DixonDc, JetSeries::DixonDa, JetSeries::WhippleDee2, JetSeries::WhippleDaa2];

    pub fn id(&self) -> &'static str {
        match self {
            JetSeries::DixonDc => "dixon_dc",
            JetSeries::DixonDa => "dixon_da",
            JetSeries::WhippleDee2 => "whipple_dee2",
            JetSeries::WhippleDaa2 => "whipple_daa2",
        }
    }

    /// Upper and lower parameters (the extra `k!` is implicit).
    fn parameters(&self) -> (Vec<Jet2>, Vec<Jet2>) {
        let c = |q: BigRational| Jet2::constant(q);
        let half_plus = Jet2::variable(rat(1, 2));
        let eps = Jet2::variable(int(0));
        match self {
            JetSeries::DixonDc => (
                vec![c(rat(1, 2)), c(rat(1, 2)), half_plus],
                vec![c(int(1)), &c(int(1)) - &eps],
            ),
            JetSeries::DixonDa => {
                let lower = &c(int(1)) + &eps;
                (vec![half_plus, c(rat(1, 2)), c(rat(1, 2))], vec![lower.clone(), lower])
            }
            JetSeries::WhippleDee2 => (
                vec![c(rat(1, 2)), c(rat(1, 2)), c(rat(1, 2))],
                vec![&c(int(1)) + &eps, &c(int(1)) - &eps],
            ),
            JetSeries::WhippleDaa2 => (
                vec![half_plus, &c(rat(1, 2)) - &eps, c(rat(1, 2))],
                vec![c(int(1)), c(int(1))],
            ),
        }
    }
}

impl fmt::Display for JetSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for JetSeries {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        JetSeries::ALL
            .into_iter()
            .find(|j| j.id() == s)
            .ok_or_else(|| IdentityError::UnknownId(s.to_string()))
    }
}

fn jet_pochhammer(x: &Jet2, k: u64) -> Jet2 {
    let mut acc = Jet2::one();
    let mut t = x.clone();
    let one = Jet2::one();
    for _ in 0..k {
        acc = &acc * &t;
        t = &t + &one;
    }
    acc
}

/// The `k`-th hypergeometric term of the perturbed series as a jet in ε.
pub fn term_jet(series: JetSeries, k: u64) -> Jet2 {
    let (upper, lower) = series.parameters();
    let mut num = Jet2::one();
    for a in &upper {
        num = &num * &jet_pochhammer(a, k);
    }
    let mut den = Jet2::constant(int(crate::sequences::factorial(k)));
    for b in &lower {
        den = &den * &jet_pochhammer(b, k);
    }
    num.checked_div(&den).expect("lower parameters are nonzero at ε = 0")
}

/// Relation between the jet and the harmonic-weighted cube term:
/// returns `(jet side, harmonic side)` of the coefficient identity.
pub fn term_jet_sides(series: JetSeries, k: u64) -> (BigRational, BigRational) {
    let base = int(central_binomial(k).pow(3u32)) / int(BigInt::from(64).pow(k as u32));
    let jet = term_jet(series, k);
    assert_eq!(jet.c0, base, "ε⁰ coefficient is the unperturbed term");
    let (h, o) = (harmonic(k, 1), odd_harmonic(k, 1));
    match series {
        JetSeries::DixonDc => (jet.c1, &base * (int(2) * o + h)),
        JetSeries::DixonDa => (jet.c1, &base * (int(2) * o - int(2) * h)),
        JetSeries::WhippleDee2 => (jet.c2 * int(2), &base * int(2) * harmonic(k, 2)),
        JetSeries::WhippleDaa2 => (jet.c2 * int(2), &base * int(-8) * odd_harmonic(k, 2)),
    }
}

pub fn term_jet_check(series_id: &str, k: u64) -> Result<bool, IdentityError> {
    let series: JetSeries = series_id.parse()?;
    let (l, r) = term_jet_sides(series, k);
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn dixon_dc_first_term() {
        let j = term_jet(JetSeries::DixonDc, 1);
        assert_eq!(j.c0, rat(1, 8));
        assert_eq!(j.c1, rat(3, 8));
        assert!(term_jet_check("dixon_dc", 1).unwrap());
    }

    #[test]
    fn zeroth_term_is_one() {
        for s in JetSeries::ALL {
            assert_eq!(term_jet(s, 0), Jet2::one());
            assert!(term_jet_check(s.id(), 0).unwrap());
        }
    }

    #[test]
    fn whipple_second_derivatives() {
        assert!(term_jet_check("whipple_daa2", 1).unwrap());
        for s in [JetSeries::WhippleDee2, JetSeries::WhippleDaa2] {
            for k in 0..10 {
                assert!(term_jet(s, k).c1.is_zero(), "{s} is even in ε");
            }
        }
    }

    #[test]
    fn all_families_small_k() {
        for s in JetSeries::ALL {
            for k in 0..=20 {
                assert!(term_jet_check(s.id(), k).unwrap(), "{s} k={k}");
            }
        }
        assert_eq!(
            term_jet_check("gauss", 1),
            Err(IdentityError::UnknownId("gauss".into()))
        );
    }
}
