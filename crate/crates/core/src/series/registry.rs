use num_traits::{One, Pow};

use super::bigfloat::BigFloat;
use super::constants::Constants;
use crate::exact::{int, rat, BigRational};
use crate::sequences::{factorial, harmonic, odd_harmonic, pochhammer};

/// Weight multiplying `c_k^e`, `c_k = C(2k,k)/4^k = (1/2)_k/k!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesWeight {
    One,
    H,
    H2,
    O,
    O2,
    FourKPlusOne,
    /// `2 − d(4k+1)H_k`
    Guillera(u32),
}

/// How the omitted tail `Σ_{k≥N}` is modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailModel {
    /// Positive terms `~ k^{−e/2}(λ ln k + μ)`: Euler–Maclaurin over the
    /// asymptotic expansion.
    Asymptotic,
    /// Positive terms with ratio `< 1/2`.
    Geometric,
    /// Alternating terms of eventually decreasing size: repeated averaging
    /// of consecutive partial sums.
    Alternating,
}

#[derive(Clone, Copy)]
pub struct SeriesCase {
    pub id: &'static str,
    pub statement: &'static str,
    /// Power `e` of `c_k`.
    pub power: u32,
    /// Extra factor `2^{−k}`.
    pub halving: bool,
    pub weight: SeriesWeight,
    pub alternating: bool,
    pub tail: TailModel,
    pub closed: fn(&Constants) -> BigFloat,
    /// Relative tolerance on `|partial + tail − closed|`.
    pub tolerance: f64,
}

impl std::fmt::Debug for SeriesCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SeriesCase").field("id", &self.id).finish()
    }
}

impl SeriesCase {
    /// The `k`-th term as an exact rational.
    pub fn term(&self, k: u64) -> BigRational {
        let c = pochhammer(&rat(1, 2), k) / int(factorial(k));
        let mut t: BigRational = Pow::pow(c, self.power);
        if self.halving {
            t /= int(Pow::pow(num_bigint::BigInt::from(2), k));
        }
        let w = match self.weight {
            SeriesWeight::One => BigRational::one(),
            SeriesWeight::H => harmonic(k, 1),
            SeriesWeight::H2 => harmonic(k, 2),
            SeriesWeight::O => odd_harmonic(k, 1),
            SeriesWeight::O2 => odd_harmonic(k, 2),
            SeriesWeight::FourKPlusOne => int(4 * k as i64 + 1),
            SeriesWeight::Guillera(d) => int(2) - int(d as i64 * (4 * k as i64 + 1)) * harmonic(k, 1),
        };
        t *= w;
        if self.alternating && k % 2 == 1 {
            -t
        } else {
            t
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.alternating
    }
}

fn g34_4(c: &Constants) -> BigFloat {
    let g2 = c.gamma_three_quarters.mul(&c.gamma_three_quarters);
    g2.mul(&g2)
}

const POSITIVE_LOOSE: f64 = 1e-4;
const TIGHT: f64 = 1e-6;

static SERIES: &[SeriesCase] = &[
    SeriesCase {
        id: "E20",
        statement: "sum_{k>=0} C(2k,k)^3/64^k = pi/Gamma(3/4)^4",
        power: 3,
        halving: false,
        weight: SeriesWeight::One,
        alternating: false,
        tail: TailModel::Asymptotic,
        closed: |c| c.pi.div(&g34_4(c)),
        tolerance: TIGHT,
    },
    SeriesCase {
        id: "E22",
        statement: "sum_{k>=0} C(2k,k)^2/32^k = sqrt(pi)/Gamma(3/4)^2",
        power: 2,
        halving: true,
        weight: SeriesWeight::One,
        alternating: false,
        tail: TailModel::Geometric,
        closed: |c| c.pi.sqrt().div(&c.gamma_three_quarters.mul(&c.gamma_three_quarters)),
        tolerance: TIGHT,
    },
    SeriesCase {
        id: "S321_H",
        statement: "sum_{k>=1} C(2k,k)^3 H_k/64^k = 2 pi (pi - 3 ln 2)/(3 Gamma(3/4)^4)",
        power: 3,
        halving: false,
        weight: SeriesWeight::H,
        alternating: false,
        tail: TailModel::Asymptotic,
        closed: |c| c.pi.ldexp(1).mul(&c.pi.sub(&c.ln2.mul_small(3))).div(&g34_4(c).mul_small(3)),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "S321_O",
        statement: "sum_{k>=1} C(2k,k)^3 O_k/64^k = pi^2/(6 Gamma(3/4)^4)",
        power: 3,
        halving: false,
        weight: SeriesWeight::O,
        alternating: false,
        tail: TailModel::Asymptotic,
        closed: |c| c.pi.mul(&c.pi).div(&g34_4(c).mul_small(6)),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "S322_H2",
        statement: "sum_{k>=1} C(2k,k)^3 H2_k/64^k = pi (12 G - pi^2)/(3 Gamma(3/4)^4)",
        power: 3,
        halving: false,
        weight: SeriesWeight::H2,
        alternating: false,
        tail: TailModel::Asymptotic,
        closed: |c| c.pi.mul(&c.catalan.mul_small(12).sub(&c.pi.mul(&c.pi))).div(&g34_4(c).mul_small(3)),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "S322_O2",
        statement: "sum_{k>=1} C(2k,k)^3 O2_k/64^k = pi (pi^2 - 8 G)/(8 Gamma(3/4)^4)",
        power: 3,
        halving: false,
        weight: SeriesWeight::O2,
        alternating: false,
        tail: TailModel::Asymptotic,
        closed: |c| c.pi.mul(&c.pi.mul(&c.pi).sub(&c.catalan.mul_small(8))).div(&g34_4(c).mul_small(8)),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "E61",
        statement: "sum_{k>=0} (-1)^k C(2k,k)^3 (2 - 3(4k+1) H_k)/64^k = 12 ln 2/pi",
        power: 3,
        halving: false,
        weight: SeriesWeight::Guillera(3),
        alternating: true,
        tail: TailModel::Alternating,
        closed: |c| c.ln2.mul_small(12).div(&c.pi),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "E62",
        statement: "sum_{k>=0} (-1)^k C(2k,k)^5 (2 - 5(4k+1) H_k)/1024^k = 4 (15 ln 2 - 2 pi)/(3 Gamma(3/4)^4)",
        power: 5,
        halving: false,
        weight: SeriesWeight::Guillera(5),
        alternating: true,
        tail: TailModel::Alternating,
        closed: |c| c.ln2.mul_small(15).sub(&c.pi.ldexp(1)).ldexp(2).div(&g34_4(c).mul_small(3)),
        tolerance: POSITIVE_LOOSE,
    },
    SeriesCase {
        id: "VH_B1",
        statement: "sum_{k>=0} (4k+1) (-1)^k C(2k,k)^3/64^k = 2/pi",
        power: 3,
        halving: false,
        weight: SeriesWeight::FourKPlusOne,
        alternating: true,
        tail: TailModel::Alternating,
        closed: |c| BigFloat::from_int(2, c.bits).div(&c.pi),
        tolerance: TIGHT,
    },
    SeriesCase {
        id: "VH_A1",
        statement: "sum_{k>=0} (4k+1) (-1)^k C(2k,k)^5/1024^k = 2/Gamma(3/4)^4",
        power: 5,
        halving: false,
        weight: SeriesWeight::FourKPlusOne,
        alternating: true,
        tail: TailModel::Alternating,
        closed: |c| BigFloat::from_int(2, c.bits).div(&g34_4(c)),
        tolerance: TIGHT,
    },
];

pub fn series_registry() -> &'static [SeriesCase] {
    SERIES
}

pub fn find_series(id: &str) -> Option<&'static SeriesCase> {
    SERIES.iter().find(|c| c.id == id)
}
