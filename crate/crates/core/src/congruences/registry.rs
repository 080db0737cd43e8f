use super::env::{GammaArg, PrimeEnv};
use super::recipe::{SumRecipe, Weight};
use crate::modular::PadicValue;

pub type SideFn = fn(&PrimeEnv) -> PadicValue;
pub type FamilyFn = fn(&PrimeEnv, u64) -> (PadicValue, PadicValue);

/// Residue-class restriction on admissible primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueClass {
    Any,
    OneMod4,
    ThreeMod4,
}

impl ResidueClass {
    pub fn admits(self, p: u64) -> bool {
        match self {
            ResidueClass::Any => true,
            ResidueClass::OneMod4 => p % 4 == 1,
            ResidueClass::ThreeMod4 => p % 4 == 3,
        }
    }
}

#[derive(Clone, Copy)]
pub enum Lhs {
    Sum(SumRecipe),
    Custom(SideFn),
}

#[derive(Clone, Copy)]
pub enum Shape {
    /// A single congruence `lhs ≡ rhs`.
    Single { lhs: Lhs, rhs: SideFn },
    /// A pointwise family `lhs(k) ≡ rhs(k)` for `0 ≤ k ≤ (p−1)/2`.
    Family(FamilyFn),
}

/// One registered supercongruence.
#[derive(Clone, Copy)]
pub struct CongruenceCase {
    pub id: &'static str,
    pub statement: &'static str,
    /// Modulus is `p^power`.
    pub power: u32,
    pub class: ResidueClass,
    pub shape: Shape,
    /// Infinite series whose truncation this sum is.
    pub series_link: Option<&'static str>,
}

impl std::fmt::Debug for CongruenceCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CongruenceCase").field("id", &self.id).field("power", &self.power).finish()
    }
}

const fn single(
    id: &'static str,
    statement: &'static str,
    power: u32,
    lhs: Lhs,
    rhs: SideFn,
) -> CongruenceCase {
    CongruenceCase {
        id,
        statement,
        power,
        class: ResidueClass::Any,
        shape: Shape::Single { lhs, rhs },
        series_link: None,
    }
}

const fn family(id: &'static str, statement: &'static str, power: u32, f: FamilyFn) -> CongruenceCase {
    CongruenceCase { id, statement, power, class: ResidueClass::Any, shape: Shape::Family(f), series_link: None }
}

impl CongruenceCase {
    const fn only(mut self, class: ResidueClass) -> Self {
        self.class = class;
        self
    }

    const fn linked(mut self, series: &'static str) -> Self {
        self.series_link = Some(series);
        self
    }

    pub fn recipe(&self) -> Option<&SumRecipe> {
        match &self.shape {
            Shape::Single { lhs: Lhs::Sum(r), .. } => Some(r),
            _ => None,
        }
    }
}

const fn s(power: u32, base: u32, weight: Weight) -> SumRecipe {
    SumRecipe::new(power, base, weight)
}

fn sum(e: &PrimeEnv, r: SumRecipe) -> PadicValue {
    r.padic_sum(e.p(), e.p() - 1, e.digits())
}

/// `2q − pq²`
fn q_combo(e: &PrimeEnv) -> PadicValue {
    e.int(2) * e.q() - e.pv() * e.q().pow(2)
}

/// `Σ_{k=1}^{n} (−1)^k C(n,k)³ w_k` with `w_k` from an incremental update.
fn alt_cube_sum(e: &PrimeEnv, start: u64, mut w: impl FnMut(u64) -> PadicValue) -> PadicValue {
    let n = e.n();
    let mut c = e.int(1);
    let mut acc = e.zero();
    for k in 0..=n {
        if k >= 1 {
            c = c * e.rat((n - k + 1) as i64, k as i64);
        }
        let wk = w(k);
        if k >= start {
            acc = acc + e.sign(k) * c.pow(3) * wk;
        }
    }
    acc
}

static REGISTRY: &[CongruenceCase] = &[
    single(
        "H2_improved",
        "sum_{k=0}^{p-1} C(2k,k)^3/64^k == -G^4 (p=1 mod 4), -(p^2/16) G^4 (p=3 mod 4), G = Gamma_p(1/4)",
        3,
        Lhs::Sum(s(3, 64, Weight::One)),
        |e| {
            let g = e.g4(3);
            if e.is_one_mod_4() {
                -g
            } else {
                -(e.pv().pow(2) * e.rat(1, 16) * g)
            }
        },
    )
    .linked("E20"),
    single(
        "deg1_H",
        "sum_{k=1}^{p-1} C(2k,k) H_k/4^k == 2 - 2p + 4p^2 q - 6p^3 q^2 - p^3 B_{p-3}/3",
        4,
        Lhs::Sum(s(1, 4, Weight::H).from_one()),
        |e| {
            let (p, q) = (e.pv(), e.q());
            e.int(2) - e.int(2) * p + e.int(4) * p.pow(2) * q - e.int(6) * p.pow(3) * q.pow(2)
                - p.pow(3) * e.bern() * e.rat(1, 3)
        },
    ),
    single(
        "deg1_H2",
        "sum_{k=1}^{p-1} C(2k,k) H2_k/4^k == -4q + 2p q^2 - (4/3) p^2 q^3 - p^2 B_{p-3}/2",
        3,
        Lhs::Sum(s(1, 4, Weight::H2).from_one()),
        |e| {
            let (p, q) = (e.pv(), e.q());
            -(e.int(4) * q) + e.int(2) * p * q.pow(2) - e.rat(4, 3) * p.pow(2) * q.pow(3)
                - p.pow(2) * e.bern() * e.rat(1, 2)
        },
    ),
    single(
        "aux_Ta10",
        "sum_{k=1}^{p-1} C(2k,k)/(k 4^k) == -H_{(p-1)/2}",
        3,
        Lhs::Sum(s(1, 4, Weight::InvK).from_one()),
        |e| -e.harmonic(e.n(), 1),
    ),
    single(
        "aux_E12a",
        "H_{p-1} == -p^2 B_{p-3}/3",
        3,
        Lhs::Custom(|e| e.harmonic(e.p() - 1, 1)),
        |e| -(e.pv().pow(2) * e.bern() * e.rat(1, 3)),
    ),
    single(
        "aux_E12b",
        "4^{p-1} == 1 + 2p q + p^2 q^2",
        3,
        Lhs::Custom(|e| e.int(4).pow(e.p() as u32 - 1)),
        |e| e.int(1) + e.int(2) * e.pv() * e.q() + e.pv().pow(2) * e.q().pow(2),
    ),
    single(
        "aux_E13a",
        "H2_{p-1} == (2/3) p B_{p-3}",
        2,
        Lhs::Custom(|e| e.harmonic(e.p() - 1, 2)),
        |e| e.rat(2, 3) * e.pv() * e.bern(),
    ),
    single(
        "aux_E13b",
        "H_{(p-1)/2} == -2q + p q^2 - (2/3) p^2 q^3 - (7/12) p^2 B_{p-3}",
        3,
        Lhs::Custom(|e| e.harmonic(e.n(), 1)),
        |e| {
            let (p, q) = (e.pv(), e.q());
            -(e.int(2) * q) + p * q.pow(2) - e.rat(2, 3) * p.pow(2) * q.pow(3) - e.rat(7, 12) * p.pow(2) * e.bern()
        },
    ),
    single(
        "aux_E04a",
        "H2_{(p-1)/2} == (7/3) p B_{p-3}",
        2,
        Lhs::Custom(|e| e.harmonic(e.n(), 2)),
        |e| e.rat(7, 3) * e.pv() * e.bern(),
    ),
    single(
        "aux_E04b",
        "H2_{floor(p/4)} == (-1)^n (8E_{p-3} - 4E_{2p-4}) + (14/3) p B_{p-3}",
        2,
        Lhs::Custom(|e| e.harmonic(e.p() / 4, 2)),
        |e| {
            e.sign(e.n()) * (e.int(8) * e.e1() - e.int(4) * e.e2()) + e.rat(14, 3) * e.pv() * e.bern()
        },
    ),
    single(
        "aux_E03",
        "sum_{k=1}^{n} (-1)^k/k^2 == (-1)^n (4E_{p-3} - 2E_{2p-4}), n = (p-1)/2",
        2,
        Lhs::Custom(alternating_inverse_squares),
        |e| e.sign(e.n()) * (e.int(4) * e.e1() - e.int(2) * e.e2()),
    ),
    single(
        "deg2_H",
        "sum_{k=1}^{p-1} C(2k,k)^2 H_k/16^k == (-1)^{(p+1)/2} (4q - 2p q^2)",
        2,
        Lhs::Sum(s(2, 16, Weight::H).from_one()),
        |e| e.sign(e.p().div_ceil(2)) * e.int(2) * q_combo(e),
    ),
    single(
        "deg2_H2",
        "sum_{k=1}^{p-1} C(2k,k)^2 H2_k/16^k == -8E_{p-3} + 4E_{2p-4}",
        2,
        Lhs::Sum(s(2, 16, Weight::H2).from_one()),
        |e| e.int(4) * e.e2() - e.int(8) * e.e1(),
    ),
    single(
        "C321",
        "sum_{k=1}^{p-1} C(2k,k)^3 H_k/64^k == G^4 (2q - p q^2) (p=1 mod 4), -(p/12) G^4 (p=3 mod 4)",
        2,
        Lhs::Sum(s(3, 64, Weight::H).from_one()),
        |e| {
            if e.is_one_mod_4() {
                e.g4(2) * q_combo(e)
            } else {
                -(e.pv() * e.rat(1, 12) * e.g4(2))
            }
        },
    )
    .linked("S321_H"),
    single(
        "C322",
        "sum_{k=1}^{p-1} C(2k,k)^3 H2_k/64^k == -G^4 (4E_{p-3} - 2E_{2p-4}) (p=1 mod 4), -G^4/4 (p=3 mod 4)",
        2,
        Lhs::Sum(s(3, 64, Weight::H2).from_one()),
        |e| {
            if e.is_one_mod_4() {
                -(e.g4(2) * (e.int(4) * e.e1() - e.int(2) * e.e2()))
            } else {
                -(e.g4(2) * e.rat(1, 4))
            }
        },
    )
    .linked("S322_H2"),
    single(
        "E09",
        "sum_{k=1}^{p-1} C(2k,k)^3 O_k/64^k == 0 (p=1 mod 4), -(p/12) G^4 (p=3 mod 4)",
        2,
        Lhs::Sum(s(3, 64, Weight::O).from_one()),
        |e| {
            if e.is_one_mod_4() {
                e.zero()
            } else {
                -(e.pv() * e.rat(1, 12) * e.g4(2))
            }
        },
    )
    .linked("S321_O"),
    single(
        "E10",
        "sum_{k=1}^{p-1} C(2k,k)^3 O2_k/64^k == G^4 E_{p-3}/2 (p=1 mod 4), -G^4/16 (p=3 mod 4)",
        1,
        Lhs::Sum(s(3, 64, Weight::O2).from_one()),
        |e| {
            if e.is_one_mod_4() {
                e.g4(1) * e.e1() * e.rat(1, 2)
            } else {
                -(e.g4(1) * e.rat(1, 16))
            }
        },
    )
    .linked("S322_O2"),
    single(
        "E25",
        "sum_{k=1}^{p-1} C(2k,k)^3 H_{2k}/64^k == -(p/8) G^4 (p=3 mod 4)",
        2,
        Lhs::Sum(s(3, 64, Weight::H2k).from_one()),
        |e| -(e.pv() * e.rat(1, 8) * e.g4(2)),
    )
    .only(ResidueClass::ThreeMod4),
    single(
        "E07sum",
        "sum_{k=1}^{n} (-1)^k C(n,k)^3 H_{2k} == -(p/4) sum_{k=0}^{n} (-1)^k C(n,k)^3 H2_k (p=3 mod 4)",
        2,
        Lhs::Custom(|e| {
            let mut h2k = e.zero();
            alt_cube_sum(e, 1, |k| {
                if k >= 1 {
                    h2k = h2k + e.int(2 * k as i64 - 1).inv().unwrap() + e.int(2 * k as i64).inv().unwrap();
                }
                h2k
            })
        }),
        |e| {
            let mut h2 = e.zero();
            let s = alt_cube_sum(e, 0, |k| {
                if k >= 1 {
                    h2 = h2 + e.int(k as i64).pow(2).inv().unwrap();
                }
                h2
            });
            -(e.pv() * e.rat(1, 4) * s)
        },
    )
    .only(ResidueClass::ThreeMod4),
    single(
        "remark_q",
        "sum_{k=1}^{p-1} C(2k,k)^3 (H_{2k} - H_k)/64^k == q sum_{k=0}^{p-1} C(2k,k)^3/64^k",
        1,
        Lhs::Sum(s(3, 64, Weight::H2kMinusH).from_one()),
        |e| e.q() * sum(e, s(3, 64, Weight::One)),
    ),
    single(
        "remark_0_H",
        "sum_{k=1}^{p-1} C(2k,k)^3 H_k/64^k == 0 (p=3 mod 4)",
        1,
        Lhs::Sum(s(3, 64, Weight::H).from_one()),
        |e| e.zero(),
    )
    .only(ResidueClass::ThreeMod4),
    single(
        "remark_0_H2k",
        "sum_{k=1}^{p-1} C(2k,k)^3 H_{2k}/64^k == 0 (p=3 mod 4)",
        1,
        Lhs::Sum(s(3, 64, Weight::H2k).from_one()),
        |e| e.zero(),
    )
    .only(ResidueClass::ThreeMod4),
    single(
        "E23",
        "sum_{k=0}^{p-1} C(2k,k)^2/32^k == (-1)^{(p+1)/2} Gamma_p(1/2) G^2 (p=1 mod 4), 0 (p=3 mod 4)",
        2,
        Lhs::Sum(s(2, 32, Weight::One)),
        |e| {
            if e.is_one_mod_4() {
                e.sign(e.p().div_ceil(2)) * e.g_half_quarter2(2)
            } else {
                e.zero()
            }
        },
    )
    .linked("E22"),
    single(
        "clausen_trunc",
        "(sum_{k=0}^{p-1} C(2k,k)^2/32^k)^2 == sum_{k=0}^{p-1} C(2k,k)^3/64^k",
        2,
        Lhs::Custom(|e| sum(e, s(2, 32, Weight::One)).pow(2)),
        |e| sum(e, s(3, 64, Weight::One)),
    ),
    single(
        "E70",
        "sum_{k=0}^{p-1} C(2k,k)^2 H_k/32^k == Gamma_p(1/2) G^2 (2q - p q^2) (p=1 mod 4), Gamma_p(1/2) G^2/2 (p=3 mod 4)",
        2,
        Lhs::Sum(s(2, 32, Weight::H)),
        |e| {
            let g = e.g_half_quarter2(2);
            if e.is_one_mod_4() {
                g * q_combo(e)
            } else {
                g * e.rat(1, 2)
            }
        },
    ),
    single(
        "VH_B2",
        "sum_{k=0}^{p-1} (4k+1) (-1)^k C(2k,k)^3/64^k == (-1)^{(p-1)/2} p",
        3,
        Lhs::Sum(s(3, 64, Weight::FourKPlusOne).alternating()),
        |e| e.sign(e.n()) * e.pv(),
    )
    .linked("VH_B1"),
    single(
        "VH_A2",
        "sum_{k=0}^{p-1} (4k+1) (-1)^k C(2k,k)^5/1024^k == -p Gamma_p(3/4)^{-4} (p=1 mod 4), 0 (p=3 mod 4)",
        3,
        Lhs::Sum(s(5, 1024, Weight::FourKPlusOne).alternating()),
        |e| {
            if e.is_one_mod_4() {
                -(e.pv() * e.gamma(GammaArg::ThreeQuarters, 3).pow(4).inv().unwrap())
            } else {
                e.zero()
            }
        },
    )
    .linked("VH_A1"),
    single(
        "E63",
        "sum_{k=0}^{p-1} (-1)^k C(2k,k)^3 (2 - 3(4k+1) H_k)/64^k == (-1)^{(p-1)/2} (2 + 6p q)",
        2,
        Lhs::Sum(s(3, 64, Weight::Guillera(3)).alternating()),
        |e| e.sign(e.n()) * (e.int(2) + e.int(6) * e.pv() * e.q()),
    )
    .linked("E61"),
    single(
        "E64",
        "sum_{k=0}^{p-1} C(2k,k)^4 (2 - 4(4k+1) H_k)/256^k == 2 + 12p q",
        2,
        Lhs::Sum(s(4, 256, Weight::Guillera(4))),
        |e| e.int(2) + e.int(12) * e.pv() * e.q(),
    ),
    single(
        "E65",
        "sum_{k=0}^{p-1} (-1)^k C(2k,k)^5 (2 - 5(4k+1) H_k)/1024^k == -(2 + 10p q) G^4 (p=1 mod 4), 0 (p=3 mod 4)",
        2,
        Lhs::Sum(s(5, 1024, Weight::Guillera(5)).alternating()),
        |e| {
            if e.is_one_mod_4() {
                -((e.int(2) + e.int(10) * e.pv() * e.q()) * e.g4(2))
            } else {
                e.zero()
            }
        },
    )
    .linked("E62"),
    family(
        "fam_E01",
        "C(n,k) C(n+k,k) (-1)^k == C(2k,k)^2/16^k, 0 <= k <= n = (p-1)/2",
        2,
        |e, k| {
            let n = e.n();
            let lhs = e.sign(k) * e.binom(n, k) * e.binom(n + k, k);
            let rhs = e.binom(2 * k, k).pow(2) * e.int(16).pow(k as u32).inv().unwrap();
            (lhs, rhs)
        },
    ),
    family(
        "fam_E02",
        "C(2k,k)/4^k == (-1)^k C(n,k) (1 - (p/2)(H_n - H_{n-k})), 0 <= k <= n",
        2,
        |e, k| {
            let n = e.n();
            let lhs = e.binom(2 * k, k) * e.int(4).pow(k as u32).inv().unwrap();
            let dh = e.harmonic(n, 1) - e.harmonic(n - k, 1);
            let rhs = e.sign(k) * e.binom(n, k) * (e.int(1) - e.pv() * e.rat(1, 2) * dh);
            (lhs, rhs)
        },
    ),
    family(
        "fam_E06",
        "H_{2k} == (H_k + H_{n-k} - H_n)/2, 0 <= k <= n",
        1,
        |e, k| {
            let n = e.n();
            let rhs = (e.harmonic(k, 1) + e.harmonic(n - k, 1) - e.harmonic(n, 1)) * e.rat(1, 2);
            (e.harmonic(2 * k, 1), rhs)
        },
    ),
    family(
        "fam_E11",
        "O2_k == -H2_{n-k}/4, 0 <= k <= n",
        1,
        |e, k| {
            let o2 = (1..=k).fold(e.zero(), |acc, j| acc + e.int(2 * j as i64 - 1).pow(2).inv().unwrap());
            (o2, -(e.harmonic(e.n() - k, 2) * e.rat(1, 4)))
        },
    ),
];

fn alternating_inverse_squares(e: &PrimeEnv) -> PadicValue {
    (1..=e.n()).fold(e.zero(), |acc, k| acc + e.sign(k) * e.int(k as i64).pow(2).inv().unwrap())
}

/// All registered congruences, in canonical order.
pub fn registry() -> &'static [CongruenceCase] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static CongruenceCase> {
    REGISTRY.iter().find(|c| c.id == id)
}
