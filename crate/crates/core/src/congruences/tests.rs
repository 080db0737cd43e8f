use super::*;
use crate::exact::BigRational;
use crate::modular::PadicValue;

fn residues(id: &str, p: u64) -> (u64, u64, bool) {
    let r = verify(case(id).unwrap(), p).unwrap();
    (r.lhs_residue(), r.rhs_residue(), r.pass)
}

#[test]
fn hand_checked_anchors() {
    assert_eq!(residues("C321", 5), (16, 16, true));
    assert_eq!(residues("E09", 5), (0, 0, true));
    assert_eq!(residues("E23", 5), (12, 12, true));
    assert_eq!(residues("E10", 5), (2, 2, true));
    let (l, r, pass) = residues("VH_A2", 7);
    assert!(pass && l == 0 && r == 0);
}

#[test]
fn class_restrictions() {
    let e25 = case("E25").unwrap();
    assert_eq!(verify(e25, 5), Err(CongruenceError::WrongClass { case: "E25".into(), p: 5 }));
    assert!(verify(e25, 7).unwrap().pass);
    assert!(matches!(case("nope"), Err(CongruenceError::UnknownCase(_))));
    assert!(verify(case("C321").unwrap(), 9).is_err());
}

#[test]
fn every_case_small_primes() {
    let all: Vec<_> = registry().iter().collect();
    let out = verify_range(&all, 5, 60, None).unwrap();
    for e in &out {
        if let RangeEntry::Checked(r) = e {
            assert!(r.pass, "{} {}", r.case, r.param());
        }
    }
    let skipped = out.iter().filter(|e| matches!(e, RangeEntry::Skipped { .. })).count();
    // 4 cases restricted to p ≡ 3 mod 4; primes 5..60 with p ≡ 1: 5,13,17,29,37,41,53
    assert_eq!(skipped, 4 * 7);
}

#[test]
fn ids_unique() {
    let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), registry().len());
}

#[test]
fn typeset_e03_constant_fails() {
    // The literal constant (8E_{p-3} - 4E_{2p-4}) is twice the true value.
    for p in crate::sequences::primes_in(5, 199) {
        let e = PrimeEnv::new(p).unwrap();
        let lhs = eval_truncated_sum(case("aux_E03").unwrap(), &e).unwrap();
        let typeset = e.sign(e.n()) * (e.int(8) * e.e1() - e.int(4) * e.e2());
        assert!(!lhs.congruent(&typeset, 2).unwrap(), "p={p}");
    }
}

#[test]
fn recipes_agree_with_exact_terms() {
    for c in registry() {
        let Some(r) = c.recipe() else { continue };
        for p in [5u64, 7, 11] {
            let exact: BigRational = (0..p).map(|k| r.exact_term(k)).sum();
            let e = PrimeEnv::new(p).unwrap();
            let got = eval_truncated_sum(c, &e);
            if let Ok(got) = got {
                assert!(got.congruent(&PadicValue::from_rational(&exact, p, c.power), c.power).unwrap(), "{}", c.id);
            }
        }
    }
}

#[test]
fn families_report_last_k() {
    let r = verify(case("fam_E01").unwrap(), 13).unwrap();
    assert!(r.pass);
    assert_eq!(r.k, Some(6));
    assert_eq!(r.param(), "p=13,k=6");
}

#[test]
fn range_is_deterministic() {
    let cases: Vec<_> = ["E63", "C322", "fam_E02", "E25"].iter().map(|id| case(id).unwrap()).collect();
    let strip = |v: Vec<RangeEntry>| -> Vec<RangeEntry> {
        v.into_iter()
            .map(|e| match e {
                RangeEntry::Checked(mut r) => {
                    r.micros = 0;
                    RangeEntry::Checked(r)
                }
                s => s,
            })
            .collect()
    };
    let a = strip(verify_range(&cases, 5, 80, Some(1)).unwrap());
    let b = strip(verify_range(&cases, 5, 80, Some(4)).unwrap());
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| (w[0].case(), w[0].p()) < (w[1].case(), w[1].p())));
}
