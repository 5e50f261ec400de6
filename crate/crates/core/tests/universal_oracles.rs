mod common;

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use uniposet::universal::ExplicitPart;
use uniposet::{
    enumerate_posets, min_ell, random_poset, random_poset_with_antichain, size_bound,
    verify_universality, Branch, SubsetMask, UniversalFamily,
};

use common::scan_membership;

fn in_family_oracle(set: &BTreeSet<usize>, n: usize) -> bool {
    let a = n.div_ceil(3);
    if a < 2 {
        return set.iter().all(|&e| (1..=n).contains(&e));
    }
    let m = n - a + min_ell(a);
    scan_membership(set, n, a) || set.iter().all(|&e| (1..=m).contains(&e))
}

#[test]
fn membership_and_cardinality_match_brute_force() {
    for n in 1..=14 {
        let family = UniversalFamily::new(n).unwrap();
        let mut count = 0u64;
        for bits in 0u32..1 << n {
            let set: BTreeSet<usize> = (1..=n).filter(|e| bits >> (e - 1) & 1 == 1).collect();
            let mask = SubsetMask::from_elements(n, set.iter().copied()).unwrap();
            let expected = in_family_oracle(&set, n);
            assert_eq!(family.contains(&mask), expected, "n={n} {mask}");
            count += u64::from(expected);
        }
        assert_eq!(family.cardinality().unwrap(), BigUint::from(count), "n={n}");
        assert!(family.cardinality().unwrap() <= size_bound(n));
    }
}

#[test]
fn predicate_backed_family_agrees_with_materialized() {
    for n in 4..=12usize {
        let a = n.div_ceil(3);
        let big = UniversalFamily::build(n, a, usize::MAX).unwrap();
        let small = UniversalFamily::build(n, a, 1).unwrap();
        assert!(matches!(big.explicit_part(), ExplicitPart::Materialized(_)));
        assert_eq!(small.explicit_part(), &ExplicitPart::Predicate);
        for seed in 0..50u64 {
            let p = random_poset(n, 0.25, seed).unwrap();
            let out = big.embed(&p).unwrap();
            assert_eq!(out, small.embed(&p).unwrap());
            assert!(small.certify(&p, &out.embedding).is_ok());
        }
    }
}

#[test]
fn exhaustive_universality_small() {
    let totals = [1, 3, 19, 219, 4231];
    for n in 1..=5 {
        let report = verify_universality(n).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.total, totals[n - 1]);
    }
}

#[test]
fn branches_are_all_reachable() {
    let mut seen = HashSet::new();
    for n in 1..=5 {
        let family = UniversalFamily::new(n).unwrap();
        for p in enumerate_posets(n).unwrap() {
            seen.insert(family.embed(&p).unwrap().branch);
        }
    }
    assert_eq!(seen.len(), 3);
}

#[test]
fn random_and_wide_posets_certify() {
    for n in [8, 13, 17, 24, 30] {
        let family = UniversalFamily::new(n).unwrap();
        let a = family.a();
        for seed in 0..40u64 {
            let p = random_poset(n, 0.2, seed).unwrap();
            let out = family.embed(&p).unwrap();
            assert!(family.certify(&p, &out.embedding).is_ok());
            let (wide, _) = random_poset_with_antichain(n, a + 1, 0.3, seed).unwrap();
            let out = family.embed(&wide).unwrap();
            assert_eq!(out.branch, Branch::AntichainLabels);
            assert!(family.certify(&wide, &out.embedding).is_ok());
        }
    }
}

#[test]
fn embeddings_are_deterministic() {
    let family = UniversalFamily::new(16).unwrap();
    let again = UniversalFamily::new(16).unwrap();
    assert_eq!(family, again);
    for seed in 0..20u64 {
        let p = random_poset(16, 0.15, seed).unwrap();
        assert_eq!(family.embed(&p).unwrap(), again.embed(&p).unwrap());
    }
}
