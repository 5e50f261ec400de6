mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use uniposet::{
    check_embedding, enumerate_posets, folklore_embed, max_antichain_bruteforce, random_poset,
    Embedding, Poset, SubsetMask,
};

use common::{
    antichain_number_by_subsets, brute_force_relations, image_sets, naive_is_embedding, relation_of,
};

#[test]
fn enumeration_matches_relation_filter() {
    for n in 1..=4 {
        let brute: HashSet<Vec<Vec<bool>>> = brute_force_relations(n).into_iter().collect();
        let listed: Vec<Vec<Vec<bool>>> = enumerate_posets(n)
            .unwrap()
            .map(|p| relation_of(&p))
            .collect();
        let unique: HashSet<_> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicates at n={n}");
        assert_eq!(unique, brute, "n={n}");
    }
}

#[test]
fn enumeration_count_five_matches_relation_filter() {
    // 2^20 candidate relations
    let brute = brute_force_relations(5).len();
    assert_eq!(brute, 4231);
    assert_eq!(enumerate_posets(5).unwrap().count(), brute);
}

#[test]
fn enumerated_posets_satisfy_axioms() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            p.check_axioms().unwrap();
        }
    }
}

#[test]
fn folklore_embeds_every_small_poset() {
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            let f = folklore_embed(&p);
            assert_eq!(check_embedding(&p, &f), Ok(()), "{p:?}");
        }
    }
}

#[test]
fn folklore_embeds_random_posets() {
    for seed in 0..10_000u64 {
        let n = 1 + (seed % 40) as usize;
        let prob = (seed % 7) as f64 / 6.0;
        let p = random_poset(n, prob, seed).unwrap();
        p.check_axioms().unwrap();
        assert_eq!(check_embedding(&p, &folklore_embed(&p)), Ok(()));
    }
}

#[test]
fn bruteforce_antichain_matches_subset_scan() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let a = max_antichain_bruteforce(&p).unwrap();
            assert!(p.is_antichain(&a));
            assert_eq!(a.len(), antichain_number_by_subsets(&p));
        }
    }
}

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, prob, seed)| random_poset(n, prob, seed).unwrap())
}

/// A folklore embedding with one random image toggled, so some instances
/// fail and some survive.
fn arb_perturbed() -> impl Strategy<Value = (Poset, Embedding)> {
    (
        arb_poset(10),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
        any::<bool>(),
    )
        .prop_map(|(p, which, elem, perturb)| {
            let f = folklore_embed(&p);
            let n = p.len();
            let mut images: Vec<SubsetMask> = f.images().to_vec();
            if perturb {
                let j = which.index(n);
                let e = elem.index(n) + 1;
                if images[j].contains(e) {
                    images[j].remove(e);
                } else {
                    images[j].insert(e);
                }
            }
            (p, Embedding::new(n, images).unwrap())
        })
}

proptest! {
    #[test]
    fn generated_posets_satisfy_axioms(p in arb_poset(40)) {
        prop_assert!(p.check_axioms().is_ok());
    }

    #[test]
    fn checker_agrees_with_naive_verifier((p, f) in arb_perturbed()) {
        let naive = naive_is_embedding(&relation_of(&p), &image_sets(&f));
        prop_assert_eq!(check_embedding(&p, &f).is_ok(), naive);
    }

    #[test]
    fn poset_text_round_trip(p in arb_poset(25)) {
        let text = p.to_string();
        let back: Poset = text.parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn embedding_text_round_trip(p in arb_poset(25)) {
        let f = folklore_embed(&p);
        let text = f.to_string();
        let back: Embedding = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn from_relations_closes_generators(n in 1usize..12, raw in prop::collection::vec((0usize..12, 0usize..12), 0..30)) {
        // orient every generator forward so no cycles arise
        let pairs: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(u, v)| (u % n, v % n))
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let p = Poset::from_relations(n, &pairs).unwrap();
        prop_assert!(p.check_axioms().is_ok());
        for &(u, v) in &pairs {
            prop_assert!(p.less(u, v));
        }
        // every strict pair is witnessed by a generator path
        for (u, v) in p.strict_pairs() {
            let mut reach = vec![false; n];
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                for &(a, b) in &pairs {
                    if a == x && !reach[b] {
                        reach[b] = true;
                        stack.push(b);
                    }
                }
            }
            prop_assert!(reach[v]);
        }
    }
}

#[test]
fn random_poset_is_seed_stable() {
    let a = random_poset(8, 0.3, 42).unwrap();
    assert_eq!(a, random_poset(8, 0.3, 42).unwrap());
    assert_ne!(a, random_poset(8, 0.3, 43).unwrap());
}
