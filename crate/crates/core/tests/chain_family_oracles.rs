mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use uniposet::{
    chain_family, check_embedding, embed_bounded_antichain, enumerate_posets, family_for_partition,
    hardy_ramanujan, max_antichain, member_of_chain_family, partition_count, partitions,
    CellLayout, PartitionSeq, SubsetMask, DEFAULT_FAMILY_CAP,
};

use common::{naive_partitions, partition_count_table, scan_membership};

fn all_masks(n: usize) -> impl Iterator<Item = SubsetMask> {
    (0u32..1 << n).map(move |bits| {
        SubsetMask::from_elements(n, (1..=n).filter(|e| bits >> (e - 1) & 1 == 1)).unwrap()
    })
}

#[test]
fn membership_matches_literal_scan_and_materialized_family() {
    for n in 1..=12 {
        for a in 1..=n {
            let family = chain_family(n, a, DEFAULT_FAMILY_CAP).unwrap();
            let mut expected = 0;
            for mask in all_masks(n) {
                let set: BTreeSet<usize> = mask.elements().collect();
                let scan = scan_membership(&set, n, a);
                expected += usize::from(scan);
                assert_eq!(
                    member_of_chain_family(&mask, n, a).unwrap(),
                    scan,
                    "n={n} a={a} {mask}"
                );
                assert_eq!(family.contains(&mask), scan, "n={n} a={a} {mask}");
            }
            assert_eq!(family.len(), expected, "n={n} a={a}");
        }
    }
}

#[test]
fn partition_families_have_product_size_and_prefix_cells() {
    for n in 1..=12 {
        for parts in naive_partitions(n, n) {
            let c = PartitionSeq::new(parts.clone()).unwrap();
            let fam = family_for_partition(n, &c).unwrap();
            let product: usize = parts.iter().map(|&p| p + 1).product();
            assert_eq!(fam.len(), product, "{c}");
            let mut start = 0;
            let cells: Vec<(usize, usize)> = parts
                .iter()
                .map(|&p| {
                    start += p;
                    (start - p + 1, start)
                })
                .collect();
            let layout = CellLayout::new(&c);
            for set in fam.iter() {
                assert!(layout.is_prefix_union(&set));
                for &(lo, hi) in &cells {
                    let hits: Vec<bool> = (lo..=hi).map(|e| set.contains(e)).collect();
                    let ones = hits.iter().take_while(|&&b| b).count();
                    assert!(hits[ones..].iter().all(|&b| !b), "{c} {set}");
                }
            }
        }
    }
}

#[test]
fn partition_stream_matches_table_counts() {
    for n in 0..=40 {
        let streamed = partitions(n, n).count() as u128;
        assert_eq!(streamed, partition_count_table(n), "n={n}");
        assert_eq!(partition_count(n), BigUint::from(streamed), "n={n}");
    }
}

#[test]
fn partition_stream_matches_naive_listing() {
    for n in 0..=14 {
        for k in 0..=n {
            let ours: Vec<Vec<usize>> = partitions(n, k).map(|p| p.parts().to_vec()).collect();
            let naive = if n == 0 {
                vec![vec![]]
            } else {
                naive_partitions(n, k)
            };
            assert_eq!(ours, naive, "n={n} k={k}");
        }
    }
}

#[test]
fn fifty_by_both_methods() {
    assert_eq!(partitions(50, 50).count(), 204_226);
    assert_eq!(partition_count_table(50), 204_226);
    assert_eq!(partition_count(50), BigUint::from(204_226u32));
}

#[test]
fn hardy_ramanujan_ratio_tends_to_one() {
    let ratio = |n: usize| {
        let p: f64 = partition_count(n).to_string().parse().unwrap();
        p / hardy_ramanujan(n)
    };
    let r100 = ratio(100);
    assert!((0.90..=1.00).contains(&r100), "{r100}");
    assert!((1.0 - ratio(1000)).abs() < (1.0 - r100).abs());
}

#[test]
fn bounded_width_embedding_for_small_posets() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let w = max_antichain(&p).len();
            for a in w..=n {
                let f = embed_bounded_antichain(&p, a).unwrap();
                assert_eq!(check_embedding(&p, &f), Ok(()));
                assert_eq!(f.ground_size(), n);
                for img in f.images() {
                    let set: BTreeSet<usize> = img.elements().collect();
                    assert!(scan_membership(&set, n, a), "{p:?} a={a} {img}");
                }
            }
            if w > 1 {
                assert!(embed_bounded_antichain(&p, w - 1).is_err());
            }
        }
    }
}
