//! Topology counts against preorder counting and a direct family filter.

use std::collections::BTreeSet;

use iasl_core::{enumerate_topologies, realize_topology, verify_top_iasl, GroundSet, IntSet};

/// Topologies on a k-point set correspond to preorders on it.
fn preorders(k: usize) -> usize {
    let cells = k * k;
    (0u32..1 << cells)
        .filter(|&r| {
            let rel = |i: usize, j: usize| r >> (i * k + j) & 1 == 1;
            (0..k).all(|i| rel(i, i))
                && (0..k)
                    .all(|i| (0..k).all(|j| (0..k).all(|l| !(rel(i, j) && rel(j, l)) || rel(i, l))))
        })
        .count()
}

/// Families of subsets of `x` (as bitmasks over positions) closed under union
/// and intersection and containing the empty and full sets.
fn family_filter(k: usize, require_zero: bool) -> usize {
    let subsets: Vec<u32> = (0u32..1 << k).collect();
    let full = (1u32 << k) - 1;
    let inner: Vec<u32> = subsets
        .iter()
        .copied()
        .filter(|&s| s != 0 && s != full)
        .collect();
    let mut count = 0;
    for pick in 0u32..1 << inner.len() {
        let mut fam: BTreeSet<u32> = [0, full].into();
        fam.extend(
            (0..inner.len())
                .filter(|i| pick >> i & 1 == 1)
                .map(|i| inner[i]),
        );
        let closed = fam.iter().all(|a| {
            fam.iter()
                .all(|b| fam.contains(&(a | b)) && fam.contains(&(a & b)))
        });
        // position 0 holds the element 0
        if closed && (!require_zero || fam.contains(&1)) {
            count += 1;
        }
    }
    count
}

fn ground(k: u32) -> GroundSet {
    GroundSet::new(IntSet::range(k).unwrap()).unwrap()
}

#[test]
fn counts_match_preorders_and_filter() {
    for (k, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let got = enumerate_topologies(ground(k as u32), false).unwrap().len();
        assert_eq!(got, expected, "|X| = {k}");
        assert_eq!(preorders(k), expected);
        assert_eq!(family_filter(k, false), expected);
        let with_zero = enumerate_topologies(ground(k as u32), true).unwrap().len();
        assert_eq!(with_zero, family_filter(k, true), "|X| = {k}");
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let all = enumerate_topologies(ground(3), false).unwrap();
    let families: BTreeSet<Vec<IntSet>> = all.iter().map(|t| t.opens().to_vec()).collect();
    assert_eq!(families.len(), all.len());
    for t in &all {
        assert!(t.opens().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(t.opens()[0], IntSet::EMPTY);
    }
}

#[test]
fn every_admissible_topology_is_realised() {
    for k in 1..=4 {
        for t in enumerate_topologies(ground(k), true).unwrap() {
            match realize_topology(&t) {
                Ok((g, f)) => {
                    assert!(t.len() >= 3);
                    assert!(verify_top_iasl(&g, &f).verdict(), "{t}");
                    assert_eq!(g.vertex_count(), t.len() - 1);
                }
                Err(_) => assert!(t.len() < 3, "{t}"),
            }
        }
    }
}
