//! Sumset/summand classification of `P(X) - {∅}`.
//!
//! A decomposition `C = A + B` is non-trivial when neither summand is `{0}`.

use alloc::vec::Vec;

use crate::sets::{GroundSet, IntSet, PowerSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFlags {
    pub set: IntSet,
    /// `set = A + B` for some subsets `A, B ≠ {0}` of `X`.
    pub is_nontrivial_sumset: bool,
    /// `set` is a summand in some non-trivial decomposition of a subset of `X`.
    pub is_nontrivial_summand: bool,
    /// First non-trivial decomposition in canonical order, `A <= B`.
    pub witness: Option<(IntSet, IntSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetClassification {
    pub ground: GroundSet,
    /// One entry per non-empty subset, in canonical order.
    pub per_subset: Vec<SubsetFlags>,
    /// Number of non-trivial sumsets.
    pub rho: usize,
    /// Subsets other than `{0}` that are neither non-trivial sumsets nor
    /// non-trivial summands.
    pub rho_prime: usize,
    /// The degree count of the existence theorem's condition (b). Its wording
    /// coincides with `rho_prime`, and so does its value.
    pub rho_double_prime: usize,
    pub x_is_sumset: bool,
}

impl SumsetClassification {
    pub fn flags(&self, set: IntSet) -> Option<&SubsetFlags> {
        self.per_subset.iter().find(|f| f.set == set)
    }

    pub fn nontrivial_sumsets(&self) -> impl Iterator<Item = IntSet> + '_ {
        self.per_subset
            .iter()
            .filter(|f| f.is_nontrivial_sumset)
            .map(|f| f.set)
    }

    pub fn nontrivial_summands(&self) -> impl Iterator<Item = IntSet> + '_ {
        self.per_subset
            .iter()
            .filter(|f| f.is_nontrivial_summand)
            .map(|f| f.set)
    }
}

/// Classifies every non-empty subset of `x` by exhausting all pairs of
/// subsets whose sumset stays inside `x`.
pub fn classify(x: GroundSet) -> SumsetClassification {
    classify_power_set(&PowerSet::new(x))
}

pub(crate) fn classify_power_set(power: &PowerSet) -> SumsetClassification {
    let m = power.len();
    let mut witness: Vec<Option<(usize, usize)>> = alloc::vec![None; m];
    let mut summand = alloc::vec![false; m];
    // index 0 is {0}; starting both loops at 1 skips every trivial pair
    for i in 1..m {
        for j in i..m {
            if let Some(c) = power.sum_index(i, j) {
                witness[c].get_or_insert((i, j));
                summand[i] = true;
                summand[j] = true;
            }
        }
    }

    let per_subset: Vec<SubsetFlags> = (0..m)
        .map(|k| SubsetFlags {
            set: power.subset(k),
            is_nontrivial_sumset: witness[k].is_some(),
            is_nontrivial_summand: summand[k],
            witness: witness[k].map(|(a, b)| (power.subset(a), power.subset(b))),
        })
        .collect();

    let rho = per_subset.iter().filter(|f| f.is_nontrivial_sumset).count();
    let not_zero = |f: &&SubsetFlags| !f.set.is_zero_singleton();
    let rho_prime = per_subset
        .iter()
        .filter(not_zero)
        .filter(|f| !f.is_nontrivial_sumset && !f.is_nontrivial_summand)
        .count();
    let rho_double_prime = per_subset
        .iter()
        .filter(not_zero)
        .filter(|f| !(f.is_nontrivial_summand || f.is_nontrivial_sumset))
        .count();
    let x_is_sumset = per_subset[power.full_index()].is_nontrivial_sumset;

    SumsetClassification {
        ground: power.ground(),
        per_subset,
        rho,
        rho_prime,
        rho_double_prime,
        x_is_sumset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(s: &str) -> IntSet {
        s.parse().unwrap()
    }

    #[test]
    fn three_element_ground_set() {
        let c = classify("{0,1,2}".parse().unwrap());
        assert_eq!(
            c.nontrivial_sumsets().collect::<Vec<_>>(),
            vec![set("{2}"), set("{1,2}"), set("{0,1,2}")]
        );
        assert_eq!(c.rho, 3);
        assert_eq!(
            c.nontrivial_summands().collect::<Vec<_>>(),
            vec![set("{1}"), set("{0,1}")]
        );
        assert_eq!(c.rho_prime, 1);
        assert_eq!(c.rho_double_prime, 1);
        assert!(c.x_is_sumset);
        assert_eq!(
            c.flags(set("{1,2}")).unwrap().witness,
            Some((set("{1}"), set("{0,1}")))
        );
    }

    #[test]
    fn zero_only_ground_set() {
        let c = classify("{0}".parse().unwrap());
        assert_eq!((c.rho, c.rho_prime, c.x_is_sumset), (0, 0, false));
        assert_eq!(c.per_subset.len(), 1);
    }

    #[test]
    fn two_element_ground_set() {
        let c = classify("{0,1}".parse().unwrap());
        assert_eq!(c.rho, 0);
        assert_eq!(c.rho_prime, 2);
        assert!(!c.x_is_sumset);
    }

    #[test]
    fn zero_is_never_flagged() {
        for x in ["{0}", "{0,1}", "{0,1,2,3}", "{0,3,4,7,9}"] {
            let c = classify(x.parse().unwrap());
            let zero = c.flags(IntSet::zero()).unwrap();
            assert!(!zero.is_nontrivial_sumset && !zero.is_nontrivial_summand);
            assert_eq!(
                c.rho
                    + c.per_subset
                        .iter()
                        .filter(|f| !f.is_nontrivial_sumset)
                        .count(),
                (1 << c.ground.size()) - 1
            );
        }
    }
}
