//! Topologies on a finite ground set and topological set-labelings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::labeling::{
    verify_iasgl, verify_iasl, Labeling, Location, VerificationReport, ViolationKind,
};
use crate::sets::{GroundSet, IntSet};
use crate::Error;

/// Largest `|X|` for [`enumerate_topologies`]: `2^(2^|X| - 2)` candidate families.
pub const TOPOLOGY_CAP: usize = 4;

/// Why a family of sets fails to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingGround(IntSet),
    UnionNotOpen(IntSet, IntSet),
    IntersectionNotOpen(IntSet, IntSet),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::MissingEmpty => f.write_str("∅ is not open"),
            TopologyViolation::MissingGround(x) => write!(f, "X = {x} is not open"),
            TopologyViolation::UnionNotOpen(a, b) => write!(f, "{a} ∪ {b} is not open"),
            TopologyViolation::IntersectionNotOpen(a, b) => write!(f, "{a} ∩ {b} is not open"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyCheck {
    Holds,
    Fails(TopologyViolation),
}

impl TopologyCheck {
    pub fn holds(&self) -> bool {
        matches!(self, TopologyCheck::Holds)
    }
}

/// Checks the topology axioms for `family` on `x`. Pairwise closure suffices
/// for finite families. Duplicated members are ignored.
pub fn is_topology(family: &[IntSet], x: GroundSet) -> Result<TopologyCheck, Error> {
    let base = x.base();
    if let Some(&bad) = family.iter().find(|s| !s.is_subset(base)) {
        return Err(Error::NotASubset {
            set: bad,
            ground: base,
        });
    }
    let opens: BTreeSet<IntSet> = family.iter().copied().collect();
    Ok(check_closed(&opens, base))
}

fn check_closed(opens: &BTreeSet<IntSet>, base: IntSet) -> TopologyCheck {
    if !opens.contains(&IntSet::EMPTY) {
        return TopologyCheck::Fails(TopologyViolation::MissingEmpty);
    }
    if !opens.contains(&base) {
        return TopologyCheck::Fails(TopologyViolation::MissingGround(base));
    }
    for (i, &a) in opens.iter().enumerate() {
        for &b in opens.iter().skip(i + 1) {
            if !opens.contains(&a.union(b)) {
                return TopologyCheck::Fails(TopologyViolation::UnionNotOpen(a, b));
            }
            if !opens.contains(&a.intersection(b)) {
                return TopologyCheck::Fails(TopologyViolation::IntersectionNotOpen(a, b));
            }
        }
    }
    TopologyCheck::Holds
}

/// A topology on a ground set; open sets are kept in canonical order, so `∅`
/// comes first.
#[derive(Clone, PartialEq, Eq)]
pub struct Topology {
    ground: GroundSet,
    opens: Vec<IntSet>,
}

impl Topology {
    pub fn new(ground: GroundSet, opens: impl IntoIterator<Item = IntSet>) -> Result<Self, Error> {
        let opens: Vec<IntSet> = opens
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        match is_topology(&opens, ground)? {
            TopologyCheck::Holds => Ok(Topology { ground, opens }),
            TopologyCheck::Fails(v) => Err(Error::NotATopology(v)),
        }
    }

    pub fn discrete(ground: GroundSet) -> Self {
        let mut opens = alloc::vec![IntSet::EMPTY];
        opens.extend(crate::sets::all_nonempty_subsets(ground));
        Topology { ground, opens }
    }

    pub fn indiscrete(ground: GroundSet) -> Self {
        Topology {
            ground,
            opens: alloc::vec![IntSet::EMPTY, ground.base()],
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn opens(&self) -> &[IntSet] {
        &self.opens
    }

    /// Open sets other than `∅`.
    pub fn nonempty_opens(&self) -> &[IntSet] {
        &self.opens[1..]
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: IntSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.ground.size()
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.opens.iter()).finish()
    }
}

/// Every topology on `x`, found by filtering all families that contain `∅`
/// and `X`. With `require_zero_singleton`, only those with `{0}` open.
///
/// Order: families are bitmasks over the proper non-empty subsets of `X`
/// (listed canonically), enumerated in increasing mask order.
pub fn enumerate_topologies(
    x: GroundSet,
    require_zero_singleton: bool,
) -> Result<Vec<Topology>, Error> {
    x.require_size_at_most(TOPOLOGY_CAP, "topology enumeration ground set size")?;
    let elements = x.base().to_vec();
    let n = elements.len();
    let full = (1u32 << n) - 1;
    let to_set = |local: u32| {
        IntSet::from_bits(
            elements
                .iter()
                .enumerate()
                .filter(|&(j, _)| local >> j & 1 == 1)
                .fold(0u128, |acc, (_, &e)| acc | 1u128 << e),
        )
    };
    let mut free: Vec<u32> = (1..full).collect();
    free.sort_by_key(|&l| to_set(l));
    // local mask of {0}; 0 is the smallest element of X
    let zero_local = 1u32;

    let mut out = Vec::new();
    for family in 0u64..(1u64 << free.len()) {
        let mut locals: Vec<u32> = alloc::vec![0, full];
        locals.extend(
            (0..free.len())
                .filter(|&i| family >> i & 1 == 1)
                .map(|i| free[i]),
        );
        let member = locals.iter().fold(0u32, |m, &l| m | 1 << l);
        if require_zero_singleton && member >> zero_local & 1 == 0 {
            continue;
        }
        let closed = locals.iter().enumerate().all(|(i, &a)| {
            locals[i + 1..]
                .iter()
                .all(|&b| member >> (a | b) & 1 == 1 && member >> (a & b) & 1 == 1)
        });
        if closed {
            let mut opens: Vec<IntSet> = locals.into_iter().map(to_set).collect();
            opens.sort();
            opens.dedup();
            out.push(Topology { ground: x, opens });
        }
    }
    Ok(out)
}

/// Star realisation: `K_{1,r-2}` for a topology with `r` open sets, the
/// center labeled `{0}` and each leaf labeled by one of the remaining
/// non-empty open sets. Vertex `"0"` is the center.
pub fn realize_topology(t: &Topology) -> Result<(Graph, Labeling), Error> {
    if !t.contains(IntSet::zero()) {
        return Err(Error::NoZeroSingleton);
    }
    if t.len() < 3 {
        return Err(Error::DegenerateTopology);
    }
    let leaves: Vec<IntSet> = t
        .nonempty_opens()
        .iter()
        .copied()
        .filter(|s| !s.is_zero_singleton())
        .collect();
    let g = Graph::star(leaves.len());
    let mut sets = alloc::vec![IntSet::zero()];
    sets.extend(leaves);
    let f = Labeling::from_vertex_sets(&g, t.ground(), &sets);
    Ok((g, f))
}

fn push_topology_violation(report: &mut VerificationReport, f: &Labeling) {
    let x = f.ground();
    let mut family: Vec<IntSet> = f
        .image()
        .into_iter()
        .filter(|s| !s.is_empty() && s.is_subset(x.base()))
        .collect();
    family.push(IntSet::EMPTY);
    if let Ok(TopologyCheck::Fails(v)) = is_topology(&family, x) {
        report.violations.push(crate::labeling::Violation {
            kind: ViolationKind::NotATopology,
            location: Location::Graph,
            detail: format!("f(V) ∪ {{∅}} is not a topology on X: {v}"),
        });
    }
}

/// Top-IASL: an IASL whose vertex-label family together with `∅` is a
/// topology on `X`.
pub fn verify_top_iasl(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = verify_iasl(g, f);
    push_topology_violation(&mut report, f);
    report
}

/// Top-IASGL: both a Top-IASL and an IASGL.
pub fn verify_top_iasgl(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = verify_iasgl(g, f);
    push_topology_violation(&mut report, f);
    report
}

/// Label family of `f` plus `∅` as a set, for callers comparing against a
/// specific topology.
pub fn label_family(f: &Labeling) -> BTreeSet<IntSet> {
    let mut family = f.image();
    family.insert(IntSet::EMPTY);
    family
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.opens.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
