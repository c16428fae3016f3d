//! Vertex labelings by subsets of a ground set, and the verifiers for each
//! labeling class.
//!
//! Verifiers never fail; every problem becomes a [`Violation`] in the report.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::sets::{sumset, GroundSet, IntSet, PowerSet};
use crate::Error;

/// An assignment of sets to vertex names over a ground set. The assignment is
/// raw: injectivity and containment in `X` are what the verifiers check.
#[derive(Clone, PartialEq, Eq)]
pub struct Labeling {
    ground: GroundSet,
    entries: Vec<(String, IntSet)>,
    index: BTreeMap<String, usize>,
}

impl Labeling {
    pub fn new(ground: GroundSet) -> Self {
        Labeling {
            ground,
            entries: Vec::new(),
            index: BTreeMap::new(),
        }
    }

    pub fn assign(&mut self, vertex: &str, set: IntSet) -> Result<(), Error> {
        if self.index.contains_key(vertex) {
            return Err(Error::DuplicateVertex(vertex.to_string()));
        }
        self.index.insert(vertex.to_string(), self.entries.len());
        self.entries.push((vertex.to_string(), set));
        Ok(())
    }

    /// Builds a labeling of `g` from per-vertex sets given in vertex order.
    pub fn from_vertex_sets(g: &Graph, ground: GroundSet, sets: &[IntSet]) -> Self {
        assert_eq!(g.vertex_count(), sets.len(), "one set per vertex");
        let mut f = Labeling::new(ground);
        for (name, &s) in g.names().zip(sets) {
            f.assign(name, s).expect("graph vertex names are distinct");
        }
        f
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn get(&self, vertex: &str) -> Option<IntSet> {
        self.index.get(vertex).map(|&i| self.entries[i].1)
    }

    /// Entries in assignment order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&str, IntSet)> + '_ {
        self.entries.iter().map(|(v, s)| (v.as_str(), *s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The vertex-label family `f(V)`.
    pub fn image(&self) -> BTreeSet<IntSet> {
        self.entries.iter().map(|&(_, s)| s).collect()
    }

    /// Labels of `g`'s vertices in vertex order, failing on the first
    /// unlabeled vertex.
    pub fn vertex_sets(&self, g: &Graph) -> Result<Vec<IntSet>, Error> {
        g.names()
            .map(|v| {
                self.get(v)
                    .ok_or_else(|| Error::IncompleteLabeling(v.to_string()))
            })
            .collect()
    }

    /// The vertex of `g` labeled `{0}`, if any.
    pub fn zero_vertex(&self, g: &Graph) -> Option<usize> {
        (0..g.vertex_count()).find(|&v| self.get(g.name(v)) == Some(IntSet::zero()))
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling(X={}", self.ground)?;
        for (v, s) in self.iter() {
            write!(f, ", {v}:{s}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    Unlabeled,
    UnknownVertex,
    EmptyLabel,
    NotASubset,
    Injectivity,
    DuplicateEdgeImage,
    NonUniformEdge,
    MissingEdgeImage,
    ExtraEdgeImage,
    BadEdgeCount,
    NotATopology,
    MaximumSum,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Unlabeled => "unlabeled",
            ViolationKind::UnknownVertex => "unknown-vertex",
            ViolationKind::EmptyLabel => "empty-label",
            ViolationKind::NotASubset => "not-a-subset",
            ViolationKind::Injectivity => "injectivity",
            ViolationKind::DuplicateEdgeImage => "duplicate-edge-image",
            ViolationKind::NonUniformEdge => "non-uniform-edge",
            ViolationKind::MissingEdgeImage => "missing-edge-image",
            ViolationKind::ExtraEdgeImage => "extra-edge-image",
            ViolationKind::BadEdgeCount => "bad-edge-count",
            ViolationKind::NotATopology => "not-a-topology",
            ViolationKind::MaximumSum => "maximum-sum",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Graph,
    Vertex(String),
    Edge(String, String),
    Subset(IntSet),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Graph => f.write_str("graph"),
            Location::Vertex(v) => write!(f, "vertex {v}"),
            Location::Edge(u, v) => write!(f, "edge {u} {v}"),
            Location::Subset(s) => write!(f, "subset {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Location,
    pub detail: String,
}

/// Outcome of a verifier. The verdict holds exactly when there are no
/// violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    fn push(&mut self, kind: ViolationKind, location: Location, detail: String) {
        self.violations.push(Violation {
            kind,
            location,
            detail,
        });
    }
}

fn edge_location(g: &Graph, (u, v): (usize, usize)) -> Location {
    Location::Edge(g.name(u).to_string(), g.name(v).to_string())
}

/// `f^+(uv) = f(u) + f(v)` for every edge, keyed by vertex indices.
pub fn induced_edge_labels(
    g: &Graph,
    f: &Labeling,
) -> Result<BTreeMap<(usize, usize), IntSet>, Error> {
    let sets = f.vertex_sets(g)?;
    g.edges()
        .map(|(u, v)| Ok(((u, v), sumset(sets[u], sets[v])?)))
        .collect()
}

/// IASL: every vertex labeled, every label a non-empty subset of `X`, labels
/// pairwise distinct.
pub fn verify_iasl(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = VerificationReport::default();
    let x = f.ground().base();
    for v in g.names() {
        if f.get(v).is_none() {
            report.push(
                ViolationKind::Unlabeled,
                Location::Vertex(v.to_string()),
                "vertex has no set-label".to_string(),
            );
        }
    }
    let mut first_with: BTreeMap<IntSet, &str> = BTreeMap::new();
    for (v, s) in f.iter() {
        let at = || Location::Vertex(v.to_string());
        if g.vertex_index(v).is_none() {
            report.push(
                ViolationKind::UnknownVertex,
                at(),
                "labeled vertex is not in the graph".to_string(),
            );
        }
        if s.is_empty() {
            report.push(
                ViolationKind::EmptyLabel,
                at(),
                "the empty set cannot be a set-label".to_string(),
            );
        } else if !s.is_subset(x) {
            report.push(
                ViolationKind::NotASubset,
                at(),
                format!("{s} is not a subset of X = {x}"),
            );
        }
        match first_with.get(&s) {
            Some(&other) => report.push(
                ViolationKind::Injectivity,
                at(),
                format!("label {s} already used by vertex {other}"),
            ),
            None => {
                first_with.insert(s, v);
            }
        }
    }
    report
}

// Edge labels of an IASL-clean labeling; `None` where a sumset would leave
// the representable range (only possible for labels outside X).
fn edge_labels(g: &Graph, f: &Labeling) -> Vec<((usize, usize), Option<IntSet>)> {
    g.edges()
        .map(|(u, v)| {
            let s = match (f.get(g.name(u)), f.get(g.name(v))) {
                (Some(a), Some(b)) => sumset(a, b).ok(),
                _ => None,
            };
            ((u, v), s)
        })
        .collect()
}

/// IASI: an IASL whose induced edge labels are pairwise distinct.
pub fn verify_iasi(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = verify_iasl(g, f);
    if !report.verdict() {
        return report;
    }
    let mut seen: BTreeMap<IntSet, (usize, usize)> = BTreeMap::new();
    for (e, s) in edge_labels(g, f) {
        let Some(s) = s else { continue };
        if let Some(&prev) = seen.get(&s) {
            report.push(
                ViolationKind::DuplicateEdgeImage,
                edge_location(g, e),
                format!(
                    "edge label {s} repeats that of edge {} {}",
                    g.name(prev.0),
                    g.name(prev.1)
                ),
            );
        } else {
            seen.insert(s, e);
        }
    }
    report
}

/// k-uniform IASL: every edge label has exactly `k` elements.
pub fn verify_uniform(g: &Graph, f: &Labeling, k: usize) -> VerificationReport {
    let mut report = verify_iasl(g, f);
    if !report.verdict() {
        return report;
    }
    for (e, s) in edge_labels(g, f) {
        let size = s.map_or(0, IntSet::len);
        if size != k {
            report.push(
                ViolationKind::NonUniformEdge,
                edge_location(g, e),
                format!("edge label has {size} elements, expected {k}"),
            );
        }
    }
    report
}

/// Set-indexing numbers: the cardinality of each vertex and edge label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetIndexingNumbers {
    /// By vertex index.
    pub vertices: Vec<usize>,
    pub edges: BTreeMap<(usize, usize), usize>,
}

impl SetIndexingNumbers {
    pub fn mono_indexed_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.vertices[v] == 1)
    }

    pub fn mono_indexed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().filter(|&(_, &n)| n == 1).map(|(&e, _)| e)
    }
}

pub fn set_indexing_numbers(g: &Graph, f: &Labeling) -> Result<SetIndexingNumbers, Error> {
    let vertices = f.vertex_sets(g)?.into_iter().map(IntSet::len).collect();
    let edges = induced_edge_labels(g, f)?
        .into_iter()
        .map(|(e, s)| (e, s.len()))
        .collect();
    Ok(SetIndexingNumbers { vertices, edges })
}

/// IASGL: an IASL with `f^+(E) = P(X) - {∅, {0}}` and `|E| = 2^|X| - 2`, so
/// the edge map is a bijection onto the required image.
pub fn verify_iasgl(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = verify_iasl(g, f);
    let x = f.ground();
    let required = x.graceful_edge_count();
    if g.edge_count() != required {
        report.push(
            ViolationKind::BadEdgeCount,
            Location::Graph,
            format!(
                "graph has {} edges, an IASGL over a {}-element ground set needs {required}",
                g.edge_count(),
                x.size()
            ),
        );
    }
    if report.has(ViolationKind::Unlabeled) {
        return report;
    }
    let power = PowerSet::new(x);
    let mut produced: BTreeSet<IntSet> = BTreeSet::new();
    let mut repeated = 0usize;
    for (e, s) in edge_labels(g, f) {
        match s {
            Some(s) if !s.is_zero_singleton() && power.index_of(s).is_some() => {
                if !produced.insert(s) {
                    repeated += 1;
                }
            }
            Some(s) => report.push(
                ViolationKind::ExtraEdgeImage,
                edge_location(g, e),
                format!("edge label {s} is not in P(X) - {{∅, {{0}}}}"),
            ),
            None => report.push(
                ViolationKind::ExtraEdgeImage,
                edge_location(g, e),
                "edge label leaves the representable range".to_string(),
            ),
        }
    }
    for &s in &power.subsets()[1..] {
        if !produced.contains(&s) {
            report.push(
                ViolationKind::MissingEdgeImage,
                Location::Subset(s),
                format!("no edge is labeled {s}"),
            );
        }
    }
    if repeated > 0 && !report.has(ViolationKind::BadEdgeCount) {
        report.push(
            ViolationKind::DuplicateEdgeImage,
            Location::Graph,
            format!("{repeated} edge labels repeat"),
        );
    }
    report
}

/// Adjacent vertices of an IASGL graph have label maxima summing to at most
/// `max X`. Only this necessary direction is checked.
pub fn verify_adjacent_maxima(g: &Graph, f: &Labeling) -> VerificationReport {
    let mut report = VerificationReport::default();
    let top = f.ground().max_element();
    for (u, v) in g.edges() {
        let (Some(a), Some(b)) = (
            f.get(g.name(u)).and_then(IntSet::max),
            f.get(g.name(v)).and_then(IntSet::max),
        ) else {
            continue;
        };
        if a + b > top {
            report.push(
                ViolationKind::MaximumSum,
                edge_location(g, (u, v)),
                format!("label maxima {a} + {b} exceed max X = {top}"),
            );
        }
    }
    report
}
