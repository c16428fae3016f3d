//! Backtracking search for IASGL, Top-IASL and Top-IASGL labelings.
//!
//! Vertices are labeled in a fixed order (descending degree, ties by name) and
//! labels are tried in canonical order, so `{0}` is tried first on the
//! highest-degree vertex. A branch is abandoned as soon as
//! - an incident edge label leaves `X` (or, for graceful modes, is `{0}` or
//!   repeats an earlier edge label),
//! - a later neighbour is left with no admissible label,
//! - in bijective modes, some unused label no longer fits any unlabeled vertex,
//! - in graceful modes, a missing edge image has no decomposition that the
//!   unlabeled part of the graph could still realise.
//!
//! Every rule only discards branches that cannot be completed, so the search
//! is complete; the first solution found is deterministic.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::ControlFlow;
use core::str::FromStr;

use crate::classify::{classify_power_set, SumsetClassification};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::sets::{GroundSet, IntSet, Limits, PowerSet};
use crate::topology::{enumerate_topologies, Topology, TOPOLOGY_CAP};
use crate::Error;

/// Largest `|X|` for IASGL search.
pub const SEARCH_CAP: usize = 5;

/// Largest element bound accepted by [`minimal_ground_set`].
pub const MIN_GROUND_ELEMENT_CAP: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SearchMode {
    Iasgl,
    TopIasl,
    TopIasgl,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Iasgl => "iasgl",
            SearchMode::TopIasl => "top-iasl",
            SearchMode::TopIasgl => "top-iasgl",
        }
    }

    fn ground_cap(self) -> usize {
        match self {
            SearchMode::Iasgl => SEARCH_CAP,
            SearchMode::TopIasl | SearchMode::TopIasgl => TOPOLOGY_CAP,
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "iasgl" => Ok(SearchMode::Iasgl),
            "top-iasl" => Ok(SearchMode::TopIasl),
            "top-iasgl" => Ok(SearchMode::TopIasgl),
            other => Err(alloc::format!(
                "unknown mode {other:?}; expected iasgl, top-iasl or top-iasgl"
            )),
        }
    }
}

/// Structural conditions from the existence results, evaluated before search.
///
/// Only the conditions proven necessary gate the search (edge count, vertex
/// bounds, pendant lower bound). The two readings of the pendant condition and
/// the two degree targets are reported but never used to reject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralScreen {
    pub mode: SearchMode,
    /// `|E| = 2^|X| - 2`.
    pub edge_count_ok: bool,
    /// `|V| >= 2^|X| - (rho + 1)`.
    pub vertex_count_ok: bool,
    /// `|V| <= 2^|X| - 1`, needed for an injective labeling.
    pub vertex_capacity_ok: bool,
    /// At least `|X| - 1` pendant vertices; Top-IASGL additionally needs one
    /// pendant vertex on any non-trivial graph.
    pub pendant_lower_bound_ok: bool,
    /// First reading: `rho'` pendants if `X` is not a sumset, `1 + rho'` if it is.
    pub pendant_count_ok_reading_a: bool,
    /// Second reading: `1 + rho'` if `X` is not a sumset, `rho'` if it is.
    pub pendant_count_ok_reading_b: bool,
    /// Some vertex has degree at least `rho''`.
    pub max_degree_ok: bool,
    /// Some vertex has degree at least `1 + 2^(|X|-1)`.
    pub proof_degree_ok: bool,
    pub pendant_count: usize,
    pub max_degree: usize,
    pub classification: SumsetClassification,
}

impl StructuralScreen {
    /// Conjunction of the provably necessary conditions.
    pub fn necessary_conditions_hold(&self) -> bool {
        self.edge_count_ok
            && self.vertex_count_ok
            && self.vertex_capacity_ok
            && self.pendant_lower_bound_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: bool,
    pub labeling: Option<Labeling>,
    /// Label placements attempted.
    pub nodes_explored: u64,
    pub screen: StructuralScreen,
}

pub fn screen(g: &Graph, x: GroundSet, mode: SearchMode) -> Result<StructuralScreen, Error> {
    x.require_size_at_most(mode.ground_cap(), "search ground set size")?;
    Ok(screen_with(g, &PowerSet::new(x), mode))
}

fn screen_with(g: &Graph, power: &PowerSet, mode: SearchMode) -> StructuralScreen {
    let classification = classify_power_set(power);
    let x = power.ground();
    let n = x.size();
    let full = 1usize << n;
    let s = g.structure();
    let pendant_count = s.pendant_vertices.len();
    let max_degree = s.max_degree();
    let rho = classification.rho;
    let rho_p = classification.rho_prime;
    let mut pendant_bound = n - 1;
    if mode == SearchMode::TopIasgl && g.vertex_count() >= 2 {
        pendant_bound = pendant_bound.max(1);
    }
    let (needed_a, needed_b) = if classification.x_is_sumset {
        (1 + rho_p, rho_p)
    } else {
        (rho_p, 1 + rho_p)
    };
    StructuralScreen {
        mode,
        edge_count_ok: g.edge_count() == full - 2,
        vertex_count_ok: g.vertex_count() + rho + 1 >= full,
        vertex_capacity_ok: g.vertex_count() < full,
        pendant_lower_bound_ok: pendant_count >= pendant_bound,
        pendant_count_ok_reading_a: pendant_count >= needed_a,
        pendant_count_ok_reading_b: pendant_count >= needed_b,
        max_degree_ok: max_degree >= classification.rho_double_prime,
        proof_degree_ok: max_degree > 1 << (n - 1),
        pendant_count,
        max_degree,
        classification,
    }
}

/// Label mask over canonical subset indices; `|X| <= 5` keeps indices below 31.
type Mask = u64;

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

struct Solver<'a> {
    power: &'a PowerSet,
    graceful: bool,
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    later: Vec<Vec<usize>>,
    // some edge has both endpoints at positions >= k
    edge_after: Vec<bool>,
    // edges with at least one endpoint at position >= k
    edges_after: Vec<usize>,
    allowed: Mask,
    compat: Vec<Mask>,
    // ordered pairs (a, b), a != b, with a + b = image
    decompositions: Vec<Vec<(usize, usize)>>,
    labels: Vec<usize>,
    label_position: Vec<usize>,
    used_labels: Mask,
    used_edges: Mask,
    nodes: u64,
}

impl<'a> Solver<'a> {
    fn new(g: &Graph, power: &'a PowerSet, allowed: Mask, graceful: bool) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            Reverse(g.degree(a))
                .cmp(&Reverse(g.degree(b)))
                .then_with(|| g.name(a).cmp(g.name(b)))
        });
        let mut position = alloc::vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut earlier = alloc::vec![Vec::new(); n];
        let mut later = alloc::vec![Vec::new(); n];
        for (u, v) in g.edges() {
            let (a, b) = (position[u].min(position[v]), position[u].max(position[v]));
            earlier[b].push(a);
            later[a].push(b);
        }
        let mut edge_after = alloc::vec![false; n + 1];
        let mut edges_after = alloc::vec![0usize; n + 1];
        for k in (0..n).rev() {
            edge_after[k] = edge_after[k + 1] || !later[k].is_empty();
            edges_after[k] = edges_after[k + 1] + earlier[k].len();
        }

        let m = power.len();
        let compat: Vec<Mask> = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| b != a)
                    .filter(|&b| match power.sum_index(a, b) {
                        Some(s) => !graceful || s != 0,
                        None => false,
                    })
                    .fold(0, |acc, b| acc | 1 << b)
            })
            .collect();
        let mut decompositions = alloc::vec![Vec::new(); m];
        if graceful {
            for a in 0..m {
                for b in 0..m {
                    if a != b && allowed >> a & 1 == 1 && allowed >> b & 1 == 1 {
                        if let Some(s) = power.sum_index(a, b) {
                            decompositions[s].push((a, b));
                        }
                    }
                }
            }
        }
        Solver {
            power,
            graceful,
            order,
            earlier,
            later,
            edge_after,
            edges_after,
            allowed,
            compat,
            decompositions,
            labels: alloc::vec![usize::MAX; n],
            label_position: alloc::vec![usize::MAX; m],
            used_labels: 0,
            used_edges: 0,
            nodes: 0,
        }
    }

    /// Images every graceful labeling must produce: all of `P(X) - {∅, {0}}`.
    fn required(&self) -> Mask {
        ((1 as Mask) << self.power.len()) - 2
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[IntSet]) -> ControlFlow<()>) -> ControlFlow<()> {
        self.place(0, visit)
    }

    fn place(
        &mut self,
        k: usize,
        visit: &mut dyn FnMut(&[IntSet]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.order.len();
        if k == n {
            let mut sets = alloc::vec![IntSet::EMPTY; n];
            for (p, &v) in self.order.iter().enumerate() {
                sets[v] = self.power.subset(self.labels[p]);
            }
            return visit(&sets);
        }
        let mut candidates = self.allowed & !self.used_labels;
        for &p in &self.earlier[k] {
            candidates &= self.compat[self.labels[p]];
        }
        for label in bits(candidates) {
            self.nodes += 1;
            let Some(new_edges) = self.edge_images(k, label) else {
                continue;
            };
            self.labels[k] = label;
            self.label_position[label] = k;
            self.used_labels |= 1 << label;
            self.used_edges |= new_edges;
            let feasible = self.lookahead(k);
            let flow = if feasible {
                self.place(k + 1, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.used_edges &= !new_edges;
            self.used_labels &= !(1 << label);
            self.label_position[label] = usize::MAX;
            self.labels[k] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Edge images produced by putting `label` at position `k`; `None` if a
    /// graceful labeling would repeat an image.
    fn edge_images(&self, k: usize, label: usize) -> Option<Mask> {
        let mut fresh: Mask = 0;
        for &p in &self.earlier[k] {
            let s = self
                .power
                .sum_index(self.labels[p], label)
                .expect("candidates are compatible with earlier neighbours");
            if self.graceful {
                let bit = 1 << s;
                if (self.used_edges | fresh) & bit != 0 {
                    return None;
                }
                fresh |= bit;
            }
        }
        Some(fresh)
    }

    fn domain(&self, q: usize, k: usize) -> Mask {
        let mut dom = self.allowed & !self.used_labels;
        for &p in &self.earlier[q] {
            if p <= k {
                dom &= self.compat[self.labels[p]];
            }
        }
        dom
    }

    fn lookahead(&self, k: usize) -> bool {
        let n = self.order.len();
        for &q in &self.later[k] {
            let dom = self.domain(q, k);
            let viable = if self.graceful {
                bits(dom).any(|label| self.fits_graceful(q, k, label))
            } else {
                dom != 0
            };
            if !viable {
                return false;
            }
        }
        let free_labels = self.allowed & !self.used_labels;
        // bijective: every remaining label must still fit somewhere
        if free_labels.count_ones() as usize == n - k - 1 {
            let reachable = (k + 1..n).fold(0, |acc, q| acc | self.domain(q, k));
            if free_labels & !reachable != 0 {
                return false;
            }
        }
        if self.graceful {
            let missing = self.required() & !self.used_edges;
            if missing.count_ones() as usize != self.edges_after[k + 1] {
                return false;
            }
            return bits(missing).all(|image| self.still_reachable(image, k));
        }
        true
    }

    fn fits_graceful(&self, q: usize, k: usize, label: usize) -> bool {
        let mut fresh: Mask = 0;
        for &p in &self.earlier[q] {
            if p > k {
                continue;
            }
            let Some(s) = self.power.sum_index(self.labels[p], label) else {
                return false;
            };
            let bit = 1 << s;
            if (self.used_edges | fresh) & bit != 0 {
                return false;
            }
            fresh |= bit;
        }
        true
    }

    fn still_reachable(&self, image: usize, k: usize) -> bool {
        let free = self.allowed & !self.used_labels;
        let unlabeled_edge = self.edge_after[k + 1];
        self.decompositions[image].iter().any(|&(a, b)| {
            let b_free = free >> b & 1 == 1;
            if !b_free {
                return false;
            }
            if free >> a & 1 == 1 {
                return unlabeled_edge;
            }
            let pa = self.label_position[a];
            pa != usize::MAX && self.later[pa].iter().any(|&q| q > k)
        })
    }
}

fn mask_of(power: &PowerSet, sets: &[IntSet]) -> Mask {
    sets.iter()
        .filter_map(|&s| power.index_of(s))
        .fold(0, |acc, i| acc | 1 << i)
}

fn not_found(screen: StructuralScreen, nodes: u64) -> SearchOutcome {
    SearchOutcome {
        found: false,
        labeling: None,
        nodes_explored: nodes,
        screen,
    }
}

/// Runs the solver for every admissible label family of `mode`, calling
/// `visit` with per-vertex sets. Returns the node count, or `None` when the
/// screen ruled the graph out before any search.
fn explore(
    g: &Graph,
    power: &PowerSet,
    mode: SearchMode,
    screen: &StructuralScreen,
    visit: &mut dyn FnMut(&[IntSet]) -> ControlFlow<()>,
) -> Result<Option<u64>, Error> {
    let x = power.ground();
    let graceful = mode != SearchMode::TopIasl;
    if graceful && !screen.necessary_conditions_hold() {
        return Ok(None);
    }
    if !screen.vertex_capacity_ok {
        return Ok(None);
    }
    let families: Vec<Mask> = match mode {
        SearchMode::Iasgl => alloc::vec![((1 as Mask) << power.len()) - 1],
        SearchMode::TopIasl | SearchMode::TopIasgl => enumerate_topologies(x, false)?
            .iter()
            .filter(|t| t.len() - 1 == g.vertex_count())
            .map(|t: &Topology| mask_of(power, t.nonempty_opens()))
            .collect(),
    };
    let mut nodes = 0;
    for allowed in families {
        let mut solver = Solver::new(g, power, allowed, graceful);
        let flow = solver.run(visit);
        nodes += solver.nodes;
        if flow.is_break() {
            break;
        }
    }
    Ok(Some(nodes))
}

fn search(g: &Graph, x: GroundSet, mode: SearchMode) -> Result<SearchOutcome, Error> {
    x.require_size_at_most(mode.ground_cap(), "search ground set size")?;
    let power = PowerSet::new(x);
    let screen = screen_with(g, &power, mode);
    let mut first: Option<Vec<IntSet>> = None;
    let nodes = explore(g, &power, mode, &screen, &mut |sets| {
        first = Some(sets.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(match first {
        Some(sets) => SearchOutcome {
            found: true,
            labeling: Some(Labeling::from_vertex_sets(g, x, &sets)),
            nodes_explored: nodes.unwrap_or(0),
            screen,
        },
        None => not_found(screen, nodes.unwrap_or(0)),
    })
}

/// First IASGL of `g` over `x`, if any.
pub fn search_iasgl(g: &Graph, x: GroundSet) -> Result<SearchOutcome, Error> {
    search(g, x, SearchMode::Iasgl)
}

/// First Top-IASL of `g` over `x` whose edge labels all stay inside `X`.
/// Topologies are tried in enumeration order; for each one with `|V|`
/// non-empty open sets, every bijection onto those sets is searched.
pub fn search_top_iasl(g: &Graph, x: GroundSet) -> Result<SearchOutcome, Error> {
    search(g, x, SearchMode::TopIasl)
}

/// First labeling that is both a Top-IASL and an IASGL.
pub fn search_top_iasgl(g: &Graph, x: GroundSet) -> Result<SearchOutcome, Error> {
    search(g, x, SearchMode::TopIasgl)
}

/// Every labeling of `g` found by the `mode` search, in search order.
pub fn all_labelings(g: &Graph, x: GroundSet, mode: SearchMode) -> Result<Vec<Labeling>, Error> {
    x.require_size_at_most(mode.ground_cap(), "search ground set size")?;
    let power = PowerSet::new(x);
    let screen = screen_with(g, &power, mode);
    let mut out = Vec::new();
    explore(g, &power, mode, &screen, &mut |sets| {
        out.push(Labeling::from_vertex_sets(g, x, sets));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Smallest ground set (by cardinality, then largest element, then
/// lexicographically) with elements at most `element_bound` over which the
/// `mode` search succeeds.
pub fn minimal_ground_set(
    g: &Graph,
    mode: SearchMode,
    element_bound: u32,
) -> Result<Option<GroundSet>, Error> {
    if element_bound > MIN_GROUND_ELEMENT_CAP {
        return Err(Error::Infeasible {
            what: "minimal ground set element bound",
            requested: element_bound as usize,
            cap: MIN_GROUND_ELEMENT_CAP as usize,
        });
    }
    let limits = Limits {
        max_element: element_bound,
        max_ground_size: mode.ground_cap(),
    };
    let max_size = mode.ground_cap().min(element_bound as usize + 1);
    for size in 1..=max_size {
        for candidate in candidates(size, element_bound) {
            let x = GroundSet::with_limits(candidate, limits)?;
            if search(g, x, mode)?.found {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Ground sets `{0} ∪ S` with `|S| = size - 1`, `S ⊆ {1..=bound}`, ordered by
/// largest element then lexicographically.
fn candidates(size: usize, bound: u32) -> Vec<IntSet> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    chosen.push(0u32);
    collect_combinations(1, bound, size, &mut chosen, &mut out);
    out.sort_by_key(|&s| IntSet::max(s));
    out
}

fn collect_combinations(
    start: u32,
    bound: u32,
    size: usize,
    chosen: &mut Vec<u32>,
    out: &mut Vec<IntSet>,
) {
    if chosen.len() == size {
        out.push(IntSet::from_elements(chosen.iter().copied()).expect("elements within bound"));
        return;
    }
    for e in start..=bound {
        chosen.push(e);
        collect_combinations(e + 1, bound, size, chosen, out);
        chosen.pop();
    }
}
