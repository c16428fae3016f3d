//! Finite simple undirected graphs with named vertices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::Error;

/// Largest order handled by [`enumerate_connected_graphs`].
pub const ENUMERATION_CAP: usize = 7;

/// Largest order for which [`Graph::canonical_form`] is available.
pub const CANONICAL_CAP: usize = 8;

/// A simple graph. Vertices keep insertion order; edges are stored as index
/// pairs `(u, v)` with `u < v`, sorted.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    adjacency: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex, or returns the index of an existing one with that name.
    pub fn add_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adjacency.push(BTreeSet::new());
        i
    }

    /// Adds the edge `uv`, declaring either endpoint if needed.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), Error> {
        if u == v {
            return Err(Error::Loop(u.to_string()));
        }
        let a = self.add_vertex(u);
        let b = self.add_vertex(v);
        self.add_edge_indices(a, b)
    }

    pub fn add_edge_indices(&mut self, a: usize, b: usize) -> Result<(), Error> {
        let n = self.names.len();
        if a >= n || b >= n {
            return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
        }
        if a == b {
            return Err(Error::Loop(self.names[a].clone()));
        }
        let e = (a.min(b), a.max(b));
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(
                self.names[e.0].clone(),
                self.names[e.1].clone(),
            ));
        }
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
        Ok(())
    }

    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self, Error> {
        let mut g = Graph::new();
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on vertices named `"0"`, `"1"`, ... with the given index edges.
    pub fn with_order(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(&i.to_string());
        }
        for (a, b) in edges {
            g.add_edge_indices(a, b)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::with_order(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::with_order(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    pub fn complete(n: usize) -> Self {
        Self::with_order(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("complete graph edges are simple")
    }

    /// `K_{1,leaves}` with center `"0"`.
    pub fn star(leaves: usize) -> Self {
        Self::with_order(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::with_order(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("bipartite edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        self.names.iter().map(String::as_str)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges as index pairs `(u, v)`, `u < v`, sorted.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Number of degree-1 neighbours of `v`.
    pub fn pendant_neighbor_count(&self, v: usize) -> usize {
        self.neighbors(v).filter(|&w| self.degree(w) == 1).count()
    }

    pub fn structure(&self) -> Structure {
        structure(self)
    }

    /// Minimum adjacency encoding over all vertex orders that list vertices by
    /// non-increasing degree, together with the order attaining it
    /// (`order[position] = vertex`). Isomorphic graphs get equal codes.
    pub fn canonical_form(&self) -> Result<(u64, Vec<usize>), Error> {
        let n = self.vertex_count();
        if n > CANONICAL_CAP {
            return Err(Error::Infeasible {
                what: "canonical form order",
                requested: n,
                cap: CANONICAL_CAP,
            });
        }
        let adj: Vec<u32> = (0..n)
            .map(|v| self.neighbors(v).fold(0u32, |m, w| m | 1 << w))
            .collect();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| core::cmp::Reverse(self.degree(v)));
        // cell[p] = first position holding the same degree as position p
        let mut cell_start = alloc::vec![0usize; n];
        for p in 1..n {
            cell_start[p] = if self.degree(by_degree[p]) == self.degree(by_degree[p - 1]) {
                cell_start[p - 1]
            } else {
                p
            };
        }
        let mut best = (u64::MAX, by_degree.clone());
        let mut order = alloc::vec![0usize; n];
        let mut used = 0u32;
        canon_rec(
            &adj,
            &by_degree,
            &cell_start,
            0,
            0,
            &mut order,
            &mut used,
            &mut best,
        );
        Ok(best)
    }

    /// Whether two graphs of order at most [`CANONICAL_CAP`] are isomorphic.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, Error> {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()?.0 == other.canonical_form()?.0)
    }

    /// Human-readable edge list, `"a-b b-c"`; isolated vertices appear alone.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                parts.push(self.names[v].clone());
            }
        }
        parts.join(" ")
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph[{}]", self.describe())
    }
}

/// Bit position of the pair `(i, j)`, `i < j`, in a code over positions.
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

#[allow(clippy::too_many_arguments)]
fn canon_rec(
    adj: &[u32],
    by_degree: &[usize],
    cell_start: &[usize],
    pos: usize,
    code: u64,
    order: &mut Vec<usize>,
    used: &mut u32,
    best: &mut (u64, Vec<usize>),
) {
    let n = adj.len();
    if pos == n {
        if code < best.0 {
            best.0 = code;
            best.1.clone_from(order);
        }
        return;
    }
    let start = cell_start[pos];
    let mut end = pos + 1;
    while end < n && cell_start[end] == start {
        end += 1;
    }
    for &v in &by_degree[start..end] {
        if *used >> v & 1 == 1 {
            continue;
        }
        let mut next = code;
        for (p, &w) in order[..pos].iter().enumerate() {
            if adj[v] >> w & 1 == 1 {
                next |= 1u64 << pair_bit(p, pos);
            }
        }
        order[pos] = v;
        *used |= 1 << v;
        canon_rec(adj, by_degree, cell_start, pos + 1, next, order, used, best);
        *used &= !(1 << v);
    }
}

/// Degrees and the structural predicates the labeling results depend on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub degrees: Vec<usize>,
    pub pendant_vertices: Vec<usize>,
    pub is_connected: bool,
    /// `Some(r)` when every vertex has degree `r`.
    pub regular_degree: Option<usize>,
    /// Connected with `|E| = |V| - 1`.
    pub is_tree: bool,
    /// A tree on at least two vertices with a vertex adjacent to all others.
    pub is_star: bool,
    pub star_center: Option<usize>,
}

impl Structure {
    pub fn is_regular(&self, r: usize) -> bool {
        self.regular_degree == Some(r)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Whether this is `K_{1,leaves}`.
    pub fn is_star_with_leaves(&self, leaves: usize) -> bool {
        self.is_star && self.degrees.len() == leaves + 1
    }
}

pub fn structure(g: &Graph) -> Structure {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let pendant_vertices = (0..n).filter(|&v| degrees[v] == 1).collect();
    let is_connected = g.is_connected();
    let regular_degree = match degrees.split_first() {
        Some((&d, rest)) if rest.iter().all(|&e| e == d) => Some(d),
        _ => None,
    };
    let is_tree = is_connected && g.edge_count() + 1 == n;
    let star_center = if is_tree && n >= 2 {
        (0..n).find(|&v| degrees[v] == n - 1)
    } else {
        None
    };
    Structure {
        degrees,
        pendant_vertices,
        is_connected,
        regular_degree,
        is_tree,
        is_star: star_center.is_some(),
        star_center,
    }
}

/// Connected simple graphs on `n` vertices named `"0"..`.
///
/// Without `dedup` this yields every labeled connected graph, lazily. With
/// `dedup` it yields one canonical representative per isomorphism class,
/// ordered by canonical code.
pub fn enumerate_connected_graphs(n: usize, dedup: bool) -> Result<ConnectedGraphs, Error> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::Infeasible {
            what: "connected graph enumeration order",
            requested: n,
            cap: ENUMERATION_CAP,
        });
    }
    if dedup {
        let codes = connected_class_codes(n);
        let graphs: Vec<Graph> = codes.into_iter().map(|c| graph_from_code(n, c)).collect();
        Ok(ConnectedGraphs::Classes(graphs.into_iter()))
    } else {
        Ok(ConnectedGraphs::Labeled {
            n,
            next: 0,
            end: 1u64 << (n * (n - 1) / 2),
        })
    }
}

/// Connected graphs of every order from 1 to `max_order`, one per
/// isomorphism class.
pub fn connected_graphs_up_to(max_order: usize) -> Result<Vec<Graph>, Error> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_connected_graphs(n, true)?);
    }
    Ok(out)
}

/// Iterator returned by [`enumerate_connected_graphs`].
pub enum ConnectedGraphs {
    Classes(alloc::vec::IntoIter<Graph>),
    Labeled { n: usize, next: u64, end: u64 },
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            ConnectedGraphs::Classes(it) => it.next(),
            ConnectedGraphs::Labeled { n, next, end } => {
                while *next < *end {
                    let code = *next;
                    *next += 1;
                    if code_is_connected(*n, code) {
                        return Some(graph_from_code(*n, code));
                    }
                }
                None
            }
        }
    }
}

fn code_adjacency(n: usize, code: u64) -> Vec<u32> {
    let mut adj = alloc::vec![0u32; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn code_is_connected(n: usize, code: u64) -> bool {
    let adj = code_adjacency(n, code);
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            next |= adj[v as usize];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| code >> pair_bit(i, j) & 1 == 1);
    Graph::with_order(n, edges).expect("code edges are simple")
}

// Every connected graph on n >= 2 vertices has a non-cut vertex, so the
// classes on n vertices are all reached by attaching a new vertex to a
// non-empty neighbourhood in some class on n - 1 vertices.
fn connected_class_codes(n: usize) -> BTreeSet<u64> {
    let mut classes: BTreeSet<u64> = BTreeSet::new();
    classes.insert(0);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &classes {
            for neighbourhood in 1u64..(1 << (m - 1)) {
                let mut extended = code;
                for i in 0..m - 1 {
                    if neighbourhood >> i & 1 == 1 {
                        extended |= 1u64 << pair_bit(i, m - 1);
                    }
                }
                let g = graph_from_code(m, extended);
                let (canon, _) = g.canonical_form().expect("order within cap");
                next.insert(canon);
            }
        }
        classes = next;
    }
    classes
}
