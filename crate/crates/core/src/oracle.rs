//! Exhaustive checks of the structural results on IASGL, Top-IASL and
//! Top-IASGL graphs over every connected graph up to a given order.
//!
//! A check that fails on some instance is not an error: several of the
//! claims are ambiguous or too strong, and the report records
//! the concrete counterexamples. Checks whose claims are known to be
//! ambiguous are marked `documented`; a counterexample to any other check is
//! a genuine finding.
//!
//! Graphs are non-trivial and connected; the single-vertex graph is counted
//! as an instance but every claim about it is vacuous.
//!
//! Top-IASL labelings come from [`search_top_iasl`](crate::search_top_iasl),
//! so their edge labels always stay inside `X`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;
use core::str::FromStr;

use crate::graph::{connected_graphs_up_to, Graph, Structure, ENUMERATION_CAP};
use crate::labeling::Labeling;
use crate::search::{all_labelings, screen, SearchMode, StructuralScreen};
use crate::sets::{GroundSet, IntSet};
use crate::topology::{enumerate_topologies, is_topology, realize_topology, verify_top_iasl};
use crate::Error;

/// Largest `|X|` for which labelings are exhausted.
pub const ORACLE_GROUND_CAP: usize = 3;

const MAX_WITNESSES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `{0}` labels some vertex of every IASGL graph.
    P1,
    /// An IASGL graph has at least `|X| - 1` pendant vertices.
    P2,
    /// The `{0}`-vertex has at least `1 + 2^(|X|-1)` neighbours.
    P3,
    /// Labels containing `max X` sit on pendant neighbours of the `{0}`-vertex.
    P4,
    TEven,
    TChar,
    TTree,
    TTopPend,
    TMaxEl,
    TDisc,
    TReal,
    TTreq,
    TAcyc,
    TReg,
    TNsc,
    TDiscGl,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::P1,
        TheoremId::P2,
        TheoremId::P3,
        TheoremId::P4,
        TheoremId::TEven,
        TheoremId::TChar,
        TheoremId::TTree,
        TheoremId::TTopPend,
        TheoremId::TMaxEl,
        TheoremId::TDisc,
        TheoremId::TReal,
        TheoremId::TTreq,
        TheoremId::TAcyc,
        TheoremId::TReg,
        TheoremId::TNsc,
        TheoremId::TDiscGl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::P1 => "P1",
            TheoremId::P2 => "P2",
            TheoremId::P3 => "P3",
            TheoremId::P4 => "P4",
            TheoremId::TEven => "T-even",
            TheoremId::TChar => "T-char",
            TheoremId::TTree => "T-tree",
            TheoremId::TTopPend => "T-toppend",
            TheoremId::TMaxEl => "T-maxel",
            TheoremId::TDisc => "T-disc",
            TheoremId::TReal => "T-real",
            TheoremId::TTreq => "T-treq",
            TheoremId::TAcyc => "T-acyc",
            TheoremId::TReg => "T-reg",
            TheoremId::TNsc => "T-nsc",
            TheoremId::TDiscGl => "T-discgl",
        }
    }

    /// The claim as it is checked.
    pub fn claim(self) -> &'static str {
        match self {
            TheoremId::P1 => "every IASGL labels some vertex {0}",
            TheoremId::P2 => "an IASGL graph has at least |X|-1 pendant vertices",
            TheoremId::P3 => "the {0}-vertex of an IASGL has at least 1+2^(|X|-1) neighbours",
            TheoremId::P4 => {
                "in an IASGL, every vertex whose label contains max X is a pendant neighbour of the {0}-vertex"
            }
            TheoremId::TEven => "an IASGL graph has an even number of edges",
            TheoremId::TChar => {
                "an IASGL graph's pendant count, {0}-vertex degree and pendant neighbours match the summand/sumset counts"
            }
            TheoremId::TTree => "a tree admits an IASGL iff it is K_{1,2^|X|-2}",
            TheoremId::TTopPend => "a Top-IASL graph has a pendant vertex",
            TheoremId::TMaxEl => {
                "in a Top-IASL, vertices whose label contains max X are pendant neighbours of the {0}-vertex"
            }
            TheoremId::TDisc => {
                "a graph has a Top-IASL for the discrete topology iff some vertex has at least 2^(|X|-1) pendant neighbours"
            }
            TheoremId::TReal => "every topology containing {0} with at least 3 open sets is realised by its labeled star",
            TheoremId::TTreq => "a tree admits an IASGL iff it admits a Top-IASGL",
            TheoremId::TAcyc => "an acyclic Top-IASGL graph is K_{1,2^|X|-2}",
            TheoremId::TReg => "no connected regular graph admits a Top-IASGL",
            TheoremId::TNsc => {
                "a graph admits a Top-IASGL iff it meets the edge/vertex, degree and pendant conditions"
            }
            TheoremId::TDiscGl => "a graph has a Top-IASGL for the discrete topology iff it is K_{1,2^|X|-2}",
        }
    }

    /// Whether counterexamples are expected because the claim is ambiguous
    /// or too strong.
    pub fn documented(self) -> bool {
        matches!(
            self,
            TheoremId::P3 | TheoremId::P4 | TheoremId::TChar | TheoremId::TDisc | TheoremId::TNsc
        )
    }

    /// The labeling class every witness labeling of this check belongs to.
    pub fn witness_class(self) -> Option<SearchMode> {
        match self {
            TheoremId::P1
            | TheoremId::P2
            | TheoremId::P3
            | TheoremId::P4
            | TheoremId::TEven
            | TheoremId::TChar
            | TheoremId::TTree => Some(SearchMode::Iasgl),
            TheoremId::TTopPend | TheoremId::TMaxEl | TheoremId::TDisc | TheoremId::TReal => {
                Some(SearchMode::TopIasl)
            }
            TheoremId::TTreq
            | TheoremId::TAcyc
            | TheoremId::TReg
            | TheoremId::TNsc
            | TheoremId::TDiscGl => Some(SearchMode::TopIasgl),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Holds {
    Confirmed,
    Counterexample,
    Mixed,
}

impl Holds {
    pub fn as_str(self) -> &'static str {
        match self {
            Holds::Confirmed => "confirmed",
            Holds::Counterexample => "counterexample",
            Holds::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub ground: GroundSet,
    pub labeling: Option<Labeling>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub max_vertices: usize,
    pub ground_sets: Vec<GroundSet>,
    pub instances_checked: u64,
    /// Instances where the claim failed.
    pub failures: u64,
    pub holds: Holds,
    pub documented: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn is_undocumented_counterexample(&self) -> bool {
        self.holds != Holds::Confirmed && !self.documented
    }
}

/// Runs one check over every connected graph with at most `max_vertices`
/// vertices and every ground set in `ground_sets`.
pub fn run_oracle(
    id: TheoremId,
    max_vertices: usize,
    ground_sets: &[GroundSet],
) -> Result<TheoremReport, Error> {
    let ctx = Context::new(max_vertices, ground_sets)?;
    Ok(ctx.run(id))
}

/// Runs every registered check, in registration order. Labelings are searched
/// once per instance and shared between checks.
pub fn run_all(
    max_vertices: usize,
    ground_sets: &[GroundSet],
) -> Result<Vec<TheoremReport>, Error> {
    if ground_sets.is_empty() {
        return Ok(Vec::new());
    }
    let ctx = Context::new(max_vertices, ground_sets)?;
    Ok(TheoremId::ALL.into_iter().map(|id| ctx.run(id)).collect())
}

struct Instance {
    graph: Graph,
    structure: Structure,
    ground: GroundSet,
    iasgl: OnceCell<Vec<Labeling>>,
    top_iasl: OnceCell<Vec<Labeling>>,
    top_iasgl: OnceCell<Vec<Labeling>>,
    screen: OnceCell<StructuralScreen>,
}

impl Instance {
    fn nontrivial(&self) -> bool {
        self.graph.vertex_count() >= 2
    }

    fn n(&self) -> usize {
        self.ground.size()
    }

    fn iasgl(&self) -> &[Labeling] {
        self.iasgl.get_or_init(|| {
            all_labelings(&self.graph, self.ground, SearchMode::Iasgl)
                .expect("ground set within cap")
        })
    }

    fn top_iasl(&self) -> &[Labeling] {
        self.top_iasl.get_or_init(|| {
            all_labelings(&self.graph, self.ground, SearchMode::TopIasl)
                .expect("ground set within cap")
        })
    }

    fn top_iasgl(&self) -> &[Labeling] {
        self.top_iasgl.get_or_init(|| {
            self.iasgl()
                .iter()
                .filter(|f| {
                    let mut family: Vec<IntSet> = f.image().into_iter().collect();
                    family.push(IntSet::EMPTY);
                    is_topology(&family, self.ground).is_ok_and(|c| c.holds())
                })
                .cloned()
                .collect()
        })
    }

    fn screen(&self) -> &StructuralScreen {
        self.screen.get_or_init(|| {
            screen(&self.graph, self.ground, SearchMode::TopIasgl).expect("ground set within cap")
        })
    }

    fn zero_vertex(&self, f: &Labeling) -> Option<usize> {
        f.zero_vertex(&self.graph)
    }

    fn is_discrete_family(&self, f: &Labeling) -> bool {
        f.image().len() == (1 << self.n()) - 1
    }

    fn is_graceful_star(&self) -> bool {
        self.structure
            .is_star_with_leaves(self.ground.graceful_edge_count())
    }

    fn witness(&self, labeling: Option<&Labeling>, detail: String) -> Witness {
        Witness {
            graph: self.graph.clone(),
            ground: self.ground,
            labeling: labeling.cloned(),
            detail,
        }
    }
}

enum Verdict {
    Pass,
    Fail(Box<Witness>),
    Vacuous,
}

impl Verdict {
    fn fail(w: Witness) -> Self {
        Verdict::Fail(Box::new(w))
    }
}

struct Tally {
    checked: u64,
    passes: u64,
    failures: u64,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            passes: 0,
            failures: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn record(&mut self, verdict: Verdict) {
        self.checked += 1;
        match verdict {
            Verdict::Pass => self.passes += 1,
            Verdict::Vacuous => {}
            Verdict::Fail(w) => {
                self.failures += 1;
                if self.witnesses.len() < MAX_WITNESSES {
                    self.witnesses.push(*w);
                }
            }
        }
    }

    fn holds(&self) -> Holds {
        match (self.failures, self.passes) {
            (0, _) => Holds::Confirmed,
            (_, 0) => Holds::Counterexample,
            _ => Holds::Mixed,
        }
    }
}

struct Context {
    max_vertices: usize,
    grounds: Vec<GroundSet>,
    instances: Vec<Instance>,
}

impl Context {
    fn new(max_vertices: usize, ground_sets: &[GroundSet]) -> Result<Self, Error> {
        if max_vertices == 0 || max_vertices > ENUMERATION_CAP {
            return Err(Error::Infeasible {
                what: "oracle graph order",
                requested: max_vertices,
                cap: ENUMERATION_CAP,
            });
        }
        for x in ground_sets {
            x.require_size_at_most(ORACLE_GROUND_CAP, "oracle ground set size")?;
        }
        let graphs = connected_graphs_up_to(max_vertices)?;
        let mut instances = Vec::with_capacity(graphs.len() * ground_sets.len());
        for &ground in ground_sets {
            for g in &graphs {
                instances.push(Instance {
                    structure: g.structure(),
                    graph: g.clone(),
                    ground,
                    iasgl: OnceCell::new(),
                    top_iasl: OnceCell::new(),
                    top_iasgl: OnceCell::new(),
                    screen: OnceCell::new(),
                });
            }
        }
        Ok(Context {
            max_vertices,
            grounds: ground_sets.to_vec(),
            instances,
        })
    }

    fn run(&self, id: TheoremId) -> TheoremReport {
        let mut tally = Tally::new();
        match id {
            TheoremId::TReal => self.check_realisation(&mut tally),
            _ => {
                for inst in &self.instances {
                    let verdict = if inst.nontrivial() {
                        check_instance(id, inst, &mut tally.notes)
                    } else {
                        Verdict::Vacuous
                    };
                    tally.record(verdict);
                }
            }
        }
        finish_notes(id, self, &mut tally);
        TheoremReport {
            theorem_id: id,
            max_vertices: self.max_vertices,
            ground_sets: self.grounds.clone(),
            instances_checked: tally.checked,
            failures: tally.failures,
            holds: tally.holds(),
            documented: id.documented(),
            witnesses: tally.witnesses,
            notes: tally.notes,
        }
    }

    fn check_realisation(&self, tally: &mut Tally) {
        for &x in &self.grounds {
            let topologies = enumerate_topologies(x, false).expect("ground set within cap");
            for t in topologies {
                let applicable = t.contains(IntSet::zero()) && t.len() >= 3;
                let verdict = match (applicable, realize_topology(&t)) {
                    (true, Ok((g, f))) => {
                        let report = verify_top_iasl(&g, &f);
                        let family_matches = crate::topology::label_family(&f)
                            .into_iter()
                            .eq(t.opens().iter().copied());
                        if report.verdict() && family_matches {
                            Verdict::Pass
                        } else {
                            Verdict::fail(Witness {
                                graph: g,
                                ground: x,
                                labeling: Some(f),
                                detail: format!("realisation of {t} does not verify"),
                            })
                        }
                    }
                    (true, Err(e)) => Verdict::fail(Witness {
                        graph: Graph::new(),
                        ground: x,
                        labeling: None,
                        detail: format!("realisation of {t} failed: {e}"),
                    }),
                    (false, Ok(_)) => Verdict::fail(Witness {
                        graph: Graph::new(),
                        ground: x,
                        labeling: None,
                        detail: format!(
                            "{t} is outside the construction's hypotheses but was realised"
                        ),
                    }),
                    (false, Err(_)) => Verdict::Vacuous,
                };
                tally.record(verdict);
            }
        }
    }
}

fn first_failing(
    labelings: &[Labeling],
    mut fails: impl FnMut(&Labeling) -> Option<String>,
) -> Option<(&Labeling, String)> {
    labelings.iter().find_map(|f| fails(f).map(|d| (f, d)))
}

fn from_labelings(
    inst: &Instance,
    labelings: &[Labeling],
    fails: impl FnMut(&Labeling) -> Option<String>,
) -> Verdict {
    if labelings.is_empty() {
        return Verdict::Vacuous;
    }
    match first_failing(labelings, fails) {
        Some((f, detail)) => Verdict::fail(inst.witness(Some(f), detail)),
        None => Verdict::Pass,
    }
}

fn check_instance(id: TheoremId, inst: &Instance, notes: &mut Vec<String>) -> Verdict {
    let g = &inst.graph;
    let s = &inst.structure;
    let n = inst.n();
    let pendants = s.pendant_vertices.len();
    match id {
        TheoremId::P1 => from_labelings(inst, inst.iasgl(), |f| {
            inst.zero_vertex(f)
                .is_none()
                .then(|| "no vertex is labeled {0}".into())
        }),
        TheoremId::P2 => from_labelings(inst, inst.iasgl(), |_| {
            (pendants + 1 < n)
                .then(|| format!("{pendants} pendant vertices, claim requires {}", n - 1))
        }),
        TheoremId::P3 => {
            let needed = 1 + (1usize << (n - 1));
            from_labelings(inst, inst.iasgl(), |f| match inst.zero_vertex(f) {
                None => Some("no vertex is labeled {0}".into()),
                Some(z) if g.degree(z) < needed => Some(format!(
                    "the {{0}}-vertex {} has {} neighbours, claim requires {needed}",
                    g.name(z),
                    g.degree(z)
                )),
                Some(_) => None,
            })
        }
        TheoremId::P4 => {
            let top = inst.ground.max_element();
            from_labelings(inst, inst.iasgl(), |f| max_element_misplaced(inst, f, top))
        }
        TheoremId::TEven => from_labelings(inst, inst.iasgl(), |_| {
            (g.edge_count() % 2 == 1).then(|| format!("{} edges", g.edge_count()))
        }),
        TheoremId::TChar => {
            let c = &inst.screen().classification;
            let others = || c.per_subset.iter().filter(|f| !f.set.is_zero_singleton());
            let not_summand = others().filter(|f| !f.is_nontrivial_summand).count();
            let not_both = others()
                .filter(|f| !f.is_nontrivial_sumset || !f.is_nontrivial_summand)
                .count();
            let rho_prime = c.rho_prime;
            from_labelings(inst, inst.iasgl(), |f| {
                let Some(z) = inst.zero_vertex(f) else {
                    return Some("(a) fails: no vertex is labeled {0}".into());
                };
                let mut failed = Vec::new();
                if pendants != not_summand {
                    failed.push(format!(
                        "(b) {pendants} pendant vertices, {not_summand} non-summands"
                    ));
                }
                if g.degree(z) != not_both {
                    failed.push(format!(
                        "(c) {{0}}-vertex degree {}, count {not_both}",
                        g.degree(z)
                    ));
                }
                let pendant_nbrs = g.pendant_neighbor_count(z);
                if pendant_nbrs < rho_prime {
                    failed.push(format!("(d) {pendant_nbrs} pendant neighbours of the {{0}}-vertex, rho' = {rho_prime}"));
                }
                (!failed.is_empty()).then(|| failed.join("; "))
            })
        }
        TheoremId::TTree => {
            if !s.is_tree {
                return Verdict::Vacuous;
            }
            let found = !inst.iasgl().is_empty();
            let star = inst.is_graceful_star();
            if found == star {
                Verdict::Pass
            } else {
                let detail = if found {
                    format!(
                        "tree admits an IASGL but is not K_{{1,{}}}",
                        inst.ground.graceful_edge_count()
                    )
                } else {
                    "graceful star admits no IASGL".into()
                };
                Verdict::fail(inst.witness(inst.iasgl().first(), detail))
            }
        }
        TheoremId::TTopPend => from_labelings(inst, inst.top_iasl(), |_| {
            (pendants == 0).then(|| "Top-IASL graph without pendant vertices".into())
        }),
        TheoremId::TMaxEl => {
            let top = inst.ground.max_element();
            from_labelings(inst, inst.top_iasl(), |f| {
                max_element_misplaced(inst, f, top)
            })
        }
        TheoremId::TDisc => {
            let discrete = inst.top_iasl().iter().find(|f| inst.is_discrete_family(f));
            let needed = 1usize << (n - 1);
            let hub = (0..g.vertex_count()).any(|v| g.pendant_neighbor_count(v) >= needed);
            match (discrete, hub) {
                (Some(_), true) | (None, false) => Verdict::Pass,
                (Some(f), false) => Verdict::fail(inst.witness(
                    Some(f),
                    format!("discrete Top-IASL but no vertex has {needed} pendant neighbours"),
                )),
                (None, true) => {
                    let why = if g.vertex_count() + 1 != 1 << n {
                        format!(
                            " (a discrete Top-IASL needs exactly {} vertices)",
                            (1usize << n) - 1
                        )
                    } else {
                        String::new()
                    };
                    Verdict::fail(inst.witness(
                        None,
                        format!("a vertex has {needed} pendant neighbours but no discrete Top-IASL exists{why}"),
                    ))
                }
            }
        }
        TheoremId::TTreq => {
            if !s.is_tree {
                return Verdict::Vacuous;
            }
            let iasgl = inst.iasgl().first();
            let top = inst.top_iasgl().first();
            match (iasgl, top) {
                (Some(_), Some(_)) | (None, None) => Verdict::Pass,
                (Some(f), None) => Verdict::fail(
                    inst.witness(Some(f), "tree has an IASGL but no Top-IASGL".into()),
                ),
                (None, Some(f)) => {
                    Verdict::fail(inst.witness(Some(f), "tree has a Top-IASGL but no IASGL".into()))
                }
            }
        }
        TheoremId::TAcyc => {
            if !s.is_tree {
                return Verdict::Vacuous;
            }
            match inst.top_iasgl().first() {
                None => Verdict::Vacuous,
                Some(_) if inst.is_graceful_star() => Verdict::Pass,
                Some(f) => Verdict::fail(inst.witness(
                    Some(f),
                    format!(
                        "acyclic Top-IASGL graph is not K_{{1,{}}}",
                        inst.ground.graceful_edge_count()
                    ),
                )),
            }
        }
        TheoremId::TReg => {
            if s.regular_degree.is_none() {
                return Verdict::Vacuous;
            }
            match inst.top_iasgl().first() {
                None => Verdict::Pass,
                Some(f) => Verdict::fail(inst.witness(
                    Some(f),
                    format!(
                        "{}-regular graph admits a Top-IASGL",
                        s.regular_degree.unwrap_or(0)
                    ),
                )),
            }
        }
        TheoremId::TNsc => {
            let sc = inst.screen();
            let found = inst.top_iasgl().first();
            let base = sc.edge_count_ok && sc.vertex_count_ok && sc.max_degree_ok;
            let by_statement = base && sc.pendant_count_ok_reading_a;
            let by_proof = base && sc.pendant_count_ok_reading_b;
            let describe = |reading: &str, holds: bool| match (found.is_some(), holds) {
                (true, false) => Some(format!(
                    "reading {reading}: Top-IASGL exists but the conditions fail"
                )),
                (false, true) => Some(format!(
                    "reading {reading}: conditions hold but no Top-IASGL exists"
                )),
                _ => None,
            };
            if let Some(d) = describe("B", by_proof) {
                notes.push(format!("{} over {}: {d}", g.describe(), inst.ground));
            }
            match describe("A", by_statement) {
                None => Verdict::Pass,
                Some(d) => Verdict::fail(inst.witness(found, d)),
            }
        }
        TheoremId::TDiscGl => {
            let discrete = inst.top_iasgl().iter().find(|f| inst.is_discrete_family(f));
            let star = inst.is_graceful_star();
            match (discrete, star) {
                (Some(_), true) | (None, false) => Verdict::Pass,
                (Some(f), false) => Verdict::fail(inst.witness(
                    Some(f),
                    format!(
                        "discrete Top-IASGL on a graph other than K_{{1,{}}}",
                        inst.ground.graceful_edge_count()
                    ),
                )),
                (None, true) => Verdict::fail(
                    inst.witness(None, "graceful star has no discrete Top-IASGL".into()),
                ),
            }
        }
        TheoremId::TReal => unreachable!("handled per topology"),
    }
}

fn max_element_misplaced(inst: &Instance, f: &Labeling, top: u32) -> Option<String> {
    let g = &inst.graph;
    let z = inst.zero_vertex(f);
    for v in 0..g.vertex_count() {
        let label = f.get(g.name(v))?;
        if !label.contains(top) {
            continue;
        }
        let ok = g.degree(v) == 1 && z.is_some_and(|z| g.is_adjacent(v, z));
        if !ok {
            return Some(format!(
                "vertex {} labeled {label} is not a pendant neighbour of the {{0}}-vertex",
                g.name(v)
            ));
        }
    }
    None
}

fn finish_notes(id: TheoremId, ctx: &Context, tally: &mut Tally) {
    match id {
        TheoremId::P4 => {
            // the claim can also be read in the opposite direction
            let mut count = 0;
            for inst in ctx.instances.iter().filter(|i| i.nontrivial()) {
                let top = inst.ground.max_element();
                for f in inst.iasgl() {
                    let Some(z) = inst.zero_vertex(f) else { continue };
                    let g = &inst.graph;
                    let lacking = g
                        .neighbors(z)
                        .filter(|&w| g.degree(w) == 1)
                        .any(|w| f.get(g.name(w)).is_some_and(|l| !l.contains(top)));
                    if lacking {
                        count += 1;
                    }
                }
            }
            tally.notes.push(format!(
                "literal direction (pendant neighbour of the {{0}}-vertex => label contains max X) fails on {count} labelings"
            ));
        }
        TheoremId::TAcyc => {
            let mut literal_fail = 0;
            let mut exponent_ok = 0;
            for inst in ctx.instances.iter().filter(|i| i.nontrivial() && i.structure.is_tree) {
                if inst.top_iasgl().is_empty() {
                    continue;
                }
                let leaves = inst.graph.vertex_count() - 1;
                if inst.is_graceful_star() {
                    exponent_ok += 1;
                }
                // r = 2^|X| in the exponent: K_{1, 2^(2^|X|) - 2}
                let literal = 1u64.checked_shl(1 << inst.n()).map(|p| p - 2);
                if literal != Some(leaves as u64) {
                    literal_fail += 1;
                }
            }
            tally.notes.push(format!(
                "|X|-exponent reading K_{{1,2^|X|-2}} matches {exponent_ok} acyclic Top-IASGL graphs; \
                 literal reading K_{{1,2^(2^|X|)-2}} is contradicted by {literal_fail}"
            ));
        }
        TheoremId::TNsc => {
            let reading_b = tally.notes.len();
            tally.notes.truncate(MAX_WITNESSES);
            tally.notes.push(format!(
                "mismatches: reading A {}, reading B {reading_b}; supported reading: {}",
                tally.failures,
                match (tally.failures, reading_b as u64) {
                    (0, 0) => "both",
                    (0, _) => "A",
                    (_, 0) => "B",
                    _ => "neither",
                }
            ));
        }
        TheoremId::TDisc => tally.notes.push(
            "a Top-IASL for the discrete topology uses every non-empty subset once, so it needs exactly 2^|X|-1 vertices"
                .into(),
        ),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(s: &str) -> GroundSet {
        s.parse().unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!(
            "T-nope".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn empty_ground_sets() {
        assert!(run_all(6, &[]).unwrap().is_empty());
    }

    #[test]
    fn single_vertex_scope() {
        let x = [ground("{0,1}")];
        for id in TheoremId::ALL {
            let r = run_oracle(id, 1, &x).unwrap();
            assert_eq!(r.holds, Holds::Confirmed, "{id}");
            if id != TheoremId::TReal {
                assert_eq!(r.instances_checked, 1, "{id}");
            }
        }
    }

    #[test]
    fn adjacency_count_counterexample() {
        let r = run_oracle(TheoremId::P3, 3, &[ground("{0,1}")]).unwrap();
        assert_eq!(r.holds, Holds::Counterexample);
        let w = &r.witnesses[0];
        assert!(w.graph.structure().is_star_with_leaves(2));
        assert!(w.detail.contains("2 neighbours"));
    }

    #[test]
    fn scope_limits() {
        assert!(run_oracle(TheoremId::P1, 8, &[ground("{0,1}")]).is_err());
        assert!(run_oracle(TheoremId::P1, 3, &[ground("{0,1,2,3}")]).is_err());
    }
}
