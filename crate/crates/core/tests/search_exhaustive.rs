//! The pruned searches against plain enumeration of every injective vertex
//! labeling, on all connected graphs with at most six vertices.

use std::collections::BTreeSet;

use iasl_core::{
    all_labelings, connected_graphs_up_to, screen, search_iasgl, search_top_iasgl, search_top_iasl,
    verify_adjacent_maxima, verify_iasgl, verify_top_iasgl, verify_top_iasl, Graph, GroundSet,
    SearchMode,
};

type Set = BTreeSet<u32>;

fn nonempty_subsets(x: &[u32]) -> Vec<Set> {
    (1u32..1 << x.len())
        .map(|m| {
            (0..x.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| x[i])
                .collect()
        })
        .collect()
}

fn plus(a: &Set, b: &Set) -> Set {
    a.iter()
        .flat_map(|p| b.iter().map(move |q| p + q))
        .collect()
}

fn is_topology(family: &BTreeSet<Set>, x: &Set) -> bool {
    family.contains(&Set::new())
        && family.contains(x)
        && family.iter().all(|a| {
            family.iter().all(|b| {
                family.contains(&a.union(b).copied().collect())
                    && family.contains(&a.intersection(b).copied().collect())
            })
        })
}

#[derive(Default, Debug, PartialEq)]
struct Counts {
    iasgl: usize,
    top_iasl: usize,
    top_iasgl: usize,
}

fn brute_force(g: &Graph, x: &[u32]) -> Counts {
    let ground: Set = x.iter().copied().collect();
    let labels = nonempty_subsets(x);
    let zero: Set = [0].into();
    let targets: BTreeSet<Set> = labels.iter().filter(|s| **s != zero).cloned().collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.vertex_count();
    let mut counts = Counts::default();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = vec![false; labels.len()];
    fn rec(
        n: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == n {
            visit(chosen);
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                chosen.push(i);
                rec(n, chosen, used, visit);
                chosen.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut chosen, &mut used, &mut |assign| {
        let images: Vec<Set> = edges
            .iter()
            .map(|&(u, v)| plus(&labels[assign[u]], &labels[assign[v]]))
            .collect();
        let image_set: BTreeSet<Set> = images.iter().cloned().collect();
        let graceful = images.len() == targets.len() && image_set == targets;
        let inside = images.iter().all(|s| s.is_subset(&ground));
        let mut family: BTreeSet<Set> = assign.iter().map(|&i| labels[i].clone()).collect();
        family.insert(Set::new());
        let top = inside && is_topology(&family, &ground);
        counts.iasgl += graceful as usize;
        counts.top_iasl += top as usize;
        counts.top_iasgl += (graceful && top) as usize;
    });
    counts
}

fn ground(x: &[u32]) -> GroundSet {
    GroundSet::new(iasl_core::IntSet::from_elements(x.iter().copied()).unwrap()).unwrap()
}

#[test]
fn searches_match_brute_force() {
    let graphs = connected_graphs_up_to(6).unwrap();
    for x in [&[0, 1][..], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3]] {
        let gs = ground(x);
        for g in graphs.iter().filter(|g| g.vertex_count() < 1 << x.len()) {
            let brute = brute_force(g, x);
            let got = Counts {
                iasgl: all_labelings(g, gs, SearchMode::Iasgl).unwrap().len(),
                top_iasl: all_labelings(g, gs, SearchMode::TopIasl).unwrap().len(),
                top_iasgl: all_labelings(g, gs, SearchMode::TopIasgl).unwrap().len(),
            };
            assert_eq!(got, brute, "{g:?} over {gs}");

            let a = search_iasgl(g, gs).unwrap();
            let b = search_top_iasl(g, gs).unwrap();
            let c = search_top_iasgl(g, gs).unwrap();
            assert_eq!(a.found, brute.iasgl > 0);
            assert_eq!(b.found, brute.top_iasl > 0);
            assert_eq!(c.found, brute.top_iasgl > 0);
            assert!(!c.found || (a.found && b.found));
            if let Some(f) = &a.labeling {
                assert!(verify_iasgl(g, f).verdict());
            }
            if let Some(f) = &b.labeling {
                assert!(verify_top_iasl(g, f).verdict());
            }
            if let Some(f) = &c.labeling {
                assert!(verify_top_iasgl(g, f).verdict());
            }
            for mode in [SearchMode::Iasgl, SearchMode::TopIasgl] {
                let found = if mode == SearchMode::Iasgl {
                    brute.iasgl
                } else {
                    brute.top_iasgl
                };
                if found > 0 {
                    assert!(
                        screen(g, gs, mode).unwrap().necessary_conditions_hold(),
                        "{g:?} {mode}"
                    );
                }
            }
        }
    }
}

#[test]
fn found_labelings_satisfy_the_structural_facts() {
    let x = ground(&[0, 1, 2]);
    let top = x.max_element();
    for g in connected_graphs_up_to(6).unwrap() {
        for f in all_labelings(&g, x, SearchMode::Iasgl).unwrap() {
            let z = f.zero_vertex(&g).expect("a vertex labeled {0}");
            assert!(verify_adjacent_maxima(&g, &f).verdict());
            let s = g.structure();
            assert!(s.pendant_vertices.len() + 1 >= x.size());
            assert_eq!(g.edge_count(), x.graceful_edge_count());
            for v in 0..g.vertex_count() {
                if f.get(g.name(v)).unwrap().contains(top) {
                    assert_eq!(g.degree(v), 1);
                    assert!(g.is_adjacent(v, z));
                }
            }
        }
    }
}

#[test]
fn results_are_deterministic() {
    let x = ground(&[0, 1, 2]);
    for g in connected_graphs_up_to(5).unwrap() {
        let first = search_top_iasl(&g, x).unwrap();
        let second = search_top_iasl(&g, x).unwrap();
        assert_eq!(first.labeling, second.labeling);
        assert_eq!(first.nodes_explored, second.nodes_explored);
    }
}
