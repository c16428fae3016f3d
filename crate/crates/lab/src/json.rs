//! JSON views of library values. Sets are written as their brace literals so
//! every value can be parsed back.

use iasl_core::{
    Graph, Labeling, SearchOutcome, StructuralScreen, SumsetClassification, TheoremReport,
    Topology, VerificationReport, Witness,
};
use serde_json::{json, Value};

pub const SCHEMA: &str = "iasl-lab/1";

/// Adds the schema tag to a top-level object.
pub fn document(mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema".into(), Value::from(SCHEMA));
    }
    body
}

pub fn graph(g: &Graph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v)| json!([g.name(u), g.name(v)]))
        .collect();
    json!({
        "vertices": g.names().collect::<Vec<_>>(),
        "edges": edges,
        "connected": g.is_connected(),
    })
}

pub fn labeling(f: &Labeling) -> Value {
    let labels: Vec<Value> = f.iter().map(|(v, s)| json!([v, s.to_string()])).collect();
    json!({ "ground": f.ground().to_string(), "labels": labels })
}

pub fn report(r: &VerificationReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.as_str(),
                "where": v.location.to_string(),
                "detail": v.detail,
            })
        })
        .collect();
    json!({ "verdict": r.verdict(), "violations": violations })
}

pub fn classification(c: &SumsetClassification) -> Value {
    let subsets: Vec<Value> = c
        .per_subset
        .iter()
        .map(|f| {
            json!({
                "set": f.set.to_string(),
                "nontrivial_sumset": f.is_nontrivial_sumset,
                "nontrivial_summand": f.is_nontrivial_summand,
                "witness": f.witness.map(|(a, b)| json!([a.to_string(), b.to_string()])),
            })
        })
        .collect();
    json!({
        "ground": c.ground.to_string(),
        "rho": c.rho,
        "rho_prime": c.rho_prime,
        "rho_double_prime": c.rho_double_prime,
        "x_is_sumset": c.x_is_sumset,
        "subsets": subsets,
    })
}

pub fn screen(s: &StructuralScreen) -> Value {
    json!({
        "mode": s.mode.as_str(),
        "edge_count_ok": s.edge_count_ok,
        "vertex_count_ok": s.vertex_count_ok,
        "vertex_capacity_ok": s.vertex_capacity_ok,
        "pendant_lower_bound_ok": s.pendant_lower_bound_ok,
        "pendant_count_ok_reading_a": s.pendant_count_ok_reading_a,
        "pendant_count_ok_reading_b": s.pendant_count_ok_reading_b,
        "max_degree_ok": s.max_degree_ok,
        "proof_degree_ok": s.proof_degree_ok,
        "pendant_count": s.pendant_count,
        "max_degree": s.max_degree,
        "rho": s.classification.rho,
        "rho_prime": s.classification.rho_prime,
        "rho_double_prime": s.classification.rho_double_prime,
        "x_is_sumset": s.classification.x_is_sumset,
        "necessary_conditions_hold": s.necessary_conditions_hold(),
    })
}

pub fn outcome(o: &SearchOutcome) -> Value {
    let mut v = json!({
        "found": o.found,
        "nodes_explored": o.nodes_explored,
        "screen": screen(&o.screen),
    });
    if let Some(f) = &o.labeling {
        v["labeling"] = labeling(f);
    }
    v
}

pub fn topology(t: &Topology) -> Value {
    json!({
        "ground": t.ground().to_string(),
        "opens": t.opens().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "is_topology": true,
    })
}

pub fn witness(w: &Witness) -> Value {
    json!({
        "graph": graph(&w.graph),
        "ground": w.ground.to_string(),
        "labeling": w.labeling.as_ref().map(labeling),
        "detail": w.detail,
    })
}

pub fn theorem_report(r: &TheoremReport) -> Value {
    json!({
        "theorem_id": r.theorem_id.as_str(),
        "claim": r.theorem_id.claim(),
        "scope": {
            "max_vertices": r.max_vertices,
            "ground_sets": r.ground_sets.iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "instances_checked": r.instances_checked,
        "failures": r.failures,
        "holds": r.holds.as_str(),
        "documented": r.documented,
        "witnesses": r.witnesses.iter().map(witness).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}
