use iasl_core::{
    run_all, verify_iasgl, verify_top_iasgl, verify_top_iasl, GroundSet, Holds, SearchMode,
    TheoremId,
};

#[test]
fn witnesses_reverify_and_only_documented_checks_fail() {
    let grounds: Vec<GroundSet> = ["{0,1}", "{0,1,2}"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let reports = run_all(6, &grounds).unwrap();
    assert_eq!(reports.len(), 16);
    for r in &reports {
        assert!(
            !r.is_undocumented_counterexample(),
            "{}: {:?}",
            r.theorem_id,
            r.witnesses
        );
        if r.holds != Holds::Confirmed {
            assert!(!r.witnesses.is_empty());
        }
        for w in &r.witnesses {
            let Some(f) = &w.labeling else { continue };
            let report = match r.theorem_id.witness_class().unwrap() {
                SearchMode::Iasgl => verify_iasgl(&w.graph, f),
                SearchMode::TopIasl => verify_top_iasl(&w.graph, f),
                SearchMode::TopIasgl => verify_top_iasgl(&w.graph, f),
            };
            assert!(report.verdict(), "{}: {}", r.theorem_id, w.detail);
        }
    }
    let p3 = &reports[2];
    assert_eq!(p3.theorem_id, TheoremId::P3);
    assert!(p3
        .witnesses
        .iter()
        .any(|w| w.graph.structure().is_star_with_leaves(2)));
    assert_eq!(reports, run_all(6, &grounds).unwrap());
}

#[test]
fn tree_and_regular_examples() {
    let x: Vec<GroundSet> = vec!["{0,1,2}".parse().unwrap()];
    let tree = iasl_core::run_oracle(TheoremId::TTree, 7, &x).unwrap();
    assert_eq!(tree.holds, Holds::Confirmed);
    let reg = iasl_core::run_oracle(TheoremId::TReg, 6, &x).unwrap();
    assert_eq!(reg.holds, Holds::Confirmed);
    let real = iasl_core::run_oracle(TheoremId::TReal, 3, &x).unwrap();
    assert_eq!(real.instances_checked, 29);
    assert_eq!(real.holds, Holds::Confirmed);
}
