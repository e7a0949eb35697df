use super::*;

fn run(suite: &str, opts: &HarnessOptions) -> SuiteResult {
    let r = run_suite(suite, opts).unwrap();
    for c in r.failures() {
        eprintln!("{suite} {}: {:?} {:?}", c.id, c.counterexample, c.note);
    }
    r
}

#[test]
fn lemma_suites_at_degree_4() {
    let opts = HarnessOptions::default().with_max_degree(4);
    for s in ["lemma3.2", "lemma3.3"] {
        let r = run(s, &opts);
        assert!(r.passed, "{s}");
        assert_eq!(r.effective_n, Some(4));
    }
}

#[test]
fn section4_suite() {
    let r = run("section4", &HarnessOptions::default());
    assert!(r.passed);
    let basis = |id: &str| r.checks.iter().find(|c| c.id == id).unwrap().note.clone().unwrap();
    assert!(basis("4.1/basis").starts_with("rank 9"));
    assert!(basis("4.2/basis").starts_with("rank 13"));
    assert!(basis("4.1-wrapped/basis").starts_with("rank 9"));
}

#[test]
fn witness_suite() {
    let r = run("prop5.4", &HarnessOptions::default());
    assert!(r.passed);
    assert!(r.checks.iter().any(|c| c.kind == CheckKind::Note));
}

#[test]
fn unknown_suite() {
    assert!(matches!(run_suite("lemma9", &HarnessOptions::default()), Err(HarnessError::UnknownSuite(_))));
}

#[test]
fn controls_pass_only_with_evidence() {
    let c = CheckRecord::new("x", CheckKind::Control, "", "").outcome(None);
    assert!(!c.passed);
    let c = CheckRecord::new("x", CheckKind::Claim, "", "").outcome(Some(Counterexample::detail("d")));
    assert!(!c.passed);
}

#[test]
fn drop_controls_beyond_bound_are_notes() {
    let r = run("lemma3.2", &HarnessOptions::default().with_max_degree(3));
    assert!(r.passed);
    let c = r.checks.iter().find(|c| c.id == "3.2(4)/drop-1").unwrap();
    assert_eq!(c.kind, CheckKind::Note);
}

#[test]
fn product_suite_holds_only_on_some_parameters() {
    let r = run("prop3.5", &HarnessOptions::default());
    assert!(!r.passed);
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(
        failed,
        ["A10(g,1,g)@Z2/product", "A10(g,g,g)@Z4/product", "A9(g,1,g)@Z2/product", "A9(g,g,g)@Z4/product"]
    );
    let cx = |id: &str| r.checks.iter().find(|c| c.id == id).unwrap().counterexample.clone().unwrap();
    assert_eq!(cx("A9(g,1,g)@Z2/product").polynomial.as_deref(), Some("x1:1 x3:g x2:1"));
    assert_eq!(cx("A9(g,g,g)@Z4/product").polynomial.as_deref(), Some("x1:1 x2:g^3"));
    // the factor spans are right everywhere; only the product is off
    assert!(r.checks.iter().filter(|c| c.id.ends_with("-factor") || c.id.ends_with("/control")).all(|c| c.passed));
}

#[test]
fn variant_suite() {
    let r = run("remark3.6", &HarnessOptions::default());
    assert!(r.passed);
}

#[test]
fn exponent_suite() {
    let r = run("thm5.1", &HarnessOptions::default());
    assert!(r.passed);
}

#[test]
fn sampled_suite() {
    let opts = HarnessOptions { seed: 11, ..Default::default() };
    let r = run("sampled", &opts);
    assert!(r.passed);
    assert_eq!(r.checks.len(), 2 * SAMPLED_BODIES.len());
    assert_eq!(r, run("sampled", &opts));
}
