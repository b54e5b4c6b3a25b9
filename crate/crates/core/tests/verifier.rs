//! The inequality suite at the published parameters, and how its verdicts
//! move when the parameters are pushed.

use leastprime::config::Effort;
use leastprime::graph::{derive_all, ConstantGraph, ParamSet};
use leastprime::verify::claims::{verify_c16_feasibility, verify_c23_feasibility, verify_zfr};
use leastprime::verify::{
    locate_g0, run_suite, verify_nonneg, BnbOptions, Region, SuiteStatus, Verdict, VerdictRecord,
};
use leastprime::Interval;

fn graph_with(name: &str, v: f64) -> ConstantGraph {
    let mut p = ParamSet::published();
    p.set(name, v).unwrap();
    derive_all(&p, &Effort::default()).unwrap()
}

fn record(records: &[VerdictRecord], id: &str) -> VerdictRecord {
    records.iter().find(|r| r.claim == id).cloned().unwrap_or_else(|| panic!("no record {id}"))
}

#[test]
fn suite_proves_every_gating_claim() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let out = run_suite(&g, &Effort::default()).unwrap();
    for o in &out {
        let r = &o.record;
        if r.gating {
            assert_eq!(r.verdict, Verdict::Proved, "{}: {:?}", r.claim, r.notes);
            assert!(r.margin.lo() >= 0.0, "{}", r.claim);
        }
    }
    let ids: Vec<&str> = out.iter().map(|o| o.record.claim.as_str()).collect();
    assert!(ids.contains(&"c23_case_ii_shortcut") && ids.contains(&"c23_case_ii_direct"));
    assert_eq!(SuiteStatus::of(out.iter().map(|o| &o.record)), SuiteStatus::Verified);
}

#[test]
fn unbounded_claims_carry_tail_certificates() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let out = run_suite(&g, &Effort::default()).unwrap();
    for id in [
        "g_weight_nonpositive",
        "phi1_positive",
        "phi2_nonnegative",
        "phi6_lower_bound",
        "phi7_lower_bound",
        "c16_case_i",
        "c16_case_ii",
        "c23_case_i",
    ] {
        let r = out.iter().find(|o| o.record.claim == id).unwrap();
        assert!(r.record.tail_handled, "{id} has no tail certificate");
    }
}

#[test]
fn c16_case_i_is_tight() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let recs = verify_c16_feasibility(&g, 60).unwrap();
    let r = record(&recs, "c16_case_i");
    assert_eq!(r.verdict, Verdict::Proved);
    let scale = Interval::point(3144.25).sqr() * 0.9;
    let relative = r.margin / scale;
    assert!(relative.hi() < 1e-3, "relative margin {relative}");
    assert_eq!(record(&recs, "c16_case_ii").verdict, Verdict::Proved);
}

#[test]
fn c16_margins_shrink_toward_the_boundary() {
    let mut last = f64::INFINITY;
    for c in [6000.0, 4000.0, 3500.0, 3200.0, 3144.25] {
        let recs = verify_c16_feasibility(&graph_with("c16", c), 60).unwrap();
        let m = record(&recs, "c16_case_i").margin;
        assert!(m.hi() < last, "c16 = {c}: margin {m} not below {last}");
        last = m.lo();
    }
}

#[test]
fn c23_margins_shrink_toward_the_boundary() {
    let mut last = f64::INFINITY;
    for c in [400.0, 250.0, 179.0, 130.0, 116.0] {
        let recs = verify_c23_feasibility(&graph_with("c23", c), 60).unwrap();
        let m = record(&recs, "c23_case_i").margin;
        assert!(m.hi() < last, "c23 = {c}: margin {m} not below {last}");
        last = m.lo();
    }
}

#[test]
fn small_c16_is_refuted() {
    let recs = verify_c16_feasibility(&graph_with("c16", 100.0), 60).unwrap();
    let r = record(&recs, "c16_case_i");
    assert_eq!(r.verdict, Verdict::Refuted, "{:?}", r.notes);
    assert!(r.margin.hi() < 0.0);
}

#[test]
fn small_c23_is_refuted() {
    let recs = verify_c23_feasibility(&graph_with("c23", 10.0), 60).unwrap();
    let r = record(&recs, "c23_case_i");
    assert_eq!(r.verdict, Verdict::Refuted, "{:?}", r.notes);
    assert!(r.margin.hi() < 0.0);
}

#[test]
fn case_ii_reports_both_routes() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let recs = verify_c23_feasibility(&g, 60).unwrap();
    let shortcut = record(&recs, "c23_case_ii_shortcut");
    let direct = record(&recs, "c23_case_ii_direct");
    assert!(!shortcut.gating && !direct.gating);
    assert!(shortcut.notes.iter().any(|n| n.contains("2c₁₉c₂₃ − 1")));
    assert!(!direct.notes.is_empty());
}

#[test]
fn zero_free_width_at_published_and_degenerate_parameters() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let r = verify_zfr(&g).unwrap();
    assert_eq!(r.verdict, Verdict::Proved);
    assert!(r.margin.lo() > 0.0);
    // b = 4 is recorded, not asserted.
    let r4 = verify_zfr(&graph_with("b_zfr", 4.0)).unwrap();
    println!("b = 4: {:?}, margin {}", r4.verdict, r4.margin);
    assert!(!r4.margin.is_empty());
}

#[test]
fn inflated_b13_is_refuted() {
    let g = derive_all(&ParamSet::published(), &Effort::default()).unwrap();
    let mut nodes = g.nodes().to_vec();
    let b13 = nodes.iter_mut().find(|n| n.id == "B_13").unwrap();
    b13.enclosure = b13.enclosure * 100.0;
    let r = verify_zfr(&ConstantGraph::from_nodes(nodes)).unwrap();
    assert_eq!(r.verdict, Verdict::Refuted);
}

#[test]
fn refutations_come_with_checkable_witnesses() {
    let f = |b: &[Interval]| Ok(b[0].sqr() - 0.25);
    let r = verify_nonneg("parabola", &f, &Region::line(-1.0, 1.0), &BnbOptions::default());
    assert_eq!(r.verdict, Verdict::Refuted);
    let w = r.witness.expect("witness box");
    assert!(f(&w).unwrap().hi() < 0.0);
    let r = verify_nonneg(
        "minus_one",
        &|_: &[Interval]| Ok(Interval::point(-1.0)),
        &Region::line(0.0, 1.0),
        &BnbOptions::default(),
    );
    assert_eq!(r.verdict, Verdict::Refuted);
    assert!(r.witness.is_some());
}

#[test]
fn depth_limit_gives_undecided_not_proved() {
    // x² ≥ 0 is true but touches zero; a strict check can never certify it.
    let f = |b: &[Interval]| Ok(b[0].sqr());
    let r = verify_nonneg("touching", &f, &Region::line(-1.0, 1.0), &BnbOptions::with_depth(8).strict(true));
    assert_ne!(r.verdict, Verdict::Proved);
}

#[test]
fn g0_agrees_with_nonpositivity() {
    let loc = locate_g0(1e-9).unwrap();
    assert!(loc.enclosure.hi() <= 0.0);
    assert!(loc.argmin.hi() < 10.0);
}
