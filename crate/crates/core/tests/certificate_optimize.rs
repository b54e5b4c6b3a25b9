//! Certificate serialization and the parameter search.

use leastprime::certificate::{Certificate, SCHEMA_VERSION};
use leastprime::config::Effort;
use leastprime::graph::{derive_all, ParamSet};
use leastprime::optimize::{best_row, evaluate_point, refine, sweep, Axis, Objective, SweepSpec};
use leastprime::verify::run_suite;
use leastprime::{Error, Interval};

fn full_certificate() -> Certificate {
    let effort = Effort::default();
    let params = ParamSet::published();
    let g = derive_all(&params, &effort).unwrap();
    let claims = run_suite(&g, &effort).unwrap();
    let mut c = Certificate::new(&params, &effort, &g).with_claims(claims);
    c.push_timing("derive", 0.25);
    c
}

#[test]
fn certificate_round_trips() {
    let c = full_certificate();
    let text = c.to_json();
    let back = Certificate::from_json(&text).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_json(), text);
    for (a, b) in c.nodes.iter().zip(&back.nodes) {
        assert_eq!(a.enclosure.lo().to_bits(), b.enclosure.lo().to_bits(), "{}", a.id);
        assert_eq!(a.enclosure.hi().to_bits(), b.enclosure.hi().to_bits(), "{}", a.id);
    }
}

#[test]
fn certificate_endpoints_are_strings() {
    let c = full_certificate();
    let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    let a1 = v["nodes"].as_array().unwrap().iter().find(|n| n["id"] == "A_1").unwrap();
    assert!(a1["enclosure"]["lo"].is_string() && a1["enclosure"]["hi"].is_string());
    assert_eq!(a1["enclosure"]["lo"].as_str().unwrap().parse::<f64>().unwrap(), 12577.0);
}

#[test]
fn certificate_schema_is_gated() {
    let mut c = full_certificate();
    c.schema_version = SCHEMA_VERSION + 1;
    assert!(matches!(Certificate::from_json(&c.to_json()), Err(Error::Parse(_))));
    assert!(Certificate::from_json("{").is_err());
}

#[test]
fn certificate_lists_axioms_and_discrepancies() {
    let c = full_certificate();
    assert!(c.axioms.iter().any(|a| a.id == "kadiri_G0"));
    assert!(c.node("G_0").is_some());
    assert!(!c.discrepancies.is_empty());
    assert_eq!(c.status().exit_code(), 0);
}

#[test]
fn published_parameters_are_feasible() {
    for o in Objective::ALL {
        let ev = evaluate_point(&ParamSet::published(), &Effort::default(), o);
        assert!(ev.feasible, "{}: {:?}", o.name(), ev.issues);
    }
}

#[test]
fn empty_spec_is_an_empty_table() {
    let spec = SweepSpec::from_toml("").unwrap();
    assert!(sweep(&spec, &Effort::default()).unwrap().is_empty());
}

#[test]
fn c16_ladder_flags() {
    let spec = SweepSpec {
        axes: vec![Axis::ladder("c16", &[3000.0, 3144.25, 3500.0])],
        objective: Objective::MinimizeC16,
        base: ParamSet::published(),
    };
    let rows = sweep(&spec, &Effort::default()).unwrap();
    assert_eq!(rows.len(), 3);
    println!("c16 = 3000 feasible: {}", rows[0].feasible);
    assert!(rows[1].feasible && rows[2].feasible);
    let again = sweep(&spec, &Effort::default()).unwrap();
    assert_eq!(rows, again);
}

#[test]
fn sigma_sweep_minimum_is_near_the_published_choice() {
    let spec = SweepSpec {
        axes: vec![Axis::range("sigma_density_short", 2.0, 3.0, 101)],
        objective: Objective::MinimizeZeroCount,
        base: ParamSet::published(),
    };
    let rows = sweep(&spec, &Effort::default()).unwrap();
    let best = best_row(&rows, spec.objective).unwrap();
    let sigma = best.values[0].1;
    assert!((sigma - 2.45).abs() <= 0.05, "best σ = {sigma}");
}

#[test]
fn refine_a1_never_exceeds_the_seed() {
    let out = refine(&ParamSet::published(), Objective::MinimizeA1, 2, &Effort::default()).unwrap();
    assert!(out.objective.hi() <= 12577.0);
    let ev = evaluate_point(&out.params, &Effort::default(), Objective::MinimizeA1);
    assert!(ev.feasible);
}

#[test]
fn refine_improves_rigorously() {
    let out = refine(&ParamSet::published(), Objective::MinimizeC23, 1, &Effort::default()).unwrap();
    assert!(out.objective.hi() < out.seed_objective.lo());
    assert!(evaluate_point(&out.params, &Effort::default(), Objective::MinimizeC23).feasible);
}

#[test]
fn refine_rejects_an_infeasible_seed() {
    let mut p = ParamSet::published();
    p.set("c16", 100.0).unwrap();
    assert!(matches!(refine(&p, Objective::MinimizeA1, 1, &Effort::default()), Err(Error::InfeasibleSeed(_))));
}

#[test]
fn objective_enclosures_are_intervals() {
    let ev = evaluate_point(&ParamSet::published(), &Effort::default(), Objective::MaximizeC8);
    let v = ev.objective.unwrap();
    assert!(v.contains(1.0 / 92.0) || v.lo() > 1.0 / 92.0 - 1e-4);
    assert!(!v.is_empty() && v != Interval::EMPTY);
}
