//! The constant graph at the published parameters and under perturbations.

use leastprime::config::Effort;
use leastprime::graph::{derive_all, NodeKind, NodeStatus, ParamSet};
use leastprime::interval::{consts, Adjudication};
use leastprime::verify::locate_g0;
use leastprime::Interval;

fn published() -> leastprime::graph::ConstantGraph {
    derive_all(&ParamSet::published(), &Effort::default()).expect("published parameters evaluate")
}

#[test]
fn headline_exponent_is_exact() {
    let g = published();
    let a1 = g.value("A_1").unwrap();
    assert_eq!(a1, Interval::point(12577.0));
    let c16 = g.value("c16").unwrap();
    let c23 = g.value("c23").unwrap();
    assert_eq!(a1, (c16 * 4.0).max(c23 * 5.0));
    assert_eq!(g.get("A_1").unwrap().status, NodeStatus::Verified);
}

#[test]
fn printed_constants_adjudicate() {
    let g = published();
    let ids = [
        "alpha_1",
        "alpha_3",
        "alpha_4",
        "mu_1",
        "nu_1",
        "mu_2",
        "nu_2",
        "alpha_7",
        "a_density_1",
        "a_density_2",
        "a_density_3",
        "a_density_4",
        "B_1",
        "B_2",
        "alpha_12",
        "c_7_real",
        "c_7_imag",
        "c_7_nontrivial",
        "c_8_real",
        "c_8_imag",
        "c_8_nontrivial",
        "c_10",
        "c_12",
        "c_13",
        "c_14",
        "c_15",
        "c_15_prime",
        "c_20",
        "c_21",
        "c_7_cor",
        "c_8_cor",
        "phi_6_at_1",
        "phi_7_at_1",
        "G_0",
    ];
    for id in ids {
        let n = g.get(id).unwrap_or_else(|| panic!("missing node {id}"));
        let a = n.adjudication.unwrap_or_else(|| panic!("{id} has no printed value"));
        assert!(matches!(a, Adjudication::Confirms | Adjudication::Tighter), "{id}: {a:?} with {}", n.enclosure);
    }
    assert!(g.contradictions().is_empty());
    assert!(g.failures().is_empty());
}

#[test]
fn integral_constants_match_closed_forms() {
    let g = published();
    let mu1 = g.value("mu_1").unwrap();
    let r = Interval::point(101.0).powf(-1.5).unwrap();
    let closed1 = ((r + 1.0) / (r.rsub_one())).sqr() * 0.75;
    assert!(!mu1.intersect(&closed1).is_empty(), "{mu1} vs {closed1}");
    let mu2 = g.value("mu_2").unwrap();
    let closed2 = ((consts::pi() * consts::ln10() * 10.0).sqrt().unwrap() * 2.0).recip();
    assert!(!mu2.intersect(&closed2).is_empty(), "{mu2} vs {closed2}");
    assert!(mu1.width() <= 1e-7 && mu2.width() <= 1e-7);
}

trait OneMinus {
    fn rsub_one(self) -> Interval;
}

impl OneMinus for Interval {
    fn rsub_one(self) -> Interval {
        Interval::ONE - self
    }
}

#[test]
fn g0_is_rederived() {
    let loc = locate_g0(1e-9).unwrap();
    assert!(loc.padded.contains(-0.121585107));
    assert!(loc.padded.width() <= 2e-8);
    assert!(loc.enclosure.hi() <= 0.0);
    let g = published();
    assert!(g.value("G_0").unwrap().contains(-0.121585107) || g.value("G_0").unwrap().lo() > -0.121585107);
    let ax = g.get("kadiri_G0").unwrap();
    assert_eq!(ax.kind, NodeKind::Axiom);
}

#[test]
fn axioms_carry_citations() {
    let g = published();
    let axioms = g.list_axioms();
    assert!(axioms.len() >= 5);
    for a in &axioms {
        assert!(!a.citation.is_empty(), "{} has no citation", a.id);
    }
    let alpha5 = axioms.iter().find(|a| a.id == "alpha_5").unwrap();
    assert!(alpha5.independent_enclosure.is_none());
}

#[test]
fn evaluation_is_deterministic() {
    let a = published();
    let b = published();
    for (x, y) in a.nodes().iter().zip(b.nodes()) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.enclosure.lo().to_bits(), y.enclosure.lo().to_bits(), "{}", x.id);
        assert_eq!(x.enclosure.hi().to_bits(), y.enclosure.hi().to_bits(), "{}", x.id);
    }
}

#[test]
fn higher_precision_keeps_adjudications_and_narrows_integrals() {
    let base = published();
    let fine = derive_all(&ParamSet::published(), &Effort::default().with_precision(73).unwrap()).unwrap();
    for (x, y) in base.nodes().iter().zip(fine.nodes()) {
        assert_eq!(x.adjudication, y.adjudication, "{}", x.id);
        assert!(!x.enclosure.intersect(&y.enclosure).is_empty() || x.enclosure.is_empty(), "{}", x.id);
    }
    for id in ["mu_1", "mu_2", "nu_1", "nu_2"] {
        let (w0, w1) = (base.value(id).unwrap().width(), fine.value(id).unwrap().width());
        assert!(w1 <= w0, "{id}: {w1} > {w0}");
    }
}

#[test]
fn dependency_edges_follow_the_definitions() {
    let g = published();
    assert!(g.get("alpha_1").unwrap().deps.iter().any(|d| d == "alpha_0"));
    assert!(g.get("c_12").unwrap().deps.iter().any(|d| d == "c_7_nontrivial"));
    let dot = g.to_dot();
    assert!(dot.contains("\"alpha_0\" -> \"alpha_1\";"));
    assert!(dot.contains("\"c_7_nontrivial\" -> \"c_12\";"));
}

#[test]
fn c8_decreases_in_the_power_sum_parameter() {
    let mut last = f64::INFINITY;
    for c in [12.5, 16.0, 24.0, 32.0, 48.0] {
        let mut p = ParamSet::published();
        p.set("c_check_real", c).unwrap();
        let v = derive_all(&p, &Effort::default()).unwrap().value("c_8_raw_real").unwrap();
        assert!(v.hi() < last, "č = {c}: {v}");
        last = v.lo();
    }
}

#[test]
fn a1_is_nondecreasing_in_c16_and_c23() {
    let a1 = |name: &str, v: f64| {
        let mut p = ParamSet::published();
        p.set(name, v).unwrap();
        derive_all(&p, &Effort::default()).unwrap().value("A_1").unwrap()
    };
    for name in ["c16", "c23"] {
        let mut last = Interval::point(0.0);
        for v in [100.0, 179.0, 1000.0, 3144.25, 4000.0] {
            let x = a1(name, v);
            assert!(x.lo() >= last.hi(), "{name} = {v}: {x} after {last}");
            last = x;
        }
    }
}

#[test]
fn density_and_repulsion_coefficients_are_distinct() {
    let mut p = ParamSet::published();
    p.set("sigma_density_long", 2.0).unwrap();
    p.set("sigma0_dh_real", 2.0).unwrap();
    let g = derive_all(&p, &Effort::default()).unwrap();
    for k in 1..=4 {
        let a = g.value(&format!("a_density_{k}")).unwrap();
        let b = g.value(&format!("a_dh_{k}_real")).unwrap();
        assert!(a.is_disjoint(&b), "k = {k}: {a} and {b} coincide");
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    let mut p = ParamSet::published();
    p.set("b_zfr", 3.0).unwrap();
    assert!(matches!(derive_all(&p, &Effort::default()), Err(leastprime::Error::InvalidParams(_))));
}
