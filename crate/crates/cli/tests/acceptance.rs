//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use leastprime::certificate::Certificate;
use leastprime::config::Effort;
use leastprime::graph::{derive_all, ConstantGraph, ParamSet};
use leastprime::interval::{consts, Adjudication};
use leastprime::optimize::{evaluate_point, refine, Objective};
use leastprime::sandbox;
use leastprime::verify::claims::{verify_c16_feasibility, verify_c23_feasibility, verify_zfr};
use leastprime::verify::{locate_g0, run_suite, Verdict};
use leastprime::Interval;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn published() -> ConstantGraph {
    derive_all(&ParamSet::published(), &Effort::default()).expect("published parameters evaluate")
}

fn headline() -> Check {
    let g = published();
    let a1 = g.value("A_1").map_err(|e| e.to_string())?;
    let expect = (g.value("c16").unwrap() * 4.0).max(g.value("c23").unwrap() * 5.0);
    ensure(a1 == Interval::point(12577.0) && a1 == expect, format!("A_1 = {a1}"))?;
    Ok(format!("A_1 = {a1}"))
}

fn printed_constants() -> Check {
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
    ];
    let mut tighter = 0;
    for id in ids {
        let n = g.get(id).ok_or(format!("missing {id}"))?;
        match n.adjudication {
            Some(Adjudication::Confirms) => {}
            Some(Adjudication::Tighter) => tighter += 1,
            other => return Err(format!("{id}: {other:?} with {}", n.enclosure)),
        }
    }
    ensure(g.contradictions().is_empty(), "a printed value is contradicted")?;
    Ok(format!("{} nodes, {tighter} tighter, 0 contradicted", ids.len()))
}

fn closed_forms() -> Check {
    let g = published();
    let mu1 = g.value("mu_1").unwrap();
    let r = Interval::point(101.0).powf(-1.5).unwrap();
    let want1 = ((r + 1.0) / (Interval::ONE - r)).sqr() * 0.75;
    let mu2 = g.value("mu_2").unwrap();
    let want2 = ((consts::pi() * consts::ln10() * 10.0).sqrt().unwrap() * 2.0).recip();
    ensure(!mu1.intersect(&want1).is_empty(), format!("mu_1 {mu1} vs {want1}"))?;
    ensure(!mu2.intersect(&want2).is_empty(), format!("mu_2 {mu2} vs {want2}"))?;
    ensure(mu1.width() <= 1e-7 && mu2.width() <= 1e-7, "widths exceed 1e-7")?;
    Ok(format!("widths {:.1e}, {:.1e}", mu1.width(), mu2.width()))
}

fn g0() -> Check {
    let loc = locate_g0(1e-9).map_err(|e| e.to_string())?;
    ensure(loc.padded.contains(-0.121585107) && loc.padded.width() <= 2e-8, format!("{}", loc.padded))?;
    Ok(format!("{} width {:.1e}", loc.padded, loc.padded.width()))
}

fn zfr() -> Check {
    let r = verify_zfr(&published()).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Proved && r.margin.lo() > 0.0, format!("{:?} {}", r.verdict, r.margin))?;
    Ok(format!("margin {:.3e}", r.margin.lo()))
}

fn universal_suite() -> Check {
    let g = published();
    let out = run_suite(&g, &Effort::default()).map_err(|e| e.to_string())?;
    let want = [
        "q_nonnegative",
        "g_weight_nonpositive",
        "f3_increasing",
        "phi1_positive",
        "phi2_nonnegative",
        "phi6_lower_bound",
        "phi7_lower_bound",
    ];
    for id in want {
        let o = out.iter().find(|o| o.record.claim == id).ok_or(format!("no claim {id}"))?;
        ensure(o.record.verdict == Verdict::Proved, format!("{id}: {:?}", o.record.verdict))?;
    }
    let g_tail = out.iter().find(|o| o.record.claim == "g_weight_nonpositive").unwrap();
    ensure(g_tail.record.tail_handled, "no tail certificate on the weight claim")?;
    for id in ["phi_6_at_1", "phi_7_at_1"] {
        let a = g.get(id).and_then(|n| n.adjudication);
        ensure(matches!(a, Some(Adjudication::Confirms | Adjudication::Tighter)), format!("{id}: {a:?}"))?;
    }
    Ok(format!("{} claims proved", want.len()))
}

fn feasibility() -> Check {
    let g = published();
    let c16 = verify_c16_feasibility(&g, 60).map_err(|e| e.to_string())?;
    let c23 = verify_c23_feasibility(&g, 60).map_err(|e| e.to_string())?;
    let get = |recs: &[leastprime::verify::VerdictRecord], id: &str| recs.iter().find(|r| r.claim == id).cloned();
    let i = get(&c16, "c16_case_i").ok_or("no c16_case_i")?;
    let ii = get(&c16, "c16_case_ii").ok_or("no c16_case_ii")?;
    ensure(i.verdict == Verdict::Proved && ii.verdict == Verdict::Proved, "c16 cases not proved")?;
    let rel = (i.margin / (Interval::point(3144.25).sqr() * 0.9)).hi();
    ensure(rel < 1e-3, format!("relative margin {rel:.2e}"))?;
    let c23i = get(&c23, "c23_case_i").ok_or("no c23_case_i")?;
    ensure(c23i.verdict == Verdict::Proved, "c23 case (i) not proved")?;
    let short = get(&c23, "c23_case_ii_shortcut").ok_or("no shortcut route")?;
    let direct = get(&c23, "c23_case_ii_direct").ok_or("no direct route")?;
    ensure(!short.notes.is_empty() && !direct.notes.is_empty(), "case (ii) routes lack notes")?;
    Ok(format!(
        "c16 relative margin {rel:.2e}; case (ii) shortcut {:?}, direct {:?} (informational)",
        short.verdict, direct.verdict
    ))
}

fn sandbox_exact() -> Check {
    let alpha0 = published().value("alpha_0").unwrap();
    let s = sandbox::PrimeSieve::new(1_000_000).map_err(|e| e.to_string())?;
    ensure(s.prime_count(1_000_000) == 78498, "pi(1e6)")?;
    ensure(sandbox::higher_prime_power_count(100).map_err(|e| e.to_string())? == 10, "S(100)")?;
    let pi = sandbox::check_prime_count(1_000_000, alpha0).map_err(|e| e.to_string())?;
    let pp = sandbox::check_prime_power_count(1_000_000, alpha0).map_err(|e| e.to_string())?;
    let limit = 10_000_000;
    let tail = sandbox::check_prime_power_tail(&sandbox::default_tail_samples(limit), limit, alpha0)
        .map_err(|e| e.to_string())?;
    ensure(pi.pass && pp.pass && tail.pass, "a sampled bound fails")?;
    Ok(format!(
        "pi(1e6) = 78498, S(100) = 10, {} + {} + {} points",
        pi.points_checked, pp.points_checked, tail.points_checked
    ))
}

fn fuzz() -> Result<usize, String> {
    let mut runner = TestRunner::new(Config { cases: 100_000, failure_persistence: None, ..Config::default() });
    let strat = (0u8..8, -100.0..100.0f64, 0.0..10.0f64, 0.0..=1.0f64, -100.0..100.0f64);
    runner
        .run(&strat, |(op, lo, w, t, q)| {
            let x = Interval::new(lo, lo + w);
            let p = lo + t * w;
            let (pos, pp) = (x + (1e-3 - lo.min(0.0)), p + (1e-3 - lo.min(0.0)));
            let y = Interval::point(q);
            let (v, over) = match op {
                0 => (p * q, x * y),
                1 => (p / q, x / y),
                2 => (pp.ln(), pos.ln().unwrap()),
                3 => (pp.sqrt(), pos.sqrt().unwrap()),
                4 => ((p * 0.05).exp(), (x * 0.05).exp().unwrap()),
                5 => (p.cos(), x.cos().unwrap()),
                6 => (p.atan(), x.atan().unwrap()),
                _ => (pp.powf(q * 0.01), pos.pow(y * 0.01).unwrap()),
            };
            let slack = 4.0 * f64::EPSILON * v.abs();
            prop_assume!(v.is_finite());
            prop_assert!(over.lo() - slack <= v && v <= over.hi() + slack, "op {op}: {v} outside {over}");
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(100_000)
}

fn derive_with_threads(n: &str, out: &std::path::Path) -> Result<Vec<u8>, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_leastprime"))
        .args(["derive", "--no-timings", "--threads", n, "--out", out.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), format!("derive with {n} threads exited {status}"))?;
    std::fs::read(out).map_err(|e| e.to_string())
}

fn properties() -> Check {
    let cases = fuzz()?;
    let effort = Effort::default();
    let g = published();
    let cert = Certificate::new(&ParamSet::published(), &effort, &g).with_claims(run_suite(&g, &effort).unwrap());
    let back = Certificate::from_json(&cert.to_json()).map_err(|e| e.to_string())?;
    ensure(back == cert, "certificate round trip differs")?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let one = derive_with_threads("1", &dir.path().join("t1.json"))?;
    let eight = derive_with_threads("8", &dir.path().join("t8.json"))?;
    ensure(one == eight, "certificates differ between 1 and 8 threads")?;
    Ok(format!("{cases} fuzz cases, round trip exact, threads 1/8 bit-identical"))
}

fn optimizer() -> Check {
    let effort = Effort::default();
    let ev = evaluate_point(&ParamSet::published(), &effort, Objective::MinimizeA1);
    ensure(ev.feasible, format!("published parameters infeasible: {:?}", ev.issues))?;
    let out = refine(&ParamSet::published(), Objective::MinimizeA1, 1, &effort).map_err(|e| e.to_string())?;
    ensure(out.objective.hi() <= 12577.0, format!("refined A_1 = {}", out.objective))?;
    Ok(format!("refined A_1 = {}", out.objective))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("headline exponent", headline),
        ("printed constants", printed_constants),
        ("closed-form integrals", closed_forms),
        ("G0 re-derivation", g0),
        ("zero-free region", zfr),
        ("universal inequalities", universal_suite),
        ("feasibility thresholds", feasibility),
        ("sandbox exactness", sandbox_exact),
        ("property suites", properties),
        ("optimizer sanity", optimizer),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
