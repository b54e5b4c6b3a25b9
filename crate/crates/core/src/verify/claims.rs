//! The named inequalities of the argument.

use super::bnb::{BnbOptions, Region};
use super::record::{conjoin, Verdict, VerdictRecord};
use super::universal::{verify_halfline, verify_monotone, verify_nonneg, Direction, Tail};
use crate::error::Result;
use crate::graph::chain::{eps12_from, eps34_from};
use crate::graph::functions::{self as fx, alpha_6, alpha_7, Eps12, Eps34};
use crate::graph::trigpoly::{expand_q, q_product};
use crate::graph::ConstantGraph;
use crate::interval::{consts, Interval, PrintedValue};
use crate::jet::{Jet, Real};
use crate::sandbox;

/// Right end of the compact core for half-line claims in `log d`.
pub const LOG_D_CUT: f64 = 20.0;

fn ln3() -> f64 {
    consts::ln3().lo()
}

/// `Q(φ) ≥ 0` on a full period, from the product form; the cosine series is
/// cross-checked against it.
pub fn verify_q_nonneg(graph: &ConstantGraph, depth: u32) -> Result<VerdictRecord> {
    let a = graph.value("q_shape_a")?;
    let f = |b: &[Interval]| q_product(a, b[0]);
    let two_pi = (consts::pi() * 2.0).hi();
    let region = Region::line(0.0, two_pi).periodic(0);
    let mut rec = verify_nonneg("q_nonnegative", &f, &region, &BnbOptions::with_depth(depth));
    rec.notes.push("4(1 + cos φ)(a + cos φ)² is a product of nonnegative factors".into());
    let series = expand_q(a)?;
    let mut agree = true;
    for k in 0..=16 {
        let phi = Interval::point(two_pi * k as f64 / 16.0);
        let (s, p) = (series.eval(phi)?, q_product(a, phi)?);
        agree &= !s.intersect(&p).is_empty();
    }
    rec.notes.push(format!("cosine series agrees with the product at 17 sample points: {agree}"));
    if !agree {
        rec.verdict = Verdict::Undecided;
    }
    Ok(rec.with_tail())
}

/// `f₃` increasing on `[1, 1.75]`.
pub fn verify_f3_increasing(depth: u32) -> VerdictRecord {
    verify_monotone("f3_increasing", &|s: Jet| fx::f3(s), 1.0, 1.75, Direction::Increasing, depth)
}

/// `Γ₀` and `Γ₁` increasing on `[1, 2]`.
pub fn verify_gamma_increasing(depth: u32) -> VerdictRecord {
    let parts: Vec<VerdictRecord> = [0, 1]
        .into_iter()
        .map(|a| {
            let shift = Interval::point(a as f64);
            verify_monotone(
                &format!("gamma_{a}"),
                &move |s: Jet| fx::gamma_a(shift, s),
                1.0,
                2.0,
                Direction::Increasing,
                depth,
            )
        })
        .collect();
    conjoin("gamma_increasing", &parts)
}

/// `φ₁ > 0` on `(1/2, ∞)`.
pub fn verify_phi1_positive(depth: u32) -> VerdictRecord {
    // φ₁′(υ) = ((α₆ − 1)υ − 2)/(υ(υ + 2)) ≥ 0 once υ ≥ 2/(α₆ − 1).
    let turn = (Interval::point(2.0) / (alpha_6() - 1.0)).hi();
    let cut = (2.0 * turn).max(50.0);
    let f = |u: Jet| fx::phi1(u);
    let mut rec = verify_halfline(
        "phi1_positive",
        &f,
        0.5,
        cut,
        Tail::Nondecreasing(format!("φ₁′ ≥ 0 for υ ≥ 2/(α₆ − 1) ≤ {turn}")),
        &BnbOptions::with_depth(depth).strict(true),
    );
    if let Ok(v) = fx::phi1(Interval::point(25.0)) {
        rec.notes.push(format!("φ₁(2/(α₆ − 1)) = φ₁(25) ∈ {v}"));
    }
    rec
}

/// `φ₂ ≥ 0` on `[1/2, ∞)`: increasing, and zero at `1/2`.
pub fn verify_phi2_nonneg(depth: u32) -> VerdictRecord {
    let f = |u: Jet| fx::phi2(u);
    let core = verify_monotone("phi2_increasing", &f, 0.5, 100.0, Direction::Increasing, depth);
    let tail = VerdictRecord::new("phi2_tail", Verdict::Proved, Interval::ZERO)
        .with_tail()
        .with_note("[100, ∞): φ₂′(υ) = 2/(υ(υ + 2)) > 0");
    // α₇ − 4/3 = log 5, so φ₂(1/2) = log(1/5) + log 5 = 0 exactly.
    let identity = alpha_7() - Interval::ratio(4, 3) - consts::ln5();
    let at_half = fx::phi2(Interval::point(0.5)).unwrap_or(Interval::EMPTY);
    let exact = identity.contains(0.0) && at_half.contains(0.0);
    let start =
        VerdictRecord::new("phi2_at_half", if exact { Verdict::Proved } else { Verdict::Undecided }, Interval::ZERO)
            .with_note(format!("φ₂(1/2) = 0 by α₇ − 4/3 = log 5; enclosure {at_half}"));
    let mut rec = conjoin("phi2_nonnegative", &[core, tail, start]);
    rec.margin = Interval::ZERO;
    rec
}

/// `φ(υ) ≥ φ(1)·min(1, υ)` for `υ ≥ 0`, with `φ(1)` replaced by the lower
/// end of its enclosure.
fn verify_piecewise<F>(claim: &str, f: F, tail_cut: f64, tail_reason: String, depth: u32) -> Result<VerdictRecord>
where
    F: Fn(Jet) -> Result<Jet> + Sync,
{
    let at_one = f(Jet::constant(Interval::ONE, 0))?.value();
    let c = Interval::point(at_one.lo());
    let opts = BnbOptions::with_depth(depth);
    let below = |u: Jet| Ok(f(u)? - u * c);
    let left = verify_nonneg(
        "unit_interval",
        &|b: &[Interval]| super::bnb::enclose_1d(&below, b[0]),
        &Region::line(0.0, 1.0),
        &opts,
    );
    let above = |u: Jet| Ok(f(u)? - c);
    let right = verify_halfline("beyond_one", &above, 1.0, tail_cut, Tail::Nondecreasing(tail_reason), &opts);
    let mut rec = conjoin(claim, &[left, right]);
    rec.notes.push(format!("φ(1) ∈ {at_one}; bound proved with φ(1) ≥ {}", at_one.lo()));
    Ok(rec)
}

pub fn verify_phi6_lower(depth: u32) -> Result<VerdictRecord> {
    // ((e^{−υ} − e^{−2υ})/υ)² ≤ 1/υ², so φ₆ ≥ 1 − 1/T² past T; that exceeds
    // φ₆(1) when T ≥ 5, and f(T) is checked directly below.
    let t = 8.0;
    let f = |u: Jet| fx::phi6(u);
    let mut rec =
        verify_piecewise("phi6_lower_bound", f, t, format!("φ₆ ≥ 1 − 1/υ² ≥ {} past {t}", 1.0 - 1.0 / (t * t)), depth)?;
    if let Ok(v) = fx::phi6(Interval::point(t)) {
        let floor = Interval::ONE - Interval::point(t).sqr().recip() - fx::phi6(Interval::ONE)?;
        rec.notes.push(format!("φ₆({t}) = {v}; 1 − 1/{t}² − φ₆(1) ∈ {floor}"));
        if floor.lo() <= 0.0 {
            rec.verdict = Verdict::Undecided;
        }
    }
    Ok(rec)
}

pub fn verify_phi7_lower(depth: u32) -> Result<VerdictRecord> {
    verify_piecewise("phi7_lower_bound", |u: Jet| fx::phi7(u), 8.0, "φ₇ is increasing".into(), depth)
}

/// Zero-free width `b₁/(b₀b + B₁₃) − 1/b ≥ 1/29.57`.
pub fn verify_zfr(graph: &ConstantGraph) -> Result<VerdictRecord> {
    let (b0, b1, b, b13) = (graph.value("Q_b0")?, graph.value("Q_b1")?, graph.value("b_zfr")?, graph.value("B_13")?);
    let width = b1 / (b0 * b + b13) - b.recip();
    let target = Interval::ratio(100, 2957);
    Ok(VerdictRecord::from_margin("zero_free_width", width - target, false)
        .with_note(format!("width {width}, target 1/29.57 ∈ {target}; constant 1/width ∈ {}", width.recip())))
}

/// Leading terms of the two cases of the `c₁₆` feasibility inequality.
fn c16_leads(graph: &ConstantGraph, k: &Eps12) -> Result<(Interval, Interval)> {
    let (c12, c13, c14) = (graph.value("c_12")?, graph.value("c_13")?, graph.value("c_14")?);
    let half = Interval::point(0.5);
    let e = c12 * k.c16 * 2.0;
    let nine = Interval::ratio(9, 10);
    let lead1 = nine * k.c16.sqr() - c14 * half.pow(e)?;
    let lead2 = nine * k.c16.powi(3) - c14 * half.pow(e - 1.0)? - c13 * (Interval::point(3.0) / k.c7).sqr();
    Ok((lead1, lead2))
}

/// Both cases of the `c₁₆` feasibility inequality over `log d ≥ log 3`.
pub fn verify_c16_feasibility(graph: &ConstantGraph, depth: u32) -> Result<Vec<VerdictRecord>> {
    let k = eps12_from(graph)?;
    let (lead1, lead2) = c16_leads(graph, &k)?;
    let opts = BnbOptions::with_depth(depth).strict(true);
    let monotone = LOG_D_CUT * k.c16.lo() > 2.0;
    let tail = |what: &str| {
        if monotone {
            Tail::Nondecreasing(format!("every term of {what} decreases for ℓ > 2/c₁₆"))
        } else {
            Tail::Search(format!("{what} not certified monotone"))
        }
    };
    let f1 = |l: Jet| Ok(fx::epsilon1(&k, l)?.rsub(lead1));
    let f2 = |l: Jet| Ok(fx::epsilon2(&k, l)?.rsub(lead2));
    let mut case_i = verify_halfline("c16_case_i", &f1, ln3(), LOG_D_CUT, tail("ε₁"), &opts);
    let mut case_ii = verify_halfline("c16_case_ii", &f2, ln3(), LOG_D_CUT, tail("ε₂"), &opts);
    case_i.notes.push(format!("0.9c₁₆² − c₁₄2^{{−2c₁₂c₁₆}} = {lead1}"));
    case_ii.notes.push(format!("0.9c₁₆³ − c₁₄2^{{1−2c₁₂c₁₆}} − c₁₃(3/c₇)² = {lead2}"));
    case_ii.notes.push("the same case is also stated to hold already at c₁₆ = 1261".into());
    let scale = Interval::ratio(9, 10) * k.c16.sqr();
    case_i.notes.push(format!("relative margin {}", case_i.margin / scale));
    Ok(vec![case_i, case_ii])
}

/// Upper bounds for the terms of the `c₂₃` inequality in case (ii) with
/// `u = −log(1 − β₀) ≤ c₁₀ℓ` substituted directly.
fn direct_route(k: &Eps34, exact: bool, l: Jet) -> Result<Jet> {
    let s = k.c19 * k.c23 * 2.0 - 1.0;
    let u = l * k.c10;
    let pk = k.prime_coeff()?;
    let grow = (u - l * k.c23).exp()?;
    let a = grow * k.c20;
    let c = (u - l * k.c23 * 2.0).exp()? * k.c15p;
    let d = l.pow(Interval::point(1.5))? * grow * pk;
    let b = if exact {
        // Every term increases with u: evaluate at the top of its range.
        (u * -s).exp()? * k.c21
    } else if s.lo() >= 0.0 {
        // u ≥ 2 log(ℓ/c₇) from the upper bound on 1 − β₀.
        (l / k.c7).pow(s * -2.0)? * k.c21
    } else {
        (u * s.mag()).exp()? * k.c21
    };
    Ok((a + b + c + d).rsub(k.c23 * Interval::ratio(9, 10)))
}

/// Case (i) and both routes of case (ii) of the `c₂₃` feasibility inequality.
pub fn verify_c23_feasibility(graph: &ConstantGraph, depth: u32) -> Result<Vec<VerdictRecord>> {
    let k = eps34_from(graph)?;
    let opts = BnbOptions::with_depth(depth).strict(true);
    let e = k.c19 * k.c23 * 4.0;
    let decays = k.c23.lo() * LOG_D_CUT > 2.5;

    let nine = Interval::ratio(9, 10);
    let coef = k.c21 * k.c7.pow(e)?;
    let one_minus_e = e.rsub(Interval::ONE);
    let f1 = |l: Jet| Ok((l.pow(one_minus_e)? * coef + fx::epsilon3(&k, l)?).rsub(nine));
    let tail1 = if e.lo() >= 1.0 && decays {
        Tail::Nondecreasing("ℓ^{1−4c₁₉c₂₃} and every ε₃ term are nonincreasing".into())
    } else {
        Tail::Search("ℓ^{1−4c₁₉c₂₃} grows".into())
    };
    let mut case_i = verify_halfline("c23_case_i", &f1, ln3(), LOG_D_CUT, tail1, &opts);
    case_i
        .notes
        .push(format!("4c₁₉c₂₃ = {e}; the case needs ℓ ≤ c₂₃c₇² = {}, so it is vacuous for d ≥ 3", k.c23 * k.c7.sqr()));
    case_i.notes.push(format!("exponent threshold 1/(4c₁₉) = {}", (k.c19 * 4.0).recip()));

    let gap = k.c23 - k.c10;
    let dec4 = gap.lo() > 0.0 && gap.lo() * LOG_D_CUT > 1.5;
    let f2 = |l: Jet| Ok(fx::epsilon4(&k, l)?.rsub(k.c23 * nine));
    let tail2 = if dec4 && e.lo() >= 2.0 {
        Tail::Nondecreasing("every ε₄ term is nonincreasing".into())
    } else {
        Tail::Search("ℓ^{2−4c₁₉c₂₃} grows or c₂₃ ≤ c₁₀".into())
    };
    let shortcut = verify_halfline("c23_case_ii_shortcut", &f2, ln3(), LOG_D_CUT, tail2, &opts)
        .informational()
        .with_note(format!("2c₁₉c₂₃ − 1 = {}", e / 2.0 - 1.0));

    let s = e / 2.0 - 1.0;
    let exact = s.hi() < 0.0;
    let f3 = |l: Jet| direct_route(&k, exact, l);
    let tail3 = if !exact && dec4 {
        Tail::Nondecreasing("every term is nonincreasing in ℓ".into())
    } else {
        Tail::Search("the middle term grows with ℓ".into())
    };
    let mut direct = verify_halfline("c23_case_ii_direct", &f3, ln3(), LOG_D_CUT, tail3, &opts).informational();
    if exact {
        direct.notes.push("2c₁₉c₂₃ − 1 < 0: every term increases in u, so the supremum sits at u = c₁₀ℓ".into());
    } else {
        direct.notes.push("2c₁₉c₂₃ − 1 ≥ 0: each term bounded at its own worst u; only a proof is conclusive".into());
        if direct.verdict == Verdict::Refuted {
            direct.verdict = Verdict::Undecided;
            direct.notes.push("refutation of the separate bounds does not refute the claim".into());
        }
    }
    if let Some(w) = &direct.witness {
        if let Ok(v) = f3(Jet::constant(w[0], 0)) {
            direct.notes.push(format!("at ℓ = {}: 0.9c₂₃ − terms = {}", w[0], v.value()));
        }
    }
    Ok(vec![case_i, shortcut, direct])
}

/// `c₁₀` lies in `[114.72, 114.73)` and its inputs match the printed values.
pub fn verify_c10(graph: &ConstantGraph) -> Result<VerdictRecord> {
    let c10 = graph.value("c_10")?;
    let lo = Interval::decimal(114.72);
    let hi = Interval::decimal(114.73);
    let margin = (c10 - lo).min(hi - c10);
    let mut rec = VerdictRecord::from_margin("c10_value", margin, false).with_note(format!("c₁₀ ∈ {c10}"));
    for (id, text) in [("c_7_cor", "2.2434⋯×10^{-5}"), ("c_8_cor", "2.1716⋯×10^{-2}"), ("c_10", "114.72⋯")] {
        let v = graph.value(id)?;
        let adj = PrintedValue::decimal(text).adjudicate(v);
        rec.notes.push(format!("{id} = {v} against {text}: {adj:?}"));
        if !adj.is_ok() {
            rec.verdict = Verdict::Refuted;
        }
    }
    Ok(rec)
}

/// Exact-sieve checks of the three prime-counting bounds up to `x_max`.
pub fn sandbox_check_prime_bounds(x_max: u64, alpha0: Interval) -> Result<VerdictRecord> {
    let limit = x_max.max(10_100);
    let runs = [
        sandbox::check_prime_count(x_max, alpha0)?,
        sandbox::check_prime_power_count(x_max, alpha0)?,
        sandbox::check_prime_power_tail(&sandbox::default_tail_samples(limit), limit, alpha0)?,
    ];
    let parts: Vec<VerdictRecord> = runs
        .iter()
        .map(|r| {
            let slack = r
                .comparisons
                .iter()
                .filter_map(|c| c.count.parse::<f64>().ok().map(|n| (c.bound - n) / c.bound))
                .reduce(|a, b| a.min(b))
                .unwrap_or(Interval::EMPTY);
            let verdict = if r.pass { Verdict::Proved } else { Verdict::Refuted };
            let mut rec = VerdictRecord::new(&r.check, verdict, slack).with_boxes(r.points_checked);
            rec.notes.extend(r.quantities.iter().map(|(k, v)| format!("{k} = {v}")));
            rec
        })
        .collect();
    let mut rec = conjoin("prime_counting_bounds", &parts);
    rec.notes.push(format!("x ≤ {x_max}, relative slack reported as the margin"));
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_and_gamma_are_increasing() {
        assert_eq!(verify_f3_increasing(60).verdict, Verdict::Proved);
        assert_eq!(verify_gamma_increasing(60).verdict, Verdict::Proved);
    }

    #[test]
    fn phi_checks() {
        let r = verify_phi1_positive(60);
        assert_eq!(r.verdict, Verdict::Proved, "{r:?}");
        assert!(r.margin.lo() > 0.0 && r.margin.lo() < 0.01);
        assert_eq!(verify_phi2_nonneg(60).verdict, Verdict::Proved);
        let r6 = verify_phi6_lower(60).unwrap();
        assert_eq!(r6.verdict, Verdict::Proved, "{r6:?}");
        let r7 = verify_phi7_lower(60).unwrap();
        assert_eq!(r7.verdict, Verdict::Proved, "{r7:?}");
    }
}
