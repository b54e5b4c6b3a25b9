//! The infimum of the zero-free-region weight `𝒢(α₉, α₉⁻¹, 1; v)`.
//!
//! With `ω₁ω₂ = 1`, `ω₁ + ω₂ = √5` and `ω₃ = 1` the weight collapses to
//! `−v²/((v⁴ + 3v² + 1)(1 + v²))`, which is even, vanishes at 0 and tends to
//! 0. The search runs on the defining formula; the closed form only
//! certifies the pieces near 0 and in the tail.

use super::bnb::{minimize_1d, BnbOptions, Region};
use super::record::{conjoin, Verdict, VerdictRecord};
use super::universal::verify_nonneg;
use crate::error::{Error, Result};
use crate::graph::functions::{g_weight, g_weights_default, kappa};
use crate::interval::Interval;
use crate::jet::{Jet, Real};
use serde::{Deserialize, Serialize};

/// Tolerance used when the enclosure must separate the infimum from the
/// imported nine-digit value, which lies about 1.3e−10 below it.
pub const G0_CERT_TOL: f64 = 2e-12;

/// End of the compact search window in `v`.
pub const G0_WINDOW: f64 = 10.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct G0Location {
    /// Rigorous enclosure of `inf_v 𝒢`.
    pub enclosure: Interval,
    /// The enclosure widened downward to the requested tolerance.
    pub padded: Interval,
    /// Where the minimiser may lie (taking `v ≥ 0` by symmetry).
    pub argmin: Interval,
    pub boxes: u64,
    /// Lower bound on `𝒢` for `|v| ≥ G0_WINDOW`.
    pub tail_bound: Interval,
}

fn weight(v: Jet) -> Result<Jet> {
    Ok(g_weight(g_weights_default(), v))
}

/// `−v²/((v⁴ + 3v² + 1)(1 + v²))`.
pub fn g_closed_form<T: Real>(v: T) -> T {
    let v2 = v.sqr();
    let quartic = v2.sqr() + v2 * 3.0 + 1.0;
    -(v2 / (quartic * (v2 + 1.0)))
}

/// Checks the algebraic identities behind the closed form.
pub fn closed_form_identities() -> Vec<(String, Interval, f64)> {
    let [w1, w2, _] = g_weights_default();
    vec![
        ("ω₁ω₂".into(), w1 * w2, 1.0),
        ("κ(ω₁ + ω₂)".into(), kappa() * (w1 + w2), 1.0),
        ("ω₁² + ω₂²".into(), w1.sqr() + w2.sqr(), 3.0),
    ]
}

/// Encloses `inf_v 𝒢(α₉, α₉⁻¹, 1; v)` to width `tol`.
pub fn locate_g0(tol: f64) -> Result<G0Location> {
    if !(tol > 0.0 && tol <= 1e-8) {
        return Err(Error::InvalidParams(format!("locate_g0 needs 0 < tol ≤ 1e-8, got {tol}")));
    }
    let found = minimize_1d(&weight, 0.0, G0_WINDOW, tol, 120).map_err(|e| match e {
        Error::ToleranceNotReached { .. } => Error::DepthExceeded,
        other => other,
    })?;
    // Past the window the two κ terms are positive, so 𝒢 ≥ −1/(1 + v²).
    let v = Interval::point(G0_WINDOW);
    let tail_bound = -(v.sqr() + 1.0).recip();
    if !(tail_bound.lo() > found.enclosure.hi()) {
        return Err(Error::DepthExceeded);
    }
    let e = found.enclosure;
    let padded = Interval::new(e.lo().min(e.hi() - tol), e.hi());
    Ok(G0Location { enclosure: e, padded, argmin: found.argmin, boxes: found.boxes, tail_bound })
}

/// `𝒢(α₉, α₉⁻¹, 1; v) ≤ 0` for all real `v`.
pub fn verify_g_nonpositive(depth: u32) -> VerdictRecord {
    const NEAR: f64 = 1e-3;
    let claim = "g_weight_nonpositive";
    let ids = closed_form_identities();
    let ident_ok = ids.iter().all(|(_, v, want)| v.contains(*want));
    let mut ident = VerdictRecord::new(
        "closed_form_identities",
        if ident_ok { Verdict::Proved } else { Verdict::Refuted },
        Interval::ZERO,
    );
    for (name, v, want) in &ids {
        ident.notes.push(format!("{name} = {want} exactly; enclosure {v}"));
    }
    // Near 0 and past the window: −𝒢 = v²/(positive), with both limits in
    // the closed form evaluated on the whole piece.
    let closed = |b: &[Interval]| Ok(-g_closed_form(b[0]));
    let near = verify_nonneg("near_zero", &closed, &Region::line(0.0, NEAR), &BnbOptions::with_depth(depth))
        .with_note(format!("[0, {NEAR}] by the closed form"));
    let far_lo = Interval::point(G0_WINDOW);
    let far = VerdictRecord::from_margin("tail", Interval::ZERO, false).with_tail().with_note(format!(
        "[{G0_WINDOW}, ∞): closed form is v²/((v⁴ + 3v² + 1)(1 + v²)) > 0; value at the cut {}",
        -g_closed_form(far_lo)
    ));
    let direct = |b: &[Interval]| Ok(-g_weight(g_weights_default(), b[0]));
    let core =
        verify_nonneg("core", &direct, &Region::line(NEAR, G0_WINDOW), &BnbOptions::with_depth(depth).strict(true))
            .with_note("defining formula on the compact core");
    let mut rec = conjoin(claim, &[ident, near, core, far]);
    rec.notes.push("𝒢 depends on v², so v ≥ 0 suffices".into());
    rec.tail_handled = true;
    rec
}

/// `inf 𝒢 ≥ −0.121585107`, the value imported for the zero-free region.
pub fn verify_g0_lower(tol: f64) -> Result<VerdictRecord> {
    let loc = locate_g0(tol.min(G0_CERT_TOL))?;
    let stated = Interval::decimal(-0.121585107);
    let margin = loc.enclosure - stated;
    Ok(VerdictRecord::from_margin("g0_lower_bound", margin, false)
        .with_boxes(loc.boxes)
        .with_tail()
        .with_note(format!("inf 𝒢 ∈ {} (padded {}), minimiser in {}", loc.enclosure, loc.padded, loc.argmin))
        .with_note(format!("tail |v| ≥ {G0_WINDOW}: 𝒢 ≥ {}", loc.tail_bound)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_definition() {
        for v in [0.0, 0.3, 0.77, 1.0, 4.0, 50.0] {
            let x = Interval::point(v);
            let a = g_weight(g_weights_default(), x);
            let b = g_closed_form(x);
            assert!(!a.intersect(&b).is_empty(), "v = {v}: {a} vs {b}");
        }
    }

    #[test]
    fn locates_the_imported_value() {
        let loc = locate_g0(1e-9).unwrap();
        assert!(loc.padded.contains(-0.121585107), "{:?}", loc);
        assert!(loc.padded.width() <= 2e-8 && loc.enclosure.hi() <= 0.0);
        assert!(loc.argmin.hi() < G0_WINDOW);
    }

    #[test]
    fn weight_is_nonpositive() {
        let r = verify_g_nonpositive(60);
        assert_eq!(r.verdict, Verdict::Proved, "{r:?}");
    }
}
