//! The vertical weight `v(t)` and the two decaying weights it is integrated
//! against, with half-line integrals `(1/π)∫₀^∞ w` and `(1/π)∫₀^∞ v·w`.

use super::quad::{integrate_halfline, QuadOptions, TailMajorant, TailSign};
use crate::error::{Error, Result};
use crate::interval::{consts, Interval};
use crate::jet::Real;

/// Threshold beyond which the rational weight is handled by its majorant.
pub const RATIONAL_TAIL_START: f64 = 1e12;
/// Threshold for the Gaussian weight.
pub const GAUSSIAN_TAIL_START: f64 = 3.0;

/// `19683/812`.
pub fn v_offset() -> Interval {
    Interval::ratio(19683, 812)
}

/// `log(√(1/4 + t²) + 2) + 19683/812`.
pub fn v_winckler<T: Real>(t: T) -> Result<T> {
    let r = (t.sqr() + 0.25).sqrt()?;
    Ok((r + 2.0).ln()? + v_offset())
}

/// `((1 + 101^{−3/2}) / (1 − 101^{−3/2}))²`.
pub fn rational_weight_scale() -> Interval {
    let e = (Interval::point(101.0) * Interval::point(101.0).sqrt().expect("positive")).recip();
    ((Interval::ONE + e) / (Interval::ONE - e)).sqr()
}

/// `K · 9 / (9 + 4t²)`.
pub fn rational_weight<T: Real>(t: T) -> T {
    (t.sqr() * 4.0 + 9.0).rdiv(rational_weight_scale() * 9.0)
}

/// `10^{−10 t²}`.
pub fn gaussian_weight<T: Real>(t: T) -> Result<T> {
    (t.sqr() * (consts::ln10() * -10.0)).exp()
}

fn gaussian_rate() -> Interval {
    consts::ln10() * 10.0
}

/// `∫_T^∞ K·9/(4t²) dt`.
fn rational_mass_tail(t: f64) -> TailMajorant {
    let bound = rational_weight_scale() * 9.0 / (Interval::point(t) * 4.0);
    TailMajorant { threshold: t, bound, sign: TailSign::Nonnegative }
}

/// `∫_T^∞ v · K·9/(4t²) dt` using `v(t) ≤ log t + 2.5/t + 19683/812`.
fn rational_moment_tail(t: f64) -> Result<TailMajorant> {
    let ti = Interval::point(t);
    let inner = (ti.ln()? + 1.0) / ti + Interval::point(1.25) / ti.sqr() + v_offset() / ti;
    let bound = rational_weight_scale() * 9.0 / 4.0 * inner;
    Ok(TailMajorant { threshold: t, bound, sign: TailSign::Nonnegative })
}

/// `∫_T^∞ e^{−λt²} dt ≤ e^{−λT²} / (2λT)`.
fn gaussian_mass_tail(t: f64) -> Result<TailMajorant> {
    let ti = Interval::point(t);
    let lam = gaussian_rate();
    let bound = (-(lam * ti.sqr())).exp()? / (lam * ti * 2.0);
    Ok(TailMajorant { threshold: t, bound, sign: TailSign::Nonnegative })
}

/// `∫_T^∞ v e^{−λt²} dt`, with `v(t) ≤ log(t + 5/2) + 19683/812` and one
/// integration by parts.
fn gaussian_moment_tail(t: f64) -> Result<TailMajorant> {
    let ti = Interval::point(t);
    let lam = gaussian_rate();
    let g = (-(lam * ti.sqr())).exp()?;
    let shifted = ti + 2.5;
    let bound = (shifted.ln()? + v_offset()) * g / (lam * ti * 2.0) + g / (lam * shifted * 2.0);
    Ok(TailMajorant { threshold: t, bound, sign: TailSign::Nonnegative })
}

/// Divides by `π`, including the enclosure carried by a missed tolerance.
fn over_pi(r: Result<Interval>) -> Result<Interval> {
    let pi = consts::pi();
    match r {
        Ok(v) => Ok(v / pi),
        Err(Error::ToleranceNotReached { enclosure, boxes, .. }) => {
            let enclosure = enclosure / pi;
            Err(Error::ToleranceNotReached { enclosure, width: enclosure.width(), boxes })
        }
        Err(e) => Err(e),
    }
}

/// `(1/π) ∫₀^∞ K·9/(9 + 4t²) dt`.
pub fn rational_weight_mass(opts: &QuadOptions) -> Result<Interval> {
    let tail = rational_mass_tail(RATIONAL_TAIL_START);
    over_pi(integrate_halfline(|t| Ok(rational_weight(t)), 0.0, &tail, opts))
}

/// `(1/π) ∫₀^∞ v(t) K·9/(9 + 4t²) dt`.
pub fn rational_weight_moment(opts: &QuadOptions) -> Result<Interval> {
    let tail = rational_moment_tail(RATIONAL_TAIL_START)?;
    let f = |t| Ok(v_winckler(t)? * rational_weight(t));
    over_pi(integrate_halfline(f, 0.0, &tail, opts))
}

/// `(1/π) ∫₀^∞ 10^{−10t²} dt`.
pub fn gaussian_weight_mass(opts: &QuadOptions) -> Result<Interval> {
    let tail = gaussian_mass_tail(GAUSSIAN_TAIL_START)?;
    over_pi(integrate_halfline(gaussian_weight, 0.0, &tail, opts))
}

/// `(1/π) ∫₀^∞ v(t) 10^{−10t²} dt`.
pub fn gaussian_weight_moment(opts: &QuadOptions) -> Result<Interval> {
    let tail = gaussian_moment_tail(GAUSSIAN_TAIL_START)?;
    let f = |t| Ok(v_winckler(t)? * gaussian_weight(t)?);
    over_pi(integrate_halfline(f, 0.0, &tail, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missed_tolerance_keeps_the_normalised_enclosure() {
        let opts = QuadOptions { tol: 1e-15, max_boxes: 64, ..QuadOptions::default() };
        match rational_weight_moment(&opts) {
            Err(Error::ToleranceNotReached { enclosure, .. }) => {
                let fine = rational_weight_moment(&QuadOptions::with_tol(1e-9)).unwrap();
                assert!(fine.subset_of(&enclosure), "{fine} not in {enclosure}");
            }
            other => panic!("expected a missed tolerance, got {other:?}"),
        }
    }

    #[test]
    fn v_at_zero() {
        let v = v_winckler(Interval::ZERO).unwrap();
        assert!(v.inflate(1e-9).contains(25.1564385152) && v.width() < 1e-13);
    }

    #[test]
    fn v_is_even() {
        let a = v_winckler(Interval::point(1.7)).unwrap();
        let b = v_winckler(Interval::point(-1.7)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn masses_match_closed_forms() {
        let opts = QuadOptions::with_tol(1e-9);
        let m1 = rational_weight_mass(&opts).unwrap();
        let k = rational_weight_scale();
        assert!(!m1.is_disjoint(&(k * 0.75)));
        let m2 = gaussian_weight_mass(&opts).unwrap();
        let exact = 0.5 / (10.0 * std::f64::consts::PI * 10f64.ln()).sqrt();
        assert!(m2.inflate(1e-15).contains(exact), "{m2:?}");
    }
}
