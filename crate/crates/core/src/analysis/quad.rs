//! Adaptive bisection quadrature with Taylor-model boxes.
//!
//! On a box `[l, r]` with midpoint `m` the integrand is expanded to order
//! `n − 1` at `m`; the order-`n` coefficient enclosed over the whole box bounds
//! the remainder. Because `n` is even, `hⁿ ≥ 0` and the remainder integral is
//! `cₙ(X) · ∫ hⁿ dh`. The widest box is always split next, and the final sum is
//! taken in left-endpoint order so the result does not depend on scheduling.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::{Jet, Real};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

#[derive(Clone, Debug)]
pub struct QuadOptions {
    /// Target width of the returned enclosure.
    pub tol: f64,
    pub max_boxes: usize,
    /// Taylor order used on each box (rounded up to even).
    pub order: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { tol: 1e-10, max_boxes: 400_000, order: 8 }
    }
}

impl QuadOptions {
    pub fn with_tol(tol: f64) -> Self {
        QuadOptions { tol, ..Default::default() }
    }
}

/// How the tail beyond the truncation point is signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSign {
    Nonnegative,
    Nonpositive,
    Unknown,
}

/// A closed-form bound `∫_T^∞ |f| ≤ B(T)`.
#[derive(Clone, Copy, Debug)]
pub struct TailMajorant {
    pub threshold: f64,
    pub bound: Interval,
    pub sign: TailSign,
}

impl TailMajorant {
    pub fn contribution(&self) -> Interval {
        let b = self.bound.hi().max(0.0);
        match self.sign {
            TailSign::Nonnegative => Interval::new(0.0, b),
            TailSign::Nonpositive => Interval::new(-b, 0.0),
            TailSign::Unknown => Interval::new(-b, b),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadReport {
    pub enclosure: Interval,
    pub boxes: usize,
    pub reached: bool,
}

struct Piece {
    lo: f64,
    hi: f64,
    value: Interval,
}

impl Piece {
    fn key(&self) -> f64 {
        let w = self.value.width();
        if w.is_nan() {
            f64::INFINITY
        } else {
            w
        }
    }
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key().total_cmp(&o.key()).then_with(|| o.lo.total_cmp(&self.lo))
    }
}

/// `∫_{a}^{b} h^k dh` for interval endpoints.
fn monomial_integral(a: Interval, b: Interval, k: usize) -> Interval {
    let p = (k + 1) as i32;
    (b.powi(p) - a.powi(p)) / (k + 1) as f64
}

fn taylor_box<F>(f: &F, lo: f64, hi: f64, order: usize) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    let x = Interval::new(lo, hi);
    let m = x.mid();
    let a = Interval::point(lo) - m;
    let b = Interval::point(hi) - m;
    let at_mid = f(Jet::var(Interval::point(m), order - 1))?;
    let over = f(Jet::var(x, order))?;
    let mut total = over.coeff(order) * monomial_integral(a, b, order);
    for k in 0..order {
        total += at_mid.coeff(k) * monomial_integral(a, b, k);
    }
    Ok(total)
}

fn box_integral<F>(f: &F, lo: f64, hi: f64, order: usize) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    if order >= 2 {
        if let Ok(v) = taylor_box(f, lo, hi, order) {
            if v.is_finite() {
                return Ok(v);
            }
        }
    }
    let x = Interval::new(lo, hi);
    let v = f(Jet::var(x, 0))?.value();
    Ok(v * (Interval::point(hi) - lo))
}

/// Encloses `∫_a^b f`, reporting whether the tolerance was met.
pub fn integrate_report<F>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadReport>
where
    F: Fn(Jet) -> Result<Jet>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("integration range [{a}, {b}]")));
    }
    let order = (opts.order.max(2) + 1) & !1;
    let order = order.min(crate::jet::MAX_ORDER);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { lo: a, hi: b, value: box_integral(&f, a, b, order)? });
    let mut boxes = 1usize;
    let mut width_sum = heap.peek().map(|p| p.key()).unwrap_or(0.0);
    loop {
        if width_sum <= opts.tol || boxes >= opts.max_boxes {
            let total = sum_in_order(&heap);
            if total.width() <= opts.tol || boxes >= opts.max_boxes {
                return Ok(QuadReport { enclosure: total, boxes, reached: total.width() <= opts.tol });
            }
            width_sum = heap.iter().map(Piece::key).sum();
            if width_sum <= opts.tol {
                width_sum = opts.tol * 2.0;
            }
        }
        let Some(p) = heap.pop() else { break };
        let m = Interval::new(p.lo, p.hi).mid();
        if m <= p.lo || m >= p.hi {
            // Cannot split further; keep the piece and stop refining it.
            let total = sum_in_order(&heap) + p.value;
            return Ok(QuadReport { enclosure: total, boxes, reached: total.width() <= opts.tol });
        }
        let left = Piece { lo: p.lo, hi: m, value: box_integral(&f, p.lo, m, order)? };
        let right = Piece { lo: m, hi: p.hi, value: box_integral(&f, m, p.hi, order)? };
        width_sum = width_sum - p.key() + left.key() + right.key();
        heap.push(left);
        heap.push(right);
        boxes += 1;
        // The running sum drifts once early wide boxes are gone.
        if boxes.is_multiple_of(256) || !width_sum.is_finite() || width_sum <= opts.tol * 4.0 {
            width_sum = heap.iter().map(Piece::key).sum();
        }
    }
    Ok(QuadReport { enclosure: Interval::ENTIRE, boxes, reached: false })
}

fn sum_in_order(heap: &BinaryHeap<Piece>) -> Interval {
    let mut pieces: Vec<&Piece> = heap.iter().collect();
    pieces.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    pieces.into_iter().map(|p| p.value).sum()
}

/// Encloses `∫_a^b f` to width `opts.tol`.
pub fn integrate<F>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    let r = integrate_report(f, a, b, opts)?;
    if r.reached {
        Ok(r.enclosure)
    } else {
        Err(Error::ToleranceNotReached { enclosure: r.enclosure, width: r.enclosure.width(), boxes: r.boxes })
    }
}

/// Encloses `∫_a^∞ f` as `∫_a^T f` plus the tail majorant's contribution.
pub fn integrate_halfline<F>(f: F, a: f64, tail: &TailMajorant, opts: &QuadOptions) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    if tail.threshold < a {
        return Err(Error::Domain("tail threshold below the lower limit".into()));
    }
    let tail_part = tail.contribution();
    // Once the tail alone exceeds the target, refining the core past the
    // tail's own width gains nothing.
    let tail_w = tail_part.width();
    let core_tol = if tail_w < opts.tol { (opts.tol - tail_w).max(opts.tol * 0.1) } else { tail_w };
    let core_opts = QuadOptions { tol: core_tol, ..opts.clone() };
    let core = if tail.threshold > a {
        match integrate(f, a, tail.threshold, &core_opts) {
            Ok(v) => v,
            Err(Error::ToleranceNotReached { enclosure, boxes, .. }) => {
                let total = enclosure + tail_part;
                return Err(Error::ToleranceNotReached { enclosure: total, width: total.width(), boxes });
            }
            Err(e) => return Err(e),
        }
    } else {
        Interval::ZERO
    };
    let total = core + tail_part;
    if total.width() > opts.tol {
        return Err(Error::ToleranceNotReached { enclosure: total, width: total.width(), boxes: 0 });
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_unit_interval() {
        let r = integrate(Ok, 0.0, 1.0, &QuadOptions::with_tol(1e-12)).unwrap();
        assert!(r.contains(0.5) && r.width() <= 1e-12);
    }

    #[test]
    fn polynomial_is_exact_up_to_rounding() {
        let r = integrate(|t: Jet| Ok(t.powi(3) * 4.0), 0.0, 2.0, &QuadOptions::with_tol(1e-12)).unwrap();
        assert!(r.contains(16.0));
    }

    #[test]
    fn arctangent_integral() {
        let f = |t: Jet| Ok((t.sqr() * 4.0 + 9.0).rdiv(Interval::point(9.0)));
        let r = integrate(f, 0.0, 10.0, &QuadOptions::with_tol(1e-11)).unwrap();
        let exact = 1.5 * (20.0f64 / 3.0).atan();
        assert!(r.inflate(1e-15).contains(exact), "{r:?} vs {exact}");
    }

    #[test]
    fn zero_integrand_with_tail() {
        let tail = TailMajorant { threshold: 1.0, bound: Interval::point(1e-12), sign: TailSign::Nonnegative };
        let r = integrate_halfline(|t: Jet| Ok(t * 0.0), 0.0, &tail, &QuadOptions::with_tol(1e-9)).unwrap();
        assert!(r.contains(0.0) && r.lo() == 0.0);
    }

    #[test]
    fn tolerance_failure_carries_enclosure() {
        let opts = QuadOptions { tol: 1e-30, max_boxes: 16, order: 2 };
        match integrate(|t: Jet| Real::exp(t), 0.0, 1.0, &opts) {
            Err(Error::ToleranceNotReached { enclosure, .. }) => {
                assert!(enclosure.contains(std::f64::consts::E - 1.0))
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
