//! Digamma on the real axis and its real part in the right half-plane.

use crate::error::{Error, Result};
use crate::interval::{ComplexBox, Interval};
use crate::jet::{Jet, Real};

/// `B_2, B_4, …, B_14`.
const BERNOULLI: [(i64, i64); 7] = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6)];

fn bernoulli(j: usize) -> Interval {
    let (p, q) = BERNOULLI[j - 1];
    Interval::ratio(p, q)
}

fn shift_count(x: f64, target: f64) -> usize {
    if x >= target {
        0
    } else {
        (target - x).ceil() as usize
    }
}

/// `ψ(x)` at a single point `x > 0`.
fn digamma_at(x: f64) -> Result<Interval> {
    let n = shift_count(x, 12.0);
    let p = Interval::point(x);
    let mut shift = Interval::ZERO;
    for k in 0..n {
        shift += (p + k as f64).recip();
    }
    let y = p + n as f64;
    let y2 = y.sqr();
    let mut acc = y.ln()? - (y * 2.0).recip();
    let mut yp = y2;
    for j in 1..=6 {
        acc -= bernoulli(j) / (yp * (2 * j) as f64);
        yp *= y2;
    }
    let r = bernoulli(7).abs() / (yp * 14.0);
    Ok(acc + Interval::new(-r.hi(), r.hi()) - shift)
}

/// `ψ'(x)` at a single point `x > 0`.
fn trigamma_at(x: f64) -> Interval {
    let n = shift_count(x, 16.0);
    let p = Interval::point(x);
    let mut shift = Interval::ZERO;
    for k in 0..n {
        shift += (p + k as f64).sqr().recip();
    }
    let y = p + n as f64;
    let r = y.recip();
    let base = r + r.sqr() / 2.0 + r.powi(3) / 6.0 - r.powi(5) / 30.0;
    let rem = r.powi(7) / 42.0;
    base + Interval::new(0.0, rem.hi()) + shift
}

/// `Σ_{n≥0} (x + n)^{−(k+1)}` at a point, for `k ≥ 1`.
fn hurwitz_at(x: f64, k: u32) -> Interval {
    const M: u32 = 32;
    let p = Interval::point(x);
    let e = -(k as i32 + 1);
    let mut acc = Interval::ZERO;
    for n in 0..M {
        acc += (p + n as f64).powi(e);
    }
    let tail_from = |a: f64| (p + a).powi(-(k as i32)) / k as f64;
    let lo = tail_from(M as f64) + (p + M as f64).powi(e) / 2.0;
    let hi = tail_from(M as f64 - 0.5);
    acc + Interval::new(lo.lo(), hi.hi())
}

fn check_positive(x: Interval, what: &str) -> Result<()> {
    if x.is_empty() || x.lo() <= 0.0 || !x.is_finite() {
        Err(Error::Domain(format!("{what} needs a positive finite argument, got {x:?}")))
    } else {
        Ok(())
    }
}

/// Encloses `ψ(x)` for `x > 0`.
pub fn digamma_real(x: Interval) -> Result<Interval> {
    check_positive(x, "digamma")?;
    let lo = digamma_at(x.lo())?;
    let hi = if x.is_point() { lo } else { digamma_at(x.hi())? };
    Ok(Interval::new(lo.lo(), hi.hi()))
}

/// Encloses `ψ'(x)` for `x > 0`.
pub fn trigamma_real(x: Interval) -> Result<Interval> {
    check_positive(x, "trigamma")?;
    let hi = trigamma_at(x.lo());
    let lo = if x.is_point() { hi } else { trigamma_at(x.hi()) };
    Ok(Interval::new(lo.lo(), hi.hi()))
}

/// Normalised derivatives `ψ⁽ᵏ⁾(x)/k!` for `k ≤ order`.
pub fn digamma_coeffs(x: Interval, order: usize) -> Result<Vec<Interval>> {
    let mut out = vec![digamma_real(x)?];
    if order >= 1 {
        out.push(trigamma_real(x)?);
    }
    for k in 2..=order as u32 {
        let big = hurwitz_at(x.lo(), k);
        let small = hurwitz_at(x.hi(), k);
        let m = Interval::new(small.lo(), big.hi());
        out.push(if k % 2 == 1 { m } else { -m });
    }
    Ok(out)
}

/// Digamma lifted to any [`Real`].
pub trait Digamma: Real {
    fn digamma(self) -> Result<Self>;
}

impl Digamma for Interval {
    fn digamma(self) -> Result<Self> {
        digamma_real(self)
    }
}

impl Digamma for Jet {
    fn digamma(self) -> Result<Self> {
        Ok(self.compose(&digamma_coeffs(self.value(), self.order())?))
    }
}

/// `Re ψ(s) ∈ log|s| − Re(1/(2s)) ± 1/(12 (Re s)²)`.
pub fn digamma_re(s: ComplexBox) -> Result<Interval> {
    check_positive(s.re, "Re digamma")?;
    let r = Interval::ONE / (s.re.sqr() * 12.0);
    let main = s.norm_sqr().ln()? / 2.0 - s.re / (s.norm_sqr() * 2.0);
    Ok(main + Interval::new(-r.hi(), r.hi()))
}

/// `Re ψ(s)` after shifting by `shift` and keeping `terms ≤ 6` Bernoulli
/// corrections; the remainder is `|B_{2m+2}| / (2(m+1) |w|^{2m} (Re w)²)`.
pub fn digamma_re_shifted(s: ComplexBox, shift: usize, terms: usize) -> Result<Interval> {
    check_positive(s.re, "Re digamma")?;
    if terms > 6 {
        return Err(Error::Range(format!("at most 6 correction terms, got {terms}")));
    }
    let mut back = Interval::ZERO;
    for k in 0..shift {
        let z = s + Interval::point(k as f64);
        back += z.re / z.norm_sqr();
    }
    let w = s + Interval::point(shift as f64);
    let inv = w.recip();
    let inv2 = inv * inv;
    let mut acc = w.norm_sqr().ln()? / 2.0 - inv.re / 2.0;
    let mut pw = inv2;
    for j in 1..=terms {
        acc -= bernoulli(j) * pw.re / (2 * j) as f64;
        pw = pw * inv2;
    }
    let m = terms as i32;
    let r = bernoulli(terms + 1).abs() / ((2 * (m + 1)) as f64 * w.norm_sqr().powi(m) * w.re.sqr());
    Ok(acc + Interval::new(-r.hi(), r.hi()) - back)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.5772156649015329;

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let v = digamma_real(Interval::ONE).unwrap();
        assert!(v.contains(-EULER_GAMMA) && v.width() < 1e-13, "{v:?}");
    }

    #[test]
    fn trigamma_at_one() {
        let v = trigamma_real(Interval::ONE).unwrap();
        let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
        assert!(v.inflate(1e-15).contains(pi2_6) && v.width() < 1e-9, "{v:?}");
    }

    #[test]
    fn higher_coefficient_at_one() {
        let g = digamma_coeffs(Interval::ONE, 2).unwrap();
        let zeta3 = 1.2020569031595942;
        assert!(g[2].contains(-zeta3), "{:?}", g[2]);
    }

    #[test]
    fn complex_forms_agree_on_real_axis() {
        let s = ComplexBox::point(10.0, 0.0);
        let coarse = digamma_re(s).unwrap();
        let fine = digamma_re_shifted(s, 4, 6).unwrap();
        assert!(coarse.contains(2.251752589066721) && fine.contains(2.251752589066721));
        assert!(fine.width() < 1e-12);
    }

    #[test]
    fn rejects_left_half_plane() {
        assert!(digamma_re(ComplexBox::point(-1.0, 2.0)).is_err());
        assert!(digamma_real(Interval::new(-1.0, 1.0)).is_err());
    }
}
