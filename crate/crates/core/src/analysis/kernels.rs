//! The smoothing kernels `k₀, k₁, k₂` and their inverse Mellin transforms.

use crate::error::{Error, Result};
use crate::interval::{consts, ComplexBox, Interval};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `((y^{s−1} − x^{s−1}) / (s − 1))²` with `y = x²`.
    Difference,
    /// `x^{s² + s}`.
    Gaussian,
}

impl Kernel {
    pub fn name(self) -> &'static str {
        match self {
            Kernel::Difference => "k1",
            Kernel::Gaussian => "k2",
        }
    }
}

const SERIES_TERMS: usize = 20;

fn check_base(x: Interval) -> Result<()> {
    if x.is_empty() || x.lo() < 2.0 || !x.is_finite() {
        Err(Error::Domain(format!("kernel base must satisfy x ≥ 2, got {x:?}")))
    } else {
        Ok(())
    }
}

/// `(e^z − 1)/z = Σ z^k/(k+1)!` with a rigorous remainder.
fn exprel(z: ComplexBox) -> ComplexBox {
    let r = z.abs().hi();
    let k = SERIES_TERMS;
    let mut acc = ComplexBox::ZERO;
    let mut term = ComplexBox::ONE;
    for i in 0..k {
        acc = acc + term;
        term = (term * z).scale(Interval::ONE / (i + 2) as f64);
    }
    // |Σ_{i≥k} z^i/(i+1)!| ≤ |z|^k/(k+1)! · 1/(1 − |z|/(k+2)).
    let mut fact = Interval::ONE;
    for i in 2..=(k + 1) {
        fact = fact * i as f64;
    }
    let ratio = Interval::point(r) / (k + 2) as f64;
    let bound = Interval::point(r).powi(k as i32) / fact / (Interval::ONE - ratio);
    acc + ComplexBox::disk(bound.hi())
}

/// `((y^{s−1} − x^{s−1}) / (s − 1))²`, continuous through `s = 1`.
pub fn k0(s: ComplexBox, x: Interval, y: Interval) -> Result<ComplexBox> {
    check_base(x)?;
    let w = s - Interval::ONE;
    let lx = x.ln()?;
    let lr = y.ln()? - lx;
    let z = w.scale(lr);
    let q = if z.abs().hi() < 1.0 {
        w.scale(lx).exp()? * exprel(z).scale(lr)
    } else {
        let d = w.scale(y.ln()?).exp()? - w.scale(lx).exp()?;
        if w.norm_sqr().contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        d / w
    };
    Ok(q * q)
}

/// `k₀(s; x, x²)`.
pub fn k1(s: ComplexBox, x: Interval) -> Result<ComplexBox> {
    k0(s, x, x.sqr())
}

/// `x^{s² + s}`.
pub fn k2(s: ComplexBox, x: Interval) -> Result<ComplexBox> {
    check_base(x)?;
    (s * s + s).real_base_pow(x)
}

pub fn kernel_eval(which: Kernel, s: ComplexBox, x: Interval) -> Result<ComplexBox> {
    match which {
        Kernel::Difference => k1(s, x),
        Kernel::Gaussian => k2(s, x),
    }
}

/// Inverse Mellin transform of `k₁`: supported on `[x², x⁴]` with a peak of
/// `x^{−3} log x` at `u = x³`.
pub fn khat1(u: Interval, x: Interval) -> Result<Interval> {
    check_base(x)?;
    if u.is_empty() || u.lo() <= 0.0 {
        return Err(Error::Domain(format!("k̂₁ needs u > 0, got {u:?}")));
    }
    let x2 = x.sqr();
    let x3 = x2 * x;
    let x4 = x2.sqr();
    let mut out = Interval::EMPTY;
    let mut add = |piece: Interval| out = if out.is_empty() { piece } else { out.hull(&piece) };
    if u.lo() < x2.hi() || u.hi() > x4.lo() {
        add(Interval::ZERO);
    }
    let rising = u.intersect(&Interval::new(x2.lo(), x3.hi()));
    if !rising.is_empty() {
        add(((rising / x2).ln()? / rising).clamp_nonneg());
    }
    let falling = u.intersect(&Interval::new(x3.lo(), x4.hi()));
    if !falling.is_empty() {
        add(((x4 / falling).ln()? / falling).clamp_nonneg());
    }
    Ok(out)
}

/// Inverse Mellin transform of `k₂`:
/// `(4π log x)^{−1/2} exp(−(log(u/x))² / (4 log x))`.
pub fn khat2(u: Interval, x: Interval) -> Result<Interval> {
    check_base(x)?;
    if u.is_empty() || u.lo() <= 0.0 {
        return Err(Error::Domain(format!("k̂₂ needs u > 0, got {u:?}")));
    }
    let l = x.ln()?;
    let norm = (consts::pi() * l * 4.0).sqrt()?.recip();
    let t = (u / x).ln()?;
    Ok(norm * (-(t.sqr() / (l * 4.0))).exp()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removable_point() {
        let v = k1(ComplexBox::point(1.0, 0.0), Interval::point(10.0)).unwrap();
        let l = 10f64.ln();
        assert!(v.re.inflate(1e-14).contains(l * l) && v.im.contains(0.0));
    }

    #[test]
    fn branches_agree() {
        let x = Interval::point(10.0);
        let v = k1(ComplexBox::point(2.0, 0.0), x).unwrap();
        assert!(v.re.inflate(1e-9).contains(8100.0), "{v:?}");
        let near = k1(ComplexBox::point(1.3, 0.2), x).unwrap();
        let s = ComplexBox::point(1.3, 0.2);
        let w = s - Interval::ONE;
        let d = (w.scale(Interval::point(100f64).ln().unwrap()).exp().unwrap()
            - w.scale(x.ln().unwrap()).exp().unwrap())
            / w;
        let direct = d * d;
        assert!(!near.re.is_disjoint(&direct.re) && !near.im.is_disjoint(&direct.im));
    }

    #[test]
    fn gaussian_kernel_values() {
        let x = Interval::point(10.0);
        assert!(k2(ComplexBox::point(1.0, 0.0), x).unwrap().re.inflate(1e-12).contains(100.0));
        let v = k2(ComplexBox::point(-0.5, 0.0), x).unwrap();
        assert!(v.re.inflate(1e-15).contains(10f64.powf(-0.25)));
    }

    #[test]
    fn khat1_shape() {
        let x = Interval::point(10.0);
        let peak = khat1(Interval::point(1000.0), x).unwrap();
        assert!(peak.inflate(1e-16).contains(10f64.ln() / 1000.0));
        assert_eq!(khat1(Interval::point(50.0), x).unwrap(), Interval::ZERO);
        assert_eq!(khat1(Interval::point(20000.0), x).unwrap(), Interval::ZERO);
        assert!(khat1(Interval::new(50.0, 20000.0), x).unwrap().lo() >= 0.0);
    }

    #[test]
    fn khat2_peak() {
        let x = Interval::point(10.0);
        let v = khat2(x, x).unwrap();
        let expect = 1.0 / (4.0 * std::f64::consts::PI * 10f64.ln()).sqrt();
        assert!(v.inflate(1e-15).contains(expect));
    }
}
