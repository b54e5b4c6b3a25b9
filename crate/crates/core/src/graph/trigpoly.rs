//! Nonnegative cosine polynomials `Q(φ) = Σ b_m cos(mφ)`.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::Real;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrigPoly {
    coeffs: Vec<Interval>,
}

impl TrigPoly {
    /// Fails with a shape error if any coefficient may be negative.
    pub fn new(coeffs: Vec<Interval>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Shape("a cosine polynomial needs at least b_0".into()));
        }
        if let Some((m, b)) = coeffs.iter().enumerate().find(|(_, b)| b.is_empty() || b.lo() < 0.0) {
            return Err(Error::Shape(format!("coefficient b_{m} = {b} is not nonnegative")));
        }
        Ok(TrigPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `b_m`, zero beyond the degree.
    pub fn b(&self, m: usize) -> Interval {
        self.coeffs.get(m).copied().unwrap_or(Interval::ZERO)
    }

    /// `Q(0) = Σ b_m`.
    pub fn at_zero(&self) -> Interval {
        self.coeffs.iter().copied().sum()
    }

    /// `Q(φ)` from the cosine series.
    pub fn eval<T: Real>(&self, phi: T) -> Result<T> {
        let mut acc = phi.constant(self.coeffs[0]);
        for (m, &b) in self.coeffs.iter().enumerate().skip(1) {
            acc = acc + (phi * m as f64).cos()? * b;
        }
        Ok(acc)
    }
}

/// Cosine-series coefficients of `4(1 + c)(a + c)²` with `c = cos φ`.
///
/// Expanding gives `4[a² + (2a + a²)c + (1 + 2a)c² + c³]`; then
/// `c² = (1 + cos 2φ)/2` and `c³ = (3 cos φ + cos 3φ)/4`.
pub fn expand_q(a: Interval) -> Result<TrigPoly> {
    if a.is_empty() || a.lo() <= 0.0 {
        return Err(Error::Domain(format!("Q shape parameter must be positive, got {a}")));
    }
    let a2 = a.sqr();
    let lin = a * 2.0 + a2;
    let quad = a * 2.0 + 1.0;
    let b0 = (a2 + quad / 2.0) * 4.0;
    let b1 = (lin + Interval::point(0.75)) * 4.0;
    let b2 = quad * 2.0;
    let b3 = Interval::ONE;
    let q = TrigPoly::new(vec![b0, b1, b2, b3])?;
    if !(b0.hi() < b1.lo()) {
        return Err(Error::Shape(format!("need b_0 < b_1, got {b0} and {b1}")));
    }
    Ok(q)
}

/// `4(1 + cos φ)(a + cos φ)²`, nonnegative by construction.
pub fn q_product<T: Real>(a: Interval, phi: T) -> Result<T> {
    let c = phi.cos()?;
    Ok((c + 1.0) * (c + a).sqr() * 4.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::consts;

    #[test]
    fn published_shape() {
        let q = expand_q(Interval::decimal(0.51)).unwrap();
        for (b, want) in q.coeffs().iter().zip([5.0804, 8.1204, 4.04, 1.0]) {
            assert!(b.contains(want) && b.width() < 1e-14, "{b:?} vs {want}");
        }
        assert!(q.at_zero().contains(18.2408));
    }

    #[test]
    fn cube_of_one_plus_cos() {
        let q = expand_q(Interval::ONE).unwrap();
        let want = [10.0, 15.0, 6.0, 1.0];
        for (b, w) in q.coeffs().iter().zip(want) {
            assert_eq!((b.lo(), b.hi()), (w, w));
        }
    }

    #[test]
    fn series_matches_product() {
        let a = Interval::decimal(0.51);
        let q = expand_q(a).unwrap();
        for k in 0..1000 {
            let phi = Interval::point(k as f64 * 2.0 * std::f64::consts::PI / 1000.0);
            let s = q.eval(phi).unwrap();
            let p = q_product(a, phi).unwrap();
            assert!(!s.is_disjoint(&p), "φ = {phi:?}: {s:?} vs {p:?}");
        }
        assert!(q.eval(consts::pi()).unwrap().contains(0.0));
    }

    #[test]
    fn negative_coefficients_are_rejected() {
        assert!(matches!(TrigPoly::new(vec![Interval::ONE, Interval::point(-0.5)]), Err(Error::Shape(_))));
        assert!(expand_q(Interval::point(-1.0)).is_err());
    }

    #[test]
    fn gap_between_first_coefficients() {
        for a in [0.3, 0.51, 1.0, 3.0] {
            let q = expand_q(Interval::point(a)).unwrap();
            assert!((q.b(1) - q.b(0)).contains(4.0 * a + 1.0));
        }
    }
}
