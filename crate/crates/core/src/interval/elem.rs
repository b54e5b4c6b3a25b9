//! Elementary functions. Library results are widened by two ulps; monotone
//! functions are evaluated at the endpoints.

use super::consts;
use super::round::{sqrt_dn, sqrt_up, widen_dn, widen_up};
use super::Interval;
use crate::error::{Error, Result};

fn exp_dn(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        widen_dn(x.exp()).max(0.0)
    }
}

fn exp_up(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else if x == f64::NEG_INFINITY {
        0.0
    } else {
        widen_up(x.exp())
    }
}

fn ln_dn(x: f64) -> f64 {
    if x == 1.0 {
        0.0
    } else {
        widen_dn(x.ln())
    }
}

fn ln_up(x: f64) -> f64 {
    if x == 1.0 {
        0.0
    } else {
        widen_up(x.ln())
    }
}

impl Interval {
    pub fn exp(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        Ok(Interval::new(exp_dn(self.lo()), exp_up(self.hi())))
    }

    pub fn ln(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        if !(self.lo() > 0.0) {
            return Err(Error::Domain(format!("log of {self:?}")));
        }
        Ok(Interval::new(ln_dn(self.lo()), ln_up(self.hi())))
    }

    pub fn sqrt(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        if self.lo() < 0.0 {
            return Err(Error::Domain(format!("sqrt of {self:?}")));
        }
        Ok(Interval::new(sqrt_dn(self.lo()), sqrt_up(self.hi())))
    }

    pub fn atan(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        let half_pi = consts::pi() * 0.5;
        let lo = if self.lo() == 0.0 { 0.0 } else { widen_dn(self.lo().atan()) };
        let hi = if self.hi() == 0.0 { 0.0 } else { widen_up(self.hi().atan()) };
        Ok(Interval::new(lo.max(-half_pi.hi()), hi.min(half_pi.hi())))
    }

    /// Cosine with rigorous detection of the extrema at multiples of π.
    pub fn cos(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        let full = Interval::new(-1.0, 1.0);
        if !self.is_finite() || self.mag() > 1e15 {
            return Ok(full);
        }
        let pi = consts::pi();
        if self.width() >= 2.0 * pi.lo() {
            return Ok(full);
        }
        let end = |x: f64, up: bool| -> f64 {
            if x == 0.0 {
                return 1.0;
            }
            let c = x.cos();
            if up {
                widen_up(c).min(1.0)
            } else {
                widen_dn(c).max(-1.0)
            }
        };
        let mut lo = end(self.lo(), false).min(end(self.hi(), false));
        let mut hi = end(self.lo(), true).max(end(self.hi(), true));
        let k_first = (self.lo() / pi.hi()).floor() as i64 - 1;
        let k_last = (self.hi() / pi.lo()).ceil() as i64 + 1;
        for k in k_first..=k_last {
            let at = pi * (k as f64);
            if at.is_disjoint(&self) {
                continue;
            }
            if k.rem_euclid(2) == 0 {
                hi = 1.0;
            } else {
                lo = -1.0;
            }
        }
        Ok(Interval::new(lo, hi))
    }

    pub fn sin(self) -> Result<Interval> {
        if self.is_empty() {
            return Ok(self);
        }
        if self.is_point() && self.lo() == 0.0 {
            return Ok(Interval::ZERO);
        }
        (self - consts::pi() * 0.5).cos()
    }

    /// `self^y` for a positive base, via `exp(y ln self)`.
    pub fn pow(self, y: Interval) -> Result<Interval> {
        if self.is_empty() || y.is_empty() {
            return Ok(Interval::EMPTY);
        }
        if self.is_point() && self.lo() == 1.0 {
            return Ok(Interval::ONE);
        }
        (y * self.ln()?).exp()
    }

    pub fn powf(self, y: f64) -> Result<Interval> {
        self.pow(Interval::point(y))
    }

    /// `10^self`.
    pub fn exp10(self) -> Result<Interval> {
        (self * consts::ln10()).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_zero_is_exact() {
        assert_eq!(Interval::ZERO.exp().unwrap(), Interval::ONE);
    }

    #[test]
    fn log_of_e() {
        let l = consts::e().ln().unwrap();
        assert!(l.contains(1.0));
        assert!(l.width() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn cos_over_a_period() {
        let x = Interval::new(0.0, (consts::pi() * 2.0).hi());
        assert_eq!(x.cos().unwrap(), Interval::new(-1.0, 1.0));
    }

    #[test]
    fn cos_detects_interior_minimum() {
        let c = Interval::new(3.0, 3.3).cos().unwrap();
        assert_eq!(c.lo(), -1.0);
        assert!(c.hi() < -0.98);
    }

    #[test]
    fn domain_errors() {
        assert!(Interval::new(-1.0, 1.0).ln().is_err());
        assert!(Interval::new(-1.0, 1.0).sqrt().is_err());
    }

    #[test]
    fn sin_small() {
        let s = Interval::point(0.5).sin().unwrap();
        assert!(s.contains(0.5f64.sin()));
        assert!(s.width() < 1e-15);
    }
}
