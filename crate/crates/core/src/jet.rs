//! Truncated Taylor series with interval coefficients.
//!
//! A [`Jet`] of order `n` carries `f(x), f'(x), f''(x)/2!, …, f⁽ⁿ⁾(x)/n!`.
//! Evaluated at an interval `X` the coefficients enclose the normalized
//! derivatives over all of `X`, which is what the quadrature remainder and
//! the monotonicity checks need. Order 0 is plain interval evaluation.

use crate::error::{Error, Result};
use crate::interval::Interval;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub const MAX_ORDER: usize = 16;

/// Scalars that formulas are written against: plain intervals or jets.
pub trait Real:
    Copy
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
    + Add<Interval, Output = Self>
    + Sub<Interval, Output = Self>
    + Mul<Interval, Output = Self>
    + Div<Interval, Output = Self>
{
    /// A constant with the same shape as `self`.
    fn constant(&self, c: Interval) -> Self;
    fn value(&self) -> Interval;
    fn exp(self) -> Result<Self>;
    fn ln(self) -> Result<Self>;
    fn sqrt(self) -> Result<Self>;
    fn cos(self) -> Result<Self>;
    fn sin(self) -> Result<Self>;
    fn atan(self) -> Result<Self>;
    fn sqr(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn abs(self) -> Self;
    fn min(self, other: Self) -> Self;
    fn max(self, other: Self) -> Self;

    fn recip(self) -> Self {
        self.constant(Interval::ONE) / self
    }

    /// `self^y` for positive `self`.
    fn pow(self, y: Interval) -> Result<Self> {
        (self.ln()? * y).exp()
    }

    /// `c - self`.
    fn rsub(self, c: Interval) -> Self {
        -self + c
    }

    /// `c / self`.
    fn rdiv(self, c: Interval) -> Self {
        self.recip() * c
    }
}

impl Real for Interval {
    fn constant(&self, c: Interval) -> Self {
        c
    }
    fn value(&self) -> Interval {
        *self
    }
    fn exp(self) -> Result<Self> {
        Interval::exp(self)
    }
    fn ln(self) -> Result<Self> {
        Interval::ln(self)
    }
    fn sqrt(self) -> Result<Self> {
        Interval::sqrt(self)
    }
    fn cos(self) -> Result<Self> {
        Interval::cos(self)
    }
    fn sin(self) -> Result<Self> {
        Interval::sin(self)
    }
    fn atan(self) -> Result<Self> {
        Interval::atan(self)
    }
    fn sqr(self) -> Self {
        Interval::sqr(self)
    }
    fn powi(self, n: i32) -> Self {
        Interval::powi(self, n)
    }
    fn abs(self) -> Self {
        Interval::abs(self)
    }
    fn min(self, other: Self) -> Self {
        Interval::min(self, other)
    }
    fn max(self, other: Self) -> Self {
        Interval::max(self, other)
    }
    fn pow(self, y: Interval) -> Result<Self> {
        Interval::pow(self, y)
    }
}

#[derive(Clone, Copy)]
pub struct Jet {
    order: usize,
    c: [Interval; MAX_ORDER + 1],
}

impl std::fmt::Debug for Jet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coeffs()).finish()
    }
}

impl Jet {
    pub fn constant(c: Interval, order: usize) -> Self {
        assert!(order <= MAX_ORDER, "jet order {order} exceeds {MAX_ORDER}");
        let mut j = Jet { order, c: [Interval::ZERO; MAX_ORDER + 1] };
        j.c[0] = c;
        j
    }

    /// The independent variable at `x`.
    pub fn var(x: Interval, order: usize) -> Self {
        let mut j = Jet::constant(x, order);
        if order >= 1 {
            j.c[1] = Interval::ONE;
        }
        j
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.c[..=self.order]
    }

    /// Normalized coefficient `f⁽ᵏ⁾/k!`.
    pub fn coeff(&self, k: usize) -> Interval {
        assert!(k <= self.order);
        self.c[k]
    }

    /// The `k`-th derivative.
    pub fn derivative(&self, k: usize) -> Interval {
        let mut fact = Interval::ONE;
        for i in 2..=k {
            fact = fact * i as f64;
        }
        self.coeff(k) * fact
    }

    fn blank(&self) -> Self {
        Jet::constant(Interval::ZERO, self.order)
    }

    fn entire_from(mut self, k: usize) -> Self {
        for i in k..=self.order {
            self.c[i] = Interval::ENTIRE;
        }
        self
    }

    fn order_with(&self, o: &Jet) -> usize {
        self.order.min(o.order)
    }

    fn map_value(&self, f: impl Fn(Interval) -> Interval) -> Self {
        let mut r = *self;
        for i in 0..=r.order {
            r.c[i] = f(self.c[i]);
        }
        r
    }

    /// `sin` and `cos` together, sharing the recurrence.
    pub fn sin_cos(self) -> Result<(Jet, Jet)> {
        let mut s = self.blank();
        let mut c = self.blank();
        s.c[0] = self.c[0].sin()?;
        c.c[0] = self.c[0].cos()?;
        for k in 1..=self.order {
            let mut sk = Interval::ZERO;
            let mut ck = Interval::ZERO;
            for i in 1..=k {
                let w = self.c[i] * i as f64;
                sk += w * c.c[k - i];
                ck -= w * s.c[k - i];
            }
            s.c[k] = sk / k as f64;
            c.c[k] = ck / k as f64;
        }
        Ok((s, c))
    }

    /// `g ∘ self`, given `g`'s normalized coefficients enclosed over the
    /// range of `self`'s value. Missing coefficients are unbounded.
    pub fn compose(&self, g: &[Interval]) -> Jet {
        let coeff = |k: usize| g.get(k).copied().unwrap_or(Interval::ENTIRE);
        let mut h = *self;
        h.c[0] = Interval::ZERO;
        let mut r = Jet::constant(coeff(0), self.order);
        let mut hk = Jet::constant(Interval::ONE, self.order);
        for k in 1..=self.order {
            hk = hk * h;
            let gk = coeff(k);
            for i in k..=self.order {
                if !hk.c[i].is_point() || hk.c[i].lo() != 0.0 {
                    r.c[i] += gk * hk.c[i];
                }
            }
        }
        r
    }

    /// Coefficients of `d/dx self`, one order lower.
    fn derivative_jet(&self) -> Jet {
        let order = self.order.saturating_sub(1);
        let mut d = Jet::constant(Interval::ZERO, order);
        for i in 0..self.order {
            d.c[i] = self.c[i + 1] * (i + 1) as f64;
        }
        d
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.map_value(|x| -x)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut r = Jet::constant(Interval::ZERO, self.order_with(&o));
        for i in 0..=r.order {
            r.c[i] = self.c[i] + o.c[i];
        }
        r
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        let mut r = Jet::constant(Interval::ZERO, self.order_with(&o));
        for i in 0..=r.order {
            r.c[i] = self.c[i] - o.c[i];
        }
        r
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut r = Jet::constant(Interval::ZERO, self.order_with(&o));
        for k in 0..=r.order {
            let mut acc = Interval::ZERO;
            for i in 0..=k {
                acc += self.c[i] * o.c[k - i];
            }
            r.c[k] = acc;
        }
        r
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let mut q = Jet::constant(Interval::ZERO, self.order_with(&o));
        let b0 = o.c[0];
        if b0.contains_zero() {
            return q.entire_from(0);
        }
        for k in 0..=q.order {
            let mut acc = self.c[k];
            for i in 1..=k {
                acc -= o.c[i] * q.c[k - i];
            }
            q.c[k] = acc / b0;
        }
        q
    }
}

impl Add<Interval> for Jet {
    type Output = Jet;
    fn add(mut self, o: Interval) -> Jet {
        self.c[0] += o;
        self
    }
}

impl Sub<Interval> for Jet {
    type Output = Jet;
    fn sub(mut self, o: Interval) -> Jet {
        self.c[0] -= o;
        self
    }
}

impl Mul<Interval> for Jet {
    type Output = Jet;
    fn mul(self, o: Interval) -> Jet {
        self.map_value(|x| x * o)
    }
}

impl Div<Interval> for Jet {
    type Output = Jet;
    fn div(self, o: Interval) -> Jet {
        self.map_value(|x| x / o)
    }
}

macro_rules! jet_scalar_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for Jet {
            type Output = Jet;
            fn $m(self, o: f64) -> Jet {
                $tr::$m(self, Interval::point(o))
            }
        }
    )*};
}
jet_scalar_ops!(Add add, Sub sub, Mul mul, Div div);

impl Real for Jet {
    fn constant(&self, c: Interval) -> Self {
        Jet::constant(c, self.order)
    }

    fn value(&self) -> Interval {
        self.c[0]
    }

    fn exp(self) -> Result<Self> {
        let mut e = self.blank();
        e.c[0] = self.c[0].exp()?;
        for k in 1..=self.order {
            let mut acc = Interval::ZERO;
            for i in 1..=k {
                acc += self.c[i] * e.c[k - i] * i as f64;
            }
            e.c[k] = acc / k as f64;
        }
        Ok(e)
    }

    fn ln(self) -> Result<Self> {
        let a0 = self.c[0];
        let mut l = self.blank();
        l.c[0] = a0.ln()?;
        for k in 1..=self.order {
            let mut acc = Interval::ZERO;
            for i in 1..k {
                acc += l.c[i] * self.c[k - i] * i as f64;
            }
            l.c[k] = (self.c[k] - acc / k as f64) / a0;
        }
        Ok(l)
    }

    fn sqrt(self) -> Result<Self> {
        let mut s = self.blank();
        s.c[0] = self.c[0].sqrt()?;
        if self.order == 0 {
            return Ok(s);
        }
        if s.c[0].contains_zero() {
            return Ok(s.entire_from(1));
        }
        let two_s0 = s.c[0] * 2.0;
        for k in 1..=self.order {
            let mut acc = self.c[k];
            for i in 1..k {
                acc -= s.c[i] * s.c[k - i];
            }
            s.c[k] = acc / two_s0;
        }
        Ok(s)
    }

    fn cos(self) -> Result<Self> {
        Ok(self.sin_cos()?.1)
    }

    fn sin(self) -> Result<Self> {
        Ok(self.sin_cos()?.0)
    }

    fn atan(self) -> Result<Self> {
        let mut t = self.blank();
        t.c[0] = self.c[0].atan()?;
        if self.order == 0 {
            return Ok(t);
        }
        let mut lower = self;
        lower.order = self.order - 1;
        let g = self.derivative_jet() / (lower.sqr() + 1.0);
        for k in 1..=self.order {
            t.c[k] = g.c[k - 1] / k as f64;
        }
        Ok(t)
    }

    fn sqr(self) -> Self {
        let mut r = self * self;
        r.c[0] = self.c[0].sqr();
        r
    }

    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return self.constant(Interval::ONE);
        }
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut acc = self.constant(Interval::ONE);
        let mut base = self;
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            k >>= 1;
        }
        acc.c[0] = self.c[0].powi(n);
        acc
    }

    fn abs(self) -> Self {
        let v = self.c[0];
        if v.lo() > 0.0 {
            self
        } else if v.hi() < 0.0 {
            -self
        } else {
            let mut r = self.entire_from(1);
            r.c[0] = v.abs();
            r
        }
    }

    fn min(self, o: Self) -> Self {
        let (a, b) = (self.c[0], o.c[0]);
        if a.hi() < b.lo() {
            self
        } else if b.hi() < a.lo() {
            o
        } else {
            let mut r = Jet::constant(a.min(b), self.order_with(&o));
            r = r.entire_from(1);
            r.c[0] = a.min(b);
            r
        }
    }

    fn max(self, o: Self) -> Self {
        -((-self).min(-o))
    }
}

/// Rejects jets whose leading value is not finite.
pub fn finite_value<T: Real>(x: T, what: &str) -> Result<T> {
    let v = x.value();
    if v.is_empty() || !v.is_finite() {
        Err(Error::Domain(format!("{what} is not finite: {v:?}")))
    } else {
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Interval, x: f64, tol: f64) -> bool {
        a.inflate(tol).contains(x)
    }

    #[test]
    fn exp_coefficients_are_reciprocal_factorials() {
        let e = Real::exp(Jet::var(Interval::ZERO, 6)).unwrap();
        let mut f = 1.0;
        for k in 0..=6 {
            if k > 0 {
                f *= k as f64;
            }
            assert!(close(e.coeff(k), 1.0 / f, 1e-15), "k={k}");
        }
    }

    #[test]
    fn log_series_at_one() {
        let l = Real::ln(Jet::var(Interval::ONE, 5)).unwrap();
        for k in 1..=5 {
            let expect = if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
            assert!(close(l.coeff(k), expect, 1e-15));
        }
    }

    #[test]
    fn atan_derivative() {
        let x = Jet::var(Interval::point(0.5), 3);
        let t = Real::atan(x).unwrap();
        assert!(close(t.derivative(1), 1.0 / 1.25, 1e-15));
        assert!(close(t.derivative(2), -2.0 * 0.5 / (1.25 * 1.25), 1e-14));
    }

    #[test]
    fn sin_cos_second_derivatives() {
        let x = Jet::var(Interval::point(0.3), 4);
        let (s, c) = x.sin_cos().unwrap();
        assert!(close(s.derivative(2), -(0.3f64).sin(), 1e-14));
        assert!(close(c.derivative(3), (0.3f64).sin(), 1e-14));
    }

    #[test]
    fn quotient_and_sqrt() {
        let x = Jet::var(Interval::point(4.0), 3);
        let r = Real::sqrt(x).unwrap();
        assert!(close(r.derivative(1), 0.25, 1e-15));
        let q = x.recip();
        assert!(close(q.derivative(2), 2.0 / 64.0, 1e-15));
    }

    #[test]
    fn order_zero_is_interval_evaluation() {
        let x = Interval::new(1.0, 2.0);
        let j = Real::exp(Jet::var(x, 0) * 2.0).unwrap();
        assert_eq!(j.value(), Real::exp(x * 2.0).unwrap());
    }

    #[test]
    fn powers_match_products() {
        let x = Jet::var(Interval::point(1.5), 4);
        let p = x.powi(3);
        assert!(close(p.derivative(1), 3.0 * 2.25, 1e-14));
        assert!(close(p.derivative(3), 6.0, 1e-14));
    }
}
