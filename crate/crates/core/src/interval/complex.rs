use super::Interval;
use crate::error::Result;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rectangular enclosure of a set of complex numbers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub const ZERO: ComplexBox = ComplexBox { re: Interval::ZERO, im: Interval::ZERO };
    pub const ONE: ComplexBox = ComplexBox { re: Interval::ONE, im: Interval::ZERO };

    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn real(re: Interval) -> Self {
        ComplexBox { re, im: Interval::ZERO }
    }

    pub fn point(re: f64, im: f64) -> Self {
        ComplexBox { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn conj(self) -> Self {
        ComplexBox { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(self) -> Interval {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(self) -> Interval {
        self.norm_sqr().sqrt().expect("sum of squares is nonnegative")
    }

    pub fn scale(self, k: Interval) -> Self {
        ComplexBox { re: self.re * k, im: self.im * k }
    }

    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        ComplexBox { re: self.re / d, im: -self.im / d }
    }

    pub fn exp(self) -> Result<Self> {
        let r = self.re.exp()?;
        Ok(ComplexBox { re: r * self.im.cos()?, im: r * self.im.sin()? })
    }

    pub fn powi(self, n: u32) -> Self {
        let mut acc = ComplexBox::ONE;
        let mut base = self;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    /// `base^self` for a real positive base.
    pub fn real_base_pow(self, base: Interval) -> Result<Self> {
        self.scale(base.ln()?).exp()
    }

    /// Square box of half-width `r` around zero.
    pub fn disk(r: f64) -> Self {
        let d = Interval::new(-r, r);
        ComplexBox { re: d, im: d }
    }

    pub fn contains(&self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }
}

impl Neg for ComplexBox {
    type Output = ComplexBox;
    fn neg(self) -> ComplexBox {
        ComplexBox { re: -self.re, im: -self.im }
    }
}

impl Add for ComplexBox {
    type Output = ComplexBox;
    fn add(self, o: ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for ComplexBox {
    type Output = ComplexBox;
    fn sub(self, o: ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for ComplexBox {
    type Output = ComplexBox;
    fn mul(self, o: ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl Div for ComplexBox {
    type Output = ComplexBox;
    fn div(self, o: ComplexBox) -> ComplexBox {
        let d = o.norm_sqr();
        ComplexBox { re: (self.re * o.re + self.im * o.im) / d, im: (self.im * o.re - self.re * o.im) / d }
    }
}

impl Add<Interval> for ComplexBox {
    type Output = ComplexBox;
    fn add(self, o: Interval) -> ComplexBox {
        ComplexBox { re: self.re + o, im: self.im }
    }
}

impl Sub<Interval> for ComplexBox {
    type Output = ComplexBox;
    fn sub(self, o: Interval) -> ComplexBox {
        ComplexBox { re: self.re - o, im: self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_contains_pointwise_value() {
        let z = ComplexBox::new(Interval::new(3.0, 3.0), Interval::new(4.0, 4.0));
        assert!(z.abs().contains(5.0));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = ComplexBox::point(1.5, -2.0);
        let b = ComplexBox::point(0.25, 3.0);
        let q = (a * b) / b;
        assert!(q.contains(1.5, -2.0));
    }

    #[test]
    fn powers_agree_with_repeated_products() {
        let z = ComplexBox::point(0.5, 0.75);
        let p = z.powi(3);
        let q = z * z * z;
        assert!(!p.re.is_disjoint(&q.re) && !p.im.is_disjoint(&q.im));
    }
}
