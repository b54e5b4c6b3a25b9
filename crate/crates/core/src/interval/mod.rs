//! Outward-rounded interval arithmetic over the extended reals.

mod complex;
pub mod consts;
mod elem;
mod printed;
pub mod round;

pub use complex::ComplexBox;
pub use printed::{matches_printed, Adjudication, PrintedDecimal, PrintedValue};

use crate::error::{Error, Result};
use round::*;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A closed interval `[lo, hi]` guaranteed to contain the real it stands for.
///
/// The empty interval is represented by NaN endpoints and is only produced
/// by [`Interval::intersect`] on disjoint inputs.
#[derive(Clone, Copy)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: f64::NAN, hi: f64::NAN };
    pub const ENTIRE: Interval = Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY };
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Builds `[lo, hi]`. Panics if the endpoints are out of order or NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "invalid interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn try_new(lo: f64, hi: f64) -> Result<Self> {
        if lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::Domain(format!("invalid interval [{lo}, {hi}]")))
        }
    }

    pub const fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// The smallest interval around a float that was written as a decimal
    /// literal: a point when the decimal is exactly representable, otherwise
    /// the two neighbouring floats.
    pub fn decimal(x: f64) -> Self {
        if !x.is_finite() {
            return Interval::point(x);
        }
        let text = format!("{x}");
        if decimal_is_dyadic(&text) {
            Interval::point(x)
        } else {
            Interval { lo: x.next_down(), hi: x.next_up() }
        }
    }

    /// Parses a decimal string (optionally with exponent) into an enclosure.
    pub fn parse_decimal(s: &str) -> Result<Self> {
        let x: f64 = s.trim().parse().map_err(|_| Error::Parse(format!("not a decimal: {s:?}")))?;
        if !x.is_finite() {
            return Err(Error::Parse(format!("not a finite decimal: {s:?}")));
        }
        let canonical = format!("{x}");
        if canonical == normalize_decimal(s) && decimal_is_dyadic(&canonical) {
            Ok(Interval::point(x))
        } else {
            Ok(Interval { lo: x.next_down(), hi: x.next_up() })
        }
    }

    /// Enclosure of the rational `p / q`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        let (a, b) = (p as f64, q as f64);
        debug_assert!(a as i64 == p && b as i64 == q, "ratio operands exceed 2^53");
        Interval { lo: div_dn(a, b), hi: div_up(a, b) }
    }

    /// Hull of two floats in either order.
    pub fn hull_of(a: f64, b: f64) -> Self {
        Interval { lo: a.min(b), hi: a.max(b) }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lo.is_nan()
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        sub_up(self.hi, self.lo)
    }

    /// A float inside the interval, near its centre.
    pub fn mid(&self) -> f64 {
        if self.is_empty() {
            return f64::NAN;
        }
        match (self.lo.is_finite(), self.hi.is_finite()) {
            (true, true) => {
                let m = 0.5 * self.lo + 0.5 * self.hi;
                m.clamp(self.lo, self.hi)
            }
            (false, false) => 0.0,
            (false, true) => {
                if self.hi > 0.0 {
                    0.0
                } else {
                    self.hi * 2.0 - 1.0
                }
            }
            (true, false) => {
                if self.lo < 0.0 {
                    0.0
                } else {
                    self.lo * 2.0 + 1.0
                }
            }
        }
    }

    /// Largest absolute value.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value.
    pub fn mig(&self) -> f64 {
        if self.contains(0.0) {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }

    pub fn interior_of(&self, other: &Interval) -> bool {
        self.is_empty() || (other.lo < self.lo && self.hi < other.hi)
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.is_empty() || other.is_empty() || self.hi < other.lo || other.hi < self.lo
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        if self.is_empty() {
            return *other;
        }
        if other.is_empty() {
            return *self;
        }
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if self.is_empty() || other.is_empty() || lo > hi {
            Interval::EMPTY
        } else {
            Interval { lo, hi }
        }
    }

    /// Halves at the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval { lo: self.lo, hi: m }, Interval { lo: m, hi: self.hi })
    }

    /// Widens both ends by `eps` (rounded outward).
    pub fn inflate(&self, eps: f64) -> Interval {
        Interval { lo: sub_dn(self.lo, eps), hi: add_up(self.hi, eps) }
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    /// Division that refuses divisors containing zero.
    pub fn checked_div(self, rhs: Interval) -> Result<Interval> {
        if rhs.contains_zero() {
            Err(Error::DivisionByZeroInterval)
        } else {
            Ok(self / rhs)
        }
    }

    pub fn recip(self) -> Interval {
        Interval::ONE / self
    }

    pub fn sqr(self) -> Interval {
        if self.is_empty() {
            return self;
        }
        let lo_mag = self.mig();
        let hi_mag = self.mag();
        Interval { lo: mul_dn(lo_mag, lo_mag), hi: mul_up(hi_mag, hi_mag) }
    }

    pub fn powi(self, n: i32) -> Interval {
        if self.is_empty() {
            return self;
        }
        if n == 0 {
            return Interval::ONE;
        }
        if n < 0 {
            return self.powi(-n).recip();
        }
        let n = n as u32;
        if n.is_multiple_of(2) {
            Interval { lo: pow_dn(self.mig(), n), hi: pow_up(self.mag(), n) }
        } else {
            let lo = if self.lo >= 0.0 { pow_dn(self.lo, n) } else { -pow_up(-self.lo, n) };
            let hi = if self.hi >= 0.0 { pow_up(self.hi, n) } else { -pow_dn(-self.hi, n) };
            Interval { lo, hi }
        }
    }

    pub fn abs(self) -> Interval {
        if self.is_empty() {
            return self;
        }
        Interval { lo: self.mig(), hi: self.mag() }
    }

    pub fn min(self, other: Interval) -> Interval {
        if self.is_empty() || other.is_empty() {
            return Interval::EMPTY;
        }
        Interval { lo: self.lo.min(other.lo), hi: self.hi.min(other.hi) }
    }

    pub fn max(self, other: Interval) -> Interval {
        if self.is_empty() || other.is_empty() {
            return Interval::EMPTY;
        }
        Interval { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    /// Clamps to `[0, ∞)` when the expression is known to be nonnegative.
    pub fn clamp_nonneg(self) -> Interval {
        if self.is_empty() || self.hi < 0.0 {
            return self;
        }
        Interval { lo: self.lo.max(0.0), hi: self.hi }
    }

    /// Smallest integer interval containing `⌈x⌉` for all `x` in `self`.
    pub fn ceil(self) -> Interval {
        Interval { lo: self.lo.ceil(), hi: self.hi.ceil() }
    }

    /// Rounds up to a multiple of `10^-digits`: the result contains the
    /// rounded value of every point of `self`.
    pub fn ceil_decimal(self, digits: i32) -> Interval {
        let scale = 10f64.powi(digits);
        let up = Interval { lo: mul_dn(self.lo, scale), hi: mul_up(self.hi, scale) }.ceil();
        let lo = div_dn(up.lo, scale);
        let hi = div_up(up.hi, scale);
        Interval { lo, hi }
    }
}

fn pow_dn(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..n {
        acc = mul_dn(acc, x);
    }
    acc
}

fn pow_up(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..n {
        acc = mul_up(acc, x);
    }
    acc
}

fn normalize_decimal(s: &str) -> String {
    match s.trim().parse::<f64>() {
        Ok(x) => format!("{x}"),
        Err(_) => String::new(),
    }
}

/// Whether a plain decimal (no exponent) denotes a dyadic rational, i.e. the
/// digits after the point form an integer divisible by `5^k`.
fn decimal_is_dyadic(text: &str) -> bool {
    let body = text.trim_start_matches('-');
    let Some((int_part, frac)) = body.split_once('.') else {
        return !body.contains(['e', 'E']);
    };
    if frac.contains(['e', 'E']) || frac.len() > 25 {
        return false;
    }
    let digits = format!("{int_part}{frac}");
    let Ok(m) = digits.parse::<u128>() else {
        return false;
    };
    let five = 5u128.pow(frac.len() as u32);
    m % five == 0
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[empty]")
        } else {
            write!(f, "[{:e}, {:e}]", self.lo, self.hi)
        }
    }
}

/// Endpoint equality, with all empty intervals equal.
impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        (self.is_empty() && other.is_empty()) || (self.lo == other.lo && self.hi == other.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Endpoints serialize as shortest round-trip decimal strings so that
/// certificates reproduce the exact binary values.
#[derive(serde::Serialize, serde::Deserialize)]
struct Endpoints {
    lo: String,
    hi: String,
}

impl serde::Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Endpoints { lo: format!("{:e}", self.lo), hi: format!("{:e}", self.hi) }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let e = Endpoints::deserialize(d)?;
        let lo: f64 = e.lo.parse().map_err(D::Error::custom)?;
        let hi: f64 = e.hi.parse().map_err(D::Error::custom)?;
        if lo.is_nan() && hi.is_nan() {
            return Ok(Interval::EMPTY);
        }
        Interval::try_new(lo, hi).map_err(D::Error::custom)
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        Interval { lo: add_dn(self.lo, rhs.lo), hi: add_up(self.hi, rhs.hi) }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        Interval { lo: sub_dn(self.lo, rhs.hi), hi: sub_up(self.hi, rhs.lo) }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        if a >= 0.0 && c >= 0.0 {
            return Interval { lo: mul_dn(a, c), hi: mul_up(b, d) };
        }
        let lo = mul_dn(a, c).min(mul_dn(a, d)).min(mul_dn(b, c)).min(mul_dn(b, d));
        let hi = mul_up(a, c).max(mul_up(a, d)).max(mul_up(b, c)).max(mul_up(b, d));
        Interval { lo, hi }
    }
}

impl Div for Interval {
    type Output = Interval;
    /// Divisors containing zero give the entire line; see
    /// [`Interval::checked_div`] for the strict variant.
    fn div(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        if rhs.contains_zero() {
            return Interval::ENTIRE;
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = div_dn(a, c).min(div_dn(a, d)).min(div_dn(b, c)).min(div_dn(b, d));
        let hi = div_up(a, c).max(div_up(a, d)).max(div_up(b, c)).max(div_up(b, d));
        Interval { lo, hi }
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for Interval {
            type Output = Interval;
            fn $m(self, rhs: f64) -> Interval {
                $tr::$m(self, Interval::point(rhs))
            }
        }
        impl $tr<Interval> for f64 {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                $tr::$m(Interval::point(self), rhs)
            }
        }
    )*};
}
scalar_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign for Interval {
    fn add_assign(&mut self, rhs: Interval) {
        *self = *self + rhs;
    }
}

impl SubAssign for Interval {
    fn sub_assign(&mut self, rhs: Interval) {
        *self = *self - rhs;
    }
}

impl MulAssign for Interval {
    fn mul_assign(&mut self, rhs: Interval) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Interval {
    fn sum<I: Iterator<Item = Interval>>(iter: I) -> Interval {
        iter.fold(Interval::ZERO, |a, b| a + b)
    }
}
