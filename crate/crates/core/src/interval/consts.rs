//! Named transcendental constants as enclosures of width at most two ulps.

use super::round::{sqrt_dn, sqrt_up};
use super::Interval;
use std::f64::consts as c;

/// Enclosure of a constant given by its nearest double and a longer decimal.
fn around(text: &str) -> Interval {
    let x: f64 = text.parse().expect("constant literal");
    Interval::new(x.next_down(), x.next_up())
}

pub fn pi() -> Interval {
    Interval::new(c::PI, c::PI.next_up())
}

pub fn e() -> Interval {
    Interval::new(c::E, c::E.next_up())
}

pub fn ln2() -> Interval {
    Interval::new(c::LN_2, c::LN_2.next_up())
}

pub fn ln10() -> Interval {
    Interval::new(c::LN_10.next_down(), c::LN_10)
}

pub fn ln3() -> Interval {
    around("1.098612288668109691395245236922525704647")
}

pub fn ln5() -> Interval {
    around("1.609437912434100374600759333226187639525")
}

pub fn sqrt5() -> Interval {
    Interval::new(sqrt_dn(5.0), sqrt_up(5.0))
}

pub fn sqrt17() -> Interval {
    Interval::new(sqrt_dn(17.0), sqrt_up(17.0))
}

pub fn sqrt_pi() -> Interval {
    let p = pi();
    Interval::new(sqrt_dn(p.lo()), sqrt_up(p.hi()))
}

pub fn ln_pi() -> Interval {
    pi().ln().expect("pi is positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths_are_tiny() {
        for k in [pi(), e(), ln2(), ln3(), ln5(), ln10(), sqrt5(), sqrt17(), sqrt_pi()] {
            assert!(k.width() <= 2.0 * k.mag() * f64::EPSILON, "{k:?}");
        }
    }

    #[test]
    fn known_decimal_expansions() {
        assert!(pi().contains(std::f64::consts::PI));
        assert!(pi().hi() > std::f64::consts::PI);
        assert!(ln3().contains(1.0986122886681098));
        assert!(sqrt5().contains(2.23606797749979));
        assert!((sqrt17() * sqrt17()).contains(17.0));
    }
}
