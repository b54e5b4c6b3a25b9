//! Directed rounding for the four basic operations and square root.
//!
//! Each routine computes the round-to-nearest result and then uses an
//! error-free transformation to learn on which side of the exact value it
//! landed. Only when the result is on the wrong side is it nudged by one ulp,
//! so exactly representable results stay exact.

/// Below this magnitude fma residuals may underflow and lose their sign.
const TINY: f64 = 1e-290;

#[inline]
fn finite(x: f64) -> bool {
    x.is_finite()
}

/// Overflowed round-to-nearest results are clamped back to the largest finite
/// value on the side that keeps the bound valid.
#[inline]
fn fix_overflow_dn(r: f64, exact_finite: bool) -> f64 {
    if exact_finite && r == f64::INFINITY {
        f64::MAX
    } else {
        r
    }
}

#[inline]
fn fix_overflow_up(r: f64, exact_finite: bool) -> f64 {
    if exact_finite && r == f64::NEG_INFINITY {
        f64::MIN
    } else {
        r
    }
}

#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

pub fn add_dn(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !(finite(a) && finite(b)) {
        return s;
    }
    if !finite(s) {
        return fix_overflow_dn(s, true);
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !(finite(a) && finite(b)) {
        return s;
    }
    if !finite(s) {
        return fix_overflow_up(s, true);
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

pub fn sub_dn(a: f64, b: f64) -> f64 {
    add_dn(a, -b)
}

pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

/// Product with the interval convention 0 · ∞ = 0.
#[inline]
fn mul_raw(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        a * b
    }
}

pub fn mul_dn(a: f64, b: f64) -> f64 {
    let p = mul_raw(a, b);
    if p == 0.0 || !(finite(a) && finite(b)) {
        return p;
    }
    if !finite(p) {
        return fix_overflow_dn(p, true);
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    if a.mul_add(b, -p) < 0.0 {
        p.next_down()
    } else {
        p
    }
}

pub fn mul_up(a: f64, b: f64) -> f64 {
    let p = mul_raw(a, b);
    if p == 0.0 || !(finite(a) && finite(b)) {
        return p;
    }
    if !finite(p) {
        return fix_overflow_up(p, true);
    }
    if p.abs() < TINY {
        return p.next_up();
    }
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Sign of `a/b - q` for a round-to-nearest quotient `q`, or `None` when the
/// residual cannot be trusted.
#[inline]
fn div_side(a: f64, b: f64, q: f64) -> Option<f64> {
    if q.abs() < TINY || a.abs() < TINY {
        return None;
    }
    let r = (-q).mul_add(b, a);
    Some(if b > 0.0 { r } else { -r })
}

pub fn div_dn(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !(finite(a) && finite(b)) || b == 0.0 {
        return q;
    }
    if a == 0.0 {
        return 0.0;
    }
    if !finite(q) {
        return fix_overflow_dn(q, true);
    }
    match div_side(a, b, q) {
        Some(s) if s >= 0.0 => q,
        _ => q.next_down(),
    }
}

pub fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !(finite(a) && finite(b)) || b == 0.0 {
        return q;
    }
    if a == 0.0 {
        return 0.0;
    }
    if !finite(q) {
        return fix_overflow_up(q, true);
    }
    match div_side(a, b, q) {
        Some(s) if s <= 0.0 => q,
        _ => q.next_up(),
    }
}

pub fn sqrt_dn(x: f64) -> f64 {
    let s = x.sqrt();
    if !finite(s) || s == 0.0 {
        return s;
    }
    if x < TINY {
        return s.next_down().max(0.0);
    }
    if (-s).mul_add(s, x) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub fn sqrt_up(x: f64) -> f64 {
    let s = x.sqrt();
    if !finite(s) {
        return s;
    }
    if s == 0.0 {
        return 0.0;
    }
    if x < TINY {
        return s.next_up();
    }
    if (-s).mul_add(s, x) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// Two-ulp widening for results of library transcendentals.
pub fn widen_dn(x: f64) -> f64 {
    if x.is_infinite() {
        x
    } else {
        x.next_down().next_down()
    }
}

pub fn widen_up(x: f64) -> f64 {
    if x.is_infinite() {
        x
    } else {
        x.next_up().next_up()
    }
}
