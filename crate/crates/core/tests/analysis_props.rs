//! Properties of the special functions and the quadrature.

use leastprime::analysis::digamma::digamma_re_shifted;
use leastprime::analysis::{integrate, khat1, neg_zeta_log_deriv, v_winckler, QuadOptions};
use leastprime::interval::consts;
use leastprime::{ComplexBox, Interval, Real};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    #[test]
    fn digamma_real_part_obeys_the_log_bounds(re in 0.5001..100.0f64, im in -100.0..100.0f64) {
        let s = ComplexBox::point(re, im);
        let v = digamma_re_shifted(s, 8, 6).unwrap();
        let log_abs = s.abs().ln().unwrap();
        prop_assert!(v.hi() <= (log_abs + Interval::ratio(1, 3)).hi(), "{v} at {re}+{im}i");
        prop_assert!(v.lo() >= (log_abs - Interval::ratio(4, 3)).lo(), "{v} at {re}+{im}i");
    }

    #[test]
    fn neg_zeta_log_deriv_decreases(a in 1.2..20.0f64, gap in 0.05..2.0f64) {
        let lo = neg_zeta_log_deriv(Interval::point(a)).unwrap();
        let hi = neg_zeta_log_deriv(Interval::point(a + gap)).unwrap();
        prop_assert!(lo.lo() > hi.hi(), "f({a}) = {lo}, f({}) = {hi}", a + gap);
    }

    #[test]
    fn khat1_is_nonnegative_and_supported(x in 2.0..20.0f64, t in 0.1..5.0f64) {
        let xi = Interval::point(x);
        let u = Interval::point(x.powf(t));
        let v = khat1(u, xi).unwrap();
        prop_assert!(v.lo() >= 0.0);
        if !(1.99..=4.01).contains(&t) {
            prop_assert_eq!(v, Interval::ZERO);
        }
    }

    #[test]
    fn khat1_is_continuous_at_the_break(x in 2.0..20.0f64) {
        let xi = Interval::point(x);
        let x3 = xi.powi(3);
        let eps = x3.hi() * 1e-12;
        let left = khat1(Interval::point(x3.lo() - eps), xi).unwrap();
        let right = khat1(Interval::point(x3.hi() + eps), xi).unwrap();
        prop_assert!(!left.inflate(1e-9 * left.mag()).intersect(&right).is_empty(), "{left} vs {right}");
    }

    #[test]
    fn winckler_weight_is_even_and_increasing(t in 0.0..50.0f64, dt in 0.01..5.0f64) {
        let a = v_winckler(Interval::point(t)).unwrap();
        prop_assert_eq!(a, v_winckler(Interval::point(-t)).unwrap());
        let b = v_winckler(Interval::point(t + dt)).unwrap();
        prop_assert!(a.hi() < b.lo());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn quadrature_contains_polynomial_integrals(n in 0i32..7, b in 0.5..3.0f64) {
        let v = integrate(|t| Ok(t.powi(n)), 0.0, b, &QuadOptions::with_tol(1e-10)).unwrap();
        let exact = Interval::point(b).powi(n + 1) / Interval::point((n + 1) as f64);
        prop_assert!(!v.intersect(&exact).is_empty(), "∫ t^{n} on [0, {b}]: {v} vs {exact}");
        prop_assert!(v.width() <= 1e-10);
    }

    #[test]
    fn quadrature_contains_arctangent(b in 0.5..50.0f64) {
        let v = integrate(|t| Ok((t.sqr() + 1.0).recip()), 0.0, b, &QuadOptions::with_tol(1e-9)).unwrap();
        let exact = Interval::point(b).atan().unwrap();
        prop_assert!(!v.intersect(&exact).is_empty(), "{v} vs {exact}");
    }

    #[test]
    fn quadrature_contains_gaussian_mass(b in 3.0..6.0f64) {
        // ∫₀^b e^{−t²} differs from √π/2 by less than e^{−b²}/(2b).
        let v = integrate(|t| (-t.sqr()).exp(), 0.0, b, &QuadOptions::with_tol(1e-10)).unwrap();
        let half = consts::pi().sqrt().unwrap() * 0.5;
        let gap = (-b * b).exp() / (2.0 * b);
        prop_assert!(v.hi() >= half.lo() - gap && v.lo() <= half.hi(), "{v}");
    }
}
