//! Every named constant of the argument, with its dependencies and the
//! value printed for it.

use super::eval::{evaluate, ConstantGraph, EvalFn, Inputs, NodeDef};
use super::functions::{self as fx, Eps12};
use super::node::NodeKind;
use super::params::{DhKind, ParamSet};
use super::trigpoly::expand_q;
use crate::analysis::quad::QuadOptions;
use crate::analysis::vertical;
use crate::config::Effort;
use crate::error::{Error, Result};
use crate::interval::round::mul_up;
use crate::interval::{consts, Interval, PrintedValue};
use crate::jet::Real;
use std::sync::Arc;

#[derive(Default)]
struct Builder {
    defs: Vec<NodeDef>,
}

impl Builder {
    fn push(&mut self, id: &str, kind: NodeKind, deps: &[&str], eval: Option<EvalFn>) -> &mut NodeDef {
        self.defs.push(NodeDef {
            id: id.to_string(),
            kind,
            deps: deps.iter().map(|d| d.to_string()).collect(),
            eval,
            printed: None,
            citation: None,
            axiom_value: None,
            notes: Vec::new(),
        });
        self.defs.last_mut().expect("just pushed")
    }

    fn node<F>(&mut self, id: &str, kind: NodeKind, deps: &[&str], f: F) -> &mut NodeDef
    where
        F: Fn(&Inputs) -> Result<Interval> + Send + Sync + 'static,
    {
        self.push(id, kind, deps, Some(Arc::new(f)))
    }

    fn formula<F>(&mut self, id: &str, deps: &[&str], f: F) -> &mut NodeDef
    where
        F: Fn(&Inputs) -> Result<Interval> + Send + Sync + 'static,
    {
        self.node(id, NodeKind::Formula, deps, f)
    }

    fn assembly<F>(&mut self, id: &str, deps: &[&str], f: F) -> &mut NodeDef
    where
        F: Fn(&Inputs) -> Result<Interval> + Send + Sync + 'static,
    {
        self.node(id, NodeKind::Assembly, deps, f)
    }

    fn integral<F>(&mut self, id: &str, deps: &[&str], f: F) -> &mut NodeDef
    where
        F: Fn(&QuadOptions) -> Result<Interval> + Send + Sync + 'static,
    {
        self.node(id, NodeKind::Integral, deps, move |x| quadrature(x, &f))
    }

    fn axiom(&mut self, id: &str, citation: &str) -> &mut NodeDef {
        let n = self.push(id, NodeKind::Axiom, &[], None);
        n.citation(citation);
        n
    }

    fn param(&mut self, name: &str) -> &mut NodeDef {
        let key = name.to_string();
        self.node(name, NodeKind::Parameter, &[], move |x| x.params.scalar(&key))
    }
}

/// Runs a quadrature; a missed tolerance keeps the rigorous wider enclosure.
fn quadrature<F>(x: &Inputs, f: &F) -> Result<Interval>
where
    F: Fn(&QuadOptions) -> Result<Interval>,
{
    match f(&QuadOptions::with_tol(x.effort.quad_tol)) {
        Err(Error::ToleranceNotReached { enclosure, width, boxes }) if enclosure.is_finite() => {
            x.note(format!("quadrature tolerance not reached after {boxes} boxes; enclosure width {width:e}"));
            Ok(enclosure)
        }
        r => r,
    }
}

fn dec(text: &str) -> PrintedValue {
    PrintedValue::decimal(text)
}

fn at_most(text: &str) -> PrintedValue {
    PrintedValue::at_most(text)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

/// The smallest multiple of 1/100 at or above every point of `x`.
pub fn ceil_hundredths(x: Interval) -> Interval {
    let k = mul_up(x.hi(), 100.0).ceil();
    Interval::ratio(k as i64, 100)
}

/// `1/N` with `N = ⌈1/x⌉` taken over the whole enclosure, so `1/N ≤ x`.
pub fn unit_fraction_below(x: Interval) -> Result<(i64, Interval)> {
    check(x.lo() > 0.0, || format!("unit fraction below a nonpositive enclosure {x}"))?;
    let n = x.recip().hi().ceil();
    check(n < 1e15, || format!("denominator too large for {x}"))?;
    Ok((n as i64, Interval::ratio(1, n as i64)))
}

/// `1 + 2 log 2/log 3`, the factor turning `log τ^{n}` into `log d` for `|t| ≤ 1`.
fn tau_factor() -> Interval {
    consts::ln2() * 2.0 / consts::ln3() + 1.0
}

/// All node definitions, in declaration order.
pub fn definitions() -> Vec<NodeDef> {
    let mut b = Builder::default();
    prime_sums(&mut b);
    contour(&mut b);
    zero_density(&mut b);
    zero_free_region(&mut b);
    repulsion(&mut b);
    assembly(&mut b);
    b.defs
}

/// Evaluates the whole chain for a parameter set.
pub fn derive_all(params: &ParamSet, effort: &Effort) -> Result<ConstantGraph> {
    params.validate()?;
    effort.validate()?;
    evaluate(&definitions(), params, effort)
}

fn prime_sums(b: &mut Builder) {
    b.axiom(
        "alpha_0_rosser_schoenfeld",
        "Rosser and Schoenfeld (1962): π(x) < 1.25506 x/log x for x > 1 and ψ(x) < 1.03883 x for x > 0",
    )
    .axiom_value("1.25506");
    b.node("alpha_0", NodeKind::Parameter, &["alpha_0_rosser_schoenfeld"], |_| Ok(Interval::decimal(1.25506)))
        .printed(dec("1.25506"));
    b.formula("prime_power_count_coeff", &["alpha_0"], |x| Ok(x.get("alpha_0")? * 2.0 / consts::ln2()))
        .note("S(x) ≤ (2α₀/log 2)√x for the count of proper prime powers up to x");
    b.formula("prime_power_tail_coeff", &["alpha_0"], |x| Ok(x.get("alpha_0")? * Interval::decimal(4.02)))
        .note("Σ_{x ≤ p^h ≤ x², h ≥ 2} p^{−h} ≤ 4.02 α₀/(x log x)");
    b.formula("ramified_sum_coeff", &[], |_| Ok(Interval::point(5.0) / (consts::sqrt_pi() * 2.0 * consts::ln3())));
    b.formula("alpha_1", &["alpha_0"], |x| {
        let a0 = x.get("alpha_0")?;
        let ten = Interval::point(10.0);
        let inner = Interval::point(15.0) / (ten.pow(Interval::point(23.5))? * consts::ln10())
            + 7.0
            + Interval::point(37.0) / ten.pow(Interval::point(2.5))?;
        Ok(a0 / (consts::sqrt_pi() * 3.0 * consts::ln2()) * inner)
    })
    .printed(dec("2.4234⋯"));
    b.formula("alpha_2", &[], |_| Ok(Interval::point(5.0) / consts::sqrt_pi()));
    b.formula("alpha_3", &["alpha_0"], |x| {
        Ok(Interval::ratio(2, 101) + x.get("alpha_0")? * Interval::decimal(32.16) / consts::ln3())
    })
    .printed(dec("36.759⋯"));
    b.formula("alpha_4", &["alpha_1", "alpha_2"], |x| {
        let ten = Interval::point(10.0);
        let a = Interval::ratio(1, 1_000_000_000) / (consts::sqrt_pi() * 4.0);
        let c = x.get("alpha_1")? * consts::ln10() / (ten.sqrt()? * 5.0);
        Ok((a + c + x.get("alpha_2")? * 2.0) / consts::ln3())
    })
    .printed(dec("5.4567⋯"));
    b.axiom("alpha_5", "implicit positive constant of a qualitative estimate; never instantiated");
}

fn contour(b: &mut Builder) {
    b.axiom(
        "winckler_vertical_bound",
        "Winckler: |γ_L′/γ_L + ...| on vertical lines bounded via v(t) = log(√(t² + 1/4) + 2) + 19683/812",
    );
    b.integral("mu_1", &[], vertical::rational_weight_mass).printed(dec("0.75296⋯"));
    b.integral("nu_1", &["winckler_vertical_bound"], vertical::rational_weight_moment).printed(dec("19.405⋯"));
    b.integral("mu_2", &[], vertical::gaussian_weight_mass).printed(dec("0.058787⋯"));
    b.integral("nu_2", &["winckler_vertical_bound"], vertical::gaussian_weight_moment).printed(dec("1.4793⋯"));
    b.formula("c_15", &["mu_1", "nu_1"], |x| {
        let two_ln3 = Interval::point(2.0) / consts::ln3();
        Ok(two_ln3 + Interval::ratio(4, 909) * (x.get("mu_1")? + two_ln3 * x.get("nu_1")?))
    })
    .printed(dec("1.9792⋯"));
    b.formula("c_15_prime", &["mu_2", "nu_2"], |x| {
        let two_ln3 = Interval::point(2.0) / consts::ln3();
        let damp = Interval::point(10.0).pow(Interval::point(-2.5))?;
        Ok(two_ln3 + (x.get("mu_2")? + two_ln3 * x.get("nu_2")?) * damp)
    })
    .printed(dec("1.8291⋯"));
}

/// The four long-form coefficients at a given σ node.
fn density_coeffs(b: &mut Builder, sigma: &'static str, suffix: &str, printed: Option<[&str; 4]>) {
    let id = |k: usize| format!("a_density_{k}{suffix}");
    let n1 = b.formula(&id(1), &[sigma], move |x| Ok(fx::f0(x.get(sigma)?)?.recip() / 2.0));
    if let Some(p) = printed {
        n1.printed(at_most(p[0]));
    }
    let n2 = b.formula(&id(2), &[sigma, "alpha_6"], move |x| {
        let s = x.get(sigma)?;
        Ok(fx::f2(s)? / fx::f0(s)?)
    });
    if let Some(p) = printed {
        n2.printed(at_most(p[1]));
    }
    let n3 = b.formula(&id(3), &[sigma], move |x| {
        let s = x.get(sigma)?;
        Ok((fx::f1(s)? - consts::ln_pi() / 2.0) / fx::f0(s)?)
    });
    if let Some(p) = printed {
        n3.printed(at_most(p[2]));
    }
    let n4 = b.formula(&id(4), &[sigma], move |x| {
        let s = x.get(sigma)?;
        Ok((s.recip() + (s - 1.0).recip()) / fx::f0(s)?)
    });
    if let Some(p) = printed {
        n4.printed(at_most(p[3]));
    }
}

fn zero_density(b: &mut Builder) {
    b.node("alpha_6", NodeKind::Parameter, &[], |_| Ok(fx::alpha_6())).printed(dec("1.08"));
    b.formula("alpha_7", &[], |_| Ok(fx::alpha_7())).printed(dec("2.9427⋯"));
    b.param("sigma_density_long");
    b.param("sigma_density_short");
    density_coeffs(b, "sigma_density_long", "", Some(["1.1", "2.09", "0.56", "4.05"]));
    density_coeffs(b, "sigma_density_short", "_short", None);
    b.formula("B_1", &["a_density_1_short", "a_density_3_short", "a_density_4_short"], |x| {
        let a3 = x.get("a_density_3_short")?;
        let a4 = x.get("a_density_4_short")?;
        check(a3.hi() < 0.0, || format!("short-form a₃ = {a3} is not negative"))?;
        let tail = a3 * 2.0 + a4;
        check(tail.lo() > 0.0, || format!("short-form 2a₃ + a₄ = {tail} is not positive"))?;
        Ok(x.get("a_density_1_short")? + tail / consts::ln3())
    })
    .printed(dec("2.6885⋯"))
    .note("uses n_L ≥ 2 and log d_L ≥ log 3");
    b.formula("B_2", &["a_density_2_short"], |x| x.get("a_density_2_short")).printed(dec("2.7106⋯"));
    b.assembly("zero_count_coeff", &["B_1", "B_2"], |x| Ok(ceil_hundredths(x.get("B_1")?.max(x.get("B_2")?))))
        .printed(dec("2.72"))
        .note("max(B₁, B₂) rounded up to two decimals");
    b.formula("f_2_at_2", &["alpha_6"], |_| fx::f2(Interval::point(2.0)));
    b.axiom(
        "louboutin_bound",
        "Louboutin: |ζ_L′/ζ_L(s)| bound ((1 − 1/√5)/2) log d_L + 1/r near s = 1, giving the zero count in small discs",
    );
}

fn zero_free_region(b: &mut Builder) {
    for p in ["q_shape_a", "b_zfr", "delta_zfr", "eta_zfr"] {
        b.param(p);
    }
    for m in 0..4usize {
        b.formula(&format!("Q_b{m}"), &["q_shape_a"], move |x| Ok(expand_q(x.get("q_shape_a")?)?.b(m)));
    }
    b.formula("Q_0", &["Q_b0", "Q_b1", "Q_b2", "Q_b3"], |x| {
        Ok(x.get("Q_b0")? + x.get("Q_b1")? + x.get("Q_b2")? + x.get("Q_b3")?)
    });
    b.formula("kappa", &[], |_| Ok(fx::kappa()));
    b.formula("alpha_9", &[], |_| Ok(fx::alpha_9()));
    b.formula("epsilon_zfr", &["b_zfr"], |x| Ok((x.get("b_zfr")? * ln12()).recip()));
    b.formula("alpha_10", &["kappa", "alpha_9", "epsilon_zfr"], |x| {
        let (k, a9, e) = (x.get("kappa")?, x.get("alpha_9")?, x.get("epsilon_zfr")?);
        let inner = e * 2.0 / a9.sqr() + e / (a9.recip() - e).sqr();
        Ok(k * inner + e / e.rsub(Interval::ONE).sqr())
    });
    b.formula("alpha_11", &["kappa", "alpha_9", "epsilon_zfr"], |x| {
        let (k, a9, e) = (x.get("kappa")?, x.get("alpha_9")?, x.get("epsilon_zfr")?);
        Ok(k * (e / a9.sqr() + e * a9.sqr()) + e)
    })
    .note("equals (3κ + 1)ε since α₉⁻² + α₉² = 3");
    b.node("G_0", NodeKind::Formula, &[], |x| {
        let loc = crate::verify::locate_g0(x.effort.g0_tol.min(crate::verify::g0::G0_CERT_TOL))?;
        x.note(format!("infimum of 𝒢(α₉, α₉⁻¹, 1; υ) attained near υ ∈ {}", loc.argmin));
        Ok(loc.enclosure)
    })
    .printed(PrintedValue::AtLeast { text: "-0.121585107".into() });
    b.node("kadiri_G0", NodeKind::Axiom, &["G_0"], |x| x.get("G_0"))
        .citation("Kadiri (2012), Lemma on 𝒢(α₉, α₉⁻¹, 1; υ): 𝒢 ≥ −0.121585107 for all real υ")
        .axiom_value("-0.121585107")
        .note("enclosure is the independent re-derivation");
    b.formula("alpha_12", &["kappa", "alpha_7"], |_| Ok(fx::alpha_12())).printed(dec("0.34162⋯"));
    b.formula("f_3_at_1_eps", &["epsilon_zfr", "kappa"], |x| fx::f3(x.get("epsilon_zfr")? + 1.0))
        .note("f₃ is increasing on (1, 1.75), so f₃(σ) ≤ f₃(1 + ε)");
    b.formula("f_4_at_1_eps", &["epsilon_zfr", "alpha_6", "kappa"], |x| fx::f4(x.get("epsilon_zfr")? + 1.0));
    for m in 0..4u32 {
        let deps: &[&str] =
            if m == 0 { &["epsilon_zfr", "kappa"] } else { &["epsilon_zfr", "f_4_at_1_eps", "alpha_12"] };
        b.formula(&format!("D_{m}"), deps, move |x| fx::d_weight(m, x.get("epsilon_zfr")?));
    }
    b.formula("alpha_13", &["Q_0", "Q_b0", "f_4_at_1_eps"], |x| {
        Ok((x.get("Q_0")? - x.get("Q_b0")?) * x.get("f_4_at_1_eps")?)
    });
    b.formula("alpha_14", &["Q_b0", "Q_b1", "Q_b2", "Q_b3", "D_0", "D_1", "D_2", "D_3"], |x| {
        let mut s = Interval::ZERO;
        for m in 0..4 {
            s += x.get(&format!("Q_b{m}"))? * x.get(&format!("D_{m}"))?;
        }
        Ok(s)
    });
    b.formula("alpha_15", &["Q_b0", "Q_b1", "Q_0", "f_3_at_1_eps", "kadiri_G0", "alpha_11", "alpha_10"], |x| {
        let (b0, b1, q0) = (x.get("Q_b0")?, x.get("Q_b1")?, x.get("Q_0")?);
        let g0 = Interval::point(x.get("kadiri_G0")?.lo());
        Ok(b0 * x.get("f_3_at_1_eps")? - (q0 - b0) * (g0 - x.get("alpha_11")?) + (q0 - b1) * x.get("alpha_10")?)
    })
    .note("uses the lower endpoint of the re-derived 𝒢₀ enclosure");
    b.formula("alpha_16", &["kappa", "Q_0", "Q_b0", "Q_b1", "b_zfr"], |x| {
        let k = x.get("kappa")?;
        let bz = x.get("b_zfr")?;
        let gap = x.get("Q_b1")? - x.get("Q_b0")?;
        Ok(k.rsub(Interval::ONE) / 2.0 * x.get("Q_0")? + gap * (bz * 4.0 / (bz.sqr() + 4.0)))
    });
    b.formula("B_11", &["alpha_16", "alpha_14", "alpha_15", "delta_zfr", "eta_zfr"], |x| {
        let ln3 = consts::ln3();
        Ok(x.get("alpha_16")?
            + x.get("alpha_14")? * 2.0 / ln3 * x.get("delta_zfr")?
            + x.get("alpha_15")? / ln3 * x.get("eta_zfr")?)
    });
    b.formula("B_12", &["alpha_13", "alpha_14", "alpha_15", "delta_zfr", "eta_zfr"], |x| {
        let ln2 = consts::ln2();
        let d = x.get("delta_zfr")?.rsub(Interval::ONE);
        let e = x.get("eta_zfr")?.rsub(Interval::ONE);
        Ok(x.get("alpha_13")? + x.get("alpha_14")? / ln2 * d + x.get("alpha_15")? / (ln2 * 2.0) * e)
    });
    b.formula("B_13", &["B_11", "B_12"], |x| Ok(x.get("B_11")?.max(x.get("B_12")?)));
    b.axiom(
        "stechkin_lemma",
        "Stechkin (1970): 𝔽(s, z) − κ𝔽(s₁, z) ≥ 0 for 0 < Re z < 1, and its variant for ½ ≤ Re z < 1",
    );
    b.formula("zfr_constant_raw", &["Q_b0", "Q_b1", "b_zfr", "B_13", "stechkin_lemma"], |x| {
        let (b0, b1, bz) = (x.get("Q_b0")?, x.get("Q_b1")?, x.get("b_zfr")?);
        let width = b1 / (b0 * bz + x.get("B_13")?) - bz.recip();
        check(width.lo() > 0.0, || format!("zero-free width {width} is not positive"))?;
        Ok(width.recip())
    })
    .printed(at_most("29.57"));
    b.assembly("zfr_constant", &["zfr_constant_raw"], |x| Ok(ceil_hundredths(x.get("zfr_constant_raw")?)))
        .printed(dec("29.57"))
        .note("rounded up to two decimals");
}

fn ln12() -> Interval {
    consts::ln2() * 2.0 + consts::ln3()
}

fn repulsion(b: &mut Builder) {
    b.axiom(
        "lmo_power_sum",
        "Lagarias, Montgomery and Odlyzko: some j₀ ≤ č𝓛 has Re Σ z_n^{j₀} ≥ ((č − 12)/(4č))|z₁|^{j₀}",
    );
    for kind in DhKind::ALL {
        variant(b, kind);
    }
    b.axiom(
        "imag_quadratic_real_zero_bound",
        "Stark (1974): for imaginary quadratic L, ζ_L(σ) ≠ 0 for σ ≥ 1 − (π√d_L/6)^{−1}",
    );
    b.axiom("minkowski_discriminant_bound", "Hermite–Minkowski: d_L ≥ 3^{n_L/2} for n_L ≥ 2");
    b.formula("c_10", &["c_8_cor", "c_7_cor", "imag_quadratic_real_zero_bound", "minkowski_discriminant_bound"], |x| {
        let (c8, c7) = (x.get("c_8_cor")?, x.get("c_7_cor")?);
        Ok((c8.recip() + consts::e().recip()) * tau_factor() - c7.ln()? / consts::ln3())
    })
    .printed(dec("114.72⋯"));
}

fn variant(b: &mut Builder, kind: DhKind) {
    let s = kind.suffix();
    let n = move |base: &str| format!("{base}_{s}");
    let (cc, sg, de, et) =
        (format!("c_check_{s}"), format!("sigma0_dh_{s}"), format!("delta_dh_{s}"), format!("eta_dh_{s}"));
    b.param(&cc);
    b.param(&sg);
    if kind != DhKind::Nontrivial {
        b.param(&de);
    }
    b.param(&et);
    let sig = sg.clone();
    b.formula(&n("a_dh_1"), &[&sg], {
        let sig = sig.clone();
        move |x| Ok((x.get(&sig)? - 1.0).recip() / 2.0)
    });
    b.formula(&n("a_dh_2"), &[&sg, "alpha_6"], {
        let sig = sig.clone();
        move |x| {
            let s0 = x.get(&sig)?;
            Ok(fx::f2(s0)? / (s0 - 1.0))
        }
    });
    b.formula(&n("a_dh_3"), &[&sg], {
        let sig = sig.clone();
        move |x| Ok(-consts::ln_pi() / ((x.get(&sig)? - 1.0) * 2.0))
    });
    b.formula(&n("a_dh_4"), &[&sg], {
        let sig = sig.clone();
        move |x| {
            let s0 = x.get(&sig)?;
            Ok((s0.recip() + (s0 - 1.0).recip()) / (s0 - 1.0))
        }
    });
    let (a1, a2, a3, a4) = (n("a_dh_1"), n("a_dh_2"), n("a_dh_3"), n("a_dh_4"));
    b.formula(&n("B_17"), &[&a1], {
        let a1 = a1.clone();
        move |x| Ok(x.get(&a1)? * 2.0)
    });
    b.formula(&n("B_18"), &[&a2], {
        let a2 = a2.clone();
        move |x| x.get(&a2)
    });
    b.formula(&n("B_19"), &[&a2, &a3, &sg], {
        let (a2, a3, sig) = (a2.clone(), a3.clone(), sig.clone());
        move |x| Ok(x.get(&a2)? * consts::ln2() + x.get(&a3)? * 2.0 + x.get(&sig)?.sqr().rdiv(Interval::point(2.0)))
    });
    b.formula(&n("B_20"), &[&a4, &sg], {
        let (a4, sig) = (a4.clone(), sig.clone());
        move |x| Ok(x.get(&a4)? * 2.0 - x.get(&sig)?.sqr().rdiv(Interval::point(2.0)))
    });
    let (b17, b18, b19, b20) = (n("B_17"), n("B_18"), n("B_19"), n("B_20"));
    let bound = if kind == DhKind::Nontrivial {
        b.formula(&n("B_19_hat"), &[&a2, &a3], {
            let (a2, a3) = (a2.clone(), a3.clone());
            move |x| Ok(x.get(&a2)? * consts::ln2() + x.get(&a3)? * 2.0)
        });
        b.formula(&n("B_20_hat"), &[&a4], {
            let a4 = a4.clone();
            move |x| Ok(x.get(&a4)? * 2.0)
        });
        let (h19, h20) = (n("B_19_hat"), n("B_20_hat"));
        let combo = {
            let (h19, h20, sig) = (h19.clone(), h20.clone(), sig.clone());
            move |x: &Inputs| -> Result<Interval> {
                let s0 = x.get(&sig)?;
                check(s0.hi() <= 11.66, || format!("σ₀ = {s0} exceeds 11.66"))?;
                let (u, v) = (x.get(&h19)?, x.get(&h20)?);
                check(u.hi() <= 0.0, || format!("B̂₁₉ = {u} is not ≤ 0"))?;
                let c = u * 2.0 + v;
                check(c.lo() >= 0.0, || format!("2B̂₁₉ + B̂₂₀ = {c} is not ≥ 0"))?;
                Ok(c)
            }
        };
        let combo = Arc::new(combo);
        b.formula(&n("B_25"), &[&b17, &h19, &h20, &et, &sg], {
            let (b17, et, combo) = (b17.clone(), et.clone(), combo.clone());
            move |x| Ok(x.get(&b17)? + combo.as_ref()(x)? / consts::ln3() * x.get(&et)?)
        });
        b.formula(&n("B_26"), &[&b18, &h19, &h20, &et, &sg], {
            let (b18, et, combo) = (b18.clone(), et.clone(), combo.clone());
            move |x| Ok(x.get(&b18)? + combo.as_ref()(x)? / (consts::ln2() * 2.0) * x.get(&et)?.rsub(Interval::ONE))
        });
        let (b25, b26) = (n("B_25"), n("B_26"));
        b.formula(&n("B_27"), &[&b25.clone(), &b26.clone()], move |x| Ok(x.get(&b25)?.max(x.get(&b26)?)));
        n("B_27")
    } else {
        let signs = {
            let (b19, b20) = (b19.clone(), b20.clone());
            Arc::new(move |x: &Inputs| -> Result<(Interval, Interval)> {
                let (u, v) = (x.get(&b19)?, x.get(&b20)?);
                check(u.lo() >= 0.0, || format!("B₁₉ = {u} is negative (needs σ₀ ≥ 1.74)"))?;
                check(v.lo() >= 0.0, || format!("B₂₀ = {v} is negative"))?;
                Ok((u, v))
            })
        };
        b.formula(&n("B_22"), &[&b17, &b19, &b20, &de, &et], {
            let (b17, de, et, signs) = (b17.clone(), de.clone(), et.clone(), signs.clone());
            move |x| {
                let (u, v) = signs.as_ref()(x)?;
                let ln3 = consts::ln3();
                Ok(x.get(&b17)? + u * 2.0 / ln3 * x.get(&de)? + v / ln3 * x.get(&et)?)
            }
        });
        b.formula(&n("B_23"), &[&b18, &b19, &b20, &de, &et], {
            let (b18, de, et, signs) = (b18.clone(), de.clone(), et.clone(), signs.clone());
            move |x| {
                let (u, v) = signs.as_ref()(x)?;
                let ln2 = consts::ln2();
                let d = x.get(&de)?.rsub(Interval::ONE);
                let e = x.get(&et)?.rsub(Interval::ONE);
                Ok(x.get(&b18)? + u / ln2 * d + v / (ln2 * 2.0) * e)
            }
        });
        let (b22, b23) = (n("B_22"), n("B_23"));
        b.formula(&n("B_24"), &[&b22.clone(), &b23.clone()], move |x| Ok(x.get(&b22)?.max(x.get(&b23)?)));
        n("B_24")
    };
    let shift = match kind {
        DhKind::Real | DhKind::Cor => 0.0,
        DhKind::Imag => 1.0,
        DhKind::Nontrivial => -0.5,
    };
    let raw_id = if kind == DhKind::Cor { n("c_8") } else { n("c_8_raw") };
    b.formula(&raw_id, &[&cc, &sg, &bound, "lmo_power_sum"], {
        let (cc, sig, bound) = (cc.clone(), sig.clone(), bound.clone());
        move |x| {
            let s0 = x.get(&sig)?;
            let w = s0 + shift;
            Ok((s0 - 1.0) / (x.get(&cc)? * 2.0 * w.sqr() * x.get(&bound)?))
        }
    });
    let printed_c7 = match kind {
        DhKind::Real => "6.7934⋯×10^{−4}",
        DhKind::Imag => "5.5803⋯×10^{−4}",
        DhKind::Nontrivial => "8.1168⋯×10^{−4}",
        DhKind::Cor => "2.2434⋯×10^{−5}",
    };
    if kind == DhKind::Cor {
        b.defs.last_mut().expect("c_8_cor").printed(dec("2.1716⋯×10^{−2}"));
    } else {
        let den = match kind {
            DhKind::Real => 92,
            DhKind::Imag => 112,
            _ => 77,
        };
        let raw = raw_id.clone();
        b.assembly(&n("c_8"), &[&raw_id], move |x| Ok(unit_fraction_below(x.get(&raw)?)?.1))
            .printed(PrintedValue::Rational { num: 1, den })
            .note("the unit fraction 1/⌈1/c₈⌉ just below the computed value");
    }
    let c8 = n("c_8");
    b.formula(&n("c_7"), &[&cc, &c8], {
        let (cc, c8) = (cc.clone(), c8.clone());
        move |x| {
            let c = x.get(&cc)?;
            Ok((c - 12.0) / (c * 8.0) * x.get(&c8)?)
        }
    })
    .printed(dec(printed_c7));
}

fn assembly(b: &mut Builder) {
    b.formula("phi_6_at_1", &[], |_| fx::phi6(Interval::ONE)).printed(dec("0.94592⋯"));
    b.formula("phi_7_at_1", &[], |_| fx::phi7(Interval::ONE)).printed(dec("0.91791⋯"));
    b.assembly("trivial_zero_factor", &["phi_6_at_1", "phi_7_at_1"], |x| {
        let m = x.get("phi_6_at_1")?.min(x.get("phi_7_at_1")?);
        check(m.lo() >= 0.9, || format!("min(φ₆(1), φ₇(1)) = {m} is below 9/10"))?;
        Ok(Interval::ratio(9, 10))
    });
    b.formula("c_11", &["c_8_nontrivial"], |x| Ok(x.get("c_8_nontrivial")? / 6.0))
        .printed(PrintedValue::Rational { num: 1, den: 462 });
    b.formula("c_19", &["c_8_nontrivial"], |x| Ok(x.get("c_8_nontrivial")? / 6.0))
        .printed(PrintedValue::Rational { num: 1, den: 462 });
    b.formula("c_12", &["c_7_nontrivial", "zfr_constant", "c_11"], |x| {
        let c7 = x.get("c_7_nontrivial")?;
        let c12 = (x.get("zfr_constant")? * 6.0 * (Interval::point(3.0) / c7).ln()?).recip();
        let c11 = x.get("c_11")?;
        check(c11.lo() > c12.hi(), || format!("c₁₁ = {c11} does not exceed c₁₂ = {c12}"))?;
        Ok(c12)
    })
    .printed(dec("6.8610⋯×10^{−4}"));
    b.formula("c_13", &["zero_count_coeff"], |x| {
        let ln3 = consts::ln3();
        Ok(x.get("zero_count_coeff")? * 8.0 * ((ln3 * 15.0 + 2.0) / (ln3 * 4.0) + 1.5))
    })
    .printed(dec("124.14⋯"))
    .note("21.76 = 8 × 2.72");
    b.formula("c_14", &["c_12", "f_2_at_2", "louboutin_bound"], |x| {
        let t = x.get("c_12")? * consts::ln2();
        Ok(t.rdiv(Interval::point(40.0)) * (t.recip() + x.get("f_2_at_2")? * 4.0 / 5.0 * tau_factor()))
    })
    .printed(dec("1.7700⋯×10^8"));
    b.formula("c_20", &["zero_count_coeff"], |x| {
        let lead = (Interval::point(4.0).ln()? * 2.0 / consts::ln3() + 1.0) * x.get("zero_count_coeff")? * 2.0;
        Ok(lead + Interval::new(0.0, 1e-70))
    })
    .printed(dec("19.16⋯"))
    .note("terms m ≥ 2 are below 10^{−39m} in total and enclosed by [0, 1e−70]");
    b.formula("c_21", &["zero_count_coeff", "minkowski_discriminant_bound"], |x| {
        Ok(x.get("zero_count_coeff")? * tau_factor())
    })
    .printed(dec("6.1522⋯"));
    b.param("c16").note("the value 1261 also appears inside the second case of the first feasibility lemma");
    b.param("c23");
    b.assembly("A_1", &["c16", "c23"], |x| {
        let m = (x.get("c16")? * 4.0).max(x.get("c23")? * 5.0);
        Ok(Interval::point(m.hi().ceil()))
    })
    .printed(PrintedValue::Integer { value: 12577 })
    .note("⌈max(4c₁₆, 5c₂₃)⌉, rounded up so it bounds every point of the enclosure");
}

/// Constants of the first feasibility inequality, read from a graph.
pub fn eps12_from(graph: &ConstantGraph) -> Result<Eps12> {
    Ok(Eps12 {
        c7: graph.value("c_7_nontrivial")?,
        c13: graph.value("c_13")?,
        c15: graph.value("c_15")?,
        alpha3: graph.value("alpha_3")?,
        c16: graph.value("c16")?,
    })
}

/// Constants of the second feasibility inequality, read from a graph.
pub fn eps34_from(graph: &ConstantGraph) -> Result<fx::Eps34> {
    Ok(fx::Eps34 {
        c7: graph.value("c_7_nontrivial")?,
        c10: graph.value("c_10")?,
        c15p: graph.value("c_15_prime")?,
        c19: graph.value("c_19")?,
        c20: graph.value("c_20")?,
        c21: graph.value("c_21")?,
        alpha4: graph.value("alpha_4")?,
        c23: graph.value("c23")?,
    })
}
