//! The named functions of the argument as interval extensions.
//!
//! Functions that the verifier bisects over are generic in [`Real`], so the
//! same code yields plain enclosures and Taylor jets.

use crate::analysis::{digamma::Digamma, vertical, zeta::NegZetaLogDeriv};
use crate::error::{Error, Result};
use crate::interval::{consts, ComplexBox, Interval};
use crate::jet::{Jet, Real};

pub fn alpha_6() -> Interval {
    Interval::decimal(1.08)
}

/// `4/3 + log 5`.
pub fn alpha_7() -> Interval {
    Interval::ratio(4, 3) + consts::ln5()
}

/// `1/√5`.
pub fn kappa() -> Interval {
    consts::sqrt5().recip()
}

/// `(√5 − 1)/2`.
pub fn alpha_9() -> Interval {
    (consts::sqrt5() - 1.0) / 2.0
}

/// `(κα₇ − (1 − κ) log π)/2`.
pub fn alpha_12() -> Interval {
    let k = kappa();
    (k * alpha_7() - (k.rsub(Interval::ONE)) * consts::ln_pi()) / 2.0
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

fn above<T: Real>(x: &T, bound: f64, name: &str) -> Result<()> {
    let v = x.value();
    require(!v.is_empty() && v.lo() > bound, || format!("{name} needs argument > {bound}, got {v}"))
}

/// `u/(u² + 1)`.
fn lorentz<T: Real>(u: T) -> T {
    u / (u.sqr() + 1.0)
}

/// The zero-density weight: an average of two minima of `u/(u² + 1)` at
/// shifts `σ − 1, σ − ½, σ`.
pub fn f0<T: Real>(sigma: T) -> Result<T> {
    above(&sigma, 1.0, "f0")?;
    let a = lorentz(sigma - 1.0);
    let b = lorentz(sigma - 0.5);
    let c = lorentz(sigma);
    Ok((a.min(b) + b.min(c)) / 2.0)
}

/// `−ζ′/ζ(σ)`.
pub fn f1<T: NegZetaLogDeriv>(sigma: T) -> Result<T> {
    sigma.neg_zeta_log_deriv()
}

/// `(log(σ + 5)/log 2 − 1)`, shared by the vertical-count weights.
fn log_ratio<T: Real>(sigma: T) -> Result<T> {
    Ok((sigma + 5.0).ln()? / consts::ln2() - 1.0)
}

/// `(α₆/2)(log(σ + 5)/log 2 − 1)`.
pub fn f2<T: Real>(sigma: T) -> Result<T> {
    above(&sigma, -5.0, "f2")?;
    Ok(log_ratio(sigma)? * (alpha_6() / 2.0))
}

/// `σ₁ = (1 + √(1 + 4σ²))/2`.
pub fn sigma1<T: Real>(sigma: T) -> Result<T> {
    Ok(((sigma.sqr() * 4.0 + 1.0).sqrt()? + 1.0) / 2.0)
}

/// `1/σ − κ(1/(σ₁ − 1) + 1/σ₁)`.
pub fn f3<T: Real>(sigma: T) -> Result<T> {
    above(&sigma, 0.0, "f3")?;
    let s1 = sigma1(sigma)?;
    Ok(sigma.recip() - ((s1 - 1.0).recip() + s1.recip()) * kappa())
}

/// `((α₆ − κ)/2)(log(σ + 5)/log 2 − 1)`.
pub fn f4<T: Real>(sigma: T) -> Result<T> {
    above(&sigma, -5.0, "f4")?;
    Ok(log_ratio(sigma)? * ((alpha_6() - kappa()) / 2.0))
}

/// `Re[((σ₀ − 1) + it₀)^{−2j} − ((σ₀ − υ) + it₀)^{−2j}]`.
pub fn f5(s0: ComplexBox, j: u32, upsilon: Interval) -> Result<Interval> {
    require(s0.re.lo() > 1.0, || format!("f5 needs Re s0 > 1, got {}", s0.re))?;
    require(j >= 1, || "f5 needs j ≥ 1".into())?;
    require(upsilon.lo() > 0.0 && upsilon.hi() <= 1.0, || format!("f5 needs 0 < υ ≤ 1, got {upsilon}"))?;
    let near = ComplexBox::new(s0.re - 1.0, s0.im).powi(2 * j).recip();
    let far = ComplexBox::new(s0.re - upsilon, s0.im).powi(2 * j).recip();
    Ok((near - far).re)
}

/// `4j(1 − υ)/(σ₀ − 1)^{2j+1}`, the bound on `f5(σ₀) + f5(σ₀ + it₀)`.
pub fn f5_bound(sigma0: Interval, j: u32, upsilon: Interval) -> Interval {
    upsilon.rsub(Interval::ONE) * (4.0 * j as f64) / (sigma0 - 1.0).powi(2 * j as i32 + 1)
}

/// `α₆ log(υ + 2) − log υ − 1/3`.
pub fn phi1<T: Real>(u: T) -> Result<T> {
    above(&u, 0.0, "phi1")?;
    Ok((u + 2.0).ln()? * alpha_6() - u.ln()? - Interval::ratio(1, 3))
}

/// `log υ − 4/3 − log(υ + 2) + α₇`.
pub fn phi2<T: Real>(u: T) -> Result<T> {
    above(&u, 0.0, "phi2")?;
    Ok(u.ln()? - Interval::ratio(4, 3) - (u + 2.0).ln()? + alpha_7())
}

/// `φ₅/φ₄`.
pub fn phi3<T: Real>(sigma: Interval, u: T) -> Result<T> {
    Ok(phi5(sigma, u)? / phi4(u))
}

/// `υ + 2`.
pub fn phi4<T: Real>(u: T) -> T {
    u + 2.0
}

/// `2 + √((σ + 1)² + υ²)/2`.
pub fn phi5<T: Real>(sigma: Interval, u: T) -> Result<T> {
    Ok((u.sqr() + (sigma + 1.0).sqr()).sqrt()? / 2.0 + 2.0)
}

/// `1 − ((e^{−υ} − e^{−2υ})/υ)²`, continuous at `υ = 0`.
pub fn phi6<T: ExprelNeg>(u: T) -> Result<T> {
    require(u.value().lo() >= 0.0, || format!("phi6 needs υ ≥ 0, got {}", u.value()))?;
    let g = (-u).exp()? * u.exprel_neg()?;
    Ok(g.sqr().rsub(Interval::ONE))
}

/// `1 − e^{−5υ/2}`.
pub fn phi7<T: Real>(u: T) -> Result<T> {
    require(u.value().lo() >= 0.0, || format!("phi7 needs υ ≥ 0, got {}", u.value()))?;
    Ok((u * -2.5).exp()?.rsub(Interval::ONE))
}

/// `κ(ω₁/(ω₁² + υ²) + ω₂/(ω₂² + υ²)) − ω₃/(ω₃² + υ²)`.
pub fn g_weight<T: Real>(w: [Interval; 3], v: T) -> T {
    let v2 = v.sqr();
    let term = |om: Interval| (v2 + om.sqr()).rdiv(om);
    (term(w[0]) + term(w[1])) * kappa() - term(w[2])
}

/// The weights `(α₉, α₉⁻¹, 1)` used for the zero-free region.
pub fn g_weights_default() -> [Interval; 3] {
    let a = alpha_9();
    [a, a.recip(), Interval::ONE]
}

/// `Re{1/(s − z) + 1/(s − (1 − z̄))}`.
pub fn f_stechkin(s: ComplexBox, z: ComplexBox) -> Interval {
    let mirror = ComplexBox::new(z.re.rsub(Interval::ONE), z.im);
    ((s - z).recip() + (s - mirror).recip()).re
}

/// `Γ_a(s) = ψ((s + a)/2) − κ ψ((σ₁(s) + a)/2)` on the real axis.
pub fn gamma_a<T: Digamma>(a: Interval, s: T) -> Result<T> {
    above(&s, 0.0, "Gamma_a")?;
    let first = ((s + a) / 2.0).digamma()?;
    let second = ((sigma1(s)? + a) / 2.0).digamma()?;
    Ok(first - second * kappa())
}

/// The archimedean weight `D(m)` at `1 + ε`.
pub fn d_weight(m: u32, eps: Interval) -> Result<Interval> {
    require(eps.lo() > 0.0, || format!("D(m) needs ε > 0, got {eps}"))?;
    let s = eps + 1.0;
    if m == 0 {
        let g = gamma_a(Interval::ONE, s)? + gamma_a(Interval::ZERO, s)?;
        Ok(g / 4.0 - kappa().rsub(Interval::ONE) / 2.0 * consts::ln_pi())
    } else {
        Ok(f4(s)? * Interval::point(m as f64).ln()? + alpha_12())
    }
}

/// `Λ^p` for positive `Λ`.
fn power<T: Real>(x: T, p: Interval) -> Result<T> {
    if p.is_point() && p.lo() == 1.0 {
        return Ok(x);
    }
    x.pow(p)
}

/// Constants entering the first feasibility inequality.
#[derive(Clone, Copy, Debug)]
pub struct Eps12 {
    pub c7: Interval,
    pub c13: Interval,
    pub c15: Interval,
    pub alpha3: Interval,
    pub c16: Interval,
}

/// `c₁₃/ℓ + c₁₅/(d^{2c₁₆}ℓ) + 2α₃c₁₆ℓ/(d^{c₁₆} log 3)` with `ℓ = log d`.
pub fn epsilon1<T: Real>(k: &Eps12, l: T) -> Result<T> {
    above(&l, 0.0, "epsilon1")?;
    let decay = (l * -k.c16).exp()?;
    let a = l.rdiv(k.c13);
    let b = decay.sqr() / l * k.c15;
    let c = l * decay * (k.alpha3 * k.c16 * 2.0 / consts::ln3());
    Ok(a + b + c)
}

/// `(3/c₇)²{c₁₅/d^{2c₁₆} + (2α₃c₁₆/log 3) ℓ²/d^{c₁₆}}`.
pub fn epsilon2<T: Real>(k: &Eps12, l: T) -> Result<T> {
    above(&l, 0.0, "epsilon2")?;
    let decay = (l * -k.c16).exp()?;
    let scale = (Interval::point(3.0) / k.c7).sqr();
    Ok((decay.sqr() * k.c15 + l.sqr() * decay * (k.alpha3 * k.c16 * 2.0 / consts::ln3())) * scale)
}

/// Constants entering the second feasibility inequality.
#[derive(Clone, Copy, Debug)]
pub struct Eps34 {
    pub c7: Interval,
    pub c10: Interval,
    pub c15p: Interval,
    pub c19: Interval,
    pub c20: Interval,
    pub c21: Interval,
    pub alpha4: Interval,
    pub c23: Interval,
}

impl Eps34 {
    /// `2α₄√c₂₃/log 3`.
    pub fn prime_coeff(&self) -> Result<Interval> {
        Ok(self.alpha4 * self.c23.sqrt()? * 2.0 / consts::ln3())
    }
}

/// `c₂₀ℓ/d^{c₂₃} + c₁₅′ℓ/d^{2c₂₃} + (2α₄√c₂₃/log 3)ℓ^{5/2}/d^{c₂₃}`.
pub fn epsilon3<T: Real>(k: &Eps34, l: T) -> Result<T> {
    above(&l, 0.0, "epsilon3")?;
    let decay = (l * -k.c23).exp()?;
    let a = l * decay * k.c20;
    let b = l * decay.sqr() * k.c15p;
    let c = power(l, Interval::point(2.5))? * decay * k.prime_coeff()?;
    Ok(a + b + c)
}

/// `c₂₀/d^{c₂₃−c₁₀} + c₂₁c₇^{4c₁₉c₂₃−2}ℓ^{2−4c₁₉c₂₃} + c₁₅′/d^{2c₂₃−c₁₀}
/// + (2α₄√c₂₃/log 3)ℓ^{3/2}/d^{c₂₃−c₁₀}`.
pub fn epsilon4<T: Real>(k: &Eps34, l: T) -> Result<T> {
    above(&l, 0.0, "epsilon4")?;
    let e = k.c19 * k.c23 * 4.0;
    let d1 = (l * (k.c10 - k.c23)).exp()?;
    let d2 = (l * (k.c10 - k.c23 * 2.0)).exp()?;
    let a = d1 * k.c20;
    let b = power(l, e.rsub(Interval::point(2.0)))? * (k.c21 * k.c7.pow(e - 2.0)?);
    let c = d2 * k.c15p;
    let d = power(l, Interval::point(1.5))? * d1 * k.prime_coeff()?;
    Ok(a + b + c + d)
}

/// `E(u) = (1 − e^{−u})/u`, lifted to plain intervals and jets.
pub trait ExprelNeg: Real {
    fn exprel_neg(self) -> Result<Self>;
}

const EXPREL_TERMS: usize = 24;

/// Normalized derivatives of `E` over `x` with `|x| ≤ 1`, from the series
/// `E(u) = Σ (−u)^k/(k+1)!`.
fn exprel_series_coeffs(x: Interval, order: usize) -> Vec<Interval> {
    let m = x.mag();
    let mut fact = vec![1.0f64; EXPREL_TERMS + 2];
    for k in 1..fact.len() {
        fact[k] = fact[k - 1] * k as f64;
    }
    let tail_scale = 2.0 * 2f64.powi(EXPREL_TERMS as i32 + 1) / fact[EXPREL_TERMS + 1];
    (0..=order)
        .map(|j| {
            let mut acc = Interval::ZERO;
            let mut binom = 1.0f64;
            for k in j..=EXPREL_TERMS {
                if k > j {
                    binom = binom * k as f64 / (k - j) as f64;
                }
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                acc += x.powi((k - j) as i32) * Interval::point(sign * binom) / Interval::point(fact[k + 1]);
            }
            let t = m.powi((EXPREL_TERMS + 1 - j) as i32) * tail_scale * (1.0 + 1e-12);
            acc + Interval::new(-t, t)
        })
        .collect()
}

fn exprel_direct_coeffs(x: Interval, order: usize) -> Result<Vec<Interval>> {
    let u = Jet::var(x, order);
    let e = (-u).exp()?.rsub(Interval::ONE) / u;
    Ok(e.coeffs().to_vec())
}

fn exprel_coeffs(x: Interval, order: usize) -> Result<Vec<Interval>> {
    if x.is_empty() {
        return Err(Error::Domain("exprel of an empty interval".into()));
    }
    if x.mag() <= 1.0 {
        return Ok(exprel_series_coeffs(x, order));
    }
    if x.lo() >= 1.0 {
        return exprel_direct_coeffs(x, order);
    }
    if x.lo() < -1.0 {
        return Err(Error::Domain(format!("exprel only for u ≥ −1, got {x}")));
    }
    let near = exprel_series_coeffs(Interval::new(x.lo(), 1.0), order);
    let far = exprel_direct_coeffs(Interval::new(1.0, x.hi()), order)?;
    Ok(near.iter().zip(&far).map(|(a, b)| a.hull(b)).collect())
}

impl ExprelNeg for Interval {
    fn exprel_neg(self) -> Result<Self> {
        Ok(exprel_coeffs(self, 0)?[0])
    }
}

impl ExprelNeg for Jet {
    fn exprel_neg(self) -> Result<Self> {
        Ok(self.compose(&exprel_coeffs(self.value(), self.order())?))
    }
}

/// Metadata for one registered function.
#[derive(Clone, Copy, Debug)]
pub struct FunctionDef {
    pub id: &'static str,
    pub arity: usize,
    pub args: &'static str,
    pub domain: &'static str,
}

const FUNCTIONS: &[FunctionDef] = &[
    FunctionDef { id: "f0", arity: 1, args: "sigma", domain: "sigma > 1" },
    FunctionDef { id: "f1", arity: 1, args: "sigma", domain: "sigma > 1" },
    FunctionDef { id: "f2", arity: 1, args: "sigma", domain: "sigma > -5" },
    FunctionDef { id: "f3", arity: 1, args: "sigma", domain: "sigma > 0" },
    FunctionDef { id: "f4", arity: 1, args: "sigma", domain: "sigma > -5" },
    FunctionDef {
        id: "f5",
        arity: 4,
        args: "sigma0, t0, j, upsilon",
        domain: "sigma0 > 1, j >= 1 integer, 0 < upsilon <= 1",
    },
    FunctionDef { id: "f_3zfr", arity: 1, args: "sigma", domain: "sigma > 0" },
    FunctionDef { id: "f_4zfr", arity: 1, args: "sigma", domain: "sigma > -5" },
    FunctionDef { id: "phi1", arity: 1, args: "upsilon", domain: "upsilon > 0" },
    FunctionDef { id: "phi2", arity: 1, args: "upsilon", domain: "upsilon > 0" },
    FunctionDef { id: "phi3", arity: 2, args: "sigma, upsilon", domain: "all reals" },
    FunctionDef { id: "phi4", arity: 1, args: "upsilon", domain: "all reals" },
    FunctionDef { id: "phi5", arity: 2, args: "sigma, upsilon", domain: "all reals" },
    FunctionDef { id: "phi6", arity: 1, args: "upsilon", domain: "upsilon >= 0" },
    FunctionDef { id: "phi7", arity: 1, args: "upsilon", domain: "upsilon >= 0" },
    FunctionDef { id: "G", arity: 4, args: "omega1, omega2, omega3, v", domain: "omega_i > 0" },
    FunctionDef { id: "F_stechkin", arity: 4, args: "sigma, t, beta, gamma", domain: "s != z, s != 1 - conj(z)" },
    FunctionDef { id: "Gamma_a", arity: 2, args: "a, s", domain: "s > 0, a >= 0" },
    FunctionDef { id: "D", arity: 2, args: "m, epsilon", domain: "m >= 0 integer, epsilon > 0" },
    FunctionDef { id: "v", arity: 1, args: "t", domain: "all reals" },
    FunctionDef { id: "v1", arity: 1, args: "t", domain: "all reals" },
    FunctionDef { id: "v2", arity: 1, args: "t", domain: "all reals" },
    FunctionDef { id: "epsilon1", arity: 5, args: "log_d, c13, c15, alpha3, c16", domain: "log_d > 0" },
    FunctionDef { id: "epsilon2", arity: 5, args: "log_d, c7, c15, alpha3, c16", domain: "log_d > 0" },
    FunctionDef { id: "epsilon3", arity: 5, args: "log_d, c20, c15p, alpha4, c23", domain: "log_d > 0" },
    FunctionDef {
        id: "epsilon4",
        arity: 9,
        args: "log_d, c7, c10, c15p, c19, c20, c21, alpha4, c23",
        domain: "log_d > 0, c7 > 0",
    },
];

pub fn function_defs() -> &'static [FunctionDef] {
    FUNCTIONS
}

fn nonneg_integer(x: Interval, name: &str) -> Result<u32> {
    let v = x.lo();
    if x.is_point() && v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as u32)
    } else {
        Err(Error::Domain(format!("{name} must be a nonnegative integer, got {x}")))
    }
}

/// Evaluates a registered function by id.
pub fn eval_function(id: &str, args: &[Interval]) -> Result<Interval> {
    let def = FUNCTIONS.iter().find(|d| d.id == id).ok_or_else(|| Error::UnknownFunction(id.to_string()))?;
    if args.len() != def.arity {
        return Err(Error::Domain(format!("{id} takes {} arguments ({}), got {}", def.arity, def.args, args.len())));
    }
    let a = args;
    match id {
        "f0" => f0(a[0]),
        "f1" => f1(a[0]),
        "f2" => f2(a[0]),
        "f3" | "f_3zfr" => f3(a[0]),
        "f4" | "f_4zfr" => f4(a[0]),
        "f5" => f5(ComplexBox::new(a[0], a[1]), nonneg_integer(a[2], "j")?, a[3]),
        "phi1" => phi1(a[0]),
        "phi2" => phi2(a[0]),
        "phi3" => phi3(a[0], a[1]),
        "phi4" => Ok(phi4(a[0])),
        "phi5" => phi5(a[0], a[1]),
        "phi6" => phi6(a[0]),
        "phi7" => phi7(a[0]),
        "G" => {
            require(a[..3].iter().all(|w| w.lo() > 0.0), || "G needs positive weights".into())?;
            Ok(g_weight([a[0], a[1], a[2]], a[3]))
        }
        "F_stechkin" => Ok(f_stechkin(ComplexBox::new(a[0], a[1]), ComplexBox::new(a[2], a[3]))),
        "Gamma_a" => {
            require(a[0].lo() >= 0.0, || "Gamma_a needs a ≥ 0".into())?;
            gamma_a(a[0], a[1])
        }
        "D" => d_weight(nonneg_integer(a[0], "m")?, a[1]),
        "v" => vertical::v_winckler(a[0]),
        "v1" => Ok(vertical::rational_weight(a[0])),
        "v2" => vertical::gaussian_weight(a[0]),
        "epsilon1" => epsilon1(&Eps12 { c7: Interval::ONE, c13: a[1], c15: a[2], alpha3: a[3], c16: a[4] }, a[0]),
        "epsilon2" => epsilon2(&Eps12 { c7: a[1], c13: Interval::ZERO, c15: a[2], alpha3: a[3], c16: a[4] }, a[0]),
        "epsilon3" => {
            let k = Eps34 {
                c7: Interval::ONE,
                c10: Interval::ZERO,
                c15p: a[2],
                c19: Interval::ZERO,
                c20: a[1],
                c21: Interval::ZERO,
                alpha4: a[3],
                c23: a[4],
            };
            epsilon3(&k, a[0])
        }
        "epsilon4" => {
            let k = Eps34 { c7: a[1], c10: a[2], c15p: a[3], c19: a[4], c20: a[5], c21: a[6], alpha4: a[7], c23: a[8] };
            epsilon4(&k, a[0])
        }
        _ => Err(Error::UnknownFunction(id.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(id: &str, args: &[f64]) -> Interval {
        let a: Vec<Interval> = args.iter().map(|&x| Interval::point(x)).collect();
        eval_function(id, &a).unwrap()
    }

    #[test]
    fn f2_at_two() {
        let v = at("f2", &[2.0]);
        let want = 0.54 * (7f64.ln() / 2f64.ln() - 1.0);
        assert!(v.inflate(1e-15).contains(want) && v.width() < 1e-14, "{v:?}");
        assert!(v.inflate(1e-10).contains(0.9759716579));
    }

    #[test]
    fn phi6_and_phi7_at_one() {
        let p6 = at("phi6", &[1.0]);
        assert!(p6.lo() > 0.94592 && p6.hi() < 0.94593, "{p6:?}");
        let p7 = at("phi7", &[1.0]);
        assert!(p7.lo() > 0.91791 && p7.hi() < 0.91792, "{p7:?}");
    }

    #[test]
    fn phi6_is_exact_at_zero_and_smooth_across_one() {
        assert_eq!(at("phi6", &[0.0]), Interval::ZERO);
        let small = at("phi6", &[1e-3]);
        assert!(small.inflate(1e-8).contains(3e-3 - 55.0 / 12.0 * 1e-6), "{small:?}");
        let wide = phi6(Interval::new(0.5, 1.5)).unwrap();
        for u in [0.5, 0.9, 1.0, 1.2, 1.5] {
            assert!(phi6(Interval::point(u)).unwrap().subset_of(&wide));
        }
    }

    #[test]
    fn phi6_jet_derivative_at_zero_is_three() {
        let j = phi6(Jet::var(Interval::point(0.0), 2)).unwrap();
        assert!(j.derivative(1).inflate(1e-12).contains(3.0), "{j:?}");
    }

    #[test]
    fn g_weight_vanishes_at_zero_and_matches_closed_form() {
        let w = g_weights_default();
        assert!(g_weight(w, Interval::ZERO).inflate(1e-15).contains(0.0));
        for v in [0.3, 0.672, 2.0, 10.0] {
            let u = v * v;
            let closed = -u / ((u * u + 3.0 * u + 1.0) * (1.0 + u));
            assert!(g_weight(w, Interval::point(v)).inflate(1e-14).contains(closed));
        }
    }

    #[test]
    fn alpha_constants() {
        assert!(alpha_7().inflate(1e-9).contains(2.942771246));
        assert!(alpha_12().inflate(1e-10).contains(0.3416280959));
        assert!((alpha_9() * alpha_9().recip()).contains(1.0));
    }

    #[test]
    fn f5_respects_its_bound() {
        let s = ComplexBox::new(Interval::point(2.0), Interval::point(3.0));
        for j in 1..4 {
            let u = Interval::point(0.9);
            let lhs = f5(ComplexBox::real(s.re), j, u).unwrap() + f5(s, j, u).unwrap();
            assert!(lhs.hi() <= f5_bound(s.re, j, u).lo());
        }
        assert!(f5(ComplexBox::point(0.5, 0.0), 1, Interval::point(0.5)).is_err());
    }

    #[test]
    fn archimedean_weights() {
        let eps = Interval::point(1.0 / (8.7 * 12f64.ln()));
        let d1 = d_weight(1, eps).unwrap();
        assert!(d1.inflate(1e-10).contains(0.3416280959), "{d1:?}");
        let d0 = d_weight(0, eps).unwrap();
        assert!(d0.width() < 1e-9 && d0.is_finite());
    }

    #[test]
    fn registry_checks_arity_and_domain() {
        assert!(matches!(eval_function("nope", &[]), Err(Error::UnknownFunction(_))));
        assert!(eval_function("f0", &[]).is_err());
        assert!(matches!(eval_function("f0", &[Interval::point(0.5)]), Err(Error::Domain(_))));
        assert!(eval_function("D", &[Interval::point(0.5), Interval::point(0.01)]).is_err());
        for def in function_defs() {
            assert!(def.arity >= 1);
        }
    }

    #[test]
    fn f3_and_its_alias_agree() {
        assert_eq!(at("f3", &[1.2]), at("f_3zfr", &[1.2]));
        assert_eq!(at("f4", &[1.2]), at("f_4zfr", &[1.2]));
    }
}
