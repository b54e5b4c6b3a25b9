//! `−ζ′/ζ(σ) = Σ Λ(n) n^{−σ}` on the real axis.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::{Jet, Real};
use crate::sandbox::PrimeSieve;
use std::sync::OnceLock;

pub const DEFAULT_CUTOFF: u64 = 1_000_000;

/// `ψ(x) < 1.03883 x` for all `x > 0`.
pub fn chebyshev_psi_ratio() -> Interval {
    Interval::ratio(103883, 100000)
}

/// Prime powers `n ≤ N` with `log n` and `Λ(n)` enclosed.
#[derive(Clone, Debug)]
pub struct MangoldtTable {
    cutoff: u64,
    terms: Vec<(Interval, Interval)>,
    psi: Interval,
}

impl MangoldtTable {
    pub fn new(cutoff: u64) -> Result<Self> {
        if cutoff < 16 {
            return Err(Error::Range(format!("von Mangoldt cutoff {cutoff} too small")));
        }
        let sieve = PrimeSieve::new(cutoff)?;
        let mut entries: Vec<(u64, u64)> = sieve.primes().map(|p| (p, p)).collect();
        entries.extend(sieve.higher_prime_powers());
        entries.sort_unstable();
        let mut terms = Vec::with_capacity(entries.len());
        let mut psi = Interval::ZERO;
        for (n, p) in entries {
            let lambda = Interval::point(p as f64).ln()?;
            psi += lambda;
            terms.push((Interval::point(n as f64).ln()?, lambda));
        }
        Ok(MangoldtTable { cutoff, terms, psi })
    }

    /// Shared table at the default cutoff.
    pub fn shared() -> &'static MangoldtTable {
        static TABLE: OnceLock<MangoldtTable> = OnceLock::new();
        TABLE.get_or_init(|| MangoldtTable::new(DEFAULT_CUTOFF).expect("default cutoff is valid"))
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    /// `ψ(N)` for the table's cutoff.
    pub fn psi(&self) -> Interval {
        self.psi
    }

    /// Encloses `Σ Λ(n) (log n)^k n^{−σ}` over all `n ≥ 2`.
    fn moment(&self, sigma: Interval, k: u32) -> Result<Interval> {
        if sigma.is_empty() || sigma.lo() <= 1.0 {
            return Err(Error::Domain(format!("−ζ′/ζ needs σ > 1, got {sigma:?}")));
        }
        let (slo, shi) = (Interval::point(sigma.lo()), Interval::point(sigma.hi()));
        let mut lo = Interval::ZERO;
        let mut hi = Interval::ZERO;
        for &(ln_n, lambda) in &self.terms {
            let w = if k == 0 { lambda } else { lambda * ln_n.powi(k as i32) };
            lo += w * (-(shi * ln_n)).exp()?;
            hi += w * (-(slo * ln_n)).exp()?;
        }
        let tail = self.tail(slo, k)?;
        Ok(Interval::new(lo.lo(), (hi + tail).hi()))
    }

    /// Abel summation against `ψ(t) ≤ c t` with `f(t) = (log t)^k t^{−σ}`
    /// decreasing past `N`:
    /// `Σ_{n>N} Λ(n) f(n) ≤ (cN − ψ(N)) f(N) + c ∫_N^∞ f`.
    fn tail(&self, sigma: Interval, k: u32) -> Result<Interval> {
        let n = Interval::point(self.cutoff as f64);
        let ln_n = n.ln()?;
        if (sigma * ln_n).lo() <= k as f64 {
            return Err(Error::Domain(format!("tail weight not decreasing for σ = {sigma:?}")));
        }
        let c = chebyshev_psi_ratio();
        let f_n = ln_n.powi(k as i32) * (-(sigma * ln_n)).exp()?;
        let gap = (c * n - Interval::point(self.psi.lo())).clamp_nonneg();
        Ok(gap * f_n + c * log_power_integral(ln_n, sigma, k)?)
    }
}

/// `∫_N^∞ (log t)^m t^{−σ} dt` in closed form, given `log N`.
fn log_power_integral(ln_n: Interval, sigma: Interval, m: u32) -> Result<Interval> {
    let s1 = sigma - 1.0;
    let mut sum = Interval::ZERO;
    let mut fall = Interval::ONE;
    for j in 0..=m {
        sum += fall * ln_n.powi((m - j) as i32) / s1.powi(j as i32 + 1);
        fall = fall * (m - j) as f64;
    }
    Ok((-(s1 * ln_n)).exp()? * sum)
}

/// `−ζ′/ζ(σ)` with the shared table.
pub fn neg_zeta_log_deriv(sigma: Interval) -> Result<Interval> {
    MangoldtTable::shared().moment(sigma, 0)
}

/// Normalised derivatives `g_k = (d/dσ)^k(−ζ′/ζ)(σ)/k!` for `k ≤ order`.
pub fn neg_zeta_log_deriv_coeffs(sigma: Interval, order: usize) -> Result<Vec<Interval>> {
    let table = MangoldtTable::shared();
    let mut out = Vec::with_capacity(order + 1);
    let mut fact = 1.0;
    for k in 0..=order {
        if k > 0 {
            fact *= k as f64;
        }
        let m = table.moment(sigma, k as u32)? / fact;
        out.push(if k % 2 == 1 { -m } else { m });
    }
    Ok(out)
}

/// `−ζ′/ζ` lifted to any [`Real`].
pub trait NegZetaLogDeriv: Real {
    fn neg_zeta_log_deriv(self) -> Result<Self>;
}

impl NegZetaLogDeriv for Interval {
    fn neg_zeta_log_deriv(self) -> Result<Self> {
        neg_zeta_log_deriv(self)
    }
}

impl NegZetaLogDeriv for Jet {
    fn neg_zeta_log_deriv(self) -> Result<Self> {
        let g = neg_zeta_log_deriv_coeffs(self.value(), self.order())?;
        Ok(self.compose(&g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_two() {
        let v = neg_zeta_log_deriv(Interval::point(2.0)).unwrap();
        assert!(v.contains(0.5699609931) && v.width() < 2e-6, "{v:?}");
    }

    #[test]
    fn dominated_by_two_for_large_sigma() {
        let v = neg_zeta_log_deriv(Interval::point(20.0)).unwrap();
        let lead = 2f64.ln() * 2f64.powi(-20);
        assert!(v.lo() >= lead * (1.0 - 1e-12) && v.hi() <= lead * 1.01);
    }

    #[test]
    fn rejects_sigma_at_one() {
        assert!(neg_zeta_log_deriv(Interval::new(1.0, 1.5)).is_err());
    }

    #[test]
    fn derivative_is_negative() {
        let g = neg_zeta_log_deriv_coeffs(Interval::new(2.0, 2.1), 2).unwrap();
        assert!(g[1].hi() < 0.0 && g[2].lo() > 0.0);
    }
}
