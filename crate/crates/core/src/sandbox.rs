//! Exact sieve computations: prime and prime-power counts checked against
//! their analytic bounds, and least primes in arithmetic progressions.

use crate::error::{Error, Result};
use crate::interval::{consts, Interval};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Largest sieve the sandbox will build.
pub const DESK_LIMIT: u64 = 100_000_000;
/// Largest modulus accepted by [`least_primes_in_progressions`].
pub const MAX_MODULUS: u64 = 10_000;

/// Odd-only bit sieve of Eratosthenes.
#[derive(Clone, Debug)]
pub struct PrimeSieve {
    limit: u64,
    composite: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit > DESK_LIMIT {
            return Err(Error::Range(format!("sieve limit {limit} exceeds {DESK_LIMIT}")));
        }
        let slots = (limit / 2 + 1) as usize;
        let mut composite = vec![0u64; slots / 64 + 1];
        let mut i = 3u64;
        while i * i <= limit {
            let idx = (i / 2) as usize;
            if composite[idx / 64] >> (idx % 64) & 1 == 0 {
                let mut j = i * i;
                while j <= limit {
                    let k = (j / 2) as usize;
                    composite[k / 64] |= 1 << (k % 64);
                    j += 2 * i;
                }
            }
            i += 2;
        }
        Ok(PrimeSieve { limit, composite })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} beyond sieve limit {}", self.limit);
        if n < 2 {
            return false;
        }
        if n.is_multiple_of(2) {
            return n == 2;
        }
        let k = (n / 2) as usize;
        self.composite[k / 64] >> (k % 64) & 1 == 0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let odd = (1..=(self.limit.saturating_sub(1)) / 2).map(|k| 2 * k + 1).filter(move |&n| self.is_prime(n));
        (self.limit >= 2).then_some(2).into_iter().chain(odd)
    }

    /// `π(x)` for `x` up to the limit.
    pub fn prime_count(&self, x: u64) -> u64 {
        self.primes().take_while(|&p| p <= x).count() as u64
    }

    /// Prime powers `p^h ≤ limit` with `h ≥ 2`, ascending, with their base.
    pub fn higher_prime_powers(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for p in self.primes() {
            if p.saturating_mul(p) > self.limit {
                break;
            }
            let mut q = p * p;
            while q <= self.limit {
                out.push((q, p));
                match q.checked_mul(p) {
                    Some(n) => q = n,
                    None => break,
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// One comparison of an exact count against an interval bound.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundCheck {
    pub at: u64,
    pub count: String,
    pub bound: Interval,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SandboxResult {
    pub check: String,
    /// Exact integer quantities such as `pi(1000000)`.
    pub quantities: Vec<(String, u64)>,
    pub points_checked: u64,
    /// The tightest comparisons encountered, and any failures.
    pub comparisons: Vec<BoundCheck>,
    pub pass: bool,
}

fn rosser_bound(alpha0: Interval, x: u64) -> Result<Interval> {
    let xi = Interval::point(x as f64);
    Ok(alpha0 * xi / xi.ln()?)
}

/// `π(x) < α₀ x / log x` at every integer `x` in `[2, x_max]`.
///
/// The count only changes at primes and `x / log x` increases for `x ≥ e`,
/// so checking at each prime suffices; on `[2, 3)` the bound is at least `α₀ e`.
pub fn check_prime_count(x_max: u64, alpha0: Interval) -> Result<SandboxResult> {
    let sieve = PrimeSieve::new(x_max)?;
    let mut count = 0u64;
    let mut pass = true;
    let mut worst: Option<(f64, BoundCheck)> = None;
    let mut failures = Vec::new();
    for p in sieve.primes() {
        count += 1;
        let bound = if p == 2 { alpha0 * consts::e() } else { rosser_bound(alpha0, p)? };
        let holds = (count as f64) < bound.lo();
        let slack = bound.lo() / count as f64;
        let rec = BoundCheck { at: p, count: count.to_string(), bound, holds };
        if !holds {
            pass = false;
            failures.push(rec.clone());
        }
        if worst.as_ref().is_none_or(|(s, _)| slack < *s) {
            worst = Some((slack, rec));
        }
    }
    let mut quantities = vec![(format!("pi({x_max})"), count)];
    if x_max > 1_000_000 {
        quantities.push(("pi(1000000)".into(), sieve.prime_count(1_000_000)));
    }
    let mut comparisons: Vec<BoundCheck> = worst.into_iter().map(|(_, r)| r).collect();
    comparisons.extend(failures);
    if x_max >= 1_000_000 {
        let at = 1_000_000;
        comparisons.push(BoundCheck {
            at,
            count: sieve.prime_count(at).to_string(),
            bound: rosser_bound(alpha0, at)?,
            holds: (sieve.prime_count(at) as f64) < rosser_bound(alpha0, at)?.lo(),
        });
    }
    Ok(SandboxResult { check: "prime_count".into(), quantities, points_checked: count, comparisons, pass })
}

/// Number of prime powers `p^h ≤ x` with `h ≥ 2`.
pub fn higher_prime_power_count(x: u64) -> Result<u64> {
    let r = (x as f64).sqrt() as u64 + 2;
    let sieve = PrimeSieve::new(x.max(r).min(DESK_LIMIT))?;
    Ok(sieve.higher_prime_powers().iter().take_while(|(q, _)| *q <= x).count() as u64)
}

/// `S(x) ≤ (2α₀ / log 2) √x` at every integer `x` in `[2, x_max]`, checked
/// at each prime power where `S` jumps.
pub fn check_prime_power_count(x_max: u64, alpha0: Interval) -> Result<SandboxResult> {
    let root = ((x_max as f64).sqrt() as u64 + 2).min(x_max);
    let sieve = PrimeSieve::new(root.max(2))?;
    let mut powers = Vec::new();
    for p in sieve.primes() {
        let mut q = p.saturating_mul(p);
        while q <= x_max {
            powers.push(q);
            q = q.saturating_mul(p);
        }
    }
    powers.sort_unstable();
    let c = alpha0 * 2.0 / consts::ln2();
    let mut pass = true;
    let mut comparisons = Vec::new();
    let mut tightest: Option<(f64, BoundCheck)> = None;
    for (i, &q) in powers.iter().enumerate() {
        let s = (i + 1) as u64;
        let bound = c * Interval::point(q as f64).sqrt()?;
        let holds = (s as f64) <= bound.lo();
        let rec = BoundCheck { at: q, count: s.to_string(), bound, holds };
        if !holds {
            pass = false;
            comparisons.push(rec.clone());
        }
        let slack = bound.lo() / s as f64;
        if tightest.as_ref().is_none_or(|(t, _)| slack < *t) {
            tightest = Some((slack, rec));
        }
    }
    comparisons.extend(tightest.map(|(_, r)| r));
    let s100 = powers.iter().take_while(|&&q| q <= 100).count() as u64;
    let mut quantities = vec![(format!("S({x_max})"), powers.len() as u64)];
    if x_max >= 100 {
        quantities.push(("S(100)".into(), s100));
    }
    Ok(SandboxResult {
        check: "prime_power_count".into(),
        quantities,
        points_checked: powers.len() as u64,
        comparisons,
        pass,
    })
}

/// Smallest `h ≥ 2` with `p^h ≥ x²`, by exact integer comparison.
fn tail_exponent(p: u64, x: u64) -> u32 {
    let target = (x as u128) * (x as u128);
    let mut h = 2u32;
    let mut pw = (p as u128) * (p as u128);
    while pw < target {
        pw = pw.saturating_mul(p as u128);
        h += 1;
    }
    h
}

/// Encloses `Σ_{p^h ≥ x², h ≥ 2} p^{-h}` with primes up to `prime_limit`
/// summed exactly and the rest bounded by `1 / prime_limit`.
pub fn prime_power_tail(x: u64, sieve: &PrimeSieve) -> Interval {
    let mut sum = Interval::ZERO;
    for p in sieve.primes() {
        let h = tail_exponent(p, x);
        let denom = Interval::point(p as f64).powi(h as i32 - 1) * Interval::point((p - 1) as f64);
        sum += denom.recip();
    }
    let tail = Interval::new(0.0, (Interval::ONE / Interval::point(sieve.limit() as f64)).hi());
    sum + tail
}

/// `Σ_{p^h ≥ x², h ≥ 2} p^{-h} ≤ 4.02 α₀ / (x log x)` at sampled `x ≥ 101`.
pub fn check_prime_power_tail(samples: &[u64], prime_limit: u64, alpha0: Interval) -> Result<SandboxResult> {
    if samples.iter().any(|&x| x < 101) {
        return Err(Error::Range("tail check needs x ≥ 101".into()));
    }
    let sieve = PrimeSieve::new(prime_limit)?;
    let mut comparisons = Vec::new();
    let mut pass = true;
    for &x in samples {
        let lhs = prime_power_tail(x, &sieve);
        let xi = Interval::point(x as f64);
        let bound = alpha0 * Interval::decimal(4.02) / (xi * xi.ln()?);
        let holds = lhs.hi() <= bound.lo();
        pass &= holds;
        comparisons.push(BoundCheck { at: x, count: format!("{:e}", lhs.hi()), bound, holds });
    }
    Ok(SandboxResult {
        check: "prime_power_tail".into(),
        quantities: vec![("prime_limit".into(), prime_limit)],
        points_checked: samples.len() as u64,
        comparisons,
        pass,
    })
}

/// Default sample points for the tail check: `101 · 2^k` while the sieve
/// tail stays two orders below the bound.
pub fn default_tail_samples(prime_limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut x = 101u64;
    while x.saturating_mul(100) <= prime_limit {
        out.push(x);
        x *= 2;
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// `|disc ℚ(ζ_q)| = q^{φ(q)} / Π_{p | q} p^{φ(q)/(p−1)}`.
pub fn cyclotomic_discriminant(q: u64) -> BigUint {
    let phi = euler_phi(q);
    let mut num = BigUint::from(q).pow(phi as u32);
    for p in prime_factors(q) {
        num /= BigUint::from(p).pow((phi / (p - 1)) as u32);
    }
    num
}

/// Enclosure of `log |disc ℚ(ζ_q)|` from the same formula.
pub fn cyclotomic_log_discriminant(q: u64) -> Result<Interval> {
    let phi = euler_phi(q) as f64;
    let mut acc = Interval::point(q as f64).ln()? * phi;
    for p in prime_factors(q) {
        acc -= Interval::point(p as f64).ln()? * (phi / (p - 1) as f64);
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ApRow {
    pub residue: u64,
    pub least_prime: u64,
    /// `log p / log d`.
    pub ratio: Interval,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ApReport {
    pub modulus: u64,
    pub phi: u64,
    /// Decimal digits of the discriminant, or the full value when short.
    pub discriminant: String,
    pub discriminant_digits: usize,
    pub log_discriminant: Interval,
    pub sieve_limit: u64,
    pub rows: Vec<ApRow>,
    pub max_ratio: Interval,
}

/// Least prime in each reduced residue class modulo `q`.
pub fn least_primes_in_progressions(q: u64) -> Result<ApReport> {
    if !(3..=MAX_MODULUS).contains(&q) {
        return Err(Error::Range(format!("modulus {q} outside [3, {MAX_MODULUS}]")));
    }
    let residues: Vec<u64> = (1..q).filter(|&a| gcd(a, q) == 1).collect();
    let mut limit = (q * 64).max(1024);
    let (sieve, found) = loop {
        let sieve = PrimeSieve::new(limit.min(DESK_LIMIT))?;
        let mut found = vec![0u64; q as usize];
        let mut missing = residues.len();
        for p in sieve.primes() {
            let r = (p % q) as usize;
            if found[r] == 0 && gcd(p, q) == 1 {
                found[r] = p;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        if missing == 0 {
            break (sieve, found);
        }
        if limit >= DESK_LIMIT {
            return Err(Error::Range(format!("least primes modulo {q} exceed {DESK_LIMIT}")));
        }
        limit = limit.saturating_mul(4);
    };
    let d = cyclotomic_discriminant(q);
    let log_d = cyclotomic_log_discriminant(q)?;
    let text = d.to_string();
    let digits = text.len();
    let mut rows = Vec::with_capacity(residues.len());
    let mut max_ratio = Interval::ZERO;
    for &a in &residues {
        let p = found[a as usize];
        let ratio = Interval::point(p as f64).ln()? / log_d;
        max_ratio = max_ratio.max(ratio);
        rows.push(ApRow { residue: a, least_prime: p, ratio });
    }
    Ok(ApReport {
        modulus: q,
        phi: euler_phi(q),
        discriminant: if digits <= 200 { text } else { format!("<{digits} digits>") },
        discriminant_digits: digits,
        log_discriminant: log_d,
        sieve_limit: sieve.limit(),
        rows,
        max_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_prime_counts() {
        let s = PrimeSieve::new(100).unwrap();
        assert_eq!(s.prime_count(100), 25);
        assert!(s.is_prime(97) && !s.is_prime(91) && s.is_prime(2) && !s.is_prime(1));
    }

    #[test]
    fn prime_powers_to_one_hundred() {
        assert_eq!(higher_prime_power_count(100).unwrap(), 10);
    }

    #[test]
    fn cyclotomic_discriminants() {
        assert_eq!(cyclotomic_discriminant(4), BigUint::from(4u32));
        assert_eq!(cyclotomic_discriminant(3), BigUint::from(3u32));
        assert_eq!(cyclotomic_discriminant(5), BigUint::from(125u32));
        assert_eq!(cyclotomic_discriminant(8), BigUint::from(256u32));
        assert_eq!(cyclotomic_discriminant(6), cyclotomic_discriminant(3));
    }

    #[test]
    fn progressions_mod_four() {
        let r = least_primes_in_progressions(4).unwrap();
        let primes: Vec<u64> = r.rows.iter().map(|row| row.least_prime).collect();
        assert_eq!(primes, vec![5, 3]);
        assert!(r.rows[0].ratio.contains(5f64.ln() / 4f64.ln()));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(least_primes_in_progressions(2).is_err());
        assert!(least_primes_in_progressions(20_000).is_err());
        assert!(PrimeSieve::new(DESK_LIMIT + 1).is_err());
    }

    #[test]
    fn tail_exponent_is_exact() {
        assert_eq!(tail_exponent(2, 101), 14);
        assert_eq!(tail_exponent(101, 101), 2);
        assert_eq!(tail_exponent(3, 9), 4);
    }
}
