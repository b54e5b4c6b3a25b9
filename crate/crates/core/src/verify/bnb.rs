//! Interval branch-and-bound over boxes.
//!
//! Boxes are processed generation by generation; each generation is evaluated
//! in parallel and its results are consumed in a fixed order, so the outcome
//! never depends on the thread count.

use super::record::{Verdict, VerdictRecord};
use crate::error::Result;
use crate::interval::Interval;
use crate::jet::{Jet, Real};
use rayon::prelude::*;

/// A product of closed intervals, one per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct Region {
    pub bounds: Vec<Interval>,
    /// Marks variables that wrap around (the engine only uses this for
    /// reporting; a period is covered by a single closed interval).
    pub periodic: Vec<bool>,
}

impl Region {
    pub fn new(bounds: Vec<Interval>) -> Self {
        let n = bounds.len();
        Region { bounds, periodic: vec![false; n] }
    }

    pub fn line(lo: f64, hi: f64) -> Self {
        Region::new(vec![Interval::new(lo, hi)])
    }

    pub fn periodic(mut self, dim: usize) -> Self {
        self.periodic[dim] = true;
        self
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_valid(&self) -> bool {
        !self.bounds.is_empty() && self.bounds.iter().all(|b| !b.is_empty() && b.is_finite())
    }
}

#[derive(Clone, Debug)]
pub struct BnbOptions {
    /// Bisections allowed along each variable.
    pub depth: u32,
    pub max_boxes: u64,
    /// Prove `f > 0` rather than `f ≥ 0`.
    pub strict: bool,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions { depth: 60, max_boxes: 2_000_000, strict: false }
    }
}

impl BnbOptions {
    pub fn with_depth(depth: u32) -> Self {
        BnbOptions { depth, ..Default::default() }
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }
}

/// Result of a sign proof.
#[derive(Clone, Debug)]
pub struct SignOutcome {
    pub verdict: Verdict,
    /// Encloses `inf f` over the region as far as the search determined it.
    pub margin: Interval,
    pub boxes: u64,
    pub witness: Option<Vec<Interval>>,
    pub notes: Vec<String>,
}

impl SignOutcome {
    pub fn into_record(self, claim: &str) -> VerdictRecord {
        let mut r = VerdictRecord::new(claim, self.verdict, self.margin).with_boxes(self.boxes);
        r.witness = self.witness;
        r.notes = self.notes;
        r
    }
}

struct Cell {
    bounds: Vec<Interval>,
    depth: Vec<u32>,
}

fn midpoint(b: &[Interval]) -> Vec<Interval> {
    b.iter().map(|x| Interval::point(x.mid())).collect()
}

/// Proves `f ≥ 0` (or `> 0`) on `region`. `f` must return a rigorous
/// enclosure of its range over any box, including degenerate ones.
pub fn prove_sign<F>(f: &F, region: &Region, opts: &BnbOptions) -> SignOutcome
where
    F: Fn(&[Interval]) -> Result<Interval> + Sync,
{
    let mut notes = Vec::new();
    if !region.is_valid() {
        notes.push("region is empty or unbounded".into());
        return SignOutcome { verdict: Verdict::Undecided, margin: Interval::EMPTY, boxes: 0, witness: None, notes };
    }
    let widths: Vec<f64> = region.bounds.iter().map(|b| b.width()).collect();
    let mut queue = vec![Cell { bounds: region.bounds.clone(), depth: vec![0; region.dim()] }];
    let mut boxes = 0u64;
    let mut lower = f64::INFINITY;
    let mut upper = f64::INFINITY;
    let mut stuck: Option<(f64, Vec<Interval>)> = None;
    let mut first_error: Option<String> = None;
    let holds = |lo: f64| if opts.strict { lo > 0.0 } else { lo >= 0.0 };
    let fails = |hi: f64| if opts.strict { hi <= 0.0 } else { hi < 0.0 };
    while !queue.is_empty() {
        if boxes + queue.len() as u64 > opts.max_boxes {
            notes.push(format!("box budget {} exhausted", opts.max_boxes));
            for c in &queue {
                if let Ok(v) = f(&c.bounds) {
                    lower = lower.min(v.lo());
                }
            }
            let worst = queue.swap_remove(0).bounds;
            return SignOutcome {
                verdict: Verdict::Undecided,
                margin: Interval::new(lower.min(upper), upper),
                boxes,
                witness: Some(worst),
                notes,
            };
        }
        boxes += queue.len() as u64;
        let evals: Vec<(Result<Interval>, Result<Interval>)> = queue
            .par_iter()
            .map(|c| {
                let whole = f(&c.bounds);
                let settled = matches!(&whole, Ok(v) if holds(v.lo()));
                let probe = if settled { Ok(Interval::EMPTY) } else { f(&midpoint(&c.bounds)) };
                (whole, probe)
            })
            .collect();
        let mut next = Vec::new();
        for (cell, (whole, probe)) in queue.into_iter().zip(evals) {
            if let Ok(p) = &probe {
                if !p.is_empty() {
                    upper = upper.min(p.hi());
                    if fails(p.hi()) {
                        notes.push(format!("counterexample at the midpoint, value {p}"));
                        return SignOutcome {
                            verdict: Verdict::Refuted,
                            margin: Interval::new(lower.min(p.lo()), p.hi()),
                            boxes,
                            witness: Some(midpoint(&cell.bounds)),
                            notes,
                        };
                    }
                }
            }
            let lo = match &whole {
                Ok(v) => v.lo(),
                Err(e) => {
                    first_error.get_or_insert_with(|| e.to_string());
                    f64::NEG_INFINITY
                }
            };
            if holds(lo) {
                lower = lower.min(lo);
                continue;
            }
            let dim = (0..cell.bounds.len())
                .filter(|&i| cell.depth[i] < opts.depth && cell.bounds[i].width() > 0.0)
                .max_by(|&i, &j| {
                    let ri = cell.bounds[i].width() / widths[i].max(f64::MIN_POSITIVE);
                    let rj = cell.bounds[j].width() / widths[j].max(f64::MIN_POSITIVE);
                    ri.total_cmp(&rj).then(j.cmp(&i))
                });
            match dim {
                Some(i) => {
                    let (a, b) = cell.bounds[i].bisect();
                    for half in [a, b] {
                        let mut bounds = cell.bounds.clone();
                        bounds[i] = half;
                        let mut depth = cell.depth.clone();
                        depth[i] += 1;
                        next.push(Cell { bounds, depth });
                    }
                }
                None => {
                    lower = lower.min(lo);
                    if stuck.as_ref().is_none_or(|(w, _)| lo < *w) {
                        stuck = Some((lo, cell.bounds));
                    }
                }
            }
        }
        queue = next;
    }
    if let Some(e) = first_error {
        notes.push(format!("some boxes failed to evaluate: {e}"));
    }
    let margin = Interval::new(lower.min(upper), upper.max(lower));
    match stuck {
        None => SignOutcome { verdict: Verdict::Proved, margin, boxes, witness: None, notes },
        Some((_, worst)) => {
            notes.push(format!("depth limit {} reached; worst box kept as witness", opts.depth));
            SignOutcome { verdict: Verdict::Undecided, margin, boxes, witness: Some(worst), notes }
        }
    }
}

/// Range of a univariate function over `x`, sharpened by the sign of its
/// derivative (endpoint evaluation) or a second-order Taylor form.
pub fn enclose_1d<F>(f: &F, x: Interval) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    let at = |p: f64| -> Result<Interval> { Ok(f(Jet::var(Interval::point(p), 0))?.value()) };
    if x.is_point() {
        return at(x.lo());
    }
    let over = f(Jet::var(x, 2))?;
    let natural = over.value();
    let d = over.coeff(1);
    let refined = if d.lo() >= 0.0 || d.hi() <= 0.0 {
        let (a, b) = (at(x.lo())?, at(x.hi())?);
        if d.lo() >= 0.0 {
            Interval::new(a.lo(), b.hi())
        } else {
            Interval::new(b.lo(), a.hi())
        }
    } else {
        let m = x.mid();
        let mid = f(Jet::var(Interval::point(m), 1))?;
        let h = x - m;
        mid.value() + mid.coeff(1) * h + over.coeff(2) * h.sqr()
    };
    let both = refined.intersect(&natural);
    Ok(if both.is_empty() { natural } else { both })
}

/// Range of `f′` over `x`: the natural enclosure intersected with a
/// second-order Taylor form of the derivative at the midpoint.
pub fn enclose_derivative<F>(f: &F, x: Interval) -> Result<Interval>
where
    F: Fn(Jet) -> Result<Jet>,
{
    if x.is_point() {
        return Ok(f(Jet::var(x, 1))?.coeff(1));
    }
    let over = f(Jet::var(x, 3))?;
    let natural = over.coeff(1);
    let m = x.mid();
    let at = f(Jet::var(Interval::point(m), 2))?;
    let h = x - m;
    let taylor = at.coeff(1) + at.coeff(2) * 2.0 * h + over.coeff(3) * 3.0 * h.sqr();
    let both = taylor.intersect(&natural);
    Ok(if both.is_empty() { natural } else { both })
}

/// Result of a univariate minimisation.
#[derive(Clone, Debug)]
pub struct MinOutcome {
    /// Encloses `min f` over the interval.
    pub enclosure: Interval,
    /// Hull of the boxes that may still hold the minimiser.
    pub argmin: Interval,
    pub boxes: u64,
}

/// Encloses `min f` on `[a, b]` to width `tol`.
pub fn minimize_1d<F>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<MinOutcome>
where
    F: Fn(Jet) -> Result<Jet> + Sync,
{
    let mut live = vec![(Interval::new(a, b), 0u32)];
    let mut upper = f64::INFINITY;
    let mut boxes = 0u64;
    loop {
        boxes += live.len() as u64;
        let evals: Vec<(Result<Interval>, Result<Interval>)> =
            live.par_iter().map(|(x, _)| (enclose_1d(f, *x), enclose_1d(f, Interval::point(x.mid())))).collect();
        for (_, p) in &evals {
            upper = upper.min(p.as_ref().map_err(Clone::clone)?.hi());
        }
        let mut lower = f64::INFINITY;
        let mut kept = Vec::new();
        for ((x, d), (r, _)) in live.into_iter().zip(evals) {
            let r = r?;
            if r.lo() > upper {
                continue;
            }
            lower = lower.min(r.lo());
            kept.push((x, d, r));
        }
        let done = upper - lower <= tol || kept.iter().all(|(x, d, _)| *d >= depth || x.width() == 0.0);
        if done {
            let argmin = kept.iter().fold(Interval::EMPTY, |h, (x, _, _)| if h.is_empty() { *x } else { h.hull(x) });
            if upper - lower > tol {
                return Err(crate::error::Error::ToleranceNotReached {
                    enclosure: Interval::new(lower, upper),
                    width: upper - lower,
                    boxes: boxes as usize,
                });
            }
            return Ok(MinOutcome { enclosure: Interval::new(lower, upper), argmin, boxes });
        }
        live = Vec::new();
        for (x, d, r) in kept {
            if r.lo() >= upper - tol * 0.25 || d >= depth {
                live.push((x, depth));
            } else {
                let (l, h) = x.bisect();
                live.push((l, d + 1));
                live.push((h, d + 1));
            }
        }
    }
}
