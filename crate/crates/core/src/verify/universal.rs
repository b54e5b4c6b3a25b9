//! Generic universal-inequality checks built on the branch-and-bound engine.

use super::bnb::{enclose_1d, enclose_derivative, prove_sign, BnbOptions, Region};
use super::record::{Verdict, VerdictRecord};
use crate::error::Result;
use crate::interval::Interval;
use crate::jet::Jet;

/// `f ≥ 0` (or `> 0`) on a compact region.
pub fn verify_nonneg<F>(claim: &str, f: &F, region: &Region, opts: &BnbOptions) -> VerdictRecord
where
    F: Fn(&[Interval]) -> Result<Interval> + Sync,
{
    prove_sign(f, region, opts).into_record(claim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Strict monotonicity on `[lo, hi]` from the sign of the derivative.
pub fn verify_monotone<F>(claim: &str, f: &F, lo: f64, hi: f64, direction: Direction, depth: u32) -> VerdictRecord
where
    F: Fn(Jet) -> Result<Jet> + Sync,
{
    let sign = match direction {
        Direction::Increasing => 1.0,
        Direction::Decreasing => -1.0,
    };
    let g = |b: &[Interval]| Ok(enclose_derivative(f, b[0])? * sign);
    let opts = BnbOptions::with_depth(depth).strict(true);
    prove_sign(&g, &Region::line(lo, hi), &opts)
        .into_record(claim)
        .with_note(format!("derivative sign certified on [{lo}, {hi}]"))
}

/// How a half-line claim is closed beyond the compact core.
#[derive(Clone, Debug)]
pub enum Tail {
    /// `f` is nondecreasing past the cut for the stated reason, so its
    /// infimum there is `f(cut)`.
    Nondecreasing(String),
    /// No closed-form certificate: geometric sample points are searched for a
    /// counterexample and the claim is otherwise left open.
    Search(String),
}

/// `f ≥ 0` (or `> 0`) on `[start, ∞)`: branch-and-bound on `[start, cut]`
/// plus a tail certificate on `[cut, ∞)`.
pub fn verify_halfline<F>(claim: &str, f: &F, start: f64, cut: f64, tail: Tail, opts: &BnbOptions) -> VerdictRecord
where
    F: Fn(Jet) -> Result<Jet> + Sync,
{
    let g = |b: &[Interval]| enclose_1d(f, b[0]);
    let core = prove_sign(&g, &Region::line(start, cut), opts).into_record(claim);
    if core.verdict == Verdict::Refuted {
        return core.with_note(format!("core window [{start}, {cut}]"));
    }
    let fails = |hi: f64| if opts.strict { hi <= 0.0 } else { hi < 0.0 };
    let (tail_verdict, tail_margin, tail_witness, tail_note) = match tail {
        Tail::Nondecreasing(reason) => match enclose_1d(f, Interval::point(cut)) {
            Ok(v) => {
                let r = VerdictRecord::from_margin(claim, v, opts.strict);
                (r.verdict, v, None, format!("tail [{cut}, ∞): {reason}; infimum f({cut}) = {v}"))
            }
            Err(e) => (Verdict::Undecided, Interval::EMPTY, None, format!("tail [{cut}, ∞): evaluation failed: {e}")),
        },
        Tail::Search(reason) => {
            let mut x = cut;
            let mut found = None;
            let mut worst = Interval::EMPTY;
            for _ in 0..1100 {
                x *= 2.0;
                if !x.is_finite() {
                    break;
                }
                match enclose_1d(f, Interval::point(x)) {
                    Ok(v) => {
                        worst = if worst.is_empty() { v } else { worst.min(v) };
                        if fails(v.hi()) {
                            found = Some((x, v));
                            break;
                        }
                    }
                    Err(_) => break,
                }
            }
            match found {
                Some((x, v)) => (
                    Verdict::Refuted,
                    v,
                    Some(vec![Interval::point(x)]),
                    format!("tail [{cut}, ∞): {reason}; counterexample at {x}, value {v}"),
                ),
                None => (
                    Verdict::Undecided,
                    worst,
                    None,
                    format!("tail [{cut}, ∞): {reason}; no certificate, sampled minimum {worst}"),
                ),
            }
        }
    };
    let verdict = match (core.verdict, tail_verdict) {
        (_, Verdict::Refuted) => Verdict::Refuted,
        (Verdict::Proved, Verdict::Proved) => Verdict::Proved,
        _ => Verdict::Undecided,
    };
    let margin = if tail_margin.is_empty() { core.margin } else { core.margin.min(tail_margin) };
    let mut rec = VerdictRecord::new(claim, verdict, margin).with_boxes(core.boxes_explored).with_tail();
    rec.witness = if verdict == Verdict::Refuted { tail_witness } else { core.witness };
    rec.notes = core.notes;
    rec.notes.push(format!("core window [{start}, {cut}]: {:?}, margin {}", core.verdict, core.margin));
    rec.notes.push(tail_note);
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Real;

    #[test]
    fn negated_identity_is_not_increasing() {
        let r = verify_monotone("neg", &|t: Jet| Ok(-t), 0.0, 1.0, Direction::Increasing, 20);
        assert_eq!(r.verdict, Verdict::Refuted);
        let r = verify_monotone("neg", &|t: Jet| Ok(-t), 0.0, 1.0, Direction::Decreasing, 20);
        assert_eq!(r.verdict, Verdict::Proved);
    }

    #[test]
    fn halfline_with_monotone_tail() {
        let f = |t: Jet| Ok(t.ln()? + 1.0);
        let r = verify_halfline(
            "log",
            &f,
            1.0,
            10.0,
            Tail::Nondecreasing("log is increasing".into()),
            &BnbOptions::default().strict(true),
        );
        assert_eq!(r.verdict, Verdict::Proved);
        assert!(r.tail_handled && r.margin.contains(1.0));
    }

    #[test]
    fn halfline_search_finds_late_failure() {
        let f = |t: Jet| Ok(t.rsub(Interval::point(1000.0)));
        let r = verify_halfline("late", &f, 0.0, 10.0, Tail::Search("decreasing".into()), &BnbOptions::default());
        assert_eq!(r.verdict, Verdict::Refuted);
        assert!(r.witness.unwrap()[0].lo() > 1000.0);
    }
}
