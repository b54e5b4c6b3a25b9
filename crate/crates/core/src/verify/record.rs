use crate::interval::Interval;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Proved,
    Refuted,
    Undecided,
}

/// Outcome of one universal inequality or feasibility check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub claim: String,
    pub verdict: Verdict,
    /// Enclosure of the infimum of `lhs − rhs` over the region.
    pub margin: Interval,
    pub boxes_explored: u64,
    pub tail_handled: bool,
    /// Whether the claim counts toward the overall exit status.
    pub gating: bool,
    /// Box where the claim fails (for refutations) or could not be settled.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Interval>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerdictRecord {
    pub fn new(claim: impl Into<String>, verdict: Verdict, margin: Interval) -> Self {
        VerdictRecord {
            claim: claim.into(),
            verdict,
            margin,
            boxes_explored: 0,
            tail_handled: false,
            gating: true,
            witness: None,
            notes: Vec::new(),
        }
    }

    /// Verdict from a margin enclosure alone.
    pub fn from_margin(claim: impl Into<String>, margin: Interval, strict: bool) -> Self {
        let verdict = if margin.is_empty() {
            Verdict::Undecided
        } else if margin.lo() > 0.0 || (!strict && margin.lo() >= 0.0) {
            Verdict::Proved
        } else if margin.hi() < 0.0 || (strict && margin.hi() <= 0.0) {
            Verdict::Refuted
        } else {
            Verdict::Undecided
        };
        VerdictRecord::new(claim, verdict, margin)
    }

    pub fn informational(mut self) -> Self {
        self.gating = false;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_boxes(mut self, n: u64) -> Self {
        self.boxes_explored = n;
        self
    }

    pub fn with_tail(mut self) -> Self {
        self.tail_handled = true;
        self
    }

    pub fn with_witness(mut self, w: Vec<Interval>) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn proved(&self) -> bool {
        self.verdict == Verdict::Proved
    }
}

/// Combines sub-checks of one claim: proved only if all are.
pub fn conjoin(claim: impl Into<String>, parts: &[VerdictRecord]) -> VerdictRecord {
    let margin = parts.iter().map(|p| p.margin).reduce(|a, b| a.min(b)).unwrap_or(Interval::EMPTY);
    let verdict = if parts.is_empty() {
        Verdict::Undecided
    } else if parts.iter().any(|p| p.verdict == Verdict::Refuted) {
        Verdict::Refuted
    } else if parts.iter().all(VerdictRecord::proved) {
        Verdict::Proved
    } else {
        Verdict::Undecided
    };
    let mut rec = VerdictRecord::new(claim, verdict, margin);
    rec.boxes_explored = parts.iter().map(|p| p.boxes_explored).sum();
    rec.tail_handled = parts.iter().any(|p| p.tail_handled);
    rec.witness = parts.iter().find(|p| p.verdict == Verdict::Refuted).and_then(|p| p.witness.clone());
    for p in parts {
        rec.notes.push(format!("{}: {:?} margin {}", p.claim, p.verdict, p.margin));
    }
    rec
}
