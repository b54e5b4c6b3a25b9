//! The catalogue of checked claims and a runner over selections of it.

use super::claims;
use super::g0;
use super::record::{Verdict, VerdictRecord};
use crate::analysis::kernels::Kernel;
use crate::analysis::mellin::{default_samples, mellin_roundtrip_check};
use crate::config::Effort;
use crate::error::{Error, Result};
use crate::graph::ConstantGraph;
use crate::interval::Interval;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Upper end of the sieve range for the prime-counting checks.
pub const SANDBOX_X_MAX: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Unit {
    Q,
    GNonpositive,
    G0,
    F3,
    Gamma,
    Phi1,
    Phi2,
    Phi6,
    Phi7,
    Zfr,
    C16,
    C23,
    C10,
    Mellin(Kernel),
    Sandbox,
}

#[derive(Clone, Copy, Debug)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub group: &'static str,
    unit: Unit,
}

const CATALOG: &[ClaimInfo] = &[
    ClaimInfo { id: "q_nonnegative", group: "q", unit: Unit::Q },
    ClaimInfo { id: "g_weight_nonpositive", group: "g0", unit: Unit::GNonpositive },
    ClaimInfo { id: "g0_lower_bound", group: "g0", unit: Unit::G0 },
    ClaimInfo { id: "f3_increasing", group: "monotone", unit: Unit::F3 },
    ClaimInfo { id: "gamma_increasing", group: "monotone", unit: Unit::Gamma },
    ClaimInfo { id: "phi1_positive", group: "monotone", unit: Unit::Phi1 },
    ClaimInfo { id: "phi2_nonnegative", group: "monotone", unit: Unit::Phi2 },
    ClaimInfo { id: "phi6_lower_bound", group: "monotone", unit: Unit::Phi6 },
    ClaimInfo { id: "phi7_lower_bound", group: "monotone", unit: Unit::Phi7 },
    ClaimInfo { id: "zero_free_width", group: "zfr", unit: Unit::Zfr },
    ClaimInfo { id: "c16_case_i", group: "c16", unit: Unit::C16 },
    ClaimInfo { id: "c16_case_ii", group: "c16", unit: Unit::C16 },
    ClaimInfo { id: "c23_case_i", group: "c23", unit: Unit::C23 },
    ClaimInfo { id: "c23_case_ii_shortcut", group: "c23", unit: Unit::C23 },
    ClaimInfo { id: "c23_case_ii_direct", group: "c23", unit: Unit::C23 },
    ClaimInfo { id: "c10_value", group: "c10", unit: Unit::C10 },
    ClaimInfo { id: "mellin_roundtrip_k1", group: "mellin", unit: Unit::Mellin(Kernel::Difference) },
    ClaimInfo { id: "mellin_roundtrip_k2", group: "mellin", unit: Unit::Mellin(Kernel::Gaussian) },
    ClaimInfo { id: "prime_counting_bounds", group: "sandbox", unit: Unit::Sandbox },
];

pub fn catalog() -> &'static [ClaimInfo] {
    CATALOG
}

/// Group names accepted by [`select`], with the command-line aliases.
const ALIASES: &[(&str, &str)] = &[("lemma84", "c16"), ("lemma86", "c23"), ("cor75", "c10")];

/// Resolves a comma-separated selector (`all`, group names, claim ids) to
/// catalogue entries in catalogue order.
pub fn select(selector: &str) -> Result<Vec<ClaimInfo>> {
    let mut keep = vec![false; CATALOG.len()];
    for raw in selector.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let token = raw.to_ascii_lowercase();
        let token = ALIASES.iter().find(|(a, _)| *a == token).map_or(token.as_str(), |(_, g)| g).to_string();
        let mut hit = false;
        for (i, c) in CATALOG.iter().enumerate() {
            if token == "all" || c.group == token || c.id == token {
                keep[i] = true;
                hit = true;
            }
        }
        if !hit {
            return Err(Error::InvalidParams(format!("unknown claim selector {raw:?}")));
        }
    }
    if !keep.iter().any(|&k| k) {
        return Err(Error::InvalidParams("empty claim selector".into()));
    }
    Ok(CATALOG.iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| *c).collect())
}

fn run_unit(unit: Unit, graph: &ConstantGraph, effort: &Effort) -> Result<Vec<VerdictRecord>> {
    let d = effort.bnb_depth;
    Ok(match unit {
        Unit::Q => vec![claims::verify_q_nonneg(graph, d)?],
        Unit::GNonpositive => vec![g0::verify_g_nonpositive(d)],
        Unit::G0 => vec![g0::verify_g0_lower(effort.g0_tol)?],
        Unit::F3 => vec![claims::verify_f3_increasing(d)],
        Unit::Gamma => vec![claims::verify_gamma_increasing(d)],
        Unit::Phi1 => vec![claims::verify_phi1_positive(d)],
        Unit::Phi2 => vec![claims::verify_phi2_nonneg(d)],
        Unit::Phi6 => vec![claims::verify_phi6_lower(d)?],
        Unit::Phi7 => vec![claims::verify_phi7_lower(d)?],
        Unit::Zfr => vec![claims::verify_zfr(graph)?],
        Unit::C16 => claims::verify_c16_feasibility(graph, d)?,
        Unit::C23 => claims::verify_c23_feasibility(graph, d)?,
        Unit::C10 => vec![claims::verify_c10(graph)?],
        Unit::Mellin(k) => vec![mellin_roundtrip_check(k, &default_samples(k), Interval::point(10.0), 1e-10)?],
        Unit::Sandbox => vec![claims::sandbox_check_prime_bounds(SANDBOX_X_MAX, graph.value("alpha_0")?)?],
    })
}

/// One claim's record and the wall-clock time of the check that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub record: VerdictRecord,
    pub seconds: f64,
}

/// Runs the selected claims; the records come back in catalogue order.
pub fn run_claims(graph: &ConstantGraph, effort: &Effort, selected: &[ClaimInfo]) -> Result<Vec<ClaimOutcome>> {
    let mut units: Vec<Unit> = Vec::new();
    for c in selected {
        if !units.contains(&c.unit) {
            units.push(c.unit);
        }
    }
    let results: Vec<(Unit, Result<Vec<VerdictRecord>>, f64)> = units
        .par_iter()
        .map(|&u| {
            let start = Instant::now();
            let r = run_unit(u, graph, effort);
            (u, r, start.elapsed().as_secs_f64())
        })
        .collect();
    let mut out = Vec::with_capacity(selected.len());
    for c in selected {
        let (_, r, secs) = results.iter().find(|(u, _, _)| *u == c.unit).expect("every unit was run");
        let records = r.as_ref().map_err(Clone::clone)?;
        let record = records
            .iter()
            .find(|r| r.claim == c.id)
            .cloned()
            .ok_or_else(|| Error::Shape(format!("check for {} produced no record", c.id)))?;
        out.push(ClaimOutcome { record, seconds: *secs });
    }
    Ok(out)
}

/// Every claim in the catalogue.
pub fn run_suite(graph: &ConstantGraph, effort: &Effort) -> Result<Vec<ClaimOutcome>> {
    run_claims(graph, effort, CATALOG)
}

/// Overall status of a set of records; only gating records count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SuiteStatus {
    Verified,
    Refuted,
    Undecided,
}

impl SuiteStatus {
    pub fn of<'a>(records: impl IntoIterator<Item = &'a VerdictRecord>) -> Self {
        let mut status = SuiteStatus::Verified;
        for r in records.into_iter().filter(|r| r.gating) {
            match r.verdict {
                Verdict::Refuted => return SuiteStatus::Refuted,
                Verdict::Undecided => status = SuiteStatus::Undecided,
                Verdict::Proved => {}
            }
        }
        status
    }

    /// 0 verified, 1 refuted, 3 undecided (2 is reserved for tool errors).
    pub fn exit_code(self) -> i32 {
        match self {
            SuiteStatus::Verified => 0,
            SuiteStatus::Refuted => 1,
            SuiteStatus::Undecided => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_resolve() {
        assert_eq!(select("all").unwrap().len(), CATALOG.len());
        assert_eq!(select("Q").unwrap()[0].id, "q_nonnegative");
        assert_eq!(select("lemma86").unwrap().len(), 3);
        assert_eq!(select("zfr,cor75").unwrap().len(), 2);
        assert!(select("nonsense").is_err());
        assert!(select("").is_err());
    }

    #[test]
    fn status_ignores_informational_records() {
        let a = VerdictRecord::new("a", Verdict::Proved, Interval::ONE);
        let b = VerdictRecord::new("b", Verdict::Refuted, Interval::ONE).informational();
        assert_eq!(SuiteStatus::of([&a, &b]), SuiteStatus::Verified);
        let c = VerdictRecord::new("c", Verdict::Undecided, Interval::ONE);
        assert_eq!(SuiteStatus::of([&a, &c]).exit_code(), 3);
    }
}
