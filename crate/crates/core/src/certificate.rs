//! Machine-readable record of a run: every node enclosure with its
//! adjudication, every claim verdict, the imported axioms and timings.
//!
//! Enclosure endpoints are written as decimal strings that parse back to the
//! exact binary endpoints, so nothing is re-rounded on output.

use crate::config::Effort;
use crate::error::{Error, Result};
use crate::graph::{AxiomEntry, ConstNode, ConstantGraph, NodeStatus, ParamSet};
use crate::verify::{ClaimOutcome, SuiteStatus, VerdictRecord};
use serde::{Deserialize, Serialize};

/// Bumped on any incompatible change to the layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Known inconsistencies in the checked derivation and how they are resolved.
pub const DISCREPANCIES: &[&str] = &[
    "digamma remainder: the derivation writes 1/(24 (Re s)^2) in one place and 1/(12 (Re s)^2) in the deduced bound; the larger 1/12 is used",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub record: VerdictRecord,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub tool_version: String,
    pub params: ParamSet,
    pub effort: Effort,
    pub nodes: Vec<ConstNode>,
    #[serde(default)]
    pub claims: Vec<ClaimEntry>,
    pub axioms: Vec<AxiomEntry>,
    #[serde(default)]
    pub discrepancies: Vec<String>,
    #[serde(default)]
    pub timings: Vec<StageTiming>,
}

impl Certificate {
    pub fn new(params: &ParamSet, effort: &Effort, graph: &ConstantGraph) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            params: params.clone(),
            effort: effort.clone(),
            nodes: graph.nodes().to_vec(),
            claims: Vec::new(),
            axioms: graph.list_axioms(),
            discrepancies: DISCREPANCIES.iter().map(|s| s.to_string()).collect(),
            timings: Vec::new(),
        }
    }

    pub fn with_claims(mut self, outcomes: Vec<ClaimOutcome>) -> Self {
        self.claims = outcomes.into_iter().map(|o| ClaimEntry { record: o.record, seconds: o.seconds }).collect();
        self
    }

    pub fn push_timing(&mut self, stage: &str, seconds: f64) {
        self.timings.push(StageTiming { stage: stage.to_string(), seconds });
    }

    /// Drops wall-clock data so that repeated runs give identical bytes.
    pub fn without_timings(mut self) -> Self {
        self.timings.clear();
        for c in &mut self.claims {
            c.seconds = 0.0;
        }
        self
    }

    pub fn node(&self, id: &str) -> Option<&ConstNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Nodes that contradict their printed value or failed to evaluate.
    pub fn bad_nodes(&self) -> impl Iterator<Item = &ConstNode> {
        self.nodes
            .iter()
            .filter(|n| matches!(n.status, NodeStatus::Contradicts | NodeStatus::Failed | NodeStatus::Unevaluated))
    }

    /// Combined status: a bad node counts as a refutation and an
    /// inconclusive adjudication as undecided.
    pub fn status(&self) -> SuiteStatus {
        if self.bad_nodes().next().is_some() {
            return SuiteStatus::Refuted;
        }
        match SuiteStatus::of(self.claims.iter().map(|c| &c.record)) {
            SuiteStatus::Verified if self.nodes.iter().any(|n| n.status == NodeStatus::Inconclusive) => {
                SuiteStatus::Undecided
            }
            s => s,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Certificate = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if c.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "certificate schema {} is not the supported version {SCHEMA_VERSION}",
                c.schema_version
            )));
        }
        Ok(c)
    }
}
