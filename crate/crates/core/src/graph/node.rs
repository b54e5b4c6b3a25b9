use crate::interval::{Adjudication, Interval, PrintedValue};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NodeKind {
    Formula,
    Integral,
    Axiom,
    Parameter,
    Assembly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NodeStatus {
    /// The enclosure lies within the printed value's last-digit range.
    Verified,
    /// The enclosure is strictly narrower than the printed range.
    Tighter,
    /// Evaluated; nothing printed to compare with.
    Computed,
    /// Evaluated, but too wide to adjudicate.
    Inconclusive,
    /// Evaluated, but disjoint from the printed value. The enclosure is
    /// still rigorous, so dependents are evaluated.
    Contradicts,
    /// Failed to evaluate.
    Failed,
    /// Skipped because a dependency failed.
    Unevaluated,
    /// Imported result, assumed rather than recomputed.
    Axiom,
}

impl NodeStatus {
    pub fn from_adjudication(a: Adjudication) -> Self {
        match a {
            Adjudication::Confirms => NodeStatus::Verified,
            Adjudication::Tighter => NodeStatus::Tighter,
            Adjudication::Contradicts => NodeStatus::Contradicts,
            Adjudication::Inconclusive => NodeStatus::Inconclusive,
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, NodeStatus::Verified | NodeStatus::Tighter | NodeStatus::Computed | NodeStatus::Axiom)
    }
}

/// One evaluated constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstNode {
    pub id: String,
    pub kind: NodeKind,
    pub deps: Vec<String>,
    /// Empty when unevaluated or for axioms without a value.
    pub enclosure: Interval,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<PrintedValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjudication: Option<Adjudication>,
    pub status: NodeStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    /// The value an imported result states, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axiom_value: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ConstNode {
    pub fn is_axiom(&self) -> bool {
        self.kind == NodeKind::Axiom
    }
}
