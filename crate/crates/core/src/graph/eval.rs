//! Level-by-level evaluation of node definitions.

use super::node::{ConstNode, NodeKind, NodeStatus};
use super::params::ParamSet;
use crate::config::Effort;
use crate::error::{Error, Result};
use crate::interval::{Interval, PrintedValue};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

pub type EvalFn = Arc<dyn Fn(&Inputs) -> Result<Interval> + Send + Sync>;

/// A node before evaluation.
#[derive(Clone)]
pub struct NodeDef {
    pub id: String,
    pub kind: NodeKind,
    pub deps: Vec<String>,
    pub eval: Option<EvalFn>,
    pub printed: Option<PrintedValue>,
    pub citation: Option<String>,
    pub axiom_value: Option<String>,
    pub notes: Vec<String>,
}

impl NodeDef {
    pub fn printed(&mut self, p: PrintedValue) -> &mut Self {
        self.printed = Some(p);
        self
    }

    pub fn note(&mut self, n: impl Into<String>) -> &mut Self {
        self.notes.push(n.into());
        self
    }

    pub fn citation(&mut self, c: impl Into<String>) -> &mut Self {
        self.citation = Some(c.into());
        self
    }

    pub fn axiom_value(&mut self, v: impl Into<String>) -> &mut Self {
        self.axiom_value = Some(v.into());
        self
    }
}

/// What a node's formula may see: its declared dependencies only.
pub struct Inputs<'a> {
    id: &'a str,
    deps: &'a [String],
    values: &'a HashMap<String, Interval>,
    pub params: &'a ParamSet,
    pub effort: &'a Effort,
    notes: RefCell<Vec<String>>,
}

impl Inputs<'_> {
    pub fn get(&self, dep: &str) -> Result<Interval> {
        if !self.deps.iter().any(|d| d == dep) {
            return Err(Error::Domain(format!("{} reads undeclared dependency {dep}", self.id)));
        }
        match self.values.get(dep) {
            Some(v) if !v.is_empty() => Ok(*v),
            _ => Err(Error::Domain(format!("{dep} has no value"))),
        }
    }

    pub fn note(&self, n: impl Into<String>) {
        self.notes.borrow_mut().push(n.into());
    }
}

/// Evaluated constants in dependency order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConstantGraph {
    nodes: Vec<ConstNode>,
}

/// An imported result and whatever the graph holds for it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomEntry {
    pub id: String,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated_value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independent_enclosure: Option<Interval>,
}

impl ConstantGraph {
    pub fn from_nodes(nodes: Vec<ConstNode>) -> Self {
        ConstantGraph { nodes }
    }

    pub fn nodes(&self) -> &[ConstNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&ConstNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// The node's enclosure, if it has one.
    pub fn value(&self, id: &str) -> Result<Interval> {
        let node = self.get(id).ok_or_else(|| Error::Domain(format!("no node {id}")))?;
        if node.enclosure.is_empty() {
            Err(Error::Domain(format!("node {id} is {:?}", node.status)))
        } else {
            Ok(node.enclosure)
        }
    }

    pub fn failures(&self) -> Vec<&ConstNode> {
        self.nodes.iter().filter(|n| matches!(n.status, NodeStatus::Failed | NodeStatus::Unevaluated)).collect()
    }

    pub fn contradictions(&self) -> Vec<&ConstNode> {
        self.nodes.iter().filter(|n| n.adjudication == Some(crate::interval::Adjudication::Contradicts)).collect()
    }

    pub fn list_axioms(&self) -> Vec<AxiomEntry> {
        self.nodes
            .iter()
            .filter(|n| n.is_axiom())
            .map(|n| AxiomEntry {
                id: n.id.clone(),
                citation: n.citation.clone().unwrap_or_default(),
                stated_value: n.axiom_value.clone(),
                independent_enclosure: (!n.enclosure.is_empty()).then_some(n.enclosure),
            })
            .collect()
    }
}

/// Groups definitions into levels: every node's dependencies sit in
/// earlier levels. Within a level the declaration order is kept.
pub fn levels(defs: &[NodeDef]) -> Result<Vec<Vec<usize>>> {
    let mut index = HashMap::new();
    for (i, d) in defs.iter().enumerate() {
        if index.insert(d.id.as_str(), i).is_some() {
            return Err(Error::Shape(format!("duplicate node id {}", d.id)));
        }
    }
    let mut depth: Vec<Option<usize>> = vec![None; defs.len()];
    let mut remaining = defs.len();
    while remaining > 0 {
        let mut progressed = false;
        for (i, d) in defs.iter().enumerate() {
            if depth[i].is_some() {
                continue;
            }
            let mut level = 0;
            let mut ready = true;
            for dep in &d.deps {
                let j = *index
                    .get(dep.as_str())
                    .ok_or_else(|| Error::Shape(format!("{} depends on unknown {dep}", d.id)))?;
                match depth[j] {
                    Some(l) => level = level.max(l + 1),
                    None => ready = false,
                }
            }
            if ready {
                depth[i] = Some(level);
                remaining -= 1;
                progressed = true;
            }
        }
        if !progressed {
            let stuck: Vec<&str> =
                defs.iter().zip(&depth).filter(|(_, d)| d.is_none()).map(|(n, _)| n.id.as_str()).collect();
            return Err(Error::Shape(format!("dependency cycle among {stuck:?}")));
        }
    }
    let top = depth.iter().flatten().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); top];
    for (i, d) in depth.into_iter().enumerate() {
        out[d.expect("all levels assigned")].push(i);
    }
    Ok(out)
}

fn evaluate_one(
    def: &NodeDef,
    values: &HashMap<String, Interval>,
    statuses: &HashMap<String, NodeStatus>,
    params: &ParamSet,
    effort: &Effort,
) -> ConstNode {
    let mut node = ConstNode {
        id: def.id.clone(),
        kind: def.kind,
        deps: def.deps.clone(),
        enclosure: Interval::EMPTY,
        printed: def.printed.clone(),
        adjudication: None,
        status: NodeStatus::Unevaluated,
        citation: def.citation.clone(),
        axiom_value: def.axiom_value.clone(),
        notes: def.notes.clone(),
    };
    let blocked: Vec<&String> = def
        .deps
        .iter()
        .filter(|d| matches!(statuses.get(d.as_str()), Some(NodeStatus::Failed | NodeStatus::Unevaluated)))
        .collect();
    if !blocked.is_empty() {
        node.notes.push(format!("not evaluated: dependency {} unavailable", blocked[0]));
        return node;
    }
    let Some(eval) = &def.eval else {
        node.status = if def.kind == NodeKind::Axiom { NodeStatus::Axiom } else { NodeStatus::Failed };
        return node;
    };
    let inputs = Inputs { id: &def.id, deps: &def.deps, values, params, effort, notes: RefCell::new(Vec::new()) };
    let result = eval(&inputs);
    node.notes.extend(inputs.notes.into_inner());
    match result {
        Err(e) => {
            node.status = NodeStatus::Failed;
            node.notes.push(format!("evaluation failed: {e}"));
        }
        Ok(v) => {
            node.enclosure = v;
            node.status = if def.kind == NodeKind::Axiom {
                NodeStatus::Axiom
            } else if let Some(p) = &def.printed {
                match p.adjudicate(v) {
                    Ok(a) => {
                        node.adjudication = Some(a);
                        NodeStatus::from_adjudication(a)
                    }
                    Err(e) => {
                        node.notes.push(format!("printed value unreadable: {e}"));
                        NodeStatus::Failed
                    }
                }
            } else {
                NodeStatus::Computed
            };
        }
    }
    node
}

/// Evaluates every definition; independent nodes of a level run in
/// parallel, and the output does not depend on the thread count.
pub fn evaluate(defs: &[NodeDef], params: &ParamSet, effort: &Effort) -> Result<ConstantGraph> {
    let order = levels(defs)?;
    let mut values: HashMap<String, Interval> = HashMap::new();
    let mut statuses: HashMap<String, NodeStatus> = HashMap::new();
    let mut nodes = Vec::with_capacity(defs.len());
    for level in order {
        let done: Vec<ConstNode> =
            level.par_iter().map(|&i| evaluate_one(&defs[i], &values, &statuses, params, effort)).collect();
        for n in done {
            values.insert(n.id.clone(), n.enclosure);
            statuses.insert(n.id.clone(), n.status);
            nodes.push(n);
        }
    }
    Ok(ConstantGraph { nodes })
}
