//! The dependency graph of named constants.

pub mod chain;
pub mod dot;
pub mod eval;
pub mod functions;
pub mod node;
pub mod params;
pub mod trigpoly;

pub use chain::{definitions, derive_all};
pub use eval::{evaluate, AxiomEntry, ConstantGraph, Inputs, NodeDef};
pub use functions::{eval_function, function_defs, FunctionDef};
pub use node::{ConstNode, NodeKind, NodeStatus};
pub use params::{DhKind, DhVariant, ParamSet};
pub use trigpoly::{expand_q, TrigPoly};

/// Imported results recorded in a graph, with citations.
pub fn list_axioms(graph: &ConstantGraph) -> Vec<AxiomEntry> {
    graph.list_axioms()
}
