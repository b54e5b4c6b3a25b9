//! Graphviz export.

use super::eval::ConstantGraph;
use super::node::{NodeKind, NodeStatus};
use std::fmt::Write;

fn shape(kind: NodeKind) -> &'static str {
    match kind {
        NodeKind::Formula => "box",
        NodeKind::Integral => "box3d",
        NodeKind::Axiom => "octagon",
        NodeKind::Parameter => "ellipse",
        NodeKind::Assembly => "doubleoctagon",
    }
}

fn colour(status: NodeStatus) -> &'static str {
    match status {
        NodeStatus::Verified => "palegreen",
        NodeStatus::Tighter => "darkseagreen1",
        NodeStatus::Computed => "white",
        NodeStatus::Inconclusive => "khaki1",
        NodeStatus::Failed => "salmon",
        NodeStatus::Contradicts => "orange",
        NodeStatus::Unevaluated => "lightgrey",
        NodeStatus::Axiom => "lightblue",
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl ConstantGraph {
    /// DOT text: shape by node kind, fill by status, one edge per dependency.
    pub fn to_dot(&self) -> String {
        let mut out =
            String::from("digraph constants {\n  rankdir=LR;\n  node [style=filled, fontname=\"Helvetica\"];\n");
        for n in self.nodes() {
            let mut label = n.id.clone();
            if !n.enclosure.is_empty() {
                let _ = write!(label, "\\n{:.6e}", n.enclosure.mid());
            }
            if let Some(p) = &n.printed {
                let _ = write!(label, "\\nprinted {}", p.text());
            }
            let _ = writeln!(
                out,
                "  {} [shape={}, fillcolor={}, label={}];",
                quote(&n.id),
                shape(n.kind),
                colour(n.status),
                quote(&label).replace("\\\\n", "\\n")
            );
        }
        for n in self.nodes() {
            for d in &n.deps {
                let _ = writeln!(out, "  {} -> {};", quote(d), quote(&n.id));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_header_only() {
        let dot = ConstantGraph::default().to_dot();
        assert!(dot.starts_with("digraph constants {"));
        assert!(!dot.contains("->"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
