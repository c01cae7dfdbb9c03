//! Graphviz output for backward trees.

use std::fmt::Write;

use padic_dyn::backward::{BackwardTree, NodeStatus};

/// One `digraph`, nodes in breadth-first order then edges in the same order.
/// Edges point from a preimage to the value it maps to.
pub fn tree_to_dot(tree: &BackwardTree) -> String {
    let p = tree.prime();
    let mut out = String::new();
    let mut title = format!(
        "f = {} over Z/{}^{}, seed {}, depth {}",
        tree.polynomial(),
        p,
        tree.precision(),
        tree.seed(),
        tree.max_depth()
    );
    if !tree.is_complete() {
        title.push_str(" (incomplete)");
    }
    out.push_str("digraph backward_tree {\n");
    writeln!(out, "  graph [label=\"{title}\", labelloc=t];").unwrap();
    out.push_str("  node [shape=ellipse];\n");
    for n in tree.nodes() {
        let style = match n.status {
            NodeStatus::Expanded | NodeStatus::Frontier => "",
            NodeStatus::SingularLeaf => ", shape=diamond, style=filled, fillcolor=lightgray",
            NodeStatus::NoPreimageLeaf => ", shape=box, style=dashed",
        };
        writeln!(
            out,
            "  n{} [label=\"{} (mod {}^{})\"{style}];",
            n.id, n.value, p, n.precision
        )
        .unwrap();
    }
    for n in tree.nodes() {
        if let Some(parent) = n.parent {
            writeln!(out, "  n{} -> n{};", n.id, parent).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
