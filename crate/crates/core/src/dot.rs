//! Graphviz rendering of certificates.

use std::fmt::Write as _;

use crate::labeling::Certificate;

/// Undirected DOT graph: each vertex is labelled with its weight, each edge
/// with its label.
pub fn to_dot(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph labeling {{");
    let _ = writeln!(out, "  // mode={} k={}", cert.mode(), cert.labeling().k());
    for (v, w) in cert.profile().weights.iter().enumerate() {
        let _ = writeln!(out, "  {v} [label=\"{w}\"];");
    }
    for (&(u, v), l) in cert.graph().edges().iter().zip(cert.labeling().labels()) {
        let _ = writeln!(out, "  {u} -- {v} [label=\"{l}\"];");
    }
    out.push_str("}\n");
    out
}
