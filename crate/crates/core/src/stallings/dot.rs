use std::fmt::Write;

use super::StallingsGraph;

/// Graphviz rendering. Vertices appear in canonical order with the basepoint
/// double-circled; each positive edge is drawn once.
pub fn to_dot(graph: &StallingsGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph stallings {\n");
    out.push_str("    rankdir=LR;\n");
    out.push_str("    node [shape=circle];\n");
    for v in 0..graph.num_vertices() {
        if v == graph.basepoint() {
            let _ = writeln!(out, "    {v} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "    {v};");
        }
    }
    for e in graph.edges() {
        let _ = writeln!(
            out,
            "    {} -> {} [label=\"{}\"];",
            e.source,
            e.target,
            graph.alphabet().symbol(e.label)
        );
    }
    out.push_str("}\n");
    out
}
