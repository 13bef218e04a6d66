use std::fmt::Write;

use super::Graph;

/// Undirected DOT text; nodes and edges are listed in increasing vertex order.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                writeln!(out, "  {v} [label=\"{escaped}\"];").unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
