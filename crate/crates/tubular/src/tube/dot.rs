use std::fmt::Write;

use super::TubeQuiver;

/// Graphviz rendering: projectives are boxes, injectives diamonds, projective-injectives double
/// octagons; translations are dashed and do not constrain the layout.
pub fn to_dot(t: &TubeQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"Gamma({},{},{})\" {{", t.p, t.n, t.m);
    let _ = writeln!(out, "  rankdir=BT;");
    for v in t.vertices() {
        let shape = match (t.is_projective(v), t.is_injective(v)) {
            (true, true) => "doubleoctagon",
            (true, false) => "box",
            (false, true) => "diamond",
            (false, false) => "ellipse",
        };
        let _ = writeln!(out, "  \"{v}\" [shape={shape}];");
    }
    for (a, b) in t.arrows().keys() {
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
    }
    for (a, b) in t.tau_map() {
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [style=dashed, constraint=false, arrowhead=none];");
    }
    out.push_str("}\n");
    out
}
