use std::fmt::Write;

use super::{ComponentTag, EdgeKind, StateSystem};

/// Graphviz rendering of the dependency graph. Split edges are dotted red
/// and labelled with `k`, append edges solid blue; each cyclic component is
/// a dashed cluster.
pub fn to_dot(sys: &StateSystem) -> String {
    let mut out = String::new();
    let name = |s: usize| format!("\"{}\"", sys.states()[s]);
    writeln!(out, "digraph gamma_{} {{", sys.m()).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    for c in sys.components().iter().filter(|c| c.cyclic) {
        let label = match c.tag {
            ComponentTag::Untagged => format!("C{}", c.id),
            t => format!("{t}_{}", sys.m()),
        };
        writeln!(out, "  subgraph cluster_{} {{", c.id).unwrap();
        writeln!(out, "    style=dashed;").unwrap();
        writeln!(out, "    label=\"{label}\";").unwrap();
        for &s in &c.members {
            writeln!(out, "    {};", name(s)).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for s in 0..sys.states().len() {
        if !sys.component_of(s).cyclic {
            writeln!(out, "  {};", name(s)).unwrap();
        }
    }
    for e in sys.edges() {
        let style = match e.kind {
            EdgeKind::Split { k } => format!("style=dotted,color=red,label=\"k={k}\""),
            EdgeKind::Append => "style=solid,color=blue".to_string(),
        };
        writeln!(out, "  {} -> {} [{}];", name(e.source), name(e.target), style).unwrap();
    }
    out.push_str("}\n");
    out
}
