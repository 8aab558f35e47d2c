//! Graphviz export. For schemes every vertex is a record whose ports list
//! its darts in rotation order; negative edges are dashed and red.

use std::fmt::Write;

use crate::covering::CoverMap;
use crate::graph::{Dart, Graph};
use crate::scheme::EmbeddingScheme;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", escape(s))
}

/// Record labels treat `{}|<>` and spaces specially.
fn record_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        if matches!(c, '{' | '}' | '|' | '<' | '>' | '"' | '\\' | ' ') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {};", quote(g.name(v))).unwrap();
    }
    for e in g.edges() {
        let [u, w] = g.endpoints(e);
        writeln!(out, "  {} -- {} [label=\"e{}\"];", quote(g.name(u)), quote(g.name(w)), e.0).unwrap();
    }
    out.push_str("}\n");
    out
}

fn port(d: Dart) -> String {
    format!("d{}", d.0)
}

pub fn scheme_to_dot(s: &EmbeddingScheme) -> String {
    let g = s.graph();
    let mut out = String::from("graph G {\n  node [shape=record];\n");
    for v in g.vertices() {
        let ports: Vec<String> = s.rotation_at(v).iter().map(|&d| format!("<{}> {}", port(d), d.0)).collect();
        writeln!(
            out,
            "  {} [label=\"{{{}|{{{}}}}}\"];",
            quote(g.name(v)),
            record_text(g.name(v)),
            ports.join("|")
        )
        .unwrap();
    }
    for e in g.edges() {
        let [a, b] = e.darts();
        let (u, w) = (g.origin(a), g.origin(b));
        let style = if s.sign(e).is_plus() {
            String::new()
        } else {
            " style=dashed color=red".into()
        };
        writeln!(
            out,
            "  {}:{} -- {}:{} [label=\"e{}\"{}];",
            quote(g.name(u)),
            port(a),
            quote(g.name(w)),
            port(b),
            e.0,
            style
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// The source of a cover, each vertex labelled with its image.
pub fn cover_to_dot(c: &CoverMap) -> String {
    let (src, tgt) = (c.source(), c.target());
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in src.vertices() {
        let image = tgt.name(c.map_vertex(v));
        writeln!(
            out,
            "  {} [label=\"{}\\n{}\"];",
            quote(src.name(v)),
            escape(src.name(v)),
            escape(image)
        )
        .unwrap();
    }
    for e in src.edges() {
        let [u, w] = src.endpoints(e);
        writeln!(
            out,
            "  {} -- {} [label=\"e{}/e{}\"];",
            quote(src.name(u)),
            quote(src.name(w)),
            e.0,
            c.map_edge(e).0
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::corpus::{antipodal_cube, cycle, k4};
    use crate::perm::Sign;
    use crate::planarity::planar_embed;

    #[test]
    fn ports_follow_rotation() {
        let g = Arc::new(k4());
        let s = planar_embed(&g).unwrap().scheme().unwrap().clone();
        let dot = scheme_to_dot(&s);
        let a = s.rotation_at(crate::graph::Vertex(0));
        let expected: Vec<String> = a.iter().map(|d| format!("<d{}> {}", d.0, d.0)).collect();
        assert!(dot.contains(&format!("{{a|{{{}}}}}", expected.join("|"))));
        assert!(!dot.contains("dashed"));
    }

    #[test]
    fn negative_edges_are_dashed() {
        let c3 = Arc::new(cycle(3));
        let rot = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
        let s = EmbeddingScheme::new(c3, rot, vec![Sign::Plus, Sign::Plus, Sign::Minus]).unwrap();
        let dot = scheme_to_dot(&s);
        assert_eq!(dot.matches("style=dashed color=red").count(), 1);
        assert!(dot.contains("[label=\"e2\" style=dashed color=red]"));
    }

    #[test]
    fn graph_and_cover_export() {
        let dot = graph_to_dot(&k4());
        assert_eq!(dot.matches(" -- ").count(), 6);
        let dot = cover_to_dot(&antipodal_cube());
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("[label=\"a.1\\na\"]"));
    }
}
