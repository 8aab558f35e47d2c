// Sorting graph maps into unbranched, branched and weak covers.

use std::sync::Arc;

use planar_covers::corpus::{corpus_covers, k4};
use planar_covers::covering::CoverMap;
use planar_covers::{Graph, Vertex};

fn describe(name: &str, c: &CoverMap) {
    let class = c.classify();
    print!("{name:<26} {}", class.kind);
    if let Some(n) = class.degree {
        print!(", degree {n}");
    }
    if !class.singular.is_empty() {
        let names: Vec<&str> = class.singular.iter().map(|&v| c.source().name(v)).collect();
        print!(", singular {}", names.join(" "));
    }
    if let Some(w) = &class.witness {
        print!(" ({w})");
    }
    println!();
}

pub fn run() -> planar_covers::Result<()> {
    for entry in corpus_covers() {
        describe(&entry.name, &entry.cover);
    }

    // a path folded onto an edge covers some darts twice and others once
    let base = Arc::new(Graph::build(&["x", "y"], &[("x", "y")])?);
    let path = Arc::new(Graph::build(&["x1", "y1", "x2"], &[("x1", "y1"), ("y1", "x2")])?);
    let fold = CoverMap::from_vertex_labels(path, base, vec![Vertex(0), Vertex(1), Vertex(0)])?;
    describe("folded path", &fold);

    let k4 = Arc::new(k4());
    let invalid = CoverMap::from_vertex_labels(k4.clone(), k4, vec![Vertex(0), Vertex(0), Vertex(2), Vertex(3)]);
    println!("{:<26} rejected: {}", "collapsed edge", invalid.err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
