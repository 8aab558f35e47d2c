// Planarity testing with an explicit sphere embedding on success.

use planar_covers::corpus::standard_graphs;
use planar_covers::planarity::{is_three_connected, planar_embed, Planarity};

pub fn run() -> planar_covers::Result<()> {
    for entry in standard_graphs() {
        let g = &entry.graph;
        if !g.is_connected() {
            continue;
        }
        let verdict = match planar_embed(g)? {
            Planarity::Planar(s) => format!("planar, {} faces", s.face_count()),
            Planarity::NonPlanar => "not planar".to_string(),
        };
        println!(
            "{:<9} {:>2} vertices {:>2} edges  3-connected {:<5}  {verdict}",
            entry.name,
            g.vertex_count(),
            g.edge_count(),
            is_three_connected(g)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
