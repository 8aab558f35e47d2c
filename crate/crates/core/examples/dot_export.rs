// Graphviz output for graphs, embedding schemes and covers.

use std::sync::Arc;

use planar_covers::corpus::{antipodal_cube, cycle};
use planar_covers::dot::{cover_to_dot, graph_to_dot, scheme_to_dot};
use planar_covers::{EmbeddingScheme, Sign};

pub fn run() -> planar_covers::Result<()> {
    let c3 = Arc::new(cycle(3));
    print!("{}", graph_to_dot(&c3));
    let rot = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
    let twisted = EmbeddingScheme::new(c3, rot, vec![Sign::Plus, Sign::Plus, Sign::Minus])?;
    print!("{}", scheme_to_dot(&twisted));
    let cube = cover_to_dot(&antipodal_cube());
    println!("cube over K4: {} lines of DOT", cube.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
