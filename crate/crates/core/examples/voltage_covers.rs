// Covers from permutation voltages on cotree edges.

use std::sync::Arc;

use planar_covers::corpus::{cycle, k4};
use planar_covers::covering::{enumerate_double_covers, enumerate_permutation_covers};
use planar_covers::planarity::is_planar;
use planar_covers::Budget;

pub fn run() -> planar_covers::Result<()> {
    let k4 = Arc::new(k4());
    println!("double covers of K4:");
    for dc in enumerate_double_covers(&k4) {
        let twisted: Vec<String> = dc
            .twisted_edges()
            .iter()
            .map(|&e| {
                let [u, v] = k4.endpoints(e);
                format!("{}{}", k4.name(u), k4.name(v))
            })
            .collect();
        let src = dc.cover.cover.source();
        println!(
            "  mask {:03b}: twisted {:<10} {} vertices, planar {}",
            dc.mask,
            twisted.join(","),
            src.vertex_count(),
            is_planar(src)?
        );
    }

    for (name, g) in [("C4", cycle(4)), ("K4", (*k4).clone())] {
        let g = Arc::new(g);
        let covers = enumerate_permutation_covers(&g, 3, Budget::default())?;
        let connected = covers.connected().count();
        println!("{name}: {} voltage assignments in S3, {connected} give connected covers", covers.total());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
