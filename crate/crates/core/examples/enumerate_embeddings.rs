// Walks every rotation system of a graph and tallies the surfaces.

use std::collections::BTreeMap;
use std::sync::Arc;

use planar_covers::corpus::{complete_bipartite, k4, q3};
use planar_covers::enumerate::{enumerate_rotation_systems, rotation_system_count, sphere_schemes};
use planar_covers::Budget;

pub fn run() -> planar_covers::Result<()> {
    for (name, g) in [("K4", k4()), ("K3,3", complete_bipartite(3, 3))] {
        let g = Arc::new(g);
        let systems = enumerate_rotation_systems(&g, Budget::default())?;
        let total = systems.total();
        let mut by_chi: BTreeMap<i64, usize> = BTreeMap::new();
        for s in systems {
            *by_chi.entry(s.euler_characteristic()).or_default() += 1;
        }
        println!("{name}: {total} rotation systems, by Euler characteristic {by_chi:?}");
    }

    let cube = Arc::new(q3());
    println!("Q3 has {} rotation systems", rotation_system_count(&cube));
    let spheres = sphere_schemes(&cube, Budget::default())?;
    let indices: Vec<u128> = spheres.iter().map(|(i, _)| *i).collect();
    println!("  spherical ones at indices {indices:?}");

    // asking for more than the budget allows is an error, not a hang
    let tight = enumerate_rotation_systems(&cube, Budget::new(100));
    println!("  with a budget of 100: {}", tight.err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
