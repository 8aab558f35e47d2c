// Given covers `f_tilde` then `f` whose composite fulfils both properties,
// produce a sphere or projective-plane certificate for `f` itself.

use std::sync::Arc;

use planar_covers::corpus::{antipodal_cube, k4};
use planar_covers::covering::CoverMap;
use planar_covers::lifting::{necessity_pipeline, Necessity};
use planar_covers::planarity::planar_embed;
use planar_covers::Budget;

fn report(label: &str, f: &CoverMap, f_tilde: &CoverMap) -> planar_covers::Result<()> {
    let budget = Budget::default();
    let s = planar_embed(f_tilde.source())?.scheme().cloned().expect("planar source");
    let run = necessity_pipeline(f, f_tilde, &s, budget)?;
    println!("{label}: middle quotient {}", run.middle.surface);
    match &run.outcome {
        Necessity::Case1 { fallback, certificate, .. } => {
            println!("  f holds on a sphere scheme of its source (fallback search: {fallback})");
            println!("  quotient {}", certificate.report.surface);
        }
        Necessity::Case2 { lifted_cover, certificate, .. } => {
            println!(
                "  f lifted through the orientation double cover: {} source vertices, quotient {}",
                lifted_cover.source().vertex_count(),
                certificate.report.surface
            );
        }
    }
    run.outcome.verify(f, budget)
}

pub fn run() -> planar_covers::Result<()> {
    let cube = antipodal_cube();
    report("cube, identity on top", &cube, &CoverMap::identity(cube.source().clone()))?;
    report("identity, cube on top", &CoverMap::identity(Arc::new(k4())), &cube)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
