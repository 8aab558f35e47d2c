// Lifting a projective-plane embedding to the sphere through the
// orientation double cover, and factoring a cover through it.

use std::sync::Arc;

use planar_covers::corpus::{antipodal_cube, cycle};
use planar_covers::covering::find_cover_isomorphism;
use planar_covers::lifting::{factor_through_universal, orientation_double_cover};
use planar_covers::negami::{check_pev, PvMode};
use planar_covers::planarity::planar_embed;
use planar_covers::{Budget, EmbeddingScheme, Sign};

pub fn run() -> planar_covers::Result<()> {
    let c3 = Arc::new(cycle(3));
    let rot = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
    let twisted = EmbeddingScheme::new(c3, rot, vec![Sign::Plus, Sign::Plus, Sign::Minus])?;
    let odc = orientation_double_cover(&twisted)?;
    println!(
        "twisted triangle on {}: lifts to {} vertices on {}, connected {}",
        twisted.surface_id()?,
        odc.lifted_graph().vertex_count(),
        odc.scheme.surface_id()?,
        odc.connected
    );

    let cube = antipodal_cube();
    let s = planar_embed(cube.source())?.scheme().cloned().expect("the cube is planar");
    let verdict = check_pev(&cube, &s, PvMode::Dihedral, Budget::default())?;
    let cert = verdict.certificate().expect("the cube fulfils both properties");
    println!("cube quotient: {}", cert.report.surface);
    let fac = factor_through_universal(&cube, &cert.report)?;
    println!(
        "factorization: lift of degree {} into a {}-vertex double cover",
        fac.lift.classify().degree.unwrap_or(0),
        fac.odc.lifted_graph().vertex_count()
    );
    let iso = find_cover_isomorphism(&cube, &fac.odc.projection, Budget::default())?;
    println!("cube is isomorphic to the orientation double cover: {}", iso.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
