// Checking the vertex and edge properties of a cover under a sphere
// embedding, with readable failure witnesses.

use planar_covers::corpus::{antipodal_cube, scrambled_triple_cover, star_counter_pattern};
use planar_covers::negami::{check_pev, check_pev_any_embedding, AnyEmbedding, PvMode};
use planar_covers::planarity::planar_embed;
use planar_covers::Budget;

pub fn run() -> planar_covers::Result<()> {
    let budget = Budget::default();
    let cube = antipodal_cube();
    let s = planar_embed(cube.source())?.scheme().cloned().expect("the cube is planar");
    let verdict = check_pev(&cube, &s, PvMode::Dihedral, budget)?;
    println!("cube over K4: {verdict}");
    if let Some(cert) = verdict.certificate() {
        println!("  signs: {}", cert.signs);
    }

    // the star's rotation reads v1 v2 v3 v1 v3 v2, which repeats no cyclic order
    let (star, star_scheme) = star_counter_pattern();
    println!("star counter pattern: {}", check_pev(&star, &star_scheme, PvMode::Dihedral, budget)?);

    match check_pev_any_embedding(&scrambled_triple_cover(), PvMode::Dihedral, budget)? {
        AnyEmbedding::Found { index, .. } => println!("scrambled cover: holds at rotation #{index}"),
        AnyEmbedding::Exhausted { rotation_systems, sphere_schemes } => println!(
            "scrambled cover: fails under all {sphere_schemes} sphere schemes ({rotation_systems} rotation systems)"
        ),
    }

    // strict mode also rejects an order that comes back reversed
    let strict = check_pev(&cube, &s, PvMode::Strict, budget)?;
    println!("cube under strict property V: {}", if strict.holds() { "holds" } else { "fails" });
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
