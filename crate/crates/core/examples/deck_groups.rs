// Automorphism groups, deck groups and regularity.

use std::sync::Arc;

use planar_covers::automorphism::automorphisms;
use planar_covers::corpus::{antipodal_cube, bouquet, k4, q3};
use planar_covers::covering::{deck_group, is_regular, voltage_cover_from_edges};
use planar_covers::{Budget, Perm};

pub fn run() -> planar_covers::Result<()> {
    let budget = Budget::default();
    println!("|Aut(K4)| = {}", automorphisms(&k4(), budget)?.len());
    println!("|Aut(Q3)| = {}", automorphisms(&q3(), budget)?.len());

    let cube = antipodal_cube();
    let deck = deck_group(&cube, budget)?;
    println!("cube over K4: deck group of order {}, regular {}", deck.order(), is_regular(&cube, budget)?.regular);

    // transposition voltages on the bouquet give a connected triple cover
    // whose deck group is trivial
    let b = Arc::new(bouquet(2));
    let a = Perm::from_cycles(3, &[&[1, 2]]).expect("valid");
    let c = Perm::from_cycles(3, &[&[0, 1]]).expect("valid");
    let vc = voltage_cover_from_edges(&b, 3, &[a, c])?;
    let r = is_regular(&vc.cover, budget)?;
    println!(
        "bouquet triple cover: connected {}, deck order {}, regular {}",
        vc.connected,
        r.deck.order(),
        r.regular
    );
    if let Some(w) = r.witness {
        println!("  {w}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
