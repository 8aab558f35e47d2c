// Face tracing on signed rotation systems and the surfaces they name.

use std::sync::Arc;

use planar_covers::corpus::{crosscap_bouquet, cycle, k4};
use planar_covers::planarity::planar_embed;
use planar_covers::{EmbeddingScheme, Sign, Vertex};

pub fn run() -> planar_covers::Result<()> {
    let c3 = Arc::new(cycle(3));
    let rot: Vec<_> = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
    for signs in [[Sign::Plus; 3], [Sign::Plus, Sign::Plus, Sign::Minus], [Sign::Minus; 3]] {
        let s = EmbeddingScheme::new(c3.clone(), rot.clone(), signs.to_vec())?;
        let labels: Vec<String> = signs.iter().map(|s| s.to_string()).collect();
        println!(
            "C3 signature [{}]: {} faces, chi {}, {}",
            labels.join(" "),
            s.face_count(),
            s.euler_characteristic(),
            s.surface_id()?
        );
    }

    let k4 = Arc::new(k4());
    let s = planar_embed(&k4)?.scheme().cloned().expect("K4 is planar");
    for (i, f) in s.oriented_faces().iter().enumerate() {
        let walk: Vec<&str> = f.iter().map(|&d| k4.name(k4.origin(d))).collect();
        println!("K4 face {i}: {}", walk.join(" "));
    }
    // flipping a vertex changes the signs around it but not the surface
    let flipped = s.flip_vertex(Vertex(0))?;
    println!(
        "after flipping a: {} negative edges, still {}",
        flipped.signature().iter().filter(|s| !s.is_plus()).count(),
        flipped.surface_id()?
    );
    println!("mirror image: {}", s.mirror().surface_id()?);

    for n in 1..=3 {
        let b = crosscap_bouquet(n);
        println!("bouquet of {n} twisted loops: {}", b.surface_id()?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
