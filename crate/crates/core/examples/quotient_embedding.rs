// The embedding a cover induces on its base: windings, singular vertices
// and the Euler bookkeeping.

use planar_covers::corpus::{wheel_branched_double_cover, wheel_scheme};
use planar_covers::negami::{check_pev, PvMode, QuotientReport};
use planar_covers::Budget;

fn show(r: &QuotientReport) {
    println!("  quotient surface {} (signs say {})", r.surface, r.sign_verdict);
    let g = r.scheme.graph();
    for (i, face) in r.scheme.oriented_faces().iter().enumerate() {
        let walk: Vec<&str> = face.iter().map(|&d| g.name(g.origin(d))).collect();
        let winding: Vec<usize> = r
            .face_image
            .iter()
            .zip(&r.windings)
            .filter(|(f, _)| **f == i)
            .map(|(_, k)| *k)
            .collect();
        println!("  face {}: covered with windings {winding:?}", walk.join(" "));
    }
    for (v, d) in &r.singular {
        println!("  singular vertex {} with local degree {d}", r.source_scheme.graph().name(*v));
    }
    let e = &r.euler;
    println!(
        "  {} = {} * {} - {} - {} (holds: {})",
        e.source_chi,
        e.degree,
        e.quotient_chi,
        e.vertex_defect,
        e.face_defect,
        e.holds()
    );
}

pub fn run() -> planar_covers::Result<()> {
    let wheel = wheel_branched_double_cover();
    let s = wheel_scheme(&wheel);
    let verdict = check_pev(&wheel, &s, PvMode::Dihedral, Budget::default())?;
    println!("wheel over K4: {verdict}");
    if let Some(cert) = verdict.certificate() {
        show(&cert.report);
        cert.report.verify(&wheel)?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
