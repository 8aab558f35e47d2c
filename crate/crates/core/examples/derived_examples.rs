// Rebuilds the small worked examples by search and checks each certificate
// again from scratch.

use std::time::Instant;

use planar_covers::corpus::{derived_examples, DerivedEntry};
use planar_covers::Budget;

fn show(e: &DerivedEntry) {
    let src = e.cover.source();
    println!("{}: {}", e.name, e.provenance);
    println!(
        "  source {} vertices, {} edges; embedding #{}; deck order {}, regular {}",
        src.vertex_count(),
        src.edge_count(),
        e.embedding_index,
        e.deck_order,
        e.regular
    );
    println!("  quotient: {}", e.certificate.report.surface);
}

pub fn run() -> planar_covers::Result<()> {
    let budget = Budget::default();
    let t = Instant::now();
    let ex = derived_examples(budget)?;
    for e in [&ex.irregular, &ex.sphere_double, &ex.projective_double] {
        show(e);
        e.reverify(budget)?;
    }
    println!("double covers of K4 (sphere rotation indices fulfilling both properties):");
    for row in &ex.double_cover_survey {
        println!(
            "  twisted {:<12} cube {:<5} {} sphere schemes, S2 quotient at {:?}, P2 quotient at {:?}",
            row.twisted.join(","),
            row.antipodal_cube,
            row.sphere_schemes,
            row.sphere_quotient,
            row.projective_quotient
        );
    }
    let h = &ex.have_to_lift;
    println!(
        "projective lift search: {} candidates, {} fail on every sphere embedding",
        h.candidates,
        h.failing_everywhere.len()
    );
    for name in &h.failing_everywhere {
        println!("  {name}");
    }
    match &h.found {
        Some(found) => {
            println!("  lift found for {} ({} sphere schemes all fail)", found.name, found.sphere_schemes);
            println!("  lifted source has {} vertices", found.lifted_cover.source().vertex_count());
            println!("  quotient after lifting: {}", found.certificate.report.surface);
        }
        None => println!("  no candidate is rescued by a projective lift"),
    }
    println!("took {:.1?}", t.elapsed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
