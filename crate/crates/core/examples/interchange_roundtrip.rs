// Writing graphs, schemes, covers and quotient reports as JSON and
// reading them back.

use planar_covers::corpus::antipodal_cube;
use planar_covers::interchange::{emit, parse, read_file, write_file, Document, QuotientDocument};
use planar_covers::negami::{check_pev, PvMode};
use planar_covers::planarity::planar_embed;
use planar_covers::Budget;

pub fn run() -> planar_covers::Result<()> {
    let cube = antipodal_cube();
    let s = planar_embed(cube.source())?.scheme().cloned().expect("the cube is planar");
    let report = check_pev(&cube, &s, PvMode::Dihedral, Budget::default())?
        .certificate()
        .expect("the cube fulfils both properties")
        .report
        .clone();

    let docs = [
        Document::Graph(cube.target().clone()),
        Document::Scheme(s),
        Document::Cover(cube.clone()),
        Document::QuotientReport(Box::new(QuotientDocument { cover: cube, report })),
    ];
    let dir = std::env::temp_dir().join(format!("pcover-roundtrip-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    for (i, doc) in docs.iter().enumerate() {
        let path = dir.join(format!("{i}.{}.json", doc.kind().as_str()));
        write_file(&path, doc)?;
        let back = read_file(&path)?;
        println!("{:<16} {:>6} bytes, identical after reading back: {}", doc.kind().as_str(), emit(doc).len(), &back == doc);
    }
    std::fs::remove_dir_all(&dir)?;

    let stray = r#"{"format_version": 1, "kind": "graph", "payload": {"vertices": [], "edges": [], "colour": 1}}"#;
    println!("unknown field: {}", parse(stray).err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}

#[allow(dead_code)]
fn main() -> planar_covers::Result<()> {
    run()
}
