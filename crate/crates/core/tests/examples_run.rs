//! Every example compiles into this test and runs to completion.

#[allow(dead_code)]
mod faces_and_surfaces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/faces_and_surfaces.rs"));
}

#[allow(dead_code)]
mod enumerate_embeddings {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/enumerate_embeddings.rs"));
}

#[allow(dead_code)]
mod planarity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/planarity.rs"));
}

#[allow(dead_code)]
mod cover_classification {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cover_classification.rs"));
}

#[allow(dead_code)]
mod deck_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/deck_groups.rs"));
}

#[allow(dead_code)]
mod voltage_covers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/voltage_covers.rs"));
}

#[allow(dead_code)]
mod property_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/property_check.rs"));
}

#[allow(dead_code)]
mod quotient_embedding {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quotient_embedding.rs"));
}

#[allow(dead_code)]
mod orientation_double_cover {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orientation_double_cover.rs"));
}

#[allow(dead_code)]
mod necessity_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/necessity_pipeline.rs"));
}

#[allow(dead_code)]
mod derived_examples {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/derived_examples.rs"));
}

#[allow(dead_code)]
mod conjecture_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conjecture_sweep.rs"));
}

#[allow(dead_code)]
mod interchange_roundtrip {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/interchange_roundtrip.rs"));
}

#[allow(dead_code)]
mod dot_export {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dot_export.rs"));
}

#[test]
fn faces_and_surfaces_runs() {
    faces_and_surfaces::run().unwrap();
}

#[test]
fn enumerate_embeddings_runs() {
    enumerate_embeddings::run().unwrap();
}

#[test]
fn planarity_runs() {
    planarity::run().unwrap();
}

#[test]
fn cover_classification_runs() {
    cover_classification::run().unwrap();
}

#[test]
fn deck_groups_runs() {
    deck_groups::run().unwrap();
}

#[test]
fn voltage_covers_runs() {
    voltage_covers::run().unwrap();
}

#[test]
fn property_check_runs() {
    property_check::run().unwrap();
}

#[test]
fn quotient_embedding_runs() {
    quotient_embedding::run().unwrap();
}

#[test]
fn orientation_double_cover_runs() {
    orientation_double_cover::run().unwrap();
}

#[test]
fn necessity_pipeline_runs() {
    necessity_pipeline::run().unwrap();
}

#[test]
fn derived_examples_runs() {
    derived_examples::run().unwrap();
}

#[test]
fn conjecture_sweep_runs() {
    conjecture_sweep::run().unwrap();
}

#[test]
fn interchange_roundtrip_runs() {
    interchange_roundtrip::run().unwrap();
}

#[test]
fn dot_export_runs() {
    dot_export::run().unwrap();
}
