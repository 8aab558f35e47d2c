use std::sync::Arc;

use planar_covers::corpus::{antipodal_cube, crosscap_bouquet, k4, wheel_branched_double_cover};
use planar_covers::covering::{find_cover_isomorphism, CoverMap};
use planar_covers::lifting::{necessity_pipeline, orientation_double_cover, Necessity};
use planar_covers::planarity::planar_embed;
use planar_covers::{Budget, Sign, SurfaceId};

#[test]
fn odc_of_crosscap_bouquets() {
    for n in 1..=4 {
        let s = crosscap_bouquet(n);
        let odc = orientation_double_cover(&s).unwrap();
        let g = odc.lifted_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2 * n));
        assert!(odc.connected);
        assert_eq!(odc.scheme.euler_characteristic(), 2 * (2 - n as i64));
        // every twisted loop lifts to an edge between the two sheets
        for e in g.edges() {
            let [a, b] = g.endpoints(e);
            assert_ne!(a, b);
        }
        let v = planar_covers::Vertex(0);
        assert_ne!(odc.lift_vertex(v, Sign::Plus), odc.lift_vertex(v, Sign::Minus));
    }
}

#[test]
fn odc_of_the_projective_k4_is_the_cube() {
    let cube = antipodal_cube();
    let s = planar_embed(cube.source()).unwrap().scheme().unwrap().clone();
    let v = planar_covers::negami::check_pev(&cube, &s, planar_covers::negami::PvMode::Dihedral, Budget::default())
        .unwrap();
    let quotient = &v.certificate().unwrap().report.scheme;
    assert_eq!(quotient.surface_id().unwrap(), SurfaceId::PROJECTIVE_PLANE);
    let odc = orientation_double_cover(quotient).unwrap();
    assert_eq!(odc.scheme.surface_id().unwrap(), SurfaceId::SPHERE);
    assert!(find_cover_isomorphism(&odc.projection, &cube, Budget::default()).unwrap().is_some());
}

#[test]
fn pipeline_cases() {
    let budget = Budget::default();
    let cube = antipodal_cube();
    let s = planar_embed(cube.source()).unwrap().scheme().unwrap().clone();

    let run = necessity_pipeline(&cube, &CoverMap::identity(cube.source().clone()), &s, budget).unwrap();
    assert!(matches!(run.outcome, Necessity::Case1 { .. }));
    run.outcome.verify(&cube, budget).unwrap();

    let id = CoverMap::identity(Arc::new(k4()));
    let run = necessity_pipeline(&id, &cube, &s, budget).unwrap();
    assert_eq!(run.middle.surface, SurfaceId::PROJECTIVE_PLANE);
    match &run.outcome {
        Necessity::Case2 { lifted_cover, certificate, .. } => {
            assert_eq!(lifted_cover.classify().degree, Some(2));
            assert_eq!(certificate.report.surface, SurfaceId::PROJECTIVE_PLANE);
        }
        other => panic!("expected case 2, got {other:?}"),
    }
    run.outcome.verify(&id, budget).unwrap();
}

#[test]
fn pipeline_rejects_branched_f() {
    let wheel = wheel_branched_double_cover();
    let s = planar_embed(wheel.source()).unwrap().scheme().unwrap().clone();
    let top = CoverMap::identity(wheel.source().clone());
    assert!(necessity_pipeline(&wheel, &top, &s, Budget::default()).is_err());
}
