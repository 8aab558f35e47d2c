use std::sync::Arc;

use super::*;
use crate::covering::z2_voltage_cover;
use crate::planarity::planar_embed;

fn k4() -> Arc<Graph> {
    Arc::new(
        Graph::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap(),
    )
}

fn planar(g: &Arc<Graph>) -> EmbeddingScheme {
    planar_embed(g).unwrap().scheme().unwrap().clone()
}

#[test]
fn identity_cover_of_k4() {
    let g = k4();
    let c = CoverMap::identity(g.clone());
    let s = planar(&g);
    let verdict = check_pev(&c, &s, PvMode::Dihedral, Budget::default()).unwrap();
    let cert = verdict.certificate().unwrap();
    assert!(cert.signs.all_plus());
    assert!(cert.signs.ambiguous().is_empty());
    assert_eq!(cert.report.scheme, s);
    assert_eq!(cert.report.surface, SurfaceId::SPHERE);
    assert!(cert.report.windings.iter().all(|&k| k == 1));
}

#[test]
fn antipodal_cube_gives_projective_plane() {
    let g = k4();
    let q3 = z2_voltage_cover(&g, &[true; 6]).unwrap().cover;
    let s = planar(q3.source());
    let PvOutcome::Holds(induced) = check_property_v(&q3, &s, PvMode::Dihedral).unwrap() else {
        panic!("P_V fails on the cube");
    };
    for fiber in q3.vertex_fibers() {
        assert_eq!(induced.alignment[fiber[0].0], Alignment::Aligned);
        assert_eq!(induced.alignment[fiber[1].0], Alignment::Reversed);
    }
    let signs = assign_signs(&q3, &induced, &[Sign::Plus; 4]).unwrap();
    for fiber in q3.vertex_fibers() {
        assert_ne!(signs.sign(fiber[0]), signs.sign(fiber[1]));
    }
    assert!(check_property_e(&q3, &signs).unwrap().holds());
    let report = quotient_embedding(&q3, &induced, &signs).unwrap();
    assert_eq!(report.surface, SurfaceId::PROJECTIVE_PLANE);
    assert_eq!(report.sign_verdict, SurfaceId::PROJECTIVE_PLANE);
    assert_eq!(report.euler.rhs(), 2);
    assert_eq!(report.scheme.face_count(), 3);
    report.verify(&q3).unwrap();

    // the literal reading rejects the reversed preimages
    assert!(matches!(
        check_property_v(&q3, &s, PvMode::Strict).unwrap(),
        PvOutcome::Violated(PvViolation {
            kind: PvViolationKind::DiffersAcrossFiber { .. },
            ..
        })
    ));
}

#[test]
fn hexagon_over_triangle_is_all_ambiguous() {
    let c3 = Arc::new(Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
    let c6 = z2_voltage_cover(&c3, &[false, false, true]).unwrap().cover;
    let s = planar(c6.source());
    let PvOutcome::Holds(induced) = check_property_v(&c6, &s, PvMode::Dihedral).unwrap() else {
        panic!()
    };
    assert_eq!(induced.ambiguous_vertices().len(), 6);
    let PeSearch::Found(signs) = search_property_e(&c6, &induced, Budget::default()).unwrap() else {
        panic!()
    };
    assert!(check_property_e(&c6, &signs).unwrap().holds());
    let report = quotient_embedding(&c6, &induced, &signs).unwrap();
    assert_eq!(report.surface.euler_characteristic(), report.sign_verdict.euler_characteristic());
}

#[test]
fn gauge_flips_do_not_change_the_verdict() {
    let g = k4();
    let q3 = z2_voltage_cover(&g, &[true; 6]).unwrap().cover;
    let s = planar(q3.source());
    let PvOutcome::Holds(induced) = check_property_v(&q3, &s, PvMode::Dihedral).unwrap() else {
        panic!()
    };
    for mask in 0u32..16 {
        let choice: Vec<Sign> = (0..4).map(|i| Sign::from_bool(mask >> i & 1 == 0)).collect();
        let signs = assign_signs(&q3, &induced, &choice).unwrap();
        assert!(check_property_e(&q3, &signs).unwrap().holds());
        let report = quotient_embedding(&q3, &induced, &signs).unwrap();
        assert_eq!(report.surface, SurfaceId::PROJECTIVE_PLANE);
    }
}

#[test]
fn any_embedding_and_equivariant_search() {
    let g = k4();
    let id = CoverMap::identity(g.clone());
    assert!(check_pev_any_embedding(&id, PvMode::Dihedral, Budget::default()).unwrap().found());
    let q3 = z2_voltage_cover(&g, &[true; 6]).unwrap().cover;
    let Equivariant::Found(found) = equivariant_embedding_search(&q3, Budget::default()).unwrap() else {
        panic!()
    };
    assert_eq!(found.preserving, vec![true, false]);
    assert_eq!(found.certificate.report.surface, SurfaceId::PROJECTIVE_PLANE);
}
