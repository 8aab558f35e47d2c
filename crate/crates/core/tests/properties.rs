use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use planar_covers::corpus::{crosscap_bouquet, k4};
use planar_covers::covering::{enumerate_permutation_covers, CoverMap};
use planar_covers::enumerate::{enumerate_rotation_systems, sphere_schemes};
use planar_covers::interchange::{emit, parse, Document};
use planar_covers::lifting::orientation_double_cover;
use planar_covers::negami::{assign_signs, check_pev, check_property_e, check_property_v, PvMode, PvOutcome};
use planar_covers::planarity::planar_embed;
use planar_covers::{Budget, Edge, EmbeddingScheme, Graph, Perm, Sign, Vertex};

/// A connected simple graph: a random spanning tree plus extra edges.
fn connected_graph(seed: u64, max_n: usize, max_extra: usize) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..rng.gen_range(0..=max_extra) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b) = (a.min(b), a.max(b));
        if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b)) {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_scheme(g: Arc<Graph>, seed: u64) -> EmbeddingScheme {
    let mut rng = StdRng::seed_from_u64(seed);
    let systems = enumerate_rotation_systems(&g, Budget::unlimited()).unwrap();
    let index = rng.gen_range(0..systems.total());
    let s = systems.scheme_at(index);
    let signs = (0..g.edge_count()).map(|_| Sign::from_bool(rng.gen())).collect();
    EmbeddingScheme::new(g, s.rotations(), signs).unwrap()
}

/// Random relabelling of vertices, edges and edge directions.
fn shuffle(g: &Graph, seed: u64) -> (Graph, Vec<planar_covers::Dart>, Vec<Vertex>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = g.vertices().collect();
    let mut edge_order: Vec<Edge> = g.edges().collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for i in (1..edge_order.len()).rev() {
        edge_order.swap(i, rng.gen_range(0..=i));
    }
    let swap: Vec<bool> = (0..g.edge_count()).map(|_| rng.gen()).collect();
    let (h, darts) = g.relabel(&order, &edge_order, &swap).unwrap();
    let mut vertices = vec![Vertex(0); g.vertex_count()];
    for (i, v) in order.iter().enumerate() {
        vertices[v.0] = Vertex(i);
    }
    (h, darts, vertices)
}

fn brute_force_planar(g: &Arc<Graph>) -> bool {
    enumerate_rotation_systems(g, Budget::unlimited())
        .unwrap()
        .find_first(|s| (s.euler_characteristic() == 2).then_some(()))
        .is_some()
}

fn triple_cover_of_k4(index: u128) -> Option<CoverMap> {
    let g = Arc::new(k4());
    let covers = enumerate_permutation_covers(&g, 3, Budget::default()).unwrap();
    let vc = covers.cover_at(index % covers.total());
    vc.connected.then_some(vc.cover)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn faces_use_every_dart_side_once(seed in any::<u64>()) {
        let g = Arc::new(connected_graph(seed, 7, 6));
        let s = random_scheme(g.clone(), seed);
        let total: usize = s.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + s.face_count() as i64;
        prop_assert_eq!(chi, s.euler_characteristic());
        prop_assert!(chi <= 2);
    }

    #[test]
    fn vertex_flips_keep_the_surface(seed in any::<u64>(), v in 0usize..7) {
        let g = Arc::new(connected_graph(seed, 7, 6));
        let s = random_scheme(g.clone(), seed);
        let v = Vertex(v % g.vertex_count());
        let flipped = s.flip_vertex(v).unwrap();
        prop_assert_eq!(flipped.surface_id().unwrap(), s.surface_id().unwrap());
        prop_assert_eq!(s.mirror().surface_id().unwrap(), s.surface_id().unwrap());
    }

    #[test]
    fn orientation_double_cover_doubles_chi(seed in any::<u64>()) {
        let g = Arc::new(connected_graph(seed, 6, 5));
        let s = random_scheme(g, seed);
        let odc = orientation_double_cover(&s).unwrap();
        prop_assert_eq!(odc.scheme.euler_characteristic(), 2 * s.euler_characteristic());
        prop_assert!(odc.scheme.is_orientable());
        prop_assert_eq!(odc.connected, !s.is_orientable());
        prop_assert_eq!(odc.projection.classify().degree, Some(2));
    }

    #[test]
    fn crosscap_bouquets(n in 1usize..9) {
        let s = crosscap_bouquet(n);
        let surface = s.surface_id().unwrap();
        prop_assert!(!surface.orientable());
        prop_assert_eq!(surface.euler_characteristic(), 2 - n as i64);
        prop_assert_eq!(surface.genus(), n as i64);
    }

    #[test]
    fn planarity_matches_brute_force(seed in any::<u64>()) {
        let g = Arc::new(connected_graph(seed, 7, 8));
        let fast = planar_embed(&g).unwrap();
        prop_assert_eq!(fast.is_planar(), brute_force_planar(&g));
        if let Some(s) = fast.scheme() {
            prop_assert_eq!(s.euler_characteristic(), 2);
        }
    }

    #[test]
    fn relabelling_keeps_planarity_and_surfaces(seed in any::<u64>()) {
        let g = connected_graph(seed, 7, 7);
        let s = random_scheme(Arc::new(g.clone()), seed);
        let (h, darts, _) = shuffle(&g, seed ^ 1);
        let h = Arc::new(h);
        let moved = s.transport(h.clone(), &darts).unwrap();
        prop_assert_eq!(moved.surface_id().unwrap(), s.surface_id().unwrap());
        prop_assert_eq!(planar_embed(&h).unwrap().is_planar(), planar_embed(s.graph_arc()).unwrap().is_planar());
    }

    #[test]
    fn relabelling_keeps_the_verdict(index in 0u128..216, pick in any::<u64>(), seed in any::<u64>()) {
        let Some(c) = triple_cover_of_k4(index) else { return Ok(()) };
        let schemes = sphere_schemes(c.source(), Budget::default()).unwrap();
        prop_assume!(!schemes.is_empty());
        let s = &schemes[(pick % schemes.len() as u64) as usize].1;
        let before = check_pev(&c, s, PvMode::Dihedral, Budget::default()).unwrap();

        let (h, darts, vertices) = shuffle(c.source(), seed);
        let h = Arc::new(h);
        let identity_darts: Vec<_> = c.target().darts().collect();
        let identity_vertices: Vec<_> = c.target().vertices().collect();
        let moved = c
            .transport(h.clone(), &darts, &vertices, c.target().clone(), &identity_darts, &identity_vertices)
            .unwrap();
        let after = check_pev(&moved, &s.transport(h, &darts).unwrap(), PvMode::Dihedral, Budget::default()).unwrap();
        prop_assert_eq!(before.holds(), after.holds());
        prop_assert_eq!(before.surface(), after.surface());
    }

    #[test]
    fn fiber_flips_keep_the_edge_verdict(index in 0u128..216, pick in any::<u64>(), mask in 0u32..16) {
        let Some(c) = triple_cover_of_k4(index) else { return Ok(()) };
        let schemes = sphere_schemes(c.source(), Budget::default()).unwrap();
        prop_assume!(!schemes.is_empty());
        let s = &schemes[(pick % schemes.len() as u64) as usize].1;
        let PvOutcome::Holds(induced) = check_property_v(&c, s, PvMode::Dihedral).unwrap() else { return Ok(()) };
        let signs = assign_signs(&c, &induced, &[Sign::Plus; 4]).unwrap();
        let mut flipped = signs.clone();
        for v in (0..4).filter(|v| mask >> v & 1 == 1) {
            flipped = flipped.flip_fiber(&c, Vertex(v));
        }
        prop_assert!(flipped.is_valid_for(&c, &induced));
        prop_assert_eq!(
            check_property_e(&c, &signs).unwrap().holds(),
            check_property_e(&c, &flipped).unwrap().holds()
        );
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let g = Arc::new(connected_graph(seed, 7, 6));
        let s = random_scheme(g.clone(), seed);
        for doc in [Document::Graph(g.clone()), Document::Scheme(s), Document::Cover(CoverMap::identity(g))] {
            let text = emit(&doc);
            let back = parse(&text).unwrap();
            prop_assert_eq!(emit(&back), text);
            prop_assert_eq!(back, doc);
        }
    }

    #[test]
    fn permutation_group_laws(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
        let all = Perm::all(4);
        let (p, q, r) = (&all[a], &all[b], &all[c]);
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.then(q).then(r), p.then(&q.then(r)));
    }
}
