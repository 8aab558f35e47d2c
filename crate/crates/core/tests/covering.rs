use std::sync::Arc;

use planar_covers::corpus::{antipodal_cube, corpus_covers, cycle, k4, standard_graphs, wheel_branched_double_cover};
use planar_covers::covering::{
    deck_group, enumerate_double_covers, enumerate_permutation_covers, find_cover_isomorphism, is_regular,
    CoverKind, CoverMap,
};
use planar_covers::{Budget, Graph, Perm, Vertex};

/// Deck transformations of a cover with a simple source, by backtracking over
/// vertex permutations that stay inside fibers and preserve adjacency.
fn brute_force_deck_order(c: &CoverMap) -> usize {
    let g = c.source();
    let n = g.vertex_count();
    let adjacent = |a: usize, b: usize| g.darts_at(Vertex(a)).iter().any(|&d| g.target(d) == Vertex(b));
    fn extend(c: &CoverMap, image: &mut Vec<usize>, used: &mut [bool], adjacent: &dyn Fn(usize, usize) -> bool) -> usize {
        let v = image.len();
        let n = used.len();
        if v == n {
            return 1;
        }
        let mut count = 0;
        for w in 0..n {
            if used[w] || c.map_vertex(Vertex(w)) != c.map_vertex(Vertex(v)) {
                continue;
            }
            if (0..v).any(|u| adjacent(u, v) != adjacent(image[u], w)) {
                continue;
            }
            used[w] = true;
            image.push(w);
            count += extend(c, image, used, adjacent);
            image.pop();
            used[w] = false;
        }
        count
    }
    extend(c, &mut Vec::with_capacity(n), &mut vec![false; n], &adjacent)
}

fn is_simple(g: &Graph) -> bool {
    g.validate_assumptions().passes()
}

fn transitive(voltages: &[Perm], m: usize) -> bool {
    let mut orbit = vec![0];
    let mut i = 0;
    while i < orbit.len() {
        for p in voltages {
            let j = p.apply(orbit[i]);
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        i += 1;
    }
    orbit.len() == m
}

#[test]
fn double_cover_counts_follow_cycle_rank() {
    for entry in standard_graphs() {
        let g = &entry.graph;
        if !g.is_connected() {
            continue;
        }
        let beta = g.edge_count() + 1 - g.vertex_count();
        let count = enumerate_double_covers(g).count();
        assert_eq!(count as u128, (1u128 << beta) - 1, "{}", entry.name);
    }
}

#[test]
fn connected_triple_covers_match_transitive_voltages() {
    for g in [k4(), cycle(3), cycle(4)] {
        let g = Arc::new(g);
        let covers = enumerate_permutation_covers(&g, 3, Budget::default()).unwrap();
        let beta = covers.cotree().len();
        assert_eq!(covers.total(), 6u128.pow(beta as u32));
        let expected = (0..covers.total()).filter(|&i| transitive(&covers.voltages_at(i), 3)).count();
        assert_eq!(covers.connected().count(), expected);
        for (_, vc) in covers.connected() {
            assert!(vc.cover.source().is_connected());
            assert_eq!(vc.cover.classify().kind, CoverKind::Unbranched);
        }
    }
}

#[test]
fn deck_groups_match_brute_force() {
    let g = Arc::new(k4());
    let mut checked = 0;
    let mut covers: Vec<CoverMap> = enumerate_double_covers(&g).map(|d| d.cover.cover).collect();
    let triples = enumerate_permutation_covers(&g, 3, Budget::default()).unwrap();
    covers.extend(triples.connected().map(|(_, vc)| vc.cover));
    covers.extend(enumerate_double_covers(&Arc::new(cycle(5))).map(|d| d.cover.cover));
    for c in covers.iter().filter(|c| is_simple(c.source())) {
        let deck = deck_group(c, Budget::default()).unwrap();
        let expected = brute_force_deck_order(c);
        assert_eq!(deck.order(), expected);
        let degree = c.classify().degree.unwrap();
        assert_eq!(is_regular(c, Budget::default()).unwrap().regular, expected == degree);
        checked += 1;
    }
    assert!(checked > 150, "{checked}");
}

#[test]
fn corpus_cover_classes() {
    let kinds: Vec<(String, CoverKind, Option<usize>)> =
        corpus_covers().into_iter().map(|e| (e.name, e.cover.classify().kind, e.cover.classify().degree)).collect();
    let expect = [
        ("identity-k4", CoverKind::Unbranched, Some(1)),
        ("cube-over-k4", CoverKind::Unbranched, Some(2)),
        ("wheel-over-k4", CoverKind::Branched, Some(2)),
        ("star-counter-pattern", CoverKind::Branched, Some(2)),
        ("scrambled-triple-over-k4", CoverKind::Branched, Some(3)),
    ];
    for (name, kind, degree) in expect {
        let got = kinds.iter().find(|k| k.0 == name).unwrap();
        assert_eq!((got.1, got.2), (kind, degree), "{name}");
    }
    let wheel = wheel_branched_double_cover().classify();
    assert_eq!(wheel.singular, vec![Vertex(0)]);
    assert_eq!(wheel.local_degree[0], 2);
    assert!(wheel.local_degree[1..].iter().all(|&d| d == 1));
}

#[test]
fn only_one_double_cover_of_k4_is_the_cube() {
    let g = Arc::new(k4());
    let cube = antipodal_cube();
    let isomorphic: Vec<u128> = enumerate_double_covers(&g)
        .filter(|d| find_cover_isomorphism(&d.cover.cover, &cube, Budget::default()).unwrap().is_some())
        .map(|d| d.mask)
        .collect();
    assert_eq!(isomorphic, vec![0b111]);
}

#[test]
fn compose_with_identity() {
    let cube = antipodal_cube();
    let id = CoverMap::identity(cube.source().clone());
    let c = cube.compose(&id).unwrap();
    assert_eq!(c.dart_map(), cube.dart_map());
    let back = CoverMap::identity(cube.target().clone()).compose(&cube).unwrap();
    assert_eq!(back.vertex_map(), cube.vertex_map());
}
