//! Named graphs and covers, reconstructions of the small examples, and the
//! sweep harness over covers of a fixed base.

mod derived;
mod harness;

use std::sync::Arc;

use crate::covering::{z2_voltage_cover, CoverMap};
use crate::graph::{Graph, Vertex};
use crate::perm::Sign;
use crate::scheme::EmbeddingScheme;

pub use derived::{
    derived_examples, have_to_lift_search, irregular_bouquet_cover, k4_double_cover_witnesses, DerivedEntry,
    DerivedExamples, DoubleCoverSurvey, K4DoubleCovers, HaveToLift, HaveToLiftSearch,
};
pub use harness::{
    conjecture_harness, Cursor, HarnessConfig, HarnessReport, HarnessRow, Outcome, ResultsTable, Shard, TableHeader,
};

/// K₄ on `a, b, c, d` with edges `ab, ac, ad, bc, bd, cd`.
pub fn k4() -> Graph {
    Graph::build(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
    )
    .expect("valid")
}

/// The cube, vertices named by their coordinates `000`..`111`.
pub fn q3() -> Graph {
    let names: Vec<String> = (0..8).map(|i| format!("{:03b}", i)).collect();
    let mut edges = Vec::new();
    for i in 0..8usize {
        for bit in [4, 2, 1] {
            if i & bit == 0 {
                edges.push((i, i | bit));
            }
        }
    }
    Graph::with_names(names, &edges).expect("valid")
}

/// One vertex `v` with `k` loops.
pub fn bouquet(k: usize) -> Graph {
    Graph::with_names(vec!["v".into()], &vec![(0, 0); k]).expect("valid")
}

/// The cycle `v1 v2 ... vn`.
pub fn cycle(n: usize) -> Graph {
    let names = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::with_names(names, &edges).expect("valid")
}

/// The path `v1 ... vn` with `n - 1` edges.
pub fn path(n: usize) -> Graph {
    let names = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::with_names(names, &edges).expect("valid")
}

pub fn complete(n: usize) -> Graph {
    let names = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::with_names(names, &edges).expect("valid")
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let names = (1..=m).map(|i| format!("x{i}")).chain((1..=n).map(|j| format!("y{j}"))).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Graph::with_names(names, &edges).expect("valid")
}

/// The complete multipartite graph with parts of sizes 1, 2, 2, 2: a hub `h`
/// and pairs `a1 a2`, `b1 b2`, `c1 c2`. It has 7 vertices and 18 edges.
pub fn k1222() -> Graph {
    let names = ["h", "a1", "a2", "b1", "b2", "c1", "c2"];
    let part = [0, 1, 1, 2, 2, 3, 3];
    let mut edges = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            if part[i] != part[j] {
                edges.push((i, j));
            }
        }
    }
    Graph::with_names(names.iter().map(|s| s.to_string()).collect(), &edges).expect("valid")
}

/// A single vertex with `n` loops, each negative and with its two darts
/// adjacent in the rotation: the crosscap surface with `n` crosscaps.
pub fn crosscap_bouquet(n: usize) -> EmbeddingScheme {
    let g = Arc::new(bouquet(n));
    let rotation = vec![g.darts().collect()];
    EmbeddingScheme::new(g, rotation, vec![Sign::Minus; n]).expect("valid")
}

/// A graph of the corpus with notes on what it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Arc<Graph>,
    pub assumption_flags: Vec<String>,
}

fn entry(name: &str, g: Graph) -> CorpusGraph {
    let assumption_flags = g.validate_assumptions().problems();
    CorpusGraph {
        name: name.into(),
        graph: Arc::new(g),
        assumption_flags,
    }
}

/// The standard graphs used throughout the tests and examples.
pub fn standard_graphs() -> Vec<CorpusGraph> {
    vec![
        entry("k4", k4()),
        entry("q3", q3()),
        entry("bouquet2", bouquet(2)),
        entry("c3", cycle(3)),
        entry("c4", cycle(4)),
        entry("c5", cycle(5)),
        entry("p2", path(2)),
        entry("p4", path(4)),
        entry("k5", complete(5)),
        entry("k33", complete_bipartite(3, 3)),
        entry("k23", complete_bipartite(2, 3)),
        entry("k1222", k1222()),
    ]
}

/// A named cover with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusCover {
    pub name: String,
    pub provenance: String,
    pub cover: CoverMap,
    /// A source scheme the entry is meant to be read with, if any.
    pub scheme: Option<EmbeddingScheme>,
}

/// The cube over K₄, from the swap voltage on every edge.
pub fn antipodal_cube() -> CoverMap {
    z2_voltage_cover(&Arc::new(k4()), &[true; 6]).expect("valid").cover
}

/// The wheel with six spokes over K₄: hub over `d` with local degree 2, rim
/// `a1 b1 c1 a2 b2 c2`. Cutting K₄'s sphere along a path from `d` into face
/// `abc` and gluing two sheets gives this cover; the rim bounds a face that
/// wraps `abc` twice.
pub fn wheel_branched_double_cover() -> CoverMap {
    let names = ["d1", "a1", "b1", "c1", "a2", "b2", "c2"];
    let mut edges: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
    edges.extend((1..=6).map(|i| (i, i % 6 + 1)));
    let src = Graph::with_names(names.iter().map(|s| s.to_string()).collect(), &edges).expect("valid");
    let labels = [3, 0, 1, 2, 0, 1, 2].map(Vertex).to_vec();
    CoverMap::from_vertex_labels(Arc::new(src), Arc::new(k4()), labels).expect("valid cover")
}

/// The scheme of [`wheel_branched_double_cover`]'s source with the rim as a
/// face.
pub fn wheel_scheme(c: &CoverMap) -> EmbeddingScheme {
    let g = c.source();
    // hub: spokes in rim order; rim vertex i: hub, next, previous
    let mut rotation = vec![g.darts_at(Vertex(0)).to_vec()];
    for i in 1..=6 {
        let v = Vertex(i);
        let darts = g.darts_at(v);
        let hub = darts.iter().copied().find(|&d| g.target(d) == Vertex(0)).unwrap();
        let next = darts.iter().copied().find(|&d| g.target(d) == Vertex(i % 6 + 1)).unwrap();
        let prev = darts.iter().copied().find(|&d| g.target(d) == Vertex((i + 4) % 6 + 1)).unwrap();
        rotation.push(vec![hub, prev, next]);
    }
    EmbeddingScheme::oriented(g.clone(), rotation).expect("valid")
}

/// A star over `K_{1,3}` whose centre has local degree 2 and whose spokes
/// project in the order `v1 v2 v3 v1 v3 v2`.
pub fn star_counter_pattern() -> (CoverMap, EmbeddingScheme) {
    let base = Graph::build(&["c", "v1", "v2", "v3"], &[("c", "v1"), ("c", "v2"), ("c", "v3")]).expect("valid");
    let names = ["c1", "v1.1", "v2.1", "v3.1", "v1.2", "v3.2", "v2.2"];
    let edges: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
    let src = Arc::new(Graph::with_names(names.iter().map(|s| s.to_string()).collect(), &edges).expect("valid"));
    let labels = [0, 1, 2, 3, 1, 3, 2].map(Vertex).to_vec();
    let cover = CoverMap::from_vertex_labels(src.clone(), Arc::new(base), labels).expect("valid cover");
    let rotation = src.vertices().map(|v| src.darts_at(v).to_vec()).collect();
    let scheme = EmbeddingScheme::oriented(src, rotation).expect("valid");
    (cover, scheme)
}

/// A branched triple cover of K₄ that fails Property V under every sphere
/// embedding. A 9-cycle runs `b c d b c d b c d`; vertex `a1` (local degree 2)
/// joins rim positions 1, 2, 3, 4, 6, 8 and `a2` joins 5, 7, 9. The two hubs
/// must sit on opposite sides of the cycle, so the rotation at `a1` always
/// reads `b c d b d c` up to reversal.
pub fn scrambled_triple_cover() -> CoverMap {
    let mut names = vec!["a1".to_string(), "a2".to_string()];
    let mut labels = vec![Vertex(0), Vertex(0)];
    for i in 0..9 {
        let letter = ["b", "c", "d"][i % 3];
        names.push(format!("{letter}{}", i / 3 + 1));
        labels.push(Vertex(1 + i % 3));
    }
    let rim = |p: usize| p + 1; // rim position 1..=9 to vertex index
    let mut edges: Vec<(usize, usize)> = (1..=9).map(|p| (rim(p), rim(p % 9 + 1))).collect();
    edges.extend([1, 2, 3, 4, 6, 8].map(|p| (0, rim(p))));
    edges.extend([5, 7, 9].map(|p| (1, rim(p))));
    let src = Graph::with_names(names, &edges).expect("valid");
    CoverMap::from_vertex_labels(Arc::new(src), Arc::new(k4()), labels).expect("valid cover")
}

pub fn corpus_covers() -> Vec<CorpusCover> {
    let (star, star_scheme) = star_counter_pattern();
    let wheel = wheel_branched_double_cover();
    let wheel_s = wheel_scheme(&wheel);
    vec![
        CorpusCover {
            name: "identity-k4".into(),
            provenance: "identity map".into(),
            scheme: None,
            cover: CoverMap::identity(Arc::new(k4())),
        },
        CorpusCover {
            name: "cube-over-k4".into(),
            provenance: "swap voltage on every edge of K4".into(),
            scheme: None,
            cover: antipodal_cube(),
        },
        CorpusCover {
            name: "wheel-over-k4".into(),
            provenance: "two sheets of K4 glued along a slit from d into face abc".into(),
            scheme: Some(wheel_s),
            cover: wheel,
        },
        CorpusCover {
            name: "star-counter-pattern".into(),
            provenance: "centre of local degree 2 with spokes in the order v1 v2 v3 v1 v3 v2".into(),
            scheme: Some(star_scheme),
            cover: star,
        },
        CorpusCover {
            name: "scrambled-triple-over-k4".into(),
            provenance: "9-cycle over bcd with a degree-2 hub reading b c d b d c".into(),
            scheme: None,
            cover: scrambled_triple_cover(),
        },
    ]
}
