//! Cover maps between graphs, given as dart maps commuting with reversal.

mod deck;
mod voltage;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};

pub use deck::{deck_group, find_cover_isomorphism, is_regular, DeckGroup, FiberWitness, Regularity};
pub use voltage::{
    enumerate_double_covers, enumerate_permutation_covers, voltage_cover, voltage_cover_from_edges,
    z2_voltage_cover, DoubleCover, VoltageCover,
};

/// Why a dart map fails to be a cover, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    WrongLength { expected: usize, got: usize },
    DartOutOfRange { dart: Dart },
    VertexOutOfRange { vertex: Vertex },
    /// `φ(θ d) ≠ θ φ(d)`.
    NotEdgeCompatible { dart: Dart },
    /// The dart's image does not sit at the image of the dart's vertex.
    VertexInconsistent { dart: Dart },
    MissesDart { dart: Dart },
    MissesVertex { vertex: Vertex },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::WrongLength { expected, got } => {
                write!(f, "map has {got} entries, expected {expected}")
            }
            CoverViolation::DartOutOfRange { dart } => write!(f, "image of {dart} is out of range"),
            CoverViolation::VertexOutOfRange { vertex } => {
                write!(f, "image of {vertex} is out of range")
            }
            CoverViolation::NotEdgeCompatible { dart } => {
                write!(f, "{dart} and its reverse map to darts of different edges")
            }
            CoverViolation::VertexInconsistent { dart } => {
                write!(f, "{dart} maps to a dart at the wrong vertex")
            }
            CoverViolation::MissesDart { dart } => write!(f, "target {dart} has no preimage"),
            CoverViolation::MissesVertex { vertex } => {
                write!(f, "target {vertex} has no preimage")
            }
        }
    }
}

/// A cover `source → target` given on darts (and on vertices, so isolated
/// vertices are covered too).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    vertex_map: Vec<Vertex>,
    dart_map: Vec<Dart>,
}

impl CoverMap {
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        vertex_map: Vec<Vertex>,
        dart_map: Vec<Dart>,
    ) -> Result<Self> {
        let violation = |v| Err(Error::InvalidCover(v));
        if vertex_map.len() != source.vertex_count() {
            return violation(CoverViolation::WrongLength {
                expected: source.vertex_count(),
                got: vertex_map.len(),
            });
        }
        if dart_map.len() != source.dart_count() {
            return violation(CoverViolation::WrongLength {
                expected: source.dart_count(),
                got: dart_map.len(),
            });
        }
        for v in source.vertices() {
            if !target.contains_vertex(vertex_map[v.0]) {
                return violation(CoverViolation::VertexOutOfRange { vertex: v });
            }
        }
        for d in source.darts() {
            let img = dart_map[d.0];
            if img.0 >= target.dart_count() {
                return violation(CoverViolation::DartOutOfRange { dart: d });
            }
        }
        for d in source.darts() {
            if dart_map[d.reversed().0] != dart_map[d.0].reversed() {
                return violation(CoverViolation::NotEdgeCompatible { dart: d });
            }
            if target.origin(dart_map[d.0]) != vertex_map[source.origin(d).0] {
                return violation(CoverViolation::VertexInconsistent { dart: d });
            }
        }
        let mut hit = vec![false; target.dart_count()];
        for &img in &dart_map {
            hit[img.0] = true;
        }
        if let Some(i) = hit.iter().position(|h| !h) {
            return violation(CoverViolation::MissesDart { dart: Dart(i) });
        }
        let mut vhit = vec![false; target.vertex_count()];
        for &img in &vertex_map {
            vhit[img.0] = true;
        }
        if let Some(i) = vhit.iter().position(|h| !h) {
            return violation(CoverViolation::MissesVertex { vertex: Vertex(i) });
        }
        Ok(CoverMap {
            source,
            target,
            vertex_map,
            dart_map,
        })
    }

    /// Derives the vertex map from the dart map. Every source vertex needs at
    /// least one dart.
    pub fn from_dart_map(source: Arc<Graph>, target: Arc<Graph>, dart_map: Vec<Dart>) -> Result<Self> {
        if dart_map.len() != source.dart_count() {
            return Err(Error::InvalidCover(CoverViolation::WrongLength {
                expected: source.dart_count(),
                got: dart_map.len(),
            }));
        }
        let mut vertex_map = Vec::with_capacity(source.vertex_count());
        for v in source.vertices() {
            let Some(&d) = source.darts_at(v).first() else {
                return Err(Error::precondition(format!(
                    "vertex `{}` has no darts; give the vertex map explicitly",
                    source.name(v)
                )));
            };
            let img = dart_map[d.0];
            if img.0 >= target.dart_count() {
                return Err(Error::InvalidCover(CoverViolation::DartOutOfRange { dart: d }));
            }
            vertex_map.push(target.origin(img));
        }
        CoverMap::new(source, target, vertex_map, dart_map)
    }

    /// Builds the cover sending each source vertex to `labels[v]`, for a
    /// target without loops or parallel edges: every source edge maps to the
    /// unique target edge joining the labels of its ends.
    pub fn from_vertex_labels(source: Arc<Graph>, target: Arc<Graph>, labels: Vec<Vertex>) -> Result<Self> {
        let assumptions = target.validate_assumptions();
        if !assumptions.loops.is_empty() || !assumptions.parallel.is_empty() {
            return Err(Error::precondition("labels determine darts only over a simple target"));
        }
        if labels.len() != source.vertex_count() {
            return Err(Error::InvalidCover(CoverViolation::WrongLength {
                expected: source.vertex_count(),
                got: labels.len(),
            }));
        }
        if let Some(v) = source.vertices().find(|v| !target.contains_vertex(labels[v.0])) {
            return Err(Error::InvalidCover(CoverViolation::VertexOutOfRange { vertex: v }));
        }
        let mut dart_map = Vec::with_capacity(source.dart_count());
        for d in source.darts() {
            let (from, to) = (labels[source.origin(d).0], labels[source.target(d).0]);
            let image = target
                .darts_at(from)
                .iter()
                .copied()
                .find(|&t| target.target(t) == to)
                .ok_or(Error::InvalidCover(CoverViolation::DartOutOfRange { dart: d }))?;
            dart_map.push(image);
        }
        CoverMap::new(source, target, labels, dart_map)
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        CoverMap {
            vertex_map: g.vertices().collect(),
            dart_map: g.darts().collect(),
            source: g.clone(),
            target: g,
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn map_dart(&self, d: Dart) -> Dart {
        self.dart_map[d.0]
    }

    pub fn map_vertex(&self, v: Vertex) -> Vertex {
        self.vertex_map[v.0]
    }

    pub fn map_edge(&self, e: Edge) -> Edge {
        self.dart_map[e.dart(0).0].edge()
    }

    pub fn dart_map(&self) -> &[Dart] {
        &self.dart_map
    }

    pub fn vertex_map(&self) -> &[Vertex] {
        &self.vertex_map
    }

    /// Source vertices over each target vertex, in increasing order.
    pub fn vertex_fibers(&self) -> Vec<Vec<Vertex>> {
        let mut fibers = vec![Vec::new(); self.target.vertex_count()];
        for v in self.source.vertices() {
            fibers[self.vertex_map[v.0].0].push(v);
        }
        fibers
    }

    /// Source edges over each target edge, in increasing order.
    pub fn edge_fibers(&self) -> Vec<Vec<Edge>> {
        let mut fibers = vec![Vec::new(); self.target.edge_count()];
        for e in self.source.edges() {
            fibers[self.map_edge(e).0].push(e);
        }
        fibers
    }

    /// Darts at `v` in the source that map to each dart at `f(v)`, listed in
    /// the order of `target.darts_at(f(v))`.
    fn local_counts(&self, v: Vertex) -> Vec<usize> {
        let base = self.vertex_map[v.0];
        let darts = self.target.darts_at(base);
        let mut counts = vec![0; darts.len()];
        for &d in self.source.darts_at(v) {
            let img = self.dart_map[d.0];
            let i = darts.iter().position(|&x| x == img).expect("vertex consistent");
            counts[i] += 1;
        }
        counts
    }

    /// Classifies the cover as unbranched, branched, weak or invalid.
    pub fn classify(&self) -> CoverClass {
        let mut local_degree = vec![0usize; self.source.vertex_count()];
        let mut kind = CoverKind::Unbranched;
        let mut witness = None;
        for v in self.source.vertices() {
            let counts = self.local_counts(v);
            if counts.is_empty() {
                local_degree[v.0] = 1;
                continue;
            }
            let lo = *counts.iter().min().unwrap();
            let hi = *counts.iter().max().unwrap();
            if lo == 0 {
                kind = CoverKind::Invalid;
                witness.get_or_insert(ClassWitness::NotLocallyOnto { vertex: v });
            } else if lo != hi {
                if kind != CoverKind::Invalid {
                    kind = CoverKind::Weak;
                }
                witness.get_or_insert(ClassWitness::NonUniform { vertex: v });
            } else {
                local_degree[v.0] = lo;
                if lo > 1 && kind == CoverKind::Unbranched {
                    kind = CoverKind::Branched;
                }
            }
        }

        let mut degree = None;
        if matches!(kind, CoverKind::Unbranched | CoverKind::Branched) {
            let mut n: Option<usize> = None;
            let mut check = |value: usize, w: ClassWitness| -> bool {
                match n {
                    None => {
                        n = Some(value);
                        true
                    }
                    Some(m) if m == value => true,
                    Some(_) => {
                        witness.get_or_insert(w);
                        false
                    }
                }
            };
            let mut consistent = true;
            for (t, fiber) in self.vertex_fibers().iter().enumerate() {
                let sum: usize = fiber.iter().map(|v| local_degree[v.0]).sum();
                consistent &= check(sum, ClassWitness::DegreeMismatch {
                    what: format!("vertex fiber over {}", Vertex(t)),
                    value: sum,
                });
            }
            for (t, fiber) in self.edge_fibers().iter().enumerate() {
                consistent &= check(fiber.len(), ClassWitness::DegreeMismatch {
                    what: format!("edge fiber over {}", Edge(t)),
                    value: fiber.len(),
                });
            }
            if consistent {
                degree = n;
            } else {
                kind = CoverKind::Invalid;
            }
        }

        let singular: Vec<Vertex> = if degree.is_some() {
            self.source.vertices().filter(|v| local_degree[v.0] > 1).collect()
        } else {
            Vec::new()
        };
        let mut branch_set: Vec<Vertex> = singular.iter().map(|v| self.vertex_map[v.0]).collect();
        branch_set.sort();
        branch_set.dedup();
        if degree.is_none() {
            local_degree.clear();
        }
        CoverClass {
            kind,
            local_degree,
            singular,
            branch_set,
            degree,
            witness,
        }
    }

    /// The classification, required to be branched or unbranched.
    pub(crate) fn require_branched(&self) -> Result<CoverClass> {
        let class = self.classify();
        match class.kind {
            CoverKind::Unbranched | CoverKind::Branched => Ok(class),
            other => Err(Error::UnsupportedCover(other)),
        }
    }

    /// `outer ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &CoverMap) -> Result<CoverMap> {
        if !inner.target.same_structure(&self.source) {
            return Err(Error::GraphMismatch(
                "inner cover's target is not the outer cover's source".into(),
            ));
        }
        let dart_map = inner.dart_map.iter().map(|d| self.dart_map[d.0]).collect();
        let vertex_map = inner.vertex_map.iter().map(|v| self.vertex_map[v.0]).collect();
        CoverMap::new(inner.source.clone(), self.target.clone(), vertex_map, dart_map)
    }

    /// The same cover between relabelled copies of the graphs.
    pub fn transport(
        &self,
        source: Arc<Graph>,
        source_darts: &[Dart],
        source_vertices: &[Vertex],
        target: Arc<Graph>,
        target_darts: &[Dart],
        target_vertices: &[Vertex],
    ) -> Result<CoverMap> {
        let mut dart_map = vec![Dart(0); source.dart_count()];
        for d in self.source.darts() {
            dart_map[source_darts[d.0].0] = target_darts[self.dart_map[d.0].0];
        }
        let mut vertex_map = vec![Vertex(0); source.vertex_count()];
        for v in self.source.vertices() {
            vertex_map[source_vertices[v.0].0] = target_vertices[self.vertex_map[v.0].0];
        }
        CoverMap::new(source, target, vertex_map, dart_map)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverKind {
    Unbranched,
    Branched,
    Weak,
    Invalid,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Unbranched => "unbranched",
            CoverKind::Branched => "branched",
            CoverKind::Weak => "weak",
            CoverKind::Invalid => "invalid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassWitness {
    /// Some dart at the image vertex has no preimage at this vertex.
    NotLocallyOnto { vertex: Vertex },
    /// Darts at the image have differing numbers of preimages here.
    NonUniform { vertex: Vertex },
    DegreeMismatch { what: String, value: usize },
}

impl fmt::Display for ClassWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassWitness::NotLocallyOnto { vertex } => {
                write!(f, "{vertex} does not map onto the neighbourhood of its image")
            }
            ClassWitness::NonUniform { vertex } => {
                write!(f, "{vertex} covers its image's darts a non-uniform number of times")
            }
            ClassWitness::DegreeMismatch { what, value } => {
                write!(f, "{what} has size {value}, differing from the rest")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverClass {
    pub kind: CoverKind,
    /// Per source vertex; empty unless the cover is branched or unbranched.
    pub local_degree: Vec<usize>,
    pub singular: Vec<Vertex>,
    pub branch_set: Vec<Vertex>,
    pub degree: Option<usize>,
    pub witness: Option<ClassWitness>,
}
