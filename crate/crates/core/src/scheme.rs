//! Embedding schemes: a rotation (cyclic order of darts around each vertex)
//! together with a `±1` signature on edges.
//!
//! Faces are traced on signed darts `(d, s)`. One step moves along `d`, picks
//! up the signature of its edge, and turns at the far vertex in the direction
//! given by the accumulated sign:
//!
//! ```text
//! step(d, s) = (σ^{s'}(θ d), s')    where s' = s · λ(edge(d))
//! ```
//!
//! Every face shows up as two orbits, one per traversal direction. The map
//! `(d, s) ↦ (θ d, -s·λ(d))` reverses steps and pairs each orbit with its
//! mirror; a face is reported once, by the first orbit discovered.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};
use crate::perm::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingScheme {
    graph: Arc<Graph>,
    succ: Vec<Dart>,
    pred: Vec<Dart>,
    signature: Vec<Sign>,
}

/// One face, as the darts along its boundary walk together with the local
/// orientation each dart is traversed with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    pub sides: Vec<Sign>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// All faces of a scheme plus a lookup from signed darts to faces.
#[derive(Clone, Debug)]
pub struct FaceTrace {
    pub faces: Vec<Face>,
    /// Indexed by [`state_index`]: `(face, position, mirrored)`.
    locate: Vec<(usize, usize, bool)>,
}

impl FaceTrace {
    /// Face containing the signed dart, its position in the face walk (or in
    /// the mirrored walk), and whether the state belongs to the mirror orbit.
    pub fn locate(&self, d: Dart, s: Sign) -> (usize, usize, bool) {
        self.locate[state_index(d, s)]
    }
}

pub(crate) fn state_index(d: Dart, s: Sign) -> usize {
    2 * d.0 + usize::from(!s.is_plus())
}

impl EmbeddingScheme {
    /// Builds a scheme from one rotation list per vertex (any starting dart).
    pub fn new(graph: Arc<Graph>, rotation: Vec<Vec<Dart>>, signature: Vec<Sign>) -> Result<Self> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation {
                vertex: "*".into(),
                reason: format!(
                    "{} rotation lists for {} vertices",
                    rotation.len(),
                    graph.vertex_count()
                ),
            });
        }
        if signature.len() != graph.edge_count() {
            return Err(Error::SignatureLength {
                expected: graph.edge_count(),
                got: signature.len(),
            });
        }
        let mut succ = vec![Dart(usize::MAX); graph.dart_count()];
        let mut pred = vec![Dart(usize::MAX); graph.dart_count()];
        for v in graph.vertices() {
            let list = &rotation[v.0];
            let mut expected = graph.darts_at(v).to_vec();
            let mut got = list.clone();
            expected.sort();
            got.sort();
            if expected != got {
                return Err(Error::InvalidRotation {
                    vertex: graph.name(v).to_string(),
                    reason: format!("rotation {list:?} is not a permutation of the darts at the vertex"),
                });
            }
            for (i, &d) in list.iter().enumerate() {
                let next = list[(i + 1) % list.len()];
                succ[d.0] = next;
                pred[next.0] = d;
            }
        }
        Ok(EmbeddingScheme {
            graph,
            succ,
            pred,
            signature,
        })
    }

    /// All-positive scheme from rotation lists.
    pub fn oriented(graph: Arc<Graph>, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        let m = graph.edge_count();
        EmbeddingScheme::new(graph, rotation, vec![Sign::Plus; m])
    }

    /// Builds from a successor permutation on darts without re-validating.
    pub(crate) fn from_parts(graph: Arc<Graph>, succ: Vec<Dart>, signature: Vec<Sign>) -> Self {
        let mut pred = vec![Dart(0); succ.len()];
        for (d, &n) in succ.iter().enumerate() {
            pred[n.0] = Dart(d);
        }
        EmbeddingScheme {
            graph,
            succ,
            pred,
            signature,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Next dart counterclockwise around the dart's origin.
    pub fn succ(&self, d: Dart) -> Dart {
        self.succ[d.0]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        self.pred[d.0]
    }

    /// `σ^s`: successor for `+`, predecessor for `-`.
    pub fn turn(&self, d: Dart, s: Sign) -> Dart {
        match s {
            Sign::Plus => self.succ[d.0],
            Sign::Minus => self.pred[d.0],
        }
    }

    pub fn sign(&self, e: Edge) -> Sign {
        self.signature[e.0]
    }

    pub fn signature(&self) -> &[Sign] {
        &self.signature
    }

    pub fn is_all_positive(&self) -> bool {
        self.signature.iter().all(|s| s.is_plus())
    }

    /// Rotation at `v`, starting from its smallest dart.
    pub fn rotation_at(&self, v: Vertex) -> Vec<Dart> {
        let darts = self.graph.darts_at(v);
        let Some(&start) = darts.iter().min() else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(darts.len());
        let mut d = start;
        loop {
            out.push(d);
            d = self.succ[d.0];
            if d == start {
                break;
            }
        }
        out
    }

    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        self.graph.vertices().map(|v| self.rotation_at(v)).collect()
    }

    pub(crate) fn step(&self, d: Dart, s: Sign) -> (Dart, Sign) {
        let s2 = s * self.signature[d.edge().0];
        (self.turn(d.reversed(), s2), s2)
    }

    fn mirror_state(&self, d: Dart, s: Sign) -> (Dart, Sign) {
        (d.reversed(), -(s * self.signature[d.edge().0]))
    }

    /// Traces all faces. Panics if an orbit is its own mirror, which cannot
    /// happen for a well-formed scheme.
    pub fn trace_faces(&self) -> FaceTrace {
        let n_states = 2 * self.graph.dart_count();
        let mut orbit_of = vec![usize::MAX; n_states];
        let mut orbits: Vec<Vec<(Dart, Sign)>> = Vec::new();
        for d in self.graph.darts() {
            for s in [Sign::Plus, Sign::Minus] {
                if orbit_of[state_index(d, s)] != usize::MAX {
                    continue;
                }
                let id = orbits.len();
                let mut orbit = Vec::new();
                let mut cur = (d, s);
                loop {
                    orbit_of[state_index(cur.0, cur.1)] = id;
                    orbit.push(cur);
                    cur = self.step(cur.0, cur.1);
                    if cur == (d, s) {
                        break;
                    }
                }
                orbits.push(orbit);
            }
        }
        let mut face_of_orbit = vec![None; orbits.len()];
        let mut faces = Vec::with_capacity(orbits.len() / 2);
        let mut locate = vec![(0, 0, false); n_states];
        for (id, orbit) in orbits.iter().enumerate() {
            let (md, ms) = self.mirror_state(orbit[0].0, orbit[0].1);
            let mirror = orbit_of[state_index(md, ms)];
            assert_ne!(mirror, id, "face orbit is its own mirror");
            if face_of_orbit[id].is_some() {
                continue;
            }
            let f = faces.len();
            face_of_orbit[id] = Some(f);
            face_of_orbit[mirror] = Some(f);
            for (pos, &(d, s)) in orbit.iter().enumerate() {
                locate[state_index(d, s)] = (f, pos, false);
            }
            for (pos, &(d, s)) in orbits[mirror].iter().enumerate() {
                locate[state_index(d, s)] = (f, pos, true);
            }
            faces.push(Face {
                darts: orbit.iter().map(|&(d, _)| d).collect(),
                sides: orbit.iter().map(|&(_, s)| s).collect(),
            });
        }
        debug_assert_eq!(2 * faces.len(), orbits.len());
        FaceTrace { faces, locate }
    }

    pub fn faces(&self) -> Vec<Face> {
        self.trace_faces().faces
    }

    /// Faces by the orientable-only rule `next(d) = σ(θ(d))`, one orbit per
    /// face. Only meaningful for all-positive schemes.
    pub fn oriented_faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.graph.dart_count()];
        let mut out = Vec::new();
        for d in self.graph.darts() {
            if seen[d.0] {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = d;
            while !seen[cur.0] {
                seen[cur.0] = true;
                walk.push(cur);
                cur = self.succ[cur.reversed().0];
            }
            out.push(walk);
        }
        out
    }

    /// Number of faces. A graph without edges has the single face around it.
    pub fn face_count(&self) -> usize {
        if self.graph.edge_count() == 0 {
            return 1;
        }
        self.trace_faces().faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + self.face_count() as i64
    }

    /// A vertex sign `η` with `λ(e) = η(u)·η(v)` on every edge, if one exists.
    /// Components are rooted at their smallest vertex with `η = +`.
    pub fn orientation_gauge(&self) -> Option<Vec<Sign>> {
        let g = &*self.graph;
        let mut eta: Vec<Option<Sign>> = vec![None; g.vertex_count()];
        for root in g.vertices() {
            if eta[root.0].is_some() {
                continue;
            }
            eta[root.0] = Some(Sign::Plus);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let ev = eta[v.0].unwrap();
                for &d in g.darts_at(v) {
                    let w = g.target(d);
                    let want = ev * self.signature[d.edge().0];
                    match eta[w.0] {
                        None => {
                            eta[w.0] = Some(want);
                            stack.push(w);
                        }
                        Some(have) if have != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(eta.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation_gauge().is_some()
    }

    pub fn surface_id(&self) -> Result<SurfaceId> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        SurfaceId::new(self.euler_characteristic(), self.is_orientable())
    }

    /// Reverses the local orientation at `v`: inverts its rotation and toggles
    /// the signature of every non-loop edge at `v`.
    pub fn flip_vertex(&self, v: Vertex) -> Result<Self> {
        if !self.graph.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut out = self.clone();
        for &d in self.graph.darts_at(v) {
            out.succ[d.0] = self.pred[d.0];
            out.pred[d.0] = self.succ[d.0];
            let e = d.edge();
            if !self.graph.is_loop(e) {
                out.signature[e.0] = -out.signature[e.0];
            }
        }
        Ok(out)
    }

    /// The equivalent all-positive scheme obtained by flipping every vertex
    /// with negative orientation gauge, or `None` if non-orientable.
    pub fn normalized(&self) -> Option<Self> {
        let eta = self.orientation_gauge()?;
        let mut out = self.clone();
        for v in self.graph.vertices() {
            if !eta[v.0].is_plus() {
                for &d in self.graph.darts_at(v) {
                    out.succ[d.0] = self.pred[d.0];
                    out.pred[d.0] = self.succ[d.0];
                }
            }
        }
        for s in out.signature.iter_mut() {
            *s = Sign::Plus;
        }
        Some(out)
    }

    /// The mirror image: every rotation reversed, signature unchanged.
    pub fn mirror(&self) -> Self {
        EmbeddingScheme {
            graph: self.graph.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            signature: self.signature.clone(),
        }
    }

    /// The same scheme on a relabelled copy of the graph; `dart_map` sends old
    /// darts to new ones (as returned by [`Graph::relabel`]).
    pub fn transport(&self, graph: Arc<Graph>, dart_map: &[Dart]) -> Result<Self> {
        if dart_map.len() != self.graph.dart_count() || !graph.same_structure_size(&self.graph) {
            return Err(Error::GraphMismatch("dart map does not fit the graphs".into()));
        }
        let mut succ = vec![Dart(0); graph.dart_count()];
        for d in self.graph.darts() {
            succ[dart_map[d.0].0] = dart_map[self.succ[d.0].0];
        }
        let mut signature = vec![Sign::Plus; graph.edge_count()];
        for e in self.graph.edges() {
            signature[dart_map[e.dart(0).0].edge().0] = self.signature[e.0];
        }
        Ok(EmbeddingScheme::from_parts(graph, succ, signature))
    }
}

impl Graph {
    pub(crate) fn same_structure_size(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count() && self.edge_count() == other.edge_count()
    }
}

/// A closed surface up to homeomorphism, from Euler characteristic and
/// orientability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceId {
    euler_characteristic: i64,
    orientable: bool,
}

impl SurfaceId {
    pub const SPHERE: SurfaceId = SurfaceId {
        euler_characteristic: 2,
        orientable: true,
    };
    pub const PROJECTIVE_PLANE: SurfaceId = SurfaceId {
        euler_characteristic: 1,
        orientable: false,
    };

    pub fn new(euler_characteristic: i64, orientable: bool) -> Result<Self> {
        if euler_characteristic > 2 || (orientable && euler_characteristic % 2 != 0) {
            return Err(Error::inconsistent(format!(
                "no closed surface has euler characteristic {euler_characteristic} with orientable = {orientable}"
            )));
        }
        Ok(SurfaceId {
            euler_characteristic,
            orientable,
        })
    }

    pub fn euler_characteristic(self) -> i64 {
        self.euler_characteristic
    }

    pub fn orientable(self) -> bool {
        self.orientable
    }

    /// Orientable genus or crosscap number.
    pub fn genus(self) -> i64 {
        if self.orientable {
            (2 - self.euler_characteristic) / 2
        } else {
            2 - self.euler_characteristic
        }
    }

    pub fn name(self) -> String {
        let g = self.genus();
        match (self.orientable, g) {
            (true, 0) => "sphere".into(),
            (true, 1) => "torus".into(),
            (true, g) => format!("genus-{g}"),
            (false, 1) => "projective plane".into(),
            (false, 2) => "Klein bottle".into(),
            (false, k) => format!("crosscap-{k}"),
        }
    }
}

impl fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable { "genus" } else { "crosscap" };
        let g = self.genus();
        let name = self.name();
        if name.contains('-') {
            write!(f, "{kind} {g}")
        } else {
            write!(f, "{kind} {g} ({name})")
        }
    }
}
