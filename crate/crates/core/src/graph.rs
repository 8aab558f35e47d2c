//! Dart-based multigraphs.
//!
//! Every edge `e` owns two darts, `2e` (at its first endpoint) and `2e + 1`
//! (at its second endpoint). The reversal involution swaps the two darts of an
//! edge, so it is `d ^ 1` on dart indices. Loops and parallel edges are
//! representable; [`Graph::validate_assumptions`] reports them.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

impl Edge {
    pub fn index(self) -> usize {
        self.0
    }

    /// The dart of this edge at end `0` or `1`.
    pub fn dart(self, end: usize) -> Dart {
        debug_assert!(end < 2);
        Dart(2 * self.0 + end)
    }

    pub fn darts(self) -> [Dart; 2] {
        [self.dart(0), self.dart(1)]
    }
}

impl Dart {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn reversed(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn edge(self) -> Edge {
        Edge(self.0 / 2)
    }

    /// Which end of its edge this dart sits at.
    pub fn end(self) -> usize {
        self.0 & 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    ends: Vec<[Vertex; 2]>,
    incident: Vec<Vec<Dart>>,
}

impl Graph {
    /// Builds a graph from named vertices and edges given by endpoint names.
    /// Edge `i` of the slice gets id `i`.
    pub fn build<V, E>(vertices: &[V], edges: &[(E, E)]) -> Result<Graph>
    where
        V: AsRef<str>,
        E: AsRef<str>,
    {
        let mut index = HashMap::with_capacity(vertices.len());
        let mut names = Vec::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            let name = v.as_ref().to_string();
            if index.insert(name.clone(), Vertex(i)).is_some() {
                return Err(Error::DuplicateVertex(name));
            }
            names.push(name);
        }
        let mut ends = Vec::with_capacity(edges.len());
        for (i, (a, b)) in edges.iter().enumerate() {
            let lookup = |name: &str| {
                index.get(name).copied().ok_or_else(|| Error::DanglingEndpoint {
                    edge: i,
                    vertex: name.to_string(),
                })
            };
            ends.push([lookup(a.as_ref())?, lookup(b.as_ref())?]);
        }
        Ok(Graph::assemble(names, ends))
    }

    /// Builds a graph on vertices `0..n` named by their index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let names = (0..n).map(|i| i.to_string()).collect();
        let mut ends = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::DanglingEndpoint {
                        edge: i,
                        vertex: v.to_string(),
                    });
                }
            }
            ends.push([Vertex(a), Vertex(b)]);
        }
        Ok(Graph::assemble(names, ends))
    }

    /// Like [`Graph::from_edges`] but with explicit vertex names.
    pub fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(n.clone()));
            }
        }
        let mut g = Graph::from_edges(names.len(), edges)?;
        g.names = names;
        Ok(g)
    }

    fn assemble(names: Vec<String>, ends: Vec<[Vertex; 2]>) -> Graph {
        let mut incident = vec![Vec::new(); names.len()];
        for (e, pair) in ends.iter().enumerate() {
            incident[pair[0].0].push(Edge(e).dart(0));
            incident[pair[1].0].push(Edge(e).dart(1));
        }
        Graph {
            names,
            ends,
            incident,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(Vertex)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.ends.len()).map(Edge)
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..2 * self.ends.len()).map(Dart)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name).map(Vertex)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.0 < self.names.len()
    }

    /// The vertex a dart is attached to.
    pub fn origin(&self, d: Dart) -> Vertex {
        self.ends[d.0 / 2][d.0 & 1]
    }

    /// The vertex at the far end of a dart.
    pub fn target(&self, d: Dart) -> Vertex {
        self.origin(d.reversed())
    }

    pub fn endpoints(&self, e: Edge) -> [Vertex; 2] {
        self.ends[e.0]
    }

    pub fn is_loop(&self, e: Edge) -> bool {
        let [a, b] = self.ends[e.0];
        a == b
    }

    /// Darts at `v` in increasing id order.
    pub fn darts_at(&self, v: Vertex) -> &[Dart] {
        &self.incident[v.0]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v.0].len()
    }

    /// Same vertex count and identical edge endpoint lists; names ignored.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.names.len() == other.names.len() && self.ends == other.ends
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![Vertex(start)];
            comp[start] = id;
            let mut queue = VecDeque::from([Vertex(start)]);
            while let Some(v) = queue.pop_front() {
                for &d in self.darts_at(v) {
                    let w = self.target(d);
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Breadth-first spanning forest: `tree[e]` is true for tree edges.
    /// Roots are the smallest vertex of each component; darts are scanned in id
    /// order so the result is deterministic.
    pub fn spanning_tree(&self) -> Vec<bool> {
        let mut tree = vec![false; self.edge_count()];
        let mut seen = vec![false; self.vertex_count()];
        for root in self.vertices() {
            if seen[root.0] {
                continue;
            }
            seen[root.0] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &d in self.darts_at(v) {
                    let w = self.target(d);
                    if !seen[w.0] {
                        seen[w.0] = true;
                        tree[d.edge().0] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    /// Edges outside [`Graph::spanning_tree`], in increasing id order.
    pub fn cotree_edges(&self) -> Vec<Edge> {
        let tree = self.spanning_tree();
        self.edges().filter(|e| !tree[e.0]).collect()
    }

    /// Cycle rank `|E| - |V| + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    /// Connectivity, loops and parallel edges, checked against the standing
    /// assumptions on base graphs (connected, no cycles of length one or two).
    pub fn validate_assumptions(&self) -> AssumptionReport {
        let loops: Vec<Edge> = self.edges().filter(|&e| self.is_loop(e)).collect();
        let mut by_pair: BTreeMap<(Vertex, Vertex), Vec<Edge>> = BTreeMap::new();
        for e in self.edges() {
            if self.is_loop(e) {
                continue;
            }
            let [a, b] = self.endpoints(e);
            by_pair.entry((a.min(b), a.max(b))).or_default().push(e);
        }
        let parallel = by_pair
            .into_values()
            .filter(|es| es.len() > 1)
            .flat_map(|es| {
                let first = es[0];
                es.into_iter().skip(1).map(move |e| (first, e))
            })
            .collect();
        AssumptionReport {
            connected: self.is_connected(),
            components: self.components().len(),
            loops,
            parallel,
        }
    }

    /// A relabelled copy: vertex `order[i]` of `self` becomes vertex `i`, edge
    /// `edge_order[j]` becomes edge `j`, and `swap[j]` exchanges the two ends of
    /// the new edge `j`. Returns the copy and the dart map old → new.
    pub fn relabel(
        &self,
        order: &[Vertex],
        edge_order: &[Edge],
        swap: &[bool],
    ) -> Result<(Graph, Vec<Dart>)> {
        let n = self.vertex_count();
        let m = self.edge_count();
        if order.len() != n || edge_order.len() != m || swap.len() != m {
            return Err(Error::GraphMismatch("relabelling has the wrong size".into()));
        }
        let mut new_index = vec![usize::MAX; n];
        for (i, v) in order.iter().enumerate() {
            if v.0 >= n || new_index[v.0] != usize::MAX {
                return Err(Error::GraphMismatch("vertex order is not a permutation".into()));
            }
            new_index[v.0] = i;
        }
        let names = order.iter().map(|&v| self.names[v.0].clone()).collect();
        let mut ends = Vec::with_capacity(m);
        let mut dart_map = vec![Dart(usize::MAX); 2 * m];
        let mut used = vec![false; m];
        for (j, &e) in edge_order.iter().enumerate() {
            if e.0 >= m || used[e.0] {
                return Err(Error::GraphMismatch("edge order is not a permutation".into()));
            }
            used[e.0] = true;
            let [a, b] = self.ends[e.0];
            let (a, b) = (Vertex(new_index[a.0]), Vertex(new_index[b.0]));
            if swap[j] {
                ends.push([b, a]);
                dart_map[e.dart(0).0] = Edge(j).dart(1);
                dart_map[e.dart(1).0] = Edge(j).dart(0);
            } else {
                ends.push([a, b]);
                dart_map[e.dart(0).0] = Edge(j).dart(0);
                dart_map[e.dart(1).0] = Edge(j).dart(1);
            }
        }
        Ok((Graph::assemble(names, ends), dart_map))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionReport {
    pub connected: bool,
    pub components: usize,
    pub loops: Vec<Edge>,
    /// Each entry pairs a parallel edge with the lowest edge sharing its ends.
    pub parallel: Vec<(Edge, Edge)>,
}

impl AssumptionReport {
    pub fn passes(&self) -> bool {
        self.connected && self.loops.is_empty() && self.parallel.is_empty()
    }

    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.connected {
            out.push(format!("disconnected ({} components)", self.components));
        }
        if !self.loops.is_empty() {
            out.push(format!("loops present ({})", self.loops.len()));
        }
        if !self.parallel.is_empty() {
            out.push(format!("parallel edges present ({})", self.parallel.len()));
        }
        out
    }
}

impl fmt::Display for AssumptionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passes() {
            write!(f, "pass: connected, no loops, no parallel edges")
        } else {
            write!(f, "fail: {}", self.problems().join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        let pairs = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")];
        Graph::build(&["a", "b", "c", "d"], &pairs).unwrap()
    }

    #[test]
    fn complete_graph_has_twelve_darts() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.dart_count(), 12);
        for d in g.darts() {
            assert_ne!(d.reversed(), d);
            assert_eq!(d.reversed().reversed(), d);
            assert_eq!(d.reversed().edge(), d.edge());
        }
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn bouquet_puts_four_darts_on_one_vertex() {
        let g = Graph::build(&["v"], &[("v", "v"), ("v", "v")]).unwrap();
        assert_eq!(g.darts_at(Vertex(0)).len(), 4);
        let report = g.validate_assumptions();
        assert!(!report.passes());
        assert_eq!(report.loops.len(), 2);
    }

    #[test]
    fn dangling_endpoint_is_rejected() {
        let err = Graph::build(&["a"], &[("a", "b")]).unwrap_err();
        assert!(matches!(err, Error::DanglingEndpoint { edge: 0, .. }));
    }

    #[test]
    fn duplicate_vertex_is_rejected() {
        let err = Graph::build(&["a", "a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::DuplicateVertex(_)));
    }

    #[test]
    fn assumption_reports() {
        assert!(k4().validate_assumptions().passes());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let r = two_triangles.validate_assumptions();
        assert!(!r.connected);
        assert_eq!(r.components, 2);
        let digon = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon.validate_assumptions().parallel, vec![(Edge(0), Edge(1))]);
    }

    #[test]
    fn spanning_tree_and_cycle_rank() {
        let g = k4();
        assert_eq!(g.spanning_tree().iter().filter(|&&t| t).count(), 3);
        assert_eq!(g.cotree_edges(), vec![Edge(3), Edge(4), Edge(5)]);
        assert_eq!(g.cycle_rank(), 3);
    }

    #[test]
    fn relabel_preserves_incidence() {
        let g = k4();
        let order = [Vertex(2), Vertex(0), Vertex(3), Vertex(1)];
        let edges: Vec<Edge> = (0..6).rev().map(Edge).collect();
        let swap = [true, false, true, false, true, false];
        let (h, map) = g.relabel(&order, &edges, &swap).unwrap();
        for d in g.darts() {
            assert_eq!(map[d.0].reversed(), map[d.reversed().0]);
            assert_eq!(h.name(h.origin(map[d.0])), g.name(g.origin(d)));
        }
    }
}
