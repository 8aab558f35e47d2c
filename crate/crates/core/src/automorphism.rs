//! Dart-level graph isomorphisms by backtracking.
//!
//! A dart map is an isomorphism when it is a bijection commuting with reversal
//! and sending all darts at each vertex to the darts at one vertex, injectively
//! on vertices. Darts are assigned vertex by vertex in breadth-first order so
//! the vertex map gets pinned early. Isolated vertices are mapped in order.

use std::collections::VecDeque;

use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isomorphism {
    darts: Vec<Dart>,
    vertices: Vec<Vertex>,
}

pub type Automorphism = Isomorphism;

impl Isomorphism {
    pub fn identity(g: &Graph) -> Self {
        Isomorphism {
            darts: g.darts().collect(),
            vertices: g.vertices().collect(),
        }
    }

    pub fn dart(&self, d: Dart) -> Dart {
        self.darts[d.0]
    }

    pub fn vertex(&self, v: Vertex) -> Vertex {
        self.vertices[v.0]
    }

    pub fn edge(&self, e: Edge) -> Edge {
        self.darts[e.dart(0).0].edge()
    }

    pub fn dart_images(&self) -> &[Dart] {
        &self.darts
    }

    /// `self.then(other)` applies `self` first.
    pub fn then(&self, other: &Isomorphism) -> Isomorphism {
        Isomorphism {
            darts: self.darts.iter().map(|d| other.darts[d.0]).collect(),
            vertices: self.vertices.iter().map(|v| other.vertices[v.0]).collect(),
        }
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut darts = vec![Dart(0); self.darts.len()];
        for (i, d) in self.darts.iter().enumerate() {
            darts[d.0] = Dart(i);
        }
        let mut vertices = vec![Vertex(0); self.vertices.len()];
        for (i, v) in self.vertices.iter().enumerate() {
            vertices[v.0] = Vertex(i);
        }
        Isomorphism { darts, vertices }
    }

    pub fn is_identity(&self) -> bool {
        self.darts.iter().enumerate().all(|(i, d)| d.0 == i)
    }
}

/// All automorphisms of `g`, sorted by dart images.
pub fn automorphisms(g: &Graph, budget: Budget) -> Result<Vec<Automorphism>> {
    isomorphisms_with(g, g, budget, |_, _| true)
}

/// All isomorphisms `from → to` whose dart map satisfies `allowed(d, image)`
/// for every dart, sorted by dart images.
pub fn isomorphisms_with<F>(from: &Graph, to: &Graph, budget: Budget, allowed: F) -> Result<Vec<Isomorphism>>
where
    F: Fn(Dart, Dart) -> bool,
{
    let mut out = Vec::new();
    search(from, to, budget, &allowed, &mut |iso| {
        out.push(iso);
        true
    })?;
    out.sort();
    Ok(out)
}

/// The first isomorphism found (in search order), if any.
pub fn find_isomorphism_with<F>(from: &Graph, to: &Graph, budget: Budget, allowed: F) -> Result<Option<Isomorphism>>
where
    F: Fn(Dart, Dart) -> bool,
{
    let mut found = None;
    search(from, to, budget, &allowed, &mut |iso| {
        found = Some(iso);
        false
    })?;
    Ok(found)
}

fn search<F>(
    from: &Graph,
    to: &Graph,
    budget: Budget,
    allowed: &F,
    emit: &mut dyn FnMut(Isomorphism) -> bool,
) -> Result<()>
where
    F: Fn(Dart, Dart) -> bool,
{
    if !from.same_structure_size(to) {
        return Ok(());
    }
    let mut from_degrees: Vec<usize> = from.vertices().map(|v| from.degree(v)).collect();
    let mut to_degrees: Vec<usize> = to.vertices().map(|v| to.degree(v)).collect();
    from_degrees.sort_unstable();
    to_degrees.sort_unstable();
    if from_degrees != to_degrees {
        return Ok(());
    }

    // breadth-first dart order, one representative per edge
    let mut order = Vec::with_capacity(from.edge_count());
    let mut seen_vertex = vec![false; from.vertex_count()];
    let mut seen_edge = vec![false; from.edge_count()];
    for root in from.vertices() {
        if seen_vertex[root.0] {
            continue;
        }
        seen_vertex[root.0] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &d in from.darts_at(v) {
                if !seen_edge[d.edge().0] {
                    seen_edge[d.edge().0] = true;
                    order.push(d);
                }
                let w = from.target(d);
                if !seen_vertex[w.0] {
                    seen_vertex[w.0] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut st = SearchState {
        from,
        to,
        order,
        dmap: vec![None; from.dart_count()],
        dused: vec![false; to.dart_count()],
        vmap: vec![None; from.vertex_count()],
        vinv: vec![None; to.vertex_count()],
        found: 0,
        limit: budget.max_items,
    };
    st.run(0, allowed, emit)?;
    Ok(())
}

struct SearchState<'a> {
    from: &'a Graph,
    to: &'a Graph,
    order: Vec<Dart>,
    dmap: Vec<Option<Dart>>,
    dused: Vec<bool>,
    vmap: Vec<Option<Vertex>>,
    vinv: Vec<Option<Vertex>>,
    found: u64,
    limit: u64,
}

impl SearchState<'_> {
    /// Returns `Ok(false)` when the consumer asked to stop.
    fn run<F>(&mut self, depth: usize, allowed: &F, emit: &mut dyn FnMut(Isomorphism) -> bool) -> Result<bool>
    where
        F: Fn(Dart, Dart) -> bool,
    {
        if depth == self.order.len() {
            return self.finish(emit);
        }
        let d = self.order[depth];
        let rd = d.reversed();
        let (u, w) = (self.from.origin(d), self.from.origin(rd));
        let is_loop = u == w;
        for cand in 0..self.to.dart_count() {
            let c = Dart(cand);
            let rc = c.reversed();
            if self.dused[c.0] || self.dused[rc.0] {
                continue;
            }
            let (cu, cw) = (self.to.origin(c), self.to.origin(rc));
            if (cu == cw) != is_loop
                || self.from.degree(u) != self.to.degree(cu)
                || self.from.degree(w) != self.to.degree(cw)
                || !allowed(d, c)
                || !allowed(rd, rc)
            {
                continue;
            }
            let mut pinned = Vec::with_capacity(2);
            let mut ok = true;
            for (x, y) in [(u, cu), (w, cw)] {
                match (self.vmap[x.0], self.vinv[y.0]) {
                    (Some(img), _) if img != y => ok = false,
                    (None, Some(_)) => ok = false,
                    (None, None) => {
                        self.vmap[x.0] = Some(y);
                        self.vinv[y.0] = Some(x);
                        pinned.push((x, y));
                    }
                    _ => {}
                }
                if !ok {
                    break;
                }
            }
            if ok {
                self.dmap[d.0] = Some(c);
                self.dmap[rd.0] = Some(rc);
                self.dused[c.0] = true;
                self.dused[rc.0] = true;
                let keep_going = self.run(depth + 1, allowed, emit)?;
                self.dmap[d.0] = None;
                self.dmap[rd.0] = None;
                self.dused[c.0] = false;
                self.dused[rc.0] = false;
                if !keep_going {
                    for (x, y) in pinned {
                        self.vmap[x.0] = None;
                        self.vinv[y.0] = None;
                    }
                    return Ok(false);
                }
            }
            for (x, y) in pinned {
                self.vmap[x.0] = None;
                self.vinv[y.0] = None;
            }
        }
        Ok(true)
    }

    fn finish(&mut self, emit: &mut dyn FnMut(Isomorphism) -> bool) -> Result<bool> {
        let mut vertices: Vec<Vertex> = Vec::with_capacity(self.vmap.len());
        let mut free_targets = self
            .to
            .vertices()
            .filter(|v| self.vinv[v.0].is_none() && self.to.degree(*v) == 0);
        for v in self.from.vertices() {
            match self.vmap[v.0] {
                Some(img) => vertices.push(img),
                None => vertices.push(free_targets.next().expect("isolated vertex counts agree")),
            }
        }
        self.found += 1;
        if self.found > self.limit {
            return Err(Error::BudgetExceeded {
                what: "isomorphisms",
                estimate: self.found as u128,
                limit: self.limit,
            });
        }
        let darts = self.dmap.iter().map(|d| d.expect("all darts mapped")).collect();
        Ok(emit(Isomorphism { darts, vertices }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_group_orders() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(automorphisms(&k4, Budget::default()).unwrap().len(), 24);
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(automorphisms(&c3, Budget::default()).unwrap().len(), 6);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(automorphisms(&k2, Budget::default()).unwrap().len(), 2);
    }

    #[test]
    fn bouquet_automorphisms_are_hyperoctahedral() {
        // two loops: swap loops (2) × reverse each (2 × 2)
        let b = Graph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        assert_eq!(automorphisms(&b, Budget::default()).unwrap().len(), 8);
    }

    #[test]
    fn group_is_closed() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let group = automorphisms(&c4, Budget::default()).unwrap();
        assert_eq!(group.len(), 8);
        for a in &group {
            assert!(group.contains(&a.inverse()));
            for b in &group {
                assert!(group.contains(&a.then(b)));
            }
        }
    }

    #[test]
    fn budget_limits_results() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(
            automorphisms(&k4, Budget::new(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn non_isomorphic_graphs() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(find_isomorphism_with(&c4, &star, Budget::default(), |_, _| true)
            .unwrap()
            .is_none());
    }
}
