//! Planarity testing with embedding extraction.
//!
//! Loops and parallel edges are set aside, the remaining simple graph is cut
//! into biconnected blocks, and each block is embedded by the
//! Demoucron–Malgrange–Pertuiset path-addition method: starting from a cycle,
//! repeatedly pick the fragment with the fewest admissible faces and route a
//! path of it through one of them. Block rotations are concatenated at cut
//! vertices, then parallel edges and loops are put back next to a sibling so
//! each bounds a new face. The result is checked to have euler characteristic 2
//! before it is returned.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};
use crate::perm::Sign;
use crate::scheme::EmbeddingScheme;

#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(EmbeddingScheme),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn scheme(&self) -> Option<&EmbeddingScheme> {
        match self {
            Planarity::Planar(s) => Some(s),
            Planarity::NonPlanar => None,
        }
    }
}

pub fn planar_embed(graph: &Arc<Graph>) -> Result<Planarity> {
    let g = &**graph;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();

    // representative edge for each adjacent pair; the rest are parallels
    let mut rep: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
    let mut parallels: Vec<Edge> = Vec::new();
    let mut loops: Vec<Edge> = Vec::new();
    for e in g.edges() {
        let [a, b] = g.endpoints(e);
        if a == b {
            loops.push(e);
            continue;
        }
        let key = (a.0.min(b.0), a.0.max(b.0));
        if let std::collections::btree_map::Entry::Vacant(slot) = rep.entry(key) {
            slot.insert(e);
        } else {
            parallels.push(e);
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in rep.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
    }

    // dart of the representative edge leaving `u` towards `w`
    let dart_between = |u: usize, w: usize| -> Dart {
        let e = rep[&(u.min(w), u.max(w))];
        if g.endpoints(e)[0].0 == u {
            e.dart(0)
        } else {
            e.dart(1)
        }
    };

    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for block in biconnected_blocks(&adj) {
        let cyclic = if block.len() == 1 {
            let (a, b) = block[0];
            let mut m = BTreeMap::new();
            m.insert(a, vec![b]);
            m.insert(b, vec![a]);
            m
        } else {
            match embed_block(&block) {
                Some(m) => m,
                None => return Ok(Planarity::NonPlanar),
            }
        };
        for (v, nbrs) in cyclic {
            rotation[v].extend(nbrs.into_iter().map(|w| dart_between(v, w)));
        }
    }

    for e in parallels {
        let [a, b] = g.endpoints(e);
        let r = rep[&(a.0.min(b.0), a.0.max(b.0))];
        let (x, y) = if g.endpoints(r)[0] == a {
            (r.dart(0), r.dart(1))
        } else {
            (r.dart(1), r.dart(0))
        };
        // new dart at a goes right after x, new dart at b right before y
        insert_after(&mut rotation[a.0], x, e.dart(0));
        insert_before(&mut rotation[b.0], y, e.dart(1));
    }
    for e in loops {
        let v = g.endpoints(e)[0].0;
        rotation[v].push(e.dart(1));
        rotation[v].push(e.dart(0));
    }

    let scheme = EmbeddingScheme::new(graph.clone(), rotation, vec![Sign::Plus; g.edge_count()])?;
    if scheme.euler_characteristic() != 2 {
        return Err(Error::inconsistent(format!(
            "planar embedding has euler characteristic {}",
            scheme.euler_characteristic()
        )));
    }
    Ok(Planarity::Planar(scheme))
}

pub fn is_planar(graph: &Arc<Graph>) -> Result<bool> {
    Ok(planar_embed(graph)?.is_planar())
}

fn insert_after(list: &mut Vec<Dart>, anchor: Dart, new: Dart) {
    let i = list.iter().position(|&d| d == anchor).expect("anchor dart present");
    list.insert(i + 1, new);
}

fn insert_before(list: &mut Vec<Dart>, anchor: Dart, new: Dart) {
    let i = list.iter().position(|&d| d == anchor).expect("anchor dart present");
    list.insert(i, new);
}

/// Edge sets of the biconnected blocks of a simple graph (Hopcroft–Tarjan).
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn visit(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for i in 0..st.adj[u].len() {
            let w = st.adj[u][i];
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                visit(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(edge) = st.stack.pop() {
                        block.push(edge);
                        if edge == (u, w) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    let n = adj.len();
    let mut st = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            visit(&mut st, v, None);
        }
    }
    st.blocks
}

/// Embeds one 2-connected simple block given by its edges. Returns the cyclic
/// neighbour order at each block vertex, or `None` if the block is not planar.
fn embed_block(edges: &[(usize, usize)]) -> Option<BTreeMap<usize, Vec<usize>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
        list.dedup();
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let total_edges = edges.len();

    // initial cycle: an edge plus a shortest detour around it
    let (a0, b0) = (edges[0].0.min(edges[0].1), edges[0].0.max(edges[0].1));
    let path = bfs_path(&adj, a0, |v| v == b0, |u, w| key(u, w) != (a0, b0))?;
    let mut in_h: HashSet<usize> = path.iter().copied().collect();
    let mut h_edges: HashSet<(usize, usize)> = path.windows(2).map(|w| key(w[0], w[1])).collect();
    h_edges.insert((a0, b0));
    let mut faces: Vec<Vec<usize>> = vec![path.clone(), path.iter().rev().copied().collect()];

    while h_edges.len() < total_edges {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            let better = match &best {
                None => true,
                Some((_, _, cur)) => admissible.len() < cur.len(),
            };
            if better {
                let done = admissible.len() == 1;
                best = Some((fi, admissible[0], admissible));
                if done {
                    break;
                }
            }
        }
        let (fi, face_idx, _) = best.expect("fragments exist while edges remain");
        let path = fragments[fi].path(&adj, &in_h, &h_edges);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());

        let face = faces.swap_remove(face_idx);
        let (first, second) = split_face(&face, &path);
        faces.push(first);
        faces.push(second);
    }

    // σ_v(v→u) = v→w for each consecutive u, v, w on a face walk
    let mut next: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            next.insert((v, u), w);
        }
    }
    let mut out = BTreeMap::new();
    for (&v, nbrs) in &adj {
        let mut order = vec![nbrs[0]];
        loop {
            let nxt = next[&(v, *order.last().unwrap())];
            if nxt == nbrs[0] {
                break;
            }
            order.push(nxt);
        }
        debug_assert_eq!(order.len(), nbrs.len());
        out.insert(v, order);
    }
    Some(out)
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut first = Vec::new();
    let mut t = i;
    loop {
        first.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    first.extend(inner.iter().rev());

    let mut second = Vec::new();
    let mut t = j;
    loop {
        second.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    second.extend(inner.iter());
    (first, second)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Either a chord between two embedded vertices or a set of unembedded
    /// vertices forming one component.
    chord: Option<(usize, usize)>,
    interior: HashSet<usize>,
}

impl Fragment {
    /// A path through the fragment joining two distinct attachments.
    fn path(
        &self,
        adj: &BTreeMap<usize, Vec<usize>>,
        in_h: &HashSet<usize>,
        _h_edges: &HashSet<(usize, usize)>,
    ) -> Vec<usize> {
        if let Some((a, b)) = self.chord {
            return vec![a, b];
        }
        let start = self.attachments[0];
        let interior = &self.interior;
        let p = bfs_path(
            adj,
            start,
            |v| v != start && in_h.contains(&v),
            |u, w| (u == start && interior.contains(&w)) || (interior.contains(&u)),
        );
        p.expect("fragment of a 2-connected block has two attachments")
    }
}

fn fragments(
    adj: &BTreeMap<usize, Vec<usize>>,
    in_h: &HashSet<usize>,
    h_edges: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&u, nbrs) in adj {
        if !in_h.contains(&u) {
            continue;
        }
        for &w in nbrs {
            if u < w && in_h.contains(&w) && !h_edges.contains(&(u, w)) {
                out.push(Fragment {
                    attachments: vec![u, w],
                    chord: Some((u, w)),
                    interior: HashSet::new(),
                });
            }
        }
    }
    let mut seen: HashSet<usize> = HashSet::new();
    for &start in adj.keys() {
        if in_h.contains(&start) || seen.contains(&start) {
            continue;
        }
        let mut interior = HashSet::from([start]);
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if in_h.contains(&w) {
                    if !attachments.contains(&w) {
                        attachments.push(w);
                    }
                } else if seen.insert(w) {
                    interior.insert(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            attachments,
            chord: None,
            interior,
        });
    }
    out
}

fn bfs_path(
    adj: &BTreeMap<usize, Vec<usize>>,
    start: usize,
    is_goal: impl Fn(usize) -> bool,
    can_use: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent: HashMap<usize, usize> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if parent.contains_key(&w) || !can_use(u, w) {
                continue;
            }
            parent.insert(w, u);
            if is_goal(w) {
                let mut path = vec![w];
                let mut x = w;
                while x != start {
                    x = parent[&x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Whether the graph stays connected after deleting any one or two vertices
/// (and has at least four vertices). Loops and parallel edges are ignored.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 {
        return false;
    }
    let connected_without = |removed: &[usize]| -> bool {
        let start = (0..n).find(|v| !removed.contains(v)).unwrap();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut count = removed.len() + 1;
        let mut stack = vec![Vertex(start)];
        while let Some(v) = stack.pop() {
            for &d in g.darts_at(v) {
                let w = g.target(d);
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    };
    if !connected_without(&[]) {
        return false;
    }
    for a in 0..n {
        if !connected_without(&[a]) {
            return false;
        }
        for b in a + 1..n {
            if !connected_without(&[a, b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Arc<Graph> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Arc::new(Graph::from_edges(n, &edges).unwrap())
    }

    #[test]
    fn k4_embeds_with_triangular_faces() {
        let s = planar_embed(&complete(4)).unwrap();
        let s = s.scheme().unwrap();
        let faces = s.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        assert!(!planar_embed(&complete(5)).unwrap().is_planar());
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        let k33 = Arc::new(Graph::from_edges(6, &edges).unwrap());
        assert!(!planar_embed(&k33).unwrap().is_planar());
    }

    #[test]
    fn cube_embeds_with_quadrilaterals() {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                if v & bit == 0 {
                    edges.push((v, v | bit));
                }
            }
        }
        let q3 = Arc::new(Graph::from_edges(8, &edges).unwrap());
        let s = planar_embed(&q3).unwrap();
        let faces = s.scheme().unwrap().faces();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn multigraph_extras_are_reinserted() {
        // triangle with a doubled edge, a pendant edge and two loops
        let g = Arc::new(
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 0), (2, 3), (3, 3), (0, 0)])
                .unwrap(),
        );
        let s = planar_embed(&g).unwrap();
        assert_eq!(s.scheme().unwrap().euler_characteristic(), 2);
        let bouquet = Arc::new(Graph::from_edges(1, &[(0, 0), (0, 0)]).unwrap());
        assert!(planar_embed(&bouquet).unwrap().is_planar());
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Arc::new(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(matches!(planar_embed(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn three_connectivity() {
        assert!(is_three_connected(&complete(4)));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_three_connected(&c4));
    }
}
