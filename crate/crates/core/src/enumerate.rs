//! Exhaustive enumeration of rotation systems.
//!
//! The rotation at a vertex of degree `k` is fixed to start at its smallest
//! dart; the remaining `k - 1` darts range over all permutations in
//! lexicographic order, giving `(k-1)!` choices. Schemes are numbered in
//! mixed radix with vertex 0 as the most significant digit, so index order is
//! lexicographic order of the per-vertex choices and any index can be decoded
//! on its own (which is what lets searches shard the range).

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Dart, Graph};
use crate::perm::{factorial, unrank_permutation};
use crate::scheme::EmbeddingScheme;

/// Hard cap on how many items an exhaustive search may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_items: u64,
}

impl Budget {
    pub const DEFAULT_ITEMS: u64 = 1 << 20;

    pub fn new(max_items: u64) -> Self {
        Budget { max_items }
    }

    pub fn unlimited() -> Self {
        Budget { max_items: u64::MAX }
    }

    pub fn check(&self, what: &'static str, estimate: u128) -> Result<()> {
        if estimate > self.max_items as u128 {
            return Err(Error::BudgetExceeded {
                what,
                estimate,
                limit: self.max_items,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_ITEMS)
    }
}

/// `∏_v (deg(v) - 1)!`, saturating.
pub fn rotation_system_count(g: &Graph) -> u128 {
    g.vertices()
        .map(|v| factorial(g.degree(v).saturating_sub(1)))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// All-positive rotation systems of a graph, in index order.
#[derive(Clone, Debug)]
pub struct RotationSystems {
    graph: Arc<Graph>,
    radices: Vec<u128>,
    total: u128,
    next: u128,
}

pub fn enumerate_rotation_systems(graph: &Arc<Graph>, budget: Budget) -> Result<RotationSystems> {
    let total = rotation_system_count(graph);
    budget.check("rotation systems", total)?;
    let radices = graph
        .vertices()
        .map(|v| factorial(graph.degree(v).saturating_sub(1)))
        .collect();
    Ok(RotationSystems {
        graph: graph.clone(),
        radices,
        total,
        next: 0,
    })
}

impl RotationSystems {
    pub fn total(&self) -> u128 {
        self.total
    }

    /// Decodes the scheme with the given index.
    pub fn scheme_at(&self, mut index: u128) -> EmbeddingScheme {
        assert!(index < self.total, "rotation index out of range");
        let g = &*self.graph;
        let n = g.vertex_count();
        let mut digits = vec![0u128; n];
        for v in (0..n).rev() {
            digits[v] = index % self.radices[v];
            index /= self.radices[v];
        }
        let mut succ = vec![Dart(0); g.dart_count()];
        for v in g.vertices() {
            let darts = g.darts_at(v);
            if darts.is_empty() {
                continue;
            }
            let rest = unrank_permutation(darts.len() - 1, digits[v.0] as usize);
            let mut order = Vec::with_capacity(darts.len());
            order.push(darts[0]);
            order.extend(rest.into_iter().map(|i| darts[i + 1]));
            for i in 0..order.len() {
                succ[order[i].0] = order[(i + 1) % order.len()];
            }
        }
        let m = g.edge_count();
        EmbeddingScheme::from_parts(self.graph.clone(), succ, vec![crate::perm::Sign::Plus; m])
    }

    /// Lowest index whose scheme satisfies `pred`, searched in parallel.
    /// Equivalent to the sequential first hit.
    pub fn find_first<T, F>(&self, pred: F) -> Option<(u128, T)>
    where
        T: Send,
        F: Fn(&EmbeddingScheme) -> Option<T> + Sync + Send,
    {
        const CHUNK: u128 = 4096;
        let mut start = 0u128;
        while start < self.total {
            let end = (start + CHUNK * 16).min(self.total);
            let hit = (start as u64..end as u64)
                .into_par_iter()
                .find_map_first(|i| pred(&self.scheme_at(i as u128)).map(|t| (i as u128, t)));
            if hit.is_some() {
                return hit;
            }
            start = end;
        }
        None
    }
}

impl Iterator for RotationSystems {
    type Item = EmbeddingScheme;

    fn next(&mut self) -> Option<EmbeddingScheme> {
        if self.next >= self.total {
            return None;
        }
        let s = self.scheme_at(self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next).min(usize::MAX as u128) as usize;
        (left, Some(left))
    }
}

/// Every all-positive sphere scheme (euler characteristic 2) of a connected
/// graph, in enumeration order.
pub fn sphere_schemes(graph: &Arc<Graph>, budget: Budget) -> Result<Vec<(u128, EmbeddingScheme)>> {
    let systems = enumerate_rotation_systems(graph, budget)?;
    Ok(systems
        .enumerate()
        .filter(|(_, s)| s.euler_characteristic() == 2)
        .map(|(i, s)| (i as u128, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Arc<Graph> {
        Arc::new(
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        )
    }

    #[test]
    fn k4_has_sixteen_rotation_systems_two_spherical() {
        let g = k4();
        let all: Vec<_> = enumerate_rotation_systems(&g, Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 16);
        let spheres: Vec<_> = all.iter().filter(|s| s.euler_characteristic() == 2).collect();
        assert_eq!(spheres.len(), 2);
        assert_eq!(*spheres[0], spheres[1].mirror());
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn path_has_one_rotation_system() {
        let g = Arc::new(Graph::from_edges(2, &[(0, 1)]).unwrap());
        let all: Vec<_> = enumerate_rotation_systems(&g, Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].euler_characteristic(), 2);
    }

    #[test]
    fn budget_is_a_hard_error() {
        let err = enumerate_rotation_systems(&k4(), Budget::new(15)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { estimate: 16, limit: 15, .. }));
    }

    #[test]
    fn parallel_first_hit_matches_sequential() {
        let g = k4();
        let systems = enumerate_rotation_systems(&g, Budget::default()).unwrap();
        let seq = systems
            .clone()
            .position(|s| s.euler_characteristic() == 2)
            .unwrap();
        let (par, _) = systems
            .find_first(|s| (s.euler_characteristic() == 2).then_some(()))
            .unwrap();
        assert_eq!(par, seq as u128);
    }
}
