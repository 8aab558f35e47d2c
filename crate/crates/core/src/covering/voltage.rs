//! Derived covers from permutation voltages on darts.
//!
//! Vertex `(v, i)` of the derived graph has index `v * m + i` and name
//! `"<v>.<i+1>"`. Edge `e` lifts to edges `e * m + i` running from
//! `(origin(2e), i)` to `(origin(2e+1), α(2e)(i))`.

use std::sync::Arc;

use super::CoverMap;
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};
use crate::perm::{factorial, unrank_permutation, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageCover {
    pub cover: CoverMap,
    /// One permutation per dart of the base graph.
    pub voltages: Vec<Perm>,
    pub connected: bool,
}

impl VoltageCover {
    pub fn fiber_size(&self) -> usize {
        self.voltages.first().map_or(0, Perm::degree)
    }

    /// Whether the group generated by the voltages acts transitively on the
    /// fiber.
    pub fn monodromy_transitive(&self) -> bool {
        let m = self.fiber_size();
        if m == 0 {
            return true;
        }
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for p in &self.voltages {
                let j = p.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn voltage_cover(g: &Arc<Graph>, fiber_size: usize, voltages: Vec<Perm>) -> Result<VoltageCover> {
    let m = fiber_size;
    if m == 0 {
        return Err(Error::InvalidVoltage("fiber size must be positive".into()));
    }
    if voltages.len() != g.dart_count() {
        return Err(Error::InvalidVoltage(format!(
            "expected {} dart voltages, got {}",
            g.dart_count(),
            voltages.len()
        )));
    }
    for (i, p) in voltages.iter().enumerate() {
        if p.degree() != m {
            return Err(Error::InvalidVoltage(format!(
                "voltage on {} acts on {} points, expected {m}",
                Dart(i),
                p.degree()
            )));
        }
    }
    for e in g.edges() {
        let [d0, d1] = e.darts();
        if voltages[d1.0] != voltages[d0.0].inverse() {
            return Err(Error::InvalidVoltage(format!(
                "voltages on {d0} and {d1} are not mutually inverse"
            )));
        }
    }

    let names = g
        .vertices()
        .flat_map(|v| (0..m).map(move |i| (v, i)))
        .map(|(v, i)| format!("{}.{}", g.name(v), i + 1))
        .collect();
    let mut edges = Vec::with_capacity(g.edge_count() * m);
    let mut dart_map = Vec::with_capacity(g.dart_count() * m);
    for e in g.edges() {
        let [u, w] = g.endpoints(e);
        let [d0, d1] = e.darts();
        for i in 0..m {
            edges.push((u.0 * m + i, w.0 * m + voltages[d0.0].apply(i)));
            dart_map.push(d0);
            dart_map.push(d1);
        }
    }
    let source = Arc::new(Graph::with_names(names, &edges)?);
    let vertex_map = source.vertices().map(|v| Vertex(v.0 / m)).collect();
    let connected = source.is_connected();
    let cover = CoverMap::new(source, g.clone(), vertex_map, dart_map)?;
    Ok(VoltageCover {
        cover,
        voltages,
        connected,
    })
}

/// Voltages given per edge, on the dart `2e`; the reverse dart gets the inverse.
pub fn voltage_cover_from_edges(g: &Arc<Graph>, fiber_size: usize, edge_voltages: &[Perm]) -> Result<VoltageCover> {
    if edge_voltages.len() != g.edge_count() {
        return Err(Error::InvalidVoltage(format!(
            "expected {} edge voltages, got {}",
            g.edge_count(),
            edge_voltages.len()
        )));
    }
    let voltages = edge_voltages
        .iter()
        .flat_map(|p| [p.clone(), p.inverse()])
        .collect();
    voltage_cover(g, fiber_size, voltages)
}

/// Double cover with the swap on every edge flagged `true`.
pub fn z2_voltage_cover(g: &Arc<Graph>, twisted: &[bool]) -> Result<VoltageCover> {
    let swap = Perm::from_images(vec![1, 0]).expect("valid");
    let id = Perm::identity(2);
    let perms: Vec<Perm> = twisted
        .iter()
        .map(|&t| if t { swap.clone() } else { id.clone() })
        .collect();
    voltage_cover_from_edges(g, 2, &perms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCover {
    /// Bit `i` set means cotree edge `i` carries the swap.
    pub mask: u128,
    pub cotree: Vec<Edge>,
    pub cover: VoltageCover,
}

impl DoubleCover {
    pub fn twisted_edges(&self) -> Vec<Edge> {
        self.cotree
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }
}

/// Connected double covers, one per nonzero Z₂ voltage on the cotree of the
/// breadth-first spanning tree, in increasing mask order.
pub fn enumerate_double_covers(g: &Arc<Graph>) -> impl Iterator<Item = DoubleCover> + '_ {
    let cotree = g.cotree_edges();
    let k = cotree.len();
    assert!(k < 128, "cycle rank too large to enumerate");
    let total: u128 = 1 << k;
    (1..total).map(move |mask| {
        let mut twisted = vec![false; g.edge_count()];
        for (i, e) in cotree.iter().enumerate() {
            twisted[e.0] = mask >> i & 1 == 1;
        }
        let cover = z2_voltage_cover(g, &twisted).expect("Z2 voltages are valid");
        debug_assert!(cover.connected, "nonzero cotree voltage gives a connected cover");
        DoubleCover {
            mask,
            cotree: cotree.clone(),
            cover,
        }
    })
}

/// Permutation voltages in `S_d` on cotree edges (identity on the spanning
/// tree). Index `k` decodes in mixed radix `d!` with cotree edge 0 most
/// significant, each digit a lexicographic permutation rank.
#[derive(Clone, Debug)]
pub struct PermutationCovers {
    graph: Arc<Graph>,
    degree: usize,
    cotree: Vec<Edge>,
    total: u128,
}

pub fn enumerate_permutation_covers(g: &Arc<Graph>, degree: usize, budget: Budget) -> Result<PermutationCovers> {
    if degree == 0 {
        return Err(Error::InvalidVoltage("degree must be positive".into()));
    }
    let cotree = g.cotree_edges();
    let radix = factorial(degree);
    let total = cotree
        .iter()
        .try_fold(1u128, |acc, _| acc.checked_mul(radix))
        .unwrap_or(u128::MAX);
    budget.check("permutation voltage assignments", total)?;
    Ok(PermutationCovers {
        graph: g.clone(),
        degree,
        cotree,
        total,
    })
}

impl PermutationCovers {
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cotree(&self) -> &[Edge] {
        &self.cotree
    }

    /// The cotree voltages for an index.
    pub fn voltages_at(&self, mut index: u128) -> Vec<Perm> {
        assert!(index < self.total, "voltage index out of range");
        let radix = factorial(self.degree);
        let mut digits = vec![0u128; self.cotree.len()];
        for i in (0..self.cotree.len()).rev() {
            digits[i] = index % radix;
            index /= radix;
        }
        digits
            .into_iter()
            .map(|k| Perm::from_images(unrank_permutation(self.degree, k as usize)).expect("valid"))
            .collect()
    }

    /// The derived cover for an index, connected or not.
    pub fn cover_at(&self, index: u128) -> VoltageCover {
        let mut edge_voltages = vec![Perm::identity(self.degree); self.graph.edge_count()];
        for (e, p) in self.cotree.iter().zip(self.voltages_at(index)) {
            edge_voltages[e.0] = p;
        }
        voltage_cover_from_edges(&self.graph, self.degree, &edge_voltages).expect("voltages are valid")
    }

    /// Connected covers with their indices, in index order.
    pub fn connected(&self) -> impl Iterator<Item = (u128, VoltageCover)> + '_ {
        (0..self.total)
            .map(|i| (i, self.cover_at(i)))
            .filter(|(_, c)| c.connected)
    }
}
