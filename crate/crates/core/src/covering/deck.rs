use std::fmt;

use super::CoverMap;
use crate::automorphism::{find_isomorphism_with, isomorphisms_with, Automorphism, Isomorphism};
use crate::enumerate::Budget;
use crate::error::Result;
use crate::graph::{Edge, Vertex};

/// Automorphisms `γ` of the source with `φ ∘ γ = φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckGroup {
    elements: Vec<Automorphism>,
}

impl DeckGroup {
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

pub fn deck_group(c: &CoverMap, budget: Budget) -> Result<DeckGroup> {
    let src = c.source();
    let elements = isomorphisms_with(src, src, budget, |d, img| c.map_dart(d) == c.map_dart(img))?;
    Ok(DeckGroup { elements })
}

/// A graph isomorphism between the sources of two covers of the same base
/// that commutes with the projections.
pub fn find_cover_isomorphism(a: &CoverMap, b: &CoverMap, budget: Budget) -> Result<Option<Isomorphism>> {
    if !a.target().same_structure(b.target()) {
        return Ok(None);
    }
    find_isomorphism_with(a.source(), b.source(), budget, |d, img| a.map_dart(d) == b.map_dart(img))
}

/// An element of a fiber the deck group cannot reach from the fiber's first
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberWitness {
    Vertex { base: Vertex, from: Vertex, unreachable: Vertex },
    Edge { base: Edge, from: Edge, unreachable: Edge },
}

impl fmt::Display for FiberWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberWitness::Vertex { base, from, unreachable } => write!(
                f,
                "no deck transformation maps {from} to {unreachable} (fiber over {base})"
            ),
            FiberWitness::Edge { base, from, unreachable } => write!(
                f,
                "no deck transformation maps {from} to {unreachable} (fiber over {base})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    pub deck: DeckGroup,
    pub witness: Option<FiberWitness>,
}

/// Regular means transitive on every vertex fiber and every edge fiber.
pub fn is_regular(c: &CoverMap, budget: Budget) -> Result<Regularity> {
    let deck = deck_group(c, budget)?;
    let mut witness = None;
    'vertices: for (base, fiber) in c.vertex_fibers().into_iter().enumerate() {
        let Some(&from) = fiber.first() else { continue };
        for &v in &fiber {
            if !deck.elements.iter().any(|g| g.vertex(from) == v) {
                witness = Some(FiberWitness::Vertex {
                    base: Vertex(base),
                    from,
                    unreachable: v,
                });
                break 'vertices;
            }
        }
    }
    if witness.is_none() {
        'edges: for (base, fiber) in c.edge_fibers().into_iter().enumerate() {
            let Some(&from) = fiber.first() else { continue };
            for &e in &fiber {
                if !deck.elements.iter().any(|g| g.edge(from) == e) {
                    witness = Some(FiberWitness::Edge {
                        base: Edge(base),
                        from,
                        unreachable: e,
                    });
                    break 'edges;
                }
            }
        }
    }
    Ok(Regularity {
        regular: witness.is_none(),
        deck,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::covering::{voltage_cover_from_edges, z2_voltage_cover};
    use crate::graph::Graph;
    use crate::perm::Perm;

    #[test]
    fn antipodal_cube_is_regular_of_order_two() {
        let k4 = Arc::new(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap());
        let q3 = z2_voltage_cover(&k4, &[true; 6]).unwrap();
        let r = is_regular(&q3.cover, Budget::default()).unwrap();
        assert!(r.regular);
        assert_eq!(r.deck.order(), 2);
    }

    #[test]
    fn s3_bouquet_cover_is_irregular() {
        let b = Arc::new(Graph::from_edges(1, &[(0, 0), (0, 0)]).unwrap());
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let cover = voltage_cover_from_edges(&b, 3, &[a, c]).unwrap();
        assert!(cover.connected);
        let r = is_regular(&cover.cover, Budget::default()).unwrap();
        assert!(r.deck.is_trivial());
        assert!(!r.regular);
        assert!(r.witness.is_some());
    }
}
