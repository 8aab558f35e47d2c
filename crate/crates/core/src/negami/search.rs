//! Searches over the sphere embeddings of a cover's source.

use super::{check_pev, PevCertificate, PevVerdict, PvMode};
use crate::covering::{is_regular, CoverMap};
use crate::enumerate::{enumerate_rotation_systems, Budget};
use crate::error::{Error, Result};
use crate::scheme::EmbeddingScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyEmbedding {
    /// The lowest-indexed sphere rotation system under which both
    /// properties hold.
    Found {
        index: u128,
        scheme: EmbeddingScheme,
        certificate: Box<PevCertificate>,
    },
    /// Every sphere rotation system fails.
    Exhausted { rotation_systems: u128, sphere_schemes: u128 },
}

impl AnyEmbedding {
    pub fn found(&self) -> bool {
        matches!(self, AnyEmbedding::Found { .. })
    }
}

/// Runs [`check_pev`] on every sphere rotation system of the source, in
/// enumeration order, and returns the first success.
pub fn check_pev_any_embedding(c: &CoverMap, mode: PvMode, budget: Budget) -> Result<AnyEmbedding> {
    c.require_branched()?;
    if !c.source().is_connected() {
        return Err(Error::Disconnected);
    }
    let systems = enumerate_rotation_systems(c.source(), budget)?;
    let hit = systems.find_first(|s| {
        if s.euler_characteristic() != 2 {
            return None;
        }
        match check_pev(c, s, mode, budget) {
            Ok(PevVerdict::Holds(cert)) => Some(Ok((s.clone(), cert))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match hit {
        Some((index, result)) => {
            let (scheme, certificate) = result?;
            Ok(AnyEmbedding::Found {
                index,
                scheme,
                certificate,
            })
        }
        None => {
            let sphere_schemes = systems.clone().filter(|s| s.euler_characteristic() == 2).count() as u128;
            Ok(AnyEmbedding::Exhausted {
                rotation_systems: systems.total(),
                sphere_schemes,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantFound {
    pub index: u128,
    pub scheme: EmbeddingScheme,
    /// Per deck element (in deck-group order): whether it preserves the
    /// rotation (`true`) or reverses it.
    pub preserving: Vec<bool>,
    pub certificate: Box<PevCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivariant {
    Found(EquivariantFound),
    Exhausted { rotation_systems: u128 },
}

/// A sphere rotation system of a regular cover's source on which every deck
/// transformation either carries the rotation to itself or to its inverse.
/// The result is checked to fulfill both properties; a failure there is
/// reported as an internal inconsistency.
pub fn equivariant_embedding_search(c: &CoverMap, budget: Budget) -> Result<Equivariant> {
    let regularity = is_regular(c, budget)?;
    if !regularity.regular {
        let why = regularity.witness.map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::precondition(format!("cover is not regular: {why}")));
    }
    let deck = regularity.deck;
    let src = c.source().clone();
    let systems = enumerate_rotation_systems(&src, budget)?;
    let hit = systems.find_first(|s| {
        if s.euler_characteristic() != 2 {
            return None;
        }
        let mut preserving = Vec::with_capacity(deck.order());
        for g in deck.elements() {
            let keeps = src.darts().all(|d| g.dart(s.succ(d)) == s.succ(g.dart(d)));
            let flips = src.darts().all(|d| g.dart(s.succ(d)) == s.pred(g.dart(d)));
            if keeps {
                preserving.push(true);
            } else if flips {
                preserving.push(false);
            } else {
                return None;
            }
        }
        Some(preserving)
    });
    let Some((index, preserving)) = hit else {
        return Ok(Equivariant::Exhausted {
            rotation_systems: systems.total(),
        });
    };
    let scheme = systems.scheme_at(index);
    match check_pev(c, &scheme, PvMode::Dihedral, budget)? {
        PevVerdict::Holds(certificate) => Ok(Equivariant::Found(EquivariantFound {
            index,
            scheme,
            preserving,
            certificate,
        })),
        other => Err(Error::inconsistent(format!(
            "deck group acts on rotation system {index} but the cover fails: {other}"
        ))),
    }
}
