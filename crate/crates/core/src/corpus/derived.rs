//! Small examples reconstructed by search, each with a certificate that can
//! be checked again from scratch.

use std::sync::Arc;

use rayon::prelude::*;

use super::{antipodal_cube, bouquet, k4, scrambled_triple_cover};
use crate::covering::{
    enumerate_double_covers, enumerate_permutation_covers, find_cover_isomorphism, is_regular, voltage_cover_from_edges, CoverMap,
};
use crate::enumerate::{enumerate_rotation_systems, sphere_schemes, Budget};
use crate::error::{Error, Result};
use crate::lifting::{orientation_double_cover, OrientationDoubleCover};
use crate::negami::{check_pev, check_pev_any_embedding, AnyEmbedding, PevCertificate, PevVerdict, PvMode};
use crate::perm::{Perm, Sign};
use crate::planarity::is_planar;
use crate::scheme::{EmbeddingScheme, SurfaceId};

/// A cover together with a sphere embedding of its source under which both
/// properties hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedEntry {
    pub name: String,
    pub provenance: String,
    pub cover: CoverMap,
    /// Index of the source rotation system used.
    pub embedding_index: u128,
    pub certificate: PevCertificate,
    pub deck_order: usize,
    pub regular: bool,
}

impl DerivedEntry {
    /// Rebuilds the cover from its parts, recomputes the verdict under the
    /// stored scheme and the deck group, and compares.
    pub fn reverify(&self, budget: Budget) -> Result<()> {
        let c = CoverMap::new(
            self.cover.source().clone(),
            self.cover.target().clone(),
            self.cover.vertex_map().to_vec(),
            self.cover.dart_map().to_vec(),
        )?;
        let verdict = check_pev(&c, &self.certificate.report.source_scheme, PvMode::Dihedral, budget)?;
        match verdict.certificate() {
            Some(cert) if cert.report == self.certificate.report => {}
            _ => return Err(Error::inconsistent(format!("{}: certificate does not re-verify", self.name))),
        }
        self.certificate.report.verify(&c)?;
        let r = is_regular(&c, budget)?;
        if r.deck.order() != self.deck_order || r.regular != self.regular {
            return Err(Error::inconsistent(format!("{}: deck data does not re-verify", self.name)));
        }
        Ok(())
    }
}

/// A cover failing both properties under every sphere embedding, with a
/// projective-plane embedding of its source whose orientation double cover
/// fixes that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaveToLift {
    pub name: String,
    pub cover: CoverMap,
    pub sphere_schemes: u128,
    pub p2_scheme: EmbeddingScheme,
    pub odc: OrientationDoubleCover,
    pub lifted_cover: CoverMap,
    pub certificate: PevCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaveToLiftSearch {
    /// Candidates with planar source that were examined.
    pub candidates: usize,
    /// Names of candidates failing under every sphere embedding.
    pub failing_everywhere: Vec<String>,
    pub found: Option<HaveToLift>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedExamples {
    pub irregular: DerivedEntry,
    pub sphere_double: DerivedEntry,
    pub projective_double: DerivedEntry,
    pub double_cover_survey: Vec<DoubleCoverSurvey>,
    pub have_to_lift: HaveToLiftSearch,
}

fn entry(
    name: &str,
    provenance: String,
    cover: CoverMap,
    index: u128,
    certificate: PevCertificate,
    budget: Budget,
) -> Result<DerivedEntry> {
    let r = is_regular(&cover, budget)?;
    Ok(DerivedEntry {
        name: name.into(),
        provenance,
        cover,
        embedding_index: index,
        certificate,
        deck_order: r.deck.order(),
        regular: r.regular,
    })
}

/// Irregular connected triple cover of the bouquet of two circles fulfilling
/// both properties: the first pair of `S₃` voltages, in lexicographic order,
/// that works.
pub fn irregular_bouquet_cover(budget: Budget) -> Result<Option<DerivedEntry>> {
    let base = Arc::new(bouquet(2));
    let perms = Perm::all(3);
    for a in &perms {
        for b in &perms {
            let vc = voltage_cover_from_edges(&base, 3, &[a.clone(), b.clone()])?;
            if !vc.connected || is_regular(&vc.cover, budget)?.regular {
                continue;
            }
            if let AnyEmbedding::Found { index, certificate, .. } =
                check_pev_any_embedding(&vc.cover, PvMode::Dihedral, budget)?
            {
                let provenance = format!("S3 voltages a -> {a}, b -> {b} on the bouquet of two circles");
                return Ok(Some(entry(
                    "irregular-triple-over-bouquet",
                    provenance,
                    vc.cover,
                    index,
                    *certificate,
                    budget,
                )?));
            }
        }
    }
    Ok(None)
}

/// What one double cover of K₄ admits: sphere rotation indices (of the
/// source) fulfilling both properties, split by quotient surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoverSurvey {
    pub mask: u128,
    pub twisted: Vec<String>,
    /// Isomorphic, as a cover, to the antipodal cube.
    pub antipodal_cube: bool,
    pub sphere_schemes: usize,
    pub sphere_quotient: Vec<u128>,
    pub projective_quotient: Vec<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4DoubleCovers {
    pub survey: Vec<DoubleCoverSurvey>,
    /// First hit with sphere quotient.
    pub sphere: Option<DerivedEntry>,
    /// First hit with projective-plane quotient on the antipodal cube.
    pub projective: Option<DerivedEntry>,
}

/// Every connected double cover of K₄ against every sphere rotation system
/// of its source.
pub fn k4_double_cover_witnesses(budget: Budget) -> Result<K4DoubleCovers> {
    let base = Arc::new(k4());
    let cube = antipodal_cube();
    let mut out = K4DoubleCovers {
        survey: Vec::new(),
        sphere: None,
        projective: None,
    };
    for dc in enumerate_double_covers(&base) {
        let cover = dc.cover.cover.clone();
        if !is_planar(cover.source())? {
            continue;
        }
        let twisted: Vec<String> = dc
            .twisted_edges()
            .into_iter()
            .map(|e| {
                let [u, w] = base.endpoints(e);
                format!("{}{}", base.name(u), base.name(w))
            })
            .collect();
        let mut row = DoubleCoverSurvey {
            mask: dc.mask,
            antipodal_cube: find_cover_isomorphism(&cover, &cube, budget)?.is_some(),
            twisted,
            sphere_schemes: 0,
            sphere_quotient: Vec::new(),
            projective_quotient: Vec::new(),
        };
        for (index, s) in sphere_schemes(cover.source(), budget)? {
            row.sphere_schemes += 1;
            let PevVerdict::Holds(cert) = check_pev(&cover, &s, PvMode::Dihedral, budget)? else {
                continue;
            };
            let provenance = format!("swap voltage on edges {} of K4", row.twisted.join(", "));
            if cert.report.surface == SurfaceId::SPHERE {
                row.sphere_quotient.push(index);
                if out.sphere.is_none() {
                    out.sphere = Some(entry("double-over-k4-sphere", provenance, cover.clone(), index, *cert, budget)?);
                }
            } else {
                row.projective_quotient.push(index);
                if out.projective.is_none() && row.antipodal_cube {
                    out.projective =
                        Some(entry("double-over-k4-projective", provenance, cover.clone(), index, *cert, budget)?);
                }
            }
        }
        out.survey.push(row);
    }
    Ok(out)
}

/// Looks for a projective-plane scheme on the source of `f` whose orientation
/// double cover, composed with `f`, fulfills both properties. Signatures are
/// taken modulo vertex flips: spanning-tree edges stay positive.
fn projective_lift(f: &CoverMap, budget: Budget) -> Result<Option<(EmbeddingScheme, OrientationDoubleCover, CoverMap, PevCertificate)>> {
    let g = f.source();
    let cotree = g.cotree_edges();
    let patterns = 1u128 << cotree.len();
    let systems = enumerate_rotation_systems(g, budget)?;
    budget.check("projective schemes", systems.total().saturating_mul(patterns))?;
    let hit = systems.find_first(|rot| {
        for mask in 0..patterns {
            let mut signature = vec![Sign::Plus; g.edge_count()];
            for (i, e) in cotree.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    signature[e.0] = Sign::Minus;
                }
            }
            let s = EmbeddingScheme::new(g.clone(), rot.rotations(), signature).expect("valid");
            if s.euler_characteristic() != 1 {
                continue;
            }
            let result = (|| {
                let odc = orientation_double_cover(&s)?;
                let lifted = f.compose(&odc.projection)?;
                let verdict = check_pev(&lifted, &odc.scheme, PvMode::Dihedral, budget)?;
                Ok::<_, Error>(match verdict {
                    PevVerdict::Holds(cert) => Some((s.clone(), odc, lifted, *cert)),
                    _ => None,
                })
            })();
            match result {
                Ok(Some(found)) => return Some(Ok(found)),
                Ok(None) => {}
                Err(e) => return Some(Err(e)),
            }
        }
        None
    });
    hit.map(|(_, r)| r).transpose()
}

/// Candidates: connected unbranched triple covers of K₄ from `S₃` cotree
/// voltages with planar source, then the scrambled branched triple cover.
/// A candidate qualifies when both properties fail under every sphere
/// embedding; the first qualifying candidate with a working projective lift
/// is returned.
pub fn have_to_lift_search(budget: Budget) -> Result<HaveToLiftSearch> {
    let base = Arc::new(k4());
    let covers = enumerate_permutation_covers(&base, 3, budget)?;
    let mut candidates: Vec<(String, CoverMap)> = Vec::new();
    for (index, vc) in covers.connected() {
        if is_planar(vc.cover.source())? {
            let names: Vec<String> = covers.voltages_at(index).iter().map(|p| p.to_string()).collect();
            candidates.push((format!("S3 cotree voltages {} on K4", names.join(" ")), vc.cover));
        }
    }
    candidates.push(("scrambled branched triple cover of K4".into(), scrambled_triple_cover()));

    let outcomes: Vec<Result<Option<u128>>> = candidates
        .par_iter()
        .map(|(_, c)| match check_pev_any_embedding(c, PvMode::Dihedral, budget)? {
            AnyEmbedding::Found { .. } => Ok(None),
            AnyEmbedding::Exhausted { sphere_schemes, .. } => Ok(Some(sphere_schemes)),
        })
        .collect();
    let mut failing = Vec::new();
    for ((name, c), outcome) in candidates.iter().zip(outcomes) {
        if let Some(n) = outcome? {
            failing.push((name.clone(), c.clone(), n));
        }
    }

    let mut found = None;
    for (name, c, sphere_schemes) in &failing {
        if let Some((p2_scheme, odc, lifted_cover, certificate)) = projective_lift(c, budget)? {
            found = Some(HaveToLift {
                name: name.clone(),
                cover: c.clone(),
                sphere_schemes: *sphere_schemes,
                p2_scheme,
                odc,
                lifted_cover,
                certificate,
            });
            break;
        }
    }
    Ok(HaveToLiftSearch {
        candidates: candidates.len(),
        failing_everywhere: failing.into_iter().map(|(n, _, _)| n).collect(),
        found,
    })
}

pub fn derived_examples(budget: Budget) -> Result<DerivedExamples> {
    let missing = |what: &str| Error::inconsistent(format!("search found no {what}"));
    let irregular = irregular_bouquet_cover(budget)?.ok_or_else(|| missing("irregular bouquet cover"))?;
    let doubles = k4_double_cover_witnesses(budget)?;
    Ok(DerivedExamples {
        irregular,
        sphere_double: doubles.sphere.clone().ok_or_else(|| missing("double cover of K4 with sphere quotient"))?,
        projective_double: doubles
            .projective
            .clone()
            .ok_or_else(|| missing("antipodal cube with projective quotient"))?,
        double_cover_survey: doubles.survey,
        have_to_lift: have_to_lift_search(budget)?,
    })
}
