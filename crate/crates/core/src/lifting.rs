//! Orientation double covers, factoring sphere-over-projective-plane covers
//! through them, and the two-case pipeline for higher covers.

use std::sync::Arc;

use crate::covering::CoverMap;
use crate::covering::CoverKind;
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, Vertex};
use crate::negami::{
    check_pev, check_pev_any_embedding, check_property_e, check_property_v, quotient_embedding, AnyEmbedding,
    PeOutcome, PevCertificate, PevVerdict, PvMode, PvOutcome, QuotientReport,
};
use crate::perm::Sign;
use crate::scheme::{EmbeddingScheme, SurfaceId};

/// The orientable double cover of an embedding scheme. Vertex `(v, ε)` has
/// index `2v` for `ε = +` and `2v + 1` for `ε = -`; edge `e` lifts to edges
/// `2e` (leaving sheet `+`) and `2e + 1` (leaving sheet `-`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationDoubleCover {
    pub scheme: EmbeddingScheme,
    pub projection: CoverMap,
    pub connected: bool,
    base_signature: Vec<Sign>,
}

fn sheet_index(s: Sign) -> usize {
    usize::from(!s.is_plus())
}

impl OrientationDoubleCover {
    pub fn lifted_graph(&self) -> &Arc<Graph> {
        self.scheme.graph_arc()
    }

    pub fn lift_vertex(&self, v: Vertex, sheet: Sign) -> Vertex {
        Vertex(2 * v.0 + sheet_index(sheet))
    }

    /// The lift of base dart `d` leaving sheet `sheet`.
    pub fn lift_dart(&self, d: Dart, sheet: Sign) -> Dart {
        lift_dart(&self.base_signature, d, sheet)
    }
}

fn lift_dart(signature: &[Sign], d: Dart, sheet: Sign) -> Dart {
    let e = d.edge();
    // sheet at the first end of the lifted edge
    let first = if d.end() == 0 { sheet } else { sheet * signature[e.0] };
    Dart(2 * (2 * e.0 + sheet_index(first)) + d.end())
}

pub fn orientation_double_cover(s: &EmbeddingScheme) -> Result<OrientationDoubleCover> {
    let g = s.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let names: Vec<String> = g
        .vertices()
        .flat_map(|v| [format!("{}+", g.name(v)), format!("{}-", g.name(v))])
        .collect();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        let [u, w] = g.endpoints(e);
        for eps in [Sign::Plus, Sign::Minus] {
            let far = eps * s.sign(e);
            edges.push((2 * u.0 + sheet_index(eps), 2 * w.0 + sheet_index(far)));
        }
    }
    let lifted = Arc::new(Graph::with_names(names, &edges)?);
    let signature = s.signature();
    let mut rotation = vec![Vec::new(); lifted.vertex_count()];
    for v in g.vertices() {
        let order = s.rotation_at(v);
        rotation[2 * v.0] = order.iter().map(|&d| lift_dart(signature, d, Sign::Plus)).collect();
        rotation[2 * v.0 + 1] = order.iter().rev().map(|&d| lift_dart(signature, d, Sign::Minus)).collect();
    }
    let scheme = EmbeddingScheme::oriented(lifted.clone(), rotation)?;
    let dart_map = lifted.darts().map(|d| Dart(2 * (d.edge().0 / 2) + d.end())).collect();
    let vertex_map = lifted.vertices().map(|v| Vertex(v.0 / 2)).collect();
    let connected = lifted.is_connected();
    let projection = CoverMap::new(lifted, s.graph_arc().clone(), vertex_map, dart_map)?;
    Ok(OrientationDoubleCover {
        scheme,
        projection,
        connected,
        base_signature: signature.to_vec(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub odc: OrientationDoubleCover,
    /// `ĝ`: source of the original cover onto the lifted base.
    pub lift: CoverMap,
}

/// Factors a cover with projective-plane quotient through the orientation
/// double cover of the quotient scheme: `ĝ(ṽ) = (c(ṽ), sign(ṽ))`.
pub fn factor_through_universal(c: &CoverMap, report: &QuotientReport) -> Result<Factorization> {
    if report.surface != SurfaceId::PROJECTIVE_PLANE {
        return Err(Error::precondition(format!(
            "quotient is {}; only projective-plane quotients factor",
            report.surface
        )));
    }
    if !report.scheme.graph().same_structure(c.target()) || report.signs.signs().len() != c.source().vertex_count() {
        return Err(Error::GraphMismatch("report does not belong to this cover".into()));
    }
    let odc = orientation_double_cover(&report.scheme)?;
    let src = c.source();
    let signs = &report.signs;
    let vertex_map = src
        .vertices()
        .map(|v| odc.lift_vertex(c.map_vertex(v), signs.sign(v)))
        .collect();
    let dart_map = src
        .darts()
        .map(|d| odc.lift_dart(c.map_dart(d), signs.sign(src.origin(d))))
        .collect();
    let lift = CoverMap::new(src.clone(), odc.lifted_graph().clone(), vertex_map, dart_map)?;
    let back = odc.projection.compose(&lift)?;
    if back.dart_map() != c.dart_map() || back.vertex_map() != c.vertex_map() {
        return Err(Error::inconsistent("projection after the lift differs from the cover"));
    }
    Ok(Factorization { odc, lift })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Necessity {
    /// The middle graph embeds in the sphere and `f` itself fulfills both
    /// properties there.
    Case1 {
        scheme: EmbeddingScheme,
        certificate: Box<PevCertificate>,
        /// Set when the quotient-derived scheme failed and another sphere
        /// scheme had to be found by enumeration.
        fallback: bool,
    },
    /// The middle graph embeds in the projective plane and `f` composed with
    /// the orientation double cover fulfills both properties.
    Case2 {
        p2_scheme: EmbeddingScheme,
        odc: Box<OrientationDoubleCover>,
        lifted_cover: CoverMap,
        certificate: Box<PevCertificate>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineRun {
    pub composition: Box<PevCertificate>,
    /// Quotient of `f_tilde` under the composition's signs.
    pub middle: QuotientReport,
    pub outcome: Necessity,
}

/// `f: G̃ → G` unbranched, `f_tilde: G̃̃ → G̃`, `s` a sphere scheme on `G̃̃`
/// under which `f ∘ f_tilde` fulfills both properties.
pub fn necessity_pipeline(
    f: &CoverMap,
    f_tilde: &CoverMap,
    s: &EmbeddingScheme,
    budget: Budget,
) -> Result<PipelineRun> {
    let kind = f.classify().kind;
    if kind != CoverKind::Unbranched {
        return Err(Error::precondition(format!("f must be unbranched, it is {kind}")));
    }
    if !f.source().is_connected() || !f_tilde.source().is_connected() {
        return Err(Error::Disconnected);
    }
    let comp = f.compose(f_tilde)?;
    let composition = match check_pev(&comp, s, PvMode::Dihedral, budget)? {
        PevVerdict::Holds(cert) => cert,
        other => return Err(Error::precondition(format!("composition does not fulfill both properties: {other}"))),
    };

    // the composition's signs are valid for f_tilde and satisfy Property E
    let induced = match check_property_v(f_tilde, s, PvMode::Dihedral)? {
        PvOutcome::Holds(i) => i,
        PvOutcome::Violated(v) => {
            return Err(Error::inconsistent(format!("f_tilde does not inherit property V: {v}")))
        }
    };
    let signs = &composition.signs;
    if !signs.is_valid_for(f_tilde, &induced) {
        return Err(Error::inconsistent("composition signs are not valid for f_tilde"));
    }
    if let PeOutcome::Violated(w) = check_property_e(f_tilde, signs)? {
        return Err(Error::inconsistent(format!("f_tilde does not inherit property E: {w}")));
    }
    let middle = quotient_embedding(f_tilde, &induced, signs)?;

    let outcome = if middle.surface == SurfaceId::SPHERE {
        let scheme = middle.scheme.normalized().expect("sphere quotient is orientable");
        match check_pev(f, &scheme, PvMode::Dihedral, budget)? {
            PevVerdict::Holds(certificate) => Necessity::Case1 {
                scheme,
                certificate,
                fallback: false,
            },
            _ => match check_pev_any_embedding(f, PvMode::Dihedral, budget)? {
                AnyEmbedding::Found { scheme, certificate, .. } => Necessity::Case1 {
                    scheme,
                    certificate,
                    fallback: true,
                },
                AnyEmbedding::Exhausted { .. } => {
                    return Err(Error::inconsistent("middle graph is spherical but f fails on every sphere scheme"))
                }
            },
        }
    } else {
        let odc = orientation_double_cover(&middle.scheme)?;
        let lifted_cover = f.compose(&odc.projection)?;
        match check_pev(&lifted_cover, &odc.scheme, PvMode::Dihedral, budget)? {
            PevVerdict::Holds(certificate) => Necessity::Case2 {
                p2_scheme: middle.scheme.clone(),
                odc: Box::new(odc),
                lifted_cover,
                certificate,
            },
            other => {
                return Err(Error::inconsistent(format!(
                    "lift through the orientation double cover fails: {other}"
                )))
            }
        }
    };
    Ok(PipelineRun {
        composition,
        middle,
        outcome,
    })
}

impl Necessity {
    /// Re-derives the certificate from the stored schemes.
    pub fn verify(&self, f: &CoverMap, budget: Budget) -> Result<()> {
        match self {
            Necessity::Case1 { scheme, certificate, .. } => {
                let again = check_pev(f, scheme, PvMode::Dihedral, budget)?;
                match again.certificate() {
                    Some(c) if c.report == certificate.report => certificate.report.verify(f),
                    _ => Err(Error::inconsistent("case 1 certificate does not re-verify")),
                }
            }
            Necessity::Case2 {
                p2_scheme,
                certificate,
                ..
            } => {
                if p2_scheme.surface_id()? != SurfaceId::PROJECTIVE_PLANE {
                    return Err(Error::inconsistent("case 2 scheme is not projective-planar"));
                }
                let odc = orientation_double_cover(p2_scheme)?;
                let lifted = f.compose(&odc.projection)?;
                let again = check_pev(&lifted, &odc.scheme, PvMode::Dihedral, budget)?;
                match again.certificate() {
                    Some(c) if c.report == certificate.report => certificate.report.verify(&lifted),
                    _ => Err(Error::inconsistent("case 2 certificate does not re-verify")),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{find_cover_isomorphism, z2_voltage_cover};
    use crate::planarity::planar_embed;

    fn k4() -> Arc<Graph> {
        Arc::new(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap())
    }

    #[test]
    fn twisted_triangle_lifts_to_hexagon() {
        let c3 = Arc::new(Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        let rot = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
        let s = EmbeddingScheme::new(c3, rot, vec![Sign::Plus, Sign::Plus, Sign::Minus]).unwrap();
        let odc = orientation_double_cover(&s).unwrap();
        assert!(odc.connected);
        assert_eq!(odc.lifted_graph().vertex_count(), 6);
        assert_eq!(odc.scheme.euler_characteristic(), 2);
        assert_eq!(odc.projection.classify().degree, Some(2));
    }

    #[test]
    fn orientable_base_lifts_to_two_copies() {
        let g = k4();
        let s = planar_embed(&g).unwrap().scheme().unwrap().clone();
        let odc = orientation_double_cover(&s).unwrap();
        assert!(!odc.connected);
        assert_eq!(odc.scheme.euler_characteristic(), 4);
    }

    #[test]
    fn cube_round_trip() {
        let q3 = z2_voltage_cover(&k4(), &[true; 6]).unwrap().cover;
        let s = planar_embed(q3.source()).unwrap().scheme().unwrap().clone();
        let cert = check_pev(&q3, &s, PvMode::Dihedral, Budget::default()).unwrap();
        let report = &cert.certificate().unwrap().report;
        let fac = factor_through_universal(&q3, report).unwrap();
        assert_eq!(fac.lift.classify().degree, Some(1));
        assert!(find_cover_isomorphism(&q3, &fac.odc.projection, Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn pipeline_with_identity_on_top() {
        let q3 = z2_voltage_cover(&k4(), &[true; 6]).unwrap().cover;
        let s = planar_embed(q3.source()).unwrap().scheme().unwrap().clone();
        let id = CoverMap::identity(q3.source().clone());
        let run = necessity_pipeline(&q3, &id, &s, Budget::default()).unwrap();
        assert_eq!(run.middle.surface, SurfaceId::SPHERE);
        assert!(matches!(run.outcome, Necessity::Case1 { fallback: false, .. }));
        run.outcome.verify(&q3, Budget::default()).unwrap();
    }
}
