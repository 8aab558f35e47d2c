//! The embedding of the base induced by a cover fulfilling both properties.
//!
//! The map `(d̃, s) ↦ (φ(d̃), s·sign(origin d̃))` carries face-tracing steps of
//! the source to steps of the quotient, so every source face walk wraps some
//! quotient face walk `k` times. Those windings feed the Euler identity
//! `2 = n·χ(F) − Σ(d(ṽ) − 1) − Σ(k − 1)`.

use super::{check_property_e, reversed_cycle, InducedOrder, PeOutcome, SignAssignment};
use crate::covering::CoverMap;
use crate::error::{Error, Result};
use crate::graph::{Dart, Vertex};
use crate::perm::Sign;
use crate::scheme::{EmbeddingScheme, SurfaceId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerTerms {
    pub source_chi: i64,
    pub degree: usize,
    pub quotient_chi: i64,
    /// `Σ (d(ṽ) − 1)` over singular vertices.
    pub vertex_defect: usize,
    /// `Σ (k − 1)` over source faces.
    pub face_defect: usize,
}

impl EulerTerms {
    pub fn rhs(&self) -> i64 {
        self.degree as i64 * self.quotient_chi - self.vertex_defect as i64 - self.face_defect as i64
    }

    pub fn holds(&self) -> bool {
        self.source_chi == self.rhs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    /// The normalized sphere scheme on the source.
    pub source_scheme: EmbeddingScheme,
    pub signs: SignAssignment,
    /// The induced scheme on the base.
    pub scheme: EmbeddingScheme,
    pub surface: SurfaceId,
    /// Sphere if no fiber has mixed signs, projective plane otherwise.
    pub sign_verdict: SurfaceId,
    pub degree: usize,
    /// Per source face (in tracing order of `source_scheme`): the quotient
    /// face it wraps and how many times.
    pub face_image: Vec<usize>,
    pub windings: Vec<usize>,
    /// Singular source vertices with their local degrees.
    pub singular: Vec<(Vertex, usize)>,
    pub euler: EulerTerms,
}

/// Sphere when no fiber has mixed signs, projective plane when every fiber
/// does. A cover with some but not all fibers mixed is reported as an
/// internal inconsistency.
pub fn surface_from_signs(c: &CoverMap, signs: &SignAssignment) -> Result<SurfaceId> {
    let mut mixed = 0;
    let fibers = c.vertex_fibers();
    for fiber in &fibers {
        let plus = fiber.iter().filter(|v| signs.sign(**v).is_plus()).count();
        if plus != 0 && plus != fiber.len() {
            mixed += 1;
        }
    }
    if mixed == 0 {
        Ok(SurfaceId::SPHERE)
    } else if mixed == fibers.len() {
        Ok(SurfaceId::PROJECTIVE_PLANE)
    } else {
        Err(Error::inconsistent(format!(
            "{mixed} of {} fibers carry both signs; expected none or all",
            fibers.len()
        )))
    }
}

pub fn quotient_embedding(c: &CoverMap, induced: &InducedOrder, signs: &SignAssignment) -> Result<QuotientReport> {
    let class = c.require_branched()?;
    let n = class.degree.expect("branched covers have a degree");
    if !signs.is_valid_for(c, induced) {
        return Err(Error::precondition("sign assignment is not valid for the induced orders"));
    }
    if let PeOutcome::Violated(w) = check_property_e(c, signs)? {
        return Err(Error::precondition(w.to_string()));
    }
    let src = c.source();
    let base = c.target();

    // rotation from a plus preimage, or the reversed order of a minus one
    let mut rotation = Vec::with_capacity(base.vertex_count());
    for fiber in c.vertex_fibers() {
        let order = match fiber.iter().find(|v| signs.sign(**v).is_plus()) {
            Some(p) => induced.local[p.0].clone(),
            None => reversed_cycle(&induced.local[fiber[0].0]),
        };
        rotation.push(order);
    }
    let mut signature = Vec::with_capacity(base.edge_count());
    for fiber in c.edge_fibers() {
        let [u, w] = src.endpoints(fiber[0]);
        signature.push(signs.sign(u) * signs.sign(w));
    }
    let scheme = EmbeddingScheme::new(base.clone(), rotation, signature)?;
    let surface = scheme.surface_id()?;
    let sign_verdict = surface_from_signs(c, signs)?;

    let project = |d: Dart, s: Sign| (c.map_dart(d), s * signs.sign(src.origin(d)));
    let source_faces = induced.scheme.faces();
    let q_trace = scheme.trace_faces();
    let mut face_image = Vec::with_capacity(source_faces.len());
    let mut windings = Vec::with_capacity(source_faces.len());
    for (i, face) in source_faces.iter().enumerate() {
        let states: Vec<(Dart, Sign)> = face.darts.iter().zip(&face.sides).map(|(&d, &s)| project(d, s)).collect();
        for j in 0..states.len() {
            let next = states[(j + 1) % states.len()];
            if scheme.step(states[j].0, states[j].1) != next {
                return Err(Error::inconsistent(format!(
                    "source face {i} does not project onto a face walk at position {j}"
                )));
            }
        }
        let (qf, _, _) = q_trace.locate(states[0].0, states[0].1);
        let len = q_trace.faces[qf].len();
        if !states.len().is_multiple_of(len) {
            return Err(Error::inconsistent(format!(
                "source face {i} of length {} wraps quotient face {qf} of length {len} a non-integral number of times",
                states.len()
            )));
        }
        face_image.push(qf);
        windings.push(states.len() / len);
    }

    let mut per_face = vec![0usize; q_trace.faces.len()];
    for (f, k) in face_image.iter().zip(&windings) {
        per_face[*f] += k;
    }
    if let Some((f, total)) = per_face.iter().enumerate().find(|(_, t)| **t != n) {
        return Err(Error::inconsistent(format!(
            "quotient face {f} is covered with total winding {total}, expected {n}"
        )));
    }

    let singular: Vec<(Vertex, usize)> = class.singular.iter().map(|&v| (v, class.local_degree[v.0])).collect();
    let euler = EulerTerms {
        source_chi: induced.scheme.euler_characteristic(),
        degree: n,
        quotient_chi: surface.euler_characteristic(),
        vertex_defect: singular.iter().map(|(_, d)| d - 1).sum(),
        face_defect: windings.iter().map(|k| k - 1).sum(),
    };
    if !euler.holds() {
        return Err(Error::inconsistent(format!(
            "euler identity fails: {} ≠ {}·{} − {} − {}",
            euler.source_chi, n, euler.quotient_chi, euler.vertex_defect, euler.face_defect
        )));
    }
    let chi = surface.euler_characteristic();
    if !(chi == 1 || chi == 2) || surface.orientable() != (chi == 2) {
        return Err(Error::inconsistent(format!("quotient surface is {surface}")));
    }
    if sign_verdict != surface {
        return Err(Error::inconsistent(format!(
            "signs say {sign_verdict} but the quotient scheme is {surface}"
        )));
    }
    Ok(QuotientReport {
        source_scheme: induced.scheme.clone(),
        signs: signs.clone(),
        scheme,
        surface,
        sign_verdict,
        degree: n,
        face_image,
        windings,
        singular,
        euler,
    })
}

impl QuotientReport {
    /// Recomputes the report from its source scheme and signs and compares.
    pub fn verify(&self, c: &CoverMap) -> Result<()> {
        let induced = match super::check_property_v(c, &self.source_scheme, super::PvMode::Dihedral)? {
            super::PvOutcome::Holds(i) => i,
            super::PvOutcome::Violated(v) => return Err(Error::inconsistent(v.to_string())),
        };
        let again = quotient_embedding(c, &induced, &self.signs)?;
        if &again != self {
            return Err(Error::inconsistent("report does not match its recomputation"));
        }
        Ok(())
    }
}
