//! Property V, valid sign assignments and Property E for a cover whose source
//! is embedded in the sphere, and the quotient embedding they induce.
//!
//! Property V at a source vertex `ṽ` of local degree `d` over `v`: reading the
//! rotation at `ṽ` through the cover gives a word `u^d`, where `u` lists each
//! dart at `v` once. Across a fiber the orders `u` must agree, up to reversal
//! in the default [`PvMode::Dihedral`] reading, exactly in [`PvMode::Strict`].
//! Signs record which preimages read `u(v)` forwards and which backwards.

mod quotient;
mod search;

use std::fmt;

use crate::covering::CoverMap;
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, Vertex};
use crate::perm::Sign;
use crate::scheme::{EmbeddingScheme, SurfaceId};

pub use quotient::{quotient_embedding, surface_from_signs, EulerTerms, QuotientReport};
pub use search::{
    check_pev_any_embedding, equivariant_embedding_search, AnyEmbedding, Equivariant,
    EquivariantFound,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PvMode {
    /// Orders across a fiber agree up to reversal.
    #[default]
    Dihedral,
    /// Orders across a fiber must be literally equal.
    Strict,
}

/// How a preimage's order compares with the fiber's reference order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alignment {
    Aligned,
    Reversed,
    /// The order equals its own reversal (degree at most 2).
    Ambiguous,
}

/// The cyclic orders induced on the base by a sphere embedding of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedOrder {
    /// Normalized all-positive source scheme the orders were read from.
    pub scheme: EmbeddingScheme,
    /// Per source vertex: its order `u`, in its own counterclockwise sense.
    pub local: Vec<Vec<Dart>>,
    /// Per base vertex: the lowest-numbered preimage, whose order is `u(v)`.
    pub reference: Vec<Vertex>,
    /// Per base vertex: `u(v)`, starting at its smallest dart.
    pub orders: Vec<Vec<Dart>>,
    /// Per source vertex.
    pub alignment: Vec<Alignment>,
    pub mode: PvMode,
}

impl InducedOrder {
    pub fn ambiguous_vertices(&self) -> Vec<Vertex> {
        self.alignment
            .iter()
            .enumerate()
            .filter(|(_, a)| **a == Alignment::Ambiguous)
            .map(|(i, _)| Vertex(i))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PvViolationKind {
    /// The projected word is not a power of a cyclic order.
    NotPeriodic,
    /// The order differs from the one induced at `reference`.
    DiffersAcrossFiber { reference: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvViolation {
    pub vertex: Vertex,
    pub kind: PvViolationKind,
    /// The rotation at `vertex` read through the cover.
    pub word: Vec<Dart>,
    /// Neighbour names along `word`, for display.
    pub word_names: Vec<String>,
    pub vertex_name: String,
}

impl fmt::Display for PvViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.word_names.join(" ");
        match &self.kind {
            PvViolationKind::NotPeriodic => write!(
                f,
                "property V fails at `{}`: neighbours project in the order ({word}), which is not a repeated cyclic order",
                self.vertex_name
            ),
            PvViolationKind::DiffersAcrossFiber { reference } => write!(
                f,
                "property V fails at `{}`: neighbours project in the order ({word}), which differs from the order at {reference}",
                self.vertex_name
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PvOutcome {
    Holds(Box<InducedOrder>),
    Violated(PvViolation),
}

/// Rotates a cyclic word to start at its smallest entry.
pub(crate) fn canonical_cycle(word: &[Dart]) -> Vec<Dart> {
    let Some(start) = word.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) else {
        return Vec::new();
    };
    word[start..].iter().chain(&word[..start]).copied().collect()
}

pub(crate) fn reversed_cycle(word: &[Dart]) -> Vec<Dart> {
    word.iter().rev().copied().collect()
}

/// Checks the source is connected and `s` is a sphere scheme on it, and
/// returns `s` normalized to all-positive signature.
pub(crate) fn sphere_source(c: &CoverMap, s: &EmbeddingScheme) -> Result<EmbeddingScheme> {
    if !s.graph().same_structure(c.source()) {
        return Err(Error::GraphMismatch("scheme is not on the cover's source graph".into()));
    }
    if !c.source().is_connected() {
        return Err(Error::Disconnected);
    }
    let chi = s.euler_characteristic();
    match s.normalized() {
        Some(n) if chi == 2 => Ok(n),
        other => Err(Error::NotSphere {
            euler_characteristic: chi,
            orientable: other.is_some(),
        }),
    }
}

fn names_of(g: &Graph, word: &[Dart]) -> Vec<String> {
    word.iter().map(|&d| g.name(g.target(d)).to_string()).collect()
}

pub fn check_property_v(c: &CoverMap, s: &EmbeddingScheme, mode: PvMode) -> Result<PvOutcome> {
    let class = c.require_branched()?;
    let scheme = sphere_source(c, s)?;
    let src = c.source();
    let base = c.target();

    let mut local = Vec::with_capacity(src.vertex_count());
    for v in src.vertices() {
        let word: Vec<Dart> = scheme.rotation_at(v).into_iter().map(|d| c.map_dart(d)).collect();
        let k = base.degree(c.map_vertex(v));
        let periodic = k == 0
            || (word.len() == k * class.local_degree[v.0] && (k..word.len()).all(|i| word[i] == word[i - k]));
        if !periodic {
            return Ok(PvOutcome::Violated(PvViolation {
                vertex: v,
                kind: PvViolationKind::NotPeriodic,
                word_names: names_of(base, &word),
                vertex_name: src.name(v).to_string(),
                word,
            }));
        }
        local.push(word[..k].to_vec());
    }

    let fibers = c.vertex_fibers();
    let mut reference = Vec::with_capacity(fibers.len());
    let mut orders = Vec::with_capacity(fibers.len());
    let mut alignment = vec![Alignment::Ambiguous; src.vertex_count()];
    for (b, fiber) in fibers.iter().enumerate() {
        let r = fiber[0];
        let u = canonical_cycle(&local[r.0]);
        let symmetric = u.len() <= 2;
        for &w in fiber {
            let mine = canonical_cycle(&local[w.0]);
            let flipped = canonical_cycle(&reversed_cycle(&local[w.0]));
            let a = if symmetric {
                Alignment::Ambiguous
            } else if mine == u {
                Alignment::Aligned
            } else if flipped == u && mode == PvMode::Dihedral {
                Alignment::Reversed
            } else {
                let word: Vec<Dart> = scheme.rotation_at(w).into_iter().map(|d| c.map_dart(d)).collect();
                return Ok(PvOutcome::Violated(PvViolation {
                    vertex: w,
                    kind: PvViolationKind::DiffersAcrossFiber { reference: r },
                    word_names: names_of(base, &word),
                    vertex_name: src.name(w).to_string(),
                    word,
                }));
            };
            alignment[w.0] = a;
        }
        debug_assert_eq!(c.map_vertex(r), Vertex(b));
        reference.push(r);
        orders.push(u);
    }

    Ok(PvOutcome::Holds(Box::new(InducedOrder {
        scheme,
        local,
        reference,
        orders,
        alignment,
        mode,
    })))
}

/// `±1` per source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    signs: Vec<Sign>,
    ambiguous: Vec<Vertex>,
}

impl SignAssignment {
    pub fn new(signs: Vec<Sign>, ambiguous: Vec<Vertex>) -> Self {
        SignAssignment { signs, ambiguous }
    }

    pub fn sign(&self, v: Vertex) -> Sign {
        self.signs[v.0]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Vertices whose sign was not forced by the induced orders.
    pub fn ambiguous(&self) -> &[Vertex] {
        &self.ambiguous
    }

    pub fn all_plus(&self) -> bool {
        self.signs.iter().all(|s| s.is_plus())
    }

    /// Flips every sign over one base vertex.
    pub fn flip_fiber(&self, c: &CoverMap, base: Vertex) -> SignAssignment {
        let mut out = self.clone();
        for v in c.source().vertices() {
            if c.map_vertex(v) == base {
                out.signs[v.0] = -out.signs[v.0];
            }
        }
        out
    }

    /// Whether the signs agree with the alignments: two preimages of a vertex
    /// carry equal signs iff their orders agree. Ambiguous vertices are free.
    pub fn is_valid_for(&self, c: &CoverMap, induced: &InducedOrder) -> bool {
        if self.signs.len() != induced.alignment.len() {
            return false;
        }
        let mut base_sign: Vec<Option<Sign>> = vec![None; induced.reference.len()];
        for (i, &a) in induced.alignment.iter().enumerate() {
            let relative = match a {
                Alignment::Aligned => Sign::Plus,
                Alignment::Reversed => Sign::Minus,
                Alignment::Ambiguous => continue,
            };
            let b = c.map_vertex(Vertex(i)).0;
            let implied = self.signs[i] * relative;
            match base_sign[b] {
                None => base_sign[b] = Some(implied),
                Some(x) if x != implied => return false,
                Some(_) => {}
            }
        }
        true
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Signs from the alignments, with `base_choice[v]` the sign of the reference
/// preimage of `v`. Ambiguous vertices get their fiber's base sign.
pub fn assign_signs(c: &CoverMap, induced: &InducedOrder, base_choice: &[Sign]) -> Result<SignAssignment> {
    if base_choice.len() != c.target().vertex_count() {
        return Err(Error::precondition(format!(
            "{} base signs for {} base vertices",
            base_choice.len(),
            c.target().vertex_count()
        )));
    }
    let signs = c
        .source()
        .vertices()
        .map(|v| {
            let b = base_choice[c.map_vertex(v).0];
            match induced.alignment[v.0] {
                Alignment::Reversed => -b,
                Alignment::Aligned | Alignment::Ambiguous => b,
            }
        })
        .collect();
    Ok(SignAssignment::new(signs, induced.ambiguous_vertices()))
}

/// Two lifts of one base edge with different endpoint-sign products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeViolation {
    pub base_edge: Edge,
    pub first: Edge,
    pub second: Edge,
    pub description: String,
}

impl fmt::Display for PeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "property E fails over {}: {}", self.base_edge, self.description)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeOutcome {
    Holds,
    Violated(PeViolation),
}

impl PeOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, PeOutcome::Holds)
    }
}

pub fn check_property_e(c: &CoverMap, signs: &SignAssignment) -> Result<PeOutcome> {
    let src = c.source();
    if signs.signs.len() != src.vertex_count() {
        return Err(Error::precondition(format!(
            "{} signs for {} source vertices",
            signs.signs.len(),
            src.vertex_count()
        )));
    }
    let product = |e: Edge| {
        let [u, w] = src.endpoints(e);
        signs.signs[u.0] * signs.signs[w.0]
    };
    for (b, fiber) in c.edge_fibers().iter().enumerate() {
        let Some(&first) = fiber.first() else { continue };
        let p = product(first);
        if let Some(&second) = fiber.iter().find(|&&e| product(e) != p) {
            let describe = |e: Edge| {
                let [u, w] = src.endpoints(e);
                format!(
                    "{}{}–{}{}",
                    src.name(u),
                    signs.signs[u.0],
                    src.name(w),
                    signs.signs[w.0]
                )
            };
            return Ok(PeOutcome::Violated(PeViolation {
                base_edge: Edge(b),
                first,
                second,
                description: format!(
                    "lift {} joins equal signs iff lift {} does not",
                    describe(first),
                    describe(second)
                ),
            }));
        }
    }
    Ok(PeOutcome::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeSearch {
    Found(SignAssignment),
    /// No resolution of the ambiguous vertices works; the witness is for the
    /// first assignment tried.
    Exhausted { tried: u128, witness: PeViolation },
}

/// Tries every resolution of the ambiguous vertices, except that the reference
/// preimage of each fiber stays `+` (flipping a whole fiber never changes the
/// verdict). Resolutions are tried in increasing binary order, bit `i` set
/// meaning the `i`-th free ambiguous vertex is `-`.
pub fn search_property_e(c: &CoverMap, induced: &InducedOrder, budget: Budget) -> Result<PeSearch> {
    let base = assign_signs(c, induced, &vec![Sign::Plus; c.target().vertex_count()])?;
    let free: Vec<Vertex> = induced
        .ambiguous_vertices()
        .into_iter()
        .filter(|v| !induced.reference.contains(v))
        .collect();
    if free.len() >= 127 {
        return Err(Error::BudgetExceeded {
            what: "sign resolutions",
            estimate: u128::MAX,
            limit: budget.max_items,
        });
    }
    let total = 1u128 << free.len();
    budget.check("sign resolutions", total)?;
    let mut witness = None;
    for mask in 0..total {
        let mut trial = base.clone();
        for (i, v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                trial.signs[v.0] = Sign::Minus;
            }
        }
        match check_property_e(c, &trial)? {
            PeOutcome::Holds => return Ok(PeSearch::Found(trial)),
            PeOutcome::Violated(w) => {
                witness.get_or_insert(w);
            }
        }
    }
    Ok(PeSearch::Exhausted {
        tried: total,
        witness: witness.expect("at least one assignment tried"),
    })
}

/// Everything needed to re-verify that a cover fulfills both properties
/// under a given source embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PevCertificate {
    pub induced: InducedOrder,
    pub signs: SignAssignment,
    pub report: QuotientReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PevVerdict {
    Holds(Box<PevCertificate>),
    FailsV(PvViolation),
    FailsE { tried: u128, witness: PeViolation },
}

impl PevVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PevVerdict::Holds(_))
    }

    pub fn certificate(&self) -> Option<&PevCertificate> {
        match self {
            PevVerdict::Holds(c) => Some(c),
            _ => None,
        }
    }

    pub fn surface(&self) -> Option<SurfaceId> {
        self.certificate().map(|c| c.report.surface)
    }
}

impl fmt::Display for PevVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PevVerdict::Holds(cert) => {
                let verdict = if cert.report.surface.orientable() { "S²" } else { "P²" };
                write!(f, "PEV holds, surface {verdict} ({})", cert.report.surface)
            }
            PevVerdict::FailsV(v) => write!(f, "{v}"),
            PevVerdict::FailsE { tried, witness } => {
                write!(f, "{witness} (all {tried} resolutions of ambiguous signs fail)")
            }
        }
    }
}

/// Property V, then a search for signs satisfying Property E, then the
/// quotient embedding.
pub fn check_pev(c: &CoverMap, s: &EmbeddingScheme, mode: PvMode, budget: Budget) -> Result<PevVerdict> {
    let induced = match check_property_v(c, s, mode)? {
        PvOutcome::Holds(i) => *i,
        PvOutcome::Violated(v) => return Ok(PevVerdict::FailsV(v)),
    };
    let signs = match search_property_e(c, &induced, budget)? {
        PeSearch::Found(signs) => signs,
        PeSearch::Exhausted { tried, witness } => return Ok(PevVerdict::FailsE { tried, witness }),
    };
    let report = quotient_embedding(c, &induced, &signs)?;
    Ok(PevVerdict::Holds(Box::new(PevCertificate {
        induced,
        signs,
        report,
    })))
}

#[cfg(test)]
mod tests;
