//! Versioned JSON documents for graphs, schemes, covers, sign assignments,
//! quotient reports and sweep results.
//!
//! Every document is `{"format_version": 1, "kind": ..., "payload": ...}`.
//! Vertices are referred to by name, edges by id, darts by `2·edge + end`
//! where end 0 is the first listed endpoint. Unknown fields are rejected and
//! documents that carry computed data (quotient reports) are recomputed and
//! compared on load.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::corpus::{Cursor, HarnessRow, ResultsTable, TableHeader};
use crate::covering::CoverMap;
use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, Vertex};
use crate::negami::{check_property_v, quotient_embedding, PvMode, PvOutcome, QuotientReport, SignAssignment};
use crate::perm::Sign;
use crate::scheme::EmbeddingScheme;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Graph,
    Scheme,
    Cover,
    Signs,
    QuotientReport,
    ResultsTable,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Scheme => "scheme",
            Kind::Cover => "cover",
            Kind::Signs => "signs",
            Kind::QuotientReport => "quotient_report",
            Kind::ResultsTable => "results_table",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format_version: u32,
    kind: Kind,
    payload: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: usize,
    pub ends: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSign {
    pub edge: usize,
    pub sign: i8,
}

/// Rotation (dart ids per vertex name) and signature of a scheme whose
/// graph is given elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationDoc {
    pub rotation: BTreeMap<String, Vec<usize>>,
    /// Edges not listed are positive.
    pub signature: Vec<EdgeSign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeDoc {
    pub graph: GraphDoc,
    pub rotation: BTreeMap<String, Vec<usize>>,
    pub signature: Vec<EdgeSign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DartImage {
    pub dart: usize,
    pub image: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    pub source: GraphDoc,
    pub target: GraphDoc,
    pub vertex_map: BTreeMap<String, String>,
    pub dart_map: Vec<DartImage>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignsDoc {
    pub signs: BTreeMap<String, i8>,
    #[serde(default)]
    pub ambiguous: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceWinding {
    pub source_face: usize,
    pub quotient_face: usize,
    pub winding: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularDoc {
    pub vertex: String,
    pub local_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EulerDoc {
    pub source_chi: i64,
    pub degree: usize,
    pub quotient_chi: i64,
    pub vertex_defect: usize,
    pub face_defect: usize,
}

/// A quotient report with the cover it belongs to. Everything after
/// `signs` is computed and is checked against a recomputation on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientDoc {
    pub cover: CoverDoc,
    pub source_scheme: RotationDoc,
    pub signs: SignsDoc,
    pub scheme: RotationDoc,
    pub surface: SurfaceDoc,
    pub sign_verdict: SurfaceDoc,
    pub degree: usize,
    pub faces: Vec<FaceWinding>,
    pub singular: Vec<SingularDoc>,
    pub euler: EulerDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultsDoc {
    pub header: TableHeader,
    pub rows: Vec<HarnessRow>,
    pub cursor: Option<Cursor>,
}

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Graph(Arc<Graph>),
    Scheme(EmbeddingScheme),
    Cover(CoverMap),
    /// Sign assignments are kept by name; see [`signs_from_doc`].
    Signs(SignsDoc),
    QuotientReport(Box<QuotientDocument>),
    ResultsTable(ResultsTable),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDocument {
    pub cover: CoverMap,
    pub report: QuotientReport,
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Graph(_) => Kind::Graph,
            Document::Scheme(_) => Kind::Scheme,
            Document::Cover(_) => Kind::Cover,
            Document::Signs(_) => Kind::Signs,
            Document::QuotientReport(_) => Kind::QuotientReport,
            Document::ResultsTable(_) => Kind::ResultsTable,
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

pub fn graph_to_doc(g: &Graph) -> GraphDoc {
    GraphDoc {
        vertices: g.names().to_vec(),
        edges: g
            .edges()
            .map(|e| {
                let [u, w] = g.endpoints(e);
                EdgeDoc {
                    id: e.0,
                    ends: [g.name(u).to_string(), g.name(w).to_string()],
                }
            })
            .collect(),
    }
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<Graph> {
    let m = doc.edges.len();
    let mut slots: Vec<Option<(&str, &str)>> = vec![None; m];
    for e in &doc.edges {
        let slot = slots
            .get_mut(e.id)
            .ok_or_else(|| malformed(format!("edge id {} out of range 0..{m}", e.id)))?;
        if slot.is_some() {
            return Err(malformed(format!("edge id {} appears twice", e.id)));
        }
        *slot = Some((&e.ends[0], &e.ends[1]));
    }
    let edges: Vec<(&str, &str)> = slots.into_iter().map(|s| s.expect("ids are dense")).collect();
    Graph::build(&doc.vertices, &edges)
}

fn vertex_named(g: &Graph, name: &str) -> Result<Vertex> {
    g.vertex_by_name(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
}

fn sign_from_i8(v: i8) -> Result<Sign> {
    Sign::try_from(v).map_err(|_| malformed(format!("sign must be 1 or -1, got {v}")))
}

pub fn rotation_to_doc(s: &EmbeddingScheme) -> RotationDoc {
    let g = s.graph();
    RotationDoc {
        rotation: g
            .vertices()
            .map(|v| (g.name(v).to_string(), s.rotation_at(v).iter().map(|d| d.0).collect()))
            .collect(),
        signature: g
            .edges()
            .map(|e| EdgeSign {
                edge: e.0,
                sign: i8::from(s.sign(e)),
            })
            .collect(),
    }
}

pub fn rotation_from_doc(g: Arc<Graph>, doc: &RotationDoc) -> Result<EmbeddingScheme> {
    let mut rotation = vec![None; g.vertex_count()];
    for (name, darts) in &doc.rotation {
        let v = vertex_named(&g, name)?;
        rotation[v.0] = Some(darts.iter().map(|&d| Dart(d)).collect::<Vec<_>>());
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| malformed(format!("no rotation for vertex {}", g.name(Vertex(v))))))
        .collect::<Result<Vec<_>>>()?;
    let mut signature = vec![Sign::Plus; g.edge_count()];
    let mut seen = vec![false; g.edge_count()];
    for es in &doc.signature {
        if es.edge >= g.edge_count() || seen[es.edge] {
            return Err(malformed(format!("bad or repeated signature entry for edge {}", es.edge)));
        }
        seen[es.edge] = true;
        signature[es.edge] = sign_from_i8(es.sign)?;
    }
    EmbeddingScheme::new(g, rotation, signature)
}

pub fn scheme_to_doc(s: &EmbeddingScheme) -> SchemeDoc {
    let r = rotation_to_doc(s);
    SchemeDoc {
        graph: graph_to_doc(s.graph()),
        rotation: r.rotation,
        signature: r.signature,
    }
}

pub fn scheme_from_doc(doc: &SchemeDoc) -> Result<EmbeddingScheme> {
    let r = RotationDoc {
        rotation: doc.rotation.clone(),
        signature: doc.signature.clone(),
    };
    rotation_from_doc(Arc::new(graph_from_doc(&doc.graph)?), &r)
}

pub fn cover_to_doc(c: &CoverMap) -> CoverDoc {
    let (src, tgt) = (c.source(), c.target());
    CoverDoc {
        source: graph_to_doc(src),
        target: graph_to_doc(tgt),
        vertex_map: src
            .vertices()
            .map(|v| (src.name(v).to_string(), tgt.name(c.map_vertex(v)).to_string()))
            .collect(),
        dart_map: src
            .darts()
            .map(|d| DartImage {
                dart: d.0,
                image: c.map_dart(d).0,
            })
            .collect(),
    }
}

pub fn cover_from_doc(doc: &CoverDoc) -> Result<CoverMap> {
    let src = Arc::new(graph_from_doc(&doc.source)?);
    let tgt = Arc::new(graph_from_doc(&doc.target)?);
    let mut vertex_map = vec![None; src.vertex_count()];
    for (a, b) in &doc.vertex_map {
        vertex_map[vertex_named(&src, a)?.0] = Some(vertex_named(&tgt, b)?);
    }
    let vertex_map = vertex_map
        .into_iter()
        .enumerate()
        .map(|(v, m)| m.ok_or_else(|| malformed(format!("vertex {} has no image", src.name(Vertex(v))))))
        .collect::<Result<Vec<_>>>()?;
    let mut dart_map = vec![None; src.dart_count()];
    for di in &doc.dart_map {
        let slot = dart_map
            .get_mut(di.dart)
            .ok_or_else(|| malformed(format!("dart {} out of range", di.dart)))?;
        if slot.replace(Dart(di.image)).is_some() {
            return Err(malformed(format!("dart {} mapped twice", di.dart)));
        }
    }
    let dart_map = dart_map
        .into_iter()
        .enumerate()
        .map(|(d, m)| m.ok_or_else(|| malformed(format!("dart {d} has no image"))))
        .collect::<Result<Vec<_>>>()?;
    CoverMap::new(src, tgt, vertex_map, dart_map)
}

pub fn signs_to_doc(g: &Graph, s: &SignAssignment) -> SignsDoc {
    SignsDoc {
        signs: g.vertices().map(|v| (g.name(v).to_string(), i8::from(s.sign(v)))).collect(),
        ambiguous: s.ambiguous().iter().map(|&v| g.name(v).to_string()).collect(),
    }
}

pub fn signs_from_doc(g: &Graph, doc: &SignsDoc) -> Result<SignAssignment> {
    let mut signs = vec![None; g.vertex_count()];
    for (name, &v) in &doc.signs {
        signs[vertex_named(g, name)?.0] = Some(sign_from_i8(v)?);
    }
    let signs = signs
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| malformed(format!("vertex {} has no sign", g.name(Vertex(v))))))
        .collect::<Result<Vec<_>>>()?;
    let ambiguous = doc.ambiguous.iter().map(|n| vertex_named(g, n)).collect::<Result<Vec<_>>>()?;
    Ok(SignAssignment::new(signs, ambiguous))
}

fn surface_doc(s: crate::scheme::SurfaceId) -> SurfaceDoc {
    SurfaceDoc {
        euler_characteristic: s.euler_characteristic(),
        orientable: s.orientable(),
        name: s.name(),
    }
}

pub fn quotient_to_doc(c: &CoverMap, r: &QuotientReport) -> QuotientDoc {
    let src = c.source();
    QuotientDoc {
        cover: cover_to_doc(c),
        source_scheme: rotation_to_doc(&r.source_scheme),
        signs: signs_to_doc(src, &r.signs),
        scheme: rotation_to_doc(&r.scheme),
        surface: surface_doc(r.surface),
        sign_verdict: surface_doc(r.sign_verdict),
        degree: r.degree,
        faces: r
            .face_image
            .iter()
            .zip(&r.windings)
            .enumerate()
            .map(|(i, (&q, &k))| FaceWinding {
                source_face: i,
                quotient_face: q,
                winding: k,
            })
            .collect(),
        singular: r
            .singular
            .iter()
            .map(|&(v, d)| SingularDoc {
                vertex: src.name(v).to_string(),
                local_degree: d,
            })
            .collect(),
        euler: EulerDoc {
            source_chi: r.euler.source_chi,
            degree: r.euler.degree,
            quotient_chi: r.euler.quotient_chi,
            vertex_defect: r.euler.vertex_defect,
            face_defect: r.euler.face_defect,
        },
    }
}

/// Rebuilds the cover, source scheme and signs, recomputes the report and
/// requires every stored field to match.
pub fn quotient_from_doc(doc: &QuotientDoc) -> Result<QuotientDocument> {
    let cover = cover_from_doc(&doc.cover)?;
    let source_scheme = rotation_from_doc(cover.source().clone(), &doc.source_scheme)?;
    let signs = signs_from_doc(cover.source(), &doc.signs)?;
    let induced = match check_property_v(&cover, &source_scheme, PvMode::Dihedral)? {
        PvOutcome::Holds(i) => i,
        PvOutcome::Violated(v) => return Err(Error::inconsistent(format!("stored scheme fails property V: {v}"))),
    };
    let report = quotient_embedding(&cover, &induced, &signs)?;
    let again = quotient_to_doc(&cover, &report);
    if &again != doc {
        return Err(Error::inconsistent("stored quotient report differs from its recomputation"));
    }
    Ok(QuotientDocument { cover, report })
}

fn payload(doc: &Document) -> serde_json::Value {
    let value = match doc {
        Document::Graph(g) => serde_json::to_value(graph_to_doc(g)),
        Document::Scheme(s) => serde_json::to_value(scheme_to_doc(s)),
        Document::Cover(c) => serde_json::to_value(cover_to_doc(c)),
        Document::Signs(s) => serde_json::to_value(s),
        Document::QuotientReport(q) => serde_json::to_value(quotient_to_doc(&q.cover, &q.report)),
        Document::ResultsTable(t) => serde_json::to_value(ResultsDoc {
            header: t.header.clone(),
            rows: t.rows.clone(),
            cursor: t.cursor,
        }),
    };
    value.expect("documents serialize")
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit(doc: &Document) -> String {
    let env = Envelope {
        format_version: FORMAT_VERSION,
        kind: doc.kind(),
        payload: payload(doc),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("documents serialize");
    s.push('\n');
    s
}

fn typed<T: serde::de::DeserializeOwned>(v: serde_json::Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| malformed(e.to_string()))
}

pub fn parse(text: &str) -> Result<Document> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    if env.format_version != FORMAT_VERSION {
        return Err(malformed(format!(
            "format_version {} is not supported (expected {FORMAT_VERSION})",
            env.format_version
        )));
    }
    Ok(match env.kind {
        Kind::Graph => Document::Graph(Arc::new(graph_from_doc(&typed(env.payload)?)?)),
        Kind::Scheme => Document::Scheme(scheme_from_doc(&typed(env.payload)?)?),
        Kind::Cover => Document::Cover(cover_from_doc(&typed(env.payload)?)?),
        Kind::Signs => Document::Signs(typed(env.payload)?),
        Kind::QuotientReport => Document::QuotientReport(Box::new(quotient_from_doc(&typed(env.payload)?)?)),
        Kind::ResultsTable => {
            let r: ResultsDoc = typed(env.payload)?;
            Document::ResultsTable(ResultsTable {
                header: r.header,
                rows: r.rows,
                cursor: r.cursor,
            })
        }
    })
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Document> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, doc: &Document) -> Result<()> {
    std::fs::write(path, emit(doc))?;
    Ok(())
}

/// Reads a document and requires it to be of the given kind.
pub fn read_kind(path: impl AsRef<Path>, kind: Kind) -> Result<Document> {
    let path = path.as_ref();
    let doc = read_file(path)?;
    if doc.kind() != kind {
        return Err(malformed(format!(
            "{} holds a {} document, expected {}",
            path.display(),
            doc.kind().as_str(),
            kind.as_str()
        )));
    }
    Ok(doc)
}
