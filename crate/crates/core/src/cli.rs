//! The `pcover` command line. Exit codes: 0 success, 1 a check failed,
//! 2 malformed input or usage, 3 budget exhausted. Errors are also written
//! to stderr as one JSON object per line.

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::corpus::{self, conjecture_harness, derived_examples, HarnessConfig, ResultsTable, Shard};
use crate::covering::{deck_group, enumerate_double_covers, is_regular, CoverKind, CoverMap};
use crate::dot::{cover_to_dot, graph_to_dot, scheme_to_dot};
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interchange::{self, signs_to_doc, Document, Kind, QuotientDocument};
use crate::lifting::{factor_through_universal, necessity_pipeline, orientation_double_cover, Necessity};
use crate::negami::{check_pev, check_pev_any_embedding, AnyEmbedding, PevVerdict, PvMode};
use crate::perm::Sign;
use crate::planarity::{planar_embed, Planarity};
use crate::scheme::EmbeddingScheme;

pub const BUDGET_ENV: &str = "PCOVER_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pcover", version, about = "Planar covers, embedding schemes and quotient embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural validation of any document, plus the simple-connected-loopless report for graphs.
    Validate { file: PathBuf },
    /// Classify a cover map, compute its deck group, test regularity.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Face tracing, surface identification and planar embedding.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Check the vertex and edge properties and build quotient embeddings.
    #[command(subcommand)]
    Negami(NegamiCmd),
    /// Orientation double covers, factorization and the necessity pipeline.
    #[command(subcommand)]
    Lift(LiftCmd),
    /// Write standard graphs, covers and worked examples.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Resumable sweeps over voltage covers.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Graphviz export.
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArg {
    /// Maximum items an exhaustive search may visit (default from PCOVER_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// Unbranched, branched, weak or invalid, with degree and singular vertices.
    Classify { file: PathBuf },
    /// Order of the deck group.
    Deck {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Exit status 1 when the deck group is not transitive on fibers.
    Regular {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Subcommand, Debug)]
enum EmbedCmd {
    /// Faces of a scheme as dart walks.
    Faces { file: PathBuf },
    /// Euler characteristic, orientability and surface name.
    Surface { file: PathBuf },
    /// Planar embedding of a graph document, emitted as a scheme document.
    Planar {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum NegamiCmd {
    /// Exit status 1 when the properties fail.
    Check {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long, required_unless_present = "all_embeddings")]
        scheme: Option<PathBuf>,
        /// Try every sphere rotation system of the source.
        #[arg(long)]
        all_embeddings: bool,
        /// Require fiber orders to agree literally, not up to reversal.
        #[arg(long)]
        strict_pv: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Emit the quotient report of a cover under a sphere scheme.
    Quotient {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Subcommand, Debug)]
enum LiftCmd {
    /// Orientation double cover of a scheme.
    Odc {
        #[arg(long)]
        scheme: PathBuf,
        /// Write the lifted scheme here.
        #[arg(long)]
        out_scheme: Option<PathBuf>,
        /// Write the projection cover here.
        #[arg(long)]
        out_cover: Option<PathBuf>,
    },
    /// Factor a cover with projective-plane quotient through the orientation double cover.
    Factor {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run the necessity pipeline on `f` and `f_tilde` under a scheme of the top source.
    Pipeline {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        ftilde: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    K4(GenOut),
    Q3(GenOut),
    Bouquet {
        #[arg(long, default_value_t = 2)]
        loops: usize,
        #[command(flatten)]
        out: GenOut,
    },
    K1222(GenOut),
    Cycle {
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Every connected double cover of a graph, written as cover documents.
    DoubleCovers {
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes the corpus, the derived examples and their certificates.
    Examples {
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Args, Debug)]
struct GenOut {
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    /// Check every connected cover of a graph up to a degree; rows are written as JSON lines.
    Conjecture {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        min_degree: usize,
        #[arg(long)]
        max_degree: usize,
        #[command(flatten)]
        budget: BudgetArg,
        /// A results file whose cursor to continue from; new rows are appended to it.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// `k/n`: only voltage indices congruent to k mod n.
        #[arg(long)]
        shard: Option<String>,
        #[arg(long)]
        max_items: Option<u128>,
        /// Results file (JSON lines); stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ExportCmd {
    /// Graphviz text for a graph, scheme or cover document.
    Dot { file: PathBuf },
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: &'a str,
    message: String,
    exit_code: i32,
}

fn error_name(e: &Error) -> &'static str {
    match e {
        Error::DuplicateVertex(_) => "duplicate_vertex",
        Error::DanglingEndpoint { .. } => "dangling_endpoint",
        Error::UnknownVertex(_) => "unknown_vertex",
        Error::InvalidRotation { .. } => "invalid_rotation",
        Error::SignatureLength { .. } => "signature_length",
        Error::Disconnected => "disconnected",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::InvalidCover(_) => "invalid_cover",
        Error::UnsupportedCover(_) => "unsupported_cover",
        Error::NotSphere { .. } => "not_sphere",
        Error::GraphMismatch(_) => "graph_mismatch",
        Error::InvalidVoltage(_) => "invalid_voltage",
        Error::Precondition(_) => "precondition",
        Error::Inconsistent(_) => "inconsistent",
        Error::Malformed(_) => "malformed",
        Error::Json(_) => "json",
        Error::Io(_) => "io",
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Malformed(_)
        | Error::Json(_)
        | Error::Io(_)
        | Error::DuplicateVertex(_)
        | Error::DanglingEndpoint { .. }
        | Error::UnknownVertex(_)
        | Error::InvalidRotation { .. }
        | Error::SignatureLength { .. }
        | Error::InvalidCover(_)
        | Error::InvalidVoltage(_) => EXIT_MALFORMED,
        _ => EXIT_FAIL,
    }
}

fn report_error(err: &mut dyn Write, e: &Error, code: i32) {
    let record = ErrorRecord {
        error: error_name(e),
        message: e.to_string(),
        exit_code: code,
    };
    let _ = writeln!(err, "{}", serde_json::to_string(&record).expect("serializable"));
}

/// Runs the command line with the given arguments (including the program
/// name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            report_error(err, &e, code);
            code
        }
    }
}

fn budget(arg: BudgetArg) -> Result<Budget> {
    if let Some(n) = arg.budget {
        return Ok(Budget::new(n));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::new)
            .map_err(|_| Error::Malformed(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn read_graph(path: &Path) -> Result<Arc<Graph>> {
    match interchange::read_kind(path, Kind::Graph)? {
        Document::Graph(g) => Ok(g),
        _ => unreachable!(),
    }
}

fn read_scheme(path: &Path) -> Result<EmbeddingScheme> {
    match interchange::read_kind(path, Kind::Scheme)? {
        Document::Scheme(s) => Ok(s),
        _ => unreachable!(),
    }
}

fn read_cover(path: &Path) -> Result<CoverMap> {
    match interchange::read_kind(path, Kind::Cover)? {
        Document::Cover(c) => Ok(c),
        _ => unreachable!(),
    }
}

/// A scheme file may describe the cover's source with different edge ids
/// only if the structure is identical.
fn scheme_on(c: &CoverMap, s: EmbeddingScheme) -> Result<EmbeddingScheme> {
    if !s.graph().same_structure(c.source()) {
        return Err(Error::GraphMismatch("scheme graph differs from the cover source".into()));
    }
    s.transport(c.source().clone(), &c.source().darts().collect::<Vec<_>>())
}

fn write_or_print(out: &mut dyn Write, path: Option<&Path>, doc: &Document) -> Result<()> {
    match path {
        Some(p) => interchange::write_file(p, doc),
        None => Ok(out.write_all(interchange::emit(doc).as_bytes())?),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Validate { file } => validate(&file, out),
        Command::Cover(c) => cover_cmd(c, out),
        Command::Embed(c) => embed_cmd(c, out),
        Command::Negami(c) => negami_cmd(c, out),
        Command::Lift(c) => lift_cmd(c, out),
        Command::Gen(c) => gen_cmd(c, out),
        Command::Search(c) => search_cmd(c, out, err),
        Command::Export(ExportCmd::Dot { file }) => {
            let text = match interchange::read_file(&file)? {
                Document::Graph(g) => graph_to_dot(&g),
                Document::Scheme(s) => scheme_to_dot(&s),
                Document::Cover(c) => cover_to_dot(&c),
                other => {
                    return Err(Error::Malformed(format!(
                        "cannot draw a {} document",
                        other.kind().as_str()
                    )))
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> Result<i32> {
    let doc = match interchange::read_file(file) {
        Ok(d) => d,
        Err(
            e @ (Error::DuplicateVertex(_)
            | Error::DanglingEndpoint { .. }
            | Error::UnknownVertex(_)
            | Error::InvalidRotation { .. }
            | Error::SignatureLength { .. }
            | Error::InvalidCover(_)
            | Error::Inconsistent(_)),
        ) => {
            writeln!(out, "invalid: {e}")?;
            return Ok(EXIT_FAIL);
        }
        Err(e) => return Err(e),
    };
    writeln!(out, "kind: {}", doc.kind().as_str())?;
    let graph_report = |g: &Graph, out: &mut dyn Write| -> Result<bool> {
        let report = g.validate_assumptions();
        writeln!(out, "{report}")?;
        Ok(report.passes())
    };
    let ok = match &doc {
        Document::Graph(g) => graph_report(g, out)?,
        Document::Scheme(s) => {
            let ok = graph_report(s.graph(), out)?;
            writeln!(out, "surface: {}", s.surface_id()?)?;
            ok
        }
        Document::Cover(c) => {
            let class = c.classify();
            writeln!(out, "cover: {}", class.kind)?;
            let src = graph_report(c.source(), out)?;
            let tgt = graph_report(c.target(), out)?;
            src && tgt && matches!(class.kind, CoverKind::Branched | CoverKind::Unbranched)
        }
        Document::Signs(s) => {
            writeln!(out, "{} signs, {} ambiguous", s.signs.len(), s.ambiguous.len())?;
            true
        }
        Document::QuotientReport(q) => {
            writeln!(out, "quotient report re-verified: {}", q.report.surface)?;
            true
        }
        Document::ResultsTable(t) => {
            writeln!(out, "{} rows, complete: {}", t.rows.len(), t.cursor.is_none())?;
            true
        }
    };
    writeln!(out, "{}", if ok { "valid" } else { "assumptions violated" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn names(g: &Graph, vs: &[crate::graph::Vertex]) -> String {
    let list: Vec<&str> = vs.iter().map(|&v| g.name(v)).collect();
    format!("[{}]", list.join(", "))
}

fn cover_cmd(cmd: CoverCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        CoverCmd::Classify { file } => {
            let c = read_cover(&file)?;
            let class = c.classify();
            writeln!(out, "kind: {}", class.kind)?;
            match class.degree {
                Some(n) => writeln!(out, "degree: {n}")?,
                None => writeln!(out, "degree: undefined")?,
            }
            writeln!(out, "singular: {}", names(c.source(), &class.singular))?;
            writeln!(out, "branch set: {}", names(c.target(), &class.branch_set))?;
            if let Some(w) = &class.witness {
                writeln!(out, "witness: {w}")?;
            }
            Ok(EXIT_OK)
        }
        CoverCmd::Deck { file, budget: b } => {
            let c = read_cover(&file)?;
            let deck = deck_group(&c, budget(b)?)?;
            writeln!(out, "deck group order: {}", deck.order())?;
            let src = c.source();
            for g in deck.elements() {
                let images: Vec<String> = src
                    .vertices()
                    .map(|v| format!("{}->{}", src.name(v), src.name(g.vertex(v))))
                    .collect();
                writeln!(out, "  {}", images.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        CoverCmd::Regular { file, budget: b } => {
            let c = read_cover(&file)?;
            let r = is_regular(&c, budget(b)?)?;
            writeln!(out, "regular: {}", r.regular)?;
            writeln!(out, "deck group order: {}", r.deck.order())?;
            if let Some(w) = &r.witness {
                writeln!(out, "witness: {w}")?;
            }
            Ok(if r.regular { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn embed_cmd(cmd: EmbedCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        EmbedCmd::Faces { file } => {
            let s = read_scheme(&file)?;
            for (i, face) in s.oriented_faces().iter().enumerate() {
                let darts: Vec<String> = face.iter().map(|d| d.0.to_string()).collect();
                writeln!(out, "face {i} (length {}): {}", face.len(), darts.join(" "))?;
            }
            writeln!(out, "euler characteristic: {}", s.euler_characteristic())?;
            Ok(EXIT_OK)
        }
        EmbedCmd::Surface { file } => {
            let s = read_scheme(&file)?;
            writeln!(out, "{}", s.surface_id()?)?;
            Ok(EXIT_OK)
        }
        EmbedCmd::Planar { file, out: path } => {
            let g = read_graph(&file)?;
            match planar_embed(&g)? {
                Planarity::Planar(s) => {
                    write_or_print(out, path.as_deref(), &Document::Scheme(s))?;
                    Ok(EXIT_OK)
                }
                Planarity::NonPlanar => {
                    writeln!(out, "NonPlanar")?;
                    Ok(EXIT_FAIL)
                }
            }
        }
    }
}

fn negami_cmd(cmd: NegamiCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        NegamiCmd::Check {
            cover,
            scheme,
            all_embeddings,
            strict_pv,
            budget: b,
        } => {
            let c = read_cover(&cover)?;
            let mode = if strict_pv { PvMode::Strict } else { PvMode::Dihedral };
            let budget = budget(b)?;
            if all_embeddings {
                match check_pev_any_embedding(&c, mode, budget)? {
                    AnyEmbedding::Found { index, certificate, .. } => {
                        writeln!(out, "{}", PevVerdict::Holds(certificate))?;
                        writeln!(out, "rotation system index: {index}")?;
                        Ok(EXIT_OK)
                    }
                    AnyEmbedding::Exhausted {
                        rotation_systems,
                        sphere_schemes,
                    } => {
                        writeln!(
                            out,
                            "PEV fails under all {sphere_schemes} sphere schemes ({rotation_systems} rotation systems)"
                        )?;
                        Ok(EXIT_FAIL)
                    }
                }
            } else {
                let s = scheme_on(&c, read_scheme(scheme.as_deref().expect("required by clap"))?)?;
                let verdict = check_pev(&c, &s, mode, budget)?;
                writeln!(out, "{verdict}")?;
                if let Some(cert) = verdict.certificate() {
                    writeln!(out, "signs: {}", cert.signs)?;
                }
                Ok(if verdict.holds() { EXIT_OK } else { EXIT_FAIL })
            }
        }
        NegamiCmd::Quotient {
            cover,
            scheme,
            out: path,
            budget: b,
        } => {
            let c = read_cover(&cover)?;
            let s = scheme_on(&c, read_scheme(&scheme)?)?;
            match check_pev(&c, &s, PvMode::Dihedral, budget(b)?)? {
                PevVerdict::Holds(cert) => {
                    let doc = Document::QuotientReport(Box::new(QuotientDocument {
                        cover: c,
                        report: cert.report,
                    }));
                    write_or_print(out, path.as_deref(), &doc)?;
                    Ok(EXIT_OK)
                }
                other => {
                    writeln!(out, "{other}")?;
                    Ok(EXIT_FAIL)
                }
            }
        }
    }
}

fn lift_cmd(cmd: LiftCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        LiftCmd::Odc {
            scheme,
            out_scheme,
            out_cover,
        } => {
            let s = read_scheme(&scheme)?;
            let odc = orientation_double_cover(&s)?;
            let lifted = odc.lifted_graph();
            writeln!(
                out,
                "lifted graph: {} vertices, {} edges, connected: {}",
                lifted.vertex_count(),
                lifted.edge_count(),
                odc.connected
            )?;
            writeln!(out, "lifted surface: euler characteristic {}", odc.scheme.euler_characteristic())?;
            if let Some(p) = out_scheme {
                interchange::write_file(p, &Document::Scheme(odc.scheme.clone()))?;
            }
            if let Some(p) = out_cover {
                interchange::write_file(p, &Document::Cover(odc.projection.clone()))?;
            }
            Ok(EXIT_OK)
        }
        LiftCmd::Factor {
            cover,
            scheme,
            out: path,
            budget: b,
        } => {
            let c = read_cover(&cover)?;
            let s = scheme_on(&c, read_scheme(&scheme)?)?;
            let cert = match check_pev(&c, &s, PvMode::Dihedral, budget(b)?)? {
                PevVerdict::Holds(cert) => cert,
                other => {
                    writeln!(out, "{other}")?;
                    return Ok(EXIT_FAIL);
                }
            };
            let fac = factor_through_universal(&c, &cert.report)?;
            let degree = fac.lift.classify().degree;
            writeln!(out, "quotient: {}", cert.report.surface)?;
            writeln!(
                out,
                "lift degree: {}",
                degree.map_or("undefined".to_string(), |d| d.to_string())
            )?;
            writeln!(out, "projection after lift equals the cover: true")?;
            if let Some(p) = path {
                interchange::write_file(p, &Document::Cover(fac.lift))?;
            }
            Ok(EXIT_OK)
        }
        LiftCmd::Pipeline {
            f,
            ftilde,
            scheme,
            budget: b,
        } => {
            let f = read_cover(&f)?;
            let ft = read_cover(&ftilde)?;
            let s = scheme_on(&ft, read_scheme(&scheme)?)?;
            let budget = budget(b)?;
            let run = necessity_pipeline(&f, &ft, &s, budget)?;
            writeln!(out, "composition: {}", PevVerdict::Holds(run.composition.clone()))?;
            writeln!(out, "middle surface: {}", run.middle.surface)?;
            match &run.outcome {
                Necessity::Case1 { fallback, .. } => {
                    writeln!(out, "case 1: f fulfills both properties on a sphere scheme (fallback search: {fallback})")?
                }
                Necessity::Case2 { odc, .. } => writeln!(
                    out,
                    "case 2: f lifted through the orientation double cover ({} vertices) fulfills both properties",
                    odc.lifted_graph().vertex_count()
                )?,
            }
            run.outcome.verify(&f, budget)?;
            writeln!(out, "certificate re-verified")?;
            Ok(EXIT_OK)
        }
    }
}

fn gen_graph(g: Graph, out: &mut dyn Write, path: Option<&Path>) -> Result<i32> {
    write_or_print(out, path, &Document::Graph(Arc::new(g)))?;
    Ok(EXIT_OK)
}

fn gen_cmd(cmd: GenCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        GenCmd::K4(o) => gen_graph(corpus::k4(), out, o.out.as_deref()),
        GenCmd::Q3(o) => gen_graph(corpus::q3(), out, o.out.as_deref()),
        GenCmd::Bouquet { loops, out: o } => gen_graph(corpus::bouquet(loops), out, o.out.as_deref()),
        GenCmd::K1222(o) => gen_graph(corpus::k1222(), out, o.out.as_deref()),
        GenCmd::Cycle { n, out: o } => {
            if n < 1 {
                return Err(Error::Malformed("a cycle needs at least one vertex".into()));
            }
            gen_graph(corpus::cycle(n), out, o.out.as_deref())
        }
        GenCmd::DoubleCovers { graph, out: dir } => {
            let g = read_graph(&graph)?;
            fs::create_dir_all(&dir)?;
            let mut count = 0;
            for dc in enumerate_double_covers(&g) {
                let name = format!("double-cover-{}.json", dc.mask);
                interchange::write_file(dir.join(&name), &Document::Cover(dc.cover.cover))?;
                writeln!(out, "{name}")?;
                count += 1;
            }
            writeln!(out, "{count} connected double covers")?;
            Ok(EXIT_OK)
        }
        GenCmd::Examples { out: dir, budget: b } => gen_examples(&dir, budget(b)?, out),
    }
}

fn gen_examples(dir: &Path, budget: Budget, out: &mut dyn Write) -> Result<i32> {
    fs::create_dir_all(dir)?;
    let mut write = |name: String, doc: Document| -> Result<()> {
        interchange::write_file(dir.join(&name), &doc)?;
        writeln!(out, "{name}")?;
        Ok(())
    };
    for entry in corpus::standard_graphs() {
        write(format!("{}.graph.json", entry.name), Document::Graph(entry.graph))?;
    }
    let k4 = Arc::new(corpus::k4());
    if let Planarity::Planar(s) = planar_embed(&k4)? {
        write("k4.scheme.json".into(), Document::Scheme(s))?;
    }
    let c3 = Arc::new(corpus::cycle(3));
    let rotation = c3.vertices().map(|v| c3.darts_at(v).to_vec()).collect();
    let twisted = EmbeddingScheme::new(c3, rotation, vec![Sign::Plus, Sign::Plus, Sign::Minus])?;
    write("c3-twisted.scheme.json".into(), Document::Scheme(twisted))?;

    for entry in corpus::corpus_covers() {
        let scheme = match entry.scheme.clone() {
            Some(s) => Some(s),
            None => planar_embed(entry.cover.source())?.scheme().cloned(),
        };
        write(format!("{}.cover.json", entry.name), Document::Cover(entry.cover.clone()))?;
        if let Some(s) = scheme {
            write(format!("{}.scheme.json", entry.name), Document::Scheme(s))?;
        }
    }

    let ex = derived_examples(budget)?;
    for e in [&ex.irregular, &ex.sphere_double, &ex.projective_double] {
        e.reverify(budget)?;
        write(format!("{}.cover.json", e.name), Document::Cover(e.cover.clone()))?;
        write(
            format!("{}.scheme.json", e.name),
            Document::Scheme(e.certificate.report.source_scheme.clone()),
        )?;
        write(
            format!("{}.signs.json", e.name),
            Document::Signs(signs_to_doc(e.cover.source(), &e.certificate.signs)),
        )?;
        write(
            format!("{}.quotient.json", e.name),
            Document::QuotientReport(Box::new(QuotientDocument {
                cover: e.cover.clone(),
                report: e.certificate.report.clone(),
            })),
        )?;
    }
    match &ex.have_to_lift.found {
        Some(h) => {
            write("have-to-lift.cover.json".into(), Document::Cover(h.cover.clone()))?;
            write("have-to-lift.p2-scheme.json".into(), Document::Scheme(h.p2_scheme.clone()))?;
            write(
                "have-to-lift.lifted-quotient.json".into(),
                Document::QuotientReport(Box::new(QuotientDocument {
                    cover: h.lifted_cover.clone(),
                    report: h.certificate.report.clone(),
                })),
            )?;
        }
        None => writeln!(out, "no cover needing the projective lift was found")?,
    }
    Ok(EXIT_OK)
}

fn search_cmd(cmd: SearchCmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let SearchCmd::Conjecture {
        graph,
        min_degree,
        max_degree,
        budget: b,
        resume,
        shard,
        max_items,
        out: path,
    } = cmd;
    let g = read_graph(&graph)?;
    let name = graph
        .file_stem()
        .map(|s| s.to_string_lossy().trim_end_matches(".graph").to_string())
        .unwrap_or_else(|| "graph".into());
    let shard = match shard {
        Some(s) => s.parse()?,
        None => Shard::default(),
    };
    let previous = match &resume {
        Some(p) => Some(ResultsTable::read_jsonl(BufReader::new(fs::File::open(p)?))?),
        None => None,
    };
    let resume_cursor = match &previous {
        Some(t) => match t.cursor {
            Some(c) => Some(c),
            None => {
                writeln!(out, "results are already complete")?;
                return Ok(EXIT_OK);
            }
        },
        None => None,
    };
    let config = HarnessConfig {
        min_degree,
        max_degree,
        budget: budget(b)?,
        shard,
        resume: resume_cursor,
        max_items,
    };
    let report = conjecture_harness(&name, &g, &config)?;
    let table = match previous {
        Some(mut t) => {
            t.extend(report.table.clone())?;
            t
        }
        None => report.table.clone(),
    };
    let target = path.or(resume);
    match &target {
        Some(p) => {
            fs::write(p, table.to_jsonl())?;
            let satisfied = table.count(|o| matches!(o, corpus::Outcome::Satisfied { .. }));
            let not_planar = table.count(|o| matches!(o, corpus::Outcome::NotPlanar));
            let exhausted = table.exhausted().count();
            let over = table.count(|o| matches!(o, corpus::Outcome::OutOfBudget { .. }));
            writeln!(
                out,
                "{} rows: {not_planar} not planar, {satisfied} satisfied, {exhausted} exhausted, {over} out of budget",
                table.rows.len()
            )?;
            if let Some(c) = table.cursor {
                writeln!(out, "cursor: degree {} index {}", c.degree, c.next_index)?;
            }
        }
        None => out.write_all(table.to_jsonl().as_bytes())?,
    }
    if let Some(reason) = &report.budget_stop {
        let record = ErrorRecord {
            error: "budget_exceeded",
            message: format!("stopped early, results saved with a cursor: {reason}"),
            exit_code: EXIT_BUDGET,
        };
        writeln!(err, "{}", serde_json::to_string(&record).expect("serializable"))?;
        return Ok(EXIT_BUDGET);
    }
    Ok(EXIT_OK)
}
