//! Acceptance gates. Each gate prints one PASS or FAIL line with its
//! measured time against the pinned limit; the process fails if any gate
//! does. All comparisons are exact: counts, surfaces and identities are
//! integers, so there is no numeric tolerance anywhere.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use planar_covers::automorphism::automorphisms;
use planar_covers::corpus::{
    antipodal_cube, bouquet, corpus_covers, cycle, have_to_lift_search, irregular_bouquet_cover, k4,
    k4_double_cover_witnesses, standard_graphs,
};
use planar_covers::covering::{
    enumerate_double_covers, enumerate_permutation_covers, find_cover_isomorphism, is_regular, CoverMap,
};
use planar_covers::enumerate::{enumerate_rotation_systems, rotation_system_count, sphere_schemes};
use planar_covers::lifting::factor_through_universal;
use planar_covers::negami::{
    assign_signs, check_pev, check_property_e, check_property_v, equivariant_embedding_search, quotient_embedding,
    Equivariant, PevVerdict, PvMode, PvOutcome, QuotientReport,
};
use planar_covers::planarity::planar_embed;
use planar_covers::{Budget, EmbeddingScheme, Graph, Sign, SurfaceId};

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

/// Rotation systems per source enumerated by the sweeps below.
const SWEEP_BUDGET: u64 = 1 << 18;
/// Largest rotation-system count the brute-force planarity oracle visits.
const ORACLE_LIMIT: u128 = 2_000_000;
const RANDOM_GRAPHS: usize = 50;
const RANDOM_SEED: u64 = 0x5eed_2024;

type Gate = Result<String, String>;
/// Sphere schemes, how many fulfil both properties, and the projective-plane pairs.
type SweepTally = Result<(usize, usize, Vec<PairResult>), String>;

struct Report {
    failures: usize,
}

impl Report {
    fn gate(&mut self, id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Gate) {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let verdict = match result {
            Ok(detail) if took <= limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; over the time limit")),
            Err(e) => Err(e),
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} [{id:>2}] {title}: {detail} ({:.2}s / {}s)", took.as_secs_f64(), limit.as_secs());
        if verdict.is_err() {
            self.failures += 1;
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c3_with(signs: [Sign; 3]) -> EmbeddingScheme {
    let g = Arc::new(cycle(3));
    let rot = g.vertices().map(|v| g.darts_at(v).to_vec()).collect();
    EmbeddingScheme::new(g, rot, signs.to_vec()).unwrap()
}

fn gate_faces() -> Gate {
    let plus = c3_with([Sign::Plus; 3]);
    ensure(plus.euler_characteristic() == 2, || format!("C3 all positive: chi {}", plus.euler_characteristic()))?;
    let twisted = c3_with([Sign::Plus, Sign::Plus, Sign::Minus]);
    ensure(twisted.euler_characteristic() == 1, || {
        format!("C3 one negative: chi {}", twisted.euler_characteristic())
    })?;
    let g = Arc::new(k4());
    let s = planar_embed(&g).map_err(|e| e.to_string())?.scheme().cloned().ok_or("K4 reported non-planar")?;
    let lengths: Vec<usize> = s.faces().iter().map(|f| f.len()).collect();
    ensure(lengths == vec![3, 3, 3, 3], || format!("K4 face lengths {lengths:?}"))?;
    Ok("C3 chi 2 and 1, K4 has 4 triangular faces".into())
}

fn gate_counts() -> Gate {
    let g = Arc::new(k4());
    let systems = enumerate_rotation_systems(&g, Budget::default()).map_err(|e| e.to_string())?;
    let total = systems.total();
    let spherical = systems.filter(|s| s.euler_characteristic() == 2).count();
    let doubles = enumerate_double_covers(&g).filter(|d| d.cover.connected).count();
    let aut = automorphisms(&g, Budget::default()).map_err(|e| e.to_string())?.len();
    ensure((total, spherical, doubles, aut) == (16, 2, 7, 24), || {
        format!("rotation systems {total}, spherical {spherical}, double covers {doubles}, automorphisms {aut}")
    })?;
    Ok("16 rotation systems, 2 spherical, 7 double covers, |Aut| = 24".into())
}

/// Connected covers of degree 2 and 3 from cotree voltages, plus the
/// hand-built covers of K₄.
fn sweep_covers() -> Vec<(String, CoverMap)> {
    let mut out = Vec::new();
    for (name, g) in [("K4", k4()), ("C3", cycle(3)), ("C4", cycle(4))] {
        let g = Arc::new(g);
        for degree in [2, 3] {
            let covers = enumerate_permutation_covers(&g, degree, Budget::default()).unwrap();
            for (i, vc) in covers.connected() {
                out.push((format!("{name} degree {degree} #{i}"), vc.cover));
            }
        }
    }
    for entry in corpus_covers() {
        if entry.cover.target().same_structure(&k4()) && entry.cover.classify().degree.is_some() {
            out.push((entry.name, entry.cover));
        }
    }
    out
}

struct PairResult {
    label: String,
    cover: CoverMap,
    report: QuotientReport,
}

fn check_soundness(c: &CoverMap, r: &QuotientReport) -> Result<(), String> {
    let chi = r.surface.euler_characteristic();
    ensure(chi == 1 || chi == 2, || format!("quotient chi {chi}"))?;
    ensure(r.sign_verdict == r.surface, || "sign verdict differs from the surface".into())?;
    let faces = r.scheme.face_count();
    for q in 0..faces {
        let sum: usize = r.face_image.iter().zip(&r.windings).filter(|(f, _)| **f == q).map(|(_, k)| k).sum();
        ensure(sum == r.degree, || format!("quotient face {q}: windings sum to {sum}, degree {}", r.degree))?;
    }
    let class = c.classify();
    let vertex_defect: i64 = class.local_degree.iter().map(|&d| d as i64 - 1).sum();
    let face_defect: i64 = r.windings.iter().map(|&k| k as i64 - 1).sum();
    let rhs = r.degree as i64 * chi - vertex_defect - face_defect;
    ensure(rhs == 2, || format!("Euler identity: 2 != {rhs}"))?;
    r.verify(c).map_err(|e| e.to_string())
}

fn gate_soundness(p2: &mut Vec<PairResult>) -> Gate {
    let covers = sweep_covers();
    let results: Vec<SweepTally> = covers
        .par_iter()
        .map(|(label, c)| {
            let schemes = sphere_schemes(c.source(), Budget::new(SWEEP_BUDGET)).map_err(|e| format!("{label}: {e}"))?;
            let mut holds = 0;
            let mut projective = Vec::new();
            for (index, s) in &schemes {
                let verdict = check_pev(c, s, PvMode::Dihedral, Budget::default())
                    .map_err(|e| format!("{label} scheme {index}: {e}"))?;
                if let PevVerdict::Holds(cert) = verdict {
                    holds += 1;
                    check_soundness(c, &cert.report).map_err(|e| format!("{label} scheme {index}: {e}"))?;
                    if cert.report.surface == SurfaceId::PROJECTIVE_PLANE {
                        projective.push(PairResult {
                            label: format!("{label} scheme {index}"),
                            cover: c.clone(),
                            report: cert.report,
                        });
                    }
                }
            }
            Ok((schemes.len(), holds, projective))
        })
        .collect();
    let (mut pairs, mut holds) = (0, 0);
    for r in results {
        let (n, h, p) = r?;
        pairs += n;
        holds += h;
        p2.extend(p);
    }
    ensure(holds > 0, || "no pair fulfilled both properties".into())?;
    Ok(format!(
        "{} covers, {pairs} sphere pairs, {holds} fulfil both properties, 0 violations",
        covers.len()
    ))
}

fn gate_regular_implies_pev() -> Gate {
    let g = Arc::new(k4());
    let mut n = 0;
    for dc in enumerate_double_covers(&g) {
        let c = &dc.cover.cover;
        if !planar_embed(c.source()).map_err(|e| e.to_string())?.is_planar() {
            continue;
        }
        n += 1;
        match equivariant_embedding_search(c, Budget::default()).map_err(|e| e.to_string())? {
            Equivariant::Found(found) => {
                let again = check_pev(c, &found.scheme, PvMode::Dihedral, Budget::default()).map_err(|e| e.to_string())?;
                ensure(again.holds(), || format!("mask {}: equivariant scheme fails: {again}", dc.mask))?;
            }
            Equivariant::Exhausted { .. } => return Err(format!("mask {}: no equivariant sphere scheme", dc.mask)),
        }
    }
    ensure(n == 7, || format!("{n} planar double covers, expected 7"))?;
    Ok("all 7 planar double covers have an equivariant scheme fulfilling both properties".into())
}

fn gate_double_covers_regular() -> Gate {
    let mut total = 0;
    let mut summary = Vec::new();
    for entry in standard_graphs() {
        if !entry.graph.is_connected() {
            continue;
        }
        let covers: Vec<_> = enumerate_double_covers(&entry.graph).collect();
        let irregular: Vec<u128> = covers
            .par_iter()
            .filter(|dc| !is_regular(&dc.cover.cover, Budget::default()).map(|r| r.regular).unwrap_or(false))
            .map(|dc| dc.mask)
            .collect();
        ensure(irregular.is_empty(), || format!("{}: masks {irregular:?} not regular", entry.name))?;
        total += covers.len();
        summary.push(format!("{} {}", entry.name, covers.len()));
    }
    Ok(format!("{total} double covers all regular ({})", summary.join(", ")))
}

fn gate_irregular() -> Gate {
    let e = irregular_bouquet_cover(Budget::default())
        .map_err(|e| e.to_string())?
        .ok_or("no irregular triple cover of the bouquet fulfils both properties")?;
    ensure(!e.regular && e.deck_order == 1, || {
        format!("regular {}, deck order {}", e.regular, e.deck_order)
    })?;
    ensure(e.cover.classify().degree == Some(3), || "not a triple cover".into())?;
    ensure(e.cover.target().same_structure(&bouquet(2)), || "base is not the bouquet".into())?;
    ensure(e.certificate.report.source_scheme.euler_characteristic() == 2, || "source scheme not spherical".into())?;
    e.reverify(Budget::default()).map_err(|e| e.to_string())?;
    Ok(format!("{} with trivial deck group, rotation #{}", e.provenance, e.embedding_index))
}

fn gate_double_witnesses() -> Gate {
    let w = k4_double_cover_witnesses(Budget::default()).map_err(|e| e.to_string())?;
    let sphere = w.sphere.ok_or("no double cover with sphere quotient")?;
    let projective = w.projective.ok_or("the antipodal cube has no projective-plane witness")?;
    ensure(sphere.certificate.report.surface == SurfaceId::SPHERE, || "sphere witness surface".into())?;
    ensure(projective.certificate.report.surface == SurfaceId::PROJECTIVE_PLANE, || {
        "projective witness surface".into()
    })?;
    let cube = antipodal_cube();
    let iso = find_cover_isomorphism(&projective.cover, &cube, Budget::default()).map_err(|e| e.to_string())?;
    ensure(iso.is_some(), || "projective witness is not the antipodal cube".into())?;
    ensure(sphere.regular && projective.regular, || "witness not regular".into())?;
    sphere.reverify(Budget::default()).map_err(|e| e.to_string())?;
    projective.reverify(Budget::default()).map_err(|e| e.to_string())?;
    Ok(format!(
        "S2: {} (rotation #{}); P2: antipodal cube (rotation #{})",
        sphere.provenance, sphere.embedding_index, projective.embedding_index
    ))
}

fn gate_lifting(p2: &[PairResult]) -> Gate {
    let mut instances: Vec<(String, CoverMap, QuotientReport)> =
        p2.iter().map(|p| (p.label.clone(), p.cover.clone(), p.report.clone())).collect();
    if let Some(h) = have_to_lift_search(Budget::default()).map_err(|e| e.to_string())?.found {
        instances.push((format!("lifted {}", h.name), h.lifted_cover, h.certificate.report));
    }
    ensure(!instances.is_empty(), || "no projective-plane instances".into())?;
    let mut isomorphic = 0;
    for (label, c, report) in &instances {
        let fac = factor_through_universal(c, report).map_err(|e| format!("{label}: {e}"))?;
        let back = fac.odc.projection.compose(&fac.lift).map_err(|e| format!("{label}: {e}"))?;
        ensure(back.dart_map() == c.dart_map() && back.vertex_map() == c.vertex_map(), || {
            format!("{label}: projection after lift differs")
        })?;
        let n = report.degree;
        ensure(fac.lift.classify().degree == Some(n / 2), || format!("{label}: lift degree"))?;
        if n == 2 {
            let iso = find_cover_isomorphism(c, &fac.odc.projection, Budget::default()).map_err(|e| e.to_string())?;
            ensure(iso.is_some(), || format!("{label}: not isomorphic to the orientation double cover"))?;
            isomorphic += 1;
        }
    }
    Ok(format!(
        "{} instances factor exactly; {isomorphic} of degree 2 are isomorphic to the orientation double cover",
        instances.len()
    ))
}

fn gate_gauge() -> Gate {
    let covers: Vec<(String, CoverMap)> =
        sweep_covers().into_iter().filter(|(_, c)| c.target().same_structure(&k4())).collect();
    let results: Vec<Result<usize, String>> = covers
        .par_iter()
        .map(|(label, c)| {
            let mut checked = 0;
            let base_n = c.target().vertex_count();
            for (index, s) in sphere_schemes(c.source(), Budget::new(SWEEP_BUDGET)).map_err(|e| e.to_string())? {
                let PvOutcome::Holds(induced) = check_property_v(c, &s, PvMode::Dihedral).map_err(|e| e.to_string())?
                else {
                    continue;
                };
                let signs = assign_signs(c, &induced, &vec![Sign::Plus; base_n]).map_err(|e| e.to_string())?;
                let verdict = check_property_e(c, &signs).map_err(|e| e.to_string())?.holds();
                let surface = if verdict {
                    Some(quotient_embedding(c, &induced, &signs).map_err(|e| e.to_string())?.surface)
                } else {
                    None
                };
                for mask in 1u32..(1 << base_n) {
                    let mut flipped = signs.clone();
                    for v in c.target().vertices().filter(|v| mask >> v.0 & 1 == 1) {
                        flipped = flipped.flip_fiber(c, v);
                    }
                    ensure(flipped.is_valid_for(c, &induced), || format!("{label} #{index}: flip invalid"))?;
                    let again = check_property_e(c, &flipped).map_err(|e| e.to_string())?.holds();
                    ensure(again == verdict, || format!("{label} #{index} mask {mask}: E verdict changed"))?;
                    if verdict {
                        let q = quotient_embedding(c, &induced, &flipped).map_err(|e| e.to_string())?;
                        ensure(Some(q.surface) == surface, || format!("{label} #{index} mask {mask}: surface changed"))?;
                    }
                    checked += 1;
                }
            }
            Ok(checked)
        })
        .collect();
    let mut flips = 0;
    for r in results {
        flips += r?;
    }
    Ok(format!("{} covers of K4, {flips} fiber flips, 0 violations", covers.len()))
}

fn brute_force_planar(g: &Arc<Graph>) -> bool {
    enumerate_rotation_systems(g, Budget::unlimited())
        .unwrap()
        .find_first(|s| (s.euler_characteristic() == 2).then_some(()))
        .is_some()
}

fn random_connected(rng: &mut StdRng) -> Graph {
    loop {
        let n = rng.gen_range(4..=8usize);
        let max_m = (n * (n - 1) / 2).min(12);
        let m = rng.gen_range(n - 1..=max_m);
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for i in (1..pairs.len()).rev() {
            pairs.swap(i, rng.gen_range(0..=i));
        }
        pairs.truncate(m);
        let g = Graph::from_edges(n, &pairs).unwrap();
        if g.is_connected() && rotation_system_count(&g) <= ORACLE_LIMIT {
            return g;
        }
    }
}

fn gate_planarity() -> Gate {
    let mut graphs: Vec<(String, Arc<Graph>)> = standard_graphs()
        .into_iter()
        .filter(|e| e.graph.edge_count() <= 12)
        .map(|e| (e.name, e.graph))
        .collect();
    let corpus = graphs.len();
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_GRAPHS {
        graphs.push((format!("random #{i}"), Arc::new(random_connected(&mut rng))));
    }
    let disagreements: Vec<String> = graphs
        .par_iter()
        .filter_map(|(name, g)| {
            let fast = planar_embed(g).map(|p| p.is_planar());
            match fast {
                Ok(p) if p == brute_force_planar(g) => None,
                Ok(p) => Some(format!("{name}: planar_embed says {p}")),
                Err(e) => Some(format!("{name}: {e}")),
            }
        })
        .collect();
    ensure(disagreements.is_empty(), || disagreements.join("; "))?;
    let planar = graphs.iter().filter(|(_, g)| planar_embed(g).unwrap().is_planar()).count();
    Ok(format!(
        "{corpus} corpus + {RANDOM_GRAPHS} random graphs agree ({planar} planar, {} not)",
        graphs.len() - planar
    ))
}

fn main() {
    let mut report = Report { failures: 0 };
    let mut p2 = Vec::new();
    report.gate(1, "face tracing oracle", SECOND, gate_faces);
    report.gate(2, "enumeration counts", 10 * SECOND, gate_counts);
    report.gate(3, "quotient soundness over K4, C3, C4", 5 * MINUTE, || gate_soundness(&mut p2));
    report.gate(4, "regular planar double covers fulfil both properties", 5 * MINUTE, gate_regular_implies_pev);
    report.gate(5, "double covers are regular", MINUTE, gate_double_covers_regular);
    report.gate(6, "irregular triple cover of the bouquet", 5 * MINUTE, gate_irregular);
    report.gate(7, "double covers of K4 with sphere and projective quotients", 5 * MINUTE, gate_double_witnesses);
    report.gate(8, "lifting round trip", 5 * MINUTE, || gate_lifting(&p2));
    report.gate(9, "gauge invariance", MINUTE, gate_gauge);
    report.gate(10, "planarity agreement", 5 * MINUTE, gate_planarity);
    if report.failures > 0 {
        eprintln!("{} acceptance gate(s) failed", report.failures);
        std::process::exit(1);
    }
}
