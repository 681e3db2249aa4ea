//! Deterministic file formats and replayable certificate documents.
//!
//! Graphs travel as a human-diffable edge list (with optional graph6 for
//! interop), colorings as an edge-color list with the final color implicit,
//! and every analysis result as a JSON `CertificateDocument` whose
//! provenance records the exact recipes and seeds that produced it.
//! [`replay_document`] re-derives the payload from that provenance and
//! demands byte equality, so a document is evidence, not just output.
//!
//! All writes go through a temp file in the target directory followed by a
//! rename, so readers never observe a half-written file.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    self, BlowupBoundReport, ExpectationSampleReport, ParameterSuggestion, UnionBoundReport,
};
use crate::certify::{self, FailureReport, RamseyWitness};
use crate::color::{self, ColoredGraph, RamseyInstance, UnionAudit, VerificationReport};
use crate::count::{self, TupleCountReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recipe::GraphRecipe;
use crate::spectral::{
    self, MixingSampleReport, SpectralCertificate, TraceReport, TraceSampleReport,
    TupleBoundReport, DEFAULT_SPECTRUM_CAP, DEFAULT_TOLERANCE,
};

/// Document format identifier, bumped on breaking payload changes.
pub const FORMAT_VERSION: &str = "1.0";

/// Provenance entry prefix marking a coloring file instead of a graph
/// recipe.
pub const COLORING_SPEC_PREFIX: &str = "coloring-file:";

// ==================================================================
// atomic writes
// ==================================================================

/// Writes bytes through a sibling temp file plus rename.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

// ==================================================================
// graph files: text edge lists
// ==================================================================

/// Renders a graph in the text format: an optional label comment, a header
/// line `n m`, then the `m` edges `u v` (u < v) in ascending lexicographic
/// order.
pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    if !g.label().is_empty() {
        out.push_str(&format!("# label: {}\n", g.label()));
    }
    let edges = g.edges();
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_usize_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line: lineno,
            msg: "expected two integers".into(),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("{line:?} is not an integer pair"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: "expected exactly two integers".into(),
        });
    }
    Ok((a, b))
}

/// Parses the text edge-list format. Comment lines (`#`) and blank lines
/// are skipped but still counted for error positions; a `# label:` comment
/// restores the graph's label.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut label: Option<String> = None;
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if label.is_none() {
                if let Some(rest) = comment.trim().strip_prefix("label:") {
                    label = Some(rest.trim().to_string());
                }
            }
            continue;
        }
        match header {
            None => {
                let (n, m) = parse_usize_pair(line, lineno)?;
                header = Some((n, m, lineno));
            }
            Some((n, _, _)) => {
                let (u, v) = parse_usize_pair(line, lineno)?;
                if u >= v {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("edge {u} {v} must have u < v"),
                    });
                }
                if v >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {v} out of range [0, {n})"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let (n, m, header_line) = header.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `n m` header line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header says {m} edges, file lists {}", edges.len()),
        });
    }
    let label = label.unwrap_or_else(|| format!("graph({n})"));
    Graph::from_edges(n, &edges, label)
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<()> {
    atomic_write(path, format_graph(g).as_bytes())
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

// ==================================================================
// graph files: graph6 interop
// ==================================================================

const G6_MAX_N: usize = 258_047;

/// Encodes a graph in graph6: the size header, then the upper-triangle
/// adjacency bits in column-major order, six bits per printable byte.
pub fn graph_to_g6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > G6_MAX_N {
        return Err(Error::SizeLimit { n, cap: G6_MAX_N });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("six-bit groups plus 63 are printable"))
}

/// Decodes graph6, accepting an optional `>>graph6<<` prefix.
pub fn graph_from_g6(text: &str) -> Result<Graph> {
    let text = text.trim_start_matches(">>graph6<<").trim();
    let bytes = text.as_bytes();
    let bad = |msg: &str| Error::Parse {
        line: 1,
        msg: msg.into(),
    };
    if bytes.is_empty() {
        return Err(bad("empty graph6 string"));
    }
    let sextet = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(bad(&format!("byte {b} outside the graph6 range 63..=126")))
        }
    };
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported graph6 size header"));
        }
        let n = (sextet(bytes[1])? << 12) | (sextet(bytes[2])? << 6) | sextet(bytes[3])?;
        (n, &bytes[4..])
    } else {
        (sextet(bytes[0])?, &bytes[1..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad(&format!(
            "graph6 body has {} bytes, {} vertices need {}",
            body.len(),
            n,
            pairs.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = sextet(body[idx / 6])?;
            if byte & (1 << (5 - idx % 6)) != 0 {
                edges.push((u, v));
            }
            idx += 1;
            if idx == pairs {
                break 'outer;
            }
        }
    }
    // trailing padding bits must be zero
    if pairs % 6 != 0 {
        let tail = sextet(body[pairs / 6])?;
        if tail & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits in graph6 body"));
        }
    }
    Graph::from_edges(n, &edges, format!("graph({n})"))
}

pub fn write_graph_g6(g: &Graph, path: &Path) -> Result<()> {
    let mut text = graph_to_g6(g)?;
    text.push('\n');
    atomic_write(path, text.as_bytes())
}

pub fn read_graph_g6(path: &Path) -> Result<Graph> {
    graph_from_g6(&fs::read_to_string(path)?)
}

// ==================================================================
// coloring files
// ==================================================================

/// Renders a coloring: header `n palette m`, then `m` lines `u v c` in
/// ascending lexicographic order covering every edge NOT in the final
/// color; unlisted pairs carry the final (= palette) color.
pub fn format_coloring(c: &ColoredGraph) -> String {
    let palette = c.palette() as u8;
    let mut listed = Vec::new();
    for u in 0..c.n() {
        for v in (u + 1)..c.n() {
            let col = c.color(u, v);
            if col != palette {
                listed.push((u, v, col));
            }
        }
    }
    let mut out = format!("{} {} {}\n", c.n(), c.palette(), listed.len());
    for (u, v, col) in listed {
        out.push_str(&format!("{u} {v} {col}\n"));
    }
    out
}

/// Parses the coloring format; every unlisted pair gets the final color.
pub fn parse_coloring(text: &str) -> Result<ColoredGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut cells: Option<Vec<Option<u8>>> = None;
    let mut listed = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if nums.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "coloring header must be `n palette m`".into(),
                    });
                }
                let parse = |tok: &str| -> Result<usize> {
                    tok.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("{tok:?} is not an integer"),
                    })
                };
                let n = parse(nums[0])?;
                let palette = parse(nums[1])?;
                let m = parse(nums[2])?;
                if n == 0 || palette == 0 || palette > u8::MAX as usize {
                    return Err(Error::MalformedColoring(format!(
                        "coloring header n={n} palette={palette} out of range"
                    )));
                }
                header = Some((n, palette, m));
                cells = Some(vec![None; n * n.saturating_sub(1) / 2]);
            }
            Some((n, palette, _)) => {
                if nums.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "edge lines must be `u v c`".into(),
                    });
                }
                let parse = |tok: &str| -> Result<usize> {
                    tok.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("{tok:?} is not an integer"),
                    })
                };
                let u = parse(nums[0])?;
                let v = parse(nums[1])?;
                let col = parse(nums[2])?;
                if u >= v || v >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("pair {u} {v} out of range for {n} vertices"),
                    });
                }
                if col == 0 || col >= palette {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!(
                            "color {col} must be in 1..{palette} (the final color is implicit)"
                        ),
                    });
                }
                let slot = &mut cells.as_mut().expect("header parsed")
                    [u * (2 * n - u - 1) / 2 + (v - u - 1)];
                if slot.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("pair {u} {v} listed twice"),
                    });
                }
                *slot = Some(col as u8);
                listed += 1;
            }
        }
    }
    let (n, palette, m) = header.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `n palette m` header line".into(),
    })?;
    if listed != m {
        return Err(Error::MalformedColoring(format!(
            "header says {m} colored edges, file lists {listed}"
        )));
    }
    let cells = cells.expect("header parsed");
    ColoredGraph::from_fn(n, palette, |u, v| {
        cells[u * (2 * n - u - 1) / 2 + (v - u - 1)].unwrap_or(palette as u8)
    })
}

pub fn write_coloring(c: &ColoredGraph, path: &Path) -> Result<()> {
    atomic_write(path, format_coloring(c).as_bytes())
}

pub fn read_coloring(path: &Path) -> Result<ColoredGraph> {
    parse_coloring(&fs::read_to_string(path)?)
}

// ==================================================================
// certificate documents
// ==================================================================

/// Everything needed to reproduce a payload: recipes, seeds, and context.
/// Timestamps and tool version are informational and excluded from replay
/// comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub master_seed: Option<u64>,
    pub derived_seeds: Vec<u64>,
    /// Graph recipes (and `coloring-file:` references) the payload was
    /// computed from, in positional order.
    pub source_family_specs: Vec<String>,
    /// Unix-epoch creation times, e.g. `unix:1724227200`.
    pub timestamps: Vec<String>,
}

impl Provenance {
    /// Provenance for a deterministic payload built from the given specs.
    pub fn new(source_family_specs: Vec<String>) -> Provenance {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            master_seed: None,
            derived_seeds: Vec::new(),
            source_family_specs,
            timestamps: vec![format!("unix:{now}")],
        }
    }

    pub fn with_master_seed(mut self, seed: u64) -> Provenance {
        self.master_seed = Some(seed);
        self
    }

    pub fn with_derived_seeds(mut self, seeds: Vec<u64>) -> Provenance {
        self.derived_seeds = seeds;
        self
    }
}

/// Verification of an explicitly supplied coloring (no generator recipe).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckedColoring {
    pub instance: RamseyInstance,
    pub coloring_checksum: u64,
    pub class_sizes: Vec<usize>,
    pub verification: VerificationReport,
}

/// Payload of a witness-kind document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum WitnessPayload {
    /// A seed search ended in a verified witness.
    Valid(RamseyWitness),
    /// A seed search exhausted its budget.
    Exhausted(FailureReport),
    /// A supplied coloring was verified as-is.
    Checked(CheckedColoring),
}

/// Payload of an audit-kind document, discriminated by which check ran.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum AuditPayload {
    /// Union-graph measurements of a coloring.
    Union {
        instance: RamseyInstance,
        audit: UnionAudit,
    },
    /// Sampled mixing checks.
    MixingSample(MixingSampleReport),
    /// One traced candidate sequence.
    Trace(TraceReport),
    /// Sampled candidate traces.
    TraceSample(TraceSampleReport),
    /// Sampled blowup expectation versus the exact value.
    ExpectationSample(ExpectationSampleReport),
    /// Independent-tuple upper bound.
    TupleBound(TupleBoundReport),
    /// Blowup independence bound.
    BlowupBound(BlowupBoundReport),
    /// Assembled union bound over an instance.
    UnionBound(UnionBoundReport),
    /// Heuristic parameter suggestion.
    Suggestion {
        forbidden: Vec<usize>,
        alphas: Vec<f64>,
        suggestion: ParameterSuggestion,
    },
}

/// The document body: its kind tag plus the matching payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum DocumentBody {
    Spectral(SpectralCertificate),
    Witness(WitnessPayload),
    TupleCount(TupleCountReport),
    Audit(AuditPayload),
}

/// A self-describing, replayable analysis result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub format_version: String,
    #[serde(flatten)]
    pub body: DocumentBody,
    pub provenance: Provenance,
}

impl CertificateDocument {
    pub fn new(body: DocumentBody, provenance: Provenance) -> CertificateDocument {
        CertificateDocument {
            format_version: FORMAT_VERSION.to_string(),
            body,
            provenance,
        }
    }
}

/// Serializes just the body (kind + payload), the portion replays compare.
pub fn payload_bytes(doc: &CertificateDocument) -> Result<Vec<u8>> {
    Ok(serde_json::to_vec(&doc.body)?)
}

pub fn write_document(doc: &CertificateDocument, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    atomic_write(path, text.as_bytes())
}

pub fn read_document(path: &Path) -> Result<CertificateDocument> {
    let doc: CertificateDocument = serde_json::from_str(&fs::read_to_string(path)?)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Replay(format!(
            "unsupported format version {:?}, this build writes {FORMAT_VERSION:?}",
            doc.format_version
        )));
    }
    Ok(doc)
}

// ==================================================================
// replay
// ==================================================================

fn graphs_from_provenance(prov: &Provenance) -> Result<Vec<Graph>> {
    prov.source_family_specs
        .iter()
        .filter(|s| !s.starts_with(COLORING_SPEC_PREFIX))
        .map(|s| GraphRecipe::build_str(s))
        .collect()
}

fn first_graph(prov: &Provenance) -> Result<Graph> {
    graphs_from_provenance(prov)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Replay("provenance records no graph recipe".into()))
}

fn coloring_from_provenance(prov: &Provenance) -> Result<ColoredGraph> {
    let spec = prov
        .source_family_specs
        .iter()
        .find_map(|s| s.strip_prefix(COLORING_SPEC_PREFIX))
        .ok_or_else(|| Error::Replay("provenance records no coloring file".into()))?;
    read_coloring(Path::new(spec))
}

fn fresh_certificate(g: &Graph, tolerance: f64) -> Result<SpectralCertificate> {
    spectral::certify_spectrum(g, DEFAULT_SPECTRUM_CAP.max(g.n()), tolerance)
}

/// Re-derives a document's payload from its provenance. The rebuilt body
/// must serialize to exactly the stored body's bytes.
pub fn replay_document(doc: &CertificateDocument) -> Result<()> {
    let prov = &doc.provenance;
    let rebuilt: DocumentBody = match &doc.body {
        DocumentBody::Spectral(cert) => {
            let g = first_graph(prov)?;
            DocumentBody::Spectral(fresh_certificate(&g, cert.tolerance)?)
        }
        DocumentBody::TupleCount(report) => {
            let g = first_graph(prov)?;
            DocumentBody::TupleCount(count::count_independent_tuples(
                &g,
                report.tuple_length,
                u64::MAX,
            )?)
        }
        DocumentBody::Witness(WitnessPayload::Valid(w)) => {
            let sources = graphs_from_provenance(prov)?;
            let k = w.instance.forbidden.len();
            if let Some(master) = w.master_seed {
                let (blowup, perm) = certify::trial_seeds(master, w.trial, k);
                if blowup != w.blowup_seeds || perm != w.permutation_seeds {
                    return Err(Error::Replay(
                        "recorded seeds do not derive from the master seed".into(),
                    ));
                }
            }
            let coloring = certify::assemble_trial(
                &sources,
                &w.instance,
                w.mode,
                &w.blowup_seeds,
                &w.permutation_seeds,
            )?;
            let verification = color::verify_witness(&coloring, &w.instance)?;
            DocumentBody::Witness(WitnessPayload::Valid(RamseyWitness {
                instance: w.instance.clone(),
                mode: w.mode,
                tie_rule: w.tie_rule,
                master_seed: w.master_seed,
                trial: w.trial,
                blowup_seeds: w.blowup_seeds.clone(),
                permutation_seeds: w.permutation_seeds.clone(),
                class_sizes: coloring.class_sizes(),
                coloring_checksum: certify::coloring_checksum(&coloring),
                verification,
            }))
        }
        DocumentBody::Witness(WitnessPayload::Exhausted(report)) => {
            let sources = graphs_from_provenance(prov)?;
            let outcome = certify::certify(
                &sources,
                &report.instance,
                report.mode,
                report.master_seed.unwrap_or(0),
                report.trials_attempted,
            )?;
            match outcome {
                certify::CertifyOutcome::Exhausted(rebuilt) => {
                    DocumentBody::Witness(WitnessPayload::Exhausted(rebuilt))
                }
                certify::CertifyOutcome::Valid(_) => {
                    return Err(Error::Replay(
                        "replay found a witness where the document recorded exhaustion".into(),
                    ));
                }
            }
        }
        DocumentBody::Witness(WitnessPayload::Checked(checked)) => {
            let coloring = coloring_from_provenance(prov)?;
            let verification = color::verify_witness(&coloring, &checked.instance)?;
            DocumentBody::Witness(WitnessPayload::Checked(CheckedColoring {
                instance: checked.instance.clone(),
                coloring_checksum: certify::coloring_checksum(&coloring),
                class_sizes: coloring.class_sizes(),
                verification,
            }))
        }
        DocumentBody::Audit(AuditPayload::Union { instance, .. }) => {
            let coloring = coloring_from_provenance(prov)?;
            DocumentBody::Audit(AuditPayload::Union {
                instance: instance.clone(),
                audit: color::audit_union(&coloring, instance)?,
            })
        }
        DocumentBody::Audit(AuditPayload::MixingSample(r)) => {
            let g = first_graph(prov)?;
            let cert = fresh_certificate(&g, r.tolerance)?;
            DocumentBody::Audit(AuditPayload::MixingSample(spectral::sample_mixing(
                &g,
                &cert,
                r.samples,
                r.seed,
                r.tolerance,
            )?))
        }
        DocumentBody::Audit(AuditPayload::Trace(r)) => {
            let g = first_graph(prov)?;
            let cert = fresh_certificate(&g, DEFAULT_TOLERANCE)?;
            DocumentBody::Audit(AuditPayload::Trace(spectral::candidate_trace(
                &g,
                &cert,
                &r.sequence,
            )?))
        }
        DocumentBody::Audit(AuditPayload::TraceSample(r)) => {
            let g = first_graph(prov)?;
            let cert = fresh_certificate(&g, DEFAULT_TOLERANCE)?;
            DocumentBody::Audit(AuditPayload::TraceSample(spectral::sample_traces(
                &g, &cert, r.samples, r.max_len, r.seed,
            )?))
        }
        DocumentBody::Audit(AuditPayload::ExpectationSample(r)) => {
            let g = first_graph(prov)?;
            DocumentBody::Audit(AuditPayload::ExpectationSample(bounds::sample_expectation(
                &g,
                r.target_n,
                r.set_size,
                r.trials,
                r.seed,
                r.forbidden_clique,
                u64::MAX,
            )?))
        }
        DocumentBody::Audit(AuditPayload::TupleBound(r)) => {
            let g = first_graph(prov)?;
            let cert = fresh_certificate(&g, DEFAULT_TOLERANCE)?;
            DocumentBody::Audit(AuditPayload::TupleBound(spectral::tuple_upper_bound(
                &cert,
                r.tuple_length,
            )?))
        }
        DocumentBody::Audit(AuditPayload::BlowupBound(r)) => {
            let g = first_graph(prov)?;
            let cert = fresh_certificate(&g, DEFAULT_TOLERANCE)?;
            DocumentBody::Audit(AuditPayload::BlowupBound(bounds::blowup_independence_bound(
                &cert,
                r.target_n,
                r.set_size,
            )?))
        }
        DocumentBody::Audit(AuditPayload::UnionBound(r)) => {
            let graphs = graphs_from_provenance(prov)?;
            let certs = graphs
                .iter()
                .map(|g| fresh_certificate(g, DEFAULT_TOLERANCE))
                .collect::<Result<Vec<_>>>()?;
            DocumentBody::Audit(AuditPayload::UnionBound(bounds::union_bound_report(
                &certs,
                &r.instance,
            )?))
        }
        DocumentBody::Audit(AuditPayload::Suggestion {
            forbidden,
            alphas,
            suggestion,
        }) => {
            if forbidden.len() != alphas.len() {
                return Err(Error::Replay(
                    "suggestion records mismatched clique and alpha lists".into(),
                ));
            }
            let pairs: Vec<(usize, f64)> =
                forbidden.iter().copied().zip(alphas.iter().copied()).collect();
            DocumentBody::Audit(AuditPayload::Suggestion {
                forbidden: forbidden.clone(),
                alphas: alphas.clone(),
                suggestion: bounds::suggest_parameters(&pairs, suggestion.final_clique)?,
            })
        }
    };
    let stored = serde_json::to_vec(&doc.body)?;
    let fresh = serde_json::to_vec(&rebuilt)?;
    if stored != fresh {
        return Err(Error::Replay(
            "payload does not reproduce from its provenance".into(),
        ));
    }
    Ok(())
}
