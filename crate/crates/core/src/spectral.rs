//! Spectral certificates and the pseudorandomness checks that hang off them.
//!
//! A regular graph earns an (n, d, λ) certificate from a dense symmetric
//! eigensolve of its adjacency matrix: λ is the largest magnitude among
//! non-principal eigenvalues. The certificate then powers three finite
//! checks: the mixing inequality `|e(S,T) - (d/n)|S||T|| < λ sqrt(|S||T|)`
//! on explicit subset pairs, the independent-tuple upper bound `(4enλ/d)^t`
//! with its validity threshold `t >= 2n (ln n)^2 / d`, and step-by-step
//! bookkeeping of the greedy candidate process behind that bound.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng;
use crate::util::round_sig12;

/// Largest adjacency matrix the dense eigensolver accepts by default.
pub const DEFAULT_SPECTRUM_CAP: usize = 500;

/// Default absolute tolerance for floating-point certification checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Full adjacency spectrum in descending order.
///
/// Dense symmetric eigensolve; `cap` guards against accidentally requesting
/// a matrix too large to factor in reasonable time.
pub fn adjacency_spectrum(g: &Graph, cap: usize) -> Result<Vec<f64>> {
    if g.n() > cap {
        return Err(Error::SizeLimit { n: g.n(), cap });
    }
    let n = g.n();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            m[(u, v)] = 1.0;
        }
    }
    let mut eigs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    Ok(eigs)
}

/// An (n, d, λ) certificate for a regular graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralCertificate {
    /// Vertex count n.
    pub vertex_count: usize,
    /// Common degree d.
    pub degree: usize,
    /// Largest |eigenvalue| outside the principal one, rounded to 12
    /// significant digits.
    pub lambda: f64,
    /// Full spectrum, descending, each value rounded.
    pub eigenvalues: Vec<f64>,
    /// Absolute tolerance the certification checks ran under.
    pub tolerance: f64,
    /// λ / (2 sqrt(d-1)), how far above the Ramanujan floor λ sits;
    /// absent for degrees below 2.
    pub ramanujan_ratio: Option<f64>,
}

/// Certifies a regular graph as an (n, d, λ)-graph.
///
/// Errors with [`Error::NotRegular`] on irregular input,
/// [`Error::SizeLimit`] above `cap`, and a precondition error if the
/// eigensolver drifts: the principal eigenvalue of a d-regular graph must be
/// d within `tolerance`.
pub fn certify_spectrum(g: &Graph, cap: usize, tolerance: f64) -> Result<SpectralCertificate> {
    let degree = g.degree_profile().ok_or(Error::NotRegular)?;
    let raw = adjacency_spectrum(g, cap)?;
    let drift = (raw[0] - degree as f64).abs();
    if drift > tolerance.max(1e-12) * (degree.max(1) as f64) {
        return Err(Error::Precondition(format!(
            "principal eigenvalue {} drifted from degree {degree} beyond tolerance",
            raw[0]
        )));
    }
    let lambda = raw[1..].iter().map(|e| e.abs()).fold(0.0f64, f64::max);
    let ramanujan_ratio = (degree >= 2).then(|| round_sig12(lambda / (2.0 * ((degree - 1) as f64).sqrt())));
    Ok(SpectralCertificate {
        vertex_count: g.n(),
        degree,
        lambda: round_sig12(lambda),
        eigenvalues: raw.into_iter().map(round_sig12).collect(),
        tolerance,
        ramanujan_ratio,
    })
}

// ==================================================================
// mixing inequality
// ==================================================================

/// One evaluation of the mixing inequality on an explicit subset pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixingCheck {
    /// e(S,T): ordered adjacent pairs with first coordinate in S, second in T.
    pub ordered_pairs: usize,
    /// (d/n)|S||T|.
    pub predicted: f64,
    /// |e(S,T) - predicted|.
    pub residual: f64,
    /// λ sqrt(|S||T|).
    pub bound: f64,
    /// residual < bound + tolerance.
    pub passes: bool,
}

/// Ordered-pair edge count between `s` and `t` (edges inside the
/// intersection count twice, once per direction).
pub fn crossing_pairs(g: &Graph, s: &VertexSet, t: &VertexSet) -> usize {
    s.iter().map(|v| g.neighbors(v).intersection_len(t)).sum()
}

/// Checks the mixing inequality for one subset pair against a certificate.
/// Both subsets must be nonempty (the inequality is vacuous otherwise).
pub fn mixing_check(
    g: &Graph,
    cert: &SpectralCertificate,
    s: &VertexSet,
    t: &VertexSet,
    tolerance: f64,
) -> Result<MixingCheck> {
    if cert.vertex_count != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: cert.vertex_count,
        });
    }
    if s.is_empty() || t.is_empty() {
        return Err(Error::Precondition(
            "mixing check needs nonempty subsets".into(),
        ));
    }
    let e_st = crossing_pairs(g, s, t);
    let predicted = cert.degree as f64 / g.n() as f64 * s.len() as f64 * t.len() as f64;
    let residual = (e_st as f64 - predicted).abs();
    let bound = cert.lambda * (s.len() as f64 * t.len() as f64).sqrt();
    Ok(MixingCheck {
        ordered_pairs: e_st,
        predicted: round_sig12(predicted),
        residual: round_sig12(residual),
        bound: round_sig12(bound),
        passes: residual < bound + tolerance,
    })
}

/// Aggregate of many sampled mixing checks on one certified graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixingSampleReport {
    pub vertex_count: usize,
    pub degree: usize,
    pub lambda: f64,
    /// Slack added to the bound before declaring a violation.
    pub tolerance: f64,
    pub seed: u64,
    /// Nonempty subset pairs checked (empty draws are redrawn).
    pub samples: usize,
    /// Pairs whose residual reached the bound; the inequality is a theorem,
    /// so anything nonzero points at an implementation bug.
    pub violations: usize,
    /// Smallest observed `bound - residual`, rounded; positive means every
    /// sampled pair satisfied the strict inequality.
    pub min_slack: f64,
}

/// Draws `samples` uniformly random nonempty subset pairs and runs
/// [`mixing_check`] on each.
pub fn sample_mixing(
    g: &Graph,
    cert: &SpectralCertificate,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<MixingSampleReport> {
    let mut rng = rng::rng_from_seed(seed);
    let mut violations = 0;
    let mut min_slack = f64::INFINITY;
    for _ in 0..samples {
        let s = loop {
            let s = rng::subset_half(&mut rng, g.n());
            if !s.is_empty() {
                break s;
            }
        };
        let t = loop {
            let t = rng::subset_half(&mut rng, g.n());
            if !t.is_empty() {
                break t;
            }
        };
        let check = mixing_check(g, cert, &s, &t, tolerance)?;
        min_slack = min_slack.min(check.bound - check.residual);
        if !check.passes {
            violations += 1;
        }
    }
    Ok(MixingSampleReport {
        vertex_count: g.n(),
        degree: cert.degree,
        lambda: cert.lambda,
        tolerance: round_sig12(tolerance),
        seed,
        samples,
        violations,
        min_slack: round_sig12(min_slack),
    })
}

// ==================================================================
// independent-tuple upper bound
// ==================================================================

/// The `(4enλ/d)^t` upper bound on independent `t`-tuples, in log space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TupleBoundReport {
    pub vertex_count: usize,
    pub degree: usize,
    pub lambda: f64,
    pub tuple_length: usize,
    /// Smallest tuple length the bound is proved for: `2n (ln n)^2 / d`.
    /// Absent when d = 0 leaves it undefined.
    pub length_threshold: Option<f64>,
    /// Whether `t` clears the threshold.
    pub precondition_met: bool,
    /// `ln(4 e n λ / d)`, the per-coordinate log factor; absent when λ = 0
    /// or d = 0 degenerates it (a zero factor has log -inf).
    pub log_factor: Option<f64>,
    /// `t * ln(4 e n λ / d)`; the tuple count is below `e^{log_bound}`.
    pub log_bound: Option<f64>,
    /// True when λ = 0 or d = 0 made the bound degenerate.
    pub degenerate: bool,
}

/// Evaluates the tuple upper bound for length `t >= 1`. Never rejects:
/// an unmet length threshold or a degenerate certificate is reported in the
/// flags, since the caller may still want the arithmetic.
pub fn tuple_upper_bound(cert: &SpectralCertificate, t: usize) -> Result<TupleBoundReport> {
    if t == 0 {
        return Err(Error::Precondition("tuple length must be at least 1".into()));
    }
    let n = cert.vertex_count as f64;
    let d = cert.degree as f64;
    let degenerate = cert.degree == 0 || cert.lambda <= 0.0;
    let length_threshold = (cert.degree > 0).then(|| round_sig12(2.0 * n * n.ln().powi(2) / d));
    let precondition_met = length_threshold.map(|th| t as f64 >= th).unwrap_or(false);
    let (log_factor, log_bound) = if degenerate {
        (None, None)
    } else {
        let factor = (4.0 * std::f64::consts::E * n * cert.lambda / d).ln();
        (
            Some(round_sig12(factor)),
            Some(round_sig12(t as f64 * factor)),
        )
    };
    Ok(TupleBoundReport {
        vertex_count: cert.vertex_count,
        degree: cert.degree,
        lambda: cert.lambda,
        tuple_length: t,
        length_threshold,
        precondition_met,
        log_factor,
        log_bound,
        degenerate,
    })
}

// ==================================================================
// greedy candidate trace
// ==================================================================

/// Step-by-step bookkeeping of the greedy candidate process for one
/// pairwise-nonadjacent sequence.
///
/// `S_k` is the set of vertices with no edge into the first `k-1` sequence
/// entries (earlier entries themselves included, since nothing is adjacent
/// to itself); `T_k` collects the low-degree members of `S_k`, those with
/// fewer than `(d/2n)|S_k|` neighbors inside `S_k`. The spectral certificate
/// caps `|T_k|` strictly below `2nλ/d`, and picks outside `T_k` shrink the
/// candidate pool geometrically, which caps how many such picks fit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub vertex_count: usize,
    pub degree: usize,
    pub lambda: f64,
    pub sequence: Vec<usize>,
    /// |S_k| for k = 1..=len(sequence); nonincreasing.
    pub sk_sizes: Vec<usize>,
    /// |T_k| for the same k.
    pub tk_sizes: Vec<usize>,
    /// Steps whose pick fell in S_k \ T_k, each of which shrinks the pool by
    /// a (1 - d/2n) factor.
    pub shrink_steps: usize,
    /// `2nλ/d`, the cap on every |T_k|; absent when d = 0 makes it vacuous.
    pub tk_bound: Option<f64>,
    /// `(2n/d) ln n`, the cap on shrink steps; absent when d = 0.
    pub tprime_bound: Option<f64>,
    /// 1-based steps whose |T_k| reached the cap. Nonempty contradicts the
    /// mixing inequality and indicates an implementation bug.
    pub bound_violations: Vec<usize>,
}

/// Traces the greedy candidate sets along `sequence`.
///
/// The sequence may repeat vertices but must be pairwise nonadjacent; an
/// adjacent pair inside it is reported as [`Error::AdjacentPair`].
pub fn candidate_trace(
    g: &Graph,
    cert: &SpectralCertificate,
    sequence: &[usize],
) -> Result<TraceReport> {
    if cert.vertex_count != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: cert.vertex_count,
        });
    }
    if sequence.is_empty() {
        return Err(Error::Precondition("candidate sequence is empty".into()));
    }
    for &v in sequence {
        if v >= g.n() {
            return Err(Error::InvalidGraph(format!(
                "sequence vertex {v} out of range [0, {})",
                g.n()
            )));
        }
    }
    for (i, &u) in sequence.iter().enumerate() {
        for &v in &sequence[i + 1..] {
            if g.has_edge(u, v) {
                return Err(Error::AdjacentPair { u, v });
            }
        }
    }
    let n = g.n() as f64;
    let d = cert.degree as f64;
    let (tk_bound, tprime_bound) = if cert.degree == 0 {
        (None, None)
    } else {
        (
            Some(round_sig12(2.0 * n * cert.lambda / d)),
            Some(round_sig12(2.0 * n / d * n.ln())),
        )
    };

    let mut sk = VertexSet::full(g.n());
    let mut sk_sizes = Vec::with_capacity(sequence.len());
    let mut tk_sizes = Vec::with_capacity(sequence.len());
    let mut shrink_steps = 0;
    let mut bound_violations = Vec::new();
    for (k, &v) in sequence.iter().enumerate() {
        debug_assert!(sk.contains(v), "nonadjacent sequences stay inside S_k");
        sk_sizes.push(sk.len());
        let threshold = d / (2.0 * n) * sk.len() as f64;
        let tk_size = sk
            .iter()
            .filter(|&u| (g.neighbors(u).intersection_len(&sk) as f64) < threshold)
            .count();
        tk_sizes.push(tk_size);
        let in_tk = (g.neighbors(v).intersection_len(&sk) as f64) < threshold;
        if !in_tk {
            shrink_steps += 1;
        }
        if let Some(bound) = tk_bound {
            if tk_size as f64 >= bound {
                bound_violations.push(k + 1);
            }
        }
        // advance: drop everything adjacent to v (v itself stays, loopless)
        sk = sk.difference(g.neighbors(v));
    }
    Ok(TraceReport {
        vertex_count: g.n(),
        degree: cert.degree,
        lambda: cert.lambda,
        sequence: sequence.to_vec(),
        sk_sizes,
        tk_sizes,
        shrink_steps,
        tk_bound,
        tprime_bound,
        bound_violations,
    })
}

/// Draws a random pairwise-nonadjacent sequence by the greedy process
/// itself: each entry is uniform over the current candidate set `S_k`, so
/// repeats can occur exactly as the bookkeeping allows. Stops at `max_len`
/// entries or when the candidate pool empties.
pub fn random_nonadjacent_sequence(
    g: &Graph,
    rng: &mut rand_chacha::ChaCha8Rng,
    max_len: usize,
) -> Vec<usize> {
    let mut sk = VertexSet::full(g.n());
    let mut seq = Vec::new();
    while seq.len() < max_len && !sk.is_empty() {
        let idx = rng::uniform_below(rng, sk.len() as u64) as usize;
        let v = sk.iter().nth(idx).expect("index is below the set size");
        seq.push(v);
        sk = sk.difference(g.neighbors(v));
    }
    seq
}

/// Aggregate of traced random sequences on one certified graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSampleReport {
    pub vertex_count: usize,
    pub degree: usize,
    pub lambda: f64,
    pub seed: u64,
    pub samples: usize,
    pub max_len: usize,
    /// Sequences with any |T_k| at or above 2nλ/d (must stay 0).
    pub tk_violations: usize,
    /// Sequences whose shrink-step count exceeded ⌈(2n/d) ln n⌉ (must stay 0).
    pub shrink_violations: usize,
    /// Largest |T_k| seen anywhere.
    pub max_tk: usize,
    /// Largest shrink-step count seen.
    pub max_shrink_steps: usize,
}

/// Traces `samples` random nonadjacent sequences and tallies the bound
/// checks across all of them.
pub fn sample_traces(
    g: &Graph,
    cert: &SpectralCertificate,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> Result<TraceSampleReport> {
    let mut rng = rng::rng_from_seed(seed);
    let mut tk_violations = 0;
    let mut shrink_violations = 0;
    let mut max_tk = 0;
    let mut max_shrink_steps = 0;
    for _ in 0..samples {
        let seq = random_nonadjacent_sequence(g, &mut rng, max_len);
        let report = candidate_trace(g, cert, &seq)?;
        if !report.bound_violations.is_empty() {
            tk_violations += 1;
        }
        if let Some(tprime) = report.tprime_bound {
            if report.shrink_steps as f64 > tprime.ceil() {
                shrink_violations += 1;
            }
        }
        max_tk = max_tk.max(report.tk_sizes.iter().copied().max().unwrap_or(0));
        max_shrink_steps = max_shrink_steps.max(report.shrink_steps);
    }
    Ok(TraceSampleReport {
        vertex_count: g.n(),
        degree: cert.degree,
        lambda: cert.lambda,
        seed,
        samples,
        max_len,
        tk_violations,
        shrink_violations,
        max_tk,
        max_shrink_steps,
    })
}
