//! Generators for concrete K_s-free graph families with known spectra, and
//! the two rescaling maps that move a family member between sizes: the
//! deterministic balanced blowup and the seeded random blowup.

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;
use crate::util::round_sig12;

/// Largest Paley modulus the generator accepts.
pub const PALEY_CAP: usize = 10_000;

// ==================================================================
// fixed families
// ==================================================================

/// The n-cycle, `n >= 3`. Triangle-free from n = 4 on; cycle(3) is K_3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    Graph::from_edges(n, &edges, format!("cycle({n})"))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_fn(n, format!("complete({n})"), |_, _| true)
}

/// Edgeless graph on `n >= 1` vertices.
pub fn edgeless(n: usize) -> Result<Graph> {
    Graph::from_edges(n, &[], format!("empty({n})"))
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Paley graph on a prime `q ≡ 1 (mod 4)`: vertices are residues mod q,
/// adjacent when their difference is a nonzero square. A
/// `(q, (q-1)/2, (1+sqrt q)/2)`-graph.
pub fn paley(q: usize) -> Result<Graph> {
    if q > PALEY_CAP {
        return Err(Error::SizeLimit { n: q, cap: PALEY_CAP });
    }
    if !is_prime(q) {
        return Err(Error::InvalidModulus {
            q,
            reason: "not prime".into(),
        });
    }
    if q % 4 != 1 {
        return Err(Error::InvalidModulus {
            q,
            reason: "not congruent to 1 mod 4".into(),
        });
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    // q ≡ 1 mod 4 makes -1 a square, so "u - v is a square" is symmetric
    Graph::from_fn(q, format!("paley({q})"), |u, v| residue[(q + u - v) % q])
}

/// Complete balanced r-partite graph on `n` vertices (`r >= 2`, `r | n`),
/// with parts as contiguous blocks of size n/r. K_{r+1}-free; an
/// `(n, n - n/r, n/r)`-graph.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::Precondition(format!(
            "a complete multipartite graph needs at least 2 parts, got {r}"
        )));
    }
    if n == 0 || n % r != 0 {
        return Err(Error::Divisibility { n, r });
    }
    let part = n / r;
    Graph::from_fn(n, format!("turan({n},{r})"), |u, v| u / part != v / part)
}

// ==================================================================
// blowups
// ==================================================================

/// A vertex assignment `f: [target_n] -> [source_n]` realizing a blowup:
/// target vertices i, j are adjacent exactly when f(i) f(j) is a source
/// edge (so fiber-mates and collisions are never adjacent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupMap {
    pub source_n: usize,
    pub target_n: usize,
    pub assignment: Vec<usize>,
    /// Seed of the generator that drew the assignment; absent for the
    /// deterministic balanced blowup.
    pub seed: Option<u64>,
}

/// Rebuilds the blowup graph a map describes.
pub fn apply_blowup(g: &Graph, map: &BlowupMap) -> Result<Graph> {
    if map.source_n != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: map.source_n,
        });
    }
    if map.assignment.len() != map.target_n {
        return Err(Error::SizeMismatch {
            expected: map.target_n,
            got: map.assignment.len(),
        });
    }
    if let Some(&bad) = map.assignment.iter().find(|&&x| x >= g.n()) {
        return Err(Error::InvalidGraph(format!(
            "assignment value {bad} out of range [0, {})",
            g.n()
        )));
    }
    Graph::from_fn(map.target_n, "", |i, j| {
        g.has_edge(map.assignment[i], map.assignment[j])
    })
}

/// The t-fold balanced blowup: each vertex becomes an independent fiber of
/// `t` consecutive vertices (`i` maps to `⌊i/t⌋`), and fibers of adjacent
/// vertices are completely joined. Takes an (n, d, λ)-graph to an
/// (nt, dt, λt)-graph with the same clique number.
pub fn balanced_blowup(g: &Graph, t: usize) -> Result<(Graph, BlowupMap)> {
    if t == 0 {
        return Err(Error::Precondition("blowup factor must be at least 1".into()));
    }
    let map = BlowupMap {
        source_n: g.n(),
        target_n: g.n() * t,
        assignment: (0..g.n() * t).map(|i| i / t).collect(),
        seed: None,
    };
    let blown = apply_blowup(g, &map)?.with_label(format!("blowup({}, t={t})", g.label()));
    Ok((blown, map))
}

/// The random blowup: each of the `target_n` vertices is assigned an
/// independent uniform source vertex from the seeded generator. Preserves
/// K_s-freeness for every s (preimages of cliques are cliques), and equal
/// assignments yield non-edges.
pub fn random_blowup(g: &Graph, target_n: usize, seed: u64) -> Result<(Graph, BlowupMap)> {
    if target_n == 0 {
        return Err(Error::Precondition("blowup target must have at least 1 vertex".into()));
    }
    let mut rng = rng::rng_from_seed(seed);
    let map = BlowupMap {
        source_n: g.n(),
        target_n,
        assignment: (0..target_n)
            .map(|_| rng::uniform_below(&mut rng, g.n() as u64) as usize)
            .collect(),
        seed: Some(seed),
    };
    let blown = apply_blowup(g, &map)?.with_label(format!(
        "random_blowup({}, N={target_n}, seed={seed})",
        g.label()
    ));
    Ok((blown, map))
}

// ==================================================================
// rejection-sampled regular K_s-free graphs
// ==================================================================

/// Samples a d-regular simple graph containing no K_s, by the pairing model
/// with rejection: shuffle nd stubs, pair them up, reject multigraphs and
/// any sample with a K_s. Deterministic for a fixed seed.
///
/// Errors with [`Error::ExhaustedAttempts`] when `max_attempts` samples all
/// fail, which usually means the parameters are infeasible.
pub fn random_regular_ks_free(
    n: usize,
    d: usize,
    s: usize,
    seed: u64,
    max_attempts: u64,
) -> Result<Graph> {
    if n == 0 || d >= n {
        return Err(Error::Precondition(format!(
            "degree {d} must be below the vertex count {n}"
        )));
    }
    if (n * d) % 2 != 0 {
        return Err(Error::Precondition(format!(
            "no {d}-regular graph on {n} vertices: nd is odd"
        )));
    }
    if s < 3 {
        return Err(Error::Precondition(format!(
            "forbidden clique size must be at least 3, got {s}"
        )));
    }
    if max_attempts == 0 {
        return Err(Error::Precondition("attempt budget must be at least 1".into()));
    }
    let mut rng = rng::rng_from_seed(seed);
    'attempt: for _ in 0..max_attempts {
        let mut stubs: Vec<usize> = (0..n * d).map(|i| i / d).collect();
        rng::shuffle(&mut rng, &mut stubs);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt; // loop or doubled edge: not simple
            }
            edges.push((u, v));
        }
        let g = Graph::from_edges(
            n,
            &edges,
            format!("random_regular({n}, d={d}, s={s}, seed={seed})"),
        )?;
        debug_assert_eq!(g.degree_profile(), Some(d));
        if clique::is_clique_free(&g, s) {
            return Ok(g);
        }
    }
    Err(Error::ExhaustedAttempts {
        attempts: max_attempts,
    })
}

// ==================================================================
// family metadata
// ==================================================================

/// Descriptive metadata for a K_s-free family member: the forbidden clique
/// size and the weak-optimality parameter α. The asymptotic Θ-conditions
/// behind α are not checkable on one finite graph, so this is carried as
/// provenance, never enforced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    /// Recipe-style family name, e.g. "paley:13".
    pub family_name: String,
    /// Forbidden clique size s (the member contains no K_s).
    pub forbidden_clique: usize,
    /// Weak-optimality parameter α in (0, 1].
    pub alpha: f64,
    /// Whether α ≤ 1/(2s-3): beyond that, the implied λ exponent would drop
    /// below the sqrt(d) floor, so the exponents conflict. Flagged, not
    /// rejected.
    pub alpha_consistent: bool,
}

impl FamilySpec {
    pub fn new(family_name: impl Into<String>, forbidden_clique: usize, alpha: f64) -> Result<Self> {
        if forbidden_clique < 3 {
            return Err(Error::Precondition(format!(
                "forbidden clique size must be at least 3, got {forbidden_clique}"
            )));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Precondition(format!(
                "weak-optimality parameter must lie in (0, 1], got {alpha}"
            )));
        }
        let alpha_consistent = alpha <= 1.0 / (2 * forbidden_clique - 3) as f64 + 1e-12;
        Ok(FamilySpec {
            family_name: family_name.into(),
            forbidden_clique,
            alpha: round_sig12(alpha),
            alpha_consistent,
        })
    }
}

/// The α a single (n, d) pair suggests under d = n^{1-α}: the family-level
/// parameter is asymptotic, so this is only a descriptive stand-in.
/// `None` when n < 2 or d = 0 leave it undefined.
pub fn effective_alpha(n: usize, d: usize) -> Option<f64> {
    if n < 2 || d == 0 {
        return None;
    }
    let alpha = 1.0 - (d as f64).ln() / (n as f64).ln();
    Some(round_sig12(alpha.clamp(f64::MIN_POSITIVE, 1.0)))
}
