//! Multicolor edge colorings of complete graphs.
//!
//! The lower-bound pipeline overlays k permuted K_{s_i}-free graphs into a
//! (k+1)-coloring of K_N: an edge takes the lowest color whose permuted
//! graph contains it, and edges contained in none take the final color.
//! Verification is exact clique search per color class; the audit measures
//! the union of the first k classes, whose independent sets are exactly the
//! final-color cliques.

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of one lower-bound claim on `r(s_1, ..., s_k, t)`: a valid
/// witness coloring on `host_size` vertices certifies the Ramsey number
/// exceeds `host_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyInstance {
    /// Forbidden clique sizes s_1..s_k for the first k colors, each ≥ 3.
    pub forbidden: Vec<usize>,
    /// Forbidden clique size t for the final color, ≥ 2.
    pub final_clique: usize,
    /// Host complete-graph size N.
    pub host_size: usize,
}

impl RamseyInstance {
    pub fn new(forbidden: Vec<usize>, final_clique: usize, host_size: usize) -> Result<Self> {
        if let Some(&bad) = forbidden.iter().find(|&&s| s < 3) {
            return Err(Error::Precondition(format!(
                "forbidden clique sizes must be at least 3, got {bad}"
            )));
        }
        if final_clique < 2 {
            return Err(Error::Precondition(format!(
                "final clique target must be at least 2, got {}",
                final_clique
            )));
        }
        if host_size == 0 {
            return Err(Error::Precondition("host size must be at least 1".into()));
        }
        if forbidden.len() > (u8::MAX as usize) - 1 {
            return Err(Error::Precondition(format!(
                "at most {} constrained colors are supported, got {}",
                (u8::MAX as usize) - 1,
                forbidden.len()
            )));
        }
        Ok(RamseyInstance {
            forbidden,
            final_clique,
            host_size,
        })
    }

    /// k, the number of constrained colors.
    pub fn constrained_colors(&self) -> usize {
        self.forbidden.len()
    }

    /// k + 1, counting the final color.
    pub fn palette(&self) -> usize {
        self.forbidden.len() + 1
    }

    /// The excess sum Σ (s_i - 2) steering the asymptotic host size.
    pub fn excess_sum(&self) -> usize {
        self.forbidden.iter().map(|s| s - 2).sum()
    }
}

/// Tie-breaking rule when several permuted graphs claim the same edge.
/// Recorded in every witness so replays are bit-exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieRule {
    /// The lowest color index wins (the default and only rule).
    LowestIndex,
}

/// A total edge coloring of K_n with colors `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    palette: usize,
    /// Upper-triangle cells in row-major order: pair (u, v) with u < v sits
    /// at `u*(2n-u-1)/2 + (v-u-1)`.
    cells: Vec<u8>,
}

impl ColoredGraph {
    /// Builds a coloring from a per-pair function returning colors in
    /// `1..=palette`.
    pub fn from_fn(
        n: usize,
        palette: usize,
        mut color: impl FnMut(usize, usize) -> u8,
    ) -> Result<ColoredGraph> {
        if n == 0 {
            return Err(Error::MalformedColoring("host graph has no vertices".into()));
        }
        if palette == 0 || palette > u8::MAX as usize {
            return Err(Error::MalformedColoring(format!(
                "palette size {palette} outside 1..=255"
            )));
        }
        let mut cells = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                let c = color(u, v);
                if c == 0 || c as usize > palette {
                    return Err(Error::MalformedColoring(format!(
                        "edge ({u}, {v}) has color {c}, palette is 1..={palette}"
                    )));
                }
                cells.push(c);
            }
        }
        Ok(ColoredGraph { n, palette, cells })
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors, final color included.
    #[inline(always)]
    pub fn palette(&self) -> usize {
        self.palette
    }

    #[inline(always)]
    fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    /// Color of the edge between two distinct vertices.
    pub fn color(&self, u: usize, v: usize) -> u8 {
        let (a, b) = (u.min(v), u.max(v));
        self.cells[self.index(a, b)]
    }

    /// The graph formed by the edges of one color.
    pub fn color_class(&self, color: u8) -> Graph {
        Graph::from_fn(self.n, format!("color_class({color})"), |u, v| {
            self.color(u, v) == color
        })
        .expect("host size is positive")
    }

    /// Union of the color classes `1..=k`.
    pub fn union_of_first(&self, k: usize) -> Graph {
        Graph::from_fn(self.n, format!("union_of_first({k})"), |u, v| {
            (self.color(u, v) as usize) <= k
        })
        .expect("host size is positive")
    }

    /// Edge counts per color, index 0 holding color 1.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.palette];
        for &c in &self.cells {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    /// The same coloring with vertices relabeled through `perm`
    /// (new vertex i plays old vertex perm[i]).
    pub fn relabeled(&self, perm: &[usize]) -> Result<ColoredGraph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Precondition("relabeling is not a permutation".into()));
            }
            seen[p] = true;
        }
        ColoredGraph::from_fn(self.n, self.palette, |u, v| self.color(perm[u], perm[v]))
    }
}

/// Overlays k permuted graphs on [N] into a (k+1)-coloring of K_N.
///
/// Edge (u, v) takes color `min{ i : (π_i(u), π_i(v)) is an edge of
/// blown[i-1] }` under the lowest-index tie rule; edges claimed by no graph
/// take color k+1. Every class `i <= k` is a subgraph of a permuted copy of
/// `blown[i-1]`, so K_{s_i}-freeness survives the overlay.
pub fn overlay_coloring(
    blown: &[Graph],
    perms: &[Vec<usize>],
    _tie: TieRule,
) -> Result<ColoredGraph> {
    let k = blown.len();
    if perms.len() != k {
        return Err(Error::SizeMismatch {
            expected: k,
            got: perms.len(),
        });
    }
    let n = blown.first().map(Graph::n).unwrap_or(0);
    for g in blown {
        if g.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: g.n(),
            });
        }
    }
    for perm in perms {
        if perm.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Precondition(
                    "permutation entries must cover 0..n exactly once".into(),
                ));
            }
            seen[p] = true;
        }
    }
    if n == 0 {
        // k = 0 with no graphs to take a host size from
        return Err(Error::MalformedColoring(
            "overlay needs at least one graph to fix the host size".into(),
        ));
    }
    ColoredGraph::from_fn(n, k + 1, |u, v| {
        for (i, (g, perm)) in blown.iter().zip(perms).enumerate() {
            if g.has_edge(perm[u], perm[v]) {
                return (i + 1) as u8;
            }
        }
        (k + 1) as u8
    })
}

/// Identity permutations for a deterministic overlay.
pub fn identity_permutations(k: usize, n: usize) -> Vec<Vec<usize>> {
    (0..k).map(|_| (0..n).collect()).collect()
}

// ==================================================================
// verification
// ==================================================================

/// Exact verdict for one color class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorVerdict {
    /// 1-based color index.
    pub color: usize,
    /// Clique size that must be absent (s_i, or t for the final color).
    pub forbidden_clique: usize,
    pub clique_free: bool,
    /// A violating clique when one exists, ascending vertex order.
    pub violating_clique: Option<Vec<usize>>,
}

/// All per-color verdicts; `valid` iff every class passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdicts: Vec<ColorVerdict>,
    pub valid: bool,
}

/// Verifies a coloring against an instance by exhaustive clique search:
/// class i must miss K_{s_i}, and the final class must miss K_t — checked
/// as an independent set of size t in the union of the first k classes,
/// which is the same thing.
pub fn verify_witness(c: &ColoredGraph, inst: &RamseyInstance) -> Result<VerificationReport> {
    if c.n() != inst.host_size {
        return Err(Error::SizeMismatch {
            expected: inst.host_size,
            got: c.n(),
        });
    }
    if c.palette() != inst.palette() {
        return Err(Error::MalformedColoring(format!(
            "coloring uses {} colors, instance wants {}",
            c.palette(),
            inst.palette()
        )));
    }
    let mut verdicts = Vec::with_capacity(inst.palette());
    for (i, &s) in inst.forbidden.iter().enumerate() {
        let class = c.color_class((i + 1) as u8);
        let witness = clique::find_clique_of_size(&class, s);
        verdicts.push(ColorVerdict {
            color: i + 1,
            forbidden_clique: s,
            clique_free: witness.is_none(),
            violating_clique: witness.map(|w| w.to_vec()),
        });
    }
    let union = c.union_of_first(inst.constrained_colors());
    let witness = clique::find_independent_set_of_size(&union, inst.final_clique);
    verdicts.push(ColorVerdict {
        color: inst.palette(),
        forbidden_clique: inst.final_clique,
        clique_free: witness.is_none(),
        violating_clique: witness.map(|w| w.to_vec()),
    });
    let valid = verdicts.iter().all(|v| v.clique_free);
    Ok(VerificationReport { verdicts, valid })
}

// ==================================================================
// union-graph audit
// ==================================================================

/// Measured quantities of the union T of the first k color classes. Its
/// independent sets are the final-color cliques, so these drive how large a
/// final-color clique must exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionAudit {
    /// Host size N.
    pub vertex_count: usize,
    /// Edges of T.
    pub union_edges: usize,
    /// D: maximum degree in T.
    pub max_degree: usize,
    /// D': maximum number of edges inside one neighborhood N_T(v).
    pub max_neighborhood_edges: usize,
    /// Size of the minimum-degree greedy independent set of T: a
    /// deterministic lower bound on the largest final-color clique.
    pub greedy_independent: usize,
}

/// Audits the union of the first k classes of a coloring.
pub fn audit_union(c: &ColoredGraph, inst: &RamseyInstance) -> Result<UnionAudit> {
    if c.n() != inst.host_size {
        return Err(Error::SizeMismatch {
            expected: inst.host_size,
            got: c.n(),
        });
    }
    if c.palette() != inst.palette() {
        return Err(Error::MalformedColoring(format!(
            "coloring uses {} colors, instance wants {}",
            c.palette(),
            inst.palette()
        )));
    }
    let t = c.union_of_first(inst.constrained_colors());
    let max_degree = (0..t.n()).map(|v| t.degree(v)).max().unwrap_or(0);
    let max_neighborhood_edges = (0..t.n())
        .map(|v| {
            let nb = t.neighbors(v);
            nb.iter()
                .map(|u| t.neighbors(u).intersection_len(nb))
                .sum::<usize>()
                / 2
        })
        .max()
        .unwrap_or(0);
    let greedy_independent = clique::greedy_independent_set(&t).len();
    debug_assert!(greedy_independent >= t.n().div_ceil(max_degree + 1));
    Ok(UnionAudit {
        vertex_count: t.n(),
        union_edges: t.edge_count(),
        max_degree,
        max_neighborhood_edges,
        greedy_independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn pentagon_witness() -> (ColoredGraph, RamseyInstance) {
        let c5 = families::cycle(5).unwrap();
        let coloring =
            overlay_coloring(&[c5], &identity_permutations(1, 5), TieRule::LowestIndex).unwrap();
        let inst = RamseyInstance::new(vec![3], 3, 5).unwrap();
        (coloring, inst)
    }

    #[test]
    fn instance_validation() {
        assert!(RamseyInstance::new(vec![3, 4], 3, 10).is_ok());
        assert!(RamseyInstance::new(vec![2], 3, 10).is_err());
        assert!(RamseyInstance::new(vec![3], 1, 10).is_err());
        assert!(RamseyInstance::new(vec![3], 3, 0).is_err());
        let inst = RamseyInstance::new(vec![3, 5, 4], 6, 30).unwrap();
        assert_eq!(inst.constrained_colors(), 3);
        assert_eq!(inst.palette(), 4);
        assert_eq!(inst.excess_sum(), 1 + 3 + 2);
    }

    #[test]
    fn overlay_splits_pentagon_and_complement() {
        let (coloring, _) = pentagon_witness();
        let first = coloring.color_class(1);
        let last = coloring.color_class(2);
        assert_eq!(first.edges(), families::cycle(5).unwrap().edges());
        assert_eq!(last.edges(), families::cycle(5).unwrap().complement().edges());
        assert_eq!(coloring.class_sizes(), vec![5, 5]);
    }

    #[test]
    fn ties_go_to_the_lowest_color() {
        let c5 = families::cycle(5).unwrap();
        let coloring = overlay_coloring(
            &[c5.clone(), c5],
            &identity_permutations(2, 5),
            TieRule::LowestIndex,
        )
        .unwrap();
        // both graphs claim the same edges; color 2 ends up empty
        assert_eq!(coloring.class_sizes(), vec![5, 0, 5]);
    }

    #[test]
    fn empty_source_pushes_everything_to_the_last_color() {
        let e5 = families::edgeless(5).unwrap();
        let coloring =
            overlay_coloring(&[e5], &identity_permutations(1, 5), TieRule::LowestIndex).unwrap();
        assert_eq!(coloring.class_sizes(), vec![0, 10]);
    }

    #[test]
    fn pentagon_witness_is_valid() {
        let (coloring, inst) = pentagon_witness();
        let report = verify_witness(&coloring, &inst).unwrap();
        assert!(report.valid);
        assert_eq!(report.verdicts.len(), 2);
        assert!(report.verdicts.iter().all(|v| v.violating_clique.is_none()));
    }

    #[test]
    fn hexagon_overlay_fails_in_the_complement() {
        // complement(C_6) contains the triangle {0, 2, 4}
        let c6 = families::cycle(6).unwrap();
        let coloring =
            overlay_coloring(&[c6], &identity_permutations(1, 6), TieRule::LowestIndex).unwrap();
        let inst = RamseyInstance::new(vec![3], 3, 6).unwrap();
        let report = verify_witness(&coloring, &inst).unwrap();
        assert!(!report.valid);
        assert!(report.verdicts[0].clique_free);
        assert!(!report.verdicts[1].clique_free);
        assert_eq!(report.verdicts[1].violating_clique, Some(vec![0, 2, 4]));
    }

    #[test]
    fn all_final_color_fails_whenever_t_fits() {
        let e6 = families::edgeless(6).unwrap();
        let coloring =
            overlay_coloring(&[e6], &identity_permutations(1, 6), TieRule::LowestIndex).unwrap();
        let inst = RamseyInstance::new(vec![3], 3, 6).unwrap();
        let report = verify_witness(&coloring, &inst).unwrap();
        assert!(!report.valid);
        let bad = report.verdicts[1].violating_clique.as_ref().unwrap();
        assert_eq!(bad.len(), 3);
    }

    #[test]
    fn verification_is_permutation_equivariant() {
        let (coloring, inst) = pentagon_witness();
        let perm = vec![3, 0, 4, 1, 2];
        let relabeled = coloring.relabeled(&perm).unwrap();
        assert!(verify_witness(&relabeled, &inst).unwrap().valid);
    }

    #[test]
    fn palette_mismatches_are_malformed() {
        let (coloring, _) = pentagon_witness();
        let wide = RamseyInstance::new(vec![3, 3], 3, 5).unwrap();
        assert!(matches!(
            verify_witness(&coloring, &wide),
            Err(Error::MalformedColoring(_))
        ));
        let off_size = RamseyInstance::new(vec![3], 3, 6).unwrap();
        assert!(matches!(
            verify_witness(&coloring, &off_size),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn audit_of_the_pentagon_witness() {
        let (coloring, inst) = pentagon_witness();
        let audit = audit_union(&coloring, &inst).unwrap();
        assert_eq!(audit.max_degree, 2);
        assert_eq!(audit.max_neighborhood_edges, 0);
        assert_eq!(audit.greedy_independent, 2);
        assert_eq!(audit.union_edges, 5);
    }

    #[test]
    fn audit_of_degenerate_unions() {
        // everything in the last color: the union is edgeless
        let e6 = families::edgeless(6).unwrap();
        let coloring =
            overlay_coloring(&[e6], &identity_permutations(1, 6), TieRule::LowestIndex).unwrap();
        let inst = RamseyInstance::new(vec![3], 3, 6).unwrap();
        let audit = audit_union(&coloring, &inst).unwrap();
        assert_eq!((audit.max_degree, audit.max_neighborhood_edges), (0, 0));
        assert_eq!(audit.greedy_independent, 6);

        // union = K_4 plus two isolated vertices
        let k4_plus = Graph::from_fn(6, "k4_plus", |u, v| u < 4 && v < 4).unwrap();
        let coloring = overlay_coloring(
            &[k4_plus],
            &identity_permutations(1, 6),
            TieRule::LowestIndex,
        )
        .unwrap();
        let inst = RamseyInstance::new(vec![5], 3, 6).unwrap();
        let audit = audit_union(&coloring, &inst).unwrap();
        assert_eq!(audit.max_degree, 3);
        assert_eq!(audit.max_neighborhood_edges, 3);
        assert_eq!(audit.greedy_independent, 3);
    }

    #[test]
    fn relabeling_rejects_non_permutations() {
        let (coloring, _) = pentagon_witness();
        assert!(coloring.relabeled(&[0, 0, 1, 2, 3]).is_err());
        assert!(coloring.relabeled(&[0, 1, 2]).is_err());
    }
}
