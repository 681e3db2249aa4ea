//! Immutable simple undirected graphs over dense 0-based vertex sets,
//! stored as one adjacency bitset row per vertex.

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline(always)]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of `[0, n)` as a bitset with cached cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    n: usize,
    size: usize,
}

impl VertexSet {
    /// The empty subset of `[0, n)`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; word_count(n)],
            n,
            size: 0,
        }
    }

    /// The full subset `[0, n)`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; word_count(n)];
        let tail = n % WORD_BITS;
        if tail != 0 {
            *words.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        if n == 0 {
            words.clear();
        }
        VertexSet { words, n, size: n }
    }

    /// Builds a set from explicit members. Errors on out-of-range vertices.
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for &v in members {
            if v >= n {
                return Err(Error::InvalidGraph(format!("vertex {v} out of range [0, {n})")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Universe size `n` (not the cardinality).
    #[inline(always)]
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Cached cardinality.
    #[inline(always)]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline(always)]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    /// Inserts `v`; no-op if already present.
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        if *w & bit == 0 {
            *w |= bit;
            self.size += 1;
        }
    }

    /// Removes `v`; no-op if absent.
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        if *w & bit != 0 {
            *w &= !bit;
            self.size -= 1;
        }
    }

    /// Intersection with another set over the same universe.
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet { words, n: self.n, size }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet { words, n: self.n, size }
    }

    /// Union with another set over the same universe.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet { words, n: self.n, size }
    }

    /// Number of members shared with `other`, without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let b = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Members as a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Raw bitset words (low bit of word 0 is vertex 0).
    #[inline(always)]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

/// Immutable simple undirected graph with adjacency bitset rows.
///
/// Vertices are `0..n` with `n >= 1`; the adjacency relation is symmetric and
/// irreflexive. `label` carries free-form provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    label: String,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops, and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)], label: impl Into<String>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range [0, {n})"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if rows[u].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph {
            n,
            rows,
            label: label.into(),
        })
    }

    /// Builds a graph from a symmetric irreflexive predicate.
    pub fn from_fn(n: usize, label: impl Into<String>, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Ok(Graph {
            n,
            rows,
            label: label.into(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize, label: impl Into<String>) -> Result<Graph> {
        Graph::from_edges(n, &[], label)
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Returns a copy with a different provenance label.
    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = label.into();
        self
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighborhood of `v` as a bitset row.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn degree_profile(&self) -> Option<usize> {
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Complement graph; the label records the derivation.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = VertexSet::full(self.n).difference(&self.rows[v]);
            row.remove(v);
            rows.push(row);
        }
        Graph {
            n: self.n,
            rows,
            label: format!("complement({})", self.label),
        }
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|` in ascending member order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.universe() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        if s.is_empty() {
            return Err(Error::InvalidGraph("induced subgraph on empty set".into()));
        }
        let members = s.to_vec();
        let g = Graph::from_fn(members.len(), "", |a, b| {
            self.has_edge(members[a], members[b])
        })?;
        Ok(g.with_label(format!("induced({}, {:?})", self.label, members)))
    }

    /// True iff every vertex of `s` is pairwise nonadjacent within `s`.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].intersection_len(s) == 0)
    }

    /// True iff `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut t = s.clone();
            t.remove(v);
            self.rows[v].intersection_len(&t) == t.len()
        })
    }

    /// Connected components as vertex sets (ascending by smallest member).
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut frontier = vec![start];
            comp.insert(start);
            while let Some(v) = frontier.pop() {
                for w in self.rows[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            for v in comp.iter() {
                seen.insert(v);
            }
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn vertex_set_cached_size_tracks_popcount() {
        let mut s = VertexSet::empty(130);
        for v in [0, 63, 64, 127, 129, 64] {
            s.insert(v);
        }
        assert_eq!(s.len(), 5);
        assert_eq!(
            s.len(),
            s.words().iter().map(|w| w.count_ones() as usize).sum::<usize>()
        );
        s.remove(64);
        s.remove(64);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 127, 129]);
    }

    #[test]
    fn degree_profile_regular_and_irregular() {
        let c5 = families::cycle(5).unwrap();
        assert_eq!(c5.degree_profile(), Some(2));
        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.degree_profile(), Some(3));
        // path on 3 vertices: endpoint degree 1, middle 2
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)], "path3").unwrap();
        assert_eq!(path.degree_profile(), None);
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)], ""),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)], ""),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)], ""),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::from_edges(0, &[], "").is_err());
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k5 = families::complete(5).unwrap();
        let e = k5.complement();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.n(), 5);
    }

    #[test]
    fn complement_of_cycle5_is_isomorphic_to_cycle5() {
        // 2-regular, connected, and triangle-free on 5 vertices forces C5.
        let comp = families::cycle(5).unwrap().complement();
        assert_eq!(comp.degree_profile(), Some(2));
        assert_eq!(comp.components().len(), 1);
        assert!(crate::clique::is_clique_free(&comp, 3));
    }

    #[test]
    fn induced_subgraph_of_k5_is_k3() {
        let k5 = families::complete(5).unwrap();
        let s = VertexSet::from_members(5, &[0, 1, 2]).unwrap();
        let g = k5.induced_subgraph(&s).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_relabels_in_member_order() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)], "p4").unwrap();
        let s = VertexSet::from_members(4, &[1, 3]).unwrap();
        let g = path.induced_subgraph(&s).unwrap();
        assert_eq!(g.n(), 2);
        assert!(!g.has_edge(0, 1));
        let s2 = VertexSet::from_members(4, &[2, 3]).unwrap();
        let g2 = path.induced_subgraph(&s2).unwrap();
        assert!(g2.has_edge(0, 1));
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (4, 5)], "").unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3]);
        assert_eq!(comps[2].to_vec(), vec![4, 5]);
    }
}
