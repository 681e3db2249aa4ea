//! Exact independent-set counting.
//!
//! The independence profile (number of independent sets of each size) is
//! computed through the standard vertex-removal recursion on the independence
//! polynomial, with connected-component factorization and a closed form for
//! edgeless remainders. From the profile, ordered independent tuples are
//! counted exactly: a tuple with repeats allowed covers a support set of size
//! j in `j! * S(t, j)` ways, where `S` is the Stirling number of the second
//! kind.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::util::{big_str, big_str_vec, ln_biguint, round_sig12};

// ==================================================================
// combinatorial number helpers
// ==================================================================

/// `k!` as an arbitrary-precision integer.
pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).map(BigUint::from).product()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Stirling numbers of the second kind `S(t, j)` for `j = 0..=j_max`,
/// by the row recurrence `S(t, j) = j*S(t-1, j) + S(t-1, j-1)`.
pub fn stirling2_row(t: usize, j_max: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::ZERO; j_max + 1];
    row[0] = BigUint::one(); // S(0, 0) = 1
    for _ in 1..=t {
        let mut next = vec![BigUint::ZERO; j_max + 1];
        for j in 1..=j_max {
            next[j] = BigUint::from(j as u64) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row
}

// ==================================================================
// independence profile
// ==================================================================

/// Product of two truncated polynomials, keeping degrees `0..=cap`.
fn poly_mul(a: &[BigUint], b: &[BigUint], cap: usize) -> Vec<BigUint> {
    let len = (a.len() + b.len() - 1).min(cap + 1);
    let mut out = vec![BigUint::ZERO; len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() || i > cap {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > cap {
                break;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Independence polynomial of an edgeless graph on `k` vertices: `(1+x)^k`.
fn binomial_poly(k: usize, cap: usize) -> Vec<BigUint> {
    (0..=k.min(cap)).map(|j| binomial(k, j)).collect()
}

/// Connected components of the subgraph induced on `alive`.
fn components_within(g: &Graph, alive: &VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::empty(g.n());
    let mut out = Vec::new();
    for start in alive.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::empty(g.n());
        comp.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in g.neighbors(v).intersection(alive).iter() {
                if !comp.contains(w) {
                    comp.insert(w);
                    frontier.push(w);
                }
            }
        }
        seen = seen.union(&comp);
        out.push(comp);
    }
    out
}

struct ProfileCounter<'a> {
    g: &'a Graph,
    cap: usize,
    nodes: u64,
    budget: u64,
}

impl ProfileCounter<'_> {
    /// `I(G[alive])` truncated at degree `cap`.
    fn count(&mut self, alive: &VertexSet) -> Result<Vec<BigUint>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        if alive.is_empty() {
            return Ok(vec![BigUint::one()]);
        }
        let comps = components_within(self.g, alive);
        let mut acc = vec![BigUint::one()];
        for comp in &comps {
            let p = self.component(comp)?;
            acc = poly_mul(&acc, &p, self.cap);
        }
        Ok(acc)
    }

    /// One connected component: pick the vertex of maximum degree within the
    /// component and split on it, `I(G) = I(G - v) + x * I(G - N[v])`.
    fn component(&mut self, comp: &VertexSet) -> Result<Vec<BigUint>> {
        let mut pivot = usize::MAX;
        let mut max_deg = 0;
        for v in comp.iter() {
            let d = self.g.neighbors(v).intersection_len(comp);
            if pivot == usize::MAX || d > max_deg {
                pivot = v;
                max_deg = d;
            }
        }
        if max_deg == 0 {
            return Ok(binomial_poly(comp.len(), self.cap));
        }
        let mut without = comp.clone();
        without.remove(pivot);
        let skip = self.count(&without)?;
        let reduced = without.difference(self.g.neighbors(pivot));
        let take = self.count(&reduced)?;
        // skip + x * take
        let len = skip.len().max(take.len() + 1).min(self.cap + 1);
        let mut out = vec![BigUint::ZERO; len];
        for (j, c) in skip.into_iter().enumerate() {
            out[j] = c;
        }
        for (j, c) in take.into_iter().enumerate() {
            if j + 1 <= self.cap {
                out[j + 1] += c;
            }
        }
        Ok(out)
    }
}

/// Numbers of independent sets by size: entry `j` counts independent sets of
/// exactly `j` vertices. The vector stops at `min(j_max, α(G))`, so its last
/// entry is positive and its length minus one is the independence number
/// whenever `j_max >= α(G)`.
///
/// `budget` caps the recursion nodes; exceeding it yields
/// [`Error::ResourceLimit`].
pub fn independence_profile(g: &Graph, j_max: usize, budget: u64) -> Result<Vec<BigUint>> {
    let mut counter = ProfileCounter {
        g,
        cap: j_max.min(g.n()),
        nodes: 0,
        budget,
    };
    let mut poly = counter.count(&VertexSet::full(g.n()))?;
    while poly.len() > 1 && poly.last().map(Zero::is_zero).unwrap_or(false) {
        poly.pop();
    }
    Ok(poly)
}

// ==================================================================
// ordered tuple counting
// ==================================================================

/// Exact census of independent `t`-tuples in one graph, alongside the raw
/// material it was derived from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TupleCountReport {
    pub vertex_count: usize,
    pub tuple_length: usize,
    /// Independent-set counts by size, as decimal strings.
    #[serde(with = "big_str_vec")]
    pub independence_profile: Vec<BigUint>,
    /// Ordered `t`-tuples (repeats allowed) whose entries form an independent set.
    #[serde(with = "big_str")]
    pub independent_tuples: BigUint,
    /// All ordered `t`-tuples: `n^t`.
    #[serde(with = "big_str")]
    pub total_tuples: BigUint,
    /// `ln(independent_tuples / total_tuples)`, rounded to 12 significant digits.
    pub log_density: f64,
}

/// Counts ordered `t`-tuples of vertices, repeats allowed, whose support is
/// an independent set: `sum_j i_j * j! * S(t, j)`.
///
/// Requires `t >= 1`. `budget` caps the profile recursion.
pub fn count_independent_tuples(g: &Graph, t: usize, budget: u64) -> Result<TupleCountReport> {
    if t == 0 {
        return Err(Error::Precondition("tuple length must be at least 1".into()));
    }
    let profile = independence_profile(g, t.min(g.n()), budget)?;
    let stirling = stirling2_row(t, profile.len() - 1);
    let mut exact = BigUint::ZERO;
    for (j, count) in profile.iter().enumerate().skip(1) {
        exact += count * factorial(j) * &stirling[j];
    }
    let total = BigUint::from(g.n() as u64).pow(t as u32);
    let log_density = round_sig12(ln_biguint(&exact) - ln_biguint(&total));
    debug_assert!(exact <= total);
    Ok(TupleCountReport {
        vertex_count: g.n(),
        tuple_length: t,
        independence_profile: profile,
        independent_tuples: exact,
        total_tuples: total,
        log_density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Enumeration oracle: walk all n^t ordered tuples and test each support.
    fn brute_tuple_count(g: &Graph, t: usize) -> BigUint {
        let mut tuple = vec![0usize; t];
        let mut count = 0u64;
        loop {
            let support: Vec<usize> = {
                let mut s = tuple.clone();
                s.sort_unstable();
                s.dedup();
                s
            };
            let set = VertexSet::from_members(g.n(), &support).unwrap();
            if g.is_independent_set(&set) {
                count += 1;
            }
            // odometer increment
            let mut pos = t;
            loop {
                if pos == 0 {
                    return BigUint::from(count);
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < g.n() {
                    break;
                }
                tuple[pos] = 0;
            }
        }
    }

    #[test]
    fn profiles_of_small_graphs() {
        let to_u64 = |p: Vec<BigUint>| -> Vec<u64> {
            p.iter().map(|x| x.to_string().parse().unwrap()).collect()
        };
        let c5 = families::cycle(5).unwrap();
        assert_eq!(to_u64(independence_profile(&c5, 5, 1 << 20).unwrap()), vec![1, 5, 5]);
        let k4 = families::complete(4).unwrap();
        assert_eq!(to_u64(independence_profile(&k4, 4, 1 << 20).unwrap()), vec![1, 4]);
        let path3 = Graph::from_edges(3, &[(0, 1), (1, 2)], "path3").unwrap();
        assert_eq!(to_u64(independence_profile(&path3, 3, 1 << 20).unwrap()), vec![1, 3, 1]);
        let e4 = families::edgeless(4).unwrap();
        assert_eq!(to_u64(independence_profile(&e4, 4, 1 << 20).unwrap()), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn profile_truncation_respects_j_max() {
        let e4 = families::edgeless(4).unwrap();
        let p = independence_profile(&e4, 2, 1 << 20).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[2], BigUint::from(6u64));
    }

    #[test]
    fn complete_bipartite_profile_is_twice_binomials() {
        // turan(64, 2) is K_{32,32}: independent sets live inside one side.
        let g = families::turan(64, 2).unwrap();
        let p = independence_profile(&g, 64, 1 << 20).unwrap();
        assert_eq!(p.len(), 33);
        assert_eq!(p[1], BigUint::from(64u64));
        assert_eq!(p[2], BigUint::from(2u64) * binomial(32, 2));
        assert_eq!(p[32], BigUint::from(2u64));
    }

    #[test]
    fn stirling_row_and_surjection_identity() {
        let row = stirling2_row(5, 5);
        let expect = [1u64, 1, 15, 25, 10, 1];
        // S(5,0) is 0 for t >= 1; index 0 of the recurrence output is 0 here
        assert_eq!(row[0], BigUint::ZERO);
        for j in 1..=5 {
            assert_eq!(row[j], BigUint::from(expect[j]));
        }
        // sum_j C(n,j) j! S(t,j) = n^t
        let n = 6usize;
        let t = 5usize;
        let sum: BigUint = (1..=t)
            .map(|j| binomial(n, j) * factorial(j) * &stirling2_row(t, t)[j])
            .sum();
        assert_eq!(sum, BigUint::from(n as u64).pow(t as u32));
    }

    #[test]
    fn pair_count_on_pentagon() {
        let c5 = families::cycle(5).unwrap();
        let report = count_independent_tuples(&c5, 2, 1 << 20).unwrap();
        assert_eq!(report.independent_tuples, BigUint::from(15u64));
        assert_eq!(report.total_tuples, BigUint::from(25u64));
        assert_eq!(report.log_density, crate::util::round_sig12((15f64 / 25f64).ln()));
    }

    #[test]
    fn tuple_counts_match_enumeration() {
        let cases: Vec<(Graph, usize)> = vec![
            (families::cycle(5).unwrap(), 3),
            (families::turan(6, 3).unwrap(), 2),
            (Graph::from_edges(3, &[(0, 1), (1, 2)], "path3").unwrap(), 4),
            (families::complete(4).unwrap(), 3),
            (families::edgeless(3).unwrap(), 5),
        ];
        for (g, t) in cases {
            let report = count_independent_tuples(&g, t, 1 << 20).unwrap();
            assert_eq!(
                report.independent_tuples,
                brute_tuple_count(&g, t),
                "graph {} with t = {t}",
                g.label()
            );
        }
    }

    #[test]
    fn complete_bipartite_tuples_hit_closed_form() {
        // every independent tuple lives inside one of the two sides
        let g = families::turan(64, 2).unwrap();
        let report = count_independent_tuples(&g, 70, 1 << 20).unwrap();
        assert_eq!(
            report.independent_tuples,
            BigUint::from(2u64) * BigUint::from(32u64).pow(70)
        );
    }

    #[test]
    fn zero_length_tuples_are_rejected() {
        let c5 = families::cycle(5).unwrap();
        assert!(matches!(
            count_independent_tuples(&c5, 0, 1 << 20),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tight_budget_is_reported() {
        let g = families::paley(61).unwrap();
        match independence_profile(&g, 61, 5) {
            Err(Error::ResourceLimit { budget: 5 }) => {}
            other => panic!("expected resource-limit error, got {other:?}"),
        }
    }
}
