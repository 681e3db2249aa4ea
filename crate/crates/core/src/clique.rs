//! Exact clique and independent-set search.
//!
//! The workhorse is a branch-and-bound over bitset candidate sets with a
//! greedy-coloring upper bound for pruning. Branching follows ascending
//! vertex index everywhere, so witnesses are deterministic.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Number of classes used by a greedy coloring of the subgraph induced on
/// `cand` (ascending vertex order, first available class). Any clique inside
/// `cand` has at most this many vertices.
fn greedy_color_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match classes
            .iter_mut()
            .find(|class| g.neighbors(v).intersection_len(class) == 0)
        {
            Some(class) => class.insert(v),
            None => {
                let mut class = VertexSet::empty(g.n());
                class.insert(v);
                classes.push(class);
            }
        }
    }
    classes.len()
}

struct TargetSearch<'a> {
    g: &'a Graph,
    target: usize,
    nodes: u64,
    budget: u64,
}

impl TargetSearch<'_> {
    fn run(&mut self, stack: &mut Vec<usize>, cand: &VertexSet) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        if stack.len() == self.target {
            return Ok(Some(stack.clone()));
        }
        let need = self.target - stack.len();
        if cand.len() < need || greedy_color_bound(self.g, cand) < need {
            return Ok(None);
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            if rest.len() < need {
                break;
            }
            rest.remove(v);
            let next = rest.intersection(self.g.neighbors(v));
            stack.push(v);
            if let Some(found) = self.run(stack, &next)? {
                return Ok(Some(found));
            }
            stack.pop();
        }
        Ok(None)
    }
}

/// Finds a clique on exactly `s` vertices, or `None` if the graph is
/// K_s-free. Node budget capped only by `u64::MAX`.
pub fn find_clique_of_size(g: &Graph, s: usize) -> Option<VertexSet> {
    find_clique_of_size_within(g, s, u64::MAX).expect("unbounded search cannot exhaust budget")
}

/// Budgeted variant of [`find_clique_of_size`]: errors with
/// [`Error::ResourceLimit`] after visiting `budget` search nodes.
pub fn find_clique_of_size_within(g: &Graph, s: usize, budget: u64) -> Result<Option<VertexSet>> {
    if s == 0 {
        return Ok(Some(VertexSet::empty(g.n())));
    }
    if s > g.n() {
        return Ok(None);
    }
    let mut search = TargetSearch {
        g,
        target: s,
        nodes: 0,
        budget,
    };
    let found = search.run(&mut Vec::with_capacity(s), &VertexSet::full(g.n()))?;
    Ok(found.map(|vs| {
        let set = VertexSet::from_members(g.n(), &vs).expect("witness vertices are in range");
        debug_assert!(g.is_clique(&set));
        set
    }))
}

/// True iff the graph contains no clique on `s` vertices.
pub fn is_clique_free(g: &Graph, s: usize) -> bool {
    find_clique_of_size(g, s).is_none()
}

struct MaxSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
}

impl MaxSearch<'_> {
    fn run(&mut self, stack: &mut Vec<usize>, cand: &VertexSet) {
        if stack.len() > self.best.len() {
            self.best = stack.clone();
        }
        if cand.is_empty() || stack.len() + greedy_color_bound(self.g, cand) <= self.best.len() {
            return;
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            if stack.len() + rest.len() <= self.best.len() {
                break;
            }
            rest.remove(v);
            let next = rest.intersection(self.g.neighbors(v));
            stack.push(v);
            self.run(stack, &next);
            stack.pop();
        }
    }
}

/// A maximum clique (deterministic witness).
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut search = MaxSearch { g, best: Vec::new() };
    search.run(&mut Vec::new(), &VertexSet::full(g.n()));
    let set = VertexSet::from_members(g.n(), &search.best).expect("witness vertices are in range");
    debug_assert!(g.is_clique(&set));
    set
}

/// Clique number ω(G).
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Finds an independent set on exactly `s` vertices, or `None` if α(G) < s.
pub fn find_independent_set_of_size(g: &Graph, s: usize) -> Option<VertexSet> {
    find_clique_of_size(&g.complement(), s)
}

/// Independence number α(G).
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Greedy independent set: repeatedly take the vertex of minimum remaining
/// degree (lowest index on ties) and discard its closed neighborhood.
/// A deterministic lower-bound witness for α(G).
pub fn greedy_independent_set(g: &Graph) -> VertexSet {
    let mut alive = VertexSet::full(g.n());
    let mut out = VertexSet::empty(g.n());
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| g.neighbors(v).intersection_len(&alive))
            .expect("alive set is nonempty");
        out.insert(v);
        alive = alive.difference(g.neighbors(v));
        alive.remove(v);
    }
    debug_assert!(g.is_independent_set(&out));
    out
}
