//! Exact solvers for the domination number `γ(G)`, the independent domination
//! number `i(G)`, and maximum independent sets.
//!
//! All solvers are deterministic: among optimal sets they return the
//! lexicographically smallest one when compared as ascending vertex lists.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("seed set is not independent")]
    SeedNotIndependent,
    #[error("seed set is not contained in the allowed set")]
    SeedNotAllowed,
    #[error("time budget exhausted after {nodes} search nodes")]
    Timeout { nodes: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SolveKind {
    Domination,
    IndependentDomination,
    MaxIndependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Optimality {
    /// Every smaller (or, for maximum independent sets, larger) size was
    /// refuted by exhaustive search.
    ProvedExhaustive,
}

/// An optimal set together with how it was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveCertificate {
    pub kind: SolveKind,
    pub witness: VertexSet,
    pub value: usize,
    pub optimality: Optimality,
    /// Search nodes visited, for performance tracking only.
    pub nodes_explored: u64,
}

impl SolveCertificate {
    /// Checks that the witness has the defining property of `kind` and that
    /// `value` matches its size. Optimality itself is not re-checked.
    pub fn validate(&self, g: &Graph) -> bool {
        if !self.witness.is_subset(&g.vertices()) || self.witness.len() != self.value {
            return false;
        }
        match self.kind {
            SolveKind::Domination => is_dominating(g, &self.witness),
            SolveKind::IndependentDomination => {
                is_dominating(g, &self.witness) && is_independent(g, &self.witness)
            }
            SolveKind::MaxIndependent => is_independent(g, &self.witness),
        }
    }
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    g.dominated_by(s) == g.vertices()
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Extends `seed` greedily, in ascending vertex order, to an independent set
/// that is maximal within `allowed`.
pub fn greedy_maximal_independent(
    g: &Graph,
    seed: &VertexSet,
    allowed: &VertexSet,
) -> Result<VertexSet, SolveError> {
    if !is_independent(g, seed) {
        return Err(SolveError::SeedNotIndependent);
    }
    if !seed.is_subset(allowed) {
        return Err(SolveError::SeedNotAllowed);
    }
    let mut set = *seed;
    let mut blocked = g.dominated_by(seed);
    for v in allowed.intersection(&g.vertices()).iter() {
        if !blocked.contains(v) {
            set.insert(v);
            blocked.union_with(&g.closed_neighbors(v));
        }
    }
    Ok(set)
}

/// Minimum dominating set, lexicographically smallest among minima.
pub fn min_dominating_set(g: &Graph) -> SolveCertificate {
    min_dominating_set_until(g, None).expect("no deadline")
}

pub fn min_dominating_set_until(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<SolveCertificate, SolveError> {
    DominationSearch::new(g, false, deadline).solve()
}

/// Minimum independent dominating set (equivalently, a smallest maximal
/// independent set), lexicographically smallest among minima.
pub fn min_independent_dominating_set(g: &Graph) -> SolveCertificate {
    min_independent_dominating_set_until(g, None).expect("no deadline")
}

pub fn min_independent_dominating_set_until(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<SolveCertificate, SolveError> {
    DominationSearch::new(g, true, deadline).solve()
}

/// Maximum independent set, lexicographically smallest among maxima.
pub fn max_independent_set(g: &Graph) -> SolveCertificate {
    max_independent_set_until(g, None).expect("no deadline")
}

pub fn max_independent_set_until(
    g: &Graph,
    deadline: Option<Instant>,
) -> Result<SolveCertificate, SolveError> {
    let mut search = IndependenceSearch {
        g,
        clock: Clock::new(deadline),
        best: VertexSet::new(),
    };
    search.expand(VertexSet::new(), g.vertices())?;
    Ok(SolveCertificate {
        kind: SolveKind::MaxIndependent,
        witness: search.best,
        value: search.best.len(),
        optimality: Optimality::ProvedExhaustive,
        nodes_explored: search.clock.nodes,
    })
}

struct Clock {
    nodes: u64,
    deadline: Option<Instant>,
}

impl Clock {
    fn new(deadline: Option<Instant>) -> Self {
        Clock { nodes: 0, deadline }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(SolveError::Timeout { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

/// Feasibility search shared by the `γ` and `i` solvers.
///
/// Branches on the lowest-index undominated vertex `v`; the children are the
/// still-addable members of `N[v]`. In independent mode choosing `w` removes
/// `N[w]` from the addable pool.
struct DominationSearch<'a> {
    g: &'a Graph,
    independent: bool,
    all: VertexSet,
    clock: Clock,
}

impl<'a> DominationSearch<'a> {
    fn new(g: &'a Graph, independent: bool, deadline: Option<Instant>) -> Self {
        DominationSearch { g, independent, all: g.vertices(), clock: Clock::new(deadline) }
    }

    fn kind(&self) -> SolveKind {
        if self.independent {
            SolveKind::IndependentDomination
        } else {
            SolveKind::Domination
        }
    }

    fn solve(mut self) -> Result<SolveCertificate, SolveError> {
        let g = self.g;
        let n = g.order();
        let lower = n.div_ceil(g.max_degree() + 1);
        let upper = if self.independent {
            greedy_maximal_independent(g, &VertexSet::new(), &self.all)
                .expect("empty seed")
                .len()
        } else {
            greedy_domination(g).len()
        };

        let mut value = upper;
        for target in lower..upper {
            if let Some(found) = self.extend(VertexSet::new(), self.all, target)? {
                value = found.len();
                break;
            }
        }
        let witness = self.lex_smallest(value)?;
        debug_assert_eq!(witness.len(), value);
        Ok(SolveCertificate {
            kind: self.kind(),
            witness,
            value,
            optimality: Optimality::ProvedExhaustive,
            nodes_explored: self.clock.nodes,
        })
    }

    /// Fixes witness members one at a time, smallest first, keeping only
    /// choices that still admit a completion of total size `value`.
    fn lex_smallest(&mut self, value: usize) -> Result<VertexSet, SolveError> {
        let mut chosen = VertexSet::new();
        let mut last: Option<usize> = None;
        for pos in 0..value {
            let start = last.map_or(0, |l| l + 1);
            let mut fixed = None;
            for u in start..self.g.order() {
                if self.independent && self.g.dominated_by(&chosen).contains(u) {
                    continue;
                }
                let mut trial = chosen;
                trial.insert(u);
                let mut pool = self.all.above(u);
                if self.independent {
                    pool = pool.difference(&self.g.dominated_by(&trial));
                }
                if self.extend(trial, pool, value - pos - 1)?.is_some() {
                    fixed = Some(u);
                    break;
                }
            }
            let u = fixed.expect("a witness of the optimal size exists");
            chosen.insert(u);
            last = Some(u);
        }
        Ok(chosen)
    }

    /// Tries to add at most `budget` vertices from `addable` to `chosen` so
    /// that the result dominates the graph.
    fn extend(
        &mut self,
        chosen: VertexSet,
        addable: VertexSet,
        budget: usize,
    ) -> Result<Option<VertexSet>, SolveError> {
        self.clock.tick()?;
        let g = self.g;
        let dominated = g.dominated_by(&chosen);
        let undominated = self.all.difference(&dominated);
        let Some(v) = undominated.first() else {
            return Ok(Some(chosen));
        };
        if budget == 0 {
            return Ok(None);
        }

        let mut best_cover = 0;
        for w in addable.iter() {
            best_cover = best_cover.max(g.closed_neighbors(w).intersection(&undominated).len());
        }
        if best_cover == 0 || undominated.len() > budget * best_cover {
            return Ok(None);
        }
        if undominated
            .iter()
            .any(|u| !g.closed_neighbors(u).intersects(&addable))
        {
            return Ok(None);
        }

        let mut pool = addable;
        for w in g.closed_neighbors(v).intersection(&addable).iter() {
            pool.remove(w);
            let mut next = chosen;
            next.insert(w);
            let child_pool = if self.independent {
                pool.difference(&g.closed_neighbors(w))
            } else {
                pool
            };
            if let Some(found) = self.extend(next, child_pool, budget - 1)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Repeatedly takes the vertex dominating the most undominated vertices
/// (lowest index on ties).
fn greedy_domination(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::new();
    let mut dominated = VertexSet::new();
    while dominated != all {
        let undominated = all.difference(&dominated);
        let best = (0..g.order())
            .max_by_key(|&w| (g.closed_neighbors(w).intersection(&undominated).len(), std::cmp::Reverse(w)))
            .expect("non-empty graph");
        chosen.insert(best);
        dominated.union_with(&g.closed_neighbors(best));
    }
    chosen
}

/// Include-first branch and bound on the lowest remaining candidate. The
/// include-first order visits maximum independent sets in lexicographic
/// order, so keeping only strict improvements yields the smallest one.
struct IndependenceSearch<'a> {
    g: &'a Graph,
    clock: Clock,
    best: VertexSet,
}

impl IndependenceSearch<'_> {
    fn expand(&mut self, current: VertexSet, candidates: VertexSet) -> Result<(), SolveError> {
        self.clock.tick()?;
        let Some(v) = candidates.first() else {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return Ok(());
        };
        if current.len() + candidates.len() <= self.best.len() {
            return Ok(());
        }
        let mut with = current;
        with.insert(v);
        self.expand(with, candidates.difference(&self.g.closed_neighbors(v)))?;
        let mut without = candidates;
        without.remove(v);
        self.expand(current, without)
    }
}
