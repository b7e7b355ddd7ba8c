//! Canonical forms for small graphs.
//!
//! The canonical form of a graph is its lexicographically largest adjacency
//! matrix over all vertex orderings, read row by row over the strict upper
//! triangle. The search places vertices one position at a time while keeping
//! the unplaced vertices in an ordered partition: every cell holds vertices
//! with identical adjacency to the placed prefix, neighbors of each placed
//! vertex are moved to the front of their cell, and only children whose new
//! row is maximal among their siblings are explored.
//!
//! Rows are stored as `u64` with column `q` at bit `n - 1 - q`, so comparing
//! rows as integers compares them lexicographically. Graphs are limited to
//! [`CANON_MAX_VERTICES`] vertices.

use std::cmp::Ordering;

use crate::Graph;

pub const CANON_MAX_VERTICES: usize = 64;

/// Canonical adjacency rows of a graph. Two graphs are isomorphic iff their
/// forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the graph whose identity labeling realizes this form.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (p, &row) in self.rows.iter().enumerate() {
            for q in p + 1..self.n {
                if row >> (self.n - 1 - q) & 1 == 1 {
                    edges.push((p, q));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("canonical rows describe a simple graph")
    }
}

/// Computes the canonical form together with an ordering of the original
/// vertices that realizes it (`order[p]` is the vertex placed at position
/// `p`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(n <= CANON_MAX_VERTICES, "canonical forms support at most {CANON_MAX_VERTICES} vertices");
    let adj = bit_rows(g);
    let mut search = MaxSearch { adj: &adj, n, best: None, rows: Vec::with_capacity(n), order: Vec::with_capacity(n) };
    search.explore(vec![full_mask(n)]);
    let (rows, order) = search.best.expect("every graph has an ordering");
    (CanonicalForm { n, rows }, order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Whether no ordering that keeps vertices `0..=r` in the first `r + 1`
/// positions produces larger rows `0..=r` than the identity ordering.
///
/// Only rows `0..=r` of `adj` need to be final; adjacency among vertices
/// beyond `r` is never read. With `r = n - 1` this is the full test for the
/// identity ordering being canonical.
pub(crate) fn prefix_is_maximal(adj: &[u64], n: usize, r: usize) -> bool {
    let identity: Vec<u64> = (0..=r).map(|i| identity_row(adj, n, i)).collect();
    let known = full_mask(r + 1);
    prefix_search(adj, n, r, known, &identity, 0, vec![full_mask(n)])
}

/// Row `i` of the identity ordering.
pub(crate) fn identity_row(adj: &[u64], n: usize, i: usize) -> u64 {
    let mut row = 0;
    for q in i + 1..n {
        if adj[i] >> q & 1 == 1 {
            row |= 1 << (n - 1 - q);
        }
    }
    row
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bit_rows(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, u| acc | 1 << u))
        .collect()
}

/// Places `v` at position `p` and returns its row plus the refined cells.
fn place(adj: &[u64], n: usize, p: usize, cells: &[u64], v: usize) -> (u64, Vec<u64>) {
    let nv = adj[v];
    let mut row = 0u64;
    let mut q = p + 1;
    let mut refined = Vec::with_capacity(cells.len() + 1);
    for (idx, &cell) in cells.iter().enumerate() {
        let cell = if idx == 0 { cell & !(1 << v) } else { cell };
        if cell == 0 {
            continue;
        }
        let near = cell & nv;
        let far = cell & !nv;
        let a = near.count_ones() as usize;
        if a > 0 {
            row |= full_mask(a) << (n - q - a);
            refined.push(near);
        }
        if far != 0 {
            refined.push(far);
        }
        q += cell.count_ones() as usize;
    }
    (row, refined)
}

fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

struct MaxSearch<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    rows: Vec<u64>,
    order: Vec<usize>,
}

impl MaxSearch<'_> {
    fn explore(&mut self, cells: Vec<u64>) {
        let p = self.rows.len();
        if p == self.n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.rows > *best,
            };
            if better {
                self.best = Some((self.rows.clone(), self.order.clone()));
            }
            return;
        }
        let children: Vec<(usize, u64, Vec<u64>)> = members(cells[0])
            .map(|v| {
                let (row, refined) = place(self.adj, self.n, p, &cells, v);
                (v, row, refined)
            })
            .collect();
        let top = children.iter().map(|c| c.1).max().expect("first cell is non-empty");
        for (v, row, refined) in children {
            if row != top {
                continue;
            }
            self.rows.push(row);
            self.order.push(v);
            let behind = self
                .best
                .as_ref()
                .is_some_and(|(best, _)| self.rows.as_slice().cmp(&best[..=p]) == Ordering::Less);
            if !behind {
                self.explore(refined);
            }
            self.rows.pop();
            self.order.pop();
        }
    }
}

fn prefix_search(
    adj: &[u64],
    n: usize,
    r: usize,
    known: u64,
    identity: &[u64],
    p: usize,
    cells: Vec<u64>,
) -> bool {
    for v in members(cells[0] & known) {
        let (row, refined) = place(adj, n, p, &cells, v);
        match row.cmp(&identity[p]) {
            Ordering::Greater => return false,
            Ordering::Less => {}
            Ordering::Equal => {
                if p < r && !prefix_search(adj, n, r, known, identity, p + 1, refined) {
                    return false;
                }
            }
        }
    }
    true
}
