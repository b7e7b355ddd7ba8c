//! Test-graph sources: isomorph-free enumeration of regular graphs, exhaustive
//! enumeration of all small graphs, and pairing-model random regular graphs.

use std::collections::BTreeSet;
use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::{canonical_form, full_mask, prefix_is_maximal, CanonicalForm};
use crate::{encode_graph6, Graph, VertexSet, MAX_VERTICES};

/// Identifier of the pseudo-random generator used by
/// [`sample_random_regular`], recorded in reports for replay.
pub const RNG_ALGORITHM: &str = "chacha8-seed_from_u64";

/// Largest order accepted by [`all_graphs`].
pub const ALL_GRAPHS_MAX_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no {k}-regular graph on {n} vertices exists (n*k must be even and k < n)")]
    InfeasibleSpec { n: usize, k: usize },
    #[error("order {n} exceeds the enumeration cap {cap} for degree {k}")]
    CapExceeded { n: usize, k: usize, cap: usize },
    #[error("no simple connected sample after {0} pairings")]
    RetriesExhausted(usize),
}

/// Which regular graphs to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub k: usize,
    pub connected_only: bool,
}

impl EnumSpec {
    pub fn connected(n: usize, k: usize) -> Self {
        EnumSpec { n, k, connected_only: true }
    }

    fn check(&self) -> Result<(), GenError> {
        if self.k < 3 || self.k >= self.n || self.n * self.k % 2 == 1 {
            return Err(GenError::InfeasibleSpec { n: self.n, k: self.k });
        }
        let cap = enumeration_cap(self.k);
        if self.n > cap {
            return Err(GenError::CapExceeded { n: self.n, k: self.k, cap });
        }
        Ok(())
    }
}

/// Default largest order the enumerator accepts for degree `k`.
pub fn enumeration_cap(k: usize) -> usize {
    match k {
        0..=3 => 14,
        4 => 11,
        5 => 10,
        _ => 12,
    }
}

/// Parameters for [`sample_random_regular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub max_retries: usize,
}

/// All `k`-regular graphs on `n` vertices up to isomorphism, connected ones
/// only when requested, in a fixed order.
pub fn enumerate_connected_regular(spec: &EnumSpec) -> Result<Vec<Graph>, GenError> {
    let mut out = Vec::new();
    visit_regular(spec, |g| out.push(g))?;
    Ok(out)
}

/// Streaming form of [`enumerate_connected_regular`].
///
/// Orderly generation: the adjacency matrix is filled row by row, and a
/// completed graph is emitted only if the identity labeling is its canonical
/// (lexicographically largest) matrix. Partial matrices are discarded as soon
/// as some relabeling of the finished rows beats them, and within each row the
/// later vertices that are still indistinguishable must take edges in order.
pub fn visit_regular<F: FnMut(Graph)>(spec: &EnumSpec, mut emit: F) -> Result<(), GenError> {
    spec.check()?;
    let mut state = Orderly {
        n: spec.n,
        k: spec.k,
        connected_only: spec.connected_only,
        adj: vec![0; spec.n],
        deg: vec![0; spec.n],
    };
    state.row(0, &mut emit);
    Ok(())
}

struct Orderly {
    n: usize,
    k: usize,
    connected_only: bool,
    adj: Vec<u64>,
    deg: Vec<usize>,
}

impl Orderly {
    fn row<F: FnMut(Graph)>(&mut self, r: usize, emit: &mut F) {
        if r == self.n {
            let adj = self.adj.iter().map(|&bits| mask_to_set(bits)).collect();
            emit(Graph::from_adjacency(adj).expect("orderly rows are symmetric"));
            return;
        }
        // Later vertices grouped into runs with identical adjacency to 0..r.
        let earlier = full_mask(r);
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for j in r + 1..self.n {
            match blocks.last_mut() {
                Some((start, len)) if self.adj[*start] & earlier == self.adj[j] & earlier => *len += 1,
                _ => blocks.push((j, 1)),
            }
        }
        let need = self.k - self.deg[r];
        self.distribute(r, &blocks, 0, need, emit);
    }

    /// Assigns the remaining edges of row `r` to blocks, each block taking a
    /// prefix of its vertices, largest counts first.
    fn distribute<F: FnMut(Graph)>(
        &mut self,
        r: usize,
        blocks: &[(usize, usize)],
        idx: usize,
        need: usize,
        emit: &mut F,
    ) {
        if idx == blocks.len() {
            if need == 0 && self.row_done(r) {
                self.row(r + 1, emit);
            }
            return;
        }
        let (start, len) = blocks[idx];
        let capacity: usize = blocks[idx..].iter().map(|b| b.1).sum();
        if need > capacity {
            return;
        }
        let open = if self.deg[start] < self.k { len } else { 0 };
        for take in (0..=open.min(need)).rev() {
            for j in start..start + take {
                self.link(r, j);
            }
            self.distribute(r, blocks, idx + 1, need - take, emit);
            for j in start..start + take {
                self.unlink(r, j);
            }
        }
    }

    /// Checks made once row `r` is final.
    fn row_done(&self, r: usize) -> bool {
        let n = self.n;
        let later = n - r - 1;
        for j in r + 1..n {
            if self.k - self.deg[j] > later - 1 {
                return false;
            }
        }
        if self.connected_only && r + 1 < n {
            let closed = full_mask(r + 1);
            if self.adj[..=r].iter().all(|&a| a & !closed == 0) {
                return false;
            }
        }
        prefix_is_maximal(&self.adj, n, r)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }
}

fn mask_to_set(mut bits: u64) -> VertexSet {
    let mut s = VertexSet::new();
    while bits != 0 {
        s.insert(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    s
}

/// Every graph on `n` vertices up to isomorphism, each relabeled into
/// canonical order, sorted by canonical form.
///
/// Built by adding a vertex with every possible neighborhood to each graph on
/// `n - 1` vertices and keeping one graph per canonical form.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GenError> {
    if n == 0 {
        return Err(GenError::InfeasibleSpec { n, k: 0 });
    }
    if n > ALL_GRAPHS_MAX_ORDER {
        return Err(GenError::CapExceeded { n, k: 0, cap: ALL_GRAPHS_MAX_ORDER });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(1))]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            let base_edges = base.edges();
            for mask in 0u32..(1 << (m - 1)) {
                let mut edges = base_edges.clone();
                edges.extend((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let g = Graph::from_edges(m, &edges).expect("valid extension");
                next.insert(canonical_form(&g));
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::to_graph).collect())
}

/// Draws a simple connected `k`-regular graph from the pairing model.
///
/// The `n * k` half-edges are shuffled and paired consecutively; pairings with
/// loops, repeated edges or more than one component are rejected and redrawn
/// from the same generator stream.
pub fn sample_random_regular(spec: &SampleSpec) -> Result<Graph, GenError> {
    let SampleSpec { n, k, seed, max_retries } = *spec;
    if n == 0 || k >= n || n * k % 2 == 1 || n > MAX_VERTICES {
        return Err(GenError::InfeasibleSpec { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..max_retries {
        points.shuffle(&mut rng);
        let mut adj = vec![VertexSet::new(); n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(v) {
                continue 'attempt;
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let g = Graph::from_adjacency(adj).expect("pairing produced a simple graph");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::RetriesExhausted(max_retries))
}

/// Writes one graph6 line per graph.
pub fn write_graph6<'a, W: Write>(mut out: W, graphs: impl IntoIterator<Item = &'a Graph>) -> io::Result<usize> {
    let mut count = 0;
    for g in graphs {
        writeln!(out, "{}", encode_graph6(g))?;
        count += 1;
    }
    Ok(count)
}
