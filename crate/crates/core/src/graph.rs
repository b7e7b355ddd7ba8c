//! Simple undirected graphs over `0..n` with bitset adjacency.

use std::collections::VecDeque;

use crate::set::{VertexSet, MAX_VERTICES};
use crate::GraphError;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighborhood `N(v)`. Adjacency is symmetric and
/// loop-free; both properties are checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Structural classification of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClass {
    /// Common degree, when the graph is regular.
    pub k: Option<usize>,
    pub connected: bool,
    /// `G` is isomorphic to `K_{k,k}`.
    pub is_kkk: bool,
}

impl Graph {
    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        check_order(n)?;
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::InvalidEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighborhoods, validating symmetry and the absence
    /// of loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, nv) in adj.iter().enumerate() {
            if nv.contains(v) || !nv.is_subset(&all) {
                return Err(GraphError::InvalidEdge(v, v));
            }
            if let Some(u) = nv.iter().find(|&u| !adj[u].contains(v)) {
                return Err(GraphError::InvalidEdge(v, u));
            }
        }
        Ok(Graph { n, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).expect("order within bounds")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("order within bounds")
    }

    /// `K_{a,b}` with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, &edges).expect("order within bounds")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("order within bounds")
    }

    /// Petersen graph: outer cycle `0..5`, spokes `i - (i+5)`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("valid")
    }

    /// Prism `C_m x K_2`: two `m`-cycles `0..m` and `m..2m` joined by rungs.
    pub fn prism(m: usize) -> Graph {
        let mut edges = Vec::with_capacity(3 * m);
        for i in 0..m {
            edges.push((i, (i + 1) % m));
            edges.push((m + i, m + (i + 1) % m));
            edges.push((i, m + i));
        }
        Graph::from_edges(2 * m, &edges).expect("prism needs m >= 3")
    }

    /// The `d`-dimensional hypercube `Q_d`.
    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        Graph::from_edges(n, &edges).expect("order within bounds")
    }

    /// Disjoint union, relabeling `other` to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(self.n + other.n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// The vertex set `{0..n}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].above(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
            .collect()
    }

    /// Union of closed neighborhoods of `s`.
    pub fn dominated_by(&self, s: &VertexSet) -> VertexSet {
        let mut out = *s;
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Union of open neighborhoods of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Whether breadth-first search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for u in self.adj[v].difference(&seen).iter() {
                seen.insert(u);
                queue.push_back(u);
            }
        }
        seen.len() == self.n
    }

    /// `Some(k)` when every vertex has degree exactly `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Recognizes `K_{k,k}` by checking that `N(0)` and its complement are
    /// both independent `k`-sets with every cross pair adjacent.
    pub fn recognize_kkk(&self, k: usize) -> bool {
        if k == 0 || self.n != 2 * k || self.regularity() != Some(k) {
            return false;
        }
        let left = self.adj[0];
        let right = self.vertices().difference(&left);
        if left.len() != k || right.len() != k {
            return false;
        }
        left.iter().all(|v| self.adj[v] == right) && right.iter().all(|v| self.adj[v] == left)
    }

    pub fn classify(&self) -> GraphClass {
        let k = self.regularity();
        GraphClass {
            k,
            connected: self.is_connected(),
            is_kkk: k.is_some_and(|k| self.recognize_kkk(k)),
        }
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in ascending order.
    ///
    /// The returned map sends each new label to its original vertex.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if !s.is_subset(&self.vertices()) {
            return Err(GraphError::OutOfRange(s.last().unwrap_or(0)));
        }
        let map = s.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|u| position[u]).collect())
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Lifts a set of induced-subgraph labels back to original labels.
    pub fn lift(map: &[usize], s: &VertexSet) -> VertexSet {
        s.iter().map(|v| map[v]).collect()
    }

    /// Number of edges with both ends in `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::EmptyGraph)
    } else if n > MAX_VERTICES {
        Err(GraphError::TooLarge(n))
    } else {
        Ok(())
    }
}
