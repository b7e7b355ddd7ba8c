//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! solvers or the canonical-form code.
#![allow(dead_code)]

use regdom_core::Graph;

fn closed(g: &Graph, v: usize) -> u32 {
    g.neighbors(v).iter().fold(1u32 << v, |acc, u| acc | 1 << u)
}

fn scan(g: &Graph, keep: impl Fn(u32) -> bool, better: impl Fn(u32, u32) -> bool) -> u32 {
    let n = g.order();
    assert!(n <= 20);
    let mut best: Option<u32> = None;
    for mask in 0u32..(1 << n) {
        if keep(mask) && best.is_none_or(|b| better(mask, b)) {
            best = Some(mask);
        }
    }
    best.expect("some subset qualifies")
}

pub fn dominates(g: &Graph, mask: u32) -> bool {
    let all = (1u32 << g.order()) - 1;
    (0..g.order()).filter(|&v| mask >> v & 1 == 1).fold(0, |acc, v| acc | closed(g, v)) == all
}

pub fn independent(g: &Graph, mask: u32) -> bool {
    (0..g.order()).all(|v| mask >> v & 1 == 0 || g.neighbors(v).iter().all(|u| mask >> u & 1 == 0))
}

/// Minimum dominating set size by scanning all 2^n subsets.
pub fn gamma(g: &Graph) -> usize {
    scan(g, |m| dominates(g, m), |a, b| a.count_ones() < b.count_ones()).count_ones() as usize
}

pub fn independent_domination(g: &Graph) -> usize {
    scan(g, |m| dominates(g, m) && independent(g, m), |a, b| a.count_ones() < b.count_ones())
        .count_ones() as usize
}

pub fn independence(g: &Graph) -> usize {
    scan(g, |m| independent(g, m), |a, b| a.count_ones() > b.count_ones()).count_ones() as usize
}

/// All labeled k-regular graphs on n vertices, by filling the upper triangle
/// pair by pair under degree limits.
pub fn labeled_regular(n: usize, k: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut deg = vec![0usize; n];
    let mut chosen = Vec::new();
    fn rec(
        idx: usize,
        pairs: &[(usize, usize)],
        n: usize,
        k: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if idx == pairs.len() {
            if deg.iter().all(|&d| d == k) {
                out.push(Graph::from_edges(n, chosen).unwrap());
            }
            return;
        }
        let (u, v) = pairs[idx];
        // once every pair touching u is decided, u must be full
        let last_for_u = v == n - 1;
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if !(last_for_u && deg[u] != k) {
                rec(idx + 1, pairs, n, k, deg, chosen, out);
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !(last_for_u && deg[u] != k) {
            rec(idx + 1, pairs, n, k, deg, chosen, out);
        }
    }
    rec(0, &pairs, n, k, &mut deg, &mut chosen, &mut out);
    out
}

/// Isomorphism by backtracking over vertex maps.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Representatives of the isomorphism classes among `graphs`.
pub fn classes(graphs: &[Graph], connected_only: bool) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if connected_only && !g.is_connected() {
            continue;
        }
        if !reps.iter().any(|r| isomorphic(r, g)) {
            reps.push(g.clone());
        }
    }
    reps
}
