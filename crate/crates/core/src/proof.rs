//! Certified conversion of a dominating set of a connected `k`-regular graph
//! into an independent dominating set, with the exact integer bound chain
//! that shows `2 i(G) <= k γ(G)`.
//!
//! Let `A` be the dominating set, `B = V \ A` and `s` the number of edges
//! inside `A`.
//!
//! * When `2s >= |A|`, counting edges between `A` and `B` gives
//!   `|B| <= k|A| - 2s <= (k-1)|A|`, hence `n <= k|A|`. Any maximal
//!   independent set `M` of a regular graph has `2|M| <= n`.
//! * When `2s < |A|`, a maximum independent set `A'` of `G[A]` is extended by
//!   a maximal independent set `C` of the `B`-neighbors of `A \ A'` that see
//!   nothing in `A'`. The result `A' ∪ C` has at most `|A| + (k-2)s`
//!   vertices, which is strictly below `k|A| / 2`.
//!
//! All arithmetic is in integers; thresholds such as `|A| / 2` are compared
//! after doubling.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::solve::{
    greedy_maximal_independent, is_dominating, is_independent, max_independent_set, SolveCertificate,
    SolveKind,
};
use crate::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("the given set is not dominating")]
    NotDominating,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("degree {0} is below 3")]
    DegreeTooSmall(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("counting certificate needs 2s >= |A| (s = {s}, |A| = {size})")]
    CaseMismatch { s: usize, size: usize },
    #[error("certificate does not validate for this graph: {0:?}")]
    InvalidCertificate(SolveKind),
    #[error("bound chain step failed: {0}")]
    BoundViolated(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProofCase {
    #[serde(rename = "CASE1_COUNTING")]
    Case1Counting,
    #[serde(rename = "CASE2_CONSTRUCTION")]
    Case2Construction,
}

/// Whether the `k/2` ratio bound established by a trace applies to `γ(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    /// `|A| = γ(G)` was backed by a domination certificate.
    Certified,
    /// The chain holds for `A`, but `A` is not known to be minimum.
    Conditional,
}

/// One labeled quantity of a bound chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundStep {
    pub label: String,
    pub value: i64,
}

/// Record of one run of [`construct_independent_dominating`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub case_taken: ProofCase,
    /// `|A|`.
    pub gamma: usize,
    pub k: usize,
    pub s: usize,
    #[serde(rename = "A")]
    pub a: VertexSet,
    #[serde(rename = "A_prime")]
    pub a_prime: Option<VertexSet>,
    /// `|A'| - (|A| - s)`.
    pub x: Option<usize>,
    #[serde(rename = "B_prime")]
    pub b_prime: Option<VertexSet>,
    #[serde(rename = "B_dprime")]
    pub b_dprime: Option<VertexSet>,
    #[serde(rename = "C")]
    pub c: Option<VertexSet>,
    #[serde(rename = "I")]
    pub i: VertexSet,
    /// Edges between `A` and `V \ A`.
    pub e: Option<usize>,
    pub bound_chain: Vec<BoundStep>,
    pub bound_status: BoundStatus,
}

/// Outcome of comparing `i / γ` against `k / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Below,
    Equal,
    Violation,
}

/// Greedy maximal independent set of a regular graph with its size check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RosenbergWitness {
    pub set: VertexSet,
    pub n: usize,
    /// `2|M| <= n`.
    pub holds: bool,
}

/// Structural consequences of `2i = kγ`, checked against the solver's
/// minimum dominating set `A`. Sub-checks are `None` when the ratio is not
/// extremal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalAudit {
    pub ratio_equality: bool,
    pub s_is_half_gamma: Option<bool>,
    /// `G[A]` is a perfect matching on `A`.
    pub matching_structure: Option<bool>,
    /// No matched pair of `G[A]` has a common neighbor.
    pub common_neighbor_free: Option<bool>,
    pub gamma_is_two: Option<bool>,
    pub is_kkk: bool,
    /// Counterexample vertex sets, keyed by the failed check.
    pub witnesses: BTreeMap<String, VertexSet>,
}

impl ExtremalAudit {
    /// A description of the first broken implication, if any. Equality must
    /// force every structural check and `K_{k,k}`; `K_{k,k}` must attain
    /// equality.
    pub fn violation(&self) -> Option<String> {
        if self.ratio_equality {
            let checks = [
                ("s_is_half_gamma", self.s_is_half_gamma),
                ("matching_structure", self.matching_structure),
                ("common_neighbor_free", self.common_neighbor_free),
                ("gamma_is_two", self.gamma_is_two),
            ];
            if let Some((name, _)) = checks.iter().find(|(_, v)| *v != Some(true)) {
                return Some(format!("ratio equality without {name}"));
            }
            if !self.is_kkk {
                return Some("ratio equality on a graph that is not K_{k,k}".into());
            }
        } else if self.is_kkk {
            return Some("K_{k,k} below ratio equality".into());
        }
        None
    }
}

struct Chain(Vec<BoundStep>);

impl Chain {
    fn new() -> Self {
        Chain(Vec::new())
    }

    fn push(&mut self, label: &str, value: i64) -> i64 {
        self.0.push(BoundStep { label: label.to_string(), value });
        value
    }

    fn require(&self, ok: bool, what: &str) -> Result<(), ProofError> {
        if ok {
            Ok(())
        } else {
            Err(ProofError::BoundViolated(what.to_string()))
        }
    }
}

/// `s = |E(G[A])|`.
pub fn induced_edge_count(g: &Graph, a: &VertexSet) -> usize {
    g.induced_edge_count(a)
}

fn check_regular(g: &Graph, k: usize) -> Result<(), ProofError> {
    if g.regularity() != Some(k) {
        return Err(ProofError::NotRegular(k));
    }
    Ok(())
}

fn check_dominating(g: &Graph, a: &VertexSet) -> Result<(), ProofError> {
    if !a.is_subset(&g.vertices()) || !is_dominating(g, a) {
        return Err(ProofError::NotDominating);
    }
    Ok(())
}

fn edges_between(g: &Graph, a: &VertexSet) -> usize {
    a.iter().map(|v| g.neighbors(v).difference(a).len()).sum()
}

/// Edge-counting chain for a dominating set with `2s >= |A|`:
/// `e = k|A| - 2s`, `e <= (k-1)|A|`, `|B| <= e`, `n <= k|A|`, each step
/// checked against the graph itself.
pub fn case1_counting_certificate(g: &Graph, a: &VertexSet, k: usize) -> Result<Vec<BoundStep>, ProofError> {
    check_regular(g, k)?;
    check_dominating(g, a)?;
    let s = g.induced_edge_count(a);
    if 2 * s < a.len() {
        return Err(ProofError::CaseMismatch { s, size: a.len() });
    }
    let mut chain = Chain::new();
    counting_steps(g, a, k, s, &mut chain)?;
    Ok(chain.0)
}

fn counting_steps(g: &Graph, a: &VertexSet, k: usize, s: usize, chain: &mut Chain) -> Result<i64, ProofError> {
    let k = k as i64;
    let gamma = chain.push("gamma", a.len() as i64);
    let s = chain.push("s", s as i64);
    let e = chain.push("e = k*gamma - 2s", k * gamma - 2 * s);
    let counted = chain.push("e (counted)", edges_between(g, a) as i64);
    chain.require(e == counted, "e = k*gamma - 2s matches counted cross edges")?;
    let cap = chain.push("(k-1)*gamma", (k - 1) * gamma);
    chain.require(e <= cap, "e <= (k-1)*gamma")?;
    let outside = chain.push("|B|", (g.order() - a.len()) as i64);
    chain.require(outside <= e, "|B| <= e")?;
    let n = chain.push("n", g.order() as i64);
    let k_gamma = chain.push("k*gamma", k * gamma);
    chain.require(n <= k_gamma, "n <= k*gamma")?;
    Ok(counted)
}

/// Converts a dominating set `a` of a connected `k`-regular graph into an
/// independent dominating set, recording the case, intermediate sets and
/// bound chain. `gamma_cert` marks the ratio bound as certified when it
/// proves `|a| = γ(G)`.
pub fn construct_independent_dominating(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    gamma_cert: Option<&SolveCertificate>,
) -> Result<(VertexSet, ProofTrace), ProofError> {
    if k < 3 {
        return Err(ProofError::DegreeTooSmall(k));
    }
    check_regular(g, k)?;
    if !g.is_connected() {
        return Err(ProofError::NotConnected);
    }
    check_dominating(g, a)?;

    let bound_status = match gamma_cert {
        Some(cert)
            if cert.kind == SolveKind::Domination && cert.value == a.len() && cert.validate(g) =>
        {
            BoundStatus::Certified
        }
        _ => BoundStatus::Conditional,
    };
    let s = g.induced_edge_count(a);
    let trace = if 2 * s >= a.len() {
        counting_case(g, a, k, s, bound_status)?
    } else {
        construction_case(g, a, k, s, bound_status)?
    };

    if !is_independent(g, &trace.i) || !is_dominating(g, &trace.i) {
        return Err(ProofError::BoundViolated("I is an independent dominating set".into()));
    }
    Ok((trace.i, trace))
}

fn counting_case(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    s: usize,
    bound_status: BoundStatus,
) -> Result<ProofTrace, ProofError> {
    let mut chain = Chain::new();
    let e = counting_steps(g, a, k, s, &mut chain)?;
    let i = smallest_greedy(g);
    chain.push("|I|", i.len() as i64);
    let twice = chain.push("2|I|", 2 * i.len() as i64);
    chain.require(twice <= g.order() as i64, "2|I| <= n")?;
    Ok(ProofTrace {
        case_taken: ProofCase::Case1Counting,
        gamma: a.len(),
        k,
        s,
        a: *a,
        a_prime: None,
        x: None,
        b_prime: None,
        b_dprime: None,
        c: None,
        i,
        e: Some(e as usize),
        bound_chain: chain.0,
        bound_status,
    })
}

/// Smallest greedy maximal independent set over the empty seed and every
/// singleton seed; ties keep the earlier seed.
fn smallest_greedy(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut best = greedy_maximal_independent(g, &VertexSet::new(), &all).expect("empty seed");
    for v in all.iter() {
        let m = greedy_maximal_independent(g, &VertexSet::singleton(v), &all).expect("singleton seed");
        if m.len() < best.len() {
            best = m;
        }
    }
    best
}

fn construction_case(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    s: usize,
    bound_status: BoundStatus,
) -> Result<ProofTrace, ProofError> {
    let outside = g.vertices().difference(a);
    let (inside, map) = g.induced_subgraph(a).expect("dominating set is non-empty");
    let a_prime = Graph::lift(&map, &max_independent_set(&inside).witness);
    let rest = a.difference(&a_prime);
    let b_prime = g.open_neighborhood(&rest).intersection(&outside);
    let b_dprime = b_prime.intersection(&g.open_neighborhood(&a_prime));
    let c = greedy_maximal_independent(g, &VertexSet::new(), &b_prime.difference(&b_dprime))
        .expect("empty seed");
    let i = a_prime.union(&c);

    let mut chain = Chain::new();
    let kk = k as i64;
    let gamma = chain.push("gamma", a.len() as i64);
    let s_val = chain.push("s", s as i64);
    let ap = chain.push("|A'|", a_prime.len() as i64);
    let floor = chain.push("gamma - s", gamma - s_val);
    chain.require(ap >= floor, "|A'| >= gamma - s")?;
    let x = chain.push("x", ap - floor);
    let removed = chain.push("s - x", s_val - x);
    chain.require(removed == rest.len() as i64, "|A \\ A'| = s - x")?;
    let bp = chain.push("|B'|", b_prime.len() as i64);
    let bp_cap = chain.push("(s-x)*(k-1)", removed * (kk - 1));
    chain.require(bp <= bp_cap, "|B'| <= (s-x)*(k-1)")?;
    let both = chain.push("|A'| + |B'|", ap + bp);
    let bound = chain.push("gamma + (k-2)*s", gamma + (kk - 2) * s_val);
    chain.require(both <= bound, "|A'| + |B'| <= gamma + (k-2)*s")?;
    chain.push("|C|", c.len() as i64);
    let size = chain.push("|I|", i.len() as i64);
    chain.require(size <= both, "|I| <= |A'| + |B'|")?;
    // largest s with 2s < gamma: gamma/2 - 1 for even gamma, (gamma-1)/2 for odd
    let s_max = chain.push("s_max", (gamma - 1) / 2);
    let parity = chain.push("2*(gamma + (k-2)*s_max)", 2 * (gamma + (kk - 2) * s_max));
    chain.require(2 * bound <= parity, "gamma + (k-2)*s <= gamma + (k-2)*s_max")?;
    let k_gamma = chain.push("k*gamma", kk * gamma);
    chain.require(parity < k_gamma, "2*(gamma + (k-2)*s_max) < k*gamma")?;
    let twice = chain.push("2|I|", 2 * size);
    chain.require(twice < k_gamma, "2|I| < k*gamma")?;

    Ok(ProofTrace {
        case_taken: ProofCase::Case2Construction,
        gamma: a.len(),
        k,
        s,
        a: *a,
        a_prime: Some(a_prime),
        x: Some(x as usize),
        b_prime: Some(b_prime),
        b_dprime: Some(b_dprime),
        c: Some(c),
        i,
        e: None,
        bound_chain: chain.0,
        bound_status,
    })
}

/// Greedy maximal independent set of a regular graph, with the check
/// `2|M| <= n`.
pub fn rosenberg_witness(g: &Graph) -> Result<RosenbergWitness, ProofError> {
    let k = g.regularity().ok_or(ProofError::NotRegular(g.degree(0)))?;
    if k == 0 {
        return Err(ProofError::IsolatedVertex);
    }
    let set = greedy_maximal_independent(g, &VertexSet::new(), &g.vertices()).expect("empty seed");
    Ok(RosenbergWitness { set, n: g.order(), holds: 2 * set.len() <= g.order() })
}

/// Checks the structure forced by `2i = kγ` on a connected `k`-regular graph.
pub fn extremal_audit(
    g: &Graph,
    k: usize,
    gamma_cert: &SolveCertificate,
    i_cert: &SolveCertificate,
) -> Result<ExtremalAudit, ProofError> {
    if k < 3 {
        return Err(ProofError::DegreeTooSmall(k));
    }
    check_regular(g, k)?;
    if !g.is_connected() {
        return Err(ProofError::NotConnected);
    }
    for (cert, kind) in [(gamma_cert, SolveKind::Domination), (i_cert, SolveKind::IndependentDomination)] {
        if cert.kind != kind || !cert.validate(g) {
            return Err(ProofError::InvalidCertificate(kind));
        }
    }

    let gamma = gamma_cert.value;
    let ratio_equality = ratio_compare(gamma, i_cert.value, k) == Verdict::Equal;
    let mut audit = ExtremalAudit {
        ratio_equality,
        s_is_half_gamma: None,
        matching_structure: None,
        common_neighbor_free: None,
        gamma_is_two: None,
        is_kkk: g.recognize_kkk(k),
        witnesses: BTreeMap::new(),
    };
    if !ratio_equality {
        return Ok(audit);
    }

    let a = gamma_cert.witness;
    let s = g.induced_edge_count(&a);
    audit.s_is_half_gamma = Some(2 * s == gamma);
    if 2 * s != gamma {
        audit.witnesses.insert("s_is_half_gamma".into(), a);
    }

    let unmatched: VertexSet = a.iter().filter(|&v| g.neighbors(v).intersection(&a).len() != 1).collect();
    audit.matching_structure = Some(unmatched.is_empty());
    if !unmatched.is_empty() {
        audit.witnesses.insert("matching_structure".into(), unmatched);
    }

    let mut clash = None;
    for u in a.iter() {
        for v in g.neighbors(u).intersection(&a).above(u).iter() {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if clash.is_none() && !common.is_empty() {
                let mut w = common;
                w.insert(u);
                w.insert(v);
                clash = Some(w);
            }
        }
    }
    audit.common_neighbor_free = Some(clash.is_none());
    if let Some(w) = clash {
        audit.witnesses.insert("common_neighbor_free".into(), w);
    }

    audit.gamma_is_two = Some(gamma == 2);
    if gamma != 2 {
        audit.witnesses.insert("gamma_is_two".into(), a);
    }
    if !audit.is_kkk {
        audit.witnesses.insert("is_kkk".into(), g.vertices());
    }
    Ok(audit)
}

/// Compares `i / γ` with `k / 2` by cross-multiplication.
pub fn ratio_compare(gamma: usize, i: usize, k: usize) -> Verdict {
    match (2 * i).cmp(&(k * gamma)) {
        std::cmp::Ordering::Less => Verdict::Below,
        std::cmp::Ordering::Equal => Verdict::Equal,
        std::cmp::Ordering::Greater => Verdict::Violation,
    }
}

/// `i <= γ(Δ + 2) - 2γ√Δ`, decided exactly: with `L = γ(Δ + 2) - i` the bound
/// holds iff `L >= 0` and `L² >= 4γ²Δ`.
pub fn furuya_check(gamma: usize, i: usize, delta: usize) -> bool {
    let (gamma, i, delta) = (gamma as i128, i as i128, delta as i128);
    let slack = gamma * (delta + 2) - i;
    slack >= 0 && slack * slack >= 4 * gamma * gamma * delta
}

/// `3i <= 4γ`, the cubic bound away from `K_{3,3}`.
pub fn southey_henning_check(gamma: usize, i: usize) -> bool {
    3 * i <= 4 * gamma
}
