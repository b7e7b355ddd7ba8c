mod common;

use proptest::prelude::*;
use regdom_core::generate::{sample_random_regular, SampleSpec};
use regdom_core::proof::{construct_independent_dominating, rosenberg_witness, ProofCase};
use regdom_core::solve::{
    greedy_maximal_independent, is_dominating, is_independent, max_independent_set, min_dominating_set,
    min_independent_dominating_set,
};
use regdom_core::{encode_graph6, parse_graph6, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_regular() -> impl Strategy<Value = Graph> {
    (3usize..=5, 0u64..1000).prop_flat_map(|(k, seed)| {
        let lo = k + 1;
        (lo..=16).prop_filter_map("odd degree sum", move |n| {
            (n * k % 2 == 0)
                .then(|| sample_random_regular(&SampleSpec { n, k, seed, max_retries: 100_000 }).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_values_and_witnesses(g in arb_graph(11)) {
        let gamma = min_dominating_set(&g);
        let i = min_independent_dominating_set(&g);
        let alpha = max_independent_set(&g);
        prop_assert!(gamma.validate(&g) && i.validate(&g) && alpha.validate(&g));
        prop_assert!(gamma.value <= i.value && i.value <= alpha.value);
        prop_assert_eq!(gamma.value, common::gamma(&g));
        prop_assert_eq!(i.value, common::independent_domination(&g));
        prop_assert_eq!(alpha.value, common::independence(&g));
    }

    #[test]
    fn solvers_are_deterministic(g in arb_graph(14)) {
        prop_assert_eq!(min_dominating_set(&g), min_dominating_set(&g));
        prop_assert_eq!(min_independent_dominating_set(&g), min_independent_dominating_set(&g));
        let again = parse_graph6(&encode_graph6(&g)).unwrap();
        prop_assert_eq!(max_independent_set(&g), max_independent_set(&again));
    }

    #[test]
    fn greedy_is_maximal(g in arb_graph(20), seed_vertex in 0usize..20) {
        let seed = if seed_vertex < g.order() { VertexSet::singleton(seed_vertex) } else { VertexSet::new() };
        let m = greedy_maximal_independent(&g, &seed, &g.vertices()).unwrap();
        prop_assert!(seed.is_subset(&m));
        prop_assert!(is_independent(&g, &m));
        // maximal independent sets dominate
        prop_assert!(is_dominating(&g, &m));
    }

    #[test]
    fn construction_is_sound_on_regular_graphs(g in arb_regular()) {
        let k = g.regularity().unwrap();
        prop_assume!(g.is_connected());
        let gamma = min_dominating_set(&g);
        let (set, trace) = construct_independent_dominating(&g, &gamma.witness, k, Some(&gamma)).unwrap();
        prop_assert!(is_independent(&g, &set) && is_dominating(&g, &set));
        prop_assert_eq!(set, trace.i);
        prop_assert!(2 * set.len() <= k * gamma.value);
        if !g.recognize_kkk(k) {
            prop_assert!(2 * set.len() < k * gamma.value);
        }
        let s = g.induced_edge_count(&gamma.witness);
        let expected = if 2 * s >= gamma.value { ProofCase::Case1Counting } else { ProofCase::Case2Construction };
        prop_assert_eq!(trace.case_taken, expected);
        prop_assert!(set.len() >= min_independent_dominating_set(&g).value);
    }

    #[test]
    fn rosenberg_bound(g in arb_regular()) {
        let w = rosenberg_witness(&g).unwrap();
        prop_assert!(w.holds);
        prop_assert!(2 * w.set.len() <= g.order());
        prop_assert!(is_independent(&g, &w.set) && is_dominating(&g, &w.set));
    }
}

#[test]
fn complete_bipartite_is_extremal() {
    for k in 3..=8 {
        let g = Graph::complete_bipartite(k, k);
        assert_eq!((min_dominating_set(&g).value, min_independent_dominating_set(&g).value), (2, k));
        assert_eq!(common::gamma(&g), 2);
    }
}
