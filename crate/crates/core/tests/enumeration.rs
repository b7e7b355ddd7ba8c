mod common;

use regdom_core::canon::canonical_form;
use regdom_core::generate::{all_graphs, enumerate_connected_regular, visit_regular, EnumSpec};
use std::collections::BTreeSet;

#[test]
fn orderly_enumeration_matches_brute_force_classes() {
    for (n, k) in [(4, 3), (6, 3), (8, 3), (5, 4), (6, 4), (7, 4), (8, 4), (6, 5), (8, 5), (7, 6), (8, 6)] {
        let reps = common::classes(&common::labeled_regular(n, k), true);
        let produced = enumerate_connected_regular(&EnumSpec::connected(n, k)).unwrap();
        assert_eq!(produced.len(), reps.len(), "n={n} k={k}");
        for rep in &reps {
            let hits = produced.iter().filter(|g| common::isomorphic(g, rep)).count();
            assert_eq!(hits, 1, "n={n} k={k}: class of {rep:?} produced {hits} times");
        }
    }
}

#[test]
fn disconnected_classes_match_brute_force() {
    for (n, k) in [(8, 3), (8, 4)] {
        let reps = common::classes(&common::labeled_regular(n, k), false);
        let produced = enumerate_connected_regular(&EnumSpec { n, k, connected_only: false }).unwrap();
        assert_eq!(produced.len(), reps.len(), "n={n} k={k}");
    }
}

#[test]
fn census_counts() {
    // connected k-regular graphs: cubic 4..14, quartic 5..11, quintic 6..10
    let expected: &[(usize, usize, usize)] = &[
        (4, 3, 1),
        (6, 3, 2),
        (8, 3, 5),
        (10, 3, 19),
        (12, 3, 85),
        (14, 3, 509),
        (5, 4, 1),
        (6, 4, 1),
        (7, 4, 2),
        (8, 4, 6),
        (9, 4, 16),
        (10, 4, 59),
        (11, 4, 265),
        (6, 5, 1),
        (8, 5, 3),
        (10, 5, 60),
    ];
    for &(n, k, count) in expected {
        let graphs = enumerate_connected_regular(&EnumSpec::connected(n, k)).unwrap();
        assert_eq!(graphs.len(), count, "n={n} k={k}");
        let forms: BTreeSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), count, "duplicates at n={n} k={k}");
        assert!(graphs.iter().all(|g| g.regularity() == Some(k) && g.is_connected()));
    }
}

#[test]
fn enumeration_order_is_deterministic() {
    let a = enumerate_connected_regular(&EnumSpec::connected(12, 3)).unwrap();
    let mut b = Vec::new();
    visit_regular(&EnumSpec::connected(12, 3), |g| b.push(g)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn all_graph_counts_and_regular_subsets() {
    let counts: Vec<usize> = (1..=7).map(|n| all_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    // the regular connected members agree with the orderly enumerator
    for (n, k) in [(6, 3), (7, 4), (6, 4)] {
        let from_all = all_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| g.regularity() == Some(k) && g.is_connected())
            .count();
        assert_eq!(from_all, enumerate_connected_regular(&EnumSpec::connected(n, k)).unwrap().len());
    }
}
