//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use regdom_cli::{analyze, verify, Row, RowVerdict, Source, VerifyOptions};
use regdom_core::generate::{all_graphs, sample_random_regular, SampleSpec};
use regdom_core::proof::construct_independent_dominating;
use regdom_core::solve::{max_independent_set, min_dominating_set, min_independent_dominating_set};
use regdom_core::{parse_graph6, Graph};

/// Subset-scan oracle over bitmasks, independent of the solvers.
mod oracle {
    use regdom_core::Graph;

    fn masks(g: &Graph) -> Vec<u32> {
        (0..g.order()).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect()
    }

    pub fn dominating(g: &Graph, s: u32) -> bool {
        let adj = masks(g);
        let covered = (0..g.order()).filter(|v| s >> v & 1 == 1).fold(s, |m, v| m | adj[v]);
        covered == (1u32 << g.order()) - 1
    }

    pub fn independent(g: &Graph, s: u32) -> bool {
        let adj = masks(g);
        (0..g.order()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
    }

    /// `(γ, i, α)`.
    pub fn values(g: &Graph) -> (usize, usize, usize) {
        let n = g.order();
        assert!(n <= 20);
        let adj = masks(g);
        let full = (1u32 << n) - 1;
        let (mut gamma, mut idom, mut alpha) = (n, n, 0);
        for s in 0..=full {
            let size = s.count_ones() as usize;
            let mut covered = s;
            let mut indep = true;
            for v in (0..n).filter(|v| s >> v & 1 == 1) {
                covered |= adj[v];
                indep &= adj[v] & s == 0;
            }
            if covered == full {
                gamma = gamma.min(size);
                if indep {
                    idom = idom.min(size);
                }
            }
            if indep {
                alpha = alpha.max(size);
            }
        }
        (gamma, idom, alpha)
    }

    pub fn to_mask(set: impl IntoIterator<Item = usize>) -> u32 {
        set.into_iter().fold(0, |m, v| m | 1 << v)
    }
}

fn single_threaded() -> VerifyOptions {
    VerifyOptions { jobs: 1, timeout: Duration::from_secs(600), ..VerifyOptions::default() }
}

fn sweep(orders: std::ops::RangeInclusive<usize>, k: usize, opts: &VerifyOptions) -> (Vec<Graph>, Vec<Row>) {
    let source = Source::Enumerate { orders, k };
    let graphs = source.load().unwrap();
    let report = verify(&graphs, &source, opts).unwrap();
    (graphs, report.rows)
}

fn counts_by_order(rows: &[Row], orders: impl Iterator<Item = usize>) -> Vec<usize> {
    orders.map(|n| rows.iter().filter(|r| r.n == n).count()).collect()
}

fn no_findings(rows: &[Row]) {
    for r in rows {
        assert!(r.findings.is_empty(), "{}: {:?}", r.graph6, r.findings);
        assert_ne!(r.verdict, RowVerdict::Timeout, "{} timed out", r.graph6);
    }
}

/// 200 pairing-model samples, cycling k over 3, 4, 5 with n up to 20.
fn samples() -> Vec<Graph> {
    let orders = [(3, [6, 8, 10, 12, 14, 16, 18, 20]), (4, [6, 8, 10, 12, 14, 16, 18, 20]), (5, [6, 8, 10, 12, 14, 16, 18, 20])];
    (0..200u64)
        .map(|j| {
            let (k, ns) = orders[(j % 3) as usize];
            let n = ns[(j / 3) as usize % ns.len()];
            sample_random_regular(&SampleSpec { n, k, seed: 1000 + j, max_retries: 1_000_000 }).unwrap()
        })
        .collect()
}

fn check_construction(g: &Graph, k: usize) {
    let gamma = min_dominating_set(g);
    let (set, _) = construct_independent_dominating(g, &gamma.witness, k, Some(&gamma)).unwrap();
    let mask = oracle::to_mask(set.iter());
    assert!(oracle::independent(g, mask) && oracle::dominating(g, mask), "unsound construction");
    let (twice, bound) = (2 * set.len(), k * gamma.value);
    if g.recognize_kkk(k) {
        assert!(twice <= bound);
    } else {
        assert!(twice < bound, "2|I| = {twice} not below k*gamma = {bound}");
    }
}

fn c1() {
    let start = Instant::now();
    for k in 3..=8 {
        let g = Graph::complete_bipartite(k, k);
        let row = analyze(&g, k, &VerifyOptions::default());
        assert_eq!((row.gamma, row.i), (Some(2), Some(k)), "K_{{{k},{k}}}");
        assert_eq!(row.verdict, RowVerdict::Equal);
        assert!(row.is_kkk);
        assert!(row.findings.is_empty(), "{:?}", row.findings);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    for k in 3..=8 {
        let (gamma, idom, _) = oracle::values(&Graph::complete_bipartite(k, k));
        assert_eq!((gamma, idom), (2, k));
    }
}

fn c2() {
    let start = Instant::now();
    let (_, rows) = sweep(4..=12, 3, &single_threaded());
    let elapsed = start.elapsed();
    assert_eq!(counts_by_order(&rows, (4..=12).step_by(2)), vec![1, 2, 5, 19, 85]);
    no_findings(&rows);
    for r in &rows {
        assert!(2 * r.i.unwrap() <= 3 * r.gamma.unwrap(), "{}", r.graph6);
    }
    let equal: Vec<&Row> = rows.iter().filter(|r| r.verdict == RowVerdict::Equal).collect();
    assert_eq!(equal.len(), 1);
    assert!(parse_graph6(&equal[0].graph6).unwrap().recognize_kkk(3));
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
}

fn c3() {
    let start = Instant::now();
    let (_, rows) = sweep(5..=10, 4, &single_threaded());
    let elapsed = start.elapsed();
    assert_eq!(counts_by_order(&rows, 5..=10), vec![1, 1, 2, 6, 16, 59]);
    no_findings(&rows);
    for r in &rows {
        assert!(r.i.unwrap() <= 2 * r.gamma.unwrap(), "{}", r.graph6);
    }
    let equal: Vec<&Row> = rows.iter().filter(|r| r.verdict == RowVerdict::Equal).collect();
    assert_eq!(equal.len(), 1);
    assert_eq!(equal[0].n, 8);
    assert!(parse_graph6(&equal[0].graph6).unwrap().recognize_kkk(4));
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
}

fn c4() {
    let (cubic, _) = sweep(4..=12, 3, &single_threaded());
    let (quartic, _) = sweep(5..=10, 4, &single_threaded());
    for g in cubic.iter().chain(&quartic) {
        check_construction(g, g.regularity().unwrap());
    }
    let sampled = samples();
    assert_eq!(sampled.len(), 200);
    for g in &sampled {
        let k = g.regularity().unwrap();
        assert!((3..=5).contains(&k) && g.order() <= 20 && g.is_connected());
        check_construction(g, k);
    }
    let report = verify(&sampled, &Source::File("samples".into()), &VerifyOptions::default()).unwrap();
    no_findings(&report.rows);
}

fn c5() {
    let mut rows = sweep(4..=12, 3, &single_threaded()).1;
    rows.extend(sweep(5..=10, 4, &single_threaded()).1);
    rows.extend(verify(&samples(), &Source::File("samples".into()), &VerifyOptions::default()).unwrap().rows);
    for r in &rows {
        let m = r.rosenberg_size.expect("greedy set recorded");
        assert!(2 * m <= r.n, "{}: |M| = {m}", r.graph6);
        let g = parse_graph6(&r.graph6).unwrap();
        let w = regdom_core::proof::rosenberg_witness(&g).unwrap();
        let mask = oracle::to_mask(w.set.iter());
        assert!(oracle::independent(&g, mask) && oracle::dominating(&g, mask));
    }
}

fn c6() {
    let opts = VerifyOptions { exclude_kkk: true, ..single_threaded() };
    let source = Source::Enumerate { orders: 4..=12, k: 3 };
    let report = verify(&source.load().unwrap(), &source, &opts).unwrap();
    assert_eq!(report.summary.excluded_kkk, 1);
    assert_eq!(report.summary.southey_henning_ok, Some(true));
    let m = report.summary.max_ratio_as_pair.clone().expect("rows present");
    assert!(3 * m.i <= 4 * m.gamma, "max ratio {}/{}", m.i, m.gamma);
    assert_eq!(report.exit_code(), 0);
}

fn c7() {
    let mut rows = sweep(4..=12, 3, &single_threaded()).1;
    rows.extend(sweep(5..=10, 4, &single_threaded()).1);
    rows.extend(verify(&samples(), &Source::File("samples".into()), &VerifyOptions::default()).unwrap().rows);
    for r in &rows {
        assert_eq!(r.furuya_ok, Some(true), "{}", r.graph6);
        // floating-point cross-check with a margin
        let (gamma, i, d) = (r.gamma.unwrap() as f64, r.i.unwrap() as f64, r.k as f64);
        assert!(i <= gamma * (d - 2.0 * d.sqrt() + 2.0) + 1e-9);
    }
}

fn c8() {
    let start = Instant::now();
    let expected = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for n in 1..=8 {
        let graphs = all_graphs(n).unwrap();
        assert_eq!(graphs.len(), expected[n - 1], "n={n}");
        for g in &graphs {
            let got = (
                min_dominating_set(g).value,
                min_independent_dominating_set(g).value,
                max_independent_set(g).value,
            );
            assert_eq!(got, oracle::values(g), "{}", regdom_core::encode_graph6(g));
        }
    }
    assert!(start.elapsed() < Duration::from_secs(600));
}

fn c9() {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_regdom"))
            .args(["--json", "--jobs", jobs, "verify", "enumerate", "--n", "4..12", "--k", "3"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let (one, eight) = (run("1"), run("8"));
    assert!(!one.is_empty());
    assert_eq!(one, eight);
    assert_eq!(one, run("1"));
}

fn c10() {
    let petersen = parse_graph6("IheA@GUAo").unwrap();
    assert_eq!(petersen, Graph::petersen());
    let row = analyze(&petersen, 3, &VerifyOptions::default());
    assert_eq!((row.gamma, row.i), (Some(3), Some(3)));
    let (gamma, idom, _) = oracle::values(&petersen);
    assert_eq!((gamma, idom), (3, 3));
    let k4 = parse_graph6("C~").unwrap();
    let row = analyze(&k4, 3, &VerifyOptions::default());
    assert_eq!((row.gamma, row.i), (Some(1), Some(1)));
    assert!(row.findings.is_empty());
}

fn main() {
    let criteria: [(&str, fn()); 10] = [
        ("K_{k,k} extremal values for k = 3..8", c1),
        ("cubic sweep n = 4..12", c2),
        ("4-regular sweep n = 5..10", c3),
        ("constructor soundness and bound", c4),
        ("greedy maximal independent sets satisfy 2|M| <= n", c5),
        ("cubic sweep without K_{3,3} has 3i <= 4gamma", c6),
        ("Furuya bound on all sweeps", c7),
        ("solver oracle equivalence for n <= 8", c8),
        ("byte-identical JSON for --jobs 1 and --jobs 8", c9),
        ("Petersen and K_4 values", c10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", idx + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
