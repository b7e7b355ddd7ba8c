//! Per-graph pipeline and corpus runs.

use std::fs::File;
use std::io::BufReader;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use regdom_core::generate::{self, EnumSpec, SampleSpec, RNG_ALGORITHM};
use regdom_core::proof::{self, ratio_compare, Verdict};
use regdom_core::solve::{
    min_dominating_set_until, min_independent_dominating_set_until, SolveError,
};
use regdom_core::{encode_graph6, read_graph6, Graph};

use crate::report::{RatioReport, Row, RowVerdict, Summary};

/// Retry budget for each pairing-model sample.
pub const SAMPLE_MAX_RETRIES: usize = 1_000_000;

/// Where a corpus comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Enumerate { orders: RangeInclusive<usize>, k: usize },
    File(PathBuf),
    /// `count` samples with seeds `seed, seed + 1, ...`.
    Sample { n: usize, k: usize, seed: u64, count: usize },
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Enumerate { orders, k } => {
                format!("enumerate n={}..{} k={k}", orders.start(), orders.end())
            }
            Source::File(path) => format!("file {}", path.display()),
            Source::Sample { n, k, seed, count } => {
                format!("sample n={n} k={k} seed={seed} count={count}")
            }
        }
    }

    /// Materializes the corpus in its deterministic order.
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            Source::Enumerate { orders, k } => {
                let single = orders.start() == orders.end();
                let mut graphs = Vec::new();
                for n in orders.clone() {
                    if !single && (n * k % 2 == 1 || *k >= n) {
                        continue;
                    }
                    graphs.extend(
                        generate::enumerate_connected_regular(&EnumSpec::connected(n, *k))
                            .with_context(|| format!("enumerating n={n} k={k}"))?,
                    );
                }
                Ok(graphs)
            }
            Source::File(path) => {
                let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
                Ok(read_graph6(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?)
            }
            Source::Sample { n, k, seed, count } => (0..*count as u64)
                .map(|j| {
                    let spec = SampleSpec {
                        n: *n,
                        k: *k,
                        seed: seed.wrapping_add(j),
                        max_retries: SAMPLE_MAX_RETRIES,
                    };
                    generate::sample_random_regular(&spec)
                        .with_context(|| format!("sampling n={n} k={k} seed={}", spec.seed))
                })
                .collect(),
        }
    }
}

/// Parses `"6"` or `"4..12"` (inclusive).
pub fn parse_orders(text: &str) -> Result<RangeInclusive<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("bad order {s:?}"));
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                bail!("empty order range {text}");
            }
            Ok(lo..=hi)
        }
        None => {
            let n = parse(text)?;
            Ok(n..=n)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; 0 means one per processor.
    pub jobs: usize,
    pub timeout: Duration,
    pub exclude_kkk: bool,
    /// Record `runtime_micros` per row. Off by default so reports stay
    /// byte-identical between runs.
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 0, timeout: Duration::from_secs(10), exclude_kkk: false, timings: false }
    }
}

/// Checks that a graph is a valid pipeline input.
pub fn require_connected_regular(g: &Graph) -> Result<usize> {
    let Some(k) = g.regularity() else {
        bail!("graph {} is not regular", encode_graph6(g));
    };
    if k < 3 {
        bail!("graph {} has degree {k} < 3", encode_graph6(g));
    }
    if !g.is_connected() {
        bail!("graph {} is not connected", encode_graph6(g));
    }
    Ok(k)
}

/// Runs the full pipeline on one connected `k`-regular graph.
pub fn analyze(g: &Graph, k: usize, opts: &VerifyOptions) -> Row {
    let start = Instant::now();
    let deadline = start + opts.timeout;
    let mut row = Row {
        graph6: encode_graph6(g),
        n: g.order(),
        k,
        gamma: None,
        i: None,
        two_i: None,
        k_gamma: None,
        verdict: RowVerdict::Timeout,
        is_kkk: g.recognize_kkk(k),
        construction_size: None,
        case_taken: None,
        rosenberg_size: None,
        furuya_ok: None,
        findings: Vec::new(),
        runtime_micros: None,
    };

    let certs = min_dominating_set_until(g, Some(deadline))
        .and_then(|gamma| Ok((gamma, min_independent_dominating_set_until(g, Some(deadline))?)));
    let (gamma, idom) = match certs {
        Ok(pair) => pair,
        Err(SolveError::Timeout { .. }) => {
            row.runtime_micros = opts.timings.then(|| start.elapsed().as_micros() as u64);
            return row;
        }
        Err(e) => unreachable!("solvers only fail on timeout: {e}"),
    };
    let findings = &mut row.findings;
    for cert in [&gamma, &idom] {
        if !cert.validate(g) {
            findings.push(format!("{:?} certificate does not validate", cert.kind));
        }
    }
    if idom.value < gamma.value {
        findings.push("i < gamma".into());
    }
    row.gamma = Some(gamma.value);
    row.i = Some(idom.value);
    row.two_i = Some(2 * idom.value);
    row.k_gamma = Some(k * gamma.value);
    let verdict = ratio_compare(gamma.value, idom.value, k);
    row.verdict = verdict.into();
    if verdict == Verdict::Violation {
        findings.push("2i > k*gamma".into());
    }

    match proof::extremal_audit(g, k, &gamma, &idom) {
        Ok(audit) => {
            if let Some(v) = audit.violation() {
                findings.push(format!("extremal audit: {v}"));
            }
        }
        Err(e) => findings.push(format!("extremal audit failed: {e}")),
    }

    match proof::construct_independent_dominating(g, &gamma.witness, k, Some(&gamma)) {
        Ok((set, trace)) => {
            row.construction_size = Some(set.len());
            row.case_taken = Some(trace.case_taken);
            let twice = 2 * set.len();
            let bound = k * gamma.value;
            if twice > bound || (twice == bound && !row.is_kkk) {
                findings.push(format!("construction size {} breaks 2|I| < k*gamma", set.len()));
            }
            if set.len() < idom.value {
                findings.push("construction smaller than i(G)".into());
            }
        }
        Err(e) => findings.push(format!("construction failed: {e}")),
    }

    match proof::rosenberg_witness(g) {
        Ok(w) => {
            row.rosenberg_size = Some(w.set.len());
            if !w.holds {
                findings.push("greedy maximal independent set exceeds n/2".into());
            }
        }
        Err(e) => findings.push(format!("rosenberg witness failed: {e}")),
    }

    let furuya = proof::furuya_check(gamma.value, idom.value, g.max_degree());
    row.furuya_ok = Some(furuya);
    if !furuya {
        findings.push("i exceeds gamma*(D - 2*sqrt(D) + 2)".into());
    }
    if opts.exclude_kkk && k == 3 && !proof::southey_henning_check(gamma.value, idom.value) {
        findings.push("3i > 4*gamma on a cubic graph other than K_{3,3}".into());
    }

    row.runtime_micros = opts.timings.then(|| start.elapsed().as_micros() as u64);
    row
}

/// Runs the pipeline over a corpus. Rows keep the corpus order whatever the
/// worker count.
pub fn verify(graphs: &[Graph], source: &Source, opts: &VerifyOptions) -> Result<RatioReport> {
    let mut inputs = Vec::with_capacity(graphs.len());
    let mut excluded = 0;
    for g in graphs {
        let k = require_connected_regular(g)?;
        if opts.exclude_kkk && g.recognize_kkk(k) {
            excluded += 1;
            continue;
        }
        inputs.push((g, k));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .context("building worker pool")?;
    let mut indexed: Vec<(usize, Row)> = pool.install(|| {
        inputs
            .par_iter()
            .enumerate()
            .map(|(idx, (g, k))| (idx, analyze(g, *k, opts)))
            .collect()
    });
    indexed.sort_by_key(|(idx, _)| *idx);
    let rows: Vec<Row> = indexed.into_iter().map(|(_, r)| r).collect();

    let summary = Summary::from_rows(&rows, excluded, opts.exclude_kkk);
    Ok(RatioReport {
        source: source.describe(),
        rng_algorithm: matches!(source, Source::Sample { .. }).then(|| RNG_ALGORITHM.to_string()),
        rows,
        summary,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}
