//! Ratio reports: per-graph rows, the summary, JSON and CSV output.

use std::cmp::Ordering;
use std::io::Write;

use regdom_core::proof::{ProofCase, Verdict};
use serde::Serialize;

/// Outcome column of a report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowVerdict {
    Below,
    Equal,
    Violation,
    Timeout,
}

impl From<Verdict> for RowVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Below => RowVerdict::Below,
            Verdict::Equal => RowVerdict::Equal,
            Verdict::Violation => RowVerdict::Violation,
        }
    }
}

impl RowVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RowVerdict::Below => "BELOW",
            RowVerdict::Equal => "EQUAL",
            RowVerdict::Violation => "VIOLATION",
            RowVerdict::Timeout => "TIMEOUT",
        }
    }
}

/// One analysed graph. Value columns are `None` on `TIMEOUT` rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub gamma: Option<usize>,
    pub i: Option<usize>,
    pub two_i: Option<usize>,
    pub k_gamma: Option<usize>,
    pub verdict: RowVerdict,
    pub is_kkk: bool,
    pub construction_size: Option<usize>,
    pub case_taken: Option<ProofCase>,
    /// Size of the greedy maximal independent set checked against `n / 2`.
    pub rosenberg_size: Option<usize>,
    pub furuya_ok: Option<bool>,
    /// Fatal findings; empty on every valid run.
    pub findings: Vec<String>,
    /// Wall-clock time, only recorded when timings are requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_micros: Option<u64>,
}

impl Row {
    pub fn is_violation(&self) -> bool {
        self.verdict == RowVerdict::Violation || !self.findings.is_empty()
    }

    /// `(i, γ)` when both were computed.
    pub fn ratio_pair(&self) -> Option<(usize, usize)> {
        Some((self.i?, self.gamma?))
    }
}

/// The row attaining the largest `i / γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxRatio {
    pub i: usize,
    pub gamma: usize,
    pub graph6: String,
    /// Decimal value for display only; comparisons use the integer pair.
    pub display_only_decimal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub count: usize,
    pub max_ratio_as_pair: Option<MaxRatio>,
    pub equality_count: usize,
    pub violation_count: usize,
    pub timeout_count: usize,
    /// `K_{k,k}` rows removed by `--exclude-kkk`.
    pub excluded_kkk: usize,
    /// Whether every cubic row satisfied `3i <= 4γ`; only set with
    /// `--exclude-kkk`.
    pub southey_henning_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng_algorithm: Option<String>,
    pub rows: Vec<Row>,
    pub summary: Summary,
    pub tool_version: String,
}

/// Compares `a.0 / a.1` with `b.0 / b.1` by cross-multiplication.
pub fn cmp_ratio(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128))
}

impl Summary {
    pub fn from_rows(rows: &[Row], excluded_kkk: usize, exclude_kkk: bool) -> Summary {
        let mut best: Option<&Row> = None;
        for row in rows {
            let Some(pair) = row.ratio_pair() else { continue };
            let replace = match best {
                None => true,
                Some(b) => match cmp_ratio(pair, b.ratio_pair().expect("best has values")) {
                    Ordering::Greater => true,
                    Ordering::Equal => row.graph6 < b.graph6,
                    Ordering::Less => false,
                },
            };
            if replace {
                best = Some(row);
            }
        }
        let southey_henning_ok = exclude_kkk.then(|| {
            rows.iter()
                .filter(|r| r.k == 3)
                .filter_map(Row::ratio_pair)
                .all(|(i, gamma)| regdom_core::proof::southey_henning_check(gamma, i))
        });
        Summary {
            count: rows.len(),
            max_ratio_as_pair: best.map(|r| {
                let (i, gamma) = r.ratio_pair().expect("best has values");
                MaxRatio {
                    i,
                    gamma,
                    graph6: r.graph6.clone(),
                    display_only_decimal: format!("{:.6}", i as f64 / gamma as f64),
                }
            }),
            equality_count: rows.iter().filter(|r| r.verdict == RowVerdict::Equal).count(),
            violation_count: rows.iter().filter(|r| r.is_violation()).count(),
            timeout_count: rows.iter().filter(|r| r.verdict == RowVerdict::Timeout).count(),
            excluded_kkk,
            southey_henning_ok,
        }
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "graph6",
    "n",
    "k",
    "gamma",
    "i",
    "two_i",
    "k_gamma",
    "verdict",
    "is_kkk",
    "construction_size",
    "case_taken",
    "runtime_micros",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl RatioReport {
    /// Process exit status for this report: 0 verified, 2 on any violation.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violation_count > 0 || self.summary.southey_henning_ok == Some(false) {
            2
        } else {
            0
        }
    }

    /// Pretty JSON with sorted object keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            let case = r.case_taken.map(|c| match c {
                ProofCase::Case1Counting => "CASE1_COUNTING",
                ProofCase::Case2Construction => "CASE2_CONSTRUCTION",
            });
            w.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                r.k.to_string(),
                opt(r.gamma),
                opt(r.i),
                opt(r.two_i),
                opt(r.k_gamma),
                r.verdict.as_str().to_string(),
                r.is_kkk.to_string(),
                opt(r.construction_size),
                opt(case),
                opt(r.runtime_micros),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let values = match (r.gamma, r.i) {
                (Some(g), Some(i)) => format!("gamma={g} i={i} 2i={} k*gamma={}", 2 * i, r.k * g),
                _ => "gamma=? i=?".to_string(),
            };
            out.push_str(&format!(
                "{:<24} n={:<3} k={:<2} {values} {}{}\n",
                r.graph6,
                r.n,
                r.k,
                r.verdict.as_str(),
                if r.is_kkk { " K_{k,k}" } else { "" }
            ));
            for f in &r.findings {
                out.push_str(&format!("    FINDING: {f}\n"));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "graphs={} equal={} violations={} timeouts={} excluded_kkk={}\n",
            s.count, s.equality_count, s.violation_count, s.timeout_count, s.excluded_kkk
        ));
        if let Some(m) = &s.max_ratio_as_pair {
            out.push_str(&format!(
                "max ratio i/gamma = {}/{} (~{}, display only) at {}\n",
                m.i, m.gamma, m.display_only_decimal, m.graph6
            ));
        }
        if let Some(ok) = s.southey_henning_ok {
            out.push_str(&format!("3i <= 4gamma on cubic rows: {ok}\n"));
        }
        out
    }
}
