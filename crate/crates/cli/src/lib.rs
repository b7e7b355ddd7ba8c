//! Corpus verification front end: runs the domination pipeline over
//! enumerated, sampled or file-supplied regular graphs and assembles
//! deterministic reports.

pub mod config;
pub mod pipeline;
pub mod report;

pub use pipeline::{analyze, parse_orders, verify, Source, VerifyOptions};
pub use report::{RatioReport, Row, RowVerdict, Summary};
