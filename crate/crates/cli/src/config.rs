//! Optional TOML recipe mirroring the command-line flags.
//!
//! ```toml
//! jobs = 4
//! timeout_secs = 10
//! exclude_kkk = true
//! json = true
//! out = "report.json"
//! csv = "rows.csv"
//! timings = false
//! ```
//!
//! Flags given on the command line take precedence.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub jobs: Option<usize>,
    pub timeout_secs: Option<u64>,
    pub exclude_kkk: Option<bool>,
    pub json: Option<bool>,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub timings: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        FileConfig::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<FileConfig> {
        Ok(toml::from_str(text)?)
    }
}
