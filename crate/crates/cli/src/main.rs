use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use regdom_cli::config::FileConfig;
use regdom_cli::pipeline::require_connected_regular;
use regdom_cli::{parse_orders, verify, Source, VerifyOptions};
use regdom_core::generate::{self, EnumSpec};
use regdom_core::proof::construct_independent_dominating;
use regdom_core::solve::{min_dominating_set_until, min_independent_dominating_set_until};
use regdom_core::{encode_graph6, parse_graph6, read_graph6, Graph};
use serde_json::json;

/// Exact domination and independent domination for regular graphs.
#[derive(Parser, Debug)]
#[command(name = "regdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main output to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Write report rows as CSV to this file (verify only).
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Worker threads for corpus runs (default: one per processor).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Per-graph time budget in seconds.
    #[arg(long, global = true, value_name = "SECS")]
    timeout_secs: Option<u64>,
    /// Drop K_{k,k} rows and check 3i <= 4gamma on cubic graphs.
    #[arg(long, global = true)]
    exclude_kkk: bool,
    /// Record per-row runtimes (makes reports run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    /// TOML recipe supplying defaults for the flags above.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute gamma(G) and i(G) with witnesses.
    Solve {
        /// A graph6 line, or a file with one graph6 line per graph.
        input: String,
    },
    /// Convert a minimum dominating set into an independent dominating set
    /// and print the trace as JSON.
    Construct {
        /// A graph6 line, or a file with one graph6 line per graph.
        input: String,
    },
    /// Run the full pipeline over a corpus and report.
    Verify {
        #[command(subcommand)]
        source: SourceArg,
    },
    /// Enumerate connected k-regular graphs to graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SourceArg {
    /// All connected k-regular graphs for each order in a range like 4..12.
    Enumerate {
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: usize,
    },
    /// Graphs from a graph6 file.
    File { path: PathBuf },
    /// Pairing-model samples with seeds seed, seed+1, ...
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

/// Flags merged with the optional config file.
struct Settings {
    json: bool,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
    jobs: usize,
    timeout: Duration,
    exclude_kkk: bool,
    timings: bool,
}

impl Settings {
    fn resolve(flags: Flags) -> Result<Settings> {
        let file = match &flags.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        Ok(Settings {
            json: flags.json || file.json.unwrap_or(false),
            out: flags.out.or(file.out),
            csv: flags.csv.or(file.csv),
            jobs: flags.jobs.or(file.jobs).unwrap_or(0),
            timeout: Duration::from_secs(flags.timeout_secs.or(file.timeout_secs).unwrap_or(10)),
            exclude_kkk: flags.exclude_kkk || file.exclude_kkk.unwrap_or(false),
            timings: flags.timings || file.timings.unwrap_or(false),
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn read_input(input: &str) -> Result<Vec<Graph>> {
    let path = Path::new(input);
    if path.is_file() {
        let file = File::open(path).with_context(|| format!("opening {input}"))?;
        Ok(read_graph6(BufReader::new(file)).with_context(|| format!("reading {input}"))?)
    } else {
        Ok(vec![parse_graph6(input).with_context(|| format!("parsing {input:?}"))?])
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json value");
    text.push('\n');
    text
}

fn cmd_solve(input: &str, settings: &Settings) -> Result<i32> {
    let graphs = read_input(input)?;
    let mut entries = Vec::new();
    let mut text = String::new();
    for g in &graphs {
        let deadline = Some(Instant::now() + settings.timeout);
        let gamma = min_dominating_set_until(g, deadline)?;
        let idom = min_independent_dominating_set_until(g, deadline)?;
        let g6 = encode_graph6(g);
        text.push_str(&format!(
            "{g6} n={} gamma={} {:?} i={} {:?}\n",
            g.order(),
            gamma.value,
            gamma.witness.to_vec(),
            idom.value,
            idom.witness.to_vec()
        ));
        entries.push(json!({ "graph6": g6, "n": g.order(), "gamma": gamma, "i": idom }));
    }
    if settings.json {
        settings.emit(&pretty(&serde_json::Value::Array(entries)))?;
    } else {
        settings.emit(&text)?;
    }
    Ok(0)
}

fn cmd_construct(input: &str, settings: &Settings) -> Result<i32> {
    let graphs = read_input(input)?;
    let mut entries = Vec::new();
    for g in &graphs {
        let k = require_connected_regular(g)?;
        let gamma = min_dominating_set_until(g, Some(Instant::now() + settings.timeout))?;
        let (_, trace) = construct_independent_dominating(g, &gamma.witness, k, Some(&gamma))?;
        entries.push(json!({ "graph6": encode_graph6(g), "trace": trace }));
    }
    settings.emit(&pretty(&serde_json::Value::Array(entries)))?;
    Ok(0)
}

fn cmd_verify(source: SourceArg, settings: &Settings) -> Result<i32> {
    let source = match source {
        SourceArg::Enumerate { n, k } => Source::Enumerate { orders: parse_orders(&n)?, k },
        SourceArg::File { path } => Source::File(path),
        SourceArg::Sample { n, k, seed, count } => Source::Sample { n, k, seed, count },
    };
    let graphs = source.load()?;
    let opts = VerifyOptions {
        jobs: settings.jobs,
        timeout: settings.timeout,
        exclude_kkk: settings.exclude_kkk,
        timings: settings.timings,
    };
    let report = verify(&graphs, &source, &opts)?;
    if let Some(path) = &settings.csv {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report.write_csv(file)?;
    }
    if settings.json || settings.out.is_some() {
        settings.emit(&report.to_json())?;
        if !settings.json {
            eprint!("{}", report.to_text());
        }
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.exit_code())
}

fn cmd_gen(n: usize, k: usize, settings: &Settings) -> Result<i32> {
    let graphs = generate::enumerate_connected_regular(&EnumSpec::connected(n, k))?;
    match &settings.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let count = generate::write_graph6(io::BufWriter::new(file), &graphs)?;
            println!("{count}");
        }
        None => {
            let count = generate::write_graph6(io::stdout().lock(), &graphs)?;
            eprintln!("{count}");
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32> {
    let settings = Settings::resolve(cli.flags)?;
    match cli.command {
        Command::Solve { input } => cmd_solve(&input, &settings),
        Command::Construct { input } => cmd_construct(&input, &settings),
        Command::Verify { source } => cmd_verify(source, &settings),
        Command::Gen { n, k } => cmd_gen(n, k, &settings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
