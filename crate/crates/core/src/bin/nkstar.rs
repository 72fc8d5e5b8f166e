use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nkstar::cut::{construct_cut, theorem_cut, CliqueCutMode};
use nkstar::decomposition::{decompose, default_alpha, part_as_star};
use nkstar::harness::{self, ExportFormat, SweepStatus, DEFAULT_SWEEP_MAX_VERTICES};
use nkstar::solver::{self, SearchBudget};
use nkstar::{Error, GraphSpec, PermLabel, StarGraph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "nkstar", version, about = "(n,k)-star graphs and their h-super edge-connectivity")]
struct Cli {
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Time limit per exact search, in milliseconds.
    #[arg(long, global = true, default_value_t = 30 * 60 * 1000)]
    budget_ms: u64,
    /// Worker threads for the exact search.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Pick the construction matching the closed form.
    Auto,
    Sub,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    CsvEdges,
}

#[derive(Subcommand)]
enum Command {
    /// Build S(n,k) and print its canonical JSON.
    Gen { n: usize, k: usize },
    /// Size, degree profile and edge connectivity.
    Info { n: usize, k: usize },
    /// Split along bit t into n copies of S(n-1,k-1).
    Decompose {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Clique-based h-edge-cut.
    Cut {
        n: usize,
        k: usize,
        h: usize,
        /// Clique tail (k-1 symbols); defaults to 2..k.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Classical edge connectivity via max-flow.
    Lambda { n: usize, k: usize },
    /// Exact h-super edge-connectivity.
    LambdaH { n: usize, k: usize, h: usize },
    /// Compare the exact solver with the closed form over a range of (n,k,h).
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_SWEEP_MAX_VERTICES)]
        max_vertices: usize,
        /// Fill the elapsed_ms column (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Check an optimal cut part by part along bit t.
    Lemma28 {
        n: usize,
        k: usize,
        h: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Remove random edge sets one short of the closed-form value.
    FaultTrial {
        n: usize,
        k: usize,
        h: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Write the graph as DOT, JSON or an edge CSV.
    Export {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

fn build(n: usize, k: usize) -> nkstar::Result<StarGraph> {
    StarGraph::build(GraphSpec::new(n, k)?)
}

fn emit(output: Option<&Path>, text: &str) -> nkstar::Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> nkstar::Result<u8> {
    let budget = SearchBudget::with_time_limit(Duration::from_millis(cli.budget_ms));
    let out = cli.output.as_deref();
    match cli.command {
        Command::Gen { n, k } => {
            let mut text = nkstar::io::to_json(&build(n, k)?);
            text.push('\n');
            emit(out, &text)?;
        }
        Command::Info { n, k } => {
            let info = harness::graph_info(&build(n, k)?)?;
            emit(out, &pretty(&serde_json::to_value(info)?))?;
        }
        Command::Decompose { n, k, t } => {
            let g = build(n, k)?;
            let view = decompose(&g, t)?;
            let mut isomorphic = true;
            for i in 1..=n {
                let emb = part_as_star(&g, &view, i)?;
                isomorphic &= emb.is_isomorphism(&g, view.part(i)?);
            }
            let mut value = serde_json::to_value(view.summary(&g))?;
            value["parts_isomorphic"] = json!(isomorphic);
            emit(out, &pretty(&value))?;
        }
        Command::Cut { n, k, h, alpha, mode } => {
            let g = build(n, k)?;
            let alpha = match alpha {
                Some(text) => PermLabel::parse(&text, n)?,
                None => default_alpha(&g)?,
            };
            let cut = match mode {
                Mode::Auto => theorem_cut(&g, h, &alpha)?,
                Mode::Sub => construct_cut(&g, h, &alpha, CliqueCutMode::SubClique)?,
                Mode::Full => construct_cut(&g, h, &alpha, CliqueCutMode::FullClique)?,
            };
            let mut value = cut.witness.to_json(|v| g.name(v));
            value["size"] = json!(cut.witness.value());
            value["mode"] = json!(cut.mode);
            value["hypothesisHolds"] = json!(cut.hypothesis_holds);
            emit(out, &pretty(&value))?;
        }
        Command::Lambda { n, k } => {
            let g = build(n, k)?;
            emit(out, &format!("{}\n", solver::edge_connectivity(g.topology())))?;
        }
        Command::LambdaH { n, k, h } => {
            let g = build(n, k)?;
            let r = solver::lambda_h_exact(&g, h, &budget, cli.threads)?;
            emit(out, &pretty(&r.to_json(|v| g.name(v))))?;
            if !r.exact {
                return Ok(EXIT_INCONCLUSIVE);
            }
        }
        Command::Verify { n_max, max_vertices, timings } => {
            let report = harness::verify_sweep(n_max, max_vertices, &budget, cli.threads, |row| {
                eprintln!(
                    "S({},{}) h={}: theorem {} solver {} {}",
                    row.n,
                    row.k,
                    row.h,
                    row.theorem_value,
                    row.solver_value.map_or("none".into(), |v| v.to_string()),
                    match row.matched {
                        Some(true) => "ok",
                        Some(false) => "MISMATCH",
                        None => "inconclusive",
                    }
                );
            })?;
            emit(out, &report.to_csv(timings))?;
            return Ok(match report.status() {
                SweepStatus::AllMatched => 0,
                SweepStatus::Mismatch => EXIT_MISMATCH,
                SweepStatus::Inconclusive => EXIT_INCONCLUSIVE,
            });
        }
        Command::Lemma28 { n, k, h, t } => {
            let report = harness::lemma28_check(n, k, h, t, &budget, cli.threads)?;
            emit(out, &pretty(&serde_json::to_value(&report)?))?;
            if !report.passed {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::FaultTrial { n, k, h, trials } => {
            let report = harness::fault_trial(n, k, h, trials, cli.seed)?;
            emit(out, &pretty(&serde_json::to_value(&report)?))?;
            if report.disconnections > 0 {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Export { n, k, format } => {
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
                Format::CsvEdges => ExportFormat::CsvEdges,
            };
            let mut text = harness::export(&build(n, k)?, format);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(out, &text)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Io(_) => EXIT_MISMATCH,
                _ => EXIT_USAGE,
            })
        }
    }
}
