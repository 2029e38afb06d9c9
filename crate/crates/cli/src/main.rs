//! `twistlink`: analyse PD diagrams, build augmented links and surface
//! reports, and run the graph lemma campaigns.
//!
//! Exit codes: 0 when every check passes, 1 when an analysis finds a
//! violation or counterexample, 2 for usage and IO errors.

mod diagram;
mod input;
mod ledger;
mod lemmas;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twistlink_core::EmbeddedGraph;

use ledger::RunLedger;

#[derive(Parser)]
#[command(
    name = "twistlink",
    version,
    about = "Twist regions, augmented links and graph lemma campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Append a run record to this NDJSON ledger.
    #[arg(long, value_name = "PATH")]
    ledger: Option<PathBuf>,
}

#[derive(Args)]
struct AugmentArgs {
    /// Augmentation threshold N_tw.
    #[arg(long)]
    ntw: usize,
    /// Crossings kept per encircled region: 0 or 2.
    #[arg(long, default_value_t = 2, value_parser = parse_i)]
    i: u8,
    /// Only add circles meeting the blue surface.
    #[arg(long)]
    blue_only: bool,
}

fn parse_i(s: &str) -> Result<u8, String> {
    match s {
        "0" => Ok(0),
        "2" => Ok(2),
        _ => Err("must be 0 or 2".into()),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a PD file or a .jsonl corpus.
    Parse {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Alternation, primality, twist-reducedness and twist regions.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Add crossing circles, reduce, and validate the result.
    Augment {
        file: PathBuf,
        #[command(flatten)]
        aug: AugmentArgs,
        #[command(flatten)]
        out: Output,
    },
    /// One surface report.
    Surfaces {
        file: PathBuf,
        #[arg(long, value_enum)]
        color: SurfaceColor,
        #[arg(long, value_enum, default_value = "checkerboard")]
        stage: SurfaceStage,
        #[arg(long)]
        ntw: Option<usize>,
        #[arg(long, default_value_t = 2, value_parser = parse_i)]
        i: u8,
        #[arg(long)]
        blue_only: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Lemma campaigns over enumerated graphs.
    Lemmas {
        #[command(subcommand)]
        command: LemmasCommand,
    },
    /// DOT of a diagram's face graph, or of a graph given as JSON.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LemmasCommand {
    /// Check a lemma on every enumerated graph meeting its hypotheses.
    Verify {
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        #[arg(long)]
        max_edges: usize,
        #[arg(long)]
        rtw: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// List or count graphs up to isomorphism.
    Enumerate {
        #[arg(long, value_enum)]
        context: ContextArg,
        #[arg(long)]
        max_edges: usize,
        /// Smallest degree allowed for faces inside the surface.
        #[arg(long, default_value_t = 0)]
        min_face_degree: usize,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceColor {
    Blue,
    Red,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceStage {
    Checkerboard,
    Punctured,
    Twisted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    Sphere,
    Disk,
    Torus,
    BigonBound,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ContextArg {
    Sphere,
    Disk,
    Torus,
}

fn write_json(value: &Value, path: Option<&Path>) -> Result<String> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match path {
        Some(p) => std::fs::write(p, &text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(text)
}

/// Run a per-diagram command over a file or corpus.
fn each_diagram(
    command: &str,
    file: &Path,
    parameters: Value,
    out: &Output,
    run: impl Fn(&twistlink_core::PlanarDiagram) -> Result<diagram::Report>,
) -> Result<bool> {
    let start = Instant::now();
    let bytes = input::read(file)?;
    let entries = input::entries(file, &bytes)?;
    let mut reports = Vec::new();
    let mut violations = 0;
    for e in &entries {
        let d = input::diagram(file, e)?;
        let mut r = run(&d)?;
        violations += r.violations as usize;
        r.value["name"] = json!(e.name);
        reports.push(r.value);
    }
    let value = if input::is_corpus(file) {
        json!({ "diagrams": reports, "count": entries.len(), "violations": violations })
    } else {
        reports.pop().unwrap()
    };
    let text = write_json(&value, out.json.as_deref())?;
    if let Some(path) = &out.ledger {
        ledger::append(
            path,
            &RunLedger {
                command: command.into(),
                input_digest: ledger::digest(&bytes),
                parameters,
                result_digest: ledger::digest(text.as_bytes()),
                counts: json!({ "diagrams": entries.len(), "violations": violations }),
                runtime_ms: start.elapsed().as_millis(),
            },
        )?;
    }
    Ok(violations > 0)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Parse { file, out } => each_diagram("parse", &file, json!({}), &out, |d| Ok(diagram::parse(d))),
        Command::Analyze { file, out } => each_diagram("analyze", &file, json!({}), &out, |d| Ok(diagram::analyze(d))),
        Command::Augment { file, aug, out } => {
            let params = json!({ "n_tw": aug.ntw, "i": aug.i, "blue_only": aug.blue_only });
            each_diagram("augment", &file, params, &out, |d| {
                Ok(diagram::augment_report(d, aug.ntw, aug.i, aug.blue_only))
            })
        }
        Command::Surfaces {
            file,
            color,
            stage,
            ntw,
            i,
            blue_only,
            out,
        } => {
            let params = json!({ "n_tw": ntw, "i": i, "blue_only": blue_only });
            let aug = ntw.map(|n| (n, i, blue_only));
            each_diagram("surfaces", &file, params, &out, |d| {
                diagram::surface_report(d, stage, color, aug)
            })
        }
        Command::ExportDot { file, out } => {
            let bytes = input::read(&file)?;
            let dot = match serde_json::from_slice::<Value>(&bytes) {
                Ok(v) if v.get("pairing").is_some() => EmbeddedGraph::from_json(&v)?.to_dot(),
                _ => {
                    let entries = input::entries(&file, &bytes)?;
                    input::diagram(&file, &entries[0])?.face_graph_dot()
                }
            };
            match out {
                Some(p) => std::fs::write(&p, dot).with_context(|| format!("cannot write {}", p.display()))?,
                None => print!("{dot}"),
            }
            Ok(false)
        }
        Command::Lemmas {
            command:
                LemmasCommand::Verify {
                    lemma,
                    max_edges,
                    rtw,
                    out,
                },
        } => {
            let lemma = lemmas::lemma(lemma, rtw)?;
            let c = lemmas::verify(lemma, max_edges)?;
            let text = write_json(&c.result, out.json.as_deref())?;
            if let Some(path) = &out.ledger {
                let parameters = json!({ "lemma": lemma, "max_edges": max_edges });
                ledger::append(
                    path,
                    &RunLedger {
                        command: "lemmas verify".into(),
                        input_digest: ledger::digest(ledger::canonical(&parameters).as_bytes()),
                        parameters,
                        result_digest: ledger::digest(text.as_bytes()),
                        counts: json!({ "by_edges": c.counts, "counterexamples": c.counterexamples }),
                        runtime_ms: c.runtime_ms,
                    },
                )?;
            }
            Ok(c.counterexamples > 0)
        }
        Command::Lemmas {
            command:
                LemmasCommand::Enumerate {
                    context,
                    max_edges,
                    min_face_degree,
                    count_only,
                    out,
                },
        } => {
            let start = Instant::now();
            let value = lemmas::enumerate(lemmas::context(context), max_edges, min_face_degree, count_only)?;
            let text = write_json(&value, out.json.as_deref())?;
            if let Some(path) = &out.ledger {
                let parameters = json!({
                    "context": value["context"],
                    "max_edges": max_edges,
                    "min_face_degree": min_face_degree,
                    "count_only": count_only,
                });
                ledger::append(
                    path,
                    &RunLedger {
                        command: "lemmas enumerate".into(),
                        input_digest: ledger::digest(ledger::canonical(&parameters).as_bytes()),
                        parameters,
                        result_digest: ledger::digest(text.as_bytes()),
                        counts: json!({ "by_edges": value["counts_by_edges"] }),
                        runtime_ms: start.elapsed().as_millis(),
                    },
                )?;
            }
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
