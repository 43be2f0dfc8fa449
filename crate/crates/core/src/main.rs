use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use fslab::explorer::{Bijection, FsGraph, DEFAULT_MAX_VERTICES};
use fslab::graph::Graph;
use fslab::graph6::{encode_graph6, parse_graph6};
use fslab::harness::{
    all_graphs, brute_kappa, enumerate_connected_graphs, run_sweep, scan_exception_spiders,
    OutputFormat, SweepConfig,
};
use fslab::oracle::{exceptional_k, kappa, predict, predict_two_components};
use fslab::partition::Partition;
use fslab::special;
use fslab::structure::classify;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fslab",
    version,
    about = "Friends-and-strangers graph lab: oracle predictions vs. brute force"
)]
struct Cli {
    /// Largest n the exhaustive explorer accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural profile of X and the predicted connectivity of FS(X, K_p).
    Predict { graph6: String, partition: String },
    /// Brute-force components of FS(X, K_p).
    Brute { graph6: String, partition: String },
    /// Prediction and brute force side by side; exit 1 on disagreement.
    Verify { graph6: String, partition: String },
    /// Least k with FS(X, B_{k,n-k}) connected.
    Kappa {
        graph6: String,
        /// Also compute it by brute force and compare.
        #[arg(long)]
        brute: bool,
    },
    /// Prediction and brute force for FS(X, K_{k,n-k}) having exactly two components.
    TwoComponents { graph6: String, k: usize },
    /// Shortest friendly-swap sequence between two bijections.
    Path {
        graph6: String,
        partition: String,
        from: String,
        to: String,
    },
    /// Whether the values on u and v can be exchanged from sigma.
    Exchangeable {
        graph6: String,
        partition: String,
        u: usize,
        v: usize,
        sigma: String,
    },
    /// Run a sweep described by a JSON or key-value config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Record per-instance runtimes (reports stop being reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print one graph6 line per isomorphism class on n vertices.
    Enumerate {
        n: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Brute-force the exceptional spiders against every admissible K_{k,n-k}.
    Exceptions,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn runtime<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Runtime(e.to_string())
}

fn parse_graph(text: &str) -> Result<Graph, CliError> {
    parse_graph6(text).map_err(|e| usage(format!("graph6 {text:?}: {e}")))
}

fn parse_partition(text: &str, n: usize) -> Result<Partition, CliError> {
    let p: Partition = text.parse().map_err(usage)?;
    if p.n() != n {
        return Err(usage(format!(
            "partition {p} sums to {} but X has {n} vertices",
            p.n()
        )));
    }
    Ok(p)
}

fn parse_bijection(text: &str, n: usize) -> Result<Bijection, CliError> {
    let b: Bijection = text.parse().map_err(usage)?;
    if b.len() != n {
        return Err(usage(format!(
            "bijection {text:?} has length {}, expected {n}",
            b.len()
        )));
    }
    Ok(b)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let cap = cli.max_vertices;
    match cli.command {
        Command::Predict { graph6, partition } => {
            let x = parse_graph(&graph6)?;
            let p = parse_partition(&partition, x.n())?;
            let prediction = predict(&x, &p).map_err(usage)?;
            print_json(
                &json!({ "graph6": graph6, "partition": p.to_string(), "profile": classify(&x), "prediction": prediction }),
            );
            Ok(0)
        }
        Command::Brute { graph6, partition } => {
            let x = parse_graph(&graph6)?;
            let p = parse_partition(&partition, x.n())?;
            let y = special::complete_multipartite(&p).map_err(usage)?;
            let summary = FsGraph::with_cap(&x, &y, cap).map_err(runtime)?.summary();
            print_json(&serde_json::to_value(summary).expect("summary serializes"));
            Ok(0)
        }
        Command::Verify { graph6, partition } => {
            let x = parse_graph(&graph6)?;
            let p = parse_partition(&partition, x.n())?;
            let prediction = predict(&x, &p).map_err(usage)?;
            let y = special::complete_multipartite(&p).map_err(usage)?;
            let count = FsGraph::with_cap(&x, &y, cap)
                .map_err(runtime)?
                .components()
                .count();
            let matched = prediction.agrees_with(count);
            print_json(
                &json!({ "graph6": graph6, "partition": p.to_string(), "prediction": prediction, "brute_count": count, "matched": matched }),
            );
            Ok(if matched { 0 } else { EXIT_MISMATCH })
        }
        Command::Kappa { graph6, brute } => {
            let x = parse_graph(&graph6)?;
            let predicted = kappa(&x).map_err(usage)?;
            if !brute {
                println!("{predicted}");
                return Ok(0);
            }
            let observed = brute_kappa(&x, cap).map_err(runtime)?;
            let matched = observed == predicted;
            print_json(
                &json!({ "graph6": graph6, "kappa": predicted.to_string(), "kappa_brute": observed.to_string(), "matched": matched }),
            );
            Ok(if matched { 0 } else { EXIT_MISMATCH })
        }
        Command::TwoComponents { graph6, k } => {
            let x = parse_graph(&graph6)?;
            let n = x.n();
            if k < 2 || 2 * k > n {
                return Err(usage(format!(
                    "k = {k} is not admissible for n = {n} (need n >= 2k >= 4)"
                )));
            }
            let prediction = predict_two_components(&x, k);
            let y = special::complete_bipartite(k, n).map_err(usage)?;
            let count = FsGraph::with_cap(&x, &y, cap)
                .map_err(runtime)?
                .components()
                .count();
            let matched = prediction.agrees_with(count);
            print_json(
                &json!({ "graph6": graph6, "k": k, "prediction": prediction, "brute_count": count, "matched": matched }),
            );
            Ok(if matched { 0 } else { EXIT_MISMATCH })
        }
        Command::Path {
            graph6,
            partition,
            from,
            to,
        } => {
            let x = parse_graph(&graph6)?;
            let p = parse_partition(&partition, x.n())?;
            let sigma = parse_bijection(&from, x.n())?;
            let tau = parse_bijection(&to, x.n())?;
            let y = special::complete_multipartite(&p).map_err(usage)?;
            let fs = FsGraph::with_cap(&x, &y, cap).map_err(runtime)?;
            let path = fs.swap_path(&sigma, &tau).map_err(runtime)?;
            print_json(
                &json!({ "from": sigma, "to": tau, "reachable": path.is_some(), "swaps": path.map(|s| s.edges) }),
            );
            Ok(0)
        }
        Command::Exchangeable {
            graph6,
            partition,
            u,
            v,
            sigma,
        } => {
            let x = parse_graph(&graph6)?;
            let p = parse_partition(&partition, x.n())?;
            let sigma = parse_bijection(&sigma, x.n())?;
            let y = special::complete_multipartite(&p).map_err(usage)?;
            let fs = FsGraph::with_cap(&x, &y, cap).map_err(runtime)?;
            let answer = fs.exchangeable(u, v, &sigma).map_err(usage)?;
            println!("{answer}");
            Ok(0)
        }
        Command::Sweep {
            config,
            jobs,
            output,
            format,
            timings,
        } => {
            let mut cfg = SweepConfig::from_file(&config).map_err(usage)?;
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            if let Some(o) = output {
                cfg.output = Some(o);
            }
            if let Some(f) = format {
                cfg.format = match f {
                    Format::Jsonl => OutputFormat::Jsonl,
                    Format::Csv => OutputFormat::Csv,
                };
            }
            cfg.timings |= timings;
            if cli.max_vertices != DEFAULT_MAX_VERTICES {
                cfg.max_vertices = cli.max_vertices;
            }
            cfg.validate().map_err(usage)?;
            let report = run_sweep(&cfg).map_err(runtime)?;
            let sink: Box<dyn Write> = match &cfg.output {
                Some(path) => Box::new(
                    File::create(path).map_err(|e| runtime(format!("{}: {e}", path.display())))?,
                ),
                None => Box::new(io::stdout().lock()),
            };
            let mut sink = BufWriter::new(sink);
            match cfg.format {
                OutputFormat::Jsonl => report.write_jsonl(&mut sink).map_err(runtime)?,
                OutputFormat::Csv => report.write_csv(&mut sink).map_err(runtime)?,
            }
            sink.flush().map_err(runtime)?;
            let s = &report.summary;
            eprintln!(
                "{} instances, {} matches, {} mismatches, {} errors, {} exception hits",
                s.instances, s.matches, s.mismatches, s.errors, s.exception_hits
            );
            Ok(if report.passed() { 0 } else { EXIT_MISMATCH })
        }
        Command::Enumerate { n, all } => {
            let graphs = if all {
                all_graphs(n)
            } else {
                enumerate_connected_graphs(n)
            }
            .map_err(usage)?;
            let mut out = BufWriter::new(io::stdout().lock());
            for g in &graphs {
                writeln!(out, "{}", encode_graph6(g)).map_err(runtime)?;
            }
            out.flush().map_err(runtime)?;
            Ok(0)
        }
        Command::Exceptions => {
            let mut consistent = true;
            for scan in scan_exception_spiders() {
                let expected = exceptional_k(scan.spider);
                consistent &= scan.exceptional == [expected];
                print_json(&json!({
                    "spider": scan.spider,
                    "legs": scan.spider.legs(),
                    "graph6": encode_graph6(&scan.spider.graph()),
                    "counts": scan.counts,
                    "exceptional_k": scan.exceptional,
                    "tabulated_k": expected,
                }));
            }
            Ok(if consistent { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let kind = match e {
                CliError::Usage(_) => "error",
                CliError::Runtime(_) => "failed",
            };
            eprintln!("fslab: {kind}: {e}");
            // Bad input and failed runs both exit 2; 1 is reserved for a
            // completed check that found a mismatch.
            ExitCode::from(EXIT_USAGE)
        }
    }
}
