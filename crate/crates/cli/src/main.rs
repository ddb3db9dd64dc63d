//! Command-line surface: generating sets, GKM verification, basis
//! certification, pinwheel dimension reports, and degree-sequence lookup.
//!
//! Exit codes: 0 success, 1 verification failure, 2 unsupported input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use splines_core::classical::pinwheel_full_pipeline;
use splines_core::error::{Error, MgsError, SplineError};
use splines_core::io;
use splines_core::mgs_cycle::predicted_degree_sequence;
use splines_core::mgs_general::mgs_dispatch;
use splines_core::oracle::certify_basis;

#[derive(Parser)]
#[command(
    name = "splines",
    about = "Exact generating sets for modules of generalized splines on edge-labeled graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a generating set for the graph and print it.
    Mgs {
        /// Graph JSON file.
        graph: PathBuf,
        /// Write the generating set as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a vertex labeling against the GKM condition.
    Verify {
        /// Graph JSON file.
        graph: PathBuf,
        /// Spline JSON file.
        spline: PathBuf,
    },
    /// Certify a generating set against the brute-force dimension oracle.
    Certify {
        /// Graph JSON file.
        graph: PathBuf,
        /// Generating-set JSON file.
        set: PathBuf,
        /// Largest degree to check.
        #[arg(long, default_value_t = 6)]
        dmax: u32,
    },
    /// Dual-cycle dimension report for a pinwheel triangulation.
    Pinwheel {
        /// Pinwheel JSON file.
        pinwheel: PathBuf,
        /// Largest degree to check.
        #[arg(long, default_value_t = 6)]
        dmax: u32,
    },
    /// Predicted degree sequence for an n-cycle with quadratic labels.
    Degseq {
        /// Number of vertices (at least 3).
        n: usize,
        /// Number of distinct edge-labels (1, 2, or 3 for "three or more").
        labels: usize,
    },
}

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_UNSUPPORTED)
        }
    }
}

fn format_sequence(seq: &[usize]) -> String {
    let inner: Vec<String> = seq.iter().map(|d| d.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Mgs { graph, out } => {
            let g = Arc::new(io::load_graph(&graph)?);
            let set = match mgs_dispatch(&g) {
                Ok(set) => set,
                Err(MgsError::OutOfSupportedClass(msg))
                | Err(MgsError::LabelNotSquaredLinear(msg)) => {
                    eprintln!("out of supported class: {msg}");
                    return Ok(ExitCode::from(EXIT_UNSUPPORTED));
                }
                Err(e) => return Err(e.into()),
            };
            println!("generators: {}", set.len());
            match set.degree_sequence() {
                Ok(seq) => println!("degree sequence: {}", format_sequence(&seq)),
                Err(_) => println!("degree sequence: n/a (non-homogeneous)"),
            }
            for (i, s) in set.elements().iter().enumerate() {
                let entries: Vec<String> = g
                    .vertex_ids()
                    .iter()
                    .enumerate()
                    .map(|(vi, id)| format!("{id}: {}", s.entry(vi)))
                    .collect();
                println!("b{}: [{}]", i + 1, entries.join(", "));
            }
            if let Some(path) = out {
                io::write_json(&path, &io::genset_to_file(&set))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, spline } => {
            let g = Arc::new(io::load_graph(&graph)?);
            let text = std::fs::read_to_string(&spline)?;
            let file: io::SplineFile = serde_json::from_str(&text)?;
            match io::spline_from_file(&file, &g, spline.parent()) {
                Ok(_) => {
                    println!("PASS");
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Mgs(MgsError::Spline(SplineError::GkmViolations(list)))) => {
                    println!("FAIL: {} edge(s) violate the GKM condition", list.len());
                    for v in list {
                        println!(
                            "  edge {}-{}: difference {} not divisible by {}",
                            v.u, v.v, v.difference, v.label
                        );
                    }
                    Ok(ExitCode::from(EXIT_VERIFY_FAIL))
                }
                Err(e) => Err(e),
            }
        }
        Command::Certify { graph, set, dmax } => {
            let g = Arc::new(io::load_graph(&graph)?);
            let set = io::load_genset(&set, &g)?;
            let report = certify_basis(&set, &g, dmax).map_err(MgsError::Spline)?;
            for row in &report.rows {
                println!(
                    "degree {}: predicted {} actual {} {}",
                    row.degree,
                    row.predicted,
                    row.actual,
                    if row.pass { "PASS" } else { "FAIL" }
                );
            }
            if report.pass {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                Ok(ExitCode::from(EXIT_VERIFY_FAIL))
            }
        }
        Command::Pinwheel { pinwheel, dmax } => {
            let p = io::load_pinwheel(&pinwheel)?;
            let report = pinwheel_full_pipeline(&p, dmax)?;
            println!(
                "pinwheel: {} triangles, {}",
                report.n,
                if report.singular {
                    "singular"
                } else {
                    "generic"
                }
            );
            println!(
                "degree sequence: {}",
                format_sequence(&report.degree_sequence)
            );
            for row in &report.rows {
                println!(
                    "degree {}: generators {} formula {} oracle {} {}",
                    row.degree,
                    row.from_generators,
                    row.from_formula,
                    row.from_oracle,
                    if row.pass { "PASS" } else { "FAIL" }
                );
            }
            if report.pass {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                Ok(ExitCode::from(EXIT_VERIFY_FAIL))
            }
        }
        Command::Degseq { n, labels } => {
            if n < 3 || labels == 0 {
                eprintln!("need n >= 3 and labels >= 1");
                return Ok(ExitCode::from(EXIT_UNSUPPORTED));
            }
            println!("{}", format_sequence(&predicted_degree_sequence(n, labels)));
            Ok(ExitCode::SUCCESS)
        }
    }
}
