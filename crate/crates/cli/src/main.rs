use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use permutable::profinite::{SystemFile, SystemSpec};
use permutable::report::{analyze_text, catalog_report, profinite_report, AnalysisReport};
use permutable::{Caps, Error};

const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Decide whether finite groups have permutable complements for every
/// subgroup, and inspect truncated profinite systems.
#[derive(Debug, Parser)]
#[command(name = "permutable", version)]
struct Cli {
    /// Largest group order built from a description.
    #[arg(long, global = true, env = "PERMUTABLE_MAX_ORDER")]
    max_order: Option<usize>,
    /// Largest number of subgroups a lattice may hold.
    #[arg(long, global = true)]
    max_subgroups: Option<usize>,
    /// Print the JSON report instead of `path: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one group description file.
    Analyze {
        file: PathBuf,
        /// Also run the (expensive) SC-group check.
        #[arg(long)]
        sc: bool,
    },
    /// Analyze an inverse system file or a built-in family.
    Profinite {
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        file: Option<PathBuf>,
        /// pq-power, prime-column or elementary.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Truncation depth; defaults to 3 for --family.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Run the invariant suite over the bundled catalog.
    Catalog,
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, caps: &Caps) -> Result<AnalysisReport, Error> {
    match &cli.command {
        Command::Analyze { file, sc } => analyze_text(&read(file)?, caps, *sc),
        Command::Profinite { file: Some(path), depth, .. } => {
            let text = read(path)?;
            let mut sys = SystemFile::parse(&text)?;
            if let Some(d) = depth {
                match &mut sys.spec {
                    SystemSpec::Family { depth, .. } => *depth = *d,
                    SystemSpec::Explicit { .. } => {
                        return Err(Error::BadParams("--depth only applies to family systems".into()))
                    }
                }
            }
            profinite_report(&sys, text.as_bytes(), caps)
        }
        Command::Profinite { file: None, family, p, q, depth } => {
            let spec = SystemSpec::Family {
                family: family.clone().expect("clap requires a file or --family"),
                p: *p,
                q: *q,
                depth: depth.unwrap_or(3),
            };
            let input = serde_json::to_vec(&spec).expect("spec serializes");
            profinite_report(&SystemFile { name: None, spec, subgroup_generators: None }, &input, caps)
        }
        Command::Catalog => catalog_report(caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Some(n) = cli.max_order {
        caps.max_order = n;
    }
    if let Some(n) = cli.max_subgroups {
        caps.max_subgroups = n;
    }
    let start = Instant::now();
    match run(&cli, &caps) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { EXIT_CAP } else { EXIT_INPUT })
        }
    }
}
