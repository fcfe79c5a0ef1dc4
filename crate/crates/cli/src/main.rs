use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spectough::{
    analyze_line, corpus_lines, hunt, pool, scan_graphs, scan_lines, summarize, write_records,
    AnalyzeOptions, FamilySpec, Format, ScanRecord,
};
use spectough_core::graph::{parse_graph6, write_graph6, Graph};

const EXIT_FINDINGS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Exact toughness, Laplacian spectra and spectral toughness bounds.
#[derive(Parser)]
#[command(name = "spectough", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest order for the exact toughness search.
    #[arg(long, global = true, default_value_t = 14)]
    cap_toughness: usize,
    /// Largest order for the combinatorial oracles.
    #[arg(long, global = true, default_value_t = 16)]
    cap_oracle: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "SPECTOUGH_JOBS")]
    jobs: Option<usize>,
    /// Output format (default: pretty for analyze, jsonl otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for random families; draw i uses seed + i.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Exit 0 even when counterexamples are found.
    #[arg(long, global = true)]
    findings_ok: bool,
    /// Skip the exponential toughness search and the slacks.
    #[arg(long, global = true)]
    no_toughness: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph6 string or every graph of a family.
    Analyze {
        /// graph6 string.
        graph6: Option<String>,
        /// Family spec such as `petersen` or `complete_multipartite:3,1`.
        #[arg(long, conflicts_with = "graph6")]
        family: Option<String>,
        /// Draws per order for random families.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Analyze every line of a graph6 corpus.
    Scan {
        corpus: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Search families or a corpus for bd0 counterexamples and the
    /// non-Hamiltonian eigenratio frontier.
    Hunt {
        /// Family specs; may be repeated.
        #[arg(long)]
        family: Vec<String>,
        /// graph6 corpus to include.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Draws per order for random families.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Maximum number of graphs to analyze.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Write graph6 lines for a family.
    Gen {
        /// Family spec, e.g. `cycle 3..6` or `gnp 8 0.5`.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("spectough: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("spectough: internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    let opts = AnalyzeOptions {
        cap_toughness: g.cap_toughness,
        cap_oracle: g.cap_oracle,
        toughness: !g.no_toughness,
    };
    let workers = pool(g.jobs).map_err(|e| Failure::Internal(e.to_string()))?;
    match cli.command {
        Command::Analyze {
            graph6,
            family,
            count,
        } => {
            let records = match (graph6, family) {
                (Some(text), None) => {
                    let r = analyze_line(0, &text, &opts);
                    if let Some(e) = r.error.as_ref().filter(|_| r.n.is_none()) {
                        return Err(Failure::Usage(format!("cannot parse `{text}`: {e}")));
                    }
                    vec![r]
                }
                (None, Some(spec)) => {
                    let graphs = expand(&spec, count, g.seed)?;
                    scan_graphs(&workers, &graphs, &opts)
                }
                _ => return Err(Failure::Usage("give a graph6 string or --family".into())),
            };
            emit(
                records,
                g.format.unwrap_or(Format::Pretty),
                None,
                g.findings_ok,
            )
        }
        Command::Scan { corpus, output } => {
            let text = std::fs::read_to_string(&corpus)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", corpus.display())))?;
            let records = scan_lines(&workers, &corpus_lines(&text), &opts);
            for (status, n) in summarize(&records) {
                eprintln!("{status}\t{n}");
            }
            emit(records, g.format.unwrap_or_default(), output, g.findings_ok)
        }
        Command::Hunt {
            family,
            input,
            count,
            budget,
            output,
        } => {
            let mut graphs: Vec<Graph> = Vec::new();
            for spec in &family {
                graphs.extend(expand(spec, count, g.seed)?);
            }
            if let Some(path) = input {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                for line in corpus_lines(&text) {
                    match parse_graph6(line) {
                        Ok(graph) => graphs.push(graph),
                        Err(e) => eprintln!("spectough: skipping `{line}`: {e}"),
                    }
                }
            }
            if graphs.is_empty() {
                return Err(Failure::Usage("hunt needs --family or --input".into()));
            }
            let report = hunt(&workers, &graphs, budget, &opts);
            if report.budget_exhausted {
                eprintln!("budget of {} graphs exhausted", report.analyzed);
            }
            let mut out = sink(output.as_ref())?;
            serde_json::to_writer_pretty(&mut out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
            out.flush()?;
            if let Some(v) = report.violations.first() {
                dump(v);
                return Ok(EXIT_INTERNAL);
            }
            Ok(if report.counterexamples.is_empty() || g.findings_ok {
                0
            } else {
                EXIT_FINDINGS
            })
        }
        Command::Gen {
            spec,
            count,
            output,
        } => {
            let graphs = expand(&spec.join(" "), count, g.seed)?;
            let mut out = sink(output.as_ref())?;
            for graph in &graphs {
                let line = write_graph6(graph).map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
            out.flush()?;
            Ok(0)
        }
    }
}

fn expand(spec: &str, count: usize, seed: u64) -> Result<Vec<Graph>, Failure> {
    FamilySpec::parse(spec)
        .and_then(|s| s.expand(count, seed))
        .map_err(|e| Failure::Usage(format!("family `{spec}`: {e}")))
}

fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            Failure::Usage(format!("cannot write {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Writes records up to and including the first violation, then stops.
fn emit(
    mut records: Vec<ScanRecord>,
    format: Format,
    output: Option<PathBuf>,
    findings_ok: bool,
) -> Result<u8, Failure> {
    let violation = records.iter().position(|r| r.status.is_violation());
    if let Some(i) = violation {
        records.truncate(i + 1);
    }
    write_records(sink(output.as_ref())?, &records, format)?;
    if let Some(i) = violation {
        dump(&records[i]);
        return Ok(EXIT_INTERNAL);
    }
    let findings = records.iter().any(|r| r.status.is_finding());
    Ok(if findings && !findings_ok {
        EXIT_FINDINGS
    } else {
        0
    })
}

fn dump(r: &ScanRecord) {
    eprintln!(
        "spectough: {} on graph {} ({}); a proven bound failed, which points to a defect",
        r.status, r.index, r.graph6
    );
    let _ = write_records(io::stderr().lock(), std::slice::from_ref(r), Format::Pretty);
    if let Ok(json) = serde_json::to_string(r) {
        eprintln!("{json}");
    }
}
