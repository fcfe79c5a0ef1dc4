//! Library side of the `spectough` command: family specs, per-graph
//! records, parallel scans and hunts, and report writers.

pub mod family;
pub mod output;
pub mod pipeline;
pub mod record;

pub use family::{FamilySpec, SpecError};
pub use output::{write_records, Format};
pub use pipeline::{corpus_lines, hunt, pool, scan_graphs, scan_lines, summarize, HuntReport};
pub use record::{analyze_graph, analyze_line, AnalyzeOptions, ScanRecord, Status};
