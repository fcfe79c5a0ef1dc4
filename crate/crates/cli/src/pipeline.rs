//! Parallel scans and conjecture hunts over graph corpora.

use std::collections::BTreeMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use spectough_core::graph::Graph;

use crate::record::{analyze_graph, analyze_line, AnalyzeOptions, ScanRecord, Status};

/// Builds a worker pool with `jobs` threads (`None` lets rayon decide).
pub fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, rayon::ThreadPoolBuildError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
}

/// Non-empty, non-comment lines of a corpus, numbered from 0.
pub fn corpus_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Analyzes every line; records come back in input order whatever the
/// worker count.
pub fn scan_lines(
    pool: &rayon::ThreadPool,
    lines: &[&str],
    opts: &AnalyzeOptions,
) -> Vec<ScanRecord> {
    pool.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, line)| analyze_line(i, line, opts))
            .collect()
    })
}

pub fn scan_graphs(
    pool: &rayon::ThreadPool,
    graphs: &[Graph],
    opts: &AnalyzeOptions,
) -> Vec<ScanRecord> {
    pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| analyze_graph(i, g, opts))
            .collect()
    })
}

/// Record count per status string.
pub fn summarize(records: &[ScanRecord]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for r in records {
        *counts.entry(r.status.to_string()).or_insert(0) += 1;
    }
    counts
}

/// A non-Hamiltonian graph with its eigenratio.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrontierPoint {
    pub index: usize,
    pub graph6: String,
    pub ratio: f64,
}

/// Running maximum of `μ2/μn` over non-Hamiltonian connected graphs. Ties go
/// to the smaller index so the result does not depend on scheduling.
#[derive(Debug, Default)]
pub struct Frontier {
    best: Mutex<Option<FrontierPoint>>,
}

impl Frontier {
    pub fn offer(&self, point: FrontierPoint) {
        let mut best = self.best.lock().unwrap_or_else(|e| e.into_inner());
        let better = match &*best {
            None => true,
            Some(b) => point.ratio > b.ratio || (point.ratio == b.ratio && point.index < b.index),
        };
        if better {
            *best = Some(point);
        }
    }

    pub fn best(&self) -> Option<FrontierPoint> {
        self.best.lock().unwrap_or_else(|e| e.into_inner()).clone()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub graphs: usize,
    pub budget: Option<usize>,
    pub budget_exhausted: bool,
    pub analyzed: usize,
    pub status_counts: BTreeMap<String, usize>,
    pub prop2_flagged: usize,
    pub prop2_bd0_failures: usize,
    pub counterexamples: Vec<ScanRecord>,
    pub violations: Vec<ScanRecord>,
    pub non_hamiltonian: usize,
    pub frontier: Option<FrontierPoint>,
    /// Each strict increase of the running maximum, in input order.
    pub frontier_trace: Vec<FrontierPoint>,
    pub note: &'static str,
}

const FRONTIER_NOTE: &str = "K_{s,s+1} is non-Hamiltonian with ratio s/(2s+1), which tends to 1/2";

/// Streams graphs through the full analysis, collecting bd0 counterexamples
/// and the non-Hamiltonian eigenratio frontier. At most `budget` graphs are
/// analyzed.
pub fn hunt(
    pool: &rayon::ThreadPool,
    graphs: &[Graph],
    budget: Option<usize>,
    opts: &AnalyzeOptions,
) -> HuntReport {
    let take = budget.map_or(graphs.len(), |b| b.min(graphs.len()));
    let frontier = Frontier::default();
    let records: Vec<ScanRecord> = pool.install(|| {
        graphs[..take]
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let r = analyze_graph(i, g, opts);
                if let Some(p) = frontier_point(&r) {
                    frontier.offer(p);
                }
                r
            })
            .collect()
    });

    let mut trace: Vec<FrontierPoint> = Vec::new();
    for p in records.iter().filter_map(frontier_point) {
        if trace.last().is_none_or(|b| p.ratio > b.ratio) {
            trace.push(p);
        }
    }
    let flagged = |r: &&ScanRecord| r.case_flags.is_some_and(|c| c.i || c.ii || c.iii || c.iv);
    let bd0_failed = |r: &&ScanRecord| {
        r.slack0
            .is_some_and(|s| s < -spectough_core::bounds::BOUND_SLACK_TOL)
    };
    HuntReport {
        graphs: graphs.len(),
        budget,
        budget_exhausted: take < graphs.len(),
        analyzed: records.len(),
        status_counts: summarize(&records),
        prop2_flagged: records.iter().filter(flagged).count(),
        prop2_bd0_failures: records.iter().filter(flagged).filter(bd0_failed).count(),
        counterexamples: records
            .iter()
            .filter(|r| r.status == Status::Counterexample)
            .cloned()
            .collect(),
        violations: records
            .iter()
            .filter(|r| r.status.is_violation())
            .cloned()
            .collect(),
        non_hamiltonian: records
            .iter()
            .filter(|r| r.hamiltonian == Some(false))
            .count(),
        frontier: frontier.best(),
        frontier_trace: trace,
        note: FRONTIER_NOTE,
    }
}

fn frontier_point(r: &ScanRecord) -> Option<FrontierPoint> {
    match (r.hamiltonian, r.ratio) {
        (Some(false), Some(ratio)) => Some(FrontierPoint {
            index: r.index,
            graph6: r.graph6.clone(),
            ratio,
        }),
        _ => None,
    }
}
