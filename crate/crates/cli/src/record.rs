//! Per-graph analysis: one [`ScanRecord`] gathers every quantity for a graph.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use spectough_core::applications::DEFAULT_ORACLE_CAP;
use spectough_core::applications::{
    guarantees, has_hamilton_cycle, independence_number, verify, OracleCaps,
};
use spectough_core::bounds::{
    bound_report, classify_slack, detect_prop2_cases, independence_upper_bound, prop32_bounds,
    separation_verify, toughness_from_ratio, BoundCheck, BOUND_SLACK_TOL,
};
use spectough_core::graph::{parse_graph6, write_graph6, Graph};
use spectough_core::spectra::{eigen_summary, spectrum};
use spectough_core::toughness::{
    exact_toughness, partition_components, ToughnessCertificate, DEFAULT_TOUGHNESS_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub cap_toughness: usize,
    pub cap_oracle: usize,
    pub toughness: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            cap_toughness: DEFAULT_TOUGHNESS_CAP,
            cap_oracle: DEFAULT_ORACLE_CAP,
            toughness: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    NearTight,
    Counterexample,
    /// A proven statement failed; the payload names it.
    Violation(String),
    Skipped(String),
}

impl Status {
    pub fn is_violation(&self) -> bool {
        matches!(self, Status::Violation(_))
    }

    pub fn is_finding(&self) -> bool {
        matches!(self, Status::Counterexample | Status::Violation(_))
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Ok => f.write_str("OK"),
            Status::NearTight => f.write_str("NEAR-TIGHT"),
            Status::Counterexample => f.write_str("COUNTEREXAMPLE(bd0)"),
            Status::Violation(what) => write!(f, "VIOLATION({what})"),
            Status::Skipped(why) => write!(f, "SKIPPED({why})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub cut: Vec<usize>,
    pub components: usize,
    pub component_sizes: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseFlagsRecord {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparationRecord {
    pub x_size: usize,
    pub y_size: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
    /// Small-side consequences `|X| ≤ x_upper` and `|S| ≥ s_coeff |X|`.
    pub x_upper: f64,
    pub s_coeff: f64,
    pub small_side_pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndependenceRecord {
    pub bound: f64,
    pub alpha: Option<usize>,
}

/// Everything known about one input graph. Fields that could not be
/// computed are `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub mu2: Option<f64>,
    pub mun: Option<f64>,
    pub delta: Option<usize>,
    pub ratio: Option<f64>,
    pub toughness: Option<String>,
    pub certificate: Option<Certificate>,
    pub bd0: Option<f64>,
    pub bd1: Option<f64>,
    /// `null` for complete graphs, where the bound is infinite.
    pub bd2: Option<f64>,
    pub slack0: Option<f64>,
    pub slack1: Option<f64>,
    pub slack2: Option<f64>,
    pub case_flags: Option<CaseFlagsRecord>,
    pub separation: Option<SeparationRecord>,
    pub independence: Option<IndependenceRecord>,
    pub guaranteed_toughness: Option<f64>,
    pub guarantees: Vec<String>,
    pub oracle_results: BTreeMap<String, bool>,
    pub unverified: Vec<String>,
    pub hamiltonian: Option<bool>,
    pub status: Status,
    pub error: Option<String>,
}

impl ScanRecord {
    fn blank(index: usize, graph6: String) -> Self {
        ScanRecord {
            index,
            graph6,
            n: None,
            edges: None,
            mu2: None,
            mun: None,
            delta: None,
            ratio: None,
            toughness: None,
            certificate: None,
            bd0: None,
            bd1: None,
            bd2: None,
            slack0: None,
            slack1: None,
            slack2: None,
            case_flags: None,
            separation: None,
            independence: None,
            guaranteed_toughness: None,
            guarantees: Vec::new(),
            oracle_results: BTreeMap::new(),
            unverified: Vec::new(),
            hamiltonian: None,
            status: Status::Ok,
            error: None,
        }
    }

    fn skipped(mut self, why: &str) -> Self {
        self.status = Status::Skipped(why.to_string());
        self
    }
}

/// Analyzes one graph6 line. Parse failures become `SKIPPED(parse)` records.
pub fn analyze_line(index: usize, line: &str, opts: &AnalyzeOptions) -> ScanRecord {
    let text = line.trim();
    match parse_graph6(text) {
        Ok(g) => analyze_graph(index, &g, opts),
        Err(e) => {
            let mut r = ScanRecord::blank(index, text.to_string()).skipped("parse");
            r.error = Some(e.to_string());
            r
        }
    }
}

pub fn analyze_graph(index: usize, g: &Graph, opts: &AnalyzeOptions) -> ScanRecord {
    let graph6 = write_graph6(g).unwrap_or_default();
    let mut r = ScanRecord::blank(index, graph6);
    r.n = Some(g.n());
    r.edges = Some(g.edge_count());
    r.delta = Some(g.min_degree());
    if g.edge_count() == 0 {
        return r.skipped("edgeless");
    }
    let s = match spectrum(g) {
        Ok(s) => s,
        Err(e) => {
            r.error = Some(e.to_string());
            return r.skipped("eigensolver");
        }
    };
    let summary = eigen_summary(g, &s).expect("graph has edges");
    r.mu2 = Some(summary.mu2);
    r.mun = Some(summary.mun);
    r.ratio = Some(summary.ratio);
    if let Ok(bound) = independence_upper_bound(&s, summary.delta, g.n()) {
        let alpha = independence_number(g, opts.cap_oracle).ok();
        r.independence = Some(IndependenceRecord { bound, alpha });
    }

    let cert = if opts.toughness && g.n() <= opts.cap_toughness {
        exact_toughness(g, opts.cap_toughness).ok()
    } else {
        None
    };
    if let Some(c) = &cert {
        r.toughness = Some(c.value().to_string());
        if let Some(cut) = c.cut() {
            let comps = g.components_after_removal(cut).unwrap_or_default();
            r.certificate = Some(Certificate {
                cut: cut.to_vec(),
                components: comps.len(),
                component_sizes: comps.iter().map(|c| c.len()).collect(),
            });
        }
    }
    match bound_report(g, &s, cert.as_ref()) {
        Ok(b) => {
            r.bd0 = Some(b.bd0);
            r.bd1 = Some(b.bd1);
            r.bd2 = b.bd2.is_finite().then_some(b.bd2);
            r.slack0 = b.slack0;
            r.slack1 = b.slack1;
            r.slack2 = b.slack2;
        }
        Err(e) => {
            r.error = Some(e.to_string());
            r.status = Status::Violation("eigensolver".into());
            return r;
        }
    }

    if g.is_complete() {
        r.toughness = Some("inf".into());
        return r.skipped("complete");
    }
    if !g.is_connected() {
        return r.skipped("disconnected");
    }

    r.guaranteed_toughness = toughness_from_ratio(summary.ratio).ok();
    let caps = OracleCaps::from_general(opts.cap_oracle);
    let mut failed_guarantee = None;
    for gu in guarantees(g, &s).unwrap_or_default() {
        if !gu.met {
            continue;
        }
        let tag = gu.property.tag();
        r.guarantees.push(tag.clone());
        match verify(g, &gu.property, &caps) {
            Some(ok) => {
                if !ok && failed_guarantee.is_none() {
                    failed_guarantee = Some(tag.clone());
                }
                r.oracle_results.insert(tag, ok);
            }
            None => r.unverified.push(tag),
        }
    }
    if g.n() >= 3 {
        r.hamiltonian = has_hamilton_cycle(g, opts.cap_oracle).ok();
    }

    let mut case_any = false;
    if let Some(c @ ToughnessCertificate::Finite { cut, .. }) = &cert {
        if let Ok(flags) = detect_prop2_cases(g, c) {
            case_any = flags.any();
            r.case_flags = Some(CaseFlagsRecord {
                i: flags.case_i,
                ii: flags.case_ii,
                iii: flags.case_iii,
                iv: flags.case_iv,
            });
        }
        let comps = g.components_after_removal(*cut).unwrap_or_default();
        if let Ok((x, y)) = partition_components(&comps) {
            if let (Ok(sep), Ok(small)) = (separation_verify(g, x, y, &s), prop32_bounds(&s, g.n()))
            {
                r.separation = Some(SeparationRecord {
                    x_size: sep.x_size,
                    y_size: sep.y_size,
                    lhs: sep.lhs,
                    rhs: sep.rhs,
                    pass: sep.pass,
                    x_upper: small.x_upper,
                    s_coeff: small.s_coeff,
                    small_side_pass: small.holds_for(cut.len(), sep.x_size, s.tol()),
                });
            }
        }
    }

    r.status = classify(&r, case_any, failed_guarantee, opts);
    r
}

fn classify(
    r: &ScanRecord,
    case_any: bool,
    failed_guarantee: Option<String>,
    opts: &AnalyzeOptions,
) -> Status {
    let check = |s: Option<f64>| s.map(classify_slack);
    let (c0, c1, c2) = (check(r.slack0), check(r.slack1), check(r.slack2));
    if c1 == Some(BoundCheck::Violated) {
        return Status::Violation("bd1".into());
    }
    if c2 == Some(BoundCheck::Violated) {
        return Status::Violation("bd2".into());
    }
    if let Some(sep) = &r.separation {
        if !sep.pass || !sep.small_side_pass {
            return Status::Violation("separation".into());
        }
    }
    if let Some(ind) = &r.independence {
        if ind
            .alpha
            .is_some_and(|a| a as f64 > ind.bound + BOUND_SLACK_TOL)
        {
            return Status::Violation("independence".into());
        }
    }
    if let Some(tag) = failed_guarantee {
        return Status::Violation(tag);
    }
    if c0 == Some(BoundCheck::Violated) {
        return if case_any {
            Status::Violation("prop2".into())
        } else {
            Status::Counterexample
        };
    }
    if opts.toughness && r.toughness.is_none() {
        return Status::Skipped("capacity".into());
    }
    if [c0, c1, c2].contains(&Some(BoundCheck::Tight)) {
        return Status::NearTight;
    }
    Status::Ok
}
