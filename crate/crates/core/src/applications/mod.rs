//! Structural guarantees implied by the Laplacian eigenratio `μ2/μn`, and
//! the oracles that check them on small graphs.
//!
//! Each guarantee goes through a toughness threshold: a ratio of at least
//! `r/(r+1)` forces `r`-toughness, and known toughness results then yield
//! matchings, factors, spanning trees and walks.

mod oracles;

use std::fmt;

use thiserror::Error;

pub use oracles::{
    has_factor, has_hamilton_cycle, has_perfect_matching, has_spanning_tree_max_degree,
    independence_number, is_1s_factor_critical, is_m_extendable, OracleError, DEFAULT_FACTOR_CAP,
    DEFAULT_ORACLE_CAP, DEFAULT_SMALL_ORACLE_CAP,
};

use crate::graph::Graph;
use crate::spectra::Spectrum;

/// Largest `b` for which `[a,b]`-factor guarantees are listed.
pub const DEFAULT_MAX_FACTOR_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplicationError {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph is disconnected; spectral guarantees are vacuous")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Perfect matching whose allowed edges form a connected subgraph.
    Elementary,
    MExtendable(usize),
    Factor {
        a: usize,
        b: usize,
    },
    KFactor(usize),
    /// `(1,s)`-factor-critical; `s = 1` is factor-criticality on odd orders.
    FactorCritical(usize),
    SpanningTree {
        max_degree: usize,
    },
    Walk(usize),
}

impl Property {
    /// Stable identifier used in reports.
    pub fn tag(&self) -> String {
        self.to_string()
    }

    /// The result the guarantee rests on.
    pub fn source(&self) -> &'static str {
        match self {
            Property::Elementary => "elementary",
            Property::MExtendable(_) => "m-extendable",
            Property::Factor { .. } => "ab-factor",
            Property::KFactor(_) => "k-factor",
            Property::FactorCritical(1) => "factor-critical",
            Property::FactorCritical(_) => "1s-factor-critical",
            Property::SpanningTree { .. } => "bounded-degree-spanning-tree",
            Property::Walk(2) => "2-walk",
            Property::Walk(_) => "k-walk",
        }
    }

    /// Walks have no desk-scale checker.
    pub fn oracle_checkable(&self) -> bool {
        !matches!(self, Property::Walk(_))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Property::Elementary => f.write_str("elementary"),
            Property::MExtendable(m) => write!(f, "{m}-extendable"),
            Property::Factor { a, b } => write!(f, "[{a},{b}]-factor"),
            Property::KFactor(k) => write!(f, "{k}-factor"),
            Property::FactorCritical(s) => write!(f, "(1,{s})-factor-critical"),
            Property::SpanningTree { max_degree } => write!(f, "spanning-tree-deg<={max_degree}"),
            Property::Walk(k) => write!(f, "{k}-walk"),
        }
    }
}

/// One candidate guarantee: its eigenratio threshold and whether it is met.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Guarantee {
    pub property: Property,
    pub threshold: f64,
    /// `ratio > threshold` rather than `ratio ≥ threshold`.
    pub strict: bool,
    pub met: bool,
}

/// All guarantees whose parity and size preconditions hold for `g`, each
/// flagged with whether the eigenratio reaches its threshold. Comparisons
/// allow the spectrum's tolerance on the non-strict side and demand it on
/// the strict side.
pub fn guarantees(g: &Graph, s: &Spectrum) -> Result<Vec<Guarantee>, ApplicationError> {
    guarantees_with(g, s, DEFAULT_MAX_FACTOR_DEGREE)
}

pub fn guarantees_with(
    g: &Graph,
    s: &Spectrum,
    max_factor_degree: usize,
) -> Result<Vec<Guarantee>, ApplicationError> {
    if g.edge_count() == 0 {
        return Err(ApplicationError::EmptyEdgeSet);
    }
    if !g.is_connected() {
        return Err(ApplicationError::Disconnected);
    }
    let n = g.n();
    let ratio = s.mu2() / s.mun();
    let eps = s.tol();
    let mut out = Vec::new();
    let mut push = |property, threshold: f64, strict| {
        let met = if strict {
            ratio > threshold + eps
        } else {
            ratio >= threshold - eps
        };
        out.push(Guarantee {
            property,
            threshold,
            strict,
            met,
        });
    };

    // 2μ2 ≥ μn
    if n.is_multiple_of(2) {
        push(Property::Elementary, 0.5, false);
    } else {
        push(Property::FactorCritical(1), 0.5, false);
    }
    if n.is_multiple_of(2) {
        for m in (1..).take_while(|m| 2 * m + 2 < n) {
            push(Property::MExtendable(m), m as f64 / (m + 1) as f64, true);
        }
    }
    for b in 1..=max_factor_degree {
        for a in 1..=b {
            if n > a && (a < b || (b * n).is_multiple_of(2)) {
                let threshold = 1.0 - b as f64 / (a * (b + 1)) as f64;
                push(Property::Factor { a, b }, threshold, false);
            }
        }
    }
    for k in 1..n {
        if (k * n).is_multiple_of(2) {
            push(Property::KFactor(k), k as f64 / (k + 1) as f64, false);
        }
    }
    for s in 2..n {
        if (n + s).is_multiple_of(2) {
            push(Property::FactorCritical(s), s as f64 / (s + 2) as f64, true);
        }
    }
    for k in 3..=n.max(4) - 1 {
        let threshold = 1.0 / (k - 1) as f64;
        push(Property::SpanningTree { max_degree: k }, threshold, false);
        push(Property::Walk(k), threshold, false);
    }
    push(Property::Walk(2), 0.8, false);
    Ok(out)
}

/// Order caps for the oracles behind [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub general: usize,
    pub small: usize,
    pub factor: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            general: DEFAULT_ORACLE_CAP,
            small: DEFAULT_SMALL_ORACLE_CAP,
            factor: DEFAULT_FACTOR_CAP,
        }
    }
}

impl OracleCaps {
    /// Derives the tighter caps from the general one.
    pub fn from_general(general: usize) -> Self {
        OracleCaps {
            general,
            small: general.min(DEFAULT_SMALL_ORACLE_CAP),
            factor: general.min(DEFAULT_FACTOR_CAP),
        }
    }
}

/// Runs the combinatorial oracle for `property`. `None` when there is no
/// oracle for it or the graph exceeds the relevant cap.
pub fn verify(g: &Graph, property: &Property, caps: &OracleCaps) -> Option<bool> {
    let n = g.n();
    let within = |cap: usize| n <= cap;
    let result = match *property {
        Property::Elementary | Property::KFactor(1) if within(caps.general) => {
            has_perfect_matching(g, caps.general)
        }
        Property::MExtendable(m) if within(caps.small) => is_m_extendable(g, m, caps.small),
        Property::Factor { a: 1, b: 1 } if within(caps.general) => {
            has_perfect_matching(g, caps.general)
        }
        Property::Factor { a, b } if within(caps.factor) => has_factor(g, a, b, caps.factor),
        Property::KFactor(k) if within(caps.factor) => has_factor(g, k, k, caps.factor),
        Property::FactorCritical(s) if within(caps.small) => {
            is_1s_factor_critical(g, s, caps.small)
        }
        Property::SpanningTree { max_degree } if within(caps.general) => {
            has_spanning_tree_max_degree(g, max_degree, caps.general)
        }
        _ => return None,
    };
    result.ok()
}
