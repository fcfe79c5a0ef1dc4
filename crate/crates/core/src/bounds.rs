//! Spectral lower bounds on toughness and the tools behind them.
//!
//! With δ the minimum degree and μ2, μn the second smallest and largest
//! Laplacian eigenvalues:
//!
//! - `bd0 = μ2 / (μn - δ)` (conjectured),
//! - `bd1 = μn μ2 / (n (μn - δ))`,
//! - `bd2 = μ2 / (μn - μ2)`.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::spectra::Spectrum;
use crate::toughness::{Toughness, ToughnessCertificate};

/// Absolute slack below which a bound is reported as violated, and within
/// which (either side) it is reported as tight.
pub const BOUND_SLACK_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("μn - δ = {0} is below 1; the eigensolver result is inconsistent")]
    DegenerateDenominator(f64),
    #[error("μn - μ2 = {0} is within tolerance of zero (complete graph)")]
    CompleteGraph(f64),
    #[error("vertex sets must be nonempty and disjoint")]
    BadSides,
    #[error("edge {0}-{1} joins the two sides")]
    EdgeBetweenSides(usize, usize),
    #[error("case detection needs a finite toughness certificate")]
    NonFiniteCertificate,
    #[error("eigenratio {0} is outside [0, 1)")]
    RatioOutOfRange(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub delta: usize,
    pub mu2: f64,
    pub mun: f64,
    pub bd0: f64,
    pub bd1: f64,
    /// `+∞` for complete graphs.
    pub bd2: f64,
    pub ratio: f64,
    pub toughness: Option<Toughness>,
    /// `t - bd*`; present only for a finite toughness.
    pub slack0: Option<f64>,
    pub slack1: Option<f64>,
    pub slack2: Option<f64>,
}

pub fn bound_report(
    g: &Graph,
    s: &Spectrum,
    cert: Option<&ToughnessCertificate>,
) -> Result<BoundReport, BoundsError> {
    if g.edge_count() == 0 {
        return Err(BoundsError::EmptyEdgeSet);
    }
    let n = g.n();
    let delta = g.min_degree();
    let (mu2, mun) = (s.mu2(), s.mun());
    let gap = mun - delta as f64;
    if gap < 1.0 - s.tol() {
        return Err(BoundsError::DegenerateDenominator(gap));
    }
    let bd0 = mu2 / gap;
    let bd1 = mun * mu2 / (n as f64 * gap);
    let bd2 = if mun - mu2 <= s.tol() {
        f64::INFINITY
    } else {
        mu2 / (mun - mu2)
    };

    let toughness = cert.map(|c| c.value());
    let slack = |bd: f64| match toughness {
        Some(t @ Toughness::Finite(_)) => Some(t.to_f64_lower() - bd),
        _ => None,
    };
    Ok(BoundReport {
        n,
        delta,
        mu2,
        mun,
        bd0,
        bd1,
        bd2,
        ratio: mu2 / mun,
        toughness,
        slack0: slack(bd0),
        slack1: slack(bd1),
        slack2: slack(bd2),
    })
}

/// How a toughness value compares with one bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheck {
    Holds,
    /// `|t - bound| ≤ BOUND_SLACK_TOL`.
    Tight,
    /// `t + BOUND_SLACK_TOL < bound`.
    Violated,
}

pub fn classify_slack(slack: f64) -> BoundCheck {
    if slack < -BOUND_SLACK_TOL {
        BoundCheck::Violated
    } else if slack <= BOUND_SLACK_TOL {
        BoundCheck::Tight
    } else {
        BoundCheck::Holds
    }
}

/// Upper bound `n (μn - δ) / μn` on the size of any independent set.
pub fn independence_upper_bound(s: &Spectrum, delta: usize, n: usize) -> Result<f64, BoundsError> {
    let mun = s.mun();
    if mun <= s.tol() {
        return Err(BoundsError::EmptyEdgeSet);
    }
    Ok(n as f64 * (mun - delta as f64) / mun)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationCheck {
    pub x_size: usize,
    pub y_size: usize,
    /// `|X||Y| / ((n-|X|)(n-|Y|))`
    pub lhs: f64,
    /// `((μn - μ2)/(μn + μ2))²`
    pub rhs: f64,
    pub pass: bool,
}

/// Evaluates the separation inequality for two vertex sets with no edges
/// between them.
pub fn separation_verify(
    g: &Graph,
    x: VertexSet,
    y: VertexSet,
    s: &Spectrum,
) -> Result<SeparationCheck, BoundsError> {
    if x.is_empty() || y.is_empty() || !x.is_disjoint(y) || !x.union(y).is_subset(g.vertices()) {
        return Err(BoundsError::BadSides);
    }
    for u in x {
        if let Some(v) = g.neighbors(u).intersection(y).first() {
            return Err(BoundsError::EdgeBetweenSides(u, v));
        }
    }
    let n = g.n() as f64;
    let (xs, ys) = (x.len() as f64, y.len() as f64);
    let lhs = xs * ys / ((n - xs) * (n - ys));
    let (mu2, mun) = (s.mu2(), s.mun());
    let beta = (mun - mu2) / (mun + mu2);
    let rhs = beta * beta;
    Ok(SeparationCheck {
        x_size: x.len(),
        y_size: y.len(),
        lhs,
        rhs,
        pass: lhs <= rhs + s.tol(),
    })
}

/// Consequences of the separation inequality for a disconnecting set `S`
/// and a split `X ∪ Y = V \ S` with `|X| ≤ |Y|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallSideBounds {
    /// `|X| ≤ n (μn - μ2) / (2 μn)`
    pub x_upper: f64,
    /// `|S| ≥ 2 μ2 / (μn - μ2) · |X|`
    pub s_coeff: f64,
}

impl SmallSideBounds {
    pub fn holds_for(&self, cut_size: usize, x_size: usize, tol: f64) -> bool {
        x_size as f64 <= self.x_upper + tol && cut_size as f64 >= self.s_coeff * x_size as f64 - tol
    }
}

pub fn prop32_bounds(s: &Spectrum, n: usize) -> Result<SmallSideBounds, BoundsError> {
    let (mu2, mun) = (s.mu2(), s.mun());
    let gap = mun - mu2;
    if gap <= s.tol() {
        return Err(BoundsError::CompleteGraph(gap));
    }
    Ok(SmallSideBounds {
        x_upper: n as f64 * gap / (2.0 * mun),
        s_coeff: 2.0 * mu2 / gap,
    })
}

/// Which of the four structural situations hold at an extremal cut.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseFlags {
    /// The complement of `G` is disconnected.
    pub case_i: bool,
    /// Every component of `G - S` is a single vertex.
    pub case_ii: bool,
    /// Some components of `G - S` together hold exactly `(n - |S|)/2` vertices.
    pub case_iii: bool,
    /// `G - S` has exactly two components.
    pub case_iv: bool,
}

impl CaseFlags {
    pub fn any(&self) -> bool {
        self.case_i || self.case_ii || self.case_iii || self.case_iv
    }
}

pub fn detect_prop2_cases(
    g: &Graph,
    cert: &ToughnessCertificate,
) -> Result<CaseFlags, BoundsError> {
    let ToughnessCertificate::Finite { cut, components } = *cert else {
        return Err(BoundsError::NonFiniteCertificate);
    };
    let rest = g.n() - cut.len();
    let sizes: Vec<usize> = g
        .components_after_removal(cut)
        .map_err(|_| BoundsError::NonFiniteCertificate)?
        .iter()
        .map(|c| c.len())
        .collect();
    debug_assert_eq!(sizes.len(), components);
    Ok(CaseFlags {
        case_i: !g.complement().is_connected(),
        case_ii: rest == components,
        case_iii: rest.is_multiple_of(2) && subset_sum_hits(&sizes, rest / 2),
        case_iv: components == 2,
    })
}

/// Exact subset-sum over component sizes. Sizes total at most 64, so the
/// reachable sums fit in one 128-bit mask.
fn subset_sum_hits(sizes: &[usize], target: usize) -> bool {
    let mut reach: u128 = 1;
    for &s in sizes {
        if s < 128 {
            reach |= reach << s;
        }
    }
    target < 128 && (reach >> target) & 1 == 1
}

/// Largest `r` with `ratio ≥ r/(r+1)`, i.e. `r = ratio / (1 - ratio)`.
pub fn toughness_from_ratio(ratio: f64) -> Result<f64, BoundsError> {
    if !(0.0..1.0).contains(&ratio) {
        return Err(BoundsError::RatioOutOfRange(ratio));
    }
    Ok(ratio / (1.0 - ratio))
}
