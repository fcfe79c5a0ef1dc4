//! Graph families used throughout the toolkit.
//!
//! Labelling conventions:
//! - `Complete(n)`: vertices `0..n`, every pair adjacent.
//! - `Cycle(n)`: edges `i ~ i+1 (mod n)`.
//! - `Path(n)`: edges `i ~ i+1` for `i < n-1`.
//! - `CompleteMultipartite(parts)`: parts are consecutive label blocks in the
//!   given order, so `[3, 1]` is the star with leaves `0, 1, 2` and centre `3`.
//! - `Petersen`: outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram
//!   `5+i ~ 5+(i+2 mod 5)`.
//! - `Gnp { n, p, seed }`: SplitMix64 with its state initialised to `seed`.
//!   For each pair in graph6 column order `(0,1), (0,2), (1,2), (0,3), ...`
//!   one 64-bit output `x` is drawn and the edge is kept iff
//!   `(x >> 11) * 2^-53 < p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteMultipartite(Vec<usize>),
    Petersen,
    Gnp { n: usize, p: f64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("family size must be positive")]
    NonPositiveSize,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            Family::Complete(n) => {
                positive(n)?;
                complete_multipartite(&vec![1; n])
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(FamilyError::CycleTooShort(n));
                }
                Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
            }
            Family::Path(n) => {
                positive(n)?;
                Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
            }
            Family::CompleteMultipartite(ref parts) => complete_multipartite(parts),
            Family::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                Ok(Graph::from_edges(10, outer.chain(spokes).chain(inner))?)
            }
            Family::Gnp { n, p, seed } => gnp(n, p, seed),
        }
    }
}

fn positive(n: usize) -> Result<(), FamilyError> {
    if n == 0 {
        Err(FamilyError::NonPositiveSize)
    } else {
        Ok(())
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(FamilyError::NonPositiveSize);
    }
    let n: usize = parts.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (k, &size) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(k, size));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| label[u] != label[v]);
    Ok(Graph::from_edges(n, edges)?)
}

fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    positive(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::BadProbability(p));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let u = (rng.next_u64() >> 11) as f64 * scale;
            if u < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}
