//! Laplacian matrices and their eigenvalues.

use thiserror::Error;

use crate::graph::Graph;

/// Sweep cap for the cyclic Jacobi iteration. Laplacians of order ≤ 64
/// converge in well under 20 sweeps.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Stopping rule: off-diagonal Frobenius norm ≤ this × full Frobenius norm.
pub const JACOBI_RELATIVE_OFF_NORM: f64 = 1e-12;

/// Per-vertex comparison tolerance recorded on every [`Spectrum`].
pub const SPECTRUM_TOL_PER_VERTEX: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("graph has no edges; the largest Laplacian eigenvalue is zero")]
    EmptyEdgeSet,
}

/// Dense symmetric matrix, row-major full storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Eigenvalues in ascending order, by cyclic Jacobi rotations.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, SpectrumError> {
        let n = self.order;
        let mut a = self.entries.clone();
        let threshold = JACOBI_RELATIVE_OFF_NORM * self.frobenius_norm();

        let mut converged = false;
        let mut off = off_diagonal_norm(&a, n);
        for _ in 0..MAX_JACOBI_SWEEPS {
            if off <= threshold {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut a, n, p, q);
                }
            }
            off = off_diagonal_norm(&a, n);
        }
        if !converged && off > threshold {
            return Err(SpectrumError::NoConvergence {
                sweeps: MAX_JACOBI_SWEEPS,
                off_norm: off,
            });
        }

        let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        values.sort_by(f64::total_cmp);
        Ok(values)
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Applies the rotation `A <- Jᵀ A J` that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    for k in 0..n {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let n = g.n();
    let mut entries = vec![0.0; n * n];
    for u in 0..n {
        entries[u * n + u] = g.degree(u) as f64;
        for v in g.neighbors(u) {
            entries[u * n + v] = -1.0;
        }
    }
    SymmetricMatrix { order: n, entries }
}

/// Laplacian eigenvalues `μ1 ≤ ... ≤ μn` with the tolerance used for every
/// downstream comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Wraps externally computed eigenvalues (sorted here).
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        let tol = SPECTRUM_TOL_PER_VERTEX * values.len() as f64;
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Algebraic connectivity; zero for a single vertex.
    pub fn mu2(&self) -> f64 {
        self.values.get(1).copied().unwrap_or(0.0)
    }

    /// Largest eigenvalue.
    pub fn mun(&self) -> f64 {
        *self.values.last().expect("spectrum of a nonempty graph")
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectrumError> {
    Ok(Spectrum::from_values(laplacian_matrix(g).eigenvalues()?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSummary {
    pub mu2: f64,
    pub mun: f64,
    pub delta: usize,
    pub dmax: usize,
    /// Laplacian eigenratio μ2/μn.
    pub ratio: f64,
}

pub fn eigen_summary(g: &Graph, s: &Spectrum) -> Result<EigenSummary, SpectrumError> {
    if g.edge_count() == 0 {
        return Err(SpectrumError::EmptyEdgeSet);
    }
    let (mu2, mun) = (s.mu2(), s.mun());
    Ok(EigenSummary {
        mu2,
        mun,
        delta: g.min_degree(),
        dmax: g.max_degree(),
        ratio: mu2 / mun,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn laplacian_of_k2() {
        let l = laplacian_matrix(&Family::Complete(2).build().unwrap());
        assert_eq!(l.row(0), &[1.0, -1.0]);
        assert_eq!(l.row(1), &[-1.0, 1.0]);
    }

    #[test]
    fn laplacian_of_p3() {
        let l = laplacian_matrix(&Family::Path(3).build().unwrap());
        assert_eq!(l.row(0), &[1.0, -1.0, 0.0]);
        assert_eq!(l.row(1), &[-1.0, 2.0, -1.0]);
        assert_eq!(l.row(2), &[0.0, -1.0, 1.0]);
    }

    #[test]
    fn petersen_laplacian_rows_sum_to_zero() {
        let l = laplacian_matrix(&Family::Petersen.build().unwrap());
        for i in 0..10 {
            assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
            for j in 0..10 {
                assert_eq!(l.get(i, j), l.get(j, i));
            }
        }
    }

    #[test]
    fn star_spectrum() {
        let s = spectrum(&Family::CompleteMultipartite(vec![3, 1]).build().unwrap()).unwrap();
        assert!(close(s.values(), &[0.0, 1.0, 1.0, 4.0], 1e-9));
    }

    #[test]
    fn c4_spectrum() {
        let s = spectrum(&Family::Cycle(4).build().unwrap()).unwrap();
        assert!(close(s.values(), &[0.0, 2.0, 2.0, 4.0], 1e-9));
    }

    #[test]
    fn petersen_spectrum() {
        let s = spectrum(&Family::Petersen.build().unwrap()).unwrap();
        let mut expect = vec![0.0];
        expect.extend([2.0; 5]);
        expect.extend([5.0; 4]);
        assert!(close(s.values(), &expect, 1e-9), "{:?}", s.values());
        assert!((s.mu2() - 2.0).abs() <= 1e-9);
        assert!((s.mun() - 5.0).abs() <= 1e-9);
        assert_eq!(s.tol(), 1e-8);
    }

    #[test]
    fn summaries() {
        let cases = [
            (Family::Petersen.build().unwrap(), [2.0, 5.0, 3.0, 3.0, 0.4]),
            (
                Family::Petersen.build().unwrap().complement(),
                [5.0, 8.0, 6.0, 6.0, 0.625],
            ),
            (
                Family::CompleteMultipartite(vec![3, 1]).build().unwrap(),
                [1.0, 4.0, 1.0, 3.0, 0.25],
            ),
        ];
        for (g, [mu2, mun, delta, dmax, ratio]) in cases {
            let sum = eigen_summary(&g, &spectrum(&g).unwrap()).unwrap();
            assert!((sum.mu2 - mu2).abs() < 1e-9);
            assert!((sum.mun - mun).abs() < 1e-9);
            assert_eq!(sum.delta as f64, delta);
            assert_eq!(sum.dmax as f64, dmax);
            assert!((sum.ratio - ratio).abs() < 1e-9);
        }
    }

    #[test]
    fn edgeless_summary_is_a_domain_error() {
        let g = crate::graph::Graph::empty(4).unwrap();
        let s = spectrum(&g).unwrap();
        assert_eq!(s.values(), &[0.0; 4]);
        assert_eq!(eigen_summary(&g, &s), Err(SpectrumError::EmptyEdgeSet));
    }

    #[test]
    fn cycles_follow_circulant_closed_form() {
        for n in 3..=20 {
            let s = spectrum(&Family::Cycle(n).build().unwrap()).unwrap();
            let mut expect: Vec<f64> = (0..n)
                .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
                .collect();
            expect.sort_by(f64::total_cmp);
            assert!(close(s.values(), &expect, 1e-9), "C{n}");
        }
    }

    #[test]
    fn single_vertex() {
        let s = spectrum(&Family::Complete(1).build().unwrap()).unwrap();
        assert_eq!(s.values(), &[0.0]);
        assert_eq!(s.mu2(), 0.0);
    }
}
