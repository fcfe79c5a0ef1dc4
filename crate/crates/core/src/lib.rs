//! Exact toughness, Laplacian spectra and spectral toughness bounds for
//! small simple graphs.
//!
//! - [`graph`]: bitset graphs, graph6, generators.
//! - [`spectra`]: Laplacian matrix and a cyclic Jacobi eigensolver.
//! - [`toughness`]: exact toughness with an extremal cut.
//! - [`bounds`]: eigenvalue lower bounds on toughness and the separation tools.
//! - [`applications`]: eigenratio guarantees and combinatorial oracles.

pub mod applications;
pub mod bounds;
pub mod graph;
pub mod spectra;
pub mod toughness;

pub use graph::{Family, Graph, VertexSet};
pub use num_rational::Ratio;
pub use spectra::{spectrum, Spectrum};
pub use toughness::{exact_toughness, Toughness, ToughnessCertificate};
