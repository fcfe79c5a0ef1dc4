//! Exact toughness by cut enumeration.
//!
//! `t(G) = min |S| / c(G - S)` over vertex sets `S` whose removal leaves at
//! least two components. Complete graphs have infinite toughness and
//! disconnected graphs have toughness zero (the empty set already disconnects).

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default largest order accepted by [`exact_toughness`].
pub const DEFAULT_TOUGHNESS_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToughnessError {
    #[error("order {n} exceeds the toughness search cap {cap}")]
    Capacity { n: usize, cap: usize },
}

/// Exact toughness value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Ratio<u64>),
    Infinite,
}

impl Toughness {
    pub fn zero() -> Self {
        Toughness::Finite(Ratio::from_integer(0))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Toughness::Finite(_))
    }

    /// Float conversion rounded one ulp toward −∞, so that comparisons
    /// against float bounds never overstate the toughness.
    pub fn to_f64_lower(&self) -> f64 {
        match self {
            Toughness::Finite(r) => (*r.numer() as f64 / *r.denom() as f64).next_down(),
            Toughness::Infinite => f64::INFINITY,
        }
    }

    pub fn at_least(&self, r: Ratio<u64>) -> bool {
        match self {
            Toughness::Finite(t) => *t >= r,
            Toughness::Infinite => true,
        }
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
            (Toughness::Finite(_), Toughness::Infinite) => Ordering::Less,
            (Toughness::Infinite, Toughness::Finite(_)) => Ordering::Greater,
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

/// An extremal cut witnessing the toughness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToughnessCertificate {
    /// Complete graph.
    Infinite,
    /// Disconnected graph; the cut is empty.
    Zero { components: usize },
    /// `|cut| / components` is minimal over all disconnecting sets.
    Finite { cut: VertexSet, components: usize },
}

impl ToughnessCertificate {
    pub fn value(&self) -> Toughness {
        match *self {
            ToughnessCertificate::Infinite => Toughness::Infinite,
            ToughnessCertificate::Zero { .. } => Toughness::zero(),
            ToughnessCertificate::Finite { cut, components } => {
                Toughness::Finite(Ratio::new(cut.len() as u64, components as u64))
            }
        }
    }

    pub fn cut(&self) -> Option<VertexSet> {
        match *self {
            ToughnessCertificate::Infinite => None,
            ToughnessCertificate::Zero { .. } => Some(VertexSet::EMPTY),
            ToughnessCertificate::Finite { cut, .. } => Some(cut),
        }
    }

    pub fn components(&self) -> Option<usize> {
        match *self {
            ToughnessCertificate::Infinite => None,
            ToughnessCertificate::Zero { components }
            | ToughnessCertificate::Finite { components, .. } => Some(components),
        }
    }
}

/// Computes the toughness of `g` with an optimal cut.
///
/// Cuts are visited by increasing size and, within a size, in lexicographic
/// order of their sorted members; only strict improvements replace the
/// incumbent, so the certificate is the smallest, then lexicographically
/// first, optimal cut. A size `k` is abandoned (together with all larger
/// sizes) once `k / (n - k)` reaches the incumbent, since `c(G - S) ≤ n - |S|`.
pub fn exact_toughness(g: &Graph, cap: usize) -> Result<ToughnessCertificate, ToughnessError> {
    let n = g.n();
    if n > cap {
        return Err(ToughnessError::Capacity { n, cap });
    }
    if g.is_complete() {
        return Ok(ToughnessCertificate::Infinite);
    }
    let all = g.vertices();
    let base = g.count_components_within(all);
    if base > 1 {
        return Ok(ToughnessCertificate::Zero { components: base });
    }

    // (|S|, c, S) of the incumbent
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for k in 1..n - 1 {
        if let Some((bs, bc, _)) = best {
            if k * bc >= bs * (n - k) {
                break;
            }
        }
        for combo in (0..n).combinations(k) {
            let s: VertexSet = combo.into_iter().collect();
            let c = g.count_components_within(all.difference(s));
            if c < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bs, bc, _)) => k * bc < bs * c,
            };
            if better {
                best = Some((k, c, s));
            }
        }
    }
    // a connected non-complete graph always has a disconnecting set
    let (_, components, cut) = best.expect("non-adjacent pair yields a cut");
    Ok(ToughnessCertificate::Finite { cut, components })
}

/// `t(G) ≥ r`, compared exactly.
pub fn is_r_tough(g: &Graph, r: Ratio<u64>, cap: usize) -> Result<bool, ToughnessError> {
    Ok(exact_toughness(g, cap)?.value().at_least(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("need at least two components, got {0}")]
    TooFewComponents(usize),
    #[error("component sizes must be positive and ascending")]
    NotAscending,
    #[error("odd number of singleton components; the independent-set argument applies instead")]
    AllSingletonsOdd,
}

/// Split of the components `H_1..H_c` (0-based indices into the size list)
/// into two sides with `|Y| ≥ |X| ≥ c/2` measured in vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub x_order: usize,
    pub y_order: usize,
}

/// Groups ascending component sizes into `X` and `Y`:
/// - `c` even: `X` is the first `c/2` components;
/// - `c` odd and `|H_{(c-1)/2}| ≥ 2`: `X` is the first `(c-1)/2`;
/// - `c` odd otherwise: `X` is the first `(c+1)/2`;
///
/// then the sides are swapped if `X` came out larger.
pub fn proof_partition(sizes: &[usize]) -> Result<ComponentPartition, PartitionError> {
    let c = sizes.len();
    if c < 2 {
        return Err(PartitionError::TooFewComponents(c));
    }
    if sizes[0] == 0 || sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(PartitionError::NotAscending);
    }
    let take = if c.is_multiple_of(2) {
        c / 2
    } else if sizes.iter().all(|&s| s == 1) {
        return Err(PartitionError::AllSingletonsOdd);
    } else if sizes[(c - 1) / 2 - 1] >= 2 {
        (c - 1) / 2
    } else {
        c.div_ceil(2)
    };
    let mut x: Vec<usize> = (0..take).collect();
    let mut y: Vec<usize> = (take..c).collect();
    let mut x_order: usize = sizes[..take].iter().sum();
    let mut y_order: usize = sizes[take..].iter().sum();
    if x_order > y_order {
        std::mem::swap(&mut x, &mut y);
        std::mem::swap(&mut x_order, &mut y_order);
    }
    Ok(ComponentPartition {
        x,
        y,
        x_order,
        y_order,
    })
}

/// [`proof_partition`] applied to components (sorted as returned by
/// `components_after_removal`), yielding the vertex sets `X` and `Y`.
pub fn partition_components(
    components: &[VertexSet],
) -> Result<(VertexSet, VertexSet), PartitionError> {
    let sizes: Vec<usize> = components.iter().map(|c| c.len()).collect();
    let part = proof_partition(&sizes)?;
    let side = |idx: &[usize]| {
        idx.iter()
            .fold(VertexSet::EMPTY, |acc, &i| acc.union(components[i]))
    };
    Ok((side(&part.x), side(&part.y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    /// Brute force over all 2^n subsets with a union-find component count.
    fn brute_force(g: &Graph) -> Option<Ratio<u64>> {
        let n = g.n();
        let edges: Vec<_> = g.edges().collect();
        let mut best: Option<Ratio<u64>> = None;
        for mask in 0u64..(1 << n) {
            let removed = |v: usize| mask >> v & 1 == 1;
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for &(u, v) in &edges {
                if !removed(u) && !removed(v) {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    parent[a] = b;
                }
            }
            let c = (0..n)
                .filter(|&v| !removed(v) && find(&mut parent, v) == v)
                .count();
            if c >= 2 {
                let r = Ratio::new(mask.count_ones() as u64, c as u64);
                best = Some(best.map_or(r, |b| b.min(r)));
            }
        }
        best
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn petersen_is_four_thirds() {
        let g = Family::Petersen.build().unwrap();
        let cert = exact_toughness(&g, DEFAULT_TOUGHNESS_CAP).unwrap();
        assert_eq!(cert.value(), Toughness::Finite(Ratio::new(4, 3)));
        assert_eq!(cert.value().to_string(), "4/3");
    }

    #[test]
    fn star_certificate() {
        let g = Family::CompleteMultipartite(vec![3, 1]).build().unwrap();
        let cert = exact_toughness(&g, DEFAULT_TOUGHNESS_CAP).unwrap();
        assert_eq!(
            cert,
            ToughnessCertificate::Finite {
                cut: set(&[3]),
                components: 3
            }
        );
        assert_eq!(brute_force(&g), Some(Ratio::new(1, 3)));
    }

    #[test]
    fn c4_certificate_is_lexicographically_first() {
        let g = Family::Cycle(4).build().unwrap();
        let cert = exact_toughness(&g, DEFAULT_TOUGHNESS_CAP).unwrap();
        assert_eq!(
            cert,
            ToughnessCertificate::Finite {
                cut: set(&[0, 2]),
                components: 2
            }
        );
        assert_eq!(cert.value().to_string(), "1");
        assert_eq!(brute_force(&g), Some(Ratio::from_integer(1)));
    }

    #[test]
    fn conventions_for_complete_and_disconnected() {
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(
            exact_toughness(&k5, 14).unwrap(),
            ToughnessCertificate::Infinite
        );
        assert_eq!(exact_toughness(&k5, 14).unwrap().value().to_string(), "inf");
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let cert = exact_toughness(&g, 14).unwrap();
        assert_eq!(cert, ToughnessCertificate::Zero { components: 3 });
        assert_eq!(cert.value().to_string(), "0");
        assert_eq!(cert.cut(), Some(VertexSet::EMPTY));
    }

    #[test]
    fn capacity_is_enforced() {
        let g = Family::Cycle(15).build().unwrap();
        assert_eq!(
            exact_toughness(&g, DEFAULT_TOUGHNESS_CAP),
            Err(ToughnessError::Capacity { n: 15, cap: 14 })
        );
        assert!(exact_toughness(&g, 15).is_ok());
    }

    #[test]
    fn r_tough_decisions() {
        let p = Family::Petersen.build().unwrap();
        assert!(is_r_tough(&p, Ratio::new(4, 3), 14).unwrap());
        assert!(!is_r_tough(&p, Ratio::new(3, 2), 14).unwrap());
        let k5 = Family::Complete(5).build().unwrap();
        assert!(is_r_tough(&k5, Ratio::from_integer(1_000_000), 14).unwrap());
        let disc = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(is_r_tough(&disc, Ratio::from_integer(0), 14).unwrap());
        assert!(!is_r_tough(&disc, Ratio::new(1, 1000), 14).unwrap());
    }

    #[test]
    fn cycles_have_toughness_one() {
        for n in 4..=12 {
            let g = Family::Cycle(n).build().unwrap();
            let t = exact_toughness(&g, 14).unwrap().value();
            assert_eq!(t, Toughness::Finite(Ratio::from_integer(1)), "C{n}");
        }
    }

    #[test]
    fn matches_brute_force_on_small_families() {
        let mut graphs = vec![Family::Petersen.build().unwrap()];
        for n in 2..=8 {
            graphs.push(Family::Path(n).build().unwrap());
        }
        for seed in 0..40 {
            graphs.push(
                Family::Gnp {
                    n: 7,
                    p: 0.45,
                    seed,
                }
                .build()
                .unwrap(),
            );
        }
        for g in graphs {
            let cert = exact_toughness(&g, 14).unwrap();
            match brute_force(&g) {
                None => assert_eq!(cert, ToughnessCertificate::Infinite),
                Some(r) => assert_eq!(cert.value(), Toughness::Finite(r), "{g:?}"),
            }
        }
    }

    #[test]
    fn float_conversion_rounds_down() {
        let t = Toughness::Finite(Ratio::new(1, 3));
        assert!(t.to_f64_lower() < 1.0 / 3.0);
        assert_eq!(t.to_f64_lower().next_up(), 1.0 / 3.0);
        assert_eq!(Toughness::Infinite.to_f64_lower(), f64::INFINITY);
    }

    #[test]
    fn toughness_ordering() {
        assert!(Toughness::Infinite > Toughness::Finite(Ratio::from_integer(1000)));
        assert!(Toughness::Finite(Ratio::new(4, 3)) < Toughness::Finite(Ratio::new(3, 2)));
    }

    #[test]
    fn partition_third_branch() {
        let p = proof_partition(&[1, 1, 2]).unwrap();
        assert_eq!(p.x, vec![0, 1]);
        assert_eq!(p.y, vec![2]);
        assert_eq!((p.x_order, p.y_order), (2, 2));
    }

    #[test]
    fn partition_second_branch() {
        let p = proof_partition(&[2, 2, 3]).unwrap();
        assert_eq!(p.x, vec![0]);
        assert_eq!(p.y, vec![1, 2]);
        assert_eq!((p.x_order, p.y_order), (2, 5));
    }

    #[test]
    fn partition_even_branch() {
        let p = proof_partition(&[1, 2]).unwrap();
        assert_eq!(p.x, vec![0]);
        assert_eq!(p.y, vec![1]);
    }

    #[test]
    fn partition_swaps_sides() {
        // c odd, H_1 singleton -> first two components (order 3) beat the last (order 2)
        let p = proof_partition(&[1, 2, 2]).unwrap();
        assert_eq!(p.x, vec![2]);
        assert_eq!(p.y, vec![0, 1]);
        assert_eq!((p.x_order, p.y_order), (2, 3));
    }

    #[test]
    fn partition_errors() {
        assert_eq!(
            proof_partition(&[1, 1, 1]),
            Err(PartitionError::AllSingletonsOdd)
        );
        assert_eq!(
            proof_partition(&[3]),
            Err(PartitionError::TooFewComponents(1))
        );
        assert_eq!(proof_partition(&[2, 1]), Err(PartitionError::NotAscending));
        assert_eq!(proof_partition(&[0, 1]), Err(PartitionError::NotAscending));
        // even all-singleton is fine
        assert!(proof_partition(&[1, 1, 1, 1]).is_ok());
    }
}
