//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbour mask per vertex.

mod generators;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use generators::{Family, FamilyError};
pub use graph6::{
    parse_graph6, parse_graph6_with_cap, write_graph6, Graph6Error, GRAPH6_MAX_ORDER,
};

/// Largest order representable with one-word vertex sets.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyVertexSet,
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("edge ({0}, {1}) refers to a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid cut: the removed set covers every vertex")]
    InvalidCut,
}

/// A set of vertices in `0..64`, with bitset semantics.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Rows must be symmetric, loop-free and confined to `0..adj.len()`.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        let edge_count = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        let g = Graph { adj, edge_count };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = VertexSet::full(self.n()).bits();
        self.adj.iter().enumerate().all(|(u, &row)| {
            row & !all == 0
                && (row >> u) & 1 == 0
                && VertexSet(row).iter().all(|v| (self.adj[v] >> u) & 1 == 1)
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(|r| r.count_ones() as usize)
    }

    /// Minimum degree δ.
    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &row)| {
            VertexSet(row & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * (n - 1) / 2
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n()).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| !row & all & !(1u64 << u))
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Vertices reachable from `start` inside `within`. `start` must lie in `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Number of components of the subgraph induced on `within`.
    pub fn count_components_within(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest = rest.difference(self.reach_within(v, rest));
            count += 1;
        }
        count
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        sorted_components(self, self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Components of `G - s`, sorted by size and then by smallest member.
    pub fn components_after_removal(&self, s: VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        let rest = self.vertices().difference(s);
        if rest.is_empty() {
            return Err(GraphError::InvalidCut);
        }
        Ok(sorted_components(self, rest))
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in vertex order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let order: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        check_order(order.len())?;
        let mut pos = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.0)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1 << pos[w])
            })
            .collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u, v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph::from_rows_unchecked(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::EmptyVertexSet)
    } else if n > MAX_ORDER {
        Err(GraphError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

fn sorted_components(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut rest = within;
    let mut comps = Vec::new();
    while let Some(v) = rest.first() {
        let c = g.reach_within(v, rest);
        rest = rest.difference(c);
        comps.push(c);
    }
    comps.sort_by_key(|c| (c.len(), c.first()));
    comps
}
