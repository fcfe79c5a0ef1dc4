//! Exhaustive combinatorial oracles for small graphs.
//!
//! All searches are deterministic backtracking over vertex bitmasks. Each
//! takes an explicit order cap and refuses larger inputs.

use std::collections::HashSet;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Cap for perfect matchings, spanning trees and Hamilton cycles.
pub const DEFAULT_ORACLE_CAP: usize = 16;
/// Cap for oracles that repeat a matching search per subset (m-extendability,
/// factor-criticality).
pub const DEFAULT_SMALL_ORACLE_CAP: usize = 12;
/// Cap for the edge-subset `[a,b]`-factor search.
pub const DEFAULT_FACTOR_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the oracle cap {cap}")]
    Capacity { n: usize, cap: usize },
    #[error("the graph must have an even number of vertices, got {0}")]
    OddOrder(usize),
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    if g.n() > cap {
        Err(OracleError::Capacity { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Perfect matching on the subgraph induced by `within`, matching the lowest
/// unmatched vertex first. Failed masks are memoised.
pub(crate) fn perfect_matching_within(g: &Graph, within: VertexSet) -> bool {
    fn go(g: &Graph, rest: u64, failed: &mut HashSet<u64>) -> bool {
        if rest == 0 {
            return true;
        }
        if failed.contains(&rest) {
            return false;
        }
        let rest_set = VertexSet::from_bits(rest);
        if rest_set
            .iter()
            .any(|w| g.neighbors(w).intersection(rest_set).is_empty())
        {
            failed.insert(rest);
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        for u in g.neighbors(v).intersection(rest_set) {
            if go(g, rest & !(1 << v) & !(1 << u), failed) {
                return true;
            }
        }
        failed.insert(rest);
        false
    }
    within.len().is_multiple_of(2) && go(g, within.bits(), &mut HashSet::new())
}

pub fn has_perfect_matching(g: &Graph, cap: usize) -> Result<bool, OracleError> {
    if g.n() % 2 == 1 {
        return Err(OracleError::OddOrder(g.n()));
    }
    check_cap(g, cap)?;
    Ok(perfect_matching_within(g, g.vertices()))
}

/// Spanning tree with every degree at most `k`.
///
/// The tree grows from vertex 0. At each step the smallest outside vertex
/// `v` that can still attach to the current tree either attaches through one
/// of its tree neighbours with spare degree, or has all its edges to the
/// current tree banned. Every outside vertex must stay reachable from the
/// tree through non-banned edges.
pub fn has_spanning_tree_max_degree(g: &Graph, k: usize, cap: usize) -> Result<bool, OracleError> {
    if k < 2 {
        return Err(OracleError::Parameters(format!("degree bound {k} < 2")));
    }
    check_cap(g, cap)?;
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let n = g.n();
    let mut deg = vec![0usize; n];
    let mut banned = vec![0u64; n];
    Ok(grow_tree(g, k, 1, &mut deg, &mut banned))
}

fn grow_tree(g: &Graph, k: usize, tree: u64, deg: &mut [usize], banned: &mut [u64]) -> bool {
    let all = g.vertices().bits();
    if tree == all {
        return true;
    }
    let open: u64 = VertexSet::from_bits(tree)
        .iter()
        .filter(|&u| deg[u] < k)
        .fold(0, |acc, u| acc | 1 << u);

    // outside vertices with an allowed edge to an open tree vertex
    let outside = all & !tree;
    let attachable = |w: usize| g.neighbors(w).bits() & open & !banned[w];
    let seeds = VertexSet::from_bits(outside)
        .iter()
        .filter(|&w| attachable(w) != 0)
        .fold(0u64, |acc, w| acc | 1 << w);
    if seeds == 0 {
        return false;
    }
    let mut reached = seeds;
    let mut frontier = seeds;
    while frontier != 0 {
        let mut next = 0;
        for w in VertexSet::from_bits(frontier) {
            next |= g.neighbors(w).bits();
        }
        next &= outside & !reached;
        reached |= next;
        frontier = next;
    }
    if reached != outside {
        return false;
    }

    let v = seeds.trailing_zeros() as usize;
    for u in VertexSet::from_bits(attachable(v)) {
        deg[u] += 1;
        deg[v] = 1;
        if grow_tree(g, k, tree | 1 << v, deg, banned) {
            return true;
        }
        deg[u] -= 1;
        deg[v] = 0;
    }
    let saved = banned[v];
    banned[v] |= tree;
    let found = grow_tree(g, k, tree, deg, banned);
    banned[v] = saved;
    found
}

/// Hamilton cycle through vertex 0, extended one vertex at a time.
///
/// Pruning: every unvisited vertex needs two usable neighbours among the
/// unvisited vertices and the two path ends, and the unvisited vertices
/// together with the path ends must stay connected.
pub fn has_hamilton_cycle(g: &Graph, cap: usize) -> Result<bool, OracleError> {
    let n = g.n();
    if n < 3 {
        return Err(OracleError::Parameters(format!(
            "Hamilton cycle needs n >= 3, got {n}"
        )));
    }
    check_cap(g, cap)?;
    if g.min_degree() < 2 || !g.is_connected() {
        return Ok(false);
    }
    Ok(extend_cycle(g, 0, 1))
}

fn extend_cycle(g: &Graph, end: usize, visited: u64) -> bool {
    let all = g.vertices().bits();
    if visited == all {
        return g.has_edge(end, 0);
    }
    let unvisited = all & !visited;
    let usable = unvisited | 1 | 1 << end;
    for w in VertexSet::from_bits(unvisited) {
        if (g.neighbors(w).bits() & usable).count_ones() < 2 {
            return false;
        }
    }
    let region = VertexSet::from_bits(usable);
    if g.reach_within(end, region) != region {
        return false;
    }
    for w in g
        .neighbors(end)
        .intersection(VertexSet::from_bits(unvisited))
    {
        if extend_cycle(g, w, visited | 1 << w) {
            return true;
        }
    }
    false
}

/// Every matching with exactly `m` edges extends to a perfect matching, and
/// a perfect matching exists.
pub fn is_m_extendable(g: &Graph, m: usize, cap: usize) -> Result<bool, OracleError> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(OracleError::OddOrder(n));
    }
    if m == 0 || 2 * m + 2 >= n {
        return Err(OracleError::Parameters(format!(
            "m-extendability needs 1 <= m < n/2 - 1, got m = {m}, n = {n}"
        )));
    }
    check_cap(g, cap)?;
    if !perfect_matching_within(g, g.vertices()) {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Ok(all_matchings_extend(g, &edges, 0, m, VertexSet::EMPTY))
}

fn all_matchings_extend(
    g: &Graph,
    edges: &[(usize, usize)],
    from: usize,
    left: usize,
    used: VertexSet,
) -> bool {
    if left == 0 {
        return perfect_matching_within(g, g.vertices().difference(used));
    }
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if used.contains(u) || used.contains(v) {
            continue;
        }
        let mut next = used;
        next.insert(u);
        next.insert(v);
        if !all_matchings_extend(g, edges, i + 1, left - 1, next) {
            return false;
        }
    }
    true
}

/// Spanning subgraph with every degree in `[a, b]`.
///
/// Edges are decided in `(u, v)` order; a vertex is finished once its last
/// incident edge has been decided, and partial assignments are cut as soon
/// as some degree exceeds `b` or can no longer reach `a`.
pub fn has_factor(g: &Graph, a: usize, b: usize, cap: usize) -> Result<bool, OracleError> {
    if a == 0 || a > b {
        return Err(OracleError::Parameters(format!(
            "need 1 <= a <= b, got [{a},{b}]"
        )));
    }
    check_cap(g, cap)?;
    if g.min_degree() < a {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut remaining: Vec<usize> = g.degrees().collect();
    let mut deg = vec![0usize; g.n()];
    Ok(choose_edges(&edges, 0, a, b, &mut deg, &mut remaining))
}

fn choose_edges(
    edges: &[(usize, usize)],
    i: usize,
    a: usize,
    b: usize,
    deg: &mut [usize],
    remaining: &mut [usize],
) -> bool {
    let Some(&(u, v)) = edges.get(i) else {
        return deg.iter().all(|&d| (a..=b).contains(&d));
    };
    remaining[u] -= 1;
    remaining[v] -= 1;
    let mut found = false;
    if deg[u] < b && deg[v] < b {
        deg[u] += 1;
        deg[v] += 1;
        found = choose_edges(edges, i + 1, a, b, deg, remaining);
        deg[u] -= 1;
        deg[v] -= 1;
    }
    if !found && deg[u] + remaining[u] >= a && deg[v] + remaining[v] >= a {
        found = choose_edges(edges, i + 1, a, b, deg, remaining);
    }
    remaining[u] += 1;
    remaining[v] += 1;
    found
}

/// `G - X` has a perfect matching for every `X` with `|X| = s`.
/// `s = 1` on odd orders is plain factor-criticality.
pub fn is_1s_factor_critical(g: &Graph, s: usize, cap: usize) -> Result<bool, OracleError> {
    let n = g.n();
    if s == 0 || s >= n {
        return Err(OracleError::Parameters(format!(
            "need 1 <= s < n, got s = {s}, n = {n}"
        )));
    }
    if (n + s) % 2 == 1 {
        return Err(OracleError::Parameters(format!(
            "n + s must be even, got n = {n}, s = {s}"
        )));
    }
    check_cap(g, cap)?;
    Ok((0..n).combinations(s).all(|x| {
        let removed: VertexSet = x.into_iter().collect();
        perfect_matching_within(g, g.vertices().difference(removed))
    }))
}

/// Size of a largest independent set.
pub fn independence_number(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    check_cap(g, cap)?;
    fn mis(g: &Graph, p: VertexSet) -> usize {
        let Some(v) = p.first() else { return 0 };
        let nbrs = g.neighbors(v).intersection(p);
        let mut without_v = p;
        without_v.remove(v);
        let take = 1 + mis(g, without_v.difference(nbrs));
        if nbrs.is_empty() {
            take
        } else {
            take.max(mis(g, without_v))
        }
    }
    Ok(mis(g, g.vertices()))
}
