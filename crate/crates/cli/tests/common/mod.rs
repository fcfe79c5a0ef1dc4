//! Corpus and brute-force oracles shared by the acceptance suite. The
//! oracles here share no code with the library searches.

use spectough_core::graph::{Family, Graph};
use spectough_core::Ratio;

/// Every ordered composition of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Complete multipartite graphs of order `n` with at least two parts and
/// not every part a singleton, one per ordered composition.
pub fn multipartite_family(n: usize) -> Vec<(Vec<usize>, Graph)> {
    compositions(n)
        .into_iter()
        .filter(|p| p.len() >= 2 && p.iter().any(|&x| x > 1))
        .map(|p| {
            let g = Family::CompleteMultipartite(p.clone()).build().unwrap();
            (p, g)
        })
        .collect()
}

const GNP_DRAWS: usize = 4000;
const GNP_P: [f64; 5] = [0.3, 0.45, 0.6, 0.75, 0.9];

/// The soundness corpus: cycles, paths and stars up to 12 vertices, complete
/// multipartite graphs up to 10, then seeded `G(n, p)` draws with
/// `n = 5 + i mod 8`, `p` cycling through `GNP_P` and seed `i`, keeping the
/// first 4000 that are connected and not complete.
pub fn corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 4..=12 {
        out.push(Family::Cycle(n).build().unwrap());
    }
    for n in 3..=12 {
        out.push(Family::Path(n).build().unwrap());
    }
    for n in 3..=12 {
        out.push(
            Family::CompleteMultipartite(vec![n - 1, 1])
                .build()
                .unwrap(),
        );
    }
    for n in 3..=10 {
        out.extend(multipartite_family(n).into_iter().map(|(_, g)| g));
    }
    let mut kept = 0;
    let mut i = 0u64;
    while kept < GNP_DRAWS {
        let n = 5 + (i % 8) as usize;
        let p = GNP_P[(i % 5) as usize];
        let g = Family::Gnp { n, p, seed: i }.build().unwrap();
        if g.is_connected() && !g.is_complete() {
            out.push(g);
            kept += 1;
        }
        i += 1;
    }
    out
}

/// Toughness by trying every vertex subset, counting components of the
/// remainder with an explicit stack. `None` for complete graphs.
pub fn toughness_exhaustive(g: &Graph) -> Option<Ratio<u64>> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).collect())
        .collect();
    let mut best: Option<Ratio<u64>> = None;
    for mask in 0u64..(1 << n) {
        let mut seen: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let mut comps = 0u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            comps += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        if comps >= 2 {
            let t = Ratio::new(u64::from(mask.count_ones()), comps);
            best = Some(best.map_or(t, |b| b.min(t)));
        }
    }
    best
}

/// Independence number by scanning every vertex subset.
pub fn independence_exhaustive(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u64..(1 << g.n()))
        .filter(|m| {
            edges
                .iter()
                .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
