use std::collections::HashSet;

use super::{is_stable, refine_2wl};
use crate::error::{precondition, Result};
use crate::flip::is_flipped;
use crate::graph::ColoredGraph;

/// Pair-color statistics of a 2-WL-stable colored graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStats {
    /// `mu[c1][c2]`: distinct stable pair colors on `(v1, v2)` with
    /// `v1` in class `c1`, `v2` in class `c2`, `v1 != v2`.
    pub mu: Vec<Vec<usize>>,
    /// `xi[c1] = sum over c2 of (mu[c1][c2] - 1)`.
    pub xi: Vec<i64>,
    /// Class graph with self-loops: `class_graph[c1][c2]` iff an edge joins
    /// the two classes.
    pub class_graph: Vec<Vec<bool>>,
}

impl PairStats {
    pub fn class_degree(&self, c: usize) -> usize {
        self.class_graph[c].iter().filter(|&&e| e).count()
    }
}

/// Class graph of the coloring, with a loop at `c` iff class `c` spans an edge.
pub fn class_graph(g: &ColoredGraph) -> Vec<Vec<bool>> {
    let m = g.num_colors();
    let mut adj = vec![vec![false; m]; m];
    for (u, v) in g.edges() {
        let (a, b) = (g.color(u), g.color(v));
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

/// Number of classes joined to `c` by an edge, counting `c` itself.
pub fn class_degree(g: &ColoredGraph, c: usize) -> usize {
    let mut seen = vec![false; g.num_colors()];
    for v in 0..g.n() {
        if g.color(v) == c {
            for &w in g.neighbors(v) {
                seen[g.color(w)] = true;
            }
        }
    }
    seen.into_iter().filter(|&s| s).count()
}

/// Computes mu, xi and the class graph. The vertex coloring must already be
/// stable under 2-WL; unstable inputs are rejected rather than refined.
pub fn pair_stats(g: &ColoredGraph) -> Result<PairStats> {
    let pairs = refine_2wl(g)?;
    if !pairs.vertex_coloring().same_partition(g.coloring()) {
        return precondition("pair statistics need a 2-WL-stable vertex coloring");
    }
    let m = g.num_colors();
    let n = g.n();
    let mut seen: Vec<HashSet<usize>> = vec![HashSet::new(); m * m];
    for v in 0..n {
        for w in 0..n {
            if v != w {
                seen[g.color(v) * m + g.color(w)].insert(pairs.color(v, w));
            }
        }
    }
    let mu: Vec<Vec<usize>> =
        (0..m).map(|a| (0..m).map(|b| seen[a * m + b].len()).collect()).collect();
    let xi = mu.iter().map(|row| row.iter().map(|&x| x as i64 - 1).sum()).collect();
    Ok(PairStats { mu, xi, class_graph: class_graph(g) })
}

/// Connected, flipped and k-WL-stable.
pub fn is_k_robust(g: &ColoredGraph, k: usize) -> Result<bool> {
    Ok(g.is_connected() && is_flipped(g) && is_stable(g, k)?)
}

/// Connected, flipped, more than one vertex, and 2-WL-stable.
pub fn is_nice(g: &ColoredGraph) -> Result<bool> {
    Ok(g.n() > 1 && g.is_connected() && is_flipped(g) && is_stable(g, 2)?)
}
