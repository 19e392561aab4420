//! Named graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use super::ColoredGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
    ColoredGraph::uncolored(n, edges).expect("family generators produce simple graphs")
}

pub fn empty(n: usize) -> ColoredGraph {
    build(n, &[])
}

pub fn complete(n: usize) -> ColoredGraph {
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    build(n, &edges)
}

pub fn path(n: usize) -> ColoredGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> ColoredGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> ColoredGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> ColoredGraph {
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j])
        .collect();
    build(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> ColoredGraph {
    complete_multipartite(&[a, b])
}

/// Generalized Petersen graph GP(n, k): outer cycle, spokes, inner star polygon.
pub fn generalized_petersen(n: usize, k: usize) -> ColoredGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    build(2 * n, &edges)
}

pub fn petersen() -> ColoredGraph {
    generalized_petersen(5, 2)
}

pub fn mobius_kantor() -> ColoredGraph {
    generalized_petersen(8, 3)
}

/// The triangular prism C3 x K2.
pub fn prism() -> ColoredGraph {
    generalized_petersen(3, 1)
}

/// The rook graph on a 2 x m board: vertex `(i, j)` is `i * m + j`, two
/// vertices are adjacent iff they share a row or a column.
pub fn rook_2m(m: usize) -> ColoredGraph {
    let mut edges = Vec::new();
    for a in 0..2 * m {
        for b in (a + 1)..2 * m {
            if a / m == b / m || a % m == b % m {
                edges.push((a, b));
            }
        }
    }
    build(2 * m, &edges)
}

/// Disjoint union of monochromatic graphs.
pub fn disjoint_union(parts: &[ColoredGraph]) -> ColoredGraph {
    let mut edges = Vec::new();
    let mut shift = 0;
    for g in parts {
        edges.extend(g.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        shift += g.n();
    }
    build(shift, &edges)
}

/// Graph whose edge set is given by a bitmask over pairs `(i, j)`, `i < j`,
/// in column order (the graph6 bit order).
pub fn from_pair_mask(n: usize, mask: u64) -> ColoredGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    build(n, &edges)
}

/// Erdős–Rényi graph G(n, p).
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> ColoredGraph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    build(n, &edges)
}

/// Uniform random labeled tree (random Prüfer sequence).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> ColoredGraph {
    if n <= 2 {
        return path(n.max(1));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(n, &edges)
}

/// Random forest: a random tree with each edge kept with probability `keep`.
pub fn random_forest<R: Rng>(n: usize, keep: f64, rng: &mut R) -> ColoredGraph {
    let tree = random_tree(n, rng);
    let edges: Vec<_> = tree.edges().into_iter().filter(|_| rng.gen_bool(keep)).collect();
    build(n, &edges)
}

/// Random connected graph: a random spanning tree plus G(n, p) edges.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> ColoredGraph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    build(n, &edges)
}

/// Random d-regular graph by the configuration model with restarts; `None`
/// if `n * d` is odd or no simple pairing was found.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<ColoredGraph> {
    if n * d % 2 == 1 || d >= n {
        return None;
    }
    'attempt: for _ in 0..200 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(rng);
        let mut edges = Vec::with_capacity(n * d / 2);
        let mut seen = std::collections::HashSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Some(build(n, &edges));
    }
    None
}

/// Relabels vertices by a uniformly random permutation.
pub fn shuffled<R: Rng>(g: &ColoredGraph, rng: &mut R) -> ColoredGraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}
