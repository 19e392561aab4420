//! Flip functions and the canonical majority flip.

use crate::error::{invalid, Result};
use crate::graph::{ColoredGraph, Coloring};

/// Symmetric boolean table over pairs of color ids `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipFunction {
    m: usize,
    table: Vec<bool>,
}

impl FlipFunction {
    pub fn zeros(num_colors: usize) -> Self {
        FlipFunction { m: num_colors, table: vec![false; num_colors * num_colors] }
    }

    pub fn ones(num_colors: usize) -> Self {
        FlipFunction { m: num_colors, table: vec![true; num_colors * num_colors] }
    }

    /// Table with value 1 exactly on the listed unordered pairs.
    pub fn from_pairs(num_colors: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut f = Self::zeros(num_colors);
        for &(a, b) in pairs {
            if a >= num_colors || b >= num_colors {
                return invalid(format!("flip pair ({a},{b}) outside 0..{num_colors}"));
            }
            f.set(a, b, true);
        }
        Ok(f)
    }

    pub fn num_colors(&self) -> usize {
        self.m
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.table[a * self.m + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        self.table[a * self.m + b] = value;
        self.table[b * self.m + a] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&x| !x)
    }

    /// Pairs `(a, b)` with `a <= b` where the table is 1.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in a..self.m {
                if self.get(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Lifts a flip function on `coarse` to the finer coloring `fine`: each
    /// fine pair takes the value of the coarse pair containing it.
    pub fn lift(&self, coarse: &Coloring, fine: &Coloring) -> Result<FlipFunction> {
        if coarse.num_colors() != self.m {
            return invalid("flip function domain does not match the coarse coloring");
        }
        if !fine.refines(coarse) {
            return invalid("the fine coloring does not refine the coarse one");
        }
        let mut parent = vec![0usize; fine.num_colors()];
        for v in 0..fine.len() {
            parent[fine.color(v)] = coarse.color(v);
        }
        let mut out = FlipFunction::zeros(fine.num_colors());
        for a in 0..fine.num_colors() {
            for b in 0..fine.num_colors() {
                out.table[a * out.m + b] = self.get(parent[a], parent[b]);
            }
        }
        Ok(out)
    }
}

/// Complements adjacency on every vertex pair whose color pair has value 1.
pub fn apply_flip(g: &ColoredGraph, f: &FlipFunction) -> Result<ColoredGraph> {
    if f.num_colors() != g.num_colors() {
        return invalid(format!(
            "flip function over {} colors applied to a graph with {} colors",
            f.num_colors(),
            g.num_colors()
        ));
    }
    Ok(apply_flip_unchecked(g, f))
}

pub(crate) fn apply_flip_unchecked(g: &ColoredGraph, f: &FlipFunction) -> ColoredGraph {
    let n = g.n();
    let mut row = vec![false; n];
    let adj = (0..n)
        .map(|v| {
            for &w in g.neighbors(v) {
                row[w] = true;
            }
            let cv = g.color(v);
            let list: Vec<usize> =
                (0..n).filter(|&w| w != v && (row[w] != f.get(cv, g.color(w)))).collect();
            for &w in g.neighbors(v) {
                row[w] = false;
            }
            list
        })
        .collect();
    ColoredGraph::from_adjacency(adj, g.coloring().clone())
}

/// Edge counts between color classes, indexed `[a * m + b]`, symmetric.
pub(crate) fn class_edge_counts(g: &ColoredGraph) -> Vec<usize> {
    let m = g.num_colors();
    let mut counts = vec![0usize; m * m];
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            if v < w {
                let (a, b) = (g.color(v), g.color(w));
                counts[a * m + b] += 1;
                if a != b {
                    counts[b * m + a] += 1;
                }
            }
        }
    }
    counts
}

/// Value 1 exactly on class pairs where more than half of the available
/// vertex pairs are edges; ties give 0.
pub fn canonical_flip_function(g: &ColoredGraph) -> FlipFunction {
    let m = g.num_colors();
    let sizes = g.coloring().class_sizes();
    let counts = class_edge_counts(g);
    let mut f = FlipFunction::zeros(m);
    for a in 0..m {
        for b in a..m {
            let available = if a == b { sizes[a] * (sizes[a].saturating_sub(1)) / 2 } else { sizes[a] * sizes[b] };
            if 2 * counts[a * m + b] > available {
                f.set(a, b, true);
            }
        }
    }
    f
}

pub fn flip(g: &ColoredGraph) -> ColoredGraph {
    let f = canonical_flip_function(g);
    if f.is_zero() {
        return g.clone();
    }
    apply_flip_unchecked(g, &f)
}

pub fn is_flipped(g: &ColoredGraph) -> bool {
    canonical_flip_function(g).is_zero()
}
