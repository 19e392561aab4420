//! Cai–Fürer–Immerman gadget graphs, exact treewidth of small graphs, and
//! the k-WL indistinguishability experiment.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{families, ColoredGraph, Coloring};
use crate::wl::distinguish;

/// Largest base accepted by [`treewidth_exact`].
pub const TREEWIDTH_CAP: usize = 16;

/// A CFI graph over `base` with twist set `twist`.
///
/// Gadget vertex `i` of the derived graph is `tags[i] = (v, mask)`: bit `j`
/// of `mask` says whether the `j`-th edge at `v` (incident edges sorted by
/// `(min, max)` endpoint) belongs to the edge subset. Vertices are ordered
/// by base vertex, then by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfiInstance {
    pub base: ColoredGraph,
    pub twist: Vec<usize>,
    pub graph: ColoredGraph,
    pub tags: Vec<(usize, u64)>,
}

impl CfiInstance {
    /// The derived graph with every vertex colored alike.
    pub fn uncolored(&self) -> ColoredGraph {
        self.graph.uncolored_copy()
    }

    /// Number of derived vertices per base vertex.
    pub fn gadget_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.base.n()];
        for &(v, _) in &self.tags {
            sizes[v] += 1;
        }
        sizes
    }
}

/// Builds CFI(base, U). Gadget vertices inherit the color of their base
/// vertex. Each base vertex of degree `d` contributes `2^(d-1)` vertices.
pub fn cfi(base: &ColoredGraph, twist: &[usize]) -> Result<CfiInstance> {
    let n = base.n();
    if !base.is_connected() {
        return invalid("the CFI base graph must be connected");
    }
    let mut in_twist = vec![false; n];
    for &u in twist {
        if u >= n {
            return invalid(format!("twist vertex {u} outside 0..{n}"));
        }
        in_twist[u] = true;
    }
    if let Some(v) = (0..n).find(|&v| base.degree(v) > 20) {
        return Err(Error::Cap(format!("CFI gadget at vertex {v} has degree above 20")));
    }
    let mut twist_set: Vec<usize> = twist.to_vec();
    twist_set.sort_unstable();
    twist_set.dedup();

    // Neighbor lists are sorted, and every edge at v has v as one endpoint,
    // so sorting by the other endpoint is sorting by (min, max).
    let mut tags = Vec::new();
    let mut first = vec![0usize; n];
    for v in 0..n {
        first[v] = tags.len();
        let d = base.degree(v);
        let parity = u32::from(in_twist[v]);
        for mask in 0..(1u64 << d) {
            if mask.count_ones() % 2 == parity {
                tags.push((v, mask));
            }
        }
    }
    let total = tags.len();
    let mut edges = Vec::new();
    for (u, w) in base.edges() {
        let bu = base.neighbors(u).binary_search(&w).expect("edge present");
        let bw = base.neighbors(w).binary_search(&u).expect("edge present");
        let end_u = if u + 1 < n { first[u + 1] } else { total };
        let end_w = if w + 1 < n { first[w + 1] } else { total };
        for i in first[u]..end_u {
            for j in first[w]..end_w {
                if (tags[i].1 >> bu & 1) == (tags[j].1 >> bw & 1) {
                    edges.push((i, j));
                }
            }
        }
    }
    let keys: Vec<usize> = tags.iter().map(|&(v, _)| base.color(v)).collect();
    let graph = ColoredGraph::new(total, &edges, Coloring::from_keys(&keys))?;
    Ok(CfiInstance { base: base.clone(), twist: twist_set, graph, tags })
}

/// CFI(base, {0}), the twisted representative.
pub fn twisted_cfi(base: &ColoredGraph) -> Result<CfiInstance> {
    cfi(base, &[0])
}

/// For `v` outside `set` (a bitmask), the number of vertices outside
/// `set ∪ {v}` reachable from `v` through `set`.
fn boundary(g: &ColoredGraph, set: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    let mut count = 0;
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            let bit = 1u32 << y;
            if seen & bit != 0 {
                continue;
            }
            seen |= bit;
            if set & bit != 0 {
                stack.push(y);
            } else {
                count += 1;
            }
        }
    }
    count
}

/// Exact treewidth by dynamic programming over vertex subsets: eliminating
/// the set `S` first costs `TW(S) = min over v in S of
/// max(TW(S - v), q(S - v, v))`, with `q` the boundary size above.
pub fn treewidth_exact(g: &ColoredGraph) -> Result<usize> {
    let n = g.n();
    if n > TREEWIDTH_CAP {
        return Err(Error::Cap(format!("treewidth accepts n <= {TREEWIDTH_CAP}, got {n}")));
    }
    let full = (1usize << n) - 1;
    let mut tw = vec![u32::MAX; full + 1];
    tw[0] = 0;
    for set in 1..=full {
        let mut best = u32::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = set & !(1 << v);
            let prev = tw[without];
            if prev >= best {
                continue;
            }
            best = best.min(prev.max(boundary(g, without as u32, v)));
        }
        tw[set] = best;
    }
    Ok(tw[full] as usize)
}

/// The base graphs used by the experiment, all connected and 3-regular.
pub fn base_library() -> Vec<(&'static str, ColoredGraph)> {
    vec![
        ("K4", families::complete(4)),
        ("K3,3", families::complete_bipartite(3, 3)),
        ("prism", families::prism()),
        ("petersen", families::petersen()),
        ("mobius-kantor", families::mobius_kantor()),
    ]
}

/// One experiment row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentRecord {
    pub base: String,
    pub k: usize,
    pub distinguished: bool,
    pub tw: usize,
}

/// Outcome of comparing CFI(base, ∅) with the twisted graph for k = 1..=k_max.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub base: String,
    pub tw: usize,
    pub records: Vec<ExperimentRecord>,
    pub min_distinguishing_k: Option<usize>,
    /// False iff some `k < tw` distinguished the pair.
    pub bound_respected: bool,
}

pub fn indistinguishability_experiment(
    name: &str,
    base: &ColoredGraph,
    k_max: usize,
) -> Result<ExperimentReport> {
    if !(1..=3).contains(&k_max) {
        return invalid(format!("k_max must be 1, 2 or 3, got {k_max}"));
    }
    let tw = treewidth_exact(base)?;
    let plain = cfi(base, &[])?;
    let twisted = twisted_cfi(base)?;
    let mut records = Vec::new();
    for k in 1..=k_max {
        let distinguished = distinguish(&plain.graph, &twisted.graph, k)?;
        records.push(ExperimentRecord { base: name.to_string(), k, distinguished, tw });
    }
    let min_distinguishing_k = records.iter().find(|r| r.distinguished).map(|r| r.k);
    let bound_respected = records.iter().all(|r| !(r.distinguished && r.k < tw));
    Ok(ExperimentReport { base: name.to_string(), tw, records, min_distinguishing_k, bound_respected })
}
