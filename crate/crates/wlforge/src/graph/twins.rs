use std::collections::BTreeMap;

use super::{ColoredGraph, Coloring};
use crate::error::{invalid, Result};

/// Strong twins share closed neighborhoods, weak twins share open ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinKind {
    Strong,
    Weak,
}

impl TwinKind {
    pub fn name(self) -> &'static str {
        match self {
            TwinKind::Strong => "strong",
            TwinKind::Weak => "weak",
        }
    }
}

/// A partition of the vertex set into twin classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub kind: TwinKind,
    /// Blocks ordered by smallest member, members increasing.
    pub blocks: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// The partition into singletons.
    pub fn discrete(kind: TwinKind, n: usize) -> Self {
        TwinPartition { kind, blocks: (0..n).map(|v| vec![v]).collect() }
    }
}

fn neighborhood_key(g: &ColoredGraph, v: usize, kind: TwinKind) -> Vec<usize> {
    let mut key = g.neighbors(v).to_vec();
    if kind == TwinKind::Strong {
        let at = key.partition_point(|&w| w < v);
        key.insert(at, v);
    }
    key
}

/// Equivalence classes of the chosen twin relation. Colors are ignored.
pub fn twin_partition(g: &ColoredGraph, kind: TwinKind) -> TwinPartition {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        groups.entry(neighborhood_key(g, v, kind)).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
    blocks.sort_unstable_by_key(|b| b[0]);
    TwinPartition { kind, blocks }
}

/// Contracts each block to one vertex. Blocks are adjacent iff some cross
/// edge exists; a block is colored by the multiset of its members' colors.
pub fn quotient(g: &ColoredGraph, pi: &TwinPartition) -> Result<ColoredGraph> {
    let n = g.n();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in pi.blocks.iter().enumerate() {
        if block.is_empty() {
            return invalid(format!("block {b} is empty"));
        }
        for &v in block {
            if v >= n {
                return invalid(format!("block {b} mentions vertex {v} outside 0..{n}"));
            }
            if block_of[v] != usize::MAX {
                return invalid(format!("vertex {v} appears in two blocks"));
            }
            block_of[v] = b;
        }
        let key = neighborhood_key(g, block[0], pi.kind);
        if let Some(&w) = block.iter().find(|&&w| neighborhood_key(g, w, pi.kind) != key) {
            return invalid(format!(
                "vertices {} and {w} in block {b} are not {} twins",
                block[0],
                pi.kind.name()
            ));
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return invalid(format!("vertex {v} is not covered by the partition"));
    }
    let m = pi.blocks.len();
    let mut adj = vec![Vec::new(); m];
    for (u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let keys: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .map(|block| {
            let mut colors: Vec<usize> = block.iter().map(|&v| g.color(v)).collect();
            colors.sort_unstable();
            colors
        })
        .collect();
    Ok(ColoredGraph::from_adjacency(adj, Coloring::from_keys(&keys)))
}
