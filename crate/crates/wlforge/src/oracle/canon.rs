use crate::error::{Error, Result};
use crate::graph::{twin_partition, ColoredGraph, Coloring, TwinKind};
use crate::wl::refine_1wl;

/// Largest `n` accepted by [`canonical_form`].
pub const CANON_CAP: usize = 10;
/// Largest `n` accepted by [`find_isomorphism`].
pub const ISO_CAP: usize = 20;

/// Isomorphism-invariant encoding of a colored graph: the lexicographically
/// smallest (colors, adjacency) reading over the orderings reached by
/// individualization and refinement. Two colored graphs are isomorphic iff
/// their forms are equal, color ids being compared as names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub colors: Vec<usize>,
    /// Upper-triangle adjacency bits in row-major order, packed into words.
    pub adjacency: Vec<u64>,
}

/// For every vertex, the ids of its strong and weak twin blocks. Swapping
/// two same-colored twins is an automorphism, so search only needs one of
/// them.
fn twin_ids(g: &ColoredGraph) -> Vec<(usize, usize)> {
    let mut ids = vec![(0, 0); g.n()];
    for (i, block) in twin_partition(g, TwinKind::Strong).blocks.iter().enumerate() {
        for &v in block {
            ids[v].0 = i;
        }
    }
    for (i, block) in twin_partition(g, TwinKind::Weak).blocks.iter().enumerate() {
        for &v in block {
            ids[v].1 = i;
        }
    }
    ids
}

/// Members of `cell` with no earlier twin in the cell.
fn prune_twins(cell: &[usize], twins: &[(usize, usize)]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &u in cell {
        if !out.iter().any(|&p| twins[p].0 == twins[u].0 || twins[p].1 == twins[u].1) {
            out.push(u);
        }
    }
    out
}

fn form_of(g: &ColoredGraph, order: &Coloring) -> CanonicalForm {
    let n = g.n();
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[order.color(v)] = v;
    }
    let colors = at.iter().map(|&v| g.color(v)).collect();
    let mut adjacency = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(at[i], at[j]) {
                adjacency[bit / 64] |= 1 << (bit % 64);
            }
            bit += 1;
        }
    }
    CanonicalForm { n, colors, adjacency }
}

fn canon_search(
    g: &ColoredGraph,
    twins: &[(usize, usize)],
    current: &ColoredGraph,
    best: &mut Option<CanonicalForm>,
) {
    let stable = current.with_coloring(refine_1wl(current)).expect("same length");
    let coloring = stable.coloring();
    if coloring.is_discrete() {
        let form = form_of(g, coloring);
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    let classes = coloring.classes();
    let cell = classes.iter().find(|c| c.len() > 1).expect("non-discrete coloring");
    for u in prune_twins(cell, twins) {
        let next = stable.individualize(&[u]).expect("vertex in range");
        canon_search(g, twins, &next, best);
    }
}

/// Canonical form of a colored graph on at most [`CANON_CAP`] vertices.
pub fn canonical_form(g: &ColoredGraph) -> Result<CanonicalForm> {
    if g.n() > CANON_CAP {
        return Err(Error::Cap(format!(
            "canonical form accepts n <= {CANON_CAP}, got {}",
            g.n()
        )));
    }
    let twins = twin_ids(g);
    let mut best = None;
    canon_search(g, &twins, g, &mut best);
    Ok(best.expect("search reaches a discrete coloring"))
}

/// True iff `map` is a color-preserving isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &ColoredGraph, h: &ColoredGraph, map: &[usize]) -> bool {
    let n = g.n();
    if h.n() != n || map.len() != n || g.num_edges() != h.num_edges() {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    (0..n).all(|v| g.color(v) == h.color(map[v]))
        && g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}

fn iso_search(
    g: &ColoredGraph,
    h: &ColoredGraph,
    union: &ColoredGraph,
    twins_h: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = g.n();
    let stable = union.with_coloring(refine_1wl(union)).expect("same length");
    let classes = stable.coloring().classes();
    for class in &classes {
        let left = class.iter().filter(|&&v| v < n).count();
        if 2 * left != class.len() {
            return None;
        }
    }
    match classes.iter().find(|c| c.len() > 2) {
        None => {
            let mut map = vec![0; n];
            for class in &classes {
                map[class[0]] = class[1] - n;
            }
            is_isomorphism(g, h, &map).then_some(map)
        }
        Some(class) => {
            let v = class[0];
            let targets: Vec<usize> = class.iter().copied().filter(|&w| w >= n).collect();
            let targets_h: Vec<usize> = targets.iter().map(|&w| w - n).collect();
            for w in prune_twins(&targets_h, twins_h) {
                let keys: Vec<(u8, usize)> = (0..2 * n)
                    .map(|x| if x == v || x == w + n { (1, 0) } else { (0, stable.color(x)) })
                    .collect();
                let next = stable.with_coloring(Coloring::from_keys(&keys)).expect("same length");
                if let Some(map) = iso_search(g, h, &next, twins_h) {
                    return Some(map);
                }
            }
            None
        }
    }
}

/// A color-preserving isomorphism `g -> h` if one exists (`map[v]` is the
/// image of `v`). Backtracks over individualizations of the disjoint union,
/// pruning branches whose color classes are unbalanced between the sides.
pub fn find_isomorphism(g: &ColoredGraph, h: &ColoredGraph) -> Result<Option<Vec<usize>>> {
    let n = g.n().max(h.n());
    if n > ISO_CAP {
        return Err(Error::Cap(format!("isomorphism search accepts n <= {ISO_CAP}, got {n}")));
    }
    if g.n() != h.n() || g.num_edges() != h.num_edges() {
        return Ok(None);
    }
    let twins_h = twin_ids(h);
    Ok(iso_search(g, h, &g.disjoint_union(h), &twins_h))
}

/// [`find_isomorphism`] without the size cap, for internal checks on
/// graphs whose refinement is known to be cheap.
pub(crate) fn isomorphic_uncapped(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    if g.n() != h.n() || g.num_edges() != h.num_edges() {
        return false;
    }
    iso_search(g, h, &g.disjoint_union(h), &twin_ids(h)).is_some()
}
