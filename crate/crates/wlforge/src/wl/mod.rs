//! Color refinement and k-dimensional Weisfeiler–Leman refinement.
//!
//! Colors are named by 64-bit fingerprints of their structural signatures:
//! a round-`i+1` name hashes the round-`i` name together with the sorted
//! multiset of neighbor (or substituted-tuple) names. Names are therefore
//! comparable between graphs refined independently, and the dense color ids
//! handed out are the ranks of the names, which makes them canonical.

mod naming;
mod stats;
mod tuples;

pub use stats::{class_degree, class_graph, is_k_robust, is_nice, pair_stats, PairStats};
pub use tuples::{refine_2wl, refine_kwl, KTupleColoring, PairColoring, DEFAULT_MEM_CAP_MB};

use crate::error::{invalid, Result};
use crate::graph::{ColoredGraph, Coloring};
use naming::Fingerprint;

/// The stable 1-WL coloring together with its signature names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRefinement {
    pub coloring: Coloring,
    /// `names[c]` is the signature fingerprint of color `c`; increasing.
    pub names: Vec<u64>,
    /// Rounds of the round-based recurrence up to and including the first
    /// round whose partition equals its predecessor.
    pub rounds: usize,
}

/// Coarsest equitable partition refining the coloring, by worklist splitting.
/// Returns the cell of every vertex and the number of cells; cell ids carry
/// no canonical meaning.
pub(crate) fn stable_cells(g: &ColoredGraph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut elems: Vec<usize> = (0..n).collect();
    elems.sort_by_key(|&v| g.color(v));
    let mut cell_of = vec![0usize; n];
    let mut start = Vec::new();
    let mut len = Vec::new();
    for (i, &v) in elems.iter().enumerate() {
        if i == 0 || g.color(elems[i - 1]) != g.color(v) {
            start.push(i);
            len.push(0);
        }
        let c = start.len() - 1;
        cell_of[v] = c;
        len[c] += 1;
    }
    let mut work: Vec<usize> = (0..start.len()).rev().collect();
    let mut in_work = vec![true; start.len()];
    let mut count = vec![0usize; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut touched_cells: Vec<usize> = Vec::new();
    let mut cell_mark = vec![false; start.len()];
    let mut splitter: Vec<usize> = Vec::new();
    let mut scratch: Vec<usize> = Vec::new();

    while let Some(w) = work.pop() {
        in_work[w] = false;
        splitter.clear();
        splitter.extend_from_slice(&elems[start[w]..start[w] + len[w]]);
        for &x in &splitter {
            for &y in g.neighbors(x) {
                if count[y] == 0 {
                    touched.push(y);
                }
                count[y] += 1;
            }
        }
        for &y in &touched {
            let c = cell_of[y];
            if !cell_mark[c] {
                cell_mark[c] = true;
                touched_cells.push(c);
            }
        }
        touched_cells.sort_unstable();
        for &x in &touched_cells {
            cell_mark[x] = false;
            if len[x] == 1 {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(&elems[start[x]..start[x] + len[x]]);
            let first = count[scratch[0]];
            if scratch.iter().all(|&v| count[v] == first) {
                continue;
            }
            scratch.sort_by_key(|&v| (count[v], v));
            let base = start[x];
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for (i, &v) in scratch.iter().enumerate() {
                elems[base + i] = v;
                if i == 0 || count[scratch[i - 1]] != count[v] {
                    runs.push((base + i, 0));
                }
                runs.last_mut().expect("run exists").1 += 1;
            }
            let largest = (0..runs.len()).max_by_key(|&r| (runs[r].1, usize::MAX - r)).unwrap_or(0);
            let was_queued = in_work[x];
            let mut ids = Vec::with_capacity(runs.len());
            for (r, &(s, l)) in runs.iter().enumerate() {
                let id = if r == 0 {
                    start[x] = s;
                    len[x] = l;
                    x
                } else {
                    start.push(s);
                    len.push(l);
                    in_work.push(false);
                    cell_mark.push(false);
                    start.len() - 1
                };
                for &v in &elems[s..s + l] {
                    cell_of[v] = id;
                }
                ids.push(id);
            }
            for (r, &id) in ids.iter().enumerate() {
                if (was_queued || r != largest) && !in_work[id] {
                    in_work[id] = true;
                    work.push(id);
                }
            }
        }
        touched_cells.clear();
        for &y in &touched {
            count[y] = 0;
        }
        touched.clear();
    }
    (cell_of, start.len())
}

/// True iff the coloring is stable under color refinement (equitable).
pub fn is_equitable(g: &ColoredGraph) -> bool {
    let n = g.n();
    let m = g.num_colors();
    let mut profile: Vec<Option<Vec<usize>>> = vec![None; m];
    let mut counts = vec![0usize; m];
    for v in 0..n {
        for &w in g.neighbors(v) {
            counts[g.color(w)] += 1;
        }
        let c = g.color(v);
        match &profile[c] {
            None => profile[c] = Some(counts.clone()),
            Some(p) => {
                if *p != counts {
                    return false;
                }
            }
        }
        for &w in g.neighbors(v) {
            counts[g.color(w)] = 0;
        }
    }
    true
}

/// Stable 1-WL coloring with canonical names.
///
/// The stable partition comes from worklist refinement; names are then
/// obtained by running the round recurrence on the quotient by that
/// partition, which reproduces the per-round names of the full recurrence
/// because vertices in one stable cell agree in every round.
pub fn color_refinement(g: &ColoredGraph) -> VertexRefinement {
    let (cell_of, cells) = stable_cells(g);
    let n = g.n();
    let mut rep = vec![usize::MAX; cells];
    for v in 0..n {
        if rep[cell_of[v]] == usize::MAX {
            rep[cell_of[v]] = v;
        }
    }
    let mut tally = vec![0usize; cells];
    let profile: Vec<Vec<(usize, usize)>> = rep
        .iter()
        .map(|&r| {
            let mut seen = Vec::new();
            for &w in g.neighbors(r) {
                let d = cell_of[w];
                if tally[d] == 0 {
                    seen.push(d);
                }
                tally[d] += 1;
            }
            seen.iter()
                .map(|&d| {
                    let c = tally[d];
                    tally[d] = 0;
                    (d, c)
                })
                .collect()
        })
        .collect();
    let mut names: Vec<u64> = rep.iter().map(|&r| naming::initial_vertex(g.color(r))).collect();
    let mut distinct = count_distinct(&names);
    let mut rounds = 0;
    let mut buf: Vec<(u64, usize)> = Vec::new();
    loop {
        let next: Vec<u64> = (0..cells)
            .map(|c| {
                buf.clear();
                buf.extend(profile[c].iter().map(|&(d, k)| (names[d], k)));
                buf.sort_unstable();
                let mut fp = Fingerprint::new(naming::TAG_1WL);
                fp.add(names[c]);
                let mut i = 0;
                while i < buf.len() {
                    let (name, mut k) = buf[i];
                    i += 1;
                    while i < buf.len() && buf[i].0 == name {
                        k += buf[i].1;
                        i += 1;
                    }
                    fp.add(name);
                    fp.add(k as u64);
                }
                fp.finish()
            })
            .collect();
        rounds += 1;
        let d = count_distinct(&next);
        names = next;
        if d == distinct {
            break;
        }
        distinct = d;
    }
    debug_assert_eq!(distinct, cells, "fingerprint collision in color refinement");
    let keys: Vec<u64> = (0..n).map(|v| names[cell_of[v]]).collect();
    let coloring = Coloring::from_keys(&keys);
    let mut sorted = names;
    sorted.sort_unstable();
    sorted.dedup();
    VertexRefinement { coloring, names: sorted, rounds }
}

/// Stable 1-WL coloring.
pub fn refine_1wl(g: &ColoredGraph) -> Coloring {
    color_refinement(g).coloring
}

fn count_distinct(names: &[u64]) -> usize {
    let mut v = names.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Vertex coloring read off the stable k-WL coloring (diagonal tuples for
/// `k >= 2`).
pub fn vertex_coloring(g: &ColoredGraph, k: usize) -> Result<Coloring> {
    match k {
        1 => Ok(refine_1wl(g)),
        2 | 3 => Ok(refine_kwl(g, k)?.vertex_coloring()),
        _ => invalid(format!("k must be 1, 2 or 3, got {k}")),
    }
}

/// True iff the k-WL vertex coloring induces the same partition as the
/// input coloring.
pub fn is_stable(g: &ColoredGraph, k: usize) -> Result<bool> {
    match k {
        1 => Ok(is_equitable(g)),
        _ => Ok(vertex_coloring(g, k)?.same_partition(g.coloring())),
    }
}

/// True iff k-WL distinguishes the two colored graphs, i.e. the multisets of
/// stable tuple colors differ. Input color ids are the initial names on
/// both sides.
pub fn distinguish(g: &ColoredGraph, h: &ColoredGraph, k: usize) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return invalid(format!("k must be 1, 2 or 3, got {k}"));
    }
    if g.n() != h.n() {
        return Ok(true);
    }
    if k == 1 {
        let (a, b) = (color_refinement(g), color_refinement(h));
        if a.rounds != b.rounds {
            return Ok(true);
        }
        let multiset = |r: &VertexRefinement| {
            let mut v: Vec<u64> = r.coloring.as_slice().iter().map(|&c| r.names[c]).collect();
            v.sort_unstable();
            v
        };
        return Ok(multiset(&a) != multiset(&b));
    }
    let (a, b) = (refine_kwl(g, k)?, refine_kwl(h, k)?);
    Ok(a.rounds != b.rounds || a.name_multiset() != b.name_multiset())
}
