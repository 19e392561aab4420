use crate::error::{invalid, precondition, Result};
use crate::graph::ColoredGraph;
use crate::wl::refine_1wl;

/// A set whose individualization followed by color refinement gives every
/// vertex of the target set its own color.
#[derive(Clone, Debug, PartialEq)]
pub struct DistinguishingSet {
    pub vertices: Vec<usize>,
    /// `n / l * (1 + 2 log2 n)`.
    pub bound: f64,
    /// Whether `vertices.len() <= bound`; greedy does not guarantee it.
    pub within_bound: bool,
}

fn sym_diff(g: &ColoredGraph, v: usize, w: usize) -> usize {
    let (a, b) = (g.neighbors(v), g.neighbors(w));
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

/// Smallest `|N(v) △ N(w)|` over distinct `v, w` in `target`, or `None` for
/// fewer than two vertices.
pub(crate) fn min_sym_diff(g: &ColoredGraph, target: &[usize]) -> Option<usize> {
    let mut best = None;
    for (i, &v) in target.iter().enumerate() {
        for &w in &target[i + 1..] {
            let d = sym_diff(g, v, w);
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
    }
    best
}

/// Greedily grows `U`: each round adds the vertex lying in `N(v) △ N(w)` for
/// the most pairs `v, w` of `target` that still share a color after
/// individualizing `U` and refining, smallest id on ties. When no vertex
/// separates a remaining pair, an unresolved vertex of `target` is added.
pub fn find_distinguishing_set(g: &ColoredGraph, target: &[usize], l: usize) -> Result<DistinguishingSet> {
    let n = g.n();
    let mut d: Vec<usize> = target.to_vec();
    d.sort_unstable();
    d.dedup();
    if d.iter().any(|&v| v >= n) {
        return invalid(format!("target set mentions a vertex outside 0..{n}"));
    }
    if l == 0 {
        return invalid("the symmetric-difference bound must be positive");
    }
    if let Some(m) = min_sym_diff(g, &d) {
        if m < l {
            return precondition(format!("two target vertices have |N(v) △ N(w)| = {m} < {l}"));
        }
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut mark = vec![false; n];
    let mut hits = vec![0usize; n];
    loop {
        let coloring = refine_1wl(&g.individualize(&chosen)?);
        let unresolved: Vec<(usize, usize)> = d
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| d[i + 1..].iter().map(move |&w| (v, w)))
            .filter(|&(v, w)| coloring.color(v) == coloring.color(w))
            .collect();
        if unresolved.is_empty() {
            break;
        }
        hits.iter_mut().for_each(|h| *h = 0);
        for &(v, w) in &unresolved {
            for &x in g.neighbors(v) {
                mark[x] = true;
            }
            for &x in g.neighbors(w) {
                if mark[x] {
                    mark[x] = false;
                } else {
                    hits[x] += 1;
                }
            }
            for &x in g.neighbors(v) {
                if mark[x] {
                    hits[x] += 1;
                    mark[x] = false;
                }
            }
        }
        let best = (0..n).filter(|x| !chosen.contains(x)).max_by_key(|&x| (hits[x], usize::MAX - x));
        match best {
            Some(x) if hits[x] > 0 => chosen.push(x),
            _ => chosen.push(unresolved[0].0),
        }
    }
    let nf = n as f64;
    let bound = nf / l as f64 * (1.0 + 2.0 * nf.log2());
    Ok(DistinguishingSet { within_bound: chosen.len() as f64 <= bound, vertices: chosen, bound })
}
