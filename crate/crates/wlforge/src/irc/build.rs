//! Greedy tree construction. Every state passes through the same skeleton
//! (refine, flip, split, then for k = 2 a twin quotient) and only a robust
//! state reaches a strategy-specific individualization.

use super::cover::{colors_disjoint, step_vertex_cover};
use super::distinguish::{find_distinguishing_set, min_sym_diff};
use super::validate::{individualization_counts, lemma_trace};
use super::{DepthReport, IrcNode, IrcTree, NodeKind, Strategy};
use crate::error::{invalid, precondition, Error, Result};
use crate::flip::{apply_flip_unchecked, canonical_flip_function, class_edge_counts, FlipFunction};
use crate::graph::{
    families, is_vertex_cover, quotient, twin_partition, vertex_cover_exact, ColoredGraph, TwinKind,
    DEFAULT_COVER_BUDGET,
};
use crate::oracle::isomorphic_uncapped;
use crate::wl::{class_graph, pair_stats, refine_1wl, vertex_coloring};

/// Largest graph for which the vertex-cover strategy computes its own cover.
pub const AUTO_COVER_MAX_N: usize = 24;
/// Largest graph on which the wl2 strategy tries all vertex pairs.
const PAIR_SEARCH_MAX_N: usize = 20;

struct Built {
    node: IrcNode,
    depth: usize,
}

struct Builder {
    k: usize,
    strategy: Strategy,
    tags: Vec<String>,
}

fn internal(e: String) -> Error {
    Error::Invalid(format!("builder produced an invalid step: {e}"))
}

/// Smallest vertex of the best class among classes of size at least two;
/// ties go to the class containing the smallest vertex.
fn best_class_vertex(g: &ColoredGraph, score: impl Fn(usize) -> i64) -> Option<usize> {
    let classes = g.coloring().classes();
    classes
        .iter()
        .enumerate()
        .filter(|(_, members)| members.len() > 1)
        .max_by_key(|&(c, members)| (score(c), std::cmp::Reverse(members[0])))
        .map(|(_, members)| members[0])
}

/// True iff `g` is a monochromatic copy of the prism over `K_m`, `m >= 3`.
fn is_two_row_rook(g: &ColoredGraph) -> bool {
    let n = g.n();
    if g.num_colors() != 1 || n < 6 || n % 2 == 1 {
        return false;
    }
    // The majority flip may already have replaced the graph by its complement.
    let m = n / 2;
    let rook = families::rook_2m(m);
    if (0..n).all(|v| g.degree(v) == m) {
        return isomorphic_uncapped(g, &rook);
    }
    (0..n).all(|v| g.degree(v) == m - 1) && isomorphic_uncapped(g, &rook.complement())
}

impl Builder {
    fn leaf_or<F>(&mut self, g: ColoredGraph, rest: F) -> Result<Built>
    where
        F: FnOnce(&mut Self, ColoredGraph) -> Result<Built>,
    {
        if g.n() == 1 {
            return Ok(Built { node: IrcNode::leaf(g), depth: 0 });
        }
        rest(self, g)
    }

    fn unary(kind: NodeKind, g: ColoredGraph, child: Built) -> Built {
        Built { node: IrcNode::new(kind, g, vec![child.node]), depth: child.depth }
    }

    /// Individualizes `vertices` one after another, skipping vertices that
    /// are already singletons, then continues with `rest`.
    fn chain<F>(&mut self, g: ColoredGraph, vertices: &[usize], rest: F) -> Result<Built>
    where
        F: FnOnce(&mut Self, ColoredGraph) -> Result<Built>,
    {
        let mut states = vec![g];
        let mut used = Vec::new();
        for &u in vertices {
            let cur = states.last().expect("nonempty");
            if cur.coloring().class_sizes()[cur.color(u)] == 1 {
                continue;
            }
            let next = cur.individualize(&[u])?;
            used.push(u);
            states.push(next);
        }
        if used.is_empty() {
            return Err(Error::Invalid("individualization set makes no progress".into()));
        }
        let last = states.pop().expect("nonempty");
        let mut built = rest(self, last.clone())?;
        let mut child_graph = last;
        for (i, u) in used.iter().enumerate().rev() {
            let parent = states.pop().expect("one state per vertex");
            let counted =
                individualization_counts(&parent, &child_graph, self.k, i == 0).map_err(internal)?;
            built = Built {
                node: IrcNode::new(NodeKind::Individualize(*u), parent.clone(), vec![built.node]),
                depth: built.depth + usize::from(counted),
            };
            child_graph = parent;
        }
        Ok(built)
    }

    fn build(&mut self, g: ColoredGraph) -> Result<Built> {
        self.leaf_or(g, |b, g| {
            let wl = vertex_coloring(&g, b.k)?;
            if !wl.same_partition(g.coloring()) {
                let child = b.build(g.recolored(wl))?;
                return Ok(Self::unary(NodeKind::Refine, g, child));
            }
            let f = canonical_flip_function(&g);
            if !f.is_zero() {
                let child = b.build(apply_flip_unchecked(&g, &f))?;
                return Ok(Self::unary(NodeKind::Flip(f), g, child));
            }
            if !g.is_connected() {
                return b.split(g, |b, c, _| b.build(c));
            }
            if b.k >= 2 {
                for kind in [TwinKind::Strong, TwinKind::Weak] {
                    let pi = twin_partition(&g, kind);
                    if !pi.is_discrete() {
                        let child = b.build(quotient(&g, &pi)?)?;
                        return Ok(Self::unary(NodeKind::TwinQuotient(kind), g, child));
                    }
                }
            }
            let (vertices, tag) = b.choose(&g)?;
            b.tags.push(tag);
            b.chain(g, &vertices, |b, c| b.build(c))
        })
    }

    fn split<F>(&mut self, g: ColoredGraph, mut each: F) -> Result<Built>
    where
        F: FnMut(&mut Self, ColoredGraph, &[usize]) -> Result<Built>,
    {
        let mut nodes = Vec::new();
        let mut depth = 0;
        for comp in g.components() {
            let child = each(self, comp.graph, &comp.vertices)?;
            depth = depth.max(child.depth);
            nodes.push(child.node);
        }
        Ok(Built { node: IrcNode::new(NodeKind::Split, g, nodes), depth })
    }

    /// The individualization for a connected, flipped, stable, twin-free
    /// (for k = 2) state.
    fn choose(&self, g: &ColoredGraph) -> Result<(Vec<usize>, String)> {
        match self.strategy {
            Strategy::Xi if self.k == 1 => {
                let cg = class_graph(g);
                let u = best_class_vertex(g, |c| cg[c].iter().filter(|&&e| e).count() as i64)
                    .expect("a flipped connected graph is not discrete");
                Ok((vec![u], "largest class degree".into()))
            }
            Strategy::Xi => {
                let stats = pair_stats(g)?;
                let u = best_class_vertex(g, |c| stats.xi[c]).expect("not discrete");
                Ok((vec![u], "largest xi".into()))
            }
            Strategy::Wl2 => self.choose_wl2(g),
            Strategy::VertexCover => unreachable!("handled by the cover builder"),
        }
    }

    fn choose_wl2(&self, g: &ColoredGraph) -> Result<(Vec<usize>, String)> {
        let stats = pair_stats(g)?;
        let sizes = g.coloring().class_sizes();
        if let Some(u) = best_class_vertex(g, |c| stats.xi[c]) {
            if stats.xi[g.color(u)] >= 3 {
                return Ok((vec![u], "many pair colors".into()));
            }
        }
        if is_two_row_rook(g) {
            return Ok((vec![0], "two-row rook graph".into()));
        }
        let m = g.num_colors();
        let gain = |set: &[usize]| -> Result<usize> {
            Ok(vertex_coloring(&g.individualize(set)?, 2)?.num_colors().saturating_sub(m))
        };
        let classes = g.coloring().classes();
        let reps: Vec<usize> = classes.iter().filter(|c| c.len() > 1).map(|c| c[0]).collect();
        let mut best: Option<(usize, usize)> = None;
        for &u in &reps {
            let d = gain(&[u])?;
            if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, u));
            }
        }
        if let Some((d, u)) = best {
            if d >= 4 {
                return Ok((vec![u], "single vertex, four new colors".into()));
            }
        }
        if g.n() <= PAIR_SEARCH_MAX_N {
            for &u in &reps {
                for v in 0..g.n() {
                    if v != u && sizes[g.color(v)] > 1 && gain(&[u, v])? >= 8 {
                        return Ok((vec![u, v], "vertex pair, eight new colors".into()));
                    }
                }
            }
        }
        let target = classes
            .iter()
            .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
            .expect("nonempty")
            .clone();
        let l = min_sym_diff(g, &target).unwrap_or(1).max(1);
        let set = find_distinguishing_set(g, &target, l)?;
        if set.vertices.is_empty() {
            return Ok((vec![target[0]], "distinguishing set".into()));
        }
        Ok((set.vertices, "distinguishing set".into()))
    }

    fn build_cover(&mut self, g: ColoredGraph, in_s: Vec<bool>) -> Result<Built> {
        self.leaf_or(g, |b, g| {
            let wl = refine_1wl(&g);
            if !wl.same_partition(g.coloring()) {
                let child = b.build_cover(g.recolored(wl), in_s)?;
                return Ok(Self::unary(NodeKind::Refine, g, child));
            }
            if !g.is_connected() {
                return b.split(g, |b, c, vertices| {
                    let sub = vertices.iter().map(|&v| in_s[v]).collect();
                    b.build_cover(c, sub)
                });
            }
            let flip = if colors_disjoint(&g, &in_s) {
                let f = canonical_flip_function(&g);
                (!f.is_zero()).then_some(f)
            } else {
                complete_pair(&g).map(|(c, d)| {
                    let mut f = FlipFunction::zeros(g.num_colors());
                    f.set(c, d, true);
                    f
                })
            };
            if let Some(f) = flip {
                let h = apply_flip_unchecked(&g, &f);
                let cover: Vec<usize> = (0..h.n()).filter(|&v| in_s[v]).collect();
                if !is_vertex_cover(&h, &cover) {
                    return Err(internal("flip destroyed the vertex cover".into()));
                }
                let child = b.build_cover(h, in_s)?;
                return Ok(Self::unary(NodeKind::Flip(f), g, child));
            }
            let cover: Vec<usize> = (0..g.n()).filter(|&v| in_s[v]).collect();
            let step = step_vertex_cover(&g, &cover)?;
            b.tags.push(step.case);
            b.chain(g, &step.vertices, move |b, c| b.build_cover(c, in_s))
        })
    }
}

/// First color pair `(c, d)`, `c <= d`, whose classes have at least two
/// vertices in total and are completely joined.
fn complete_pair(g: &ColoredGraph) -> Option<(usize, usize)> {
    let m = g.num_colors();
    let sizes = g.coloring().class_sizes();
    let counts = class_edge_counts(g);
    for c in 0..m {
        for d in c..m {
            let (full, enough) = if c == d {
                (sizes[c] * (sizes[c] - 1) / 2, sizes[c] >= 2)
            } else {
                (sizes[c] * sizes[d], true)
            };
            if enough && counts[c * m + d] == full {
                return Some((c, d));
            }
        }
    }
    None
}

fn report(k: usize, strategy: Strategy, built: Built, tags: Vec<String>) -> DepthReport {
    let tree = IrcTree { k, root: built.node };
    let (literal_tree, certificate, trace) = if tree.is_literal() {
        (Some(tree), None, Vec::new())
    } else {
        let trace = lemma_trace(&tree);
        (None, Some(tree), trace)
    };
    DepthReport {
        k,
        strategy,
        depth_bound: built.depth,
        dimension_bound: k.max(2) + built.depth,
        literal_tree,
        certificate,
        lemma_trace: trace,
        case_tags: tags,
    }
}

/// Builds a tree greedily and reports the depth it certifies.
///
/// `xi` works for k = 1 and 2, `vertex-cover` for k = 1 (computing an exact
/// minimum cover when `n <= 24`), `wl2` for k = 2.
pub fn build_greedy(g: &ColoredGraph, k: usize, strategy: Strategy) -> Result<DepthReport> {
    if !(1..=2).contains(&k) {
        return invalid(format!("the builders support k = 1 or 2, got {k}"));
    }
    if !strategy.supports(k) {
        return precondition(format!("strategy {strategy} is not defined for k = {k}"));
    }
    if strategy == Strategy::VertexCover {
        return build_vertex_cover(g, None);
    }
    let mut b = Builder { k, strategy, tags: Vec::new() };
    let built = b.build(g.clone())?;
    Ok(report(k, strategy, built, b.tags))
}

/// The vertex-cover strategy with an explicit cover, or an exact minimum
/// cover when `cover` is `None`. The tree only uses flips that remove
/// edges while cover and non-cover colors overlap, and the canonical flip
/// once they are disjoint (which keeps the set a cover).
pub fn build_vertex_cover(g: &ColoredGraph, cover: Option<&[usize]>) -> Result<DepthReport> {
    let cover = match cover {
        Some(c) => {
            if c.iter().any(|&v| v >= g.n()) || !is_vertex_cover(g, c) {
                return invalid("the given set is not a vertex cover");
            }
            c.to_vec()
        }
        None => {
            if g.n() > AUTO_COVER_MAX_N {
                return precondition(format!(
                    "computing a minimum cover needs n <= {AUTO_COVER_MAX_N}; pass a cover instead"
                ));
            }
            vertex_cover_exact(g, DEFAULT_COVER_BUDGET)?
        }
    };
    let mut in_s = vec![false; g.n()];
    for v in cover {
        in_s[v] = true;
    }
    let mut b = Builder { k: 1, strategy: Strategy::VertexCover, tags: Vec::new() };
    let built = b.build_cover(g.clone(), in_s)?;
    Ok(report(1, Strategy::VertexCover, built, b.tags))
}

/// Runs every strategy defined for `k` and keeps the smallest depth
/// (earlier strategies win ties). The vertex-cover strategy is skipped
/// above 24 vertices.
pub fn dimension_bound(g: &ColoredGraph, k: usize) -> Result<DepthReport> {
    let mut best: Option<DepthReport> = None;
    for strategy in [Strategy::Xi, Strategy::VertexCover, Strategy::Wl2] {
        if !strategy.supports(k) || (strategy == Strategy::VertexCover && g.n() > AUTO_COVER_MAX_N) {
            continue;
        }
        let r = build_greedy(g, k, strategy)?;
        if best.as_ref().is_none_or(|b| r.depth_bound < b.depth_bound) {
            best = Some(r);
        }
    }
    best.ok_or_else(|| Error::Invalid(format!("no strategy supports k = {k}")))
}
