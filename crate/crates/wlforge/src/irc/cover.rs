//! One step of the vertex-cover induction: which vertex (or pair) to
//! individualize so that the colors on the cover make the promised
//! progress.

use std::collections::BTreeSet;

use crate::error::{invalid, precondition, Result};
use crate::flip::is_flipped;
use crate::graph::{is_vertex_cover, ColoredGraph, Coloring};
use crate::wl::{is_equitable, refine_1wl};

/// Vertices to individualize (one or two), the case of the argument that
/// produced them, and whether the cover and non-cover colors were disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverStep {
    pub vertices: Vec<usize>,
    pub case: String,
    pub disjoint: bool,
}

/// Color counts of a coloring relative to a cover `S` with complement `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CoverColors {
    /// `|χ(S)|`
    on_cover: usize,
    /// `|χ(S) \ χ(I)|`
    only_cover: usize,
    /// `χ(S) ∩ χ(I) = ∅`
    disjoint: bool,
}

fn cover_colors(coloring: &Coloring, in_s: &[bool]) -> CoverColors {
    let mut s = BTreeSet::new();
    let mut i = BTreeSet::new();
    for (v, &inside) in in_s.iter().enumerate() {
        if inside {
            s.insert(coloring.color(v));
        } else {
            i.insert(coloring.color(v));
        }
    }
    let only_cover = s.difference(&i).count();
    CoverColors { on_cover: s.len(), only_cover, disjoint: only_cover == s.len() }
}

pub(crate) fn colors_disjoint(g: &ColoredGraph, in_s: &[bool]) -> bool {
    cover_colors(g.coloring(), in_s).disjoint
}

fn after(g: &ColoredGraph, vertices: &[usize], in_s: &[bool]) -> CoverColors {
    let refined = refine_1wl(&g.individualize(vertices).expect("vertices in range"));
    cover_colors(&refined, in_s)
}

/// Progress promised when colors overlap: (a) two more cover colors and
/// one more cover-only color, (b) one more and two more, or (c) disjoint.
fn overlapping_progress(before: CoverColors, now: CoverColors) -> bool {
    (now.on_cover >= before.on_cover + 2 && now.only_cover > before.only_cover)
        || (now.on_cover > before.on_cover && now.only_cover >= before.only_cover + 2)
        || now.disjoint
}

fn members(class: &[usize], in_s: &[bool], inside: bool) -> Vec<usize> {
    class.iter().copied().filter(|&v| in_s[v] == inside).collect()
}

fn neighbors_in(g: &ColoredGraph, u: usize, set: &[usize]) -> usize {
    set.iter().filter(|&&w| g.has_edge(u, w)).count()
}

/// First vertex of `from` whose neighborhood meets `to \ {itself}` in a
/// nonempty proper subset.
fn partial_neighbor(g: &ColoredGraph, from: &[usize], to: &[usize]) -> Option<usize> {
    from.iter().copied().find(|&u| {
        let others = to.iter().filter(|&&w| w != u).count();
        let hit = neighbors_in(g, u, to);
        hit > 0 && hit < others
    })
}

fn first_cover_edge(g: &ColoredGraph, in_s: &[bool]) -> Option<(usize, usize)> {
    g.edges().into_iter().find(|&(v, w)| in_s[v] && in_s[w])
}

fn overlapping_case(g: &ColoredGraph, in_s: &[bool]) -> Option<(usize, &'static str)> {
    let Some((v, w)) = first_cover_edge(g, in_s) else {
        let u = (0..g.n()).find(|&u| in_s[u])?;
        return Some((u, "parity split"));
    };
    let classes = g.coloring().classes();
    let c_s = members(&classes[g.color(v)], in_s, true);
    if g.color(v) == g.color(w) {
        return partial_neighbor(g, &c_s, &c_s).map(|u| (u, "one class inside the cover"));
    }
    let d_s = members(&classes[g.color(w)], in_s, true);
    if c_s.len() >= 2 && d_s.len() >= 2 {
        return partial_neighbor(g, &c_s, &d_s)
            .or_else(|| partial_neighbor(g, &d_s, &c_s))
            .map(|u| (u, "two classes inside the cover"));
    }
    let u = if c_s.len() == 1 { v } else { w };
    Some((u, "single cover vertex in its class"))
}

fn disjoint_case(g: &ColoredGraph, in_s: &[bool]) -> Option<(Vec<usize>, &'static str)> {
    if let Some((u, _)) = first_cover_edge(g, in_s) {
        return Some((vec![u], "adjacent cover vertices"));
    }
    let n = g.n();
    let cover_classes = cover_colors(g.coloring(), in_s).on_cover;
    if cover_classes >= 2 {
        let u = (0..n).filter(|&u| !in_s[u]).find(|&u| {
            g.neighbors(u).iter().map(|&w| g.color(w)).collect::<BTreeSet<_>>().len() >= 2
        })?;
        return Some((vec![u], "two neighbor classes"));
    }
    let outside: Vec<usize> = (0..n).filter(|&u| !in_s[u]).collect();
    for (i, &u1) in outside.iter().enumerate() {
        for &u2 in &outside[i + 1..] {
            let (a, b) = (g.neighbors(u1), g.neighbors(u2));
            let common = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
            if common > 0 && common < a.len() && common < b.len() {
                return Some((vec![u1, u2], "overlapping neighborhoods"));
            }
        }
    }
    None
}

fn search_overlapping(g: &ColoredGraph, in_s: &[bool], before: CoverColors) -> Option<usize> {
    (0..g.n()).find(|&u| overlapping_progress(before, after(g, &[u], in_s)))
}

fn search_disjoint(g: &ColoredGraph, in_s: &[bool], before: CoverColors) -> Option<Vec<usize>> {
    let n = g.n();
    if let Some(u) = (0..n).find(|&u| after(g, &[u], in_s).on_cover >= before.on_cover + 2) {
        return Some(vec![u]);
    }
    for u1 in 0..n {
        for u2 in (u1 + 1)..n {
            if after(g, &[u1, u2], in_s).on_cover >= before.on_cover + 3 {
                return Some(vec![u1, u2]);
            }
        }
    }
    None
}

/// Chooses the next individualization for a connected, color-refinement
/// stable graph with vertex cover `cover`.
///
/// If some cover color also occurs outside the cover, the chosen vertex
/// yields one of the overlapping-color progress options; otherwise the
/// graph must also be flipped, and one vertex adds two cover colors or a
/// pair adds three. The case follows the argument's branches in order. The
/// promised progress is verified, and a plain search is used (case tag
/// `search`) if the prescribed choice falls short, which can only happen
/// when a completely joined class pair exists.
pub fn step_vertex_cover(g: &ColoredGraph, cover: &[usize]) -> Result<CoverStep> {
    let n = g.n();
    if cover.iter().any(|&v| v >= n) {
        return invalid(format!("cover mentions a vertex outside 0..{n}"));
    }
    if !is_vertex_cover(g, cover) {
        return invalid("the given set is not a vertex cover");
    }
    if n < 2 || !g.is_connected() || !is_equitable(g) {
        return precondition("step needs a connected, refinement-stable graph on at least two vertices");
    }
    let mut in_s = vec![false; n];
    for &v in cover {
        in_s[v] = true;
    }
    let before = cover_colors(g.coloring(), &in_s);
    if !before.disjoint {
        if let Some((u, case)) = overlapping_case(g, &in_s) {
            if overlapping_progress(before, after(g, &[u], &in_s)) {
                return Ok(CoverStep { vertices: vec![u], case: case.into(), disjoint: false });
            }
        }
        return match search_overlapping(g, &in_s, before) {
            Some(u) => Ok(CoverStep { vertices: vec![u], case: "search".into(), disjoint: false }),
            None => precondition("no single vertex makes progress; a completely joined class pair must be flipped first"),
        };
    }
    if !is_flipped(g) {
        return precondition("with disjoint cover colors the graph must also be flipped");
    }
    if let Some((vertices, case)) = disjoint_case(g, &in_s) {
        let need = if vertices.len() == 1 { 2 } else { 3 };
        if after(g, &vertices, &in_s).on_cover >= before.on_cover + need {
            return Ok(CoverStep { vertices, case: case.into(), disjoint: true });
        }
    }
    match search_disjoint(g, &in_s, before) {
        Some(vertices) => Ok(CoverStep { vertices, case: "search".into(), disjoint: true }),
        None => precondition("no vertex or pair makes the promised progress"),
    }
}
