use super::{DepthReport, IrcNode, IrcTree, LemmaStep, NodeKind};
use crate::error::{Error, Result};
use crate::flip::apply_flip;
use crate::graph::{quotient, twin_partition, ColoredGraph};
use crate::wl::vertex_coloring;

/// Outcome of [`validate_tree`]: valid, or the first violation found in
/// depth-first order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub valid: bool,
    pub violation: Option<String>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.valid
    }
}

fn same_state(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    a.same_graph(b) && a.coloring().same_partition(b.coloring())
}

fn refine_holds(parent: &ColoredGraph, child: &ColoredGraph, k: usize) -> std::result::Result<bool, String> {
    if !parent.same_graph(child) {
        return Ok(false);
    }
    let wl = vertex_coloring(parent, k).map_err(|e| e.to_string())?;
    Ok(child.coloring().same_partition(&wl))
}

/// Some flip function maps `parent` to `child`: same partition, and every
/// class pair is either toggled completely or not at all.
fn some_flip_holds(parent: &ColoredGraph, child: &ColoredGraph) -> bool {
    let n = parent.n();
    if child.n() != n || !child.coloring().same_partition(parent.coloring()) {
        return false;
    }
    let m = parent.num_colors();
    let mut toggled = vec![0usize; m * m];
    let mut total = vec![0usize; m * m];
    for v in 0..n {
        for w in (v + 1)..n {
            let (a, b) = (parent.color(v).min(parent.color(w)), parent.color(v).max(parent.color(w)));
            total[a * m + b] += 1;
            if parent.has_edge(v, w) != child.has_edge(v, w) {
                toggled[a * m + b] += 1;
            }
        }
    }
    toggled.iter().zip(&total).all(|(&t, &s)| t == 0 || t == s)
}

fn split_holds(parent: &ColoredGraph, children: &[IrcNode]) -> bool {
    let comps = parent.components();
    comps.len() == children.len()
        && comps.iter().zip(children).all(|(c, child)| same_state(&c.graph, &child.graph))
}

fn individualize_holds(parent: &ColoredGraph, child: &ColoredGraph, u: usize) -> bool {
    u < parent.n()
        && parent.same_graph(child)
        && child
            .coloring()
            .same_partition(parent.individualize(&[u]).expect("vertex in range").coloring())
}

/// Whether an individualize step from `parent` to `child` counts towards
/// the depth: it must not also be a refine, flip or split step. With
/// `parent_stable` the caller asserts that `parent` is k-WL-stable, which
/// saves rerunning the refinement.
pub(crate) fn individualization_counts(
    parent: &ColoredGraph,
    child: &ColoredGraph,
    k: usize,
    parent_stable: bool,
) -> std::result::Result<bool, String> {
    let refine = if parent_stable {
        parent.same_graph(child) && child.coloring().same_partition(parent.coloring())
    } else {
        refine_holds(parent, child, k)?
    };
    if refine || some_flip_holds(parent, child) {
        return Ok(false);
    }
    let comps = parent.components();
    Ok(!(comps.len() == 1 && same_state(&comps[0].graph, child)))
}

struct Checker {
    k: usize,
    allow_quotient: bool,
}

impl Checker {
    /// Checks the subtree and returns its individualization depth.
    fn check(&self, node: &IrcNode, path: &str) -> std::result::Result<usize, String> {
        let g = &node.graph;
        let fail = |msg: String| Err(format!("node at {}: {msg}", if path.is_empty() { "root" } else { path }));
        let single = |what: &str| -> std::result::Result<&IrcNode, String> {
            if node.children.len() == 1 {
                Ok(&node.children[0])
            } else {
                Err(format!(
                    "node at {}: {what} node has {} children, expected 1",
                    if path.is_empty() { "root" } else { path },
                    node.children.len()
                ))
            }
        };
        let child_path = |i: usize| if path.is_empty() { i.to_string() } else { format!("{path}/{i}") };
        match &node.kind {
            NodeKind::Leaf => {
                if !node.children.is_empty() {
                    return fail("leaf has children".into());
                }
                if g.n() != 1 {
                    return fail(format!("leaf holds {} vertices", g.n()));
                }
                return Ok(0);
            }
            _ if node.children.is_empty() => {
                return fail(format!("{} node has no children", node.kind.name()));
            }
            _ => {}
        }
        match &node.kind {
            NodeKind::Refine => {
                let child = single("refine")?;
                if !refine_holds(g, &child.graph, self.k)? {
                    return fail(format!("child coloring is not the {}-WL coloring", self.k));
                }
                self.check(child, &child_path(0))
            }
            NodeKind::Flip(f) => {
                let child = single("flip")?;
                let expected = match apply_flip(g, f) {
                    Ok(h) => h,
                    Err(e) => return fail(e.to_string()),
                };
                if !same_state(&expected, &child.graph) {
                    return fail("child is not the flip of the state".into());
                }
                self.check(child, &child_path(0))
            }
            NodeKind::Split => {
                if !split_holds(g, &node.children) {
                    return fail("children are not the connected components in order".into());
                }
                let mut worst = 0;
                for (i, child) in node.children.iter().enumerate() {
                    worst = worst.max(self.check(child, &child_path(i))?);
                }
                Ok(worst)
            }
            NodeKind::Individualize(u) => {
                let child = single("individualize")?;
                if !individualize_holds(g, &child.graph, *u) {
                    return fail(format!("child coloring is not the state with vertex {u} individualized"));
                }
                let counted = individualization_counts(g, &child.graph, self.k, false)?;
                Ok(usize::from(counted) + self.check(child, &child_path(0))?)
            }
            NodeKind::TwinQuotient(kind) => {
                if !self.allow_quotient {
                    return fail("twin-quotient step in a literal tree".into());
                }
                if self.k < 2 {
                    return fail("twin quotients need k >= 2".into());
                }
                let child = single("twin-quotient")?;
                let pi = twin_partition(g, *kind);
                if pi.is_discrete() {
                    return fail(format!("no nontrivial {} twin classes", kind.name()));
                }
                let expected = quotient(g, &pi).map_err(|e| e.to_string())?;
                if !same_state(&expected, &child.graph) {
                    return fail("child is not the twin quotient".into());
                }
                self.check(child, &child_path(0))
            }
            NodeKind::Leaf => unreachable!(),
        }
    }
}

fn check_k(k: usize) -> std::result::Result<(), String> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(format!("k must be 1, 2 or 3, got {k}"))
    }
}

fn analyze(t: &IrcTree, allow_quotient: bool) -> std::result::Result<usize, String> {
    check_k(t.k)?;
    Checker { k: t.k, allow_quotient }.check(&t.root, "")
}

/// Checks every node against its declared option and every leaf for a
/// single vertex. Flip nodes are re-derived from the stored function and
/// refine nodes re-run k-WL; partitions are compared, not color names.
pub fn validate_tree(t: &IrcTree) -> Validation {
    match analyze(t, false) {
        Ok(_) => Validation { valid: true, violation: None },
        Err(v) => Validation { valid: false, violation: Some(v) },
    }
}

/// Individualization depth of a valid tree. An individualize node counts
/// only if its step is not also a refine, flip or split step.
pub fn depth(t: &IrcTree) -> Result<usize> {
    analyze(t, false).map_err(Error::Invalid)
}

/// Checks a tree that may contain twin-quotient steps and returns the depth
/// bound it certifies.
pub fn verify_certificate(t: &IrcTree) -> std::result::Result<usize, String> {
    analyze(t, true)
}

/// The justification of every internal node of `t`, in preorder.
pub fn lemma_trace(t: &IrcTree) -> Vec<LemmaStep> {
    fn walk(node: &IrcNode, path: String, out: &mut Vec<LemmaStep>) {
        let lemma = match node.kind {
            NodeKind::Leaf => return,
            NodeKind::Refine => "depth-refine",
            NodeKind::Flip(_) => "depth-flip",
            NodeKind::Split => "depth-components",
            NodeKind::Individualize(_) => "depth-individualize",
            NodeKind::TwinQuotient(_) => "remove-twins",
        };
        let g = &node.graph;
        out.push(LemmaStep { lemma, path: path.clone(), n: g.n(), colors: g.num_colors(), edges: g.num_edges() });
        for (i, child) in node.children.iter().enumerate() {
            let p = if path.is_empty() { i.to_string() } else { format!("{path}/{i}") };
            walk(child, p, out);
        }
    }
    let mut out = Vec::new();
    walk(&t.root, String::new(), &mut out);
    out
}

/// Machine-checks a report against its input: the tree's root is `g`, every
/// step is valid, the trace matches the certificate, and both bounds follow.
pub fn verify_report(report: &DepthReport, g: &ColoredGraph) -> std::result::Result<(), String> {
    if report.dimension_bound != report.k.max(2) + report.depth_bound {
        return Err("dimension bound is not max(2, k) + depth bound".into());
    }
    let (tree, depth) = match (&report.literal_tree, &report.certificate) {
        (Some(t), None) => {
            if !report.lemma_trace.is_empty() {
                return Err("literal report carries a lemma trace".into());
            }
            (t, analyze(t, false)?)
        }
        (None, Some(t)) => {
            if t.is_literal() {
                return Err("certificate without non-literal steps".into());
            }
            if report.lemma_trace != lemma_trace(t) {
                return Err("lemma trace does not match the certificate".into());
            }
            (t, analyze(t, true)?)
        }
        _ => return Err("report must carry exactly one of a literal tree and a certificate".into()),
    };
    if tree.k != report.k {
        return Err("tree dimension differs from the report".into());
    }
    if !same_state(tree.root_graph(), g) {
        return Err("tree root is not the input graph".into());
    }
    if depth != report.depth_bound {
        return Err(format!("tree depth {depth} differs from the reported bound {}", report.depth_bound));
    }
    Ok(())
}
