//! Individualization/refinement trees with component splits (IRC trees):
//! the tree type, a validator for the four node options, JSON round trips,
//! and greedy builders that certify upper bounds on WL depth.
//!
//! A node's state is a colored graph. An internal node must satisfy one of
//! four options relating it to its children:
//!
//! * refine: one child, same graph, coloring equal (as a partition) to the
//!   k-WL vertex coloring;
//! * flip: one child obtained by complementing the edges between the color
//!   class pairs selected by a flip function;
//! * split: the children are the connected components, ordered by their
//!   smallest vertex;
//! * individualize: one child, same graph, coloring `χ[u]` for a vertex `u`.
//!
//! Leaves hold a single vertex. The individualization depth counts, along
//! the worst root-to-leaf path, the nodes satisfying only the last option.
//!
//! Builders may also emit twin-quotient steps (contract the strong or weak
//! twin classes, valid for k >= 2). A tree using them is a certificate for
//! the bound rather than an IRC tree of the input, see [`DepthReport`].

mod build;
mod cover;
mod distinguish;
mod json;
mod validate;

pub use build::{build_greedy, build_vertex_cover, dimension_bound};
pub use cover::{step_vertex_cover, CoverStep};
pub use distinguish::{find_distinguishing_set, DistinguishingSet};
pub use json::{deserialize_tree, serialize_tree};
pub use validate::{depth, lemma_trace, validate_tree, verify_certificate, verify_report, Validation};

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::flip::FlipFunction;
use crate::graph::{ColoredGraph, TwinKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Refine,
    Flip(FlipFunction),
    Split,
    Individualize(usize),
    /// Non-literal step: the child is the quotient by the twin partition.
    TwinQuotient(TwinKind),
    Leaf,
}

impl NodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            NodeKind::Refine => "refine",
            NodeKind::Flip(_) => "flip",
            NodeKind::Split => "split",
            NodeKind::Individualize(_) => "individualize",
            NodeKind::TwinQuotient(_) => "twin-quotient",
            NodeKind::Leaf => "leaf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrcNode {
    pub kind: NodeKind,
    pub graph: ColoredGraph,
    pub children: Vec<IrcNode>,
}

impl IrcNode {
    pub fn leaf(graph: ColoredGraph) -> Self {
        IrcNode { kind: NodeKind::Leaf, graph, children: Vec::new() }
    }

    pub fn new(kind: NodeKind, graph: ColoredGraph, children: Vec<IrcNode>) -> Self {
        IrcNode { kind, graph, children }
    }

    /// Number of nodes in the subtree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(IrcNode::size).sum::<usize>()
    }

    /// True iff the subtree contains no twin-quotient step.
    pub fn is_literal(&self) -> bool {
        !matches!(self.kind, NodeKind::TwinQuotient(_)) && self.children.iter().all(IrcNode::is_literal)
    }
}

/// A tree over the root state `root.graph`, refined with `k`-WL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrcTree {
    pub k: usize,
    pub root: IrcNode,
}

impl IrcTree {
    pub fn root_graph(&self) -> &ColoredGraph {
        &self.root.graph
    }

    pub fn is_literal(&self) -> bool {
        self.root.is_literal()
    }
}

/// Individualization strategy used by the greedy builder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Individualize in the class promising the most new colors.
    Xi,
    /// Follow the vertex-cover induction (k = 1).
    VertexCover,
    /// Pair-color statistics, then distinguishing sets (k = 2).
    Wl2,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Xi => "xi",
            Strategy::VertexCover => "vertex-cover",
            Strategy::Wl2 => "wl2",
        }
    }

    /// Whether the strategy is defined for dimension `k`.
    pub fn supports(self, k: usize) -> bool {
        match self {
            Strategy::Xi => k == 1 || k == 2,
            Strategy::VertexCover => k == 1,
            Strategy::Wl2 => k == 2,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "xi" => Ok(Strategy::Xi),
            "vertex-cover" | "vertex_cover" => Ok(Strategy::VertexCover),
            "wl2" => Ok(Strategy::Wl2),
            other => Err(Error::Invalid(format!("unknown strategy {other:?}"))),
        }
    }
}

/// One justified step of a non-literal certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaStep {
    /// `depth-refine`, `depth-flip`, `depth-components`,
    /// `depth-individualize` or `remove-twins`.
    pub lemma: &'static str,
    /// Child indices from the root, `/`-separated; empty for the root.
    pub path: String,
    pub n: usize,
    pub colors: usize,
    pub edges: usize,
}

/// A certified upper bound on the k-WL depth of a colored graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub k: usize,
    pub strategy: Strategy,
    pub depth_bound: usize,
    /// `max(2, k) + depth_bound`.
    pub dimension_bound: usize,
    /// The IRC tree of the input, when no twin quotient was used.
    pub literal_tree: Option<IrcTree>,
    /// The tree with twin-quotient steps, when one was used.
    pub certificate: Option<IrcTree>,
    /// Every step of `certificate` with the fact it relies on; empty for
    /// literal reports.
    pub lemma_trace: Vec<LemmaStep>,
    /// Which construction fired at each individualization, in tree order.
    pub case_tags: Vec<String>,
}

impl DepthReport {
    /// The emitted tree, literal or not.
    pub fn tree(&self) -> &IrcTree {
        self.literal_tree.as_ref().or(self.certificate.as_ref()).expect("report carries a tree")
    }

    pub fn is_literal(&self) -> bool {
        self.literal_tree.is_some()
    }

    /// JSON summary without the tree itself.
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "strategy": self.strategy.name(),
            "depth_bound": self.depth_bound,
            "dimension_bound": self.dimension_bound,
            "literal": self.is_literal(),
            "tree_nodes": self.tree().root.size(),
            "case_tags": self.case_tags,
            "lemma_trace": self.lemma_trace,
        })
    }
}
