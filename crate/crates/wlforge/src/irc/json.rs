//! `{"k": int, "root": node}` with
//! `node = {"kind", "graph", "flip"?, "vertex"?, "twins"?, "children"}`.

use serde::{Deserialize, Serialize};

use super::{IrcNode, IrcTree, NodeKind};
use crate::error::{Error, Result};
use crate::flip::FlipFunction;
use crate::graph::{ColoredGraphJson, TwinKind};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeDoc {
    k: usize,
    root: NodeDoc,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum KindDoc {
    Refine,
    Flip,
    Split,
    Individualize,
    TwinQuotient,
    Leaf,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum TwinsDoc {
    Strong,
    Weak,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    kind: KindDoc,
    graph: ColoredGraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    flip: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    twins: Option<TwinsDoc>,
    children: Vec<NodeDoc>,
}

fn to_doc(node: &IrcNode) -> NodeDoc {
    let (kind, flip, vertex, twins) = match &node.kind {
        NodeKind::Refine => (KindDoc::Refine, None, None, None),
        NodeKind::Flip(f) => {
            (KindDoc::Flip, Some(f.pairs().into_iter().map(|(a, b)| [a, b]).collect()), None, None)
        }
        NodeKind::Split => (KindDoc::Split, None, None, None),
        NodeKind::Individualize(u) => (KindDoc::Individualize, None, Some(*u), None),
        NodeKind::TwinQuotient(t) => {
            let t = match t {
                TwinKind::Strong => TwinsDoc::Strong,
                TwinKind::Weak => TwinsDoc::Weak,
            };
            (KindDoc::TwinQuotient, None, None, Some(t))
        }
        NodeKind::Leaf => (KindDoc::Leaf, None, None, None),
    };
    NodeDoc {
        kind,
        graph: ColoredGraphJson::from_graph(&node.graph),
        flip,
        vertex,
        twins,
        children: node.children.iter().map(to_doc).collect(),
    }
}

fn from_doc(doc: NodeDoc, path: &str) -> Result<IrcNode> {
    let at = |field: &str, message: String| Error::Json { path: format!("{path}.{field}"), message };
    let graph = doc.graph.to_graph().map_err(|e| at("graph", e.to_string()))?;
    let kind = match doc.kind {
        KindDoc::Refine => NodeKind::Refine,
        KindDoc::Split => NodeKind::Split,
        KindDoc::Leaf => NodeKind::Leaf,
        KindDoc::Flip => {
            let pairs = doc.flip.ok_or_else(|| at("flip", "flip node without a flip list".into()))?;
            let pairs: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
            NodeKind::Flip(
                FlipFunction::from_pairs(graph.num_colors(), &pairs).map_err(|e| at("flip", e.to_string()))?,
            )
        }
        KindDoc::Individualize => {
            let u = doc.vertex.ok_or_else(|| at("vertex", "individualize node without a vertex".into()))?;
            if u >= graph.n() {
                return Err(at("vertex", format!("vertex {u} outside 0..{}", graph.n())));
            }
            NodeKind::Individualize(u)
        }
        KindDoc::TwinQuotient => {
            let t = doc.twins.ok_or_else(|| at("twins", "twin-quotient node without a twin kind".into()))?;
            NodeKind::TwinQuotient(match t {
                TwinsDoc::Strong => TwinKind::Strong,
                TwinsDoc::Weak => TwinKind::Weak,
            })
        }
    };
    let children = doc
        .children
        .into_iter()
        .enumerate()
        .map(|(i, c)| from_doc(c, &format!("{path}.children[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IrcNode { kind, graph, children })
}

pub fn serialize_tree(t: &IrcTree) -> String {
    serde_json::to_string(&TreeDoc { k: t.k, root: to_doc(&t.root) }).expect("serializable")
}

/// Parses a tree document. Schema errors carry the JSON path of the
/// offending value.
pub fn deserialize_tree(text: &[u8]) -> Result<IrcTree> {
    let mut de = serde_json::Deserializer::from_slice(text);
    de.disable_recursion_limit();
    let doc: TreeDoc = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        Error::Json {
            path: if path.is_empty() || path == "." { "$".into() } else { format!("$.{path}") },
            message: e.inner().to_string(),
        }
    })?;
    de.end().map_err(|e| Error::Json { path: "$".into(), message: e.to_string() })?;
    Ok(IrcTree { k: doc.k, root: from_doc(doc.root, "$.root")? })
}
