use serde::{Deserialize, Serialize};

use super::{ColoredGraph, Coloring};
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn g6_error<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 { offset, message: message.into() })
}

/// Decodes one graph6 line (an optional `>>graph6<<` header and a trailing
/// newline are accepted). All vertices get color 0.
pub fn parse_graph6(text: &[u8]) -> Result<ColoredGraph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = text.len();
    if end > start && text[end - 1] == b'\n' {
        end -= 1;
        if end > start && text[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let data = &text[start..end];
    let digit = |i: usize| -> Result<u64> {
        match data.get(i) {
            None => g6_error(start + i, "input ends inside the vertex count"),
            Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(u64::from(b - BIAS)),
            Some(&b) => g6_error(start + i, format!("byte 0x{b:02x} is not a graph6 character")),
        }
    };
    if data.is_empty() {
        return g6_error(start, "empty input");
    }
    let (n, mut pos) = if data[0] == 126 {
        if data.get(1) == Some(&126) {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | digit(i)?;
            }
            (n, 8)
        } else {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | digit(i)?;
            }
            (n, 4)
        }
    } else {
        match data[0] {
            b @ 63..=125 => (u64::from(b - BIAS), 1),
            b => return g6_error(start, format!("malformed header byte 0x{b:02x}")),
        }
    };
    if n == 0 {
        return g6_error(start, "graphs must have at least one vertex");
    }
    let n = usize::try_from(n).map_err(|_| Error::Graph6 {
        offset: start,
        message: "vertex count too large".into(),
    })?;
    let Some(bits) = n.checked_mul(n - 1).map(|x| x / 2) else {
        return g6_error(start, "vertex count too large");
    };
    let body = bits.div_ceil(6);
    if data.len() < pos + body {
        return g6_error(
            start + data.len(),
            format!("truncated bit vector: expected {body} bytes, found {}", data.len() - pos),
        );
    }
    let mut adj = vec![Vec::new(); n];
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte_index = pos + bit / 6;
            let value = digit(byte_index)?;
            if (value >> (5 - bit % 6)) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    pos += body;
    // Validate every body byte even when it carries only padding.
    for i in (pos - body)..pos {
        digit(i)?;
    }
    if pos < data.len() {
        return g6_error(start + pos, "trailing garbage after the adjacency bits");
    }
    Ok(ColoredGraph::from_adjacency(adj, Coloring::uniform(n)))
}

/// Encodes the graph (colors are dropped) as a graph6 string without newline.
pub fn serialize_graph6(g: &ColoredGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Wire form of a colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredGraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u64>>,
}

impl ColoredGraphJson {
    pub fn to_graph(&self) -> Result<ColoredGraph> {
        let coloring = match &self.colors {
            None => Coloring::uniform(self.n),
            Some(colors) => {
                if colors.len() != self.n {
                    return Err(Error::Invalid(format!(
                        "color list has {} entries for {} vertices",
                        colors.len(),
                        self.n
                    )));
                }
                Coloring::from_keys(colors)
            }
        };
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        ColoredGraph::new(self.n, &edges, coloring)
    }

    pub fn from_graph(g: &ColoredGraph) -> Self {
        ColoredGraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            colors: Some(g.coloring().as_slice().iter().map(|&c| c as u64).collect()),
        }
    }
}

/// Parses `{"n": .., "edges": [[u,v],..], "colors": [..]}`; colors default to 0.
pub fn parse_colored_json(text: &[u8]) -> Result<ColoredGraph> {
    let mut de = serde_json::Deserializer::from_slice(text);
    let wire: ColoredGraphJson = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        Error::Json { path: path_or_root(&e.path().to_string()), message: e.inner().to_string() }
    })?;
    de.end().map_err(|e| Error::Json { path: "$".into(), message: e.to_string() })?;
    wire.to_graph()
}

pub(crate) fn path_or_root(path: &str) -> String {
    if path.is_empty() || path == "." {
        "$".into()
    } else {
        format!("$.{path}")
    }
}

pub fn to_colored_json_value(g: &ColoredGraph) -> ColoredGraphJson {
    ColoredGraphJson::from_graph(g)
}

pub fn to_colored_json(g: &ColoredGraph) -> String {
    serde_json::to_string(&ColoredGraphJson::from_graph(g)).expect("serializable")
}

/// JSON when the first non-blank byte is `{`, graph6 otherwise.
pub fn parse_graph_auto(text: &[u8]) -> Result<ColoredGraph> {
    match text.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => parse_colored_json(text),
        _ => {
            let lead = text.iter().take_while(|b| b.is_ascii_whitespace()).count();
            let line_end =
                text[lead..].iter().position(|&b| b == b'\n').map_or(text.len(), |p| lead + p + 1);
            parse_graph6(&text[lead..line_end]).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 { offset: offset + lead, message },
                other => other,
            })
        }
    }
}
