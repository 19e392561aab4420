//! Colored graphs and the structural operations the rest of the crate builds on.

mod cover;
pub mod families;
mod io;
mod twins;

pub use cover::{is_vertex_cover, vertex_cover_exact, DEFAULT_COVER_BUDGET};
pub use io::{
    parse_colored_json, parse_graph6, parse_graph_auto, serialize_graph6, to_colored_json,
    to_colored_json_value, ColoredGraphJson,
};
pub use twins::{quotient, twin_partition, TwinKind, TwinPartition};

use crate::error::{invalid, Result};

/// Color identifiers are dense integers `0..num_colors`.
pub type ColorId = usize;

/// A vertex coloring with colors named `0..num_colors`.
///
/// Every constructor renames colors by sorting the keys that define them, so
/// the same operation on isomorphic inputs yields the same ids on
/// corresponding vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    ids: Vec<ColorId>,
    count: usize,
}

impl Coloring {
    /// All vertices share color 0.
    pub fn uniform(n: usize) -> Self {
        Coloring { ids: vec![0; n], count: usize::from(n > 0) }
    }

    /// Vertex `v` gets color `v`.
    pub fn discrete(n: usize) -> Self {
        Coloring { ids: (0..n).collect(), count: n }
    }

    /// Names colors by the rank of each vertex's key among the distinct keys.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let n = keys.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut ids = vec![0; n];
        let mut count = 0;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 && keys[order[i - 1]] != keys[v] {
                count += 1;
            }
            ids[v] = count;
        }
        Coloring { ids, count: if n == 0 { 0 } else { count + 1 } }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn color(&self, v: usize) -> ColorId {
        self.ids[v]
    }

    pub fn num_colors(&self) -> usize {
        self.count
    }

    pub fn as_slice(&self) -> &[ColorId] {
        &self.ids
    }

    /// Color classes indexed by color id, members in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (v, &c) in self.ids.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.ids {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn is_discrete(&self) -> bool {
        self.count == self.ids.len()
    }

    /// True iff both colorings induce the same partition of the vertices.
    pub fn same_partition(&self, other: &Coloring) -> bool {
        self.ids.len() == other.ids.len()
            && self.count == other.count
            && self.refines(other)
    }

    /// True iff every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Coloring) -> bool {
        if self.ids.len() != coarser.ids.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.count];
        for (&a, &b) in self.ids.iter().zip(&coarser.ids) {
            if image[a] == usize::MAX {
                image[a] = b;
            } else if image[a] != b {
                return false;
            }
        }
        true
    }

    /// The coloring restricted to `vertices`, renamed to stay contiguous.
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        let keys: Vec<ColorId> = vertices.iter().map(|&v| self.ids[v]).collect();
        Coloring::from_keys(&keys)
    }
}

/// A finite simple undirected graph on vertices `0..n` with a vertex coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    adj: Vec<Vec<usize>>,
    coloring: Coloring,
    edges: usize,
}

/// One connected component together with the original ids of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: ColoredGraph,
    /// `vertices[i]` is the id in the parent graph of component vertex `i`.
    pub vertices: Vec<usize>,
}

impl ColoredGraph {
    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)], coloring: Coloring) -> Result<Self> {
        if n == 0 {
            return invalid("a graph needs at least one vertex");
        }
        if coloring.len() != n {
            return invalid(format!("coloring has {} entries for {} vertices", coloring.len(), n));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u},{v}) mentions a vertex outside 0..{n}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj, coloring))
    }

    /// Monochromatic graph from an edge list.
    pub fn uncolored(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges, Coloring::uniform(n))
    }

    /// Sorts and deduplicates neighbor lists. Callers guarantee symmetry and
    /// the absence of loops.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>, coloring: Coloring) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert!(adj.iter().enumerate().all(|(v, l)| !l.contains(&v)));
        ColoredGraph { adj, coloring, edges: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn color(&self, v: usize) -> ColorId {
        self.coloring.color(v)
    }

    pub fn num_colors(&self) -> usize {
        self.coloring.num_colors()
    }

    /// Same graph, different coloring.
    pub fn with_coloring(&self, coloring: Coloring) -> Result<Self> {
        if coloring.len() != self.n() {
            return invalid(format!(
                "coloring has {} entries for {} vertices",
                coloring.len(),
                self.n()
            ));
        }
        Ok(ColoredGraph { adj: self.adj.clone(), coloring, edges: self.edges })
    }

    pub(crate) fn recolored(&self, coloring: Coloring) -> Self {
        debug_assert_eq!(coloring.len(), self.n());
        ColoredGraph { adj: self.adj.clone(), coloring, edges: self.edges }
    }

    /// Same graph with every vertex colored 0.
    pub fn uncolored_copy(&self) -> Self {
        self.recolored(Coloring::uniform(self.n()))
    }

    pub fn same_graph(&self, other: &ColoredGraph) -> bool {
        self.adj == other.adj
    }

    /// Individualizes the listed vertices: a listed vertex is keyed by the
    /// 1-based index of its first occurrence, every other vertex keeps its
    /// old color under a separate tag.
    pub fn individualize(&self, vertices: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut first = vec![0usize; n];
        for (j, &u) in vertices.iter().enumerate() {
            if u >= n {
                return invalid(format!("vertex {u} outside 0..{n}"));
            }
            if first[u] == 0 {
                first[u] = j + 1;
            }
        }
        let keys: Vec<(u8, usize)> = (0..n)
            .map(|v| if first[v] > 0 { (1, first[v]) } else { (0, self.color(v)) })
            .collect();
        Ok(self.recolored(Coloring::from_keys(&keys)))
    }

    /// Connected components ordered by their smallest vertex; each carries
    /// the restricted coloring.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            comp[s] = id;
            stack.push(s);
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        groups
            .into_iter()
            .map(|vertices| Component { graph: self.induced(&vertices), vertices })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Subgraph induced by `vertices` (strictly increasing), renumbered in
    /// that order, with the restricted coloring.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect()
            })
            .collect();
        Self::from_adjacency(adj, self.coloring.restrict(vertices))
    }

    /// Complement graph with the same coloring.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v && !self.has_edge(v, w)).collect())
            .collect();
        Self::from_adjacency(adj, self.coloring.clone())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()` and the
    /// color ids of both sides are taken as the same names.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> Self {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()));
        let keys: Vec<ColorId> =
            self.coloring.as_slice().iter().chain(other.coloring.as_slice()).copied().collect();
        Self::from_adjacency(adj, Coloring::from_keys(&keys))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut keys = vec![0; n];
        for v in 0..n {
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
            keys[perm[v]] = self.color(v);
        }
        Self::from_adjacency(adj, Coloring::from_keys(&keys))
    }
}
