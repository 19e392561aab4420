use std::collections::HashMap;

use super::naming::{self, Fingerprint};
use super::{color_refinement, count_distinct};
use crate::error::{invalid, Error, Result};
use crate::graph::{ColoredGraph, Coloring};

/// Default cap on the estimated tuple-table memory, in MiB. The environment
/// variable `WLFORGE_MEM_CAP_MB` overrides it.
pub const DEFAULT_MEM_CAP_MB: u64 = 1024;

fn mem_cap_bytes() -> u64 {
    std::env::var("WLFORGE_MEM_CAP_MB")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&mb| mb > 0)
        .unwrap_or(DEFAULT_MEM_CAP_MB)
        .saturating_mul(1 << 20)
}

fn check_budget(n: usize, k: usize) -> Result<usize> {
    let tuples = (n as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    // Colors, signature keys of length n + 1, and the names of each class.
    let estimate = tuples.saturating_mul((n as u64 + 4) * 8 * 2);
    let cap = mem_cap_bytes();
    if estimate > cap {
        return Err(Error::Cap(format!(
            "{k}-WL on {n} vertices needs about {} MiB, cap is {} MiB",
            estimate >> 20,
            cap >> 20
        )));
    }
    Ok(tuples as usize)
}

/// Stable k-WL coloring of all k-tuples. Tuple `(v_1, .., v_k)` has index
/// `v_1 n^{k-1} + .. + v_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTupleColoring {
    pub k: usize,
    pub n: usize,
    colors: Vec<u32>,
    names: Vec<u64>,
    pub rounds: usize,
}

impl KTupleColoring {
    pub fn num_colors(&self) -> usize {
        self.names.len()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn names(&self) -> &[u64] {
        &self.names
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &v| acc * self.n + v)
    }

    pub fn color(&self, tuple: &[usize]) -> usize {
        self.colors[self.index(tuple)] as usize
    }

    /// Vertex colors from the diagonal tuples `(v, .., v)`.
    pub fn vertex_coloring(&self) -> Coloring {
        let diag: usize = (0..self.k).fold(0, |acc, _| acc * self.n + 1);
        let keys: Vec<u64> =
            (0..self.n).map(|v| self.names[self.colors[v * diag] as usize]).collect();
        Coloring::from_keys(&keys)
    }

    /// True iff both colorings partition the tuples identically.
    pub fn same_partition(&self, other: &KTupleColoring) -> bool {
        same_dense_partition(&self.colors, &other.colors)
    }

    /// Sorted multiset of tuple color names.
    pub fn name_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.colors.iter().map(|&c| self.names[c as usize]).collect();
        v.sort_unstable();
        v
    }

    pub(crate) fn from_parts(k: usize, n: usize, colors: Vec<u32>, names: Vec<u64>, rounds: usize) -> Self {
        KTupleColoring { k, n, colors, names, rounds }
    }
}

pub(crate) fn same_dense_partition(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut fwd: HashMap<u32, u32> = HashMap::new();
    let mut bwd: HashMap<u32, u32> = HashMap::new();
    for (&x, &y) in a.iter().zip(b) {
        if *fwd.entry(x).or_insert(y) != y || *bwd.entry(y).or_insert(x) != x {
            return false;
        }
    }
    true
}

/// Stable 2-WL coloring of ordered pairs, computed by a dedicated
/// matrix-based path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColoring {
    pub n: usize,
    colors: Vec<u32>,
    names: Vec<u64>,
    pub rounds: usize,
}

impl PairColoring {
    pub fn color(&self, v: usize, w: usize) -> usize {
        self.colors[v * self.n + w] as usize
    }

    pub fn num_colors(&self) -> usize {
        self.names.len()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn names(&self) -> &[u64] {
        &self.names
    }

    pub fn vertex_coloring(&self) -> Coloring {
        let keys: Vec<u64> =
            (0..self.n).map(|v| self.names[self.colors[v * self.n + v] as usize]).collect();
        Coloring::from_keys(&keys)
    }

    pub fn into_ktuple(self) -> KTupleColoring {
        KTupleColoring { k: 2, n: self.n, colors: self.colors, names: self.names, rounds: self.rounds }
    }
}

fn initial_tuple_name(g: &ColoredGraph, entries: &[usize]) -> u64 {
    let mut fp = Fingerprint::new(naming::TAG_TUPLE);
    fp.add(entries.len() as u64);
    for &v in entries {
        fp.add(naming::initial_vertex(g.color(v)));
    }
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let (a, b) = (entries[i], entries[j]);
            fp.add(u64::from(a == b) | (u64::from(a != b && g.has_edge(a, b)) << 1));
        }
    }
    fp.finish()
}

/// Dense ids by rank of name.
fn densify(tuple_names: &[u64]) -> (Vec<u32>, Vec<u64>) {
    let mut names = tuple_names.to_vec();
    names.sort_unstable();
    names.dedup();
    let colors = tuple_names
        .iter()
        .map(|x| names.binary_search(x).expect("name present") as u32)
        .collect();
    (colors, names)
}

/// Groups tuples by signature (old color plus sorted substitution multiset)
/// and names the new classes. `signature(t, buf)` appends the packed
/// substitution entries of tuple `t`; `entry_names(t, names, buf)` appends
/// the name of every substituted tuple combination.
fn refine_round(
    colors: &[u32],
    names: &[u64],
    mut signature: impl FnMut(usize, &mut Vec<u64>),
    mut entry_names: impl FnMut(usize, &[u64], &mut Vec<u64>),
) -> (Vec<u32>, Vec<u64>) {
    let total = colors.len();
    let mut classes: HashMap<Vec<u64>, u32> = HashMap::new();
    let mut provisional = vec![0u32; total];
    let mut reps: Vec<usize> = Vec::new();
    let mut buf: Vec<u64> = Vec::new();
    for t in 0..total {
        buf.clear();
        buf.push(u64::from(colors[t]));
        signature(t, &mut buf);
        buf[1..].sort_unstable();
        let id = match classes.get(buf.as_slice()) {
            Some(&id) => id,
            None => {
                let id = reps.len() as u32;
                classes.insert(buf.clone(), id);
                reps.push(t);
                id
            }
        };
        provisional[t] = id;
    }
    drop(classes);
    let class_names: Vec<u64> = reps
        .iter()
        .map(|&t| {
            buf.clear();
            entry_names(t, names, &mut buf);
            buf.sort_unstable();
            let mut fp = Fingerprint::new(naming::TAG_ROUND);
            fp.add(names[colors[t] as usize]);
            for &x in &buf {
                fp.add(x);
            }
            fp.finish()
        })
        .collect();
    let mut order: Vec<u64> = class_names.clone();
    order.sort_unstable();
    debug_assert_eq!(count_distinct(&order), order.len(), "fingerprint collision in k-WL");
    let rank: Vec<u32> =
        class_names.iter().map(|x| order.binary_search(x).expect("present") as u32).collect();
    let next = provisional.iter().map(|&p| rank[p as usize]).collect();
    (next, order)
}

/// Stable 2-WL coloring. The pair `(v, w)` is refined by the multiset over
/// `u` of the colors of `(u, w)` and `(v, u)`.
pub fn refine_2wl(g: &ColoredGraph) -> Result<PairColoring> {
    let n = g.n();
    let total = check_budget(n, 2)?;
    let initial: Vec<u64> = (0..total).map(|t| initial_tuple_name(g, &[t / n, t % n])).collect();
    let (mut colors, mut names) = densify(&initial);
    let mut rounds = 0;
    loop {
        let mut transposed = vec![0u32; total];
        for v in 0..n {
            for w in 0..n {
                transposed[w * n + v] = colors[v * n + w];
            }
        }
        let before = names.len();
        let (next, next_names) = refine_round(
            &colors,
            &names,
            |t, buf| {
                let (v, w) = (t / n, t % n);
                let col = &transposed[w * n..w * n + n];
                let row = &colors[v * n..v * n + n];
                buf.extend(col.iter().zip(row).map(|(&a, &b)| (u64::from(a) << 32) | u64::from(b)));
            },
            |t, names, buf| {
                let (v, w) = (t / n, t % n);
                for u in 0..n {
                    let a = names[colors[u * n + w] as usize];
                    let b = names[colors[v * n + u] as usize];
                    buf.push(naming::combine(&[a, b]));
                }
            },
        );
        rounds += 1;
        colors = next;
        names = next_names;
        if names.len() == before {
            break;
        }
    }
    Ok(PairColoring { n, colors, names, rounds })
}

/// Stable k-WL coloring for `k` in 1..=3. For `k = 1` this is color
/// refinement viewed as a coloring of 1-tuples.
pub fn refine_kwl(g: &ColoredGraph, k: usize) -> Result<KTupleColoring> {
    if !(1..=3).contains(&k) {
        return invalid(format!("k must be 1, 2 or 3, got {k}"));
    }
    let n = g.n();
    if k == 1 {
        let r = color_refinement(g);
        let colors = r.coloring.as_slice().iter().map(|&c| c as u32).collect();
        return Ok(KTupleColoring { k, n, colors, names: r.names, rounds: r.rounds });
    }
    let total = check_budget(n, k)?;
    if k == 3 && (total as u64) >= (1 << 21) {
        return Err(Error::Cap(format!("3-WL supports n <= 127, got {n}")));
    }
    let strides: Vec<usize> = (0..k).map(|i| n.pow((k - 1 - i) as u32)).collect();
    let decode = |t: usize, out: &mut [usize; 3]| {
        for i in 0..k {
            out[i] = t / strides[i] % n;
        }
    };
    let initial: Vec<u64> = (0..total)
        .map(|t| {
            let mut e = [0usize; 3];
            decode(t, &mut e);
            initial_tuple_name(g, &e[..k])
        })
        .collect();
    let (mut colors, mut names) = densify(&initial);
    let shift = if k == 2 { 32 } else { 21 };
    let mut rounds = 0;
    loop {
        let before = names.len();
        let (next, next_names) = refine_round(
            &colors,
            &names,
            |t, buf| {
                let mut e = [0usize; 3];
                decode(t, &mut e);
                for w in 0..n {
                    let mut packed = 0u64;
                    for i in 0..k {
                        let s = t - e[i] * strides[i] + w * strides[i];
                        packed = (packed << shift) | u64::from(colors[s]);
                    }
                    buf.push(packed);
                }
            },
            |t, names, buf| {
                let mut e = [0usize; 3];
                decode(t, &mut e);
                let mut parts = [0u64; 3];
                for w in 0..n {
                    for i in 0..k {
                        let s = t - e[i] * strides[i] + w * strides[i];
                        parts[i] = names[colors[s] as usize];
                    }
                    buf.push(naming::combine(&parts[..k]));
                }
            },
        );
        rounds += 1;
        colors = next;
        names = next_names;
        if names.len() == before {
            break;
        }
    }
    Ok(KTupleColoring { k, n, colors, names, rounds })
}
