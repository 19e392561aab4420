//! Small-scale reference engines: a literal k-WL recurrence, canonical
//! forms, backtracking isomorphism and exhaustive restricted WL depth.

mod canon;
mod depth;

pub use canon::{canonical_form, find_isomorphism, is_isomorphism, CanonicalForm, CANON_CAP, ISO_CAP};
pub(crate) use canon::isomorphic_uncapped;
pub use depth::{exact_restricted_depth, FlipMode};

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};
use crate::graph::ColoredGraph;
use crate::wl::KTupleColoring;

/// Largest `n` accepted by [`naive_kwl`] for k = 1, 2, 3.
pub const NAIVE_CAPS: [usize; 3] = [40, 25, 12];

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let table: BTreeMap<K, usize> = {
        let mut m = BTreeMap::new();
        for key in keys {
            m.entry(key.clone()).or_insert(0);
        }
        m.into_iter().enumerate().map(|(i, (key, _))| (key, i)).collect()
    };
    keys.iter().map(|key| table[key]).collect()
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// The k-WL recurrence evaluated literally, round by round, until the first
/// round whose partition equals the previous one.
pub fn naive_kwl(g: &ColoredGraph, k: usize) -> Result<KTupleColoring> {
    if !(1..=3).contains(&k) {
        return invalid(format!("k must be 1, 2 or 3, got {k}"));
    }
    let n = g.n();
    if n > NAIVE_CAPS[k - 1] {
        return Err(Error::Cap(format!(
            "naive {k}-WL accepts n <= {}, got {n}",
            NAIVE_CAPS[k - 1]
        )));
    }
    let tuples: Vec<Vec<usize>> = (0..n.pow(k as u32))
        .map(|mut t| {
            let mut e = vec![0; k];
            for i in (0..k).rev() {
                e[i] = t % n;
                t /= n;
            }
            e
        })
        .collect();
    let index = |e: &[usize]| e.iter().fold(0, |acc, &v| acc * n + v);

    // Round 0: the isomorphism type of the ordered subgraph on the entries
    // (for k = 1 just the vertex color).
    let initial: Vec<(Vec<usize>, Vec<bool>, Vec<bool>)> = tuples
        .iter()
        .map(|e| {
            let colors = e.iter().map(|&v| g.color(v)).collect();
            let mut eq = Vec::new();
            let mut adj = Vec::new();
            for i in 0..k {
                for j in (i + 1)..k {
                    eq.push(e[i] == e[j]);
                    adj.push(g.has_edge(e[i], e[j]));
                }
            }
            (colors, eq, adj)
        })
        .collect();
    let mut colors = rank(&initial);
    let mut rounds = 0;
    loop {
        let keys: Vec<(usize, Vec<Vec<usize>>)> = tuples
            .iter()
            .enumerate()
            .map(|(t, e)| {
                let mut multiset: Vec<Vec<usize>> = if k == 1 {
                    g.neighbors(e[0]).iter().map(|&w| vec![colors[w]]).collect()
                } else {
                    (0..n)
                        .map(|w| {
                            (0..k)
                                .map(|i| {
                                    let mut s = e.clone();
                                    s[i] = w;
                                    colors[index(&s)]
                                })
                                .collect()
                        })
                        .collect()
                };
                multiset.sort();
                (colors[t], multiset)
            })
            .collect();
        let next = rank(&keys);
        rounds += 1;
        let stable = class_count(&next) == class_count(&colors);
        colors = next;
        if stable {
            break;
        }
    }
    let count = class_count(&colors);
    Ok(KTupleColoring::from_parts(
        k,
        n,
        colors.iter().map(|&c| c as u32).collect(),
        (0..count as u64).collect(),
        rounds,
    ))
}
