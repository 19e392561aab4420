use std::collections::{HashMap, HashSet};

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{invalid, Error, Result};
use crate::flip::{apply_flip, canonical_flip_function, FlipFunction};
use crate::graph::ColoredGraph;
use crate::wl::vertex_coloring;

/// Which flips count as free moves during the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlipMode {
    /// Only the canonical majority flip.
    CanonicalOnly,
    /// Every nonzero flip function while at most four colors are present,
    /// the canonical flip otherwise.
    EnumerateSmall,
}

impl FlipMode {
    fn cap(self) -> usize {
        match self {
            FlipMode::CanonicalOnly => 9,
            FlipMode::EnumerateSmall => 7,
        }
    }
}

const ENUMERATE_MAX_COLORS: usize = 4;

struct Search {
    k: usize,
    mode: FlipMode,
    memo: HashMap<CanonicalForm, usize>,
}

impl Search {
    fn flips(&self, s: &ColoredGraph) -> Result<Vec<ColoredGraph>> {
        let m = s.num_colors();
        if self.mode == FlipMode::EnumerateSmall && m <= ENUMERATE_MAX_COLORS {
            let pairs: Vec<(usize, usize)> =
                (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
            let mut out = Vec::new();
            for mask in 1u32..(1 << pairs.len()) {
                let chosen: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                out.push(apply_flip(s, &FlipFunction::from_pairs(m, &chosen)?)?);
            }
            return Ok(out);
        }
        let f = canonical_flip_function(s);
        Ok(if f.is_zero() { Vec::new() } else { vec![apply_flip(s, &f)?] })
    }

    /// Best split over the closure of `s`: every disconnected state is
    /// scored by its worst component. Expansion stops once a split of
    /// depth 0 is found, since nothing beats it.
    fn split_closure(&mut self, s: &ColoredGraph) -> Result<(Vec<ColoredGraph>, usize)> {
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        seen.insert(canonical_form(s)?);
        let mut states = vec![s.clone()];
        let mut answer = usize::MAX;
        let mut i = 0;
        while i < states.len() && answer > 0 {
            let cur = states[i].clone();
            i += 1;
            if !cur.is_connected() {
                let mut worst = 0;
                for c in cur.components() {
                    worst = worst.max(self.best(&c.graph)?);
                    if worst >= answer {
                        break;
                    }
                }
                answer = answer.min(worst);
            }
            let refined = cur.with_coloring(vertex_coloring(&cur, self.k)?)?;
            let mut next = self.flips(&cur)?;
            if !refined.coloring().same_partition(cur.coloring()) {
                next.push(refined);
            }
            for t in next {
                if seen.insert(canonical_form(&t)?) {
                    states.push(t);
                }
            }
        }
        Ok((states, answer))
    }

    fn best(&mut self, s: &ColoredGraph) -> Result<usize> {
        if s.n() == 1 {
            return Ok(0);
        }
        let key = canonical_form(s)?;
        if let Some(&d) = self.memo.get(&key) {
            return Ok(d);
        }
        let (zone, mut answer) = self.split_closure(s)?;
        if answer > 1 {
            // Individualizing vertices in one orbit gives isomorphic states,
            // so one branch per isomorphism class of the result suffices.
            let mut tried: HashSet<CanonicalForm> = HashSet::new();
            'outer: for t in &zone {
                let sizes = t.coloring().class_sizes();
                for u in 0..t.n() {
                    if sizes[t.color(u)] == 1 {
                        continue;
                    }
                    let child = t.individualize(&[u])?;
                    if !tried.insert(canonical_form(&child)?) {
                        continue;
                    }
                    let d = 1 + self.best(&child)?;
                    answer = answer.min(d);
                    if answer <= 1 {
                        break 'outer;
                    }
                }
            }
        }
        self.memo.insert(key, answer);
        Ok(answer)
    }
}

/// Exhaustive minimum depth over trees built from k-WL refinement, flips,
/// component splits and single-vertex individualization, where only
/// individualization costs depth. Vertex caps: 9 for
/// [`FlipMode::CanonicalOnly`], 7 for [`FlipMode::EnumerateSmall`].
pub fn exact_restricted_depth(g: &ColoredGraph, k: usize, mode: FlipMode) -> Result<usize> {
    if !(1..=2).contains(&k) {
        return invalid(format!("exact depth supports k = 1 or 2, got {k}"));
    }
    if g.n() > mode.cap() {
        return Err(Error::Cap(format!(
            "exact depth in {mode:?} mode accepts n <= {}, got {}",
            mode.cap(),
            g.n()
        )));
    }
    let mut search = Search { k, mode, memo: HashMap::new() };
    search.best(g)
}
