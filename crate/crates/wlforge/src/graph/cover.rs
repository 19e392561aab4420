use super::ColoredGraph;
use crate::error::{Error, Result};

/// Default node budget for [`vertex_cover_exact`].
pub const DEFAULT_COVER_BUDGET: u64 = 50_000_000;

/// True iff every edge has an endpoint in `cover`.
pub fn is_vertex_cover(g: &ColoredGraph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        if v < g.n() {
            inside[v] = true;
        }
    }
    g.edges().into_iter().all(|(u, v)| inside[u] || inside[v])
}

struct Search {
    adj: Vec<u64>,
    nodes: u64,
    limit: u64,
}

impl Search {
    /// Minimum cover size of the edges inside `active`, or `upper` if that
    /// minimum is at least `upper`.
    fn min_cover(&mut self, mut active: u64, upper: usize) -> Result<usize> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Budget(self.nodes));
        }
        let mut forced = 0usize;
        loop {
            if forced >= upper {
                return Ok(upper);
            }
            let mut best_v = usize::MAX;
            let mut best_deg = 0;
            let mut edges = 0;
            let mut pendant = None;
            let mut rest = active;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (self.adj[v] & active).count_ones() as usize;
                edges += d;
                if d > best_deg {
                    best_deg = d;
                    best_v = v;
                }
                if d == 1 && pendant.is_none() {
                    pendant = Some(v);
                }
            }
            edges /= 2;
            if best_deg == 0 {
                return Ok(forced);
            }
            let budget = upper - forced;
            if edges > (budget - 1) * best_deg {
                return Ok(upper);
            }
            if let Some(v) = pendant {
                // Taking the neighbor of a pendant vertex is always optimal.
                let w = (self.adj[v] & active).trailing_zeros() as usize;
                active &= !(1u64 << w) & !(1u64 << v);
                forced += 1;
                continue;
            }
            let v = best_v;
            let mut best = budget;
            let with_v = self.min_cover(active & !(1u64 << v), best - 1)? + 1;
            best = best.min(with_v);
            let nbrs = self.adj[v] & active;
            let k = nbrs.count_ones() as usize;
            if k < best {
                let without = self.min_cover(active & !nbrs & !(1u64 << v), best - k)? + k;
                best = best.min(without);
            }
            return Ok(forced + best);
        }
    }

    /// Smallest cover size respecting the include/exclude decisions.
    fn constrained(&mut self, all: u64, include: u64, exclude: u64, upper: usize) -> Result<usize> {
        let mut forced = include;
        let mut rest = exclude;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & exclude != 0 {
                return Ok(usize::MAX);
            }
            forced |= self.adj[v];
        }
        let c = forced.count_ones() as usize;
        if c > upper {
            return Ok(usize::MAX);
        }
        let active = all & !forced & !exclude;
        let extra = self.min_cover(active, upper - c + 1)?;
        Ok(c + extra)
    }
}

/// A minimum vertex cover by branch and bound over max-degree vertices; among
/// minimum covers the lexicographically smallest sorted vertex list is
/// returned. `limit` bounds the number of search nodes.
pub fn vertex_cover_exact(g: &ColoredGraph, limit: u64) -> Result<Vec<usize>> {
    let n = g.n();
    if n > 64 {
        return Err(Error::Cap(format!("exact vertex cover supports n <= 64, got {n}")));
    }
    let adj: Vec<u64> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w))).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { adj, nodes: 0, limit };
    let r = search.min_cover(all, n + 1)?;
    let (mut include, mut exclude) = (0u64, 0u64);
    for v in 0..n {
        let bit = 1u64 << v;
        if search.constrained(all, include | bit, exclude, r)? <= r {
            include |= bit;
        } else {
            exclude |= bit;
        }
    }
    let cover: Vec<usize> = (0..n).filter(|&v| include >> v & 1 == 1).collect();
    debug_assert_eq!(cover.len(), r);
    Ok(cover)
}
