//! Which WL dimension tells two graphs apart.
//!
//! Run with `cargo run --example distinguish`.

use wlforge::graph::{families, ColoredGraph};
use wlforge::wl::distinguish;

fn first_distinguishing_k(g: &ColoredGraph, h: &ColoredGraph) -> wlforge::Result<Option<usize>> {
    for k in 1..=3 {
        if distinguish(g, h, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn main() -> wlforge::Result<()> {
    let two_triangles = families::disjoint_union(&[families::cycle(3), families::cycle(3)]);
    let pairs = [
        ("K3 vs P3", families::complete(3), families::path(3)),
        ("C6 vs 2xK3", families::cycle(6), two_triangles),
        ("prism vs K3,3", families::prism(), families::complete_bipartite(3, 3)),
        ("C5 vs C5", families::cycle(5), families::cycle(5)),
    ];
    for (label, g, h) in &pairs {
        match first_distinguishing_k(g, h)? {
            Some(k) => println!("{label:14} distinguished by {k}-WL"),
            None => println!("{label:14} equivalent up to 3-WL"),
        }
    }
    Ok(())
}
