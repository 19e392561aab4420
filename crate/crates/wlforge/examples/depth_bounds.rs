//! Greedy IRC depth bounds for every strategy, and the dimension bound
//! max(2, k) + depth they imply.
//!
//! Run with `cargo run --example depth_bounds`.

use wlforge::graph::families;
use wlforge::irc::{build_greedy, dimension_bound, Strategy};

fn main() -> wlforge::Result<()> {
    let graphs = [
        ("C6", families::cycle(6)),
        ("P7", families::path(7)),
        ("Petersen", families::petersen()),
        ("L(2,5)", families::rook_2m(5)),
        ("K3,4", families::complete_bipartite(3, 4)),
        ("Moebius-Kantor", families::mobius_kantor()),
    ];
    println!("{:15} {:>6} {:>12} {:>6} {:>6}", "graph", "xi k=1", "vertex-cover", "xi k=2", "wl2");
    for (name, g) in &graphs {
        let runs = [(1, Strategy::Xi), (1, Strategy::VertexCover), (2, Strategy::Xi), (2, Strategy::Wl2)];
        let depths: Vec<usize> =
            runs.iter().map(|&(k, s)| build_greedy(g, k, s).map(|r| r.depth_bound)).collect::<Result<_, _>>()?;
        println!("{name:15} {:>6} {:>12} {:>6} {:>6}", depths[0], depths[1], depths[2], depths[3]);
    }
    let best = dimension_bound(&families::petersen(), 2)?;
    println!("Petersen: best strategy {} gives WL dimension <= {}", best.strategy, best.dimension_bound);
    Ok(())
}
