//! The vertex-cover strategy step by step: an exact minimum cover, the
//! cases chosen along the way, and the resulting bound 2r/3 + 1.
//!
//! Run with `cargo run --example vertex_cover`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wlforge::graph::{families, vertex_cover_exact, DEFAULT_COVER_BUDGET};
use wlforge::irc::build_vertex_cover;

fn main() -> wlforge::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let graphs = [
        families::cycle(9),
        families::petersen(),
        families::generalized_petersen(6, 2),
        families::complete_bipartite(2, 5),
        families::random_connected(11, 0.25, &mut rng),
    ];
    for (i, g) in graphs.iter().enumerate() {
        let cover = vertex_cover_exact(g, DEFAULT_COVER_BUDGET)?;
        let report = build_vertex_cover(g, Some(&cover))?;
        let limit = 2 * cover.len() / 3 + 1;
        println!(
            "graph {i}: {} edges, cover {:?} (r = {}), depth {} <= {limit}",
            g.num_edges(),
            cover,
            cover.len(),
            report.depth_bound
        );
        for case in &report.case_tags {
            println!("    step: {case}");
        }
    }
    Ok(())
}
