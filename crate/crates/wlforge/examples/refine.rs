//! Color refinement and k-WL on a few standard graphs.
//!
//! Run with `cargo run --example refine`.

use wlforge::graph::families;
use wlforge::wl::{color_refinement, pair_stats, refine_kwl, vertex_coloring};

fn main() -> wlforge::Result<()> {
    let graphs = [
        ("C6", families::cycle(6)),
        ("K1,4", families::star(4)),
        ("P5", families::path(5)),
        ("Petersen", families::petersen()),
    ];
    for (name, g) in &graphs {
        let cr = color_refinement(g);
        print!("{name:9} 1-WL: {} classes in {} rounds", cr.coloring.num_colors(), cr.rounds);
        for k in 2..=3 {
            if k == 3 && g.n() > 6 {
                break;
            }
            let t = refine_kwl(g, k)?;
            print!(", {k}-WL: {} tuple classes", t.num_colors());
        }
        println!();
    }

    // Pair-color statistics: xi[c] counts how many extra 2-WL colors
    // the class c sees beyond one per class pair.
    // They are defined on a 2-WL-stable vertex coloring.
    let p5 = families::path(5);
    let stable = p5.with_coloring(vertex_coloring(&p5, 2)?)?;
    let stats = pair_stats(&stable)?;
    println!("P5 xi per vertex class: {:?}", stats.xi);
    Ok(())
}
