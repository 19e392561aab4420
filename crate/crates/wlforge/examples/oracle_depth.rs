//! Exact restricted WL depth by exhaustive search, compared with the
//! greedy upper bound.
//!
//! Run with `cargo run --example oracle_depth`.

use wlforge::graph::families;
use wlforge::irc::{build_greedy, Strategy};
use wlforge::oracle::{canonical_form, exact_restricted_depth, find_isomorphism, FlipMode};

fn main() -> wlforge::Result<()> {
    let graphs = [
        ("C6", families::cycle(6), 1),
        ("C7", families::cycle(7), 1),
        ("K5", families::complete(5), 1),
        ("P6", families::path(6), 1),
        ("L(2,3)", families::rook_2m(3), 2),
        ("C8", families::cycle(8), 2),
    ];
    for (name, g, k) in &graphs {
        let exact = exact_restricted_depth(g, *k, FlipMode::CanonicalOnly)?;
        let greedy = build_greedy(g, *k, Strategy::Xi)?.depth_bound;
        println!("{name:7} k={k}: exact {exact}, greedy {greedy}");
    }

    let a = families::cycle(6);
    let b = a.permuted(&[3, 1, 4, 0, 5, 2]);
    println!("same canonical form: {}", canonical_form(&a)? == canonical_form(&b)?);
    println!("isomorphism: {:?}", find_isomorphism(&a, &b)?);
    Ok(())
}
