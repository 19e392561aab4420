//! Builds an IRC tree, writes it as JSON, reads it back and validates it.
//! Also shows the validator rejecting a tampered tree, and a certificate
//! that uses twin quotients.
//!
//! Run with `cargo run --example irc_tree`.

use wlforge::graph::families;
use wlforge::irc::{
    build_greedy, deserialize_tree, lemma_trace, serialize_tree, validate_tree, verify_certificate, verify_report,
    NodeKind, Strategy,
};

fn print_node(node: &wlforge::irc::IrcNode, indent: usize) {
    let label = match &node.kind {
        NodeKind::Individualize(u) => format!("individualize {u}"),
        other => other.name().to_string(),
    };
    println!("{:indent$}{label} (n={}, colors={})", "", node.graph.n(), node.graph.num_colors());
    for child in &node.children {
        print_node(child, indent + 2);
    }
}

fn main() -> wlforge::Result<()> {
    let c6 = families::cycle(6);
    let report = build_greedy(&c6, 1, Strategy::Xi)?;
    let tree = report.tree();
    print_node(&tree.root, 0);

    let json = serialize_tree(tree);
    let back = deserialize_tree(json.as_bytes())?;
    println!("round trip valid: {}, {} bytes of JSON", validate_tree(&back).is_valid(), json.len());

    // Drop the individualized vertex's color: the step no longer matches.
    let mut tampered = back.clone();
    let mut node = &mut tampered.root;
    while !matches!(node.kind, NodeKind::Individualize(_)) {
        node = &mut node.children[0];
    }
    node.children[0].graph = node.graph.clone();
    println!("tampered tree: {:?}", validate_tree(&tampered).violation);

    // Blowing every vertex of C5 up into two false twins keeps the twins
    // through refinement, so at k = 2 the builder quotients them away and
    // emits a certificate with a lemma trace.
    let edges: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| {
            let j = (i + 1) % 5;
            [(2 * i, 2 * j), (2 * i, 2 * j + 1), (2 * i + 1, 2 * j), (2 * i + 1, 2 * j + 1)]
        })
        .collect();
    let g = wlforge::ColoredGraph::uncolored(10, &edges)?;
    let report = build_greedy(&g, 2, Strategy::Xi)?;
    match &report.certificate {
        Some(cert) => {
            println!("certificate depth {:?}", verify_certificate(cert));
            for step in lemma_trace(cert).iter().take(4) {
                println!("    {} at '{}' (n={})", step.lemma, step.path, step.n);
            }
        }
        None => println!("literal tree of depth {}", report.depth_bound),
    }
    println!("report verified: {:?}", verify_report(&report, &g));
    Ok(())
}
