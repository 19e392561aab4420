//! graph6 and colored JSON round trips, and the error positions reported
//! for malformed input.
//!
//! Run with `cargo run --example graph_io`.

use wlforge::graph::{families, parse_colored_json, parse_graph6, serialize_graph6, to_colored_json};
use wlforge::wl::refine_1wl;

fn main() -> wlforge::Result<()> {
    let g = families::petersen();
    let text = serialize_graph6(&g);
    println!("Petersen as graph6: {text}");
    let back = parse_graph6(text.as_bytes())?;
    println!("round trip equal: {}", back.same_graph(&g));

    let colored = g.with_coloring(refine_1wl(&families::path(10)))?;
    let json = to_colored_json(&colored);
    println!("colored JSON: {json}");
    println!("JSON round trip keeps colors: {}", parse_colored_json(json.as_bytes())? == colored);

    for bad in ["I?", "A~~", "A!"] {
        println!("{bad:?}: {}", parse_graph6(bad.as_bytes()).unwrap_err());
    }
    println!("{}", parse_colored_json(br#"{"n": 2, "edges": [[0, 5]]}"#).unwrap_err());
    Ok(())
}
