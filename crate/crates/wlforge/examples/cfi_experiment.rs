//! CFI graphs over the built-in base library: sizes, exact treewidth and
//! the smallest k at which k-WL separates the untwisted from the twisted
//! graph.
//!
//! Run with `cargo run --release --example cfi_experiment`.

use wlforge::cfi::{base_library, cfi, indistinguishability_experiment};

fn main() -> wlforge::Result<()> {
    for (name, base) in base_library() {
        let plain = cfi(&base, &[])?;
        // 3-WL on the larger bases takes a while; stop at 2 there.
        let k_max = if plain.graph.n() <= 24 { 3 } else { 2 };
        let report = indistinguishability_experiment(name, &base, k_max)?;
        println!(
            "{name:14} |V|={:3} tw={} min distinguishing k: {:?} (checked up to {k_max}), lower bound respected: {}",
            plain.graph.n(),
            report.tw,
            report.min_distinguishing_k,
            report.bound_respected
        );
    }
    Ok(())
}
