//! Weisfeiler–Leman refinement, IRC trees with certified WL depth bounds,
//! and Cai–Fürer–Immerman instances.
//!
//! * [`graph`]: colored graphs, graph6 and JSON I/O, twins, exact vertex
//!   covers, standard families.
//! * [`wl`]: color refinement and k-WL for k up to 3, stability checks,
//!   pair-color statistics.
//! * [`flip`]: flip functions and the canonical majority flip.
//! * [`irc`]: IRC trees, their validator, JSON form, greedy builders and
//!   depth reports.
//! * [`oracle`]: literal reference implementations for testing: naive
//!   k-WL, canonical forms, isomorphism search, exhaustive restricted depth.
//! * [`cfi`]: CFI graphs, exact treewidth, the indistinguishability
//!   experiment.
//! * [`cli`]: the `wlforge` command line.
//!
//! Each capability has a runnable program under `examples/`:
//! `refine`, `distinguish`, `depth_bounds`, `vertex_cover`, `irc_tree`,
//! `oracle_depth`, `cfi_experiment` and `graph_io`.
//!
//! ```
//! use wlforge::graph::families;
//! use wlforge::irc::{build_greedy, validate_tree, Strategy};
//!
//! let c6 = families::cycle(6);
//! let report = build_greedy(&c6, 1, Strategy::Xi).unwrap();
//! assert_eq!(report.depth_bound, 1);
//! assert!(validate_tree(report.literal_tree.as_ref().unwrap()).is_valid());
//! ```

pub mod cfi;
pub mod cli;
pub mod error;
pub mod flip;
pub mod graph;
pub mod irc;
pub mod oracle;
pub mod wl;

pub use error::{Error, Result};
pub use graph::{ColoredGraph, Coloring};
