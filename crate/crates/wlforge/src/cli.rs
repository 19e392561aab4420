//! The `wlforge` command line. Exit codes: 0 on success (verdicts are
//! output, not status), 1 on usage, parse and cap errors, and 2 for a
//! "distinguished" or "invalid" verdict when `--status-exit` is given.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::cfi::{base_library, cfi, indistinguishability_experiment};
use crate::error::{Error, Result};
use crate::graph::{families, parse_graph6, parse_graph_auto, serialize_graph6, to_colored_json, ColoredGraph, Coloring};
use crate::irc::{
    build_greedy, deserialize_tree, dimension_bound, serialize_tree, validate_tree, verify_certificate, DepthReport,
    Strategy,
};
use crate::oracle::{exact_restricted_depth, FlipMode};
use crate::wl::{color_refinement, refine_kwl};

/// Seed used by generated inputs when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "wlforge", version, about = "Weisfeiler-Leman refinement, IRC tree depth bounds and CFI instances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for inputs holding several graphs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Seed for generated inputs (`gnp:N:P[:COUNT]`).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Xi,
    VertexCover,
    Wl2,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Xi => Strategy::Xi,
            StrategyArg::VertexCover => Strategy::VertexCover,
            StrategyArg::Wl2 => Strategy::Wl2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlipModeArg {
    Canonical,
    Enumerate,
}

impl From<FlipModeArg> for FlipMode {
    fn from(m: FlipModeArg) -> Self {
        match m {
            FlipModeArg::Canonical => FlipMode::CanonicalOnly,
            FlipModeArg::Enumerate => FlipMode::EnumerateSmall,
        }
    }
}

/// Where graphs come from and how they are colored.
#[derive(clap::Args, Debug, Clone)]
pub struct InputArgs {
    /// graph6 file (one graph per line), colored JSON file, `-` for stdin,
    /// or `gnp:N:P[:COUNT]` for seeded random graphs.
    pub input: String,
    /// File of whitespace-separated vertex colors applied to every graph.
    #[arg(long)]
    pub colors: Option<PathBuf>,
    /// Ignore any input coloring.
    #[arg(long)]
    pub uncolored: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stable k-WL coloring: class counts, sizes and rounds.
    Refine {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
    },
    /// Greedy IRC tree and the depth bound it certifies.
    Depth {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        #[arg(long, value_enum, default_value_t = StrategyArg::Xi)]
        strategy: StrategyArg,
        /// Write the tree (or certificate) as JSON; with several graphs the
        /// index is appended as `PATH.i`.
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    /// Best depth over all strategies and the resulting dimension bound.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        #[arg(long)]
        tree_out: Option<PathBuf>,
    },
    /// Whether k-WL distinguishes two graphs.
    Distinguish {
        first: String,
        second: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
        #[arg(long)]
        uncolored: bool,
        /// Exit with status 2 when the graphs are distinguished.
        #[arg(long)]
        status_exit: bool,
    },
    /// CFI graph over a named base (K4, "K3,3", prism, petersen,
    /// mobius-kantor, Kn, Cn) or a base graph file.
    Cfi {
        base: String,
        /// Size of the twist set; the twist set is {0, .., t-1}.
        #[arg(long, default_value_t = 0)]
        twist: usize,
        /// Output file: colored JSON if it ends in `.json`, graph6 otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop the gadget coloring.
        #[arg(long)]
        uncolored: bool,
        /// Also compare CFI(base) with the twisted graph for k = 1..=K.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        experiment: Option<u8>,
    },
    /// Exhaustive restricted WL depth of a small graph.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
        #[arg(long, value_enum, default_value_t = FlipModeArg::Canonical)]
        flip_mode: FlipModeArg,
    },
    /// Check an IRC tree JSON file and print its depth.
    ValidateTree {
        tree: PathBuf,
        /// Exit with status 2 when the tree is invalid.
        #[arg(long)]
        status_exit: bool,
    },
}

fn read_source(source: &str) -> Result<Vec<u8>> {
    if source == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read(source).map_err(|e| Error::Invalid(format!("reading {source}: {e}")))
}

fn generated(spec: &str, seed: u64) -> Result<Vec<ColoredGraph>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Invalid(format!("expected gnp:N:P[:COUNT], got {spec:?}"));
    if parts.len() < 3 || parts.len() > 4 {
        return Err(bad());
    }
    let n: usize = parts[1].parse().map_err(|_| bad())?;
    let p: f64 = parts[2].parse().map_err(|_| bad())?;
    let count: usize = parts.get(3).map_or(Ok(1), |c| c.parse()).map_err(|_| bad())?;
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(bad());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| families::gnp(n, p, &mut rng)).collect())
}

fn parse_colors(path: &Path) -> Result<Vec<u64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("reading {}: {e}", path.display())))?;
    text.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| Error::Invalid(format!("bad color {t:?} in {}", path.display()))))
        .collect()
}

/// All graphs named by `source`: every graph6 line, or one JSON document.
fn load_graphs(source: &str, seed: u64) -> Result<Vec<ColoredGraph>> {
    if source.starts_with("gnp:") {
        return generated(source, seed);
    }
    let bytes = read_source(source)?;
    if bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') {
        return Ok(vec![parse_graph_auto(&bytes)?]);
    }
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in bytes.split_inclusive(|&b| b == b'\n') {
        let body = line.strip_suffix(b"\n").unwrap_or(line);
        let body = body.strip_suffix(b"\r").unwrap_or(body);
        if !body.iter().all(|b| b.is_ascii_whitespace()) {
            graphs.push(parse_graph6(body).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => Error::Graph6 { offset: o + offset, message },
                other => other,
            })?);
        }
        offset += line.len();
    }
    if graphs.is_empty() {
        return Err(Error::Invalid(format!("{source} contains no graph")));
    }
    Ok(graphs)
}

fn load_input(args: &InputArgs, seed: u64) -> Result<Vec<ColoredGraph>> {
    let mut graphs = load_graphs(&args.input, seed)?;
    if args.uncolored {
        graphs = graphs.iter().map(ColoredGraph::uncolored_copy).collect();
    }
    if let Some(path) = &args.colors {
        let colors = parse_colors(path)?;
        graphs = graphs
            .iter()
            .map(|g| g.with_coloring(Coloring::from_keys(&colors)))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(graphs)
}

fn load_single(source: &str, uncolored: bool, seed: u64) -> Result<ColoredGraph> {
    let graphs = load_graphs(source, seed)?;
    if graphs.len() != 1 {
        return Err(Error::Invalid(format!("{source} holds {} graphs, expected one", graphs.len())));
    }
    let g = graphs.into_iter().next().expect("one graph");
    Ok(if uncolored { g.uncolored_copy() } else { g })
}

/// Runs `f` on every graph, in parallel when asked, keeping input order.
fn per_graph<T: Send>(
    graphs: &[ColoredGraph],
    jobs: Option<u16>,
    f: impl Fn(&ColoredGraph) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    match jobs {
        Some(j) if j > 1 && graphs.len() > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(usize::from(j))
                .build()
                .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
            pool.install(|| graphs.par_iter().map(&f).collect())
        }
        _ => graphs.iter().map(f).collect(),
    }
}

fn sizes_sorted(colors: &[u32], count: usize) -> Vec<usize> {
    let mut sizes = vec![0usize; count];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn refine_record(g: &ColoredGraph, k: usize) -> Result<serde_json::Value> {
    if k == 1 {
        let r = color_refinement(g);
        let mut sizes = r.coloring.class_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        return Ok(json!({"n": g.n(), "k": 1, "classes": r.coloring.num_colors(), "class_sizes": sizes, "rounds": r.rounds}));
    }
    let t = refine_kwl(g, k)?;
    let vertex = t.vertex_coloring();
    let mut vsizes = vertex.class_sizes();
    vsizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(json!({
        "n": g.n(),
        "k": k,
        "classes": t.num_colors(),
        "class_sizes": sizes_sorted(t.colors(), t.num_colors()),
        "vertex_classes": vertex.num_colors(),
        "vertex_class_sizes": vsizes,
        "rounds": t.rounds,
    }))
}

fn refine_text(v: &serde_json::Value) -> String {
    let k = v["k"].as_u64().unwrap_or(1);
    let what = match k {
        1 => "vertex",
        2 => "pair",
        _ => "triple",
    };
    let mut s = format!("n: {}\n{what} classes: {}\nclass sizes: {}\n", v["n"], v["classes"], v["class_sizes"]);
    if k > 1 {
        s += &format!("vertex classes: {}\nvertex class sizes: {}\n", v["vertex_classes"], v["vertex_class_sizes"]);
    }
    s += &format!("rounds: {}\n", v["rounds"]);
    s
}

fn depth_text(r: &DepthReport) -> String {
    let mut s = format!(
        "strategy: {}\nk: {}\ndepth bound: {}\ndimension bound: {}\ntree: {} ({} nodes)\n",
        r.strategy,
        r.k,
        r.depth_bound,
        r.dimension_bound,
        if r.is_literal() { "literal" } else { "certificate with twin quotients" },
        r.tree().root.size()
    );
    if !r.case_tags.is_empty() {
        s += &format!("cases: {}\n", r.case_tags.join("; "));
    }
    s
}

fn write_tree(path: &Path, index: usize, total: usize, r: &DepthReport) -> Result<()> {
    let target = if total == 1 { path.to_path_buf() } else { PathBuf::from(format!("{}.{index}", path.display())) };
    std::fs::write(&target, serialize_tree(r.tree()))
        .map_err(|e| Error::Invalid(format!("writing {}: {e}", target.display())))
}

fn resolve_base(name: &str) -> Result<(String, ColoredGraph)> {
    for (n, g) in base_library() {
        if n.eq_ignore_ascii_case(name) {
            return Ok((n.to_string(), g));
        }
    }
    let numbered = |prefix: char| -> Option<usize> {
        let rest = name.strip_prefix(prefix).or_else(|| name.strip_prefix(prefix.to_ascii_lowercase()))?;
        rest.parse().ok()
    };
    if let Some(m) = numbered('K').filter(|&m| m >= 2) {
        return Ok((format!("K{m}"), families::complete(m)));
    }
    if let Some(m) = numbered('C').filter(|&m| m >= 3) {
        return Ok((format!("C{m}"), families::cycle(m)));
    }
    if Path::new(name).is_file() {
        return Ok((name.to_string(), load_single(name, false, DEFAULT_SEED)?));
    }
    Err(Error::Invalid(format!("unknown base graph {name:?}")))
}

struct Outcome {
    text: String,
    code: i32,
}

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, code: 0 })
}

fn lines(values: &[serde_json::Value]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Refine { input, k } => {
            let graphs = load_input(input, cli.seed)?;
            let records = per_graph(&graphs, cli.jobs, |g| refine_record(g, usize::from(*k)))?;
            ok(if json_out { lines(&records) } else { records.iter().map(refine_text).collect::<Vec<_>>().join("\n") })
        }
        Command::Depth { input, k, strategy, tree_out } => {
            let graphs = load_input(input, cli.seed)?;
            let reports = per_graph(&graphs, cli.jobs, |g| build_greedy(g, usize::from(*k), (*strategy).into()))?;
            if let Some(path) = tree_out {
                for (i, r) in reports.iter().enumerate() {
                    write_tree(path, i, reports.len(), r)?;
                }
            }
            ok(if json_out {
                lines(&reports.iter().map(DepthReport::summary_json).collect::<Vec<_>>())
            } else {
                reports.iter().map(depth_text).collect::<Vec<_>>().join("\n")
            })
        }
        Command::Bound { input, k, tree_out } => {
            let graphs = load_input(input, cli.seed)?;
            let reports = per_graph(&graphs, cli.jobs, |g| dimension_bound(g, usize::from(*k)))?;
            if let Some(path) = tree_out {
                for (i, r) in reports.iter().enumerate() {
                    write_tree(path, i, reports.len(), r)?;
                }
            }
            ok(if json_out {
                lines(&reports.iter().map(DepthReport::summary_json).collect::<Vec<_>>())
            } else {
                reports.iter().map(depth_text).collect::<Vec<_>>().join("\n")
            })
        }
        Command::Distinguish { first, second, k, uncolored, status_exit } => {
            let g = load_single(first, *uncolored, cli.seed)?;
            let h = load_single(second, *uncolored, cli.seed)?;
            let k = usize::from(*k);
            let verdict = crate::wl::distinguish(&g, &h, k)?;
            let text = if json_out {
                format!("{}\n", json!({"k": k, "distinguished": verdict}))
            } else if verdict {
                "distinguished\n".to_string()
            } else {
                format!("equivalent at k={k}\n")
            };
            Ok(Outcome { text, code: if verdict && *status_exit { 2 } else { 0 } })
        }
        Command::Cfi { base, twist, out, uncolored, experiment } => {
            let (name, g) = resolve_base(base)?;
            if *twist > g.n() {
                return Err(Error::Invalid(format!("twist size {twist} exceeds the {} base vertices", g.n())));
            }
            let twist_set: Vec<usize> = (0..*twist).collect();
            let inst = cfi(&g, &twist_set)?;
            let derived = if *uncolored { inst.uncolored() } else { inst.graph.clone() };
            let gadgets = inst.gadget_sizes();
            let expected: Vec<usize> = (0..g.n()).map(|v| 1usize << (g.degree(v) - 1)).collect();
            let size_law = gadgets == expected;
            let g6 = serialize_graph6(&derived);
            if let Some(path) = out {
                let body = if path.extension().is_some_and(|e| e == "json") {
                    to_colored_json(&derived)
                } else {
                    format!("{g6}\n")
                };
                std::fs::write(path, body).map_err(|e| Error::Invalid(format!("writing {}: {e}", path.display())))?;
            }
            let report = match experiment {
                Some(kmax) => Some(indistinguishability_experiment(&name, &g, usize::from(*kmax))?),
                None => None,
            };
            let mut uniform: Vec<usize> = gadgets.clone();
            uniform.dedup();
            if json_out {
                let mut v = json!({
                    "base": name,
                    "twist": twist_set,
                    "n": derived.n(),
                    "edges": derived.num_edges(),
                    "gadget_sizes": gadgets,
                    "size_law": size_law,
                });
                if out.is_none() {
                    v["graph6"] = json!(g6);
                }
                if let Some(r) = &report {
                    v["experiment"] = serde_json::to_value(&r.records).expect("serializable");
                    v["tw"] = json!(r.tw);
                    v["bound_respected"] = json!(r.bound_respected);
                }
                return ok(format!("{v}\n"));
            }
            let mut s = format!(
                "base: {name} ({} vertices)\ntwist: {twist_set:?}\nvertices: {}\nedges: {}\ngadget size: {}\nsize law: {}\n",
                g.n(),
                derived.n(),
                derived.num_edges(),
                if uniform.len() == 1 { uniform[0].to_string() } else { format!("{gadgets:?}") },
                if size_law { "ok" } else { "violated" }
            );
            if let Some(r) = &report {
                s += &format!("treewidth: {}\n", r.tw);
                for rec in &r.records {
                    s += &format!("k={}: {}\n", rec.k, if rec.distinguished { "distinguished" } else { "equivalent" });
                }
            }
            if out.is_none() {
                s += &format!("{g6}\n");
            }
            ok(s)
        }
        Command::Oracle { input, k, flip_mode } => {
            let graphs = load_input(input, cli.seed)?;
            let mode: FlipMode = (*flip_mode).into();
            let k = usize::from(*k);
            let depths = per_graph(&graphs, cli.jobs, |g| exact_restricted_depth(g, k, mode))?;
            let mode_name = match flip_mode {
                FlipModeArg::Canonical => "canonical",
                FlipModeArg::Enumerate => "enumerate",
            };
            ok(if json_out {
                lines(&depths.iter().map(|d| json!({"k": k, "flip_mode": mode_name, "depth": d})).collect::<Vec<_>>())
            } else {
                depths.iter().map(|d| format!("exact restricted depth: {d}\n")).collect()
            })
        }
        Command::ValidateTree { tree, status_exit } => {
            let bytes = std::fs::read(tree).map_err(|e| Error::Invalid(format!("reading {}: {e}", tree.display())))?;
            let t = deserialize_tree(&bytes)?;
            let (valid, depth, violation, literal) = if t.is_literal() {
                let v = validate_tree(&t);
                let d = if v.valid { crate::irc::depth(&t).ok() } else { None };
                (v.valid, d, v.violation, true)
            } else {
                match verify_certificate(&t) {
                    Ok(d) => (true, Some(d), None, false),
                    Err(e) => (false, None, Some(e), false),
                }
            };
            let text = if json_out {
                format!("{}\n", json!({"valid": valid, "literal": literal, "depth": depth, "violation": violation}))
            } else if valid {
                format!(
                    "valid {}\ndepth: {}\n",
                    if literal { "tree" } else { "certificate" },
                    depth.expect("valid trees have a depth")
                )
            } else {
                format!("invalid: {}\n", violation.unwrap_or_default())
            };
            Ok(Outcome { text, code: if !valid && *status_exit { 2 } else { 0 } })
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
