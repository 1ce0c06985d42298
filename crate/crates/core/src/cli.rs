//! Command line front end. Reports go to the given writer as `key=value`
//! lines; graphs and orientations are only ever written to files.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::construct::{
    cograph_bounds, cograph_orient, low_degree_orient, outerplanar_strip_orient, quasi_threshold_orient, split_orient,
    two_cut_block_orient, uniform_block_orient,
};
use crate::exact::{decide_k_orientation, proper_orientation_number, Decision, SearchConfig, SolveError};
use crate::graph::Graph;
use crate::instances::{
    build_vc_certificate, cobipartite_kernel, gen_block_tight, gen_f, gen_s, gen_split_tight, gen_z,
    random_class_instance, reduce_vertex_cover, split_kernel, GadgetKind, GadgetMeta, InstanceClass, ReductionOutput,
    VertexRole,
};
use crate::io::{parse_graph_bytes, parse_orientation_bytes, write_graph, write_orientation};
use crate::orientation::{is_compensated_proper, is_proper, max_indegree, CompensationSpec, Orientation};
use crate::recognize::{
    block_cut_tree, chordal_peo, clique_number_chordal, cobipartition, cograph_cotree, is_claw_free,
    maximal_outerplane_weak_dual, quasi_threshold_cotree, split_partition,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable overriding `--seed`.
pub const SEED_VAR: &str = "ORIENTKIT_SEED";

#[derive(Debug, Parser)]
#[command(name = "orientkit", version, about = "Proper orientations of graphs")]
pub struct Cli {
    /// Worker threads for the exact solver.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact proper orientation number, or a decision for a given k.
    Solve {
        graph: PathBuf,
        #[arg(long, conflicts_with = "opt")]
        k: Option<usize>,
        #[arg(long)]
        opt: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Class-specific constructive orientation.
    Orient {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = OrientClass::Auto)]
        class: OrientClass,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks an orientation file against a graph file.
    Verify {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long, num_args = 3, value_names = ["U", "C", "D"])]
        compensate: Option<Vec<usize>>,
    },
    /// Reports class membership.
    Recognize { graph: PathBuf },
    /// Writes a generated graph and a role sidecar.
    Generate {
        #[arg(long, value_enum, group = "source")]
        gadget: Option<GadgetArg>,
        /// Head parameter of F.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, group = "source")]
        reduce_vc: Option<PathBuf>,
        #[arg(long, value_enum, group = "source")]
        tight: Option<TightArg>,
        #[arg(long)]
        param: Option<usize>,
        /// e.g. `split`, `uniform-block:3`, `tree:2`.
        #[arg(long, group = "source")]
        random: Option<String>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Defaults to the output path with `.roles` appended.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Equivalent smaller instance.
    Kernelize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: KernelClass,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Vertex cover reduction on a cubic graph, with an optional certificate.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<usize>>,
        #[arg(long, requires = "cover")]
        certificate_out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientClass {
    Auto,
    QuasiThreshold,
    Split,
    UniformBlock,
    TwoCutBlock,
    LowDegree,
    OuterplanarStrip,
    Cograph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetArg {
    #[value(name = "S")]
    S,
    #[value(name = "F")]
    F,
    #[value(name = "Z")]
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TightArg {
    Split,
    Block,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelClass {
    Split,
    Cobipartite,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Precondition(String),
    #[error("node budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget { .. } => EXIT_BUDGET,
            _ => EXIT_PRECONDITION,
        }
    }
}

fn pre<E: Display>(e: E) -> CliError {
    CliError::Precondition(e.to_string())
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { nodes } => CliError::Budget { nodes },
            other => pre(other),
        }
    }
}

/// Ordered `key=value` lines.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn put(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        self.lines.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path, rep: &mut Report) -> Result<Graph, CliError> {
    let bytes = read(path)?;
    rep.put("input_sha256", hex::encode(Sha256::digest(&bytes)));
    let g = parse_graph_bytes(&bytes).map_err(|e| pre(format!("{}: {e}", path.display())))?;
    rep.put("n", g.n());
    rep.put("m", g.m());
    Ok(g)
}

fn join_ids(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `args` (program name first), runs the command and writes the
/// report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                eprint!("{e}");
                return EXIT_PRECONDITION;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let start = Instant::now();
    let mut rep = Report::default();
    rep.put("command", command_name(&cli.command));
    let result = dispatch(&cli, &mut rep);
    let code = match &result {
        Ok(()) => {
            rep.put("status", "ok");
            EXIT_OK
        }
        Err(e) => {
            rep.put("status", if matches!(e, CliError::Budget { .. }) { "budget_exceeded" } else { "error" });
            let line = e.to_string().replace('\n', " ");
            eprintln!("error: {line}");
            rep.put("error", line);
            e.exit_code()
        }
    };
    rep.put("elapsed_ms", start.elapsed().as_millis());
    let _ = out.write_all(rep.render().as_bytes());
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Orient { .. } => "orient",
        Command::Verify { .. } => "verify",
        Command::Recognize { .. } => "recognize",
        Command::Generate { .. } => "generate",
        Command::Kernelize { .. } => "kernelize",
        Command::Reduce { .. } => "reduce",
    }
}

fn dispatch(cli: &Cli, rep: &mut Report) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve { graph, k, opt: _, budget, witness_out } => {
            let g = load_graph(graph, rep)?;
            let cfg = SearchConfig { node_budget: *budget, threads: cli.threads.max(1), ..SearchConfig::default() };
            solve(&g, *k, &cfg, witness_out.as_deref(), rep)
        }
        Command::Orient { graph, class, out } => {
            let g = load_graph(graph, rep)?;
            let (name, bound, d) = orient(&g, *class)?;
            rep.put("class", name);
            rep.put("bound", bound);
            rep.put("max_indegree", max_indegree(&d));
            rep.put("proper", is_proper(&g, &d));
            if let Some(path) = out {
                write(path, &write_orientation(&g, &d))?;
            }
            Ok(())
        }
        Command::Verify { graph, orientation, compensate } => {
            let g = load_graph(graph, rep)?;
            let d = parse_orientation_bytes(&g, &read(orientation)?)
                .map_err(|e| pre(format!("{}: {e}", orientation.display())))?;
            rep.put("proper", is_proper(&g, &d));
            rep.put("max_indegree", max_indegree(&d));
            if let Some(&[u, c, dd]) = compensate.as_deref() {
                let spec = CompensationSpec { u, c, d: dd };
                rep.put("compensated_proper", is_compensated_proper(&g, &d, spec));
            }
            Ok(())
        }
        Command::Recognize { graph } => {
            let g = load_graph(graph, rep)?;
            recognize(&g, rep);
            Ok(())
        }
        Command::Generate { gadget, i, k, reduce_vc, tight, param, random, size, seed, out, roles } => {
            let roles = roles.clone().unwrap_or_else(|| sidecar_path(out));
            let (g, sidecar) = if let Some(kind) = gadget {
                let meta = match kind {
                    GadgetArg::S => gen_s(need(*k, "--k")?),
                    GadgetArg::F => gen_f(need(*i, "--i")?, need(*k, "--k")?).map_err(pre)?,
                    GadgetArg::Z => gen_z(need(*k, "--k")?).map_err(pre)?,
                };
                let text = gadget_roles(&meta.1);
                (meta.0, text)
            } else if let Some(path) = reduce_vc {
                let input = load_graph(path, rep)?;
                let red = reduce_vertex_cover(&input, need(*k, "--k")?).map_err(pre)?;
                let text = reduction_roles(&red);
                (red.graph, text)
            } else if let Some(t) = tight {
                let p = need(*param, "--param")?;
                let g = match t {
                    TightArg::Split => gen_split_tight(p),
                    TightArg::Block => gen_block_tight(p),
                }
                .map_err(pre)?;
                let kind = if *t == TightArg::Split { "split-tight" } else { "block-tight" };
                (g, format!("kind={kind}\nparam={p}\n"))
            } else if let Some(name) = random {
                let class: InstanceClass = name.parse().map_err(pre)?;
                let seed = match std::env::var(SEED_VAR) {
                    Ok(s) => s.trim().parse().map_err(|_| pre(format!("{SEED_VAR} is not an integer")))?,
                    Err(_) => *seed,
                };
                let size = need(*size, "--size")?;
                let g = random_class_instance(class, size, seed).map_err(pre)?;
                rep.put("seed", seed);
                (g, format!("kind=random\nclass={name}\nsize={size}\nseed={seed}\n"))
            } else {
                return Err(pre("one of --gadget, --reduce-vc, --tight, --random is required"));
            };
            rep.put("out_n", g.n());
            rep.put("out_m", g.m());
            write(out, &write_graph(&g))?;
            write(&roles, &sidecar)?;
            Ok(())
        }
        Command::Kernelize { graph, class, k, out } => {
            let g = load_graph(graph, rep)?;
            let (h, k2) = match class {
                KernelClass::Split => split_kernel(&g, *k),
                KernelClass::Cobipartite => cobipartite_kernel(&g, *k),
            }
            .map_err(pre)?;
            rep.put("k", k2);
            rep.put("kernel_n", h.n());
            rep.put("kernel_m", h.m());
            write(out, &write_graph(&h))?;
            Ok(())
        }
        Command::Reduce { graph, k, out, roles, cover, certificate_out } => {
            let input = load_graph(graph, rep)?;
            let red = reduce_vertex_cover(&input, *k).map_err(pre)?;
            rep.put("k_prime", red.k_prime);
            rep.put("out_n", red.graph.n());
            rep.put("out_m", red.graph.m());
            rep.put("chordal", chordal_peo(&red.graph).is_ok());
            rep.put("diameter", red.graph.diameter().map_or("inf".to_string(), |d| d.to_string()));
            write(out, &write_graph(&red.graph))?;
            write(&roles.clone().unwrap_or_else(|| sidecar_path(out)), &reduction_roles(&red))?;
            if let Some(cover) = cover {
                let d = build_vc_certificate(&red, cover).map_err(pre)?;
                rep.put("certificate_proper", is_proper(&red.graph, &d));
                rep.put("certificate_max_indegree", max_indegree(&d));
                if let Some(path) = certificate_out {
                    write(path, &write_orientation(&red.graph, &d))?;
                }
            }
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| pre(format!("{flag} is required here")))
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".roles");
    PathBuf::from(s)
}

fn solve(
    g: &Graph,
    k: Option<usize>,
    cfg: &SearchConfig,
    witness_out: Option<&Path>,
    rep: &mut Report,
) -> Result<(), CliError> {
    let witness = match k {
        Some(k) => {
            rep.put("k", k);
            match decide_k_orientation(g, k, cfg)? {
                Decision::Yes(d) => {
                    rep.put("answer", "yes");
                    Some(d)
                }
                Decision::No => {
                    rep.put("answer", "no");
                    None
                }
            }
        }
        None => {
            let s = proper_orientation_number(g, cfg)?;
            rep.put("value", s.value);
            rep.put("nodes", s.nodes);
            Some(s.witness)
        }
    };
    if let (Some(path), Some(d)) = (witness_out, &witness) {
        write(path, &write_orientation(g, d))?;
    }
    Ok(())
}

/// Smallest `c` such that vertices of degree above `c` are pairwise non-adjacent.
fn low_degree_threshold(g: &Graph) -> usize {
    g.edges().iter().map(|&(a, b)| g.degree(a).min(g.degree(b))).max().unwrap_or(0)
}

fn uniform_k(g: &Graph) -> Option<usize> {
    let bct = block_cut_tree(g);
    let k = bct.blocks.first()?.len();
    (g.is_connected() && bct.is_k_uniform(g, k)).then_some(k)
}

/// Runs one constructor; `Ok(None)` when the graph is outside the class.
fn orient_one(g: &Graph, class: OrientClass) -> Result<Option<(usize, Orientation)>, CliError> {
    let na = |_| None;
    Ok(match class {
        OrientClass::Auto => unreachable!("auto is resolved by the caller"),
        OrientClass::QuasiThreshold => match quasi_threshold_cotree(g) {
            Ok(t) => {
                let omega = g.clique_number();
                Some((omega.saturating_sub(1), quasi_threshold_orient(g, &t).map_err(pre)?))
            }
            Err(e) => na(e),
        },
        OrientClass::Split => match split_partition(g) {
            Ok(p) => Some(((2 * p.k.len()).saturating_sub(2), split_orient(g, &p).map_err(pre)?)),
            Err(e) => na(e),
        },
        OrientClass::UniformBlock => match uniform_k(g) {
            Some(k) if k >= 3 => Some((3 * k - 2, uniform_block_orient(g, &block_cut_tree(g), k).map_err(pre)?)),
            Some(2) => {
                // trees: low-degree rule when it applies, else the exact solver
                let c = low_degree_threshold(g);
                if c <= 4 {
                    Some((c, low_degree_orient(g, c).map_err(pre)?))
                } else {
                    Some((4, proper_orientation_number(g, &SearchConfig::default())?.witness))
                }
            }
            _ => None,
        },
        OrientClass::TwoCutBlock => match uniform_k(g) {
            Some(k) if k >= 3 && block_cut_tree(g).max_cut_vertices_per_block() <= 2 => {
                Some((k + 1, two_cut_block_orient(g, &block_cut_tree(g), k).map_err(pre)?))
            }
            _ => None,
        },
        OrientClass::LowDegree => {
            let c = low_degree_threshold(g);
            Some((c, low_degree_orient(g, c).map_err(pre)?))
        }
        OrientClass::OuterplanarStrip => match maximal_outerplane_weak_dual(g) {
            Ok(s) => Some((13, outerplanar_strip_orient(g, &s).map_err(pre)?)),
            Err(e) => na(e),
        },
        OrientClass::Cograph => match cograph_cotree(g) {
            Ok(t) => Some((cograph_bounds(&t).upper, cograph_orient(g, &t).map_err(pre)?)),
            Err(e) => na(e),
        },
    })
}

const AUTO_ORDER: [OrientClass; 7] = [
    OrientClass::QuasiThreshold,
    OrientClass::Split,
    OrientClass::TwoCutBlock,
    OrientClass::UniformBlock,
    OrientClass::OuterplanarStrip,
    OrientClass::Cograph,
    OrientClass::LowDegree,
];

fn class_name(c: OrientClass) -> String {
    c.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Class name, class bound and orientation. `auto` keeps the applicable
/// constructor with the smallest achieved maximum indegree.
fn orient(g: &Graph, class: OrientClass) -> Result<(String, usize, Orientation), CliError> {
    if class != OrientClass::Auto {
        let (bound, d) =
            orient_one(g, class)?.ok_or_else(|| pre(format!("graph is not in class {}", class_name(class))))?;
        return Ok((class_name(class), bound, d));
    }
    let mut best: Option<(String, usize, Orientation)> = None;
    for c in AUTO_ORDER {
        if let Some((bound, d)) = orient_one(g, c)? {
            if best.as_ref().is_none_or(|b| max_indegree(&d) < max_indegree(&b.2)) {
                best = Some((class_name(c), bound, d));
            }
        }
    }
    Ok(best.expect("the low-degree rule always applies"))
}

fn recognize(g: &Graph, rep: &mut Report) {
    let peo = chordal_peo(g);
    rep.put("chordal", peo.is_ok());
    if let Ok(p) = &peo {
        if let Ok(w) = clique_number_chordal(g, p) {
            rep.put("clique_number", w);
        }
    }
    rep.put("split", split_partition(g).is_ok());
    rep.put("quasi_threshold", quasi_threshold_cotree(g).is_ok());
    let bct = block_cut_tree(g);
    rep.put("block", bct.is_block_graph(g));
    rep.put("k_uniform", uniform_k(g).map_or("none".to_string(), |k| k.to_string()));
    rep.put("max_cut_vertices_per_block", bct.max_cut_vertices_per_block());
    rep.put("outerplane_strip", maximal_outerplane_weak_dual(g).is_ok());
    rep.put("cograph", cograph_cotree(g).is_ok());
    rep.put("claw_free", is_claw_free(g));
    rep.put("cobipartite", cobipartition(g).is_some());
    rep.put("max_degree", g.max_degree());
}

fn gadget_roles(meta: &GadgetMeta) -> String {
    let mut s = String::new();
    match meta.kind {
        GadgetKind::S { k } => s.push_str(&format!("kind=S\nk={k}\n")),
        GadgetKind::F { i, k } => s.push_str(&format!("kind=F\ni={i}\nk={k}\n")),
        GadgetKind::Z { k } => s.push_str(&format!("kind=Z\nk={k}\n")),
    }
    s.push_str(&format!("n={}\n", meta.n));
    if !meta.spine.is_empty() {
        s.push_str(&format!("spine={}\n", join_ids(&meta.spine)));
    }
    if let Some(h) = meta.head {
        s.push_str(&format!("head={h}\n"));
    }
    if let Some(c) = meta.center {
        s.push_str(&format!("center={c}\n"));
    }
    s
}

fn reduction_roles(red: &ReductionOutput) -> String {
    let mut s = format!(
        "kind=reduction\nk={}\nk_prime={}\nclique={}\nindependent={}\n",
        red.k,
        red.k_prime,
        join_ids(&red.clique),
        join_ids(&red.independent)
    );
    for (j, &u) in red.independent.iter().enumerate() {
        if let VertexRole::Edge { input: (a, b) } = red.roles[u] {
            s.push_str(&format!("edge.{j}={a},{b}\n"));
        }
    }
    for (idx, pg) in red.gadgets.iter().enumerate() {
        let kind = match pg.meta.kind {
            GadgetKind::S { k } => format!("S({k})"),
            GadgetKind::F { i, k } => format!("F({i},{k})"),
            GadgetKind::Z { k } => format!("Z({k})"),
        };
        s.push_str(&format!(
            "gadget.{idx}={kind};offset={};size={};attach={};port={}\n",
            pg.offset,
            pg.meta.n,
            pg.attach,
            pg.port()
        ));
    }
    s
}
