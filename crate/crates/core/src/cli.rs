//! The `regsat` command line.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails, 2 on
//! usage, parse or I/O errors. `REGSAT_THREADS` sets the worker count.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::amalgam::{self, AmalgamParams};
use crate::checkers::{self, CheckMode, VerificationReport};
use crate::constructions::{self, CirculantSpec, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{self, GraphFormat};
use crate::patterns::{self, pattern_from_key, PATTERN_KEYS};
use crate::polarity;
use crate::search;

#[derive(Parser, Debug)]
#[command(name = "regsat", version, about = "Build and verify regular saturated graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from the construction registry
    Gen(GenArgs),
    /// Check a property of a graph file against a pattern
    Check(CheckArgs),
    /// Build H[s,t,G] with H = K_{q,...,q}
    Amalgam(AmalgamArgs),
    /// Iterate the amalgamation from a seed graph
    Plan(PlanArgs),
    /// Exhaustive search for regular saturated graphs on few vertices
    Search(SearchArgs),
    /// Cycle/diameter bounds of a pattern and the degree inequalities
    Bounds(BoundsArgs),
    /// Render the search store
    Table(TableArgs),
}

/// Construction registry keys.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Circulant C_n(A): --n, --residues
    Circulant,
    /// Triangle-saturated circulant for odd n: --n
    CirculantK3,
    /// K4-saturated circulant for n = 6 mod 8: --n
    CirculantK4,
    /// Join of two expressions: --left, --right
    Join,
    /// Blow-up G[H]: --base, --blob
    Blowup,
    /// Orthogonality graph of PG(2, 2^p): --p
    Polarity,
    /// Polarity graph plus a twin of (1,1,1): --p
    PolarityTwin,
    /// Twin-augmented polarity graph blown up by K_t: --p, --t
    Oversaturated,
    /// Regular rrsat witness for K_{t+2}: --t, --d
    Regreg,
    /// K_{k-1} + E_{n-k+1}: --k, --n
    MatchingSat,
    /// Petersen graph
    Petersen,
    /// Graph expression such as "C5[E2]+E6": --expr
    Expr,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Graph6,
    Edgelist,
}

impl From<OutputFormat> for GraphFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Graph6 => GraphFormat::Graph6,
            OutputFormat::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Graph file; metadata goes to <out>.json and labels to <out>.labels
    #[arg(long)]
    pub out: PathBuf,
    /// Defaults to the format implied by the extension, else graph6
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub construction: Construction,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated connection set
    #[arg(long, value_delimiter = ',')]
    pub residues: Vec<usize>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub left: Option<String>,
    #[arg(long)]
    pub right: Option<String>,
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long)]
    pub blob: Option<String>,
    #[arg(long)]
    pub expr: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyArg {
    Free,
    Saturated,
    Oversaturated,
    RrsatWitness,
    Regular,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ModeArgs {
    /// Check this many random non-edges instead of all of them
    #[arg(long, requires = "seed")]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl ModeArgs {
    fn mode(&self) -> CheckMode {
        match (self.samples, self.seed) {
            (Some(count), Some(seed)) => CheckMode::Sampled { count, seed },
            _ => CheckMode::Exhaustive,
        }
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Pattern key: K<s>, C<n>, M<k>, F6, petersen, Kprime:<s>:<t>, file:<path>, ...
    #[arg(long)]
    pub pattern: String,
    #[arg(long, value_enum)]
    pub property: PropertyArg,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Args, Debug)]
pub struct AmalgamArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub s: usize,
    /// Blob size; solved for regularity when omitted
    #[arg(long)]
    pub t: Option<usize>,
    /// Expression for G
    #[arg(long)]
    pub g: String,
    /// Also check K_{s+2}-saturation of the result
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct PlanArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub q: usize,
    /// Expression for the seed graph
    #[arg(long)]
    pub seed: String,
    /// Number of iterations
    #[arg(long)]
    pub m: usize,
    /// Write F_0..F_m as graph6 files into this directory
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Skip the saturation check of each F_i
    #[arg(long)]
    pub no_verify: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Search every order from --n to --n-max
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub pattern: String,
    #[arg(long, default_value = "rsat.jsonl")]
    pub store: PathBuf,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value = "rsat.jsonl")]
    pub store: PathBuf,
    #[arg(long)]
    pub json: bool,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

fn need<T>(value: Option<T>, flag: &str, what: Construction) -> Result<T> {
    value.ok_or_else(|| Error::param(format!("{} needs --{flag}", construction_key(what))))
}

fn construction_key(c: Construction) -> String {
    c.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn degree_json(g: &Graph) -> (Value, Value) {
    match g.regular_degree() {
        Some(d) => (json!(d), Value::Null),
        None => (Value::Null, json!(g.degree_summary().profile())),
    }
}

fn labels_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".labels");
    PathBuf::from(s)
}

fn meta_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

/// Writes the graph, its label map and a metadata document; returns the
/// metadata.
fn emit(output: &Output, built: &LabeledGraph, construction: &str, params: Value, extra: Value) -> Result<Value> {
    let format = output
        .format
        .map(GraphFormat::from)
        .or_else(|| GraphFormat::from_path(&output.out))
        .unwrap_or(GraphFormat::Graph6);
    let g = &built.graph;
    io::write_graph(&output.out, g, format)?;
    let labels = labels_path(&output.out);
    io::write_atomic(&labels, built.label_map().as_bytes())?;
    let (d, profile) = degree_json(g);
    let mut meta = json!({
        "construction": construction,
        "params": params,
        "n": g.order(),
        "edges": g.edge_count(),
        "d": d,
        "degree_profile": profile,
        "graph": output.out,
        "label_map": labels,
        "graph6": io::encode_graph6_string(g),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut meta, extra) {
        m.extend(e);
    }
    io::write_atomic(&meta_path(&output.out), serde_json::to_string_pretty(&meta)?.as_bytes())?;
    Ok(meta)
}

pub fn run_gen(args: &GenArgs) -> Result<Value> {
    use Construction as C;
    let c = args.construction;
    let mut extra = json!({});
    let (built, params) = match c {
        C::Circulant => {
            let n = need(args.n, "n", c)?;
            let spec = CirculantSpec::new(n, args.residues.iter().copied())?;
            let params = json!({"n": n, "A": spec.residues()});
            (LabeledGraph::indexed(constructions::circulant(&spec)), params)
        }
        C::CirculantK3 | C::CirculantK4 => {
            let n = need(args.n, "n", c)?;
            let spec = if c == C::CirculantK3 {
                constructions::k3_connection_set(n)?
            } else {
                constructions::k4_connection_set(n)?
            };
            let params = json!({"n": n});
            extra = json!({"A": spec.residues()});
            (LabeledGraph::indexed(constructions::circulant(&spec)), params)
        }
        C::Join => {
            let left = need(args.left.clone(), "left", c)?;
            let right = need(args.right.clone(), "right", c)?;
            let (g, h) = (constructions::graph_from_expr(&left)?, constructions::graph_from_expr(&right)?);
            extra = json!({"join": constructions::join_report(&g, &h)});
            let params = json!({"left": left, "right": right});
            (LabeledGraph::indexed(constructions::join(&g, &h)), params)
        }
        C::Blowup => {
            let base = need(args.base.clone(), "base", c)?;
            let blob = need(args.blob.clone(), "blob", c)?;
            let g = constructions::blow_up(&constructions::graph_from_expr(&base)?, &constructions::graph_from_expr(&blob)?);
            (LabeledGraph::indexed(g), json!({"base": base, "blob": blob}))
        }
        C::Polarity => {
            let p = need(args.p, "p", c)?;
            let pg = polarity::polarity_graph(p)?;
            extra = json!({
                "absolute_points": pg.absolute_points,
                "absolute_points_match": pg.absolute_matches_expected,
            });
            (pg.graph, json!({"p": p}))
        }
        C::PolarityTwin => {
            let p = need(args.p, "p", c)?;
            (polarity::twin_augmented_polarity(p)?, json!({"p": p}))
        }
        C::Oversaturated => {
            let p = need(args.p, "p", c)?;
            let t = need(args.t, "t", c)?;
            (polarity::oversaturated_family(p, t)?, json!({"p": p, "t": t}))
        }
        C::Regreg => {
            let t = need(args.t, "t", c)?;
            let d = need(args.d, "d", c)?;
            let w = constructions::regreg_witness(t, d)?;
            extra = json!({
                "special_vertex": w.special_vertex,
                "constructed_order": w.constructed_order,
                "stated_order": w.stated_order,
            });
            (w.graph, json!({"t": t, "d": d}))
        }
        C::MatchingSat => {
            let k = need(args.k, "k", c)?;
            let n = need(args.n, "n", c)?;
            (LabeledGraph::indexed(constructions::matching_saturated(k, n)?), json!({"k": k, "n": n}))
        }
        C::Petersen => (LabeledGraph::indexed(patterns::petersen()), json!({})),
        C::Expr => {
            let expr = need(args.expr.clone(), "expr", c)?;
            (LabeledGraph::indexed(constructions::graph_from_expr(&expr)?), json!({"expr": expr}))
        }
    };
    emit(&args.output, &built, &construction_key(c), params, extra)
}

pub fn run_check(args: &CheckArgs) -> Result<VerificationReport> {
    let g = io::read_graph(&args.input)?;
    let f = pattern_from_key(&args.pattern)?;
    let mode = args.mode.mode();
    Ok(match args.property {
        PropertyArg::Free => checkers::is_free(&g, &f),
        PropertyArg::Saturated => checkers::is_saturated_with(&g, &f, mode),
        PropertyArg::Oversaturated => checkers::is_oversaturated_with(&g, &f, mode),
        PropertyArg::RrsatWitness => checkers::rrsat_witness(&g, &f),
        PropertyArg::Regular => checkers::is_regular(&g),
    })
}

pub fn run_amalgam(args: &AmalgamArgs) -> Result<(Value, Verdict)> {
    let g = constructions::graph_from_expr(&args.g)?;
    let (q, s) = (args.q, args.s);
    let (n_h, d_h) = ((s + 1) * q, s * q);
    let d_g = g
        .regular_degree()
        .ok_or_else(|| Error::param(format!("G = {} is not regular", args.g)))?;
    let solved = amalgam::solve_t(n_h, d_h, g.order(), d_g, s)?;
    let t = match args.t.or(solved.t.map(|t| t as usize)) {
        Some(t) => t,
        None => {
            return Err(Error::param(format!(
                "t = {}/{} is not a positive integer; pass --t",
                solved.numerator, solved.denominator
            )))
        }
    };
    let built = amalgam::amalgamate_multipartite(q, s, t, &g)?;
    let params = AmalgamParams {
        s,
        t,
        n_h,
        d_h,
        n_g: g.order(),
        d_g,
    };
    let out = &built.graph;
    let mut pass = out.regular_degree().is_some();
    let ratio = amalgam::ratio_check(&params, out.order(), out.regular_degree().unwrap_or(0));
    let mut extra = json!({
        "solved_t": solved,
        "degree_audit": {
            "g_blob": params.g_blob_degree(),
            "h_blob": params.h_blob_degree(),
        },
        "ratio_check": ratio,
    });
    if args.verify {
        let kk = patterns::build_pattern(patterns::PatternKind::Clique(s + 2))?;
        let report = checkers::is_saturated_with(out, &kk, args.mode.mode());
        pass &= report.pass;
        extra["saturation"] = serde_json::to_value(&report)?;
    }
    let meta = emit(
        &args.output,
        &built,
        "amalgam",
        json!({"q": q, "s": s, "t": t, "g": args.g}),
        extra,
    )?;
    Ok((meta, Verdict::from_pass(pass)))
}

pub fn run_plan(args: &PlanArgs) -> Result<(Value, Verdict)> {
    let seed = constructions::graph_from_expr(&args.seed)?;
    let mut plan = amalgam::iteration_plan(args.s, args.q, &seed, args.m)?;
    let mut pass = plan.steps.iter().all(|s| s.divisibility_holds && s.ratio_bound_holds);
    if !args.no_verify {
        amalgam::verify_plan(&mut plan, CheckMode::Exhaustive)?;
        pass &= plan.steps.iter().all(|s| s.verified == Some(true));
    }
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir)?;
        for (i, g) in plan.graphs.iter().enumerate() {
            io::write_graph(&dir.join(format!("F{i}.g6")), g, GraphFormat::Graph6)?;
        }
        io::write_atomic(&dir.join("plan.json"), plan.to_json().as_bytes())?;
    }
    let doc = json!({
        "s": plan.s,
        "q": plan.q,
        "seed": args.seed,
        "m": plan.iterations,
        "orientation": plan.orientation,
        "steps": plan.steps,
    });
    Ok((doc, Verdict::from_pass(pass)))
}

pub fn run_search(args: &SearchArgs) -> Result<Vec<search::SearchResult>> {
    let hi = args.n_max.unwrap_or(args.n);
    if hi < args.n {
        return Err(Error::param("--n-max is below --n"));
    }
    search::rsat_table(&args.store, args.n..=hi, &args.pattern)
}

pub fn run_bounds(args: &BoundsArgs) -> Result<(Value, Verdict)> {
    let f = pattern_from_key(&args.pattern)?;
    let bounds = checkers::diameter_bounds(&f);
    let mut doc = json!({"pattern": f.name, "bounds": bounds});
    let mut pass = true;
    if let (Some(n), Some(d)) = (args.n, args.d) {
        let r = checkers::check_inequalities(n, d, bounds.m, bounds.r, args.t);
        pass = r.pass;
        doc["inequalities"] = serde_json::to_value(&r)?;
    }
    Ok((doc, Verdict::from_pass(pass)))
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

/// Runs a parsed command, printing its output; returns the verdict.
pub fn execute(cli: &Cli) -> Result<Verdict> {
    match &cli.command {
        Command::Gen(a) => {
            print_json(&run_gen(a)?)?;
            Ok(Verdict::Pass)
        }
        Command::Check(a) => {
            let r = run_check(a)?;
            println!("{}", r.to_json());
            Ok(Verdict::from_pass(r.pass))
        }
        Command::Amalgam(a) => {
            let (meta, v) = run_amalgam(a)?;
            print_json(&meta)?;
            Ok(v)
        }
        Command::Plan(a) => {
            let (doc, v) = run_plan(a)?;
            print_json(&doc)?;
            Ok(v)
        }
        Command::Search(a) => {
            let results = run_search(a)?;
            for r in &results {
                let status = if r.rsat_value.is_some() { "exists" } else { "nonexistent" };
                println!("{}", json!({"n": r.n, "pattern": r.pattern, "status": status, "result": r}));
            }
            Ok(Verdict::Pass)
        }
        Command::Bounds(a) => {
            let (doc, v) = run_bounds(a)?;
            print_json(&doc)?;
            Ok(v)
        }
        Command::Table(a) => {
            let results = search::results_from_store(&search::load_store(&a.store)?);
            if a.json {
                print_json(&results)?;
            } else {
                print!("{}", search::render_table(&results));
            }
            Ok(Verdict::Pass)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("REGSAT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::param(format!("REGSAT_THREADS must be a positive integer, got {raw:?}")))?;
    // A pool may already exist when called twice in one process; keep it.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match configure_threads().and_then(|_| execute(&cli)) {
        Ok(v) => v.code(),
        Err(e) => {
            eprintln!("regsat: {e}");
            if let Error::UnknownKey { .. } = e {
                eprintln!("pattern keys: {PATTERN_KEYS}");
            }
            2
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

/// Registry keys with their one-line descriptions.
pub fn construction_registry() -> BTreeMap<String, String> {
    Construction::value_variants()
        .iter()
        .filter_map(|c| c.to_possible_value())
        .map(|v| (v.get_name().to_string(), v.get_help().map(|h| h.to_string()).unwrap_or_default()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_keys_are_stable() {
        let keys: Vec<String> = construction_registry().into_keys().collect();
        for k in [
            "circulant",
            "circulant-k3",
            "circulant-k4",
            "join",
            "blowup",
            "polarity",
            "polarity-twin",
            "oversaturated",
            "regreg",
            "matching-sat",
            "petersen",
            "expr",
        ] {
            assert!(keys.iter().any(|x| x == k), "{k}");
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["regsat", "gen", "nonsense", "--out", "x.g6"]), 2);
        assert_eq!(main_with_args(["regsat", "check", "--in", "/nonexistent.g6", "--pattern", "K3", "--property", "free"]), 2);
        assert_eq!(
            main_with_args(["regsat", "check", "--in", "x", "--pattern", "K3", "--property", "free", "--samples", "5"]),
            2
        );
    }

    #[test]
    fn gen_circulant_k3_metadata() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("g.g6");
        let code = main_with_args(["regsat", "gen", "circulant-k3", "--n", "35", "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        let meta: Value = serde_json::from_str(&std::fs::read_to_string(meta_path(&out)).unwrap()).unwrap();
        assert_eq!(meta["n"], 35);
        assert_eq!(meta["d"], 10);
        assert_eq!(meta["A"], json!([1, 3, 5, 12, 14]));
        let g = io::read_graph(&out).unwrap();
        assert_eq!(g.regular_degree(), Some(10));
    }
}
