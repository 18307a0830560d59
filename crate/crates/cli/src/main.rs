//! `sparse-ramsey`: sample graphs, measure orderings, run the embedders and
//! the Ramsey search, and run the named verification experiments.
//!
//! Exit status: 0 pass, 1 property failed or nothing decided, 2 usage or
//! input error, 3 internal error. Errors go to stderr as one JSON object.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_rational::{BigRational, Ratio};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sparse_ramsey::embedding::{
    check_sparse, dependent_random_choice, goodset_greedy_embed, grr_greedy_embed, multipartite_greedy_embed,
    nested_subsets, ramsey_bound_general, ramsey_bound_grr, ramsey_bound_main, random_colored_pattern,
    sparsity_transform, BoundParams, BoundValue, ColoredPattern, DrcParams, EmbedOutcome, GeneralConstants,
    HostPartition, NestedParams, SparseCheckMode, SparsityParams,
};
use sparse_ramsey::experiments::{batch_run, write_atomic, ExperimentConfig, ReportFormat, VerifyId};
use sparse_ramsey::ramsey::{ramsey_exact, ramsey_lower_search, RamseyOutcome, TwoColoring};
use sparse_ramsey::random::{arrangeability_witness, closure_f, cool_ordering, sample_gnp, RandomGraphSpec};
use sparse_ramsey::sparseness::{
    degeneracy_ordering, exact_min_arrangeability, measure_certificate, peel_ordering, PeelOutcome, VertexOrdering,
};
use sparse_ramsey::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(
    name = "sparse-ramsey",
    version,
    about = "Sparseness certificates, embedders and Ramsey search for degenerate graphs"
)]
struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "SPARSE_RAMSEY_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n, p) or G(n, n, p) and print it as an edge list.
    Sample(SampleArgs),
    /// Build an ordering and print its certificate.
    Order(OrderArgs),
    /// Measure d, Δ and p of a given ordering.
    Measure(MeasureArgs),
    /// Compute the closure F(S).
    Closure(ClosureArgs),
    /// Run a named experiment over seeds and print the report.
    Verify(VerifyArgs),
    /// Embed a pattern into a partitioned host.
    Embed(EmbedArgs),
    /// Dependent random choice on a bipartite host.
    Drc(DrcArgs),
    /// The nested-subsets procedure on a two-coloring.
    Nested(NestedArgs),
    /// Exact Ramsey number of a small pattern, or a local search for an avoiding coloring.
    Ramsey(RamseyArgs),
    /// Evaluate a bound exactly.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Check (α, ρ, ε, t)-sparseness of a small graph.
    Sparse(SparseArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("density").required(true).args(["d", "p"])))]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    /// Average degree: p = d / n.
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    /// G(n, n, p), classes 0..n and n..2n.
    #[arg(long)]
    bipartite: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderMethod {
    Degeneracy,
    Peel,
    Cool,
}

#[derive(Args)]
struct OrderArgs {
    /// Edge-list file, `-` for stdin.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = OrderMethod::Degeneracy)]
    method: OrderMethod,
    /// peel: back-degree limit.
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// peel: second-neighborhood limit.
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// cool: average degree (vertices above 16d go first).
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Vertices in order, separated by commas or whitespace; identity if absent.
    #[arg(long)]
    ordering: Option<PathBuf>,
    /// Also compute the minimum arrangeability over all orderings (n <= 24).
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClosureArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated vertices of S.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Experiment id.
    #[arg(value_parser = parse_id)]
    id: VerifyId,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// First seed when seeds are given as a count (or defaulted).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// A count (`20`), a range (`5..25`) or a list (`1,4,9`).
    #[arg(long)]
    seeds: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    threshold: Option<f64>,
    #[arg(long, value_parser = parse_format)]
    format: Option<ReportFormat>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedMethod {
    Grr,
    Goodset,
    Multipartite,
}

#[derive(Args)]
#[command(group(ArgGroup::new("pat").required(true).args(["pattern", "pattern_n"])))]
#[command(group(ArgGroup::new("hst").required(true).args(["host", "n"])))]
struct EmbedArgs {
    #[arg(value_enum)]
    method: EmbedMethod,
    /// Pattern name (k4, p5, c6, k2x3, e3) or edge-list file.
    #[arg(long)]
    pattern: Option<String>,
    /// Random d-degenerate pattern on this many vertices.
    #[arg(long)]
    pattern_n: Option<usize>,
    /// Degeneracy of the random pattern, and `d` for goodset/multipartite
    /// (defaults to the pattern's back-degree).
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    host: Option<PathBuf>,
    /// Sample the host as G(n, p).
    #[arg(long, requires = "p")]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Number of host parts; defaults to the pattern's color count.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value = "1/4")]
    epsilon: Ratio<u64>,
    /// goodset: the size threshold x; defaults to the part size.
    #[arg(long)]
    x: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("hst").required(true).args(["graph", "n"])))]
struct DrcArgs {
    /// Edge-list file declaring a bipartition.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Sample G(n, n, p).
    #[arg(long, requires = "p")]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Common-neighborhood threshold; defaults to a tenth of the first class.
    #[arg(long)]
    x: Option<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("col").required(true).args(["coloring", "n"])))]
struct NestedArgs {
    /// Coloring as JSON `{"n": .., "bits": ..}`.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Use a uniformly random coloring of K_n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    q: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 1)]
    y: usize,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RamseyArgs {
    /// Pattern name (k3, p4, c4, k1x3, e2) or edge-list file.
    #[arg(long)]
    pattern: String,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Where the witness coloring is written.
    #[arg(long, default_value = "ramsey-witness.json")]
    out: PathBuf,
    /// Local search for an avoiding coloring of K_n instead of the exact search.
    #[arg(long, requires = "n")]
    lower: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    restarts: u32,
    #[arg(long, default_value_t = 1000)]
    max_flips: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PatternDims {
    #[arg(long)]
    d: u64,
    /// The pattern's Δ.
    #[arg(long)]
    delta: u64,
    #[arg(long)]
    q: u64,
    /// Number of pattern vertices.
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum BoundCmd {
    /// (2^{7d+8} d^{3d+2} Δ)^{log q} n.
    Grr(PatternDims),
    /// 2^{c₁ q 3^q d / δ} Δ^{c₂ δ} n.
    General {
        #[command(flatten)]
        dims: PatternDims,
        /// δ in (0, 1], as a fraction.
        #[arg(long)]
        small_delta: Ratio<u64>,
        #[arg(long, default_value_t = GeneralConstants::default().exponent)]
        c1: u64,
        #[arg(long, default_value_t = GeneralConstants::default().delta_power)]
        c2: u64,
    },
    /// The general bound with δ = 1/√(log Δ).
    Main {
        #[command(flatten)]
        dims: PatternDims,
        #[arg(long, default_value_t = GeneralConstants::default().exponent)]
        c1: u64,
        #[arg(long, default_value_t = GeneralConstants::default().delta_power)]
        c2: u64,
    },
    /// Transform (α, ρ, ε, t) sparseness through h rounds.
    Sparsity {
        #[arg(long)]
        alpha: BigRational,
        #[arg(long)]
        rho: BigRational,
        #[arg(long)]
        epsilon: BigRational,
        #[arg(long, default_value_t = 2)]
        t: u64,
        #[arg(long)]
        h: u32,
    },
}

#[derive(Args)]
struct SparseArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    alpha: BigRational,
    #[arg(long)]
    rho: BigRational,
    #[arg(long)]
    epsilon: BigRational,
    #[arg(long, default_value_t = 2)]
    t: u64,
    /// Check this many random subsets per size instead of all of them.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_id(s: &str) -> Result<VerifyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::Bipartition(_) | Error::Parse { .. } => {
                (2, "input")
            }
            Error::InvalidArgument(_) => (2, "invalid-argument"),
            Error::Precondition(_) => (2, "precondition"),
            Error::TooLarge(_) => (2, "too-large"),
            Error::Invariant(_) => (3, "invariant"),
            Error::Io(_) => (3, "io"),
            Error::Json(_) => (2, "json"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, kind: "usage", message: message.into() }
}

type CliResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            return fail(&Failure { code: 3, kind: "threads", message: e.to_string() });
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": { "kind": f.kind, "message": f.message, "exit_code": f.code } }));
    ExitCode::from(f.code)
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Sample(a) => sample(a),
        Command::Order(a) => order(a),
        Command::Measure(a) => measure(a),
        Command::Closure(a) => closure(a),
        Command::Verify(a) => verify(a),
        Command::Embed(a) => embed(a),
        Command::Drc(a) => drc(a),
        Command::Nested(a) => nested(a),
        Command::Ramsey(a) => ramsey(a),
        Command::Bound(b) => bound(b),
        Command::Sparse(a) => sparse(a),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::parse_edge_list(&read_text(path)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => Ok(write_atomic(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, value: &Value) -> Result<(), Failure> {
    emit(out, &(serde_json::to_string_pretty(value).map_err(Error::from)? + "\n"))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

/// `k4`, `p5`, `c6`, `k2x3`, `e3`, or an edge-list file.
fn parse_pattern(spec: &str) -> Result<Graph, Failure> {
    let num = |s: &str| s.parse::<usize>().ok();
    let named = match spec.split_at_checked(1) {
        Some(("k", rest)) => match rest.split_once('x') {
            Some((a, b)) => num(a).zip(num(b)).map(|(a, b)| Graph::complete_bipartite(a, b)),
            None => num(rest).map(Graph::complete),
        },
        Some(("p", rest)) => num(rest).map(Graph::path),
        Some(("c", rest)) => num(rest).filter(|&k| k >= 3).map(Graph::cycle),
        Some(("e", rest)) => num(rest).map(Graph::empty),
        _ => None,
    };
    match named {
        Some(g) => Ok(g),
        None if Path::new(spec).exists() => read_graph(Path::new(spec)),
        None => Err(usage(format!("`{spec}` is neither a pattern name (k3, p4, c5, k2x3, e2) nor a file"))),
    }
}

fn sample(a: SampleArgs) -> CliResult {
    let p = match (a.p, a.d) {
        (Some(p), _) => p,
        (None, Some(d)) => (d / a.n.max(1) as f64).min(1.0),
        (None, None) => unreachable!("clap requires d or p"),
    };
    let spec = RandomGraphSpec { n: a.n, p, seed: a.seed, bipartite: a.bipartite };
    emit(a.out.as_deref(), &sample_gnp(&spec)?.to_edge_list())?;
    Ok(true)
}

fn order(a: OrderArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let (value, ok) = match a.method {
        OrderMethod::Degeneracy => {
            let (o, k) = degeneracy_ordering(&g);
            (
                json!({ "method": "degeneracy", "degeneracy": k, "certificate": to_value(&measure_certificate(&g, &o)?) }),
                true,
            )
        }
        OrderMethod::Peel => match peel_ordering(&g, a.s, a.r)? {
            PeelOutcome::Ordered(o) => (
                json!({ "method": "peel", "s": a.s, "r": a.r, "outcome": "ordered",
                        "certificate": to_value(&measure_certificate(&g, &o)?) }),
                true,
            ),
            PeelOutcome::Stuck { residual } => (
                json!({ "method": "peel", "s": a.s, "r": a.r, "outcome": "stuck", "residual": to_value(&residual) }),
                false,
            ),
        },
        OrderMethod::Cool => {
            let d = a.d.ok_or_else(|| usage("--method cool needs --d"))?;
            let c = cool_ordering(&g, d)?;
            (json!({ "method": "cool", "d": d, "result": to_value(&c) }), true)
        }
    };
    emit_json(a.out.as_deref(), &value)?;
    Ok(ok)
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| usage(format!("`{w}` is not a vertex"))))
        .collect()
}

fn measure(a: MeasureArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let ordering = match &a.ordering {
        Some(path) => VertexOrdering::new(parse_vertex_list(&read_text(path)?)?)?,
        None => VertexOrdering::identity(g.n()),
    };
    if ordering.len() != g.n() {
        return Err(usage(format!("ordering has {} vertices, graph has {}", ordering.len(), g.n())));
    }
    let cert = measure_certificate(&g, &ordering)?;
    let witness = arrangeability_witness(&g, &ordering)?;
    let mut value = json!({ "certificate": to_value(&cert), "arrangeability_witness": to_value(&witness) });
    if a.exact {
        value["min_arrangeability"] = json!(exact_min_arrangeability(&g, 24)?);
    }
    emit_json(a.out.as_deref(), &value)?;
    Ok(true)
}

fn closure(a: ClosureArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let s = VertexSet::from_iter_unsorted(a.set);
    emit_json(a.out.as_deref(), &to_value(&closure_f(&g, &s)?))?;
    Ok(true)
}

fn parse_seeds(spec: Option<&str>, start: u64, default_count: usize) -> Result<Vec<u64>, Failure> {
    let bad = || usage(format!("cannot parse seeds `{}`", spec.unwrap_or_default()));
    let Some(spec) = spec else {
        return Ok((start..start + default_count as u64).collect());
    };
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        return Ok((lo..hi).collect());
    }
    if spec.contains(',') {
        return spec.split(',').map(|w| w.trim().parse().map_err(|_| bad())).collect();
    }
    let count: u64 = spec.trim().parse().map_err(|_| bad())?;
    Ok((start..start + count).collect())
}

fn verify(a: VerifyArgs) -> CliResult {
    let mut c = ExperimentConfig::defaults(a.id);
    c.seeds = parse_seeds(a.seeds.as_deref(), a.seed, c.seeds.len())?;
    c.n = a.n.unwrap_or(c.n);
    c.d = a.d.unwrap_or(c.d);
    c.p = a.p.or(c.p);
    c.q = a.q.unwrap_or(c.q);
    c.t = a.t.unwrap_or(c.t);
    c.trials = a.trials.unwrap_or(c.trials);
    c.threshold = a.threshold.unwrap_or(c.threshold);
    c.format = a.format.unwrap_or(c.format);
    c.exhaustive = a.exhaustive;
    c.n_max = a.n_max.unwrap_or(c.n_max);
    c.out = a.out;
    let report = batch_run(&c)?;
    if c.out.is_none() {
        print!("{}", report.render(c.format)?);
    }
    let passed = report.records.iter().filter(|r| r.pass).count();
    let verdict = match report.passed {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "undefined (no records)",
    };
    eprintln!(
        "{}: {passed}/{} records passed, threshold {}: {verdict} ({} ms)",
        c.experiment,
        report.records.len(),
        c.threshold,
        report.wall_clock_ms
    );
    Ok(report.passed == Some(true))
}

fn embed(a: EmbedArgs) -> CliResult {
    let pattern = match (&a.pattern, a.pattern_n) {
        (Some(spec), _) => ColoredPattern::greedy(parse_pattern(spec)?),
        (None, Some(n)) => {
            let d = a.d.ok_or_else(|| usage("--pattern-n needs --d"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            rng.set_stream(1);
            random_colored_pattern(n, d, &mut rng)
        }
        (None, None) => unreachable!("clap requires a pattern"),
    };
    let host = match (&a.host, a.n, a.p) {
        (Some(path), _, _) => read_graph(path)?,
        (None, Some(n), Some(p)) => sample_gnp(&RandomGraphSpec::gnp(n, p, a.seed))?,
        _ => unreachable!("clap requires a host"),
    };
    let q = a.q.unwrap_or_else(|| pattern.color_count().max(1));
    let parts = HostPartition::random_equal(host.n(), q, a.seed)?;
    let d = a.d.unwrap_or_else(|| pattern.back_degree().max(1));
    let (report, embedding) = match a.method {
        EmbedMethod::Grr => {
            let out = grr_greedy_embed(&pattern, &host, &parts, a.epsilon)?;
            (to_value(&out), out.embedding().cloned())
        }
        EmbedMethod::Goodset => {
            let x = a.x.unwrap_or(host.n() / q);
            let r = goodset_greedy_embed(&pattern, &host, &parts, x, d)?;
            let e = match &r.outcome {
                EmbedOutcome::Embedded { embedding } => Some(embedding.clone()),
                EmbedOutcome::Failed { .. } => None,
            };
            (to_value(&r), e)
        }
        EmbedMethod::Multipartite => {
            let r = multipartite_greedy_embed(&pattern, &host, &parts, d)?;
            (to_value(&r), Some(r.embedding.clone()))
        }
    };
    if let Some(e) = &embedding {
        e.verify(&pattern.graph, &host, Some((&pattern.colors, &parts)))?;
    }
    let value = json!({
        "pattern_n": pattern.n(),
        "pattern_colors": pattern.color_count(),
        "host_n": host.n(),
        "q": q,
        "seed": a.seed,
        "report": report,
    });
    emit_json(a.out.as_deref(), &value)?;
    Ok(embedding.is_some())
}

fn drc(a: DrcArgs) -> CliResult {
    let g = match (&a.graph, a.n, a.p) {
        (Some(path), _, _) => read_graph(path)?,
        (None, Some(n), Some(p)) => sample_gnp(&RandomGraphSpec::bipartite(n, p, a.seed))?,
        _ => unreachable!("clap requires a host"),
    };
    let first = g.bipartition().map(|b| b.left.len()).ok_or_else(|| usage("the host must declare a bipartition"))?;
    let params = DrcParams { t: a.t, x: a.x.unwrap_or((first / 10).max(1)), trials: a.trials };
    let report = dependent_random_choice(&g, &params, a.seed)?;
    emit_json(
        a.out.as_deref(),
        &json!({ "params": { "t": params.t, "x": params.x, "trials": params.trials },
                                         "seed": a.seed, "report": to_value(&report) }),
    )?;
    Ok(true)
}

fn nested(a: NestedArgs) -> CliResult {
    let coloring: TwoColoring = match (&a.coloring, a.n) {
        (Some(path), _) => serde_json::from_str(&read_text(path)?).map_err(Error::from)?,
        (None, Some(n)) => TwoColoring::random(n, &mut ChaCha8Rng::seed_from_u64(a.seed)),
        (None, None) => unreachable!("clap requires a coloring"),
    };
    let params = NestedParams { q: a.q, t: a.t, y: a.y, trials: a.trials };
    let report = nested_subsets(&coloring, &params, a.seed)?;
    let ok = report.exhausted_at.is_none();
    emit_json(a.out.as_deref(), &to_value(&report))?;
    Ok(ok)
}

fn ramsey(a: RamseyArgs) -> CliResult {
    let pattern = parse_pattern(&a.pattern)?;
    if a.lower {
        let n = a.n.expect("clap requires --n");
        let found = ramsey_lower_search(&pattern, n, a.restarts, a.max_flips, a.seed)?;
        match &found {
            Some(c) => {
                write_atomic(&a.out, &(serde_json::to_string_pretty(c).map_err(Error::from)? + "\n"))?;
                println!("found an avoiding coloring of K_{n}");
                eprintln!("witness written to {}", a.out.display());
            }
            None => println!("none found for K_{n}"),
        }
        return Ok(found.is_some());
    }
    let outcome = ramsey_exact(&pattern, a.n_max)?;
    write_atomic(&a.out, &(serde_json::to_string_pretty(&outcome).map_err(Error::from)? + "\n"))?;
    let known = match &outcome {
        RamseyOutcome::Known(r) => {
            println!("{}", r.value);
            true
        }
        RamseyOutcome::Unknown { n_max, .. } => {
            println!("unknown: every N <= {n_max} has an avoiding coloring");
            false
        }
    };
    eprintln!("witness written to {}", a.out.display());
    Ok(known)
}

fn print_bound(v: BoundValue) -> CliResult {
    println!("{v}");
    if !v.exact {
        eprintln!("note: a non-integer exponent was rounded up; the value is an upper bound on the formula");
    }
    Ok(true)
}

fn bound(b: BoundCmd) -> CliResult {
    match b {
        BoundCmd::Grr(p) => print_bound(ramsey_bound_grr(p.d, p.delta, p.q, p.n)?),
        BoundCmd::General { dims: p, small_delta, c1, c2 } => print_bound(ramsey_bound_general(&BoundParams {
            d: p.d,
            delta_max: p.delta,
            q: p.q,
            n: p.n,
            delta: small_delta,
            constants: GeneralConstants { exponent: c1, delta_power: c2 },
        })?),
        BoundCmd::Main { dims: p, c1, c2 } => {
            print_bound(ramsey_bound_main(p.d, p.delta, p.q, p.n, GeneralConstants { exponent: c1, delta_power: c2 })?)
        }
        BoundCmd::Sparsity { alpha, rho, epsilon, t, h } => {
            let params = SparsityParams::new(alpha, rho, epsilon, t)?;
            emit_json(None, &to_value(&sparsity_transform(&params, h)?))?;
            Ok(true)
        }
    }
}

fn sparse(a: SparseArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let params = SparsityParams::new(a.alpha, a.rho, a.epsilon, a.t)?;
    let mode = match a.samples {
        Some(per_size) => SparseCheckMode::Sampled { per_size, seed: a.seed },
        None => SparseCheckMode::Exhaustive,
    };
    let check = check_sparse(&g, &params, mode)?;
    let ok = check.is_sparse();
    emit_json(None, &to_value(&check))?;
    Ok(ok)
}
