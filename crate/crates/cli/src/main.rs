use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use strong_geodetic::bipartite::{self, BipartiteError};
use strong_geodetic::bounds::{BoundSandwich, NumericBounds};
use strong_geodetic::edge_list::{self, ParseError};
use strong_geodetic::generators::{self, GeneratorError, NAMED_SYNTAX};
use strong_geodetic::geodesics::DEFAULT_GEODESIC_CAP;
use strong_geodetic::solver::{SgResult, DEFAULT_ORACLE_LIMIT};
use strong_geodetic::verify::{run_suite, Suite, VerifyConfig};
use strong_geodetic::{sg_exact, sg_oracle, DistanceMatrix, Graph, GraphError, SolveError, SolverConfig};

const SCHEMA: u32 = 1;
const DEFAULT_SEED: u64 = 1;

mod exit {
    pub const PARSE: u8 = 3;
    pub const DISCONNECTED: u8 = 4;
    pub const RESOURCE: u8 = 5;
    pub const INVALID: u8 = 6;
    pub const VERIFY_FAILED: u8 = 7;
    pub const NOT_APPLICABLE: u8 = 8;
}

#[derive(Parser)]
#[command(name = "sgeo", version, about = "Strong geodetic number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sg(G) with a certificate.
    Compute(ComputeArgs),
    /// Evaluate closed forms and bounds.
    #[command(subcommand)]
    Formula(FormulaCommand),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Write a graph family member as an edge list.
    Construct(ConstructArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file: "n m" header, then m lines "u v"; '#' starts a comment line.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, help = format!("Named generator: {NAMED_SYNTAX}"))]
    named: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Oracle,
    Formula,
}

#[derive(Args)]
struct SolverArgs {
    /// Give up after testing this many candidate sets.
    #[arg(long)]
    budget: Option<u64>,
    /// Per-pair cap on geodesic signature states.
    #[arg(long, default_value_t = DEFAULT_GEODESIC_CAP)]
    geodesic_cap: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Largest order accepted by the oracle method.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            geodesic_cap: self.geodesic_cap,
            subset_budget: self.budget,
            threads: self.threads.max(1),
            oracle_limit: self.oracle_limit,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "exact")]
    method: MethodArg,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// sg(K_{n,n}) from the balanced closed form.
    Knn { n: u64 },
    /// sg(K_{n1,n2}) from the closed form for n1 large compared to n2.
    Unbalanced { n1: u64, n2: u64 },
    /// sg(K_{n1,n2}) from the integer program (full grid).
    Bipartite { n1: u64, n2: u64 },
    /// All bounds for (n, d) or for a graph.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, requires = "d", conflicts_with_all = ["file", "named"])]
    n: Option<u64>,
    #[arg(long, requires = "n")]
    d: Option<u64>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    named: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// oracle-equivalence | knn-formula | balancing | unbalanced-formula | bounds-sandwich | constructions | characterizations
    suite: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Branch counts for constructions, as A..B (inclusive).
    #[arg(long, value_parser = parse_range, default_value = "3..5")]
    k: RangeInclusive<usize>,
    /// Diameters for constructions, as A..B (inclusive).
    #[arg(long, value_parser = parse_range, default_value = "3..4")]
    d: RangeInclusive<usize>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Kmn,
    Petersen,
    Gk,
    Gkd,
    Random,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// A failure with its exit code and one-line message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Self { code, message: message.to_string() }
    }
}

impl From<GeneratorError> for Failure {
    fn from(e: GeneratorError) -> Self {
        Failure::new(exit::INVALID, e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(exit::PARSE, e)
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = if matches!(e, GraphError::Disconnected(..)) { exit::DISCONNECTED } else { exit::PARSE };
        Failure::new(code, e)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match &e {
            SolveError::Graph(GraphError::Disconnected(..)) => exit::DISCONNECTED,
            e if e.is_resource_limit() => exit::RESOURCE,
            _ => exit::INVALID,
        };
        Failure::new(code, e)
    }
}

impl From<BipartiteError> for Failure {
    fn from(e: BipartiteError) -> Self {
        let code = match e {
            BipartiteError::NotApplicable { .. } => exit::NOT_APPLICABLE,
            _ => exit::INVALID,
        };
        Failure::new(code, e)
    }
}

fn load_graph(file: Option<&PathBuf>, named: Option<&str>) -> Result<(Graph, String), Failure> {
    match (file, named) {
        (Some(path), _) => {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::new(exit::PARSE, format!("{}: {e}", path.display())))?;
            Ok((edge_list::parse(&text)?, path.display().to_string()))
        }
        (None, Some(spec)) => Ok((generators::named(spec)?, spec.to_string())),
        (None, None) => Err(Failure::new(exit::INVALID, "a graph is required (--file or --named)")),
    }
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("output is serializable"));
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    schema: u32,
    n: usize,
    m: usize,
    sg: u64,
    method: strong_geodetic::solver::Method,
    set: &'a [usize],
    geodesics: &'a [Vec<usize>],
    bounds: &'a BoundSandwich,
    lower_bound_used: strong_geodetic::bounds::TaggedBound,
    subsets_examined: u64,
    elapsed_ms: u128,
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let (g, label) = load_graph(args.source.file.as_ref(), args.source.named.as_deref())?;
    let cfg = args.solver.config();
    let start = Instant::now();
    let result: SgResult = match args.method {
        MethodArg::Exact => sg_exact(&g, &cfg)?,
        MethodArg::Oracle => sg_oracle(&g, &cfg)?,
        MethodArg::Formula => bipartite::sg_formula(&g).map_err(|e| match e {
            SolveError::InvalidSet(msg) => Failure::new(exit::NOT_APPLICABLE, msg),
            other => other.into(),
        })?,
    };
    let elapsed_ms = start.elapsed().as_millis();
    print_json(&ComputeOutput {
        schema: SCHEMA,
        n: g.n(),
        m: g.m(),
        sg: result.value,
        method: result.method,
        set: &result.certificate.set,
        geodesics: &result.certificate.geodesics,
        bounds: &result.bounds,
        lower_bound_used: result.lower_bound_used,
        subsets_examined: result.subsets_examined,
        elapsed_ms,
    });
    eprintln!(
        "{label}: sg = {} (n = {}, m = {}, set {:?}, {} subsets, {elapsed_ms} ms)",
        result.value,
        g.n(),
        g.m(),
        result.certificate.set,
        result.subsets_examined
    );
    Ok(())
}

fn with_schema(kind: &str, body: impl Serialize) -> Value {
    let mut v = json!({ "schema": SCHEMA, "kind": kind });
    if let Value::Object(extra) = serde_json::to_value(body).expect("output is serializable") {
        v.as_object_mut().unwrap().extend(extra);
    }
    v
}

fn formula(cmd: &FormulaCommand) -> Result<(), Failure> {
    let out = match cmd {
        FormulaCommand::Knn { n } => {
            let f = bipartite::sg_knn_formula(*n)?;
            eprintln!("sg(K_{{{n},{n}}}) = {} ({:?} case)", f.value, f.case);
            with_schema("knn", json!({ "n": n, "value": f.value, "split": f.split, "case": f.case }))
        }
        FormulaCommand::Unbalanced { n1, n2 } => {
            let f = bipartite::sg_unbalanced_formula(*n1, *n2)?;
            eprintln!("sg(K_{{{n1},{n2}}}) = {}", f.value);
            with_schema("unbalanced", json!({ "n1": n1, "n2": n2, "value": f.value, "split": f.split }))
        }
        FormulaCommand::Bipartite { n1, n2 } => {
            let ip = bipartite::sg_bipartite_ip(*n1, *n2)?;
            eprintln!("sg(K_{{{n1},{n2}}}) = {} (integer program)", ip.value);
            with_schema("bipartite", json!({ "n1": n1, "n2": n2, "value": ip.value, "split": ip.split }))
        }
        FormulaCommand::Bounds(args) => bounds(args)?,
    };
    print_json(&out);
    Ok(())
}

fn bounds(args: &BoundsArgs) -> Result<Value, Failure> {
    if let (Some(n), Some(d)) = (args.n, args.d) {
        let b = NumericBounds::new(n, d).map_err(|e| Failure::new(exit::INVALID, e))?;
        eprintln!(
            "n = {n}, d = {d}: {} <= sg <= {}",
            b.lb_interior_capacity.max(b.lb_path_capacity).max(b.lb_trivial),
            b.ub_diameter
        );
        return Ok(with_schema("bounds", b));
    }
    let (g, label) = load_graph(args.file.as_ref(), args.named.as_deref())?;
    let dm = DistanceMatrix::new(&g)?;
    let b = BoundSandwich::new(&g, &dm).map_err(|e| Failure::new(exit::INVALID, e))?;
    let lower = b.lower();
    eprintln!("{label}: {} <= sg <= {}", lower.value, b.upper());
    Ok(with_schema("bounds", json!({ "bounds": b, "lower": lower, "upper": b.upper() })))
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse().map_err(|e| Failure::new(exit::INVALID, e))?;
    let cfg = VerifyConfig {
        max_n: args.max_n,
        samples: args.samples,
        seed: args.seed,
        k: args.k.clone(),
        d: args.d.clone(),
        solver: SolverConfig { threads: args.threads.max(1), ..SolverConfig::default() },
    };
    let report = run_suite(suite, &cfg);
    print_json(&with_schema("verify", &report));
    eprintln!(
        "{suite}: {} ({} checks, {} failures)",
        if report.passed { "pass" } else { "FAIL" },
        report.checks,
        report.failures
    );
    if report.passed {
        Ok(())
    } else {
        Err(Failure::new(exit::VERIFY_FAILED, format!("{suite} failed")))
    }
}

fn required(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::new(exit::INVALID, format!("{family} requires --{flag}")))
}

fn construct(args: &ConstructArgs) -> Result<(), Failure> {
    let (g, description) = match args.family {
        Family::Path => {
            let n = required(args.n, "n", "path")?;
            (generators::path(n)?, format!("path:{n}"))
        }
        Family::Cycle => {
            let n = required(args.n, "n", "cycle")?;
            (generators::cycle(n)?, format!("cycle:{n}"))
        }
        Family::Complete => {
            let n = required(args.n, "n", "complete")?;
            (generators::complete(n)?, format!("complete:{n}"))
        }
        Family::Kmn => {
            let (n1, n2) = (required(args.n1, "n1", "kmn")?, required(args.n2, "n2", "kmn")?);
            (generators::complete_bipartite(n1, n2)?, format!("kmn:{n1},{n2}"))
        }
        Family::Petersen => (generators::petersen().graph, "petersen".to_string()),
        Family::Gk => {
            let k = required(args.k, "k", "gk")?;
            (generators::g_k(k)?, format!("gk:{k}"))
        }
        Family::Gkd => {
            let (k, d) = (required(args.k, "k", "gkd")?, required(args.d, "d", "gkd")?);
            (generators::g_kd(k, d)?, format!("gkd:{k},{d}"))
        }
        Family::Random => {
            let n = required(args.n, "n", "random")?;
            let p = args.p.ok_or_else(|| Failure::new(exit::INVALID, "random requires --p"))?;
            (generators::random_connected(n, p, args.seed)?, format!("random:{n},{p},{}", args.seed))
        }
    };
    let diameter = DistanceMatrix::new(&g)?.diameter();
    let text = edge_list::write(&g, &[&description]);
    match &args.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::new(exit::INVALID, format!("{}: {e}", path.display())))?;
            print_json(&with_schema(
                "construct",
                json!({ "family": description, "n": g.n(), "m": g.m(), "diameter": diameter, "path": path }),
            ));
        }
        None => print!("{text}"),
    }
    eprintln!("{description}: n = {}, m = {}, diameter = {diameter}", g.n(), g.m());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Formula(cmd) => formula(cmd),
        Command::Verify(args) => verify(args),
        Command::Construct(args) => construct(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
