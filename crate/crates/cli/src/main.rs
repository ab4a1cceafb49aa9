use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use equiforest::certify::{
    verify_partition, verify_partition_oriented, Certificate, PartitionReport,
};
use equiforest::coloring::{exact_oriented_coloring, DEFAULT_EXACT_CAP};
use equiforest::formats::{
    parse_arc_list, parse_edge_list, parse_graph6, write_arc_list, write_edge_list, write_graph6,
    GraphFormat,
};
use equiforest::generate::{random_orientation, Family};
use equiforest::merge::merge_partition_oriented;
use equiforest::oracle::{brute_force_equitable, SearchConfig, SearchOutcome, DEFAULT_ORACLE_CAP};
use equiforest::route::{equitable_partition, RouteConfig, Strategy};
use equiforest::{
    degeneracy, exact_cap_override, generate, Error, Graph, Orientation, PartKind, Partition,
};

#[derive(Parser)]
#[command(
    name = "equiforest",
    version,
    about = "Equitable partitions into induced forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph (edge list, graph6 or arc list).
    Generate {
        #[command(flatten)]
        spec: GeneratorSpec,
        /// Output format: edges, g6 or arcs (arcs implies --orient).
        #[arg(long, default_value = "edges")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an equitable partition and print its certificate.
    Partition {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// forest, star_forest or in_out_star_forest (arc-list input).
        #[arg(long, default_value = "forest")]
        kind: PartKind,
        /// Cap for every exact search (overrides EQUIFOREST_EXACT_CAP).
        #[arg(long)]
        exact_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate against a graph file.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        format: Option<GraphFormat>,
    },
    /// Exhaustive search for an equitable partition.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        kind: PartKind,
        #[arg(long)]
        exact_cap: Option<usize>,
        #[arg(long, default_value_t = SearchConfig::default().node_budget)]
        node_budget: u64,
    },
    /// Time the constructive pipeline on a generated corpus (CSV).
    Bench {
        /// small, planar or degenerate.
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Seeds per instance size.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct GeneratorSpec {
    /// path, cycle, star, complete, fan, random_d_degenerate or stacked_triangulation.
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Orient every edge at random (seeded).
    #[arg(long)]
    orient: bool,
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file; the format follows the extension (.g6, .edges, .arcs).
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long)]
    format: Option<GraphFormat>,
    #[command(flatten)]
    generator: GeneratorSpec,
}

#[derive(Clone, Copy, Debug)]
enum Suite {
    Small,
    Planar,
    Degenerate,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Suite::Small),
            "planar" => Ok(Suite::Planar),
            "degenerate" => Ok(Suite::Degenerate),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

enum Loaded {
    Undirected(Graph),
    Oriented(Orientation),
}

impl Loaded {
    fn graph(&self) -> &Graph {
        match self {
            Loaded::Undirected(g) => g,
            Loaded::Oriented(o) => o.base(),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<equiforest::GraphError> for CliError {
    fn from(e: equiforest::GraphError) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                Error::Graph(_) => "invalid_graph",
                Error::VertexOutOfRange { .. } => "vertex_out_of_range",
                Error::NotAPartition(_) => "not_a_partition",
                Error::CapExceeded { .. } => "cap_exceeded",
                Error::UnsupportedKind(_) => "unsupported_kind",
                Error::InvalidColoring { .. } => "invalid_coloring",
                Error::TooFewClasses(_) => "too_few_classes",
                Error::DegeneracyTooHigh { .. } => "degeneracy_too_high",
                Error::InvalidOracleResponse(_) => "invalid_oracle_response",
                Error::NoRoute(_) => "no_route",
                Error::HeuristicFailure { .. } => "heuristic_failure",
                Error::EquitabilityDrift { .. } => "equitability_drift",
                Error::BudgetExceeded { .. } => "budget_exceeded",
                Error::InvalidParameter(_) => "invalid_parameter",
            },
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                Error::NoRoute(_)
                | Error::HeuristicFailure { .. }
                | Error::EquitabilityDrift { .. }
                | Error::InvalidOracleResponse(_),
            ) => 2,
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) | CliError::Usage(m) => m.clone(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn load_file(path: &Path, format: Option<GraphFormat>) -> Result<Loaded, CliError> {
    let format = format
        .or_else(|| GraphFormat::from_path(path))
        .ok_or_else(|| {
            CliError::Usage(format!(
                "cannot infer the format of {}; pass --format",
                path.display()
            ))
        })?;
    let text = read_file(path)?;
    Ok(match format {
        GraphFormat::Graph6 => Loaded::Undirected(parse_graph6(&text)?),
        GraphFormat::EdgeList => Loaded::Undirected(parse_edge_list(&text)?),
        GraphFormat::ArcList => Loaded::Oriented(parse_arc_list(&text)?),
    })
}

fn build(spec: &GeneratorSpec) -> Result<Loaded, CliError> {
    let family = spec
        .family
        .ok_or_else(|| CliError::Usage("pass --graph or --family".into()))?;
    let n = spec
        .n
        .ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
    let g = family.build(n, spec.d, spec.seed)?;
    Ok(if spec.orient {
        Loaded::Oriented(random_orientation(&g, spec.seed))
    } else {
        Loaded::Undirected(g)
    })
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    match &input.graph {
        Some(path) => load_file(path, input.format),
        None => build(&input.generator),
    }
}

fn exact_cap(flag: Option<usize>, default: usize) -> usize {
    flag.or_else(exact_cap_override).unwrap_or(default)
}

fn oriented_partition(o: &Orientation, k: usize, cap: usize) -> Result<Partition, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let c = exact_oriented_coloring(o, k + 1, cap)?.ok_or_else(|| {
        Error::NoRoute(format!("no consistent star coloring with {} colors", k + 1))
    })?;
    merge_partition_oriented(o, &c)
}

fn report_json(report: &PartitionReport) -> serde_json::Value {
    let violations: Vec<_> = report
        .violations
        .iter()
        .map(|v| json!({ "predicate": v.predicate(), "detail": v.to_string() }))
        .collect();
    json!({ "valid": report.is_valid(), "violations": violations })
}

fn cmd_generate(
    spec: &GeneratorSpec,
    format: GraphFormat,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let oriented = GeneratorSpec {
        orient: spec.orient || format == GraphFormat::ArcList,
        ..spec.clone()
    };
    let text = match (build(&oriented)?, format) {
        (Loaded::Oriented(o), GraphFormat::ArcList) => write_arc_list(&o),
        (loaded, GraphFormat::Graph6) => write_graph6(loaded.graph()) + "\n",
        (loaded, _) => write_edge_list(loaded.graph()),
    };
    write_output(out, &text)
}

fn cmd_partition(
    input: &Input,
    k: usize,
    strategy: Strategy,
    kind: PartKind,
    cap_flag: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let loaded = load(input)?;
    let cert = match (&loaded, kind) {
        (Loaded::Oriented(o), PartKind::InOutStarForest) => {
            let p = oriented_partition(o, k, exact_cap(cap_flag, DEFAULT_EXACT_CAP))?;
            let report = verify_partition_oriented(o, &p);
            assert!(
                report.is_valid(),
                "constructed partition failed verification: {report}"
            );
            Certificate::for_orientation(o, &p, "equiforest partition exact-oriented")
        }
        (_, PartKind::InOutStarForest) => {
            return Err(CliError::Usage(
                "in_out_star_forest needs an arc-list input".into(),
            ))
        }
        (loaded, kind) => {
            let g = loaded.graph();
            let mut cfg = RouteConfig::default();
            if let Some(cap) = cap_flag.or_else(exact_cap_override) {
                cfg = cfg.with_exact_cap(cap);
            }
            cfg.splitter.seed = input.generator.seed;
            let routed = equitable_partition(g, k, kind, strategy, &cfg)?;
            eprintln!(
                "route: {}, sizes: {:?}",
                routed.route,
                routed.partition.sizes()
            );
            let report = verify_partition(g, &routed.partition);
            assert!(
                report.is_valid(),
                "constructed partition failed verification: {report}"
            );
            match loaded {
                Loaded::Oriented(o) => Certificate::for_orientation(
                    o,
                    &routed.partition,
                    format!("equiforest partition {}", routed.route),
                ),
                Loaded::Undirected(g) => Certificate::new(
                    g,
                    &routed.partition,
                    format!("equiforest partition {}", routed.route),
                ),
            }
        }
    };
    write_output(out, &(cert.to_json() + "\n"))
}

fn cmd_verify(
    certificate: &Path,
    graph: &Path,
    format: Option<GraphFormat>,
) -> Result<bool, CliError> {
    let cert = Certificate::from_json(&read_file(certificate)?)
        .map_err(|e| CliError::Usage(format!("{}: {e}", certificate.display())))?;
    let report = match load_file(graph, format)? {
        Loaded::Undirected(g) => cert.verify(&g),
        Loaded::Oriented(o) => cert.verify_oriented(&o),
    };
    for v in &report.violations {
        eprintln!("{}: {v}", v.predicate());
    }
    println!("{}", report_json(&report));
    Ok(report.is_valid())
}

fn cmd_search(
    input: &Input,
    k: usize,
    kind: PartKind,
    cap_flag: Option<usize>,
    node_budget: u64,
) -> Result<u8, CliError> {
    let loaded = load(input)?;
    let g = loaded.graph();
    let cfg = SearchConfig {
        cap: exact_cap(cap_flag, DEFAULT_ORACLE_CAP),
        node_budget,
    };
    let started = Instant::now();
    let outcome = brute_force_equitable(g, k, kind, &cfg)?;
    eprintln!("search finished in {:.3}s", started.elapsed().as_secs_f64());
    let (line, code) = match outcome {
        SearchOutcome::Sat(p) => {
            let cert = Certificate::new(g, &p, "equiforest search");
            (json!({ "result": "sat", "certificate": cert }), 0)
        }
        SearchOutcome::Unsat { nodes } => (
            json!({ "result": "unsat", "k": k, "part_kind": kind, "nodes": nodes }),
            2,
        ),
        SearchOutcome::BudgetExceeded { nodes } => {
            (json!({ "result": "budget_exceeded", "nodes": nodes }), 3)
        }
    };
    println!("{line}");
    Ok(code)
}

fn suite_instances(suite: Suite, seeds: u64) -> Result<Vec<(String, Graph, usize)>, CliError> {
    let mut instances = Vec::new();
    for seed in 0..seeds {
        match suite {
            Suite::Small => {
                for n in [8, 12, 16] {
                    let g = generate::gnp(n, 0.3, seed);
                    instances.push((format!("gnp_{n}_s{seed}"), g, 3));
                }
            }
            Suite::Planar => {
                for n in [20, 50, 100, 200] {
                    let g = generate::stacked_triangulation(n, seed)?;
                    for k in [4, 9] {
                        instances.push((format!("stacked_{n}_s{seed}"), g.clone(), k));
                    }
                }
            }
            Suite::Degenerate => {
                for n in [30, 60, 120, 240] {
                    let g = generate::random_d_degenerate(n, 2, seed)?;
                    instances.push((format!("deg2_{n}_s{seed}"), g, 3));
                }
                for n in [27, 54] {
                    let g = generate::random_d_degenerate(n, 3, seed)?;
                    instances.push((format!("deg3_{n}_s{seed}"), g, 9));
                }
            }
        }
    }
    Ok(instances)
}

fn cmd_bench(
    suite: Suite,
    strategy: Strategy,
    seeds: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let mut cfg = RouteConfig::default();
    if let Some(cap) = exact_cap_override() {
        cfg = cfg.with_exact_cap(cap);
    }
    let mut csv = String::from("instance,n,m,d,k,strategy,micros,valid\n");
    for (name, g, k) in suite_instances(suite, seeds)? {
        let started = Instant::now();
        let result = equitable_partition(&g, k, PartKind::Forest, strategy, &cfg);
        let micros = started.elapsed().as_micros();
        let (route, valid) = match &result {
            Ok(r) => (
                r.route.to_string(),
                verify_partition(&g, &r.partition).is_valid(),
            ),
            Err(e) => {
                eprintln!("{name}: {e}");
                (strategy.to_string(), false)
            }
        };
        csv.push_str(&format!(
            "{name},{},{},{},{k},{route},{micros},{valid}\n",
            g.n(),
            g.edge_count(),
            degeneracy(&g).d
        ));
    }
    write_output(out, &csv)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Generate { spec, format, out } => {
            cmd_generate(&spec, format, out.as_deref()).map(|()| 0)
        }
        Command::Partition {
            input,
            k,
            strategy,
            kind,
            exact_cap,
            out,
        } => cmd_partition(&input, k, strategy, kind, exact_cap, out.as_deref()).map(|()| 0),
        Command::Verify {
            certificate,
            graph,
            format,
        } => cmd_verify(&certificate, &graph, format).map(|valid| if valid { 0 } else { 1 }),
        Command::Search {
            input,
            k,
            kind,
            exact_cap,
            node_budget,
        } => cmd_search(&input, k, kind, exact_cap, node_budget),
        Command::Bench {
            suite,
            strategy,
            seeds,
            out,
        } => cmd_bench(suite, strategy, seeds, out.as_deref()).map(|()| 0),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            println!("{}", json!({ "error": e.name(), "message": e.message() }));
            ExitCode::from(e.exit_code())
        }
    }
}
