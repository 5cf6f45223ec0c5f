//! `rgg`: generate random geometric graphs, decide properties, and run
//! threshold experiments.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use rgg_core::detectors::{
    self, adjacent_sides_are_edges, crossing_pairs, two_hop_holds, Property, TriStateDecision, Verdict,
};
use rgg_core::error::Error;
use rgg_core::geometry::Metric;
use rgg_core::graph::{self, GraphConfig, RggGraph};
use rgg_core::io::{load_points, save_points, write_sweep_csv, RunRecord};
use rgg_core::montecarlo::{self, ThresholdEstimate, ThresholdQuery};
use rgg_core::recipes::{self, Scale};

#[derive(Parser)]
#[command(
    name = "rgg",
    version,
    about = "Random geometric graph thresholds: generation, detection, Monte Carlo"
)]
struct Cli {
    /// Run a pinned reproduction recipe instead of a subcommand.
    #[arg(long, global = true, value_name = "NAME")]
    recipe: Option<String>,

    /// Recipe scale: smoke or full.
    #[arg(long, global = true, default_value = "full")]
    scale: String,

    /// Directory caching finished threshold searches of a recipe.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random point set to a file.
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide one property and print a JSON verdict.
    Detect {
        /// Read points from a point-set file.
        #[arg(long = "in", value_name = "FILE", conflicts_with_all = ["n", "seed"])]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        /// Radius; overrides the radius stored in an input file.
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        metric: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        property: PropertyArgs,
    },
    /// Success probability over a grid of radii, as CSV.
    Sweep {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value = "square")]
        metric: String,
        #[command(flatten)]
        property: PropertyArgs,
        /// Comma-separated radii; overrides --r-min/--r-max/--steps.
        #[arg(long, value_delimiter = ',')]
        r_grid: Vec<f64>,
        #[arg(long, default_value_t = 0.001)]
        r_min: f64,
        #[arg(long, default_value_t = 0.1)]
        r_max: f64,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate the 50% radius of a monotone property by bisection.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "square")]
        metric: String,
        #[command(flatten)]
        property: PropertyArgs,
        #[arg(long, default_value_t = 400)]
        trials: usize,
        #[arg(long, default_value_t = 0.02)]
        tolerance: f64,
        #[arg(long, default_value_t = 0.5)]
        target: f64,
        #[arg(long)]
        r_lo: Option<f64>,
        #[arg(long)]
        r_hi: Option<f64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit ln r* against ln n from threshold JSON files.
    Fit {
        /// Threshold outputs, recipe reports, or arrays of either.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean and variance of the crossing count.
    Crossings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value = "square")]
        metric: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: f64,
    #[arg(long, default_value = "square")]
    metric: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct PropertyArgs {
    /// One of has-edge, connected-k, clique-k, plane, planar, has-free-edge,
    /// all-free, independent-k.
    #[arg(long)]
    property: String,
    #[arg(long)]
    k: Option<usize>,
}

impl PropertyArgs {
    fn parse(&self) -> Result<Property, Error> {
        Property::from_parts(&self.property, self.k)
    }
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Parse { .. } => 3,
            Error::BracketNotFound { .. } | Error::UnknownRateExceeded { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 3,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn metric(s: &str) -> Result<Metric, Failure> {
    Ok(s.parse::<Metric>()?)
}

fn open_out(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_json<T: Serialize>(out: Option<&Path>, run: &RunRecord, result: &T) -> Result<(), Failure> {
    let doc = json!({ "run": run, "result": result });
    let mut w = open_out(out)?;
    serde_json::to_writer_pretty(&mut w, &doc).map_err(io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn verdict_json(g: &RggGraph, property: Property) -> Result<Value, Failure> {
    let verdict = detectors::evaluate(g, property)?;
    let mut doc = json!({
        "property": property.name(),
        "k": property.k(),
        "n": g.n(),
        "r": g.r(),
        "metric": g.metric(),
        "edges": g.edge_count(),
    });
    match &verdict {
        Verdict::Bool(b) => doc["result"] = json!(b),
        Verdict::Tri(t) => {
            doc["result"] = json!(match t {
                TriStateDecision::Yes { .. } => "yes",
                TriStateDecision::No { .. } => "no",
                TriStateDecision::Unknown { .. } => "unknown",
            });
            doc["decision"] = json!(t);
            if let TriStateDecision::No { certificate } = t {
                doc["certificate_text"] = json!(certificate.to_string());
            }
        }
    }
    let mut reported = Vec::new();
    match property {
        Property::Plane => {
            reported = crossing_pairs(g, false);
            doc["crossing_count"] = json!(reported.len());
            doc["witness"] = json!(reported.first());
        }
        Property::Planar => doc["witness"] = json!(detectors::kuratowski_witness(g)),
        Property::CliqueK(k) => doc["decision"] = json!(detectors::has_clique_k(g, k)?),
        Property::HasFreeEdge | Property::AllEdgesFree => {
            let free = detectors::free_edges(g);
            doc["free_edge_count"] = json!(free.len());
            doc["free_edges"] = json!(free);
        }
        Property::ConnectedK(_) => doc["max_component_size"] = json!(graph::max_component_size(g)),
        _ => {}
    }
    let clm1 = reported.iter().all(|p| adjacent_sides_are_edges(g, p));
    let two_hop = reported.iter().all(|p| two_hop_holds(g, p));
    doc["self_checks"] = json!({
        "crossings_checked": reported.len(),
        "adjacent_sides_are_edges": clm1,
        "two_hop": two_hop,
        "graph_consistent": g.is_consistent(),
    });
    if !(clm1 && two_hop) {
        return Err(Failure {
            code: 1,
            message: format!("crossing invariant violated: {doc}"),
        });
    }
    Ok(doc)
}

/// Threshold estimates found in a JSON document.
fn collect_thresholds(v: &Value, out: &mut Vec<ThresholdEstimate>) {
    if let Ok(est) = serde_json::from_value::<ThresholdEstimate>(v.clone()) {
        out.push(est);
        return;
    }
    match v {
        Value::Array(items) => items.iter().for_each(|i| collect_thresholds(i, out)),
        Value::Object(map) => {
            for key in ["result", "thresholds"] {
                if let Some(inner) = map.get(key) {
                    collect_thresholds(inner, out);
                }
            }
        }
        _ => {}
    }
}

fn run_recipe(cli: &Cli, name: &str, args: &[String]) -> Result<(), Failure> {
    let scale: Scale = cli.scale.parse()?;
    let report = recipes::run_recipe_cached(name, scale, cli.cache.as_deref())?;
    let run = RunRecord::new("recipe", args.to_vec(), 0);
    let out = match &cli.command {
        Some(Command::Sweep { out, .. })
        | Some(Command::Threshold { out, .. })
        | Some(Command::Fit { out, .. })
        | Some(Command::Crossings { out, .. }) => out.clone(),
        _ => None,
    };
    emit_json(out.as_deref(), &run, &report)?;
    if !report.passed() {
        return Err(Failure {
            code: 1,
            message: format!("recipe {name}: some checks did not pass"),
        });
    }
    Ok(())
}

fn run(cli: Cli, args: Vec<String>) -> Result<(), Failure> {
    if let Some(name) = cli.recipe.clone() {
        return run_recipe(&cli, &name, &args);
    }
    let Some(command) = cli.command else {
        return Err(usage("a subcommand or --recipe is required (see --help)"));
    };
    match command {
        Command::Generate { graph, out } => {
            let config = GraphConfig::new(graph.n, graph.r, metric(&graph.metric)?, graph.seed);
            let g = graph::generate(&config)?;
            save_points(&out, g.points(), g.r(), g.metric())?;
        }
        Command::Detect {
            input,
            n,
            r,
            metric: m,
            seed,
            property,
        } => {
            let property = property.parse()?;
            let g = match input {
                Some(path) => {
                    let file = load_points(&path)?;
                    let metric = match m {
                        Some(m) => metric(&m)?,
                        None => file.metric,
                    };
                    graph::from_points(file.points, r.unwrap_or(file.r), metric)?
                }
                None => {
                    let n = n.ok_or_else(|| usage("detect needs --in or --n/--r"))?;
                    let r = r.ok_or_else(|| usage("detect needs --r"))?;
                    let metric = metric(m.as_deref().unwrap_or("square"))?;
                    graph::generate(&GraphConfig::new(n, r, metric, seed.unwrap_or(1)))?
                }
            };
            let verdict = verdict_json(&g, property)?;
            emit_json(None, &RunRecord::new("detect", args, seed.unwrap_or(0)), &verdict)?;
        }
        Command::Sweep {
            n,
            metric: m,
            property,
            r_grid,
            r_min,
            r_max,
            steps,
            trials,
            seed,
            out,
        } => {
            let property = property.parse()?;
            let grid = if r_grid.is_empty() {
                if !(r_min > 0.0 && r_max >= r_min) {
                    return Err(usage("need 0 < --r-min <= --r-max"));
                }
                montecarlo::log_grid(r_min, r_max, steps)
            } else {
                r_grid
            };
            let rows = montecarlo::sweep(n, metric(&m)?, property, &grid, trials, seed)?;
            let mut w = open_out(out.as_deref())?;
            write_sweep_csv(&mut w, &RunRecord::new("sweep", args, seed), &rows)?;
        }
        Command::Threshold {
            n,
            metric: m,
            property,
            trials,
            tolerance,
            target,
            r_lo,
            r_hi,
            seed,
            out,
        } => {
            let mut q = ThresholdQuery::new(n, metric(&m)?, property.parse()?, trials, seed);
            q.tolerance = tolerance;
            q.target_p = target;
            q.bracket = match (r_lo, r_hi) {
                (Some(lo), Some(hi)) => Some((lo, hi)),
                (None, None) => None,
                _ => return Err(usage("--r-lo and --r-hi go together")),
            };
            let est = montecarlo::locate_threshold(&q)?;
            emit_json(out.as_deref(), &RunRecord::new("threshold", args, seed), &est)?;
        }
        Command::Fit { inputs, out } => {
            let mut estimates = Vec::new();
            for path in &inputs {
                let text = std::fs::read_to_string(path)?;
                let v: Value = serde_json::from_str(&text).map_err(|e| Failure {
                    code: 3,
                    message: format!("{}: {e}", path.display()),
                })?;
                collect_thresholds(&v, &mut estimates);
            }
            let points: Vec<(f64, f64)> = estimates.iter().map(|e| (e.n as f64, e.r_star)).collect();
            let fit = montecarlo::fit_exponent(&points)?;
            let mut result = serde_json::to_value(&fit).map_err(io::Error::from)?;
            let properties: Vec<Property> = estimates.iter().map(|e| e.property).collect();
            if let Some(first) = properties.first() {
                if properties.iter().all(|p| p == first) {
                    result["property"] = json!(first);
                    result["predicted_slope"] = json!(first.predicted_exponent());
                }
            }
            emit_json(out.as_deref(), &RunRecord::new("fit", args, 0), &result)?;
        }
        Command::Crossings {
            n,
            r,
            metric: m,
            trials,
            seed,
            out,
        } => {
            let moments = montecarlo::crossing_moments(n, r, metric(&m)?, trials, seed)?;
            let result =
                json!({ "n": n, "r": r, "trials": trials, "mean": moments.mean, "variance": moments.variance });
            emit_json(out.as_deref(), &RunRecord::new("crossings", args, seed), &result)?;
        }
    }
    Ok(())
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("RGG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| usage(format!("RGG_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| usage(e.to_string()))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli, args)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rgg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
