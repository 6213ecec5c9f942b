//! `pphf` — build, verify, and exactly size partially p-perfect hash
//! families, and schedule coordinating groups into time slots.

mod schedule;

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use pphf::{
    check_containment_bound, lambda_exact, partite_cover_lower_bound, union_bound_value,
    witness_complete_uniform_capped, witness_triangle, BiasedTrialConfig, CoverBoundQuery,
    HashFamily, Hypergraph, RandomSeed, SearchBudget,
};

use schedule::{build_family, schedule_days, BuildOptions, Strategy};

const LONG_ABOUT: &str = "\
Build, verify, and exactly size partially p-perfect hash families over
intersecting hypergraphs.

A hash function is partially p-perfect on a vertex set S when it attains at
least min(p, |S|) distinct buckets on S; a family covers a hypergraph at
level p when every edge has such a member. In scheduling terms, buckets are
time slots per day, family members are days, vertices are nodes, and edges
are coordinating groups: a covering family gives every group a day on which
enough members hold distinct slots.

Hypergraphs use a text format: a header line \"n m\", then m lines of
space-separated 1-based vertex ids; lines starting with '#' are comments.
Families use JSON: {\"b\": .., \"functions\": [[..], ..], \"n\": ..} with
1-based bucket values. Reports and results are printed as JSON with sorted
keys. Exit codes: 0 success/pass, 1 verified-fail (e.g. a family that does
not cover), 2 usage or input errors.

All randomized paths take --seed and default to the fixed seed 1729, so
identical invocations produce identical bytes.";

#[derive(Parser)]
#[command(name = "pphf", version, about = "Partially p-perfect hash families for intersecting hypergraphs", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessKind {
    /// The 1-intersecting triangle {{1,2},{2,3},{1,3}}
    Triangle,
    /// All k-subsets of [1, n]
    CompleteUniform,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a hash family covers every edge at level p
    Verify {
        /// Hypergraph file in the text format; "-" reads standard input
        #[arg(long, default_value = "-")]
        graph: String,
        /// Hash family JSON file; "-" reads standard input
        #[arg(long)]
        family: String,
        /// Distinctness target
        #[arg(long)]
        p: usize,
    },
    /// Build a covering family and print it as family JSON
    Construct {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        p: usize,
        /// Bucket count
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long, default_value_t = 1729)]
        seed: u64,
        /// Family size for the randomized strategy; derived from the union
        /// bound when omitted
        #[arg(long)]
        x: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        /// Largest family size the exact strategy searches
        #[arg(long, default_value_t = 2)]
        x_max: usize,
        #[arg(long, default_value_t = 1_000_000)]
        function_cap: usize,
    },
    /// Exact minimum covering family size by exhaustive search
    ExactLambda {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 2)]
        x_max: usize,
        #[arg(long, default_value_t = 1_000_000)]
        function_cap: usize,
        /// Advisory wall-clock budget in seconds
        #[arg(long)]
        time_hint: Option<f64>,
    },
    /// Print a built-in hypergraph in the text format
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        /// Edge size (complete-uniform only)
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count (complete-uniform only)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        edge_cap: u128,
    },
    /// Check the biased-subset containment probability against prob^t
    Measure {
        #[arg(long, default_value = "-")]
        graph: String,
        /// Intersection level of the hypergraph (verified)
        #[arg(long)]
        t: usize,
        /// Inclusion probability, below 1/(t+1)
        #[arg(long)]
        prob: f64,
        /// Monte Carlo trials, used when n > 20
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        #[arg(long, default_value_t = 1729)]
        seed: u64,
    },
    /// Closed-form bound calculators
    Bounds {
        /// Evaluate C(b, p-1)*((p-1)/b)^(t*x) exactly; needs --t --p --b --x
        #[arg(long)]
        union_bound: bool,
        /// Evaluate the partite-cover lower bound; needs --n --k --r
        #[arg(long)]
        cover_bound: bool,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Assign time slots to nodes so that every group gets a day with
    /// min(p, group size) distinct slots
    Schedule {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        p: usize,
        /// Slots per day
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long, default_value_t = 1729)]
        seed: u64,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        #[arg(long, default_value_t = 2)]
        x_max: usize,
        #[arg(long, default_value_t = 1_000_000)]
        function_cap: usize,
    },
}

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: String) -> CliError {
        CliError { code: 2, msg }
    }
}

impl From<pphf::Error> for CliError {
    fn from(e: pphf::Error) -> CliError {
        let code = match e {
            // a fully verified negative outcome, not a usage problem
            pphf::Error::AttemptsExhausted { .. } => 1,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError { code: 2, msg: e.to_string() }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError { code: 2, msg: format!("{path}: {e}") })
    }
}

fn read_graph(path: &str) -> Result<Hypergraph, CliError> {
    Ok(Hypergraph::parse(&read_input(path)?)?)
}

fn read_family(path: &str) -> Result<HashFamily, CliError> {
    Ok(HashFamily::from_json(&read_input(path)?)?)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify { graph, family, p } => {
            let g = read_graph(&graph)?;
            let family = read_family(&family)?;
            let report = family.covers(&g, p)?;
            println!("{}", report.to_json());
            Ok(if report.is_covering() { 0 } else { 1 })
        }

        Command::Construct {
            graph,
            p,
            b,
            strategy,
            seed,
            x,
            max_attempts,
            x_max,
            function_cap,
        } => {
            let g = read_graph(&graph)?;
            let opts = BuildOptions {
                seed: RandomSeed(seed),
                x,
                max_attempts,
                x_max,
                function_cap,
            };
            let (family, _report) = build_family(&g, p, b, strategy, &opts)?;
            println!("{}", family.to_json());
            Ok(0)
        }

        Command::ExactLambda { graph, p, b, x_max, function_cap, time_hint } => {
            let g = read_graph(&graph)?;
            let budget = SearchBudget {
                x_max,
                function_cap,
                time_hint: time_hint.map(std::time::Duration::from_secs_f64),
            };
            let result = lambda_exact(&g, p, b, budget)?;
            let found = result.value.is_some();
            println!("{}", serde_json::to_string(&result).expect("result serializes"));
            Ok(if found { 0 } else { 1 })
        }

        Command::Witness { kind, k, n, edge_cap } => {
            let g = match kind {
                WitnessKind::Triangle => witness_triangle(),
                WitnessKind::CompleteUniform => {
                    let (k, n) = match (k, n) {
                        (Some(k), Some(n)) => (k, n),
                        _ => {
                            return Err(CliError::usage(
                                "complete-uniform needs --k and --n".into(),
                            ))
                        }
                    };
                    witness_complete_uniform_capped(k, n, edge_cap)?
                }
            };
            print!("{}", g.to_text());
            Ok(0)
        }

        Command::Measure { graph, t, prob, trials, seed } => {
            let g = read_graph(&graph)?;
            let cfg = BiasedTrialConfig { prob, trials, seed: RandomSeed(seed) };
            let report = check_containment_bound(&g, t, prob, &cfg)?;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            Ok(if report.pass { 0 } else { 1 })
        }

        Command::Bounds { union_bound, cover_bound, t, p, b, x, n, k, r } => {
            if union_bound == cover_bound {
                return Err(CliError::usage(
                    "pass exactly one of --union-bound or --cover-bound".into(),
                ));
            }
            if union_bound {
                let (t, p, b, x) = match (t, p, b, x) {
                    (Some(t), Some(p), Some(b), Some(x)) => (t, p, b, x),
                    _ => return Err(CliError::usage("--union-bound needs --t --p --b --x".into())),
                };
                let value = union_bound_value(t, p, b, x)?;
                let out = json!({
                    "den": value.denom().to_string(),
                    "num": value.numer().to_string(),
                    "value": value.to_f64(),
                });
                println!("{out}");
            } else {
                let (n, k, r) = match (n, k, r) {
                    (Some(n), Some(k), Some(r)) => (n, k, r),
                    _ => return Err(CliError::usage("--cover-bound needs --n --k --r".into())),
                };
                let value = partite_cover_lower_bound(CoverBoundQuery { n, k, r })?;
                println!("{}", json!({ "value": value }));
            }
            Ok(0)
        }

        Command::Schedule {
            graph,
            p,
            r,
            strategy,
            seed,
            x,
            max_attempts,
            x_max,
            function_cap,
        } => {
            let g = read_graph(&graph)?;
            let opts = BuildOptions {
                seed: RandomSeed(seed),
                x,
                max_attempts,
                x_max,
                function_cap,
            };
            let schedule = schedule_days(&g, p, r, strategy, &opts)?;
            println!("{}", serde_json::to_string(&schedule).expect("schedule serializes"));
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            e.code
        }
    };
    std::process::exit(code);
}
