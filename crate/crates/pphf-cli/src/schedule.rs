//! Task scheduling on top of covering hash families.
//!
//! Groups of nodes (hyperedges) need a day on which at least `min(p, |group|)`
//! members hold pairwise-distinct time slots out of `r` per day. Slots play
//! the role of buckets and days the role of family members, so any covering
//! family yields a schedule.

use clap::ValueEnum;
use serde::Serialize;

use pphf::{
    greedy_two_bucket, lambda_exact, min_random_family_size, minimal_edge_family_b2,
    minimal_edge_function_b3, randomized_system, HashFamily, Hypergraph, IntersectionLevel,
    RandomSeed, SearchBudget, SystemReport,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    /// Single greedy two-bucket function; needs p = 2, two slots, and a
    /// 2-intersecting group family.
    Greedy,
    /// Minimal-edge construction for 1-intersecting group families at p = 2:
    /// two functions when r = 2, a single function when r >= 3.
    MinimalEdge,
    /// Las-Vegas sampling, sized by the union bound unless -x is given.
    Randomized,
    /// Exhaustive minimum-size search.
    Exact,
}

/// Knobs shared by the `construct` and `schedule` subcommands.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub seed: RandomSeed,
    pub x: Option<usize>,
    pub max_attempts: usize,
    pub x_max: usize,
    pub function_cap: usize,
}

/// Builds a family with the chosen strategy and verifies it. A clean report
/// is the success condition; a failed verification is a verified-fail (exit
/// code 1), while inapplicable parameters are usage errors (exit code 2).
pub fn build_family(
    graph: &Hypergraph,
    p: usize,
    b: usize,
    strategy: Strategy,
    opts: &BuildOptions,
) -> Result<(HashFamily, SystemReport), CliError> {
    let (family, report) = match strategy {
        Strategy::Greedy => {
            if p != 2 || b != 2 {
                return Err(CliError::usage(format!(
                    "greedy applies only to p = 2 with 2 slots (got p = {p}, {b})"
                )));
            }
            let h = greedy_two_bucket(graph)?;
            let family = HashFamily::new(graph.n(), 2, vec![h])?;
            let report = family.covers(graph, 2)?;
            (family, report)
        }
        Strategy::MinimalEdge => {
            if p != 2 {
                return Err(CliError::usage(format!(
                    "minimal-edge applies only to p = 2 (got p = {p})"
                )));
            }
            if b < 2 {
                return Err(CliError::usage("minimal-edge needs at least 2 slots".into()));
            }
            let out = if b == 2 {
                minimal_edge_family_b2(graph)?
            } else {
                minimal_edge_function_b3(graph)?
            };
            let family = out.family.with_bucket_count(b)?;
            (family, out.report)
        }
        Strategy::Randomized => {
            let x = match opts.x {
                Some(x) => x,
                None => {
                    let t = match graph.intersection_level() {
                        IntersectionLevel::Finite(t) => t,
                        // with fewer than two groups a single sampled
                        // function is verified directly
                        IntersectionLevel::Unbounded => 1,
                    };
                    match min_random_family_size(t, p, b) {
                        Ok(x) => x,
                        Err(e) if graph.edge_count() < 2 => {
                            let _ = e;
                            1
                        }
                        Err(e) => {
                            return Err(CliError::usage(format!(
                                "cannot size the family automatically ({e}); pass --x explicitly"
                            )))
                        }
                    }
                }
            };
            let out = randomized_system(graph, p, b, x, opts.seed, opts.max_attempts)?;
            (out.family, out.report)
        }
        Strategy::Exact => {
            let budget = SearchBudget {
                x_max: opts.x_max,
                function_cap: opts.function_cap,
                time_hint: None,
            };
            let result = lambda_exact(graph, p, b, budget)?;
            match result.certificate {
                Some(family) if !family.is_empty() => {
                    let report = family.covers(graph, p)?;
                    (family, report)
                }
                Some(_empty) => {
                    return Err(CliError::usage(
                        "the group family is empty; nothing to schedule".into(),
                    ))
                }
                None => {
                    return Err(CliError {
                        code: 1,
                        msg: format!(
                            "no covering family of size <= {} exists for these parameters",
                            opts.x_max
                        ),
                    })
                }
            }
        }
    };

    if !report.is_covering() {
        return Err(CliError {
            code: 1,
            msg: format!(
                "constructed family leaves {} group(s) uncovered: {:?}",
                report.uncovered.len(),
                report.uncovered
            ),
        });
    }
    Ok((family, report))
}

/// A covering family relabeled as a calendar: `days[d][v-1]` is the slot of
/// node `v` on day `d`, and `per_group_day[g]` is the first day on which
/// group `g` attains `min(p, |group|)` distinct slots.
#[derive(Debug, Serialize)]
pub struct Schedule {
    pub days: Vec<Vec<usize>>,
    pub per_group_day: Vec<usize>,
}

pub fn schedule_days(
    graph: &Hypergraph,
    p: usize,
    r: usize,
    strategy: Strategy,
    opts: &BuildOptions,
) -> Result<Schedule, CliError> {
    let (family, report) = build_family(graph, p, r, strategy, opts)?;
    let days = family.functions().iter().map(|h| h.values().to_vec()).collect();
    let per_group_day = report
        .covered
        .iter()
        .map(|day| day.expect("verified covering report has a day for every group"))
        .collect();
    Ok(Schedule { days, per_group_day })
}
