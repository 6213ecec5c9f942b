//! Containment probability of biased random subsets.
//!
//! A prob-biased subset of `[n]` includes each vertex independently with the
//! given probability. For a t-intersecting hypergraph with bias below
//! 1/(t+1), the probability that the sampled subset contains some edge is at
//! most `prob^t`; this module computes that probability exactly (full
//! subset enumeration for n <= 20) or by Monte Carlo, and checks the bound.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::constructors::RandomSeed;
use crate::error::Error;
use crate::hypergraph::Hypergraph;

/// Largest n for which exact enumeration over all 2^n subsets is attempted.
pub const EXACT_ENUMERATION_MAX_N: usize = 20;

/// Monte Carlo parameters.
#[derive(Debug, Clone, Copy)]
pub struct BiasedTrialConfig {
    /// Inclusion probability, in (0, 1).
    pub prob: f64,
    pub trials: usize,
    pub seed: RandomSeed,
}

impl BiasedTrialConfig {
    fn validate(&self) -> Result<(), Error> {
        check_prob(self.prob)?;
        if self.trials < 1 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        Ok(())
    }
}

/// A Monte Carlo estimate with its binomial standard error.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureMode {
    Exact,
    Mc,
}

/// Result of checking the containment probability against `prob^t`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContainmentReport {
    /// The bound `prob^t`.
    pub bound: f64,
    pub mode: MeasureMode,
    pub pass: bool,
    /// Exact containment probability, or the Monte Carlo estimate.
    pub probability: f64,
    /// Standard error of the estimate; absent in exact mode.
    pub stderr: Option<f64>,
}

fn check_prob(prob: f64) -> Result<(), Error> {
    if !(prob > 0.0 && prob < 1.0) {
        return Err(Error::InvalidParameter(format!("prob = {prob} must lie in (0, 1)")));
    }
    Ok(())
}

/// Samples one prob-biased subset of `[1, n]`, returned as sorted vertex ids.
pub fn sample_biased_subset(n: usize, prob: f64, seed: RandomSeed) -> Result<Vec<usize>, Error> {
    check_prob(prob)?;
    let mut rng = seed.rng();
    Ok(sample_with(n, prob, &mut rng))
}

fn sample_with<R: Rng>(n: usize, prob: f64, rng: &mut R) -> Vec<usize> {
    (1..=n).filter(|_| rng.random::<f64>() < prob).collect()
}

/// Exact probability that a prob-biased subset of `[1, n]` contains at least
/// one edge of `graph`, by enumeration over all 2^n subsets.
pub fn containment_probability_exact(graph: &Hypergraph, prob: f64) -> Result<f64, Error> {
    check_prob(prob)?;
    let n = graph.n();
    if n > EXACT_ENUMERATION_MAX_N {
        return Err(Error::TooManyVertices { n, max: EXACT_ENUMERATION_MAX_N });
    }

    let edge_masks: Vec<u32> = graph
        .edges()
        .iter()
        .map(|edge| edge.iter().fold(0u32, |m, &v| m | (1 << (v - 1))))
        .collect();

    // in_pow[i] = prob^i, out_pow[i] = (1-prob)^i
    let mut in_pow = vec![1.0f64; n + 1];
    let mut out_pow = vec![1.0f64; n + 1];
    for i in 1..=n {
        in_pow[i] = in_pow[i - 1] * prob;
        out_pow[i] = out_pow[i - 1] * (1.0 - prob);
    }

    let mut total = 0.0f64;
    for subset in 0u32..(1u32 << n) {
        if edge_masks.iter().any(|&em| em & !subset == 0) {
            let inside = subset.count_ones() as usize;
            total += in_pow[inside] * out_pow[n - inside];
        }
    }
    Ok(total)
}

/// Monte Carlo estimate of the containment probability, with the binomial
/// standard error `sqrt(q(1-q)/trials)`. Deterministic for a given seed.
pub fn containment_probability_mc(
    graph: &Hypergraph,
    cfg: &BiasedTrialConfig,
) -> Result<McEstimate, Error> {
    cfg.validate()?;
    let mut rng = cfg.seed.rng();
    let n = graph.n();
    let mut hits = 0usize;
    let mut subset = vec![false; n];
    for _ in 0..cfg.trials {
        for slot in subset.iter_mut() {
            *slot = rng.random::<f64>() < cfg.prob;
        }
        let contains = graph
            .edges()
            .iter()
            .any(|edge| edge.iter().all(|&v| subset[v - 1]));
        if contains {
            hits += 1;
        }
    }
    let estimate = hits as f64 / cfg.trials as f64;
    let stderr = (estimate * (1.0 - estimate) / cfg.trials as f64).sqrt();
    Ok(McEstimate { estimate, stderr, trials: cfg.trials })
}

/// Checks the containment probability of a t-intersecting hypergraph against
/// the bound `prob^t`, requiring `prob < 1/(t+1)`.
///
/// Uses exact enumeration when `n <= 20`, otherwise falls back to Monte
/// Carlo with `cfg`. Exact mode compares directly; Monte Carlo mode fails
/// only when the estimate exceeds the bound by more than four standard
/// errors, since the bound is a proven fact and only overwhelming evidence
/// should flag a defect.
pub fn check_containment_bound(
    graph: &Hypergraph,
    t: usize,
    prob: f64,
    cfg: &BiasedTrialConfig,
) -> Result<ContainmentReport, Error> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be >= 1".into()));
    }
    check_prob(prob)?;
    let limit = 1.0 / (t as f64 + 1.0);
    if prob >= limit {
        return Err(Error::BiasTooLarge { prob, t, limit });
    }
    if !graph.is_t_intersecting(t) {
        return Err(Error::InvalidParameter(format!(
            "hypergraph is not {t}-intersecting"
        )));
    }

    let bound = prob.powi(t as i32);
    if graph.n() <= EXACT_ENUMERATION_MAX_N {
        let probability = containment_probability_exact(graph, prob)?;
        Ok(ContainmentReport {
            bound,
            mode: MeasureMode::Exact,
            pass: probability <= bound,
            probability,
            stderr: None,
        })
    } else {
        let mc = containment_probability_mc(graph, &BiasedTrialConfig { prob, ..*cfg })?;
        Ok(ContainmentReport {
            bound,
            mode: MeasureMode::Mc,
            pass: mc.estimate - 4.0 * mc.stderr <= bound,
            probability: mc.estimate,
            stderr: Some(mc.stderr),
        })
    }
}
