//! Exact minimum system size by symmetry-reduced exhaustive search.
//!
//! Bucket relabeling never changes a coverage verdict, so each function slot
//! only needs one representative per relabeling orbit: the restricted growth
//! strings of length n over at most b labels (label 1 first, each new label
//! at most one above the running maximum). Family order does not matter
//! either, so multi-function families are enumerated as non-decreasing index
//! tuples over the canonical list.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::family::{HashFamily, HashFunction};
use crate::hypergraph::Hypergraph;

/// Limits for [`lambda_exact`] and [`no_single_function_system`].
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Largest family size to try.
    pub x_max: usize,
    /// Maximum canonical functions to enumerate.
    pub function_cap: usize,
    /// Advisory wall-clock budget, checked at coarse granularity.
    pub time_hint: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { x_max: 2, function_cap: 1_000_000, time_hint: None }
    }
}

/// Outcome of an exact search for the minimum covering family size.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LambdaResult {
    /// Lexicographically least minimum covering family, when one was found.
    pub certificate: Option<HashFamily>,
    /// True when every family size up to `x_max` was fully enumerated
    /// without finding a cover, proving the minimum exceeds `x_max`.
    pub exhausted: bool,
    pub functions_enumerated: usize,
    /// The minimum covering family size, when found.
    #[serde(rename = "lambda")]
    pub value: Option<usize>,
}

/// Iterator over canonical functions `[n] -> [b]`: restricted growth strings
/// using at most `b` labels. Yields `sum_{j=1..b} S(n, j)` functions, where
/// `S` is the Stirling number of the second kind.
pub struct CanonicalFunctions {
    n: usize,
    b: usize,
    state: Option<Vec<usize>>,
    started: bool,
}

/// All canonical functions `[n] -> [b]`, one per bucket-relabeling orbit.
pub fn canonical_functions(n: usize, b: usize) -> CanonicalFunctions {
    CanonicalFunctions { n, b, state: None, started: false }
}

impl Iterator for CanonicalFunctions {
    type Item = HashFunction;

    fn next(&mut self) -> Option<HashFunction> {
        if self.n == 0 || self.b == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.state = Some(vec![1; self.n]);
        } else {
            let a = self.state.as_mut()?;
            // advance to the next growth string in lexicographic order
            let mut i = self.n;
            loop {
                if i <= 1 {
                    self.state = None;
                    break;
                }
                i -= 1;
                let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
                if a[i] < self.b.min(prefix_max + 1) {
                    a[i] += 1;
                    for x in &mut a[i + 1..] {
                        *x = 1;
                    }
                    break;
                }
            }
        }
        self.state
            .as_ref()
            .map(|values| HashFunction::new(self.b, values.clone()).expect("growth string is valid"))
    }
}

/// Edge-set bitmask sized to one hypergraph.
#[derive(Clone, PartialEq, Eq)]
struct EdgeMask(Vec<u64>);

impl EdgeMask {
    fn empty(edges: usize) -> EdgeMask {
        EdgeMask(vec![0; edges.div_ceil(64)])
    }

    fn full(edges: usize) -> EdgeMask {
        let mut mask = EdgeMask::empty(edges);
        for e in 0..edges {
            mask.set(e);
        }
        mask
    }

    fn set(&mut self, e: usize) {
        self.0[e / 64] |= 1u64 << (e % 64);
    }

    /// `self = a | b`
    fn assign_union(&mut self, a: &EdgeMask, b: &EdgeMask) {
        for ((out, &x), &y) in self.0.iter_mut().zip(&a.0).zip(&b.0) {
            *out = x | y;
        }
    }
}

/// Exact `lambda(G, p, b)`: the least family size of a system for `graph` at
/// level `p` with `b` buckets, searched for `x = 1..=x_max`.
///
/// The certificate is the lexicographically least covering tuple in growth
/// string order. `exhausted` is only set after complete enumeration, so it
/// is a proof that no family of size `x_max` covers; running out of the
/// advisory time budget is reported as an error instead.
pub fn lambda_exact(
    graph: &Hypergraph,
    p: usize,
    b: usize,
    budget: SearchBudget,
) -> Result<LambdaResult, Error> {
    if b == 0 || p == 0 {
        return Err(Error::InvalidParameter(format!("p = {p} and b = {b} must be >= 1")));
    }
    if budget.x_max < 1 || budget.function_cap < 1 {
        return Err(Error::InvalidParameter(
            "x_max and function_cap must be >= 1".into(),
        ));
    }
    let edge_count = graph.edge_count();
    if edge_count == 0 {
        // every family, including the empty one, covers vacuously
        return Ok(LambdaResult {
            certificate: Some(HashFamily::new(graph.n(), b, vec![])?),
            exhausted: false,
            functions_enumerated: 0,
            value: Some(0),
        });
    }

    let mut functions = Vec::new();
    for h in canonical_functions(graph.n(), b) {
        if functions.len() == budget.function_cap {
            return Err(Error::FunctionCapExceeded { cap: budget.function_cap });
        }
        functions.push(h);
    }

    let masks: Vec<EdgeMask> = functions
        .iter()
        .map(|h| {
            let mut mask = EdgeMask::empty(edge_count);
            for (e, edge) in graph.edges().iter().enumerate() {
                if h.covers_unchecked(edge, p) {
                    mask.set(e);
                }
            }
            mask
        })
        .collect();
    let full = EdgeMask::full(edge_count);

    let deadline = budget.time_hint.map(|d| Instant::now() + d);
    for x in 1..=budget.x_max {
        if let Some(indices) = search_level(&masks, &full, x, deadline) {
            let chosen = indices.iter().map(|&i| functions[i].clone()).collect();
            let family = HashFamily::new(graph.n(), b, chosen)?;
            debug_assert!(family.covers(graph, p)?.is_covering());
            return Ok(LambdaResult {
                certificate: Some(family),
                exhausted: false,
                functions_enumerated: functions.len(),
                value: Some(x),
            });
        }
        if let Some(deadline) = deadline {
            if Instant::now() > deadline {
                // the level-x search may have been cut short, so only the
                // previous levels are known to be fully enumerated
                return Err(Error::TimeBudgetExhausted { completed: x - 1 });
            }
        }
    }

    Ok(LambdaResult {
        certificate: None,
        exhausted: true,
        functions_enumerated: functions.len(),
        value: None,
    })
}

/// Depth-first search over non-decreasing index tuples of length `x`,
/// returning the first (lexicographically least) covering tuple.
/// `unions[d]` holds the coverage union of the first `d` chosen functions.
fn search_level(
    masks: &[EdgeMask],
    full: &EdgeMask,
    x: usize,
    deadline: Option<Instant>,
) -> Option<Vec<usize>> {
    let mut search = LevelSearch {
        masks,
        full,
        x,
        deadline,
        ticks: 0,
        unions: vec![EdgeMask(vec![0; full.0.len()]); x + 1],
        tuple: Vec::with_capacity(x),
    };
    search.dfs(0)
}

struct LevelSearch<'a> {
    masks: &'a [EdgeMask],
    full: &'a EdgeMask,
    x: usize,
    deadline: Option<Instant>,
    ticks: u32,
    unions: Vec<EdgeMask>,
    tuple: Vec<usize>,
}

impl LevelSearch<'_> {
    fn dfs(&mut self, start: usize) -> Option<Vec<usize>> {
        let depth = self.tuple.len();
        if depth == self.x {
            return (&self.unions[depth] == self.full).then(|| self.tuple.clone());
        }
        for i in start..self.masks.len() {
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks.is_multiple_of(8192) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() > deadline {
                        return None;
                    }
                }
            }
            let (acc, rest) = self.unions.split_at_mut(depth + 1);
            rest[0].assign_union(&acc[depth], &self.masks[i]);
            self.tuple.push(i);
            if let Some(found) = self.dfs(i) {
                return Some(found);
            }
            self.tuple.pop();
        }
        None
    }
}

/// True iff no single function `[n] -> [b]` is partially p-perfect on every
/// edge, i.e. `lambda(G, p, b) >= 2`.
///
/// For hypergraphs flagged as complete k-uniform with `k >= p`, a function
/// covers every edge exactly when its `p-1` most-loaded buckets hold fewer
/// than `k` vertices, so the per-function work drops to a bucket-count check
/// and whole subtrees of the enumeration can be pruned once the top load is
/// already too large.
pub fn no_single_function_system(
    graph: &Hypergraph,
    p: usize,
    b: usize,
    function_cap: usize,
) -> Result<bool, Error> {
    if b == 0 || p == 0 {
        return Err(Error::InvalidParameter(format!("p = {p} and b = {b} must be >= 1")));
    }
    if graph.edge_count() == 0 {
        return Ok(false);
    }
    if let Some(k) = graph.complete_uniform() {
        if k >= p {
            return no_single_function_complete_uniform(graph.n(), k, p, b, function_cap);
        }
    }

    for (i, h) in canonical_functions(graph.n(), b).enumerate() {
        if i == function_cap {
            return Err(Error::FunctionCapExceeded { cap: function_cap });
        }
        if graph.edges().iter().all(|edge| h.covers_unchecked(edge, p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counterexample search over canonical functions by bucket counts only:
/// find any function whose `p-1` heaviest buckets hold fewer than `k`
/// vertices. Loads only grow along a branch, so a branch whose top load has
/// already reached `k` cannot contain a counterexample. `function_cap`
/// bounds the number of enumeration steps.
fn no_single_function_complete_uniform(
    n: usize,
    k: usize,
    p: usize,
    b: usize,
    function_cap: usize,
) -> Result<bool, Error> {
    struct State {
        counts: Vec<usize>,
        assigned: usize,
        work: usize,
        cap: usize,
        k: usize,
        top: usize,
    }

    fn top_load(state: &State) -> usize {
        let counts = &state.counts;
        if state.top >= counts.len() {
            return state.assigned;
        }
        if state.top + 1 == counts.len() {
            // all buckets except the lightest one
            return state.assigned - counts.iter().min().copied().unwrap_or(0);
        }
        let mut heaviest = vec![0usize; state.top];
        for &c in counts {
            // insertion into a descending top list
            let mut c = c;
            for slot in heaviest.iter_mut() {
                if c > *slot {
                    std::mem::swap(&mut c, slot);
                }
            }
        }
        heaviest.iter().sum()
    }

    // returns Ok(true) when some completion has top load < k
    fn explore(state: &mut State, remaining: usize, used: usize, b: usize) -> Result<bool, Error> {
        state.work += 1;
        if state.work > state.cap {
            return Err(Error::FunctionCapExceeded { cap: state.cap });
        }
        if top_load(state) >= state.k {
            return Ok(false);
        }
        if remaining == 0 {
            return Ok(true);
        }
        for label in 0..used.min(b) + usize::from(used < b) {
            state.counts[label] += 1;
            state.assigned += 1;
            let hit = explore(state, remaining - 1, used.max(label + 1), b)?;
            state.counts[label] -= 1;
            state.assigned -= 1;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let mut state = State {
        counts: vec![0; b],
        assigned: 0,
        work: 0,
        cap: function_cap,
        k,
        top: p - 1,
    };
    let found_counterexample = explore(&mut state, n, 0, b)?;
    Ok(!found_counterexample)
}
