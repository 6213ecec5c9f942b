//! Constructions of covering hash families.
//!
//! Three deterministic builders (a greedy two-bucket rule for 2-intersecting
//! graphs and two minimal-edge constructions for 1-intersecting graphs), a
//! Las-Vegas randomized builder driven by the union-bound family size, and
//! the pigeonhole certificate that rules out single-function systems on
//! complete uniform witnesses.

use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::union_bound_value;
use crate::error::Error;
use crate::family::{HashFamily, HashFunction, SystemReport};
use crate::hypergraph::Hypergraph;

/// Default Las-Vegas retry budget.
pub const DEFAULT_MAX_ATTEMPTS: usize = 1000;

/// Seed for a deterministic generator; equal seeds give equal outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSeed(pub u64);

impl RandomSeed {
    pub(crate) fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// A family together with the coverage report that certifies it.
#[derive(Debug, Clone)]
pub struct CertifiedSystem {
    pub family: HashFamily,
    pub report: SystemReport,
}

/// Output of the Las-Vegas constructor.
#[derive(Debug, Clone)]
pub struct RandomizedSystem {
    pub family: HashFamily,
    pub report: SystemReport,
    /// Number of sampling rounds used, counting the accepted one.
    pub attempts: usize,
}

/// [`greedy_two_bucket_with_order`] with the default ascending vertex order.
pub fn greedy_two_bucket(graph: &Hypergraph) -> Result<HashFunction, Error> {
    let order: Vec<usize> = (1..=graph.n()).collect();
    greedy_two_bucket_with_order(graph, &order)
}

/// Greedy two-bucket assignment in the given vertex order.
///
/// Each vertex takes bucket 1 unless doing so would complete some edge as
/// all-bucket-1 (every other vertex of the edge already assigned bucket 1),
/// in which case it takes bucket 2. Unassigned vertices never block, and
/// singleton edges never block (they are monochromatic regardless).
///
/// On a 2-intersecting hypergraph the result is partially 2-perfect on every
/// edge: a fully bucket-2 edge would need a last vertex forced to 2 by some
/// other edge that is all-1 elsewhere, and those two edges share two
/// vertices, one of which would have to be both 1 and 2.
pub fn greedy_two_bucket_with_order(
    graph: &Hypergraph,
    order: &[usize],
) -> Result<HashFunction, Error> {
    let n = graph.n();
    let mut seen = vec![false; n];
    if order.len() != n
        || !order
            .iter()
            .all(|&v| v >= 1 && v <= n && !std::mem::replace(&mut seen[v - 1], true))
    {
        return Err(Error::InvalidPermutation { n });
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, edge) in graph.edges().iter().enumerate() {
        for &v in edge {
            incident[v - 1].push(ei);
        }
    }

    let mut assigned = vec![0usize; graph.edge_count()];
    let mut ones = vec![0usize; graph.edge_count()];
    let mut values = vec![0usize; n];
    for &v in order {
        let blocked = incident[v - 1].iter().any(|&ei| {
            let len = graph.edges()[ei].len();
            len >= 2 && assigned[ei] == len - 1 && ones[ei] == len - 1
        });
        let bucket = if blocked { 2 } else { 1 };
        values[v - 1] = bucket;
        for &ei in &incident[v - 1] {
            assigned[ei] += 1;
            if bucket == 1 {
                ones[ei] += 1;
            }
        }
    }
    HashFunction::new(2, values)
}

/// Two-bucket family built around a subset-minimal edge `e`: one function
/// sends `e` to bucket 1 and the rest to bucket 2 (covering every other edge
/// of a 1-intersecting graph), and a second splits `e` itself. Whichever of
/// the two is redundant is dropped, so the family has size <= 2.
pub fn minimal_edge_family_b2(graph: &Hypergraph) -> Result<CertifiedSystem, Error> {
    let e = graph.minimal_edge()?;
    let edge = &graph.edges()[e];
    let n = graph.n();

    let mut indicator = vec![2usize; n];
    for &v in edge {
        indicator[v - 1] = 1;
    }
    let indicator = HashFunction::new(2, indicator)?;

    let mut functions = Vec::new();
    if graph.edge_count() > 1 || edge.len() == 1 {
        functions.push(indicator);
    }
    if edge.len() >= 2 {
        // split e: its smallest vertex keeps bucket 1, everything else gets 2
        let mut split = vec![2usize; n];
        split[edge[0] - 1] = 1;
        functions.push(HashFunction::new(2, split)?);
    }

    let family = HashFamily::new(n, 2, functions)?;
    let report = family.covers(graph, 2)?;
    Ok(CertifiedSystem { family, report })
}

/// Single three-bucket function built around a subset-minimal edge `e`: the
/// smallest vertex of `e` gets bucket 1, the rest of `e` bucket 2, and every
/// vertex outside `e` bucket 3. On a 1-intersecting graph every other edge
/// meets `e` and leaves it, so each edge attains two buckets.
pub fn minimal_edge_function_b3(graph: &Hypergraph) -> Result<CertifiedSystem, Error> {
    let e = graph.minimal_edge()?;
    let edge = &graph.edges()[e];

    let mut values = vec![3usize; graph.n()];
    for &v in edge {
        values[v - 1] = 2;
    }
    values[edge[0] - 1] = 1;

    let family = HashFamily::new(graph.n(), 3, vec![HashFunction::new(3, values)?])?;
    let report = family.covers(graph, 2)?;
    Ok(CertifiedSystem { family, report })
}

/// Smallest `x >= 1` with `C(b, p-1) * ((p-1)/b)^(t*x) < 1`, evaluated in
/// exact rational arithmetic.
///
/// Requires `p >= 2`, `t >= 1`, `b >= p` and `b > (p-1)(t+1)` — the last
/// condition keeps the bias `(p-1)/b` below `1/(t+1)`, which is what the
/// probabilistic size guarantee rests on. Outside that range an error is
/// returned.
pub fn min_random_family_size(t: usize, p: usize, b: usize) -> Result<usize, Error> {
    if p < 2 || t < 1 {
        return Err(Error::BoundNotApplicable { t, p, b, requirement: "p >= 2 and t >= 1" });
    }
    if b < p {
        return Err(Error::BoundNotApplicable { t, p, b, requirement: "b >= p" });
    }
    if b <= (p - 1) * (t + 1) {
        return Err(Error::BoundNotApplicable { t, p, b, requirement: "b > (p-1)(t+1)" });
    }
    let one = num_rational::BigRational::one();
    let mut x = 1;
    loop {
        if union_bound_value(t, p, b, x)? < one {
            return Ok(x);
        }
        x += 1;
        // (p-1)/b < 1 here, so the value is strictly decreasing in x
        debug_assert!(x < 1_000_000);
    }
}

/// Las-Vegas construction: samples `x` independent uniform functions
/// `[n] -> [b]` per attempt and accepts the first family whose coverage
/// report at level `p` is clean. Deterministic for a given seed.
pub fn randomized_system(
    graph: &Hypergraph,
    p: usize,
    b: usize,
    x: usize,
    seed: RandomSeed,
    max_attempts: usize,
) -> Result<RandomizedSystem, Error> {
    if x < 1 || max_attempts < 1 {
        return Err(Error::InvalidParameter(format!(
            "x = {x} and max_attempts = {max_attempts} must be >= 1"
        )));
    }
    if b < p || b < 1 {
        return Err(Error::InvalidParameter(format!("b = {b} must be >= p = {p} and >= 1")));
    }

    let n = graph.n();
    let mut rng = seed.rng();
    let mut last_report = None;
    for attempt in 1..=max_attempts {
        let functions = (0..x)
            .map(|_| {
                let values = (0..n).map(|_| rng.random_range(1..=b)).collect();
                HashFunction::new(b, values)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let family = HashFamily::new(n, b, functions)?;
        let report = family.covers(graph, p)?;
        if report.is_covering() {
            return Ok(RandomizedSystem { family, report, attempts: attempt });
        }
        last_report = Some(report);
    }
    Err(Error::AttemptsExhausted {
        attempts: max_attempts,
        last_report: Box::new(last_report.expect("max_attempts >= 1")),
    })
}

/// Minimum, over all functions `[n] -> [b]`, of the total load of the `j`
/// most-loaded buckets. Attained by the balanced function, which every other
/// bucket-count vector majorizes.
pub fn min_top_bucket_load(n: usize, b: usize, j: usize) -> usize {
    if b == 0 || j >= b {
        return n;
    }
    let quotient = n / b;
    let remainder = n % b;
    if j <= remainder {
        j * (quotient + 1)
    } else {
        remainder * (quotient + 1) + (j - remainder) * quotient
    }
}

/// Pigeonhole certificate that the complete k-uniform hypergraph on `n`
/// vertices admits no single-function system at level `p` with `b` buckets,
/// i.e. that its minimum system size is at least 2.
///
/// True iff `k >= p` and every function `[n] -> [b]` packs at least `k`
/// vertices into its `p-1` most-loaded buckets — those vertices then contain
/// an edge attaining at most `p-1 < p` buckets.
pub fn pigeonhole_witness_check(n: usize, k: usize, p: usize, b: usize) -> bool {
    k >= p && min_top_bucket_load(n, b, p - 1) >= k
}
