//! Shared generators and independent oracles for the integration suites.
//!
//! Everything here deliberately avoids the library's own search and coverage
//! code paths so it can serve as a second opinion.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use pphf::{HashFamily, Hypergraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random hypergraph with up to `max_edges` distinct non-empty edges.
pub fn random_hypergraph(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_edges: usize,
    max_edge_size: usize,
) -> Hypergraph {
    let n = rng.random_range(1..=max_n);
    let want = rng.random_range(1..=max_edges);
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for _ in 0..want * 4 {
        if edges.len() == want {
            break;
        }
        let size = rng.random_range(1..=max_edge_size.min(n));
        let mut edge: BTreeSet<usize> = BTreeSet::new();
        while edge.len() < size {
            edge.insert(rng.random_range(1..=n));
        }
        edges.insert(edge.into_iter().collect());
    }
    Hypergraph::new(n, edges.into_iter().collect()).expect("generated edges are valid")
}

/// A t-intersecting hypergraph built around a shared kernel of `t` vertices.
pub fn random_kernel_intersecting(
    rng: &mut ChaCha8Rng,
    t: usize,
    max_n: usize,
    max_edges: usize,
) -> Hypergraph {
    assert!(t >= 1 && max_n > t);
    let n = rng.random_range((t + 1)..=max_n);
    let mut ids: Vec<usize> = (1..=n).collect();
    ids.shuffle(rng);
    let kernel: BTreeSet<usize> = ids[..t].iter().copied().collect();
    let rest = &ids[t..];

    let want = rng.random_range(1..=max_edges);
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for _ in 0..want * 4 {
        if edges.len() == want {
            break;
        }
        let mut edge = kernel.clone();
        for &v in rest {
            if rng.random::<f64>() < 0.4 {
                edge.insert(v);
            }
        }
        edges.insert(edge.into_iter().collect());
    }
    let g = Hypergraph::new(n, edges.into_iter().collect()).expect("kernel edges are valid");
    debug_assert!(g.is_t_intersecting(t));
    g
}

/// A suite of t-intersecting graphs: kernel-built ones plus rejection-sampled
/// general ones for diversity. Every returned graph is verified.
pub fn t_intersecting_suite(
    seed: u64,
    t: usize,
    count: usize,
    max_n: usize,
    max_edges: usize,
) -> Vec<Hypergraph> {
    let mut rng = rng(seed);
    let mut suite = Vec::with_capacity(count);
    // rejection-sampled general graphs first, kernel-based to fill up
    let mut tries = 0;
    while suite.len() < count / 3 && tries < count * 200 {
        tries += 1;
        let g = random_hypergraph(&mut rng, max_n, max_edges, max_n);
        if g.edge_count() >= 2 && g.is_t_intersecting(t) {
            suite.push(g);
        }
    }
    while suite.len() < count {
        suite.push(random_kernel_intersecting(&mut rng, t, max_n, max_edges));
    }
    assert!(suite.iter().all(|g| g.is_t_intersecting(t)));
    suite
}

/// Distinct-bucket coverage check written from the definition, independent of
/// `HashFamily::covers`.
pub fn covers_by_definition(family: &HashFamily, graph: &Hypergraph, p: usize) -> bool {
    graph.edges().iter().all(|edge| {
        family.functions().iter().any(|h| {
            let distinct: BTreeSet<usize> = edge.iter().map(|&v| h.values()[v - 1]).collect();
            distinct.len() >= p.min(edge.len())
        })
    })
}

/// `sum_{j=1..b} S(n, j)` by the Stirling recurrence
/// `S(n, j) = j S(n-1, j) + S(n-1, j-1)`.
pub fn stirling_sum(n: usize, b: usize) -> u64 {
    let mut row = vec![0u64; b + 1];
    // row for n = 0: S(0, 0) = 1
    let mut prev = vec![0u64; b + 1];
    prev[0] = 1;
    for _ in 1..=n {
        for j in (1..=b).rev() {
            row[j] = (j as u64) * prev[j] + prev[j - 1];
        }
        row[0] = 0;
        prev.copy_from_slice(&row);
    }
    prev[1..=b].iter().sum()
}

/// Minimum system size by brute force over all b^n functions, or `None`
/// when no family of size <= x_max covers. Coverage is checked from the
/// definition.
pub fn naive_lambda(graph: &Hypergraph, p: usize, b: usize, x_max: usize) -> Option<usize> {
    let n = graph.n();
    let total = (b as u64).checked_pow(n as u32).expect("naive search too large");
    let functions: Vec<Vec<usize>> = (0..total)
        .map(|code| {
            let mut code = code;
            (0..n)
                .map(|_| {
                    let v = (code % b as u64) as usize + 1;
                    code /= b as u64;
                    v
                })
                .collect()
        })
        .collect();

    let edge_ok = |values: &[usize], edge: &[usize]| {
        let distinct: BTreeSet<usize> = edge.iter().map(|&v| values[v - 1]).collect();
        distinct.len() >= p.min(edge.len())
    };
    let covers = |family: &[usize]| {
        graph.edges().iter().all(|edge| {
            family.iter().any(|&i| edge_ok(&functions[i], edge))
        })
    };

    if graph.edge_count() == 0 {
        return Some(0);
    }
    for x in 1..=x_max {
        let mut stack = vec![0usize; x];
        if tuples_non_decreasing(functions.len(), x, &mut stack, &covers) {
            return Some(x);
        }
    }
    None
}

fn tuples_non_decreasing(
    count: usize,
    x: usize,
    tuple: &mut Vec<usize>,
    covers: &impl Fn(&[usize]) -> bool,
) -> bool {
    fn rec(count: usize, x: usize, start: usize, tuple: &mut Vec<usize>, covers: &impl Fn(&[usize]) -> bool) -> bool {
        if tuple.len() == x {
            return covers(tuple);
        }
        for i in start..count {
            tuple.push(i);
            if rec(count, x, i, tuple, covers) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    tuple.clear();
    rec(count, x, 0, tuple, covers)
}

/// All partitions of `n` into at most `b` positive parts, descending.
pub fn partitions_at_most(n: usize, b: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, b: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(current.clone());
            return;
        }
        if b == 0 {
            return;
        }
        for part in (1..=max_part.min(n)).rev() {
            current.push(part);
            rec(n - part, b - 1, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, b, n, &mut Vec::new(), &mut out);
    out
}

/// Minimum over all bucket-count vectors of the top-`j` load, by partition
/// enumeration — the oracle for `min_top_bucket_load`.
pub fn min_top_load_by_enumeration(n: usize, b: usize, j: usize) -> usize {
    partitions_at_most(n, b)
        .iter()
        .map(|parts| parts.iter().take(j).sum())
        .min()
        .expect("at least one partition exists")
}

/// Containment probability via the up-closure: mark every superset of every
/// edge, then sum the biased measure over marked subsets. A second route,
/// independent of scanning each subset for a contained edge.
pub fn containment_via_up_closure(graph: &Hypergraph, prob: f64) -> f64 {
    let n = graph.n();
    assert!(n <= 20);
    let mut in_closure = vec![false; 1 << n];
    for edge in graph.edges() {
        let em: u32 = edge.iter().fold(0, |m, &v| m | (1 << (v - 1)));
        let complement = !em & ((1u32 << n) - 1);
        // iterate all submasks of the complement
        let mut sub = complement;
        loop {
            in_closure[(em | sub) as usize] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & complement;
        }
    }
    let mut total = 0.0;
    for (mask, &hit) in in_closure.iter().enumerate() {
        if hit {
            let inside = (mask as u32).count_ones() as i32;
            total += prob.powi(inside) * (1.0 - prob).powi(n as i32 - inside);
        }
    }
    total
}
