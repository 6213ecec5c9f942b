//! Hypergraphs over a ground set `[1, n]`.
//!
//! Edges are stored as sorted lists of distinct 1-based vertex ids, so set
//! operations reduce to merges and iteration order is deterministic. The text
//! format (`"n m"` header, one edge per line, `#` comments) lives here too.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind};

/// Default limit on generated edge counts for [`witness_complete_uniform`].
pub const DEFAULT_EDGE_CAP: u128 = 1_000_000;

/// A hypergraph: `n` vertices with ids `1..=n` and an ordered list of edges.
///
/// Invariants enforced at construction: every vertex id lies in `[1, n]`,
/// no edge is empty, and no two edges are equal as sets.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    /// Set by the complete-uniform generator only; carries the edge size k.
    /// Advisory metadata for the solver's fast path, not part of equality.
    complete_uniform: Option<usize>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

/// Minimum pairwise edge intersection size, or `Unbounded` when the
/// hypergraph has fewer than two edges (vacuously t-intersecting for all t).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionLevel {
    Unbounded,
    Finite(usize),
}

impl IntersectionLevel {
    pub fn at_least(self, t: usize) -> bool {
        match self {
            IntersectionLevel::Unbounded => true,
            IntersectionLevel::Finite(level) => level >= t,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph, normalizing each edge to sorted order.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            for &v in &edge {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { index, v: w[0] });
            }
            if !seen.insert(edge.clone()) {
                return Err(Error::DuplicateEdge { index });
            }
            normalized.push(edge);
        }
        Ok(Hypergraph {
            n,
            edges: normalized,
            complete_uniform: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `Some(k)` when this value was produced by [`witness_complete_uniform`].
    pub fn complete_uniform(&self) -> Option<usize> {
        self.complete_uniform
    }

    /// Parses the text format: a header line `"n m"`, then `m` edge lines of
    /// space-separated vertex ids. Lines starting with `#` and blank lines
    /// are skipped. Errors carry the 1-based physical line number.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut content = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line))
            .filter(|(_, line)| {
                let t = line.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });

        let (header_line, header) = content
            .next()
            .ok_or(ParseError { line: 1, kind: ParseErrorKind::MalformedHeader })?;
        let mut fields = header.split_whitespace();
        let n = parse_header_int(fields.next(), header_line)?;
        let m = parse_header_int(fields.next(), header_line)?;
        if fields.next().is_some() {
            return Err(ParseError { line: header_line, kind: ParseErrorKind::MalformedHeader }.into());
        }

        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m.min(1024));
        let mut first_seen: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
        let mut last_line = header_line;
        for (line, raw) in content {
            if edges.len() == m {
                return Err(ParseError { line, kind: ParseErrorKind::TrailingContent { expected: m } }.into());
            }
            let mut edge = Vec::new();
            for token in raw.split_whitespace() {
                let v: usize = token.parse().map_err(|_| ParseError {
                    line,
                    kind: ParseErrorKind::BadInteger { token: token.to_string() },
                })?;
                if v == 0 || v > n {
                    return Err(ParseError { line, kind: ParseErrorKind::VertexOutOfRange { v, n } }.into());
                }
                edge.push(v);
            }
            if edge.is_empty() {
                return Err(ParseError { line, kind: ParseErrorKind::EmptyEdge }.into());
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(ParseError { line, kind: ParseErrorKind::RepeatedVertex { v: w[0] } }.into());
            }
            if let Some(&first_line) = first_seen.get(&edge) {
                return Err(ParseError { line, kind: ParseErrorKind::DuplicateEdge { first_line } }.into());
            }
            first_seen.insert(edge.clone(), line);
            edges.push(edge);
            last_line = line;
        }
        if edges.len() < m {
            return Err(ParseError {
                line: last_line,
                kind: ParseErrorKind::MissingEdges { expected: m, found: edges.len() },
            }
            .into());
        }

        Ok(Hypergraph { n, edges, complete_uniform: None })
    }

    /// Serializes to the text format parsed by [`Hypergraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for edge in &self.edges {
            let ids: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", ids.join(" "));
        }
        out
    }

    /// Minimum of `|e ∩ e'|` over all unordered edge pairs.
    pub fn intersection_level(&self) -> IntersectionLevel {
        if self.edges.len() < 2 {
            return IntersectionLevel::Unbounded;
        }
        let mut min = usize::MAX;
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                let shared = sorted_intersection_size(a, b);
                if shared < min {
                    min = shared;
                    if min == 0 {
                        return IntersectionLevel::Finite(0);
                    }
                }
            }
        }
        IntersectionLevel::Finite(min)
    }

    /// True iff every pair of edges shares at least `t` vertices.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        self.intersection_level().at_least(t)
    }

    /// Adds a fresh vertex `n+1` to the ground set and to every edge. Raises
    /// the intersection level by exactly one when the graph has >= 2 edges.
    pub fn with_universal_vertex(&self) -> Hypergraph {
        let v = self.n + 1;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.push(v);
                e
            })
            .collect();
        Hypergraph { n: v, edges, complete_uniform: None }
    }

    /// Index of the first edge that has no other edge as a strict subset.
    pub fn minimal_edge(&self) -> Result<usize, Error> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        'candidate: for (i, e) in self.edges.iter().enumerate() {
            for (j, other) in self.edges.iter().enumerate() {
                if i != j && is_strict_subset(other, e) {
                    continue 'candidate;
                }
            }
            return Ok(i);
        }
        unreachable!("a minimum-size edge always qualifies")
    }
}

fn parse_header_int(token: Option<&str>, line: usize) -> Result<usize, ParseError> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError { line, kind: ParseErrorKind::MalformedHeader })
}

/// `|a ∩ b|` for sorted slices.
pub(crate) fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && sorted_intersection_size(a, b) == a.len()
}

/// The 1-intersecting triangle `{{1,2},{2,3},{1,3}}` on three vertices.
pub fn witness_triangle() -> Hypergraph {
    Hypergraph::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).expect("triangle is valid")
}

/// All k-subsets of `[1, n]` as edges, in lexicographic order.
///
/// With at least two edges the intersection level is `max(2k - n, 0)`.
/// Fails when `C(n, k)` exceeds [`DEFAULT_EDGE_CAP`].
pub fn witness_complete_uniform(k: usize, n: usize) -> Result<Hypergraph, Error> {
    witness_complete_uniform_capped(k, n, DEFAULT_EDGE_CAP)
}

/// [`witness_complete_uniform`] with an explicit edge-count cap.
pub fn witness_complete_uniform_capped(k: usize, n: usize, cap: u128) -> Result<Hypergraph, Error> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "edge size k = {k} must satisfy 1 <= k <= n = {n}"
        )));
    }
    let count = binomial_u128(n, k).ok_or(Error::EdgeCapExceeded {
        n,
        k,
        count: u128::MAX,
        cap,
    })?;
    if count > cap {
        return Err(Error::EdgeCapExceeded { n, k, count, cap });
    }

    let mut edges = Vec::with_capacity(count as usize);
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        edges.push(current.clone());
        // advance to the next k-combination of [1, n]
        let mut i = k;
        while i > 0 && current[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
        for j in i..k {
            current[j] = current[j - 1] + 1;
        }
    }

    Ok(Hypergraph { n, edges, complete_uniform: Some(k) })
}

/// `C(n, k)` without overflow, or `None` when it exceeds `u128`.
pub(crate) fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.checked_mul((n - i) as u128)?;
        result /= (i + 1) as u128;
    }
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = Hypergraph::parse("3 3\n1 2\n2 3\n1 3").unwrap();
        assert_eq!(g, witness_triangle());
        assert_eq!(g.intersection_level(), IntersectionLevel::Finite(1));
    }

    #[test]
    fn parse_smallest_input() {
        let g = Hypergraph::parse("1 1\n1").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edges(), &[vec![1]]);
        assert_eq!(g.intersection_level(), IntersectionLevel::Unbounded);
    }

    #[test]
    fn parse_round_trip_preserves_edge_order() {
        let text = "4 3\n1 2 3\n2 3 4\n1 2 4";
        let g = Hypergraph::parse(text).unwrap();
        let again = Hypergraph::parse(&g.to_text()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.edges()[1], vec![2, 3, 4]);
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = Hypergraph::parse("# triangle\n\n3 3\n1 2\n# middle\n2 3\n1 3\n").unwrap();
        assert_eq!(g, witness_triangle());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = |text: &str| match Hypergraph::parse(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        };

        assert_eq!(err("x y\n").line, 1);
        assert!(matches!(err("nope\n").kind, ParseErrorKind::MalformedHeader));
        let e = err("3 2\n1 2\n1 5\n");
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::VertexOutOfRange { v: 5, n: 3 }));
        let e = err("3 2\n1 2\n2 1\n");
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::DuplicateEdge { first_line: 2 }));
        let e = err("3 2\n1 2\n");
        assert!(matches!(e.kind, ParseErrorKind::MissingEdges { expected: 2, found: 1 }));
        let e = err("3 1\n1 2\n3\n");
        assert!(matches!(e.kind, ParseErrorKind::TrailingContent { expected: 1 }));
        let e = err("3 1\n1 1 2\n");
        assert!(matches!(e.kind, ParseErrorKind::RepeatedVertex { v: 1 }));
    }

    #[test]
    fn intersection_level_examples() {
        assert_eq!(witness_triangle().intersection_level(), IntersectionLevel::Finite(1));
        let g = Hypergraph::new(4, vec![vec![1, 2, 3], vec![2, 3, 4], vec![1, 2, 4]]).unwrap();
        assert_eq!(g.intersection_level(), IntersectionLevel::Finite(2));
        let single = Hypergraph::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(single.intersection_level(), IntersectionLevel::Unbounded);
    }

    #[test]
    fn t_intersecting_examples() {
        let triangle = witness_triangle();
        assert!(triangle.is_t_intersecting(1));
        assert!(!triangle.is_t_intersecting(2));
        assert!(triangle.is_t_intersecting(0));
        let single = Hypergraph::new(2, vec![vec![1, 2]]).unwrap();
        assert!(single.is_t_intersecting(100));
    }

    #[test]
    fn universal_vertex_examples() {
        let g = witness_triangle().with_universal_vertex();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[vec![1, 2, 4], vec![2, 3, 4], vec![1, 3, 4]]);
        assert_eq!(g.intersection_level(), IntersectionLevel::Finite(2));

        let single = Hypergraph::new(1, vec![vec![1]]).unwrap().with_universal_vertex();
        assert_eq!(single.edges(), &[vec![1, 2]]);

        let empty = Hypergraph::new(2, vec![]).unwrap().with_universal_vertex();
        assert_eq!(empty.n(), 3);
        assert!(empty.edges().is_empty());
    }

    #[test]
    fn minimal_edge_examples() {
        let g = Hypergraph::new(3, vec![vec![1, 2, 3], vec![1, 2]]).unwrap();
        assert_eq!(g.minimal_edge().unwrap(), 1);
        assert_eq!(witness_triangle().minimal_edge().unwrap(), 0);
        let single = Hypergraph::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(single.minimal_edge().unwrap(), 0);
        let empty = Hypergraph::new(2, vec![]).unwrap();
        assert!(matches!(empty.minimal_edge(), Err(Error::NoEdges)));
    }

    #[test]
    fn complete_uniform_witnesses() {
        let g = witness_complete_uniform(4, 6).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.intersection_level(), IntersectionLevel::Finite(2));
        assert_eq!(g.complete_uniform(), Some(4));

        let full = witness_complete_uniform(5, 5).unwrap();
        assert_eq!(full.edges(), &[vec![1, 2, 3, 4, 5]]);

        let big = witness_complete_uniform(9, 15).unwrap();
        assert_eq!(big.edge_count(), 5005);
        assert_eq!(big.intersection_level(), IntersectionLevel::Finite(3));
    }

    #[test]
    fn complete_uniform_cap() {
        let err = witness_complete_uniform_capped(9, 15, 5000).unwrap_err();
        assert!(matches!(err, Error::EdgeCapExceeded { count: 5005, .. }));
    }

    #[test]
    fn complete_uniform_flag_does_not_survive_reparse() {
        let g = witness_complete_uniform(2, 3).unwrap();
        let reparsed = Hypergraph::parse(&g.to_text()).unwrap();
        assert_eq!(g, reparsed);
        assert_eq!(reparsed.complete_uniform(), None);
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, vec![vec![]]),
            Err(Error::EmptyEdge { index: 0 })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![1, 4]]),
            Err(Error::VertexOutOfRange { v: 4, n: 3 })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![1, 2], vec![2, 1]]),
            Err(Error::DuplicateEdge { index: 1 })
        ));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_u128(6, 4), Some(15));
        assert_eq!(binomial_u128(15, 9), Some(5005));
        assert_eq!(binomial_u128(4, 7), Some(0));
        assert_eq!(binomial_u128(0, 0), Some(1));
    }
}
